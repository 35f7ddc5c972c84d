#pragma once

/**
 * @file corpus.hpp
 * @brief Extremal functions and certified random corpora.
 *
 * Unit-ball entries satisfy |f| <= 1 on the ball, half-space entries satisfy
 * Re f <= 1. Every generated entry is checked against its certificate before
 * it is handed out; see certify().
 */

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "octobohr/functionals.hpp"
#include "octobohr/slice_series.hpp"
#include "octobohr/theorems.hpp"

namespace octobohr {

struct Provenance {
    std::string tag;
    std::map<std::string, double> params;
    std::uint64_t seed = 0;
    std::uint64_t index = 0;

    bool operator==(Provenance const&) const = default;
};

struct CorpusEntry {
    SliceSeries series;
    Certificate certificate = Certificate::unit_ball;
    Provenance provenance;
};

/// Default truncation order: 0.9^301 / 0.1 < 1e-12.
inline constexpr std::size_t default_order = 300;

namespace detail {

inline void require_unit(Octonion const& u) {
    if (std::abs(u.norm() - 1.0) > 1e-12) throw std::domain_error("u must have modulus 1");
}

inline void require_a(double a) {
    if (!(a >= 0.0 && a < 1.0)) throw std::domain_error("a must lie in [0, 1)");
}

}  // namespace detail

/// f_a = (1 - x a)^{-.} * (a - x) u: a0 = a u, a_k = -(1 - a^2) a^{k-1} u.
inline SliceSeries make_f_a(double a, Octonion const& u, std::size_t order = default_order) {
    detail::require_a(a);
    detail::require_unit(u);
    std::vector<Octonion> c(order + 1);
    c[0] = u * a;
    double w = 1.0 - a * a;
    double ak = 1.0;  // a^{k-1}
    for (std::size_t k = 1; k <= order; ++k) {
        c[k] = u * (-w * ak);
        ak *= a;
    }
    return SliceSeries{std::move(c), w * ak};
}

/// Same function assembled from the slice reciprocal of 1 - x a and a slice product.
inline SliceSeries make_f_a_via_reciprocal(double a, Octonion const& u, std::size_t order = default_order) {
    detail::require_a(a);
    detail::require_unit(u);
    auto denom = SliceSeries::real({1.0, -a});
    auto numer = SliceSeries{std::vector<Octonion>{u * a, -u}};
    return slice_product(slice_reciprocal(denom, order), numer);
}

/// g_a = a - 2(1 - a) x (1 - x)^{-.} u: a0 = a, a_k = -2(1 - a) u.
inline SliceSeries make_g_a(double a, Octonion const& u, std::size_t order = default_order) {
    detail::require_a(a);
    detail::require_unit(u);
    std::vector<Octonion> c(order + 1, u * (-2.0 * (1.0 - a)));
    c[0] = Octonion{a};
    return SliceSeries{std::move(c), 2.0 * (1.0 - a)};
}

inline SliceSeries make_g_a_via_reciprocal(double a, Octonion const& u, std::size_t order = default_order) {
    detail::require_a(a);
    detail::require_unit(u);
    auto x_over = slice_product(SliceSeries::real({0.0, 1.0}), slice_reciprocal(SliceSeries::real({1.0, -1.0}), order));
    return SliceSeries::constant(Octonion{a}) - x_over.times_right(u).scaled(2.0 * (1.0 - a));
}

struct CertificateCheck {
    bool ok = false;
    double coefficient_margin = 0.0;
    double boundary_max = 0.0;  ///< sampled max of |f| or of Re f
};

/// Radii at which the boundary behaviour is sampled.
inline constexpr std::array<double, 4> certificate_radii{0.5, 0.9, 0.99, 0.999};

/// Coefficient bound plus boundary sampling (exact over the imaginary unit,
/// sampled in angle). Polynomials are also sampled on the unit sphere itself.
inline CertificateCheck certify(SliceSeries const& f, Certificate mode, int n_angles = 512, double tol = 1e-9) {
    CertificateCheck res;
    auto cb = coefficient_bounds_check(f, mode);
    res.coefficient_margin = cb.worst_margin;
    std::vector<double> radii(certificate_radii.begin(), certificate_radii.end());
    if (f.is_polynomial()) radii.push_back(1.0);
    double best = -std::numeric_limits<double>::infinity();
    for (double r : radii) {
        double tail = f.tail_bound(r);
        if (!(tail <= 1e-6)) continue;  // truncated sum not representative there
        for (int a = 0; a < n_angles; ++a) {
            double t = 2.0 * std::numbers::pi * a / n_angles;
            auto [F1, F2] = slice_parts(f, std::polar(r, t));
            double v = mode == Certificate::unit_ball ? max_abs_over_units(F1, F2) : max_re_over_units(F1, F2);
            best = std::max(best, v + tail);
        }
    }
    res.boundary_max = best;
    bool real_a0 = mode == Certificate::unit_ball || f[0].im().norm() <= 1e-10;
    res.ok = cb.holds && best <= 1.0 + tol && real_a0;
    return res;
}

namespace detail {

inline std::mt19937_64 entry_rng(std::uint64_t seed, std::uint64_t index, std::uint32_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), stream};
    return std::mt19937_64(seq);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Parameter in [0, 1) concentrated near 1: 1 - 10^{-U(0, 3)}.
inline double near_one(std::mt19937_64& rng) { return 1.0 - std::pow(10.0, -uniform(rng, 0.0, 3.0)); }

/// Parameter in (0, 1) concentrated near 0: 10^{-U(0, 3)} - 0.001.
inline double near_zero(std::mt19937_64& rng) { return std::pow(10.0, -uniform(rng, 0.0, 3.0)) * 0.999; }

inline std::vector<Octonion> random_coeffs(std::mt19937_64& rng, std::size_t degree) {
    std::vector<Octonion> c(degree + 1);
    for (auto& a : c) a = random_octonion(rng);
    return c;
}

/// Rescales so that sum |c_k| = mass.
inline void normalize_mass(std::vector<Octonion>& c, std::size_t from, double mass) {
    double s = 0.0;
    for (std::size_t k = from; k < c.size(); ++k) s += c[k].norm();
    if (s == 0.0) return;
    for (std::size_t k = from; k < c.size(); ++k) c[k] *= mass / s;
}

}  // namespace detail

/// One certified unit-ball function. The family cycles with `index`:
/// f_a, constants, absolutely summable polynomials, rescaled random
/// polynomials, rescaled slice products of f_a factors.
inline CorpusEntry random_unit_ball_function(std::uint64_t seed, std::uint64_t index,
                                             std::size_t order = default_order) {
    for (std::uint32_t attempt = 0;; ++attempt) {
        auto rng = detail::entry_rng(seed, index, attempt);
        CorpusEntry e;
        e.certificate = Certificate::unit_ball;
        e.provenance.seed = seed;
        e.provenance.index = index;
        switch (index % 5) {
            case 0: {
                double a = detail::near_one(rng);
                e.series = make_f_a(a, random_unit_octonion(rng), order);
                e.provenance.tag = "f_a";
                e.provenance.params = {{"a", a}};
                break;
            }
            case 1: {
                double len = detail::uniform(rng, 0.0, 1.0);
                e.series = SliceSeries::constant(random_unit_octonion(rng) * len);
                e.provenance.tag = "constant";
                e.provenance.params = {{"modulus", len}};
                break;
            }
            case 2: {
                auto deg = static_cast<std::size_t>(detail::uniform(rng, 1.0, 11.0));
                double mass = detail::uniform(rng, 0.5, 1.0);
                auto c = detail::random_coeffs(rng, deg);
                detail::normalize_mass(c, 0, mass);
                e.series = SliceSeries{std::move(c)};
                e.provenance.tag = "summable_polynomial";
                e.provenance.params = {{"degree", static_cast<double>(deg)}, {"mass", mass}};
                break;
            }
            case 3: {
                auto deg = static_cast<std::size_t>(detail::uniform(rng, 1.0, 9.0));
                SliceSeries p{detail::random_coeffs(rng, deg)};
                double bound = sup_norm_bound(p, 1.0, 8192);
                if (!(bound > 0.0)) continue;
                e.series = p.scaled(1.0 / bound);
                e.provenance.tag = "rescaled_polynomial";
                e.provenance.params = {{"degree", static_cast<double>(deg)}, {"scale", 1.0 / bound}};
                break;
            }
            default: {
                auto factors = static_cast<int>(detail::uniform(rng, 2.0, 4.0));
                SliceSeries prod = SliceSeries::constant(Octonion{1.0});
                for (int n = 0; n < factors; ++n) {
                    double a = detail::uniform(rng, 0.0, 0.8);
                    // exact polynomial truncation of the factor
                    prod = slice_product(prod, SliceSeries{make_f_a(a, random_unit_octonion(rng), 60).coeffs()});
                }
                double bound = sup_norm_bound(prod, 1.0, 16384);
                if (!(bound > 0.0)) continue;
                e.series = prod.scaled(1.0 / bound);
                e.provenance.tag = "rescaled_product";
                e.provenance.params = {{"factors", static_cast<double>(factors)}, {"scale", 1.0 / bound}};
                break;
            }
        }
        if (certify(e.series, e.certificate).ok) return e;
        if (attempt > 16) throw std::runtime_error("unit-ball generator failed to certify an entry");
    }
}

/// One certified half-space function with real a0 in [0, 1). `count` is the
/// number of g_a terms in the convex-combination families.
inline CorpusEntry random_halfspace_function(std::uint64_t seed, std::uint64_t index, int count = 3,
                                             std::size_t order = default_order) {
    auto one = Octonion{1.0};
    for (std::uint32_t attempt = 0;; ++attempt) {
        auto rng = detail::entry_rng(seed, index, 1000 + attempt);
        CorpusEntry e;
        e.certificate = Certificate::halfspace;
        e.provenance.seed = seed;
        e.provenance.index = index;
        auto mixture = [&](int terms) {
            std::vector<double> w(static_cast<std::size_t>(terms));
            double total = 0.0;
            for (auto& v : w) total += (v = detail::uniform(rng, 0.05, 1.0));
            SliceSeries acc = SliceSeries::constant(Octonion{});
            for (auto& v : w) {
                double a = detail::uniform(rng, 0.0, 1.0) < 0.5 ? detail::near_zero(rng) : detail::near_one(rng);
                double rho = detail::uniform(rng, 0.6, 1.0);
                acc = acc + make_g_a(a, one, order).dilated(rho).scaled(v / total);
            }
            return acc;
        };
        auto summable = [&]() {
            double a0 = detail::uniform(rng, 0.0, 1.0);
            auto deg = static_cast<std::size_t>(detail::uniform(rng, 1.0, 11.0));
            auto c = detail::random_coeffs(rng, deg);
            c[0] = Octonion{a0};
            detail::normalize_mass(c, 1, detail::uniform(rng, 0.5, 1.0) * (1.0 - a0));
            return SliceSeries{std::move(c)};
        };
        switch (index % 4) {
            case 0: {
                double a = (index / 4) % 2 == 0 ? detail::near_zero(rng) : detail::near_one(rng);
                e.series = make_g_a(a, one, order);
                e.provenance.tag = "g_a";
                e.provenance.params = {{"a", a}};
                break;
            }
            case 1:
                e.series = mixture(std::max(1, count));
                e.provenance.tag = "g_a_mixture";
                e.provenance.params = {{"terms", static_cast<double>(std::max(1, count))}};
                break;
            case 2:
                e.series = summable();
                e.provenance.tag = "summable_perturbation";
                break;
            default: {
                double lam = detail::uniform(rng, 0.0, 1.0);
                e.series = mixture(std::max(1, count)).scaled(lam) + summable().scaled(1.0 - lam);
                e.provenance.tag = "blend";
                e.provenance.params = {{"lambda", lam}};
                break;
            }
        }
        e.provenance.params["a0"] = e.series[0].re();
        bool in_range = e.series[0].re() >= 0.0 && e.series[0].re() < 1.0;
        if (in_range && certify(e.series, e.certificate).ok) return e;
        if (attempt > 16) throw std::runtime_error("half-space generator failed to certify an entry");
    }
}

inline std::vector<CorpusEntry> generate_corpus(Certificate mode, std::uint64_t seed, std::size_t size,
                                                std::size_t order = default_order) {
    std::vector<CorpusEntry> out;
    out.reserve(size);
    for (std::size_t n = 0; n < size; ++n)
        out.push_back(mode == Certificate::unit_ball ? random_unit_ball_function(seed, n, order)
                                                     : random_halfspace_function(seed, n, 3, order));
    return out;
}

/// Extremal function matching the theorem's hypothesis class.
inline SliceSeries extremal_for(Theorem t, double a, Octonion const& u, std::size_t order = default_order) {
    return hypothesis(t) == Certificate::unit_ball ? make_f_a(a, u, order) : make_g_a(a, u, order);
}

/// Functional of the theorem evaluated on its extremal family at |x| = r,
/// beyond the radius. For theom17 the probe may instead sit at r = R(a) with
/// beta above 8/9, the parameter whose sharpness that inequality asserts.
inline FunctionalValue sharpness_probe(Theorem t, double r, double a, Octonion const& u, BohrParams const& p,
                                       std::size_t order = default_order) {
    auto radius = theorem_radius(t, p, t == Theorem::theom17 ? std::optional<double>(a) : std::nullopt).value;
    bool beyond = r > radius;
    if (t == Theorem::theom17 && p.beta > theom17_beta_max && r >= radius) beyond = true;
    if (!beyond) throw std::domain_error("probe misuse: r inside the verified region");
    return theorem_functional(t, extremal_for(t, a, u, order), r, p);
}

}  // namespace octobohr
