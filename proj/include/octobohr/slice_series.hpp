#pragma once

/**
 * @file slice_series.hpp
 * @brief Truncated power series f(x) = sum_k x^k a_k with octonion coefficients
 *        on the right, i.e. slice regular functions on the unit ball.
 *
 * For x = alpha + beta J in the slice C_J, each power x^k stays in C_J and
 * equals p_k + J q_k where z^k = p_k + i q_k with z = alpha + i beta. Hence
 *
 *   f(x) = F1(z) + J F2(z),   F1 = sum p_k a_k,   F2 = sum q_k a_k,
 *
 * and (F1, F2) is the stem function of f. Every evaluation in this file goes
 * through that split, so only one octonion product is ever taken per point.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "octobohr/octonion.hpp"

namespace octobohr {

class SliceSeries {
public:
    SliceSeries() : coeffs_{Octonion{}}, tail_coeff_bound_{0.0} {}

    /// Exact polynomial: no coefficients beyond the stored ones.
    explicit SliceSeries(std::vector<Octonion> coeffs) : SliceSeries(std::move(coeffs), 0.0) {}

    /// Truncation of an infinite series. `tail_coeff_bound` bounds |a_k| for
    /// every k above the truncation order; nullopt when no bound is known.
    SliceSeries(std::vector<Octonion> coeffs, std::optional<double> tail_coeff_bound)
        : coeffs_{std::move(coeffs)}, tail_coeff_bound_{tail_coeff_bound} {
        if (coeffs_.empty()) coeffs_.push_back(Octonion{});
    }

    static SliceSeries constant(Octonion a0) { return SliceSeries{std::vector<Octonion>{a0}}; }

    /// sum_k x^k c_k with real c_k.
    static SliceSeries real(std::vector<double> const& c, std::optional<double> tail = 0.0) {
        std::vector<Octonion> o;
        o.reserve(c.size());
        for (double v : c) o.emplace_back(v);
        return SliceSeries{std::move(o), tail};
    }

    std::vector<Octonion> const& coeffs() const { return coeffs_; }
    Octonion const& operator[](std::size_t k) const { return coeffs_[k]; }
    /// Coefficient k, or zero beyond the stored range.
    Octonion coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Octonion{}; }
    std::size_t trunc_order() const { return coeffs_.size() - 1; }

    std::optional<double> tail_coeff_bound() const { return tail_coeff_bound_; }
    bool is_polynomial() const { return tail_coeff_bound_ && *tail_coeff_bound_ == 0.0; }

    /// Bound on sum_{k > N} |a_k| r^k; infinite when no coefficient bound is known.
    double tail_bound(double r) const {
        if (!tail_coeff_bound_) return std::numeric_limits<double>::infinity();
        if (*tail_coeff_bound_ == 0.0 || r == 0.0) return 0.0;
        if (r >= 1.0) return std::numeric_limits<double>::infinity();
        return *tail_coeff_bound_ * std::pow(r, static_cast<double>(trunc_order() + 1)) / (1.0 - r);
    }

    /// Same series cut at order n; dropped coefficients are folded into the tail bound.
    SliceSeries truncated(std::size_t n) const {
        if (n >= trunc_order()) return *this;
        std::vector<Octonion> c(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n + 1));
        return SliceSeries{std::move(c), bound_beyond(n)};
    }

    SliceSeries operator+(SliceSeries const& o) const { return combine(o, 1.0); }
    SliceSeries operator-(SliceSeries const& o) const { return combine(o, -1.0); }

    /// Right scalar multiple sum x^k (a_k s).
    SliceSeries scaled(double s) const {
        auto c = coeffs_;
        for (auto& a : c) a *= s;
        std::optional<double> t;
        if (tail_coeff_bound_) t = *tail_coeff_bound_ * std::abs(s);
        return SliceSeries{std::move(c), t};
    }

    /// Right octonion multiple sum x^k (a_k u).
    SliceSeries times_right(Octonion const& u) const {
        auto c = coeffs_;
        for (auto& a : c) a = a * u;
        std::optional<double> t;
        if (tail_coeff_bound_) t = *tail_coeff_bound_ * u.norm();
        return SliceSeries{std::move(c), t};
    }

    /// f(rho x): coefficients a_k rho^k.
    SliceSeries dilated(double rho) const {
        auto c = coeffs_;
        double p = 1.0;
        for (auto& a : c) {
            a *= p;
            p *= rho;
        }
        std::optional<double> t;
        if (tail_coeff_bound_) t = *tail_coeff_bound_ * p;
        return SliceSeries{std::move(c), t};
    }

private:
    /// Bound on |a_k| for all k > n.
    std::optional<double> bound_beyond(std::size_t n) const {
        if (!tail_coeff_bound_) return std::nullopt;
        double m = *tail_coeff_bound_;
        for (std::size_t k = n + 1; k < coeffs_.size(); ++k) m = std::max(m, coeffs_[k].norm());
        return m;
    }

    SliceSeries combine(SliceSeries const& o, double sign) const {
        if (is_polynomial() && o.is_polynomial()) {
            std::vector<Octonion> c(std::max(coeffs_.size(), o.coeffs_.size()));
            for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) + o.coeff(k) * sign;
            return SliceSeries{std::move(c)};
        }
        // only a truncated operand limits how far the sum is known
        std::size_t n = std::numeric_limits<std::size_t>::max();
        if (!is_polynomial()) n = trunc_order();
        if (!o.is_polynomial()) n = std::min(n, o.trunc_order());
        std::vector<Octonion> c(n + 1);
        for (std::size_t k = 0; k <= n; ++k) c[k] = coeff(k) + o.coeff(k) * sign;
        std::optional<double> t;
        auto b1 = bound_beyond(n);
        auto b2 = o.bound_beyond(n);
        if (b1 && b2) t = *b1 + *b2;
        return SliceSeries{std::move(c), t};
    }

    std::vector<Octonion> coeffs_;
    std::optional<double> tail_coeff_bound_;
};

/// Values of the stem function F = F1 + i F2 at z.
struct StemValue {
    Octonion F1;
    Octonion F2;
    std::complex<double> at;
};

namespace detail {

inline void require_in_ball(Octonion const& x) {
    if (!(x.norm() < 1.0)) throw std::domain_error("point outside the open unit ball");
}

}  // namespace detail

/// (F1(z), F2(z)) by complex Horner on each real coordinate. No domain check:
/// callers handling polynomials may use it on the closed ball.
inline std::pair<Octonion, Octonion> slice_parts(SliceSeries const& f, std::complex<double> z,
                                                 std::size_t upto = std::numeric_limits<std::size_t>::max()) {
    std::array<std::complex<double>, 8> acc{};
    auto const& c = f.coeffs();
    std::size_t end = upto < c.size() ? upto + 1 : c.size();
    for (std::size_t k = end; k-- > 0;) {
        auto a = c[k].coords();
        for (std::size_t n = 0; n < 8; ++n) acc[n] = acc[n] * z + a[n];
    }
    std::array<double, 8> re{}, im{};
    for (std::size_t n = 0; n < 8; ++n) {
        re[n] = acc[n].real();
        im[n] = acc[n].imag();
    }
    return {Octonion{re}, Octonion{im}};
}

/// Smallest K with sum_{K < k <= N} r^k |a_k| below `eps`, and that sum.
/// Horner up to K then differs from the full sum by at most the returned amount.
inline std::pair<std::size_t, double> effective_order(SliceSeries const& f, double r, double eps = 1e-17) {
    std::vector<double> terms(f.trunc_order() + 1);
    double rk = 1.0;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        terms[k] = rk * f[k].norm();
        rk *= r;
    }
    double dropped = 0.0;
    std::size_t k = terms.size() - 1;
    for (; k > 0 && dropped + terms[k] <= eps; --k) dropped += terms[k];
    return {k, dropped};
}

/// x^k inside the slice of x: decompose, complex power, recompose.
inline Octonion slice_power(Octonion const& x, int k) {
    auto p = slice_decompose(x);
    return in_slice(std::pow(p.as_complex(), k), p.unit);
}

inline Octonion evaluate(SliceSeries const& f, Octonion const& x) {
    detail::require_in_ball(x);
    auto p = slice_decompose(x);
    auto [F1, F2] = slice_parts(f, p.as_complex());
    return F1 + p.unit * F2;
}

/// Cauchy convolution c_n = sum_k a_k b_{n-k}. Two exact polynomials give the
/// full product. Otherwise c_n is kept up to the smallest truncation order among
/// the non-polynomial operands, which is as far as it is fully determined.
inline SliceSeries slice_product(SliceSeries const& f, SliceSeries const& g) {
    bool fp = f.is_polynomial();
    bool gp = g.is_polynomial();
    std::size_t n = f.trunc_order() + g.trunc_order();
    if (!fp) n = std::min(n, f.trunc_order());
    if (!gp) n = std::min(n, g.trunc_order());
    std::vector<Octonion> c(n + 1);
    for (std::size_t i = 0; i <= std::min(n, f.trunc_order()); ++i) {
        auto const& a = f[i];
        for (std::size_t j = 0; i + j <= n && j <= g.trunc_order(); ++j) c[i + j] += a * g[j];
    }
    if (fp && gp) return SliceSeries{std::move(c)};
    // polynomial times bounded series: |c_k| <= sum |p_i| * max_{j > n - deg} |s_j| for k > n
    std::optional<double> tail;
    if (fp != gp) {
        auto const& poly = fp ? f : g;
        auto const& ser = fp ? g : f;
        if (ser.tail_coeff_bound()) {
            std::size_t deg = poly.trunc_order();
            double mass = 0.0;
            for (auto const& a : poly.coeffs()) mass += a.norm();
            double m = *ser.tail_coeff_bound();
            std::size_t from = n + 1 > deg ? n + 1 - deg : 0;
            for (std::size_t k = from; k <= ser.trunc_order(); ++k) m = std::max(m, ser[k].norm());
            tail = mass * m;
        }
    }
    return SliceSeries{std::move(c), tail};
}

inline SliceSeries slice_conj(SliceSeries const& f) {
    auto c = f.coeffs();
    for (auto& a : c) a = a.conj();
    return SliceSeries{std::move(c), f.tail_coeff_bound()};
}

/// N(f) = f * f^c. Real coefficients up to rounding.
inline SliceSeries normal(SliceSeries const& f) { return slice_product(f, slice_conj(f)); }

/// Reciprocal of a real-coefficient series with nonzero constant term.
inline std::vector<double> invert_real_series(std::vector<double> const& n, std::size_t order) {
    std::vector<double> inv(order + 1, 0.0);
    inv[0] = 1.0 / n[0];
    for (std::size_t i = 1; i <= order; ++i) {
        double s = 0.0;
        for (std::size_t k = 1; k <= std::min(i, n.size() - 1); ++k) s += n[k] * inv[i - k];
        inv[i] = -s / n[0];
    }
    return inv;
}

/// f^{-.} = N(f)^{-1} * f^c, to order `out_order`.
inline SliceSeries slice_reciprocal(SliceSeries const& f, std::size_t out_order) {
    if (f[0].norm() < 1e-8) throw std::domain_error("reciprocal undefined at 0: N(f) vanishes");
    if (!f.is_polynomial() && out_order > f.trunc_order())
        throw std::invalid_argument("reciprocal order exceeds the known coefficients of f");
    auto nf = normal(f);
    std::vector<double> n;
    n.reserve(nf.coeffs().size());
    for (auto const& a : nf.coeffs()) n.push_back(a.re());
    auto inv = invert_real_series(n, out_order);
    auto fc = slice_conj(f);
    std::vector<Octonion> c(out_order + 1);
    for (std::size_t i = 0; i <= out_order; ++i)
        for (std::size_t j = 0; j <= std::min(i, fc.trunc_order()); ++j) c[i] += fc[j] * inv[i - j];
    return SliceSeries{std::move(c), std::nullopt};
}

/// max_k |(f * g)_k - [k = 0]| / (1 + sum_i |f_i| |g_{k-i}|) over the
/// coefficients g determines. Scaled by the convolution's own size, so that a
/// reciprocal with fast-growing coefficients is judged by its rounding, not by
/// its magnitude.
inline double reciprocal_residual(SliceSeries const& f, SliceSeries const& g) {
    std::size_t n = g.trunc_order();
    if (!f.is_polynomial()) n = std::min(n, f.trunc_order());
    double worst = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
        Octonion c;
        double mag = 0.0;
        for (std::size_t i = 0; i <= std::min(k, f.trunc_order()); ++i) {
            c += f[i] * g[k - i];
            mag += f[i].norm() * g[k - i].norm();
        }
        if (k == 0) c -= Octonion{1.0};
        worst = std::max(worst, c.norm() / (1.0 + mag));
    }
    return worst;
}

inline SliceSeries slice_derivative(SliceSeries const& f) {
    auto const& a = f.coeffs();
    if (a.size() == 1) return SliceSeries::constant(Octonion{});
    std::vector<Octonion> b(a.size() - 1);
    for (std::size_t k = 0; k + 1 < a.size(); ++k) b[k] = a[k + 1] * static_cast<double>(k + 1);
    std::optional<double> tail;
    if (f.is_polynomial()) tail = 0.0;
    return SliceSeries{std::move(b), tail};
}

/// Stem function at z = alpha + i beta, read off from f on the slice C_unit:
/// F1 = (f(x) + f(conj x)) / 2 and F2 = (2 unit)^{-1} (f(x) - f(conj x)),
/// with F2 = 0 on the real axis.
inline StemValue stem_at(SliceSeries const& f, std::complex<double> z, Octonion const& unit) {
    auto x = in_slice(z, unit);
    auto xb = in_slice(std::conj(z), unit);
    detail::require_in_ball(x);
    auto fx = evaluate(f, x);
    auto fxb = evaluate(f, xb);
    StemValue s{(fx + fxb) * 0.5, Octonion{}, z};
    if (z.imag() != 0.0) s.F2 = (unit * 2.0).inv() * (fx - fxb);
    return s;
}

inline StemValue stem_components(SliceSeries const& f, Octonion const& x) {
    detail::require_in_ball(x);
    auto p = slice_decompose(x);
    return stem_at(f, p.as_complex(), p.unit);
}

/// Orthonormal basis {1, I, I1, I I1, I2, I I2, I3, I I3} built by Gram-Schmidt
/// over the standard imaginary basis.
inline std::array<Octonion, 8> splitting_basis(Octonion const& I) {
    if (std::abs(I.re()) > 1e-12 || std::abs(I.norm() - 1.0) > 1e-12)
        throw std::domain_error("splitting basis needs a purely imaginary unit");
    std::array<Octonion, 8> basis{};
    basis[0] = Octonion{1.0};
    basis[1] = I;
    std::size_t filled = 2;
    for (std::size_t seed = 1; seed < 8 && filled < 8; ++seed) {
        auto v = Octonion::unit(seed);
        for (std::size_t n = 0; n < filled; ++n) v -= basis[n] * dot(v, basis[n]);
        double len = v.norm();
        if (len < 1e-6) continue;
        v = v / len;
        basis[filled] = v;
        basis[filled + 1] = I * v;
        filled += 2;
    }
    return basis;
}

/// Components f_n : C_I -> C_I with f(z) = sum_n f_n(z) I_n on the slice,
/// I_0 = 1, I_1..I_3 the odd entries of splitting_basis(I).
inline std::array<std::complex<double>, 4> split_components(SliceSeries const& f, Octonion const& I,
                                                           std::complex<double> z) {
    auto basis = splitting_basis(I);
    auto x = in_slice(z, I);
    detail::require_in_ball(x);
    auto v = evaluate(f, x);
    std::array<std::complex<double>, 4> out{};
    for (std::size_t n = 0; n < 4; ++n)
        out[n] = {dot(v, basis[2 * n]), dot(v, basis[2 * n + 1])};
    return out;
}

/// Inverse of split_components.
inline Octonion split_reconstruct(std::array<std::complex<double>, 4> const& parts, Octonion const& I) {
    auto basis = splitting_basis(I);
    Octonion v{};
    for (std::size_t n = 0; n < 4; ++n) v += in_slice(parts[n], I) * basis[2 * n];
    return v;
}

/// max over imaginary units J of |F1 + J F2|; the maximum is attained in
/// closed form because <J F2, F1> = <J, F1 conj(F2)>.
inline double max_abs_over_units(Octonion const& F1, Octonion const& F2) {
    double cross = (F1 * F2.conj()).im().norm();
    return std::sqrt(F1.norm_sq() + F2.norm_sq() + 2.0 * cross);
}

/// max over imaginary units J of Re(F1 + J F2) = Re F1 + |Im F2|.
inline double max_re_over_units(Octonion const& F1, Octonion const& F2) {
    return F1.re() + F2.im().norm();
}

struct SupNormEstimate {
    double sampled;  ///< max over the sample, a lower bound for sup_{|x|<=r} |f|
    double upper;    ///< sampled + truncation tail
};

/// Samples |f(r(cos t + I sin t))| over random I and a uniform t grid.
inline SupNormEstimate sup_norm_estimate(SliceSeries const& f, double r, int n_units, int n_angles,
                                         std::uint64_t seed = 0) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("sup_norm_estimate needs 0 < r < 1");
    std::mt19937_64 rng(seed);
    double best = 0.0;
    for (int u = 0; u < n_units; ++u) {
        auto I = random_imaginary_unit(rng);
        for (int a = 0; a < n_angles; ++a) {
            double t = 2.0 * std::numbers::pi * a / n_angles;
            auto [F1, F2] = slice_parts(f, std::polar(r, t));
            best = std::max(best, (F1 + I * F2).norm());
        }
    }
    return {best, best + f.tail_bound(r)};
}

/// Certified upper bound on sup_{|x|<=r} |f|. Exact maximization over the
/// imaginary unit, a Lipschitz margin between grid angles, plus the tail.
/// For exact polynomials r = 1 is allowed (closed unit ball).
inline double sup_norm_bound(SliceSeries const& f, double r, int n_angles = 4096) {
    if (!(r > 0.0 && (r < 1.0 || (r == 1.0 && f.is_polynomial()))))
        throw std::domain_error("sup_norm_bound radius out of range");
    double best = 0.0;
    for (int a = 0; a < n_angles; ++a) {
        double t = 2.0 * std::numbers::pi * a / n_angles;
        auto [F1, F2] = slice_parts(f, std::polar(r, t));
        best = std::max(best, max_abs_over_units(F1, F2));
    }
    // |d/dt f(r e^{Jt})| <= sum k r^k |a_k|
    double lip = 0.0;
    double rk = 1.0;
    for (std::size_t k = 0; k <= f.trunc_order(); ++k) {
        lip += static_cast<double>(k) * rk * f[k].norm();
        rk *= r;
    }
    double half_step = std::numbers::pi / n_angles;
    double tail = f.tail_bound(r);
    if (tail > 0.0) {
        // derivative tail: B sum_{k>N} k r^k
        double n1 = static_cast<double>(f.trunc_order() + 1);
        double b = *f.tail_coeff_bound();
        lip += b * std::pow(r, n1) * (n1 / (1.0 - r) + r / ((1.0 - r) * (1.0 - r)));
    }
    return best + lip * half_step + tail;
}

/// T_f(x) = (f^c(x)^{-1} ((x f^c(x)) F2(z))) F2(z)^{-1}
inline Octonion t_f_map(SliceSeries const& f, Octonion const& x, double threshold = 1e-8) {
    auto fcx = evaluate(slice_conj(f), x);
    auto stem = stem_components(f, x);
    if (fcx.norm() < threshold || stem.F2.norm() < threshold)
        throw std::domain_error("identity not testable at this point");
    return (fcx.inv() * ((x * fcx) * stem.F2)) * stem.F2.inv();
}

/// |f^{-.}(x) - f(T_f(x))^{-1}|, with the reciprocal expanded to `recip_order`.
inline double t_f_identity_check(SliceSeries const& f, Octonion const& x, std::size_t recip_order = 200,
                                 double threshold = 1e-8) {
    detail::require_in_ball(x);
    auto nfx = evaluate(normal(f), x);
    if (nfx.norm() < threshold) throw std::domain_error("identity not testable at this point");
    auto T = t_f_map(f, x, threshold);
    auto recip = slice_reciprocal(f, recip_order);
    // the truncated reciprocal must have converged at |x|
    double r = x.norm();
    double last = 0.0;
    std::size_t n = recip.trunc_order();
    for (std::size_t k = n > 8 ? n - 8 : 0; k <= n; ++k) last = std::max(last, recip[k].norm() * std::pow(r, k));
    if (!(last < 1e-14)) throw std::domain_error("identity not testable at this point");
    auto lhs = evaluate(recip, x);
    auto rhs = evaluate(f, T).inv();
    return (lhs - rhs).norm();
}

}  // namespace octobohr
