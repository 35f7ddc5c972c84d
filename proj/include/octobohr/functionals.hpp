#pragma once

/**
 * @file functionals.hpp
 * @brief Bohr-type functionals of slice regular series on the unit ball.
 *
 * Wherever only |x^k a_k| enters, the functional depends on r = |x| alone,
 * since the octonion modulus is multiplicative. Each functional returns a
 * FunctionalValue that keeps the leading term apart from the rest so that
 * the excess over 1 can be formed without cancellation, together with a
 * tail-inflated variant accounting for the truncated coefficients.
 */

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "octobohr/slice_series.hpp"

namespace octobohr {

/// Scalar knobs shared by the theorems.
struct BohrParams {
    double m = 1.0;
    double lambda = 0.0;
    double q = 1.0;
    double j = 1.0;
    std::vector<double> d;
    double beta = 0.0;
};

struct FunctionalValue {
    double head = 0.0;        ///< leading term (|a0|^m, a0 or Re a0)
    double rest = 0.0;        ///< everything else, from the stored coefficients
    double rest_upper = 0.0;  ///< rest with the truncation tail folded in

    double value() const { return head + rest; }
    double upper() const { return head + rest_upper; }
    double tail() const { return rest_upper - rest; }
    /// value - 1, summed as (head - 1) + rest
    double excess() const { return (head - 1.0) + rest; }
    double upper_excess() const { return (head - 1.0) + rest_upper; }
};

struct SeriesSum {
    double value = 0.0;
    double upper = 0.0;
};

namespace detail {

inline void require_radius(double r) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("radius must lie in [0, 1)");
}

inline void require_m(double m, double hi) {
    if (!(m > 0.0 && m <= hi)) throw std::domain_error(hi == 1.0 ? "m must lie in (0, 1]" : "m must lie in (0, 2]");
}

/// Real a0 with the tolerance used for the half-space functionals.
inline double real_a0(SliceSeries const& f) {
    auto a0 = f[0];
    if (a0.im().norm() > 1e-10 * std::max(1.0, a0.norm()))
        throw std::domain_error("functional_E requires real a0");
    if (!(a0.re() > -1.0)) throw std::domain_error("a0 must exceed -1");
    return a0.re();
}

}  // namespace detail

/// sum_{k>=1} r^k |a_k|
inline SeriesSum majorant_sum(SliceSeries const& f, double r) {
    double s = 0.0;
    double rk = r;
    for (std::size_t k = 1; k <= f.trunc_order(); ++k) {
        s += rk * f[k].norm();
        rk *= r;
    }
    return {s, s + f.tail_bound(r)};
}

/// sum_{k>=1} r^{2k} |a_k|^2
inline SeriesSum square_sum(SliceSeries const& f, double r) {
    double rho = r * r;
    double s = 0.0;
    double pk = rho;
    for (std::size_t k = 1; k <= f.trunc_order(); ++k) {
        s += pk * f[k].norm_sq();
        pk *= rho;
    }
    double tail = 0.0;
    if (auto b = f.tail_coeff_bound(); !b) {
        tail = std::numeric_limits<double>::infinity();
    } else if (*b > 0.0 && r > 0.0) {
        tail = *b * *b * std::pow(rho, static_cast<double>(f.trunc_order() + 1)) / (1.0 - rho);
    }
    return {s, s + tail};
}

/// S*(r) = sum_{k>=1} k r^{2k} |a_k|^2
inline SeriesSum s_star(SliceSeries const& f, double r) {
    detail::require_radius(r);
    double rho = r * r;
    double s = 0.0;
    double pk = rho;
    for (std::size_t k = 1; k <= f.trunc_order(); ++k) {
        s += static_cast<double>(k) * pk * f[k].norm_sq();
        pk *= rho;
    }
    double tail = 0.0;
    if (auto b = f.tail_coeff_bound(); !b) {
        tail = std::numeric_limits<double>::infinity();
    } else if (*b > 0.0 && r > 0.0) {
        // sum_{k>N} k rho^k = rho^{N+1} ((N+1)/(1-rho) + rho/(1-rho)^2)
        double n1 = static_cast<double>(f.trunc_order() + 1);
        tail = *b * *b * std::pow(rho, n1) * (n1 / (1.0 - rho) + rho / ((1.0 - rho) * (1.0 - rho)));
    }
    return {s, s + tail};
}

/// Q_N(w) = d_1 w + ... + d_N w^N
inline double q_poly(std::span<double const> d, double w) {
    double acc = 0.0;
    for (std::size_t n = d.size(); n-- > 0;) acc = (acc + d[n]) * w;
    return acc;
}

/// A_f = |a0|^m + sum_{k>=1} r^k |a_k|
inline FunctionalValue functional_A(SliceSeries const& f, double r, double m) {
    detail::require_radius(r);
    detail::require_m(m, 2.0);
    auto s = majorant_sum(f, r);
    return {std::pow(f[0].norm(), m), s.value, s.upper};
}

/// A_f(|x|) + lambda |f(x) - a0|^p at a given point.
inline FunctionalValue functional_A_plus_deviation(SliceSeries const& f, Octonion const& x, double m,
                                                   double lambda, double p) {
    double r = x.norm();
    auto a = functional_A(f, r, m);
    if (lambda == 0.0) return a;
    double dev = (evaluate(f, x) - f[0]).norm();
    double dev_up = dev + f.tail_bound(r);
    return {a.head, a.rest + lambda * std::pow(dev, p), a.rest_upper + lambda * std::pow(dev_up, p)};
}

/// B_f(x) = A_f(x) + lambda |f(x) - a0|^q
inline FunctionalValue functional_B(SliceSeries const& f, Octonion const& x, double m, double lambda,
                                    double q) {
    if (!(x.norm() < 1.0)) throw std::domain_error("point outside the open unit ball");
    if (lambda < 0.0 || q < 1.0) throw std::domain_error("need lambda >= 0 and q >= 1");
    return functional_A_plus_deviation(f, x, m, lambda, q);
}

/// max over |x| = r of |f(x) - a0|: exact over the imaginary unit, sampled in angle.
inline SeriesSum max_deviation_on_sphere(SliceSeries const& f, double r, int n_angles = 256) {
    detail::require_radius(r);
    if (r == 0.0) return {0.0, 0.0};
    SliceSeries g = f - SliceSeries::constant(f[0]);
    auto [order, dropped] = effective_order(g, r);
    double best = 0.0;
    for (int a = 0; a < n_angles; ++a) {
        double t = 2.0 * std::numbers::pi * a / n_angles;
        auto [F1, F2] = slice_parts(g, std::polar(r, t), order);
        best = std::max(best, max_abs_over_units(F1, F2));
    }
    return {best, best + dropped + f.tail_bound(r)};
}

/// max over the sampled sphere |x| = r of A_f + lambda |f(x) - a0|^p.
inline FunctionalValue functional_A_plus_deviation_sphere(SliceSeries const& f, double r, double m,
                                                          double lambda, double p, int n_angles = 256) {
    auto a = functional_A(f, r, m);
    if (lambda == 0.0) return a;
    auto dev = max_deviation_on_sphere(f, r, n_angles);
    return {a.head, a.rest + lambda * std::pow(dev.value, p), a.rest_upper + lambda * std::pow(dev.upper, p)};
}

/// C_f = A_f + (1/(1+|a0|) + r/(1-r)) sum_{k>=1} r^{2k} |a_k|^2
inline FunctionalValue functional_C(SliceSeries const& f, double r, double m) {
    detail::require_radius(r);
    detail::require_m(m, 1.0);
    auto a = functional_A(f, r, m);
    auto sq = square_sum(f, r);
    double w = 1.0 / (1.0 + f[0].norm()) + r / (1.0 - r);
    return {a.head, a.rest + w * sq.value, a.rest_upper + w * sq.upper};
}

/// D_f = A_f + Q_N(S*)
inline FunctionalValue functional_D(SliceSeries const& f, double r, double m, std::span<double const> d) {
    detail::require_radius(r);
    detail::require_m(m, 1.0);
    for (double v : d)
        if (v < 0.0) throw std::domain_error("Q_N coefficients must be nonnegative");
    auto a = functional_A(f, r, m);
    auto s = s_star(f, r);
    return {a.head, a.rest + q_poly(d, s.value), a.rest_upper + q_poly(d, s.upper)};
}

/// E_f = sum_{k>=0} r^k |a_k| + (1/(1+a0) + r/(1-r)) sum_{k>=1} r^{2k} |a_k|^2, a0 real.
inline FunctionalValue functional_E(SliceSeries const& f, double r) {
    detail::require_radius(r);
    double a0 = detail::real_a0(f);
    auto s = majorant_sum(f, r);
    auto sq = square_sum(f, r);
    double w = 1.0 / (1.0 + a0) + r / (1.0 - r);
    return {f[0].norm(), s.value + w * sq.value, s.upper + w * sq.upper};
}

/// F_f = E_f + beta S*
inline FunctionalValue functional_F(SliceSeries const& f, double r, double beta) {
    if (beta < 0.0) throw std::domain_error("beta must be nonnegative");
    auto e = functional_E(f, r);
    auto s = s_star(f, r);
    return {e.head, e.rest + beta * s.value, e.rest_upper + beta * s.upper};
}

/// dist(f(0), boundary of {Re x <= 1}) = 1 - Re a0.
inline double halfspace_distance(SliceSeries const& f) {
    double re = f[0].re();
    if (re > 1.0) throw std::domain_error("hypothesis violated: f(0) outside the half-space");
    return 1.0 - re;
}

/// Re a0 + sum_{k>=1} r^k |a_k|; at most 1 exactly when the majorant stays
/// below the distance from f(0) to the half-space boundary.
inline FunctionalValue functional_distance_form(SliceSeries const& f, double r) {
    detail::require_radius(r);
    double dist = halfspace_distance(f);
    auto s = majorant_sum(f, r);
    return {1.0 - dist, s.value, s.upper};
}

enum class Certificate { unit_ball, halfspace };

struct CoefficientBoundResult {
    bool holds = true;
    double worst_margin = 0.0;  ///< min over k >= 1 of bound - |a_k|
    std::size_t worst_k = 0;
    double bound = 0.0;
};

/// |a_k| <= 1 - |a0|^2 (unit ball) or |a_k| <= 2 (1 - Re a0) (half-space), k >= 1.
inline CoefficientBoundResult coefficient_bounds_check(SliceSeries const& f, Certificate mode,
                                                       double tol = 1e-12) {
    double bound = mode == Certificate::unit_ball ? 1.0 - f[0].norm_sq() : 2.0 * (1.0 - f[0].re());
    CoefficientBoundResult res;
    res.bound = bound;
    res.worst_margin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k <= f.trunc_order(); ++k) {
        double margin = bound - f[k].norm();
        if (margin < res.worst_margin) {
            res.worst_margin = margin;
            res.worst_k = k;
        }
    }
    if (auto b = f.tail_coeff_bound(); b && *b > 0.0) {
        double margin = bound - *b;
        if (margin < res.worst_margin) {
            res.worst_margin = margin;
            res.worst_k = f.trunc_order() + 1;
        }
    }
    if (f.trunc_order() == 0 && f.is_polynomial()) res.worst_margin = bound;
    res.holds = res.worst_margin >= -tol;
    return res;
}

/// (1 - t^m) / (1 - t) for t in [0, 1)
inline double elementary_ratio(double t, double m) { return (1.0 - std::pow(t, m)) / (1.0 - t); }

}  // namespace octobohr
