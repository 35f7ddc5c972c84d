#pragma once

/**
 * @file radii.hpp
 * @brief Bohr radii and the constants the coefficient conditions depend on.
 *
 * Closed forms where one exists; otherwise a bracketed root of a monotone
 * equation. The two refined radii come from
 *
 *   -m/2 + s + c s^p = 0,   s = r / (1 - r),
 *
 * whose left side is strictly increasing in s >= 0 and negative at s = 0, so
 * the root is unique and lies in (0, m/2].
 */

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "octobohr/roots.hpp"

namespace octobohr {

enum class RadiusMethod { closed_form, bracketed_root };

inline std::string_view to_string(RadiusMethod m) {
    return m == RadiusMethod::closed_form ? "closed-form" : "bracketed-root";
}

inline RadiusMethod radius_method_from_string(std::string_view s) {
    if (s == "closed-form") return RadiusMethod::closed_form;
    if (s == "bracketed-root") return RadiusMethod::bracketed_root;
    throw std::invalid_argument("unknown radius method: " + std::string(s));
}

struct RadiusResult {
    double value = 0.0;
    RadiusMethod method = RadiusMethod::closed_form;
    double residual = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;

    bool operator==(RadiusResult const&) const = default;
};

namespace detail {

inline RadiusResult closed(double v) { return {v, RadiusMethod::closed_form, 0.0, v, v}; }

inline void require(bool ok, char const* what) {
    if (!ok) throw std::domain_error(what);
}

/// Root of -m/2 + s + c s^p = 0 mapped back to r = s / (1 + s).
inline RadiusResult refined_radius(double m, double c, double p) {
    if (c == 0.0) {
        double s = m / 2.0;
        return closed(s / (1.0 + s));
    }
    auto eq_r = [=](double r) {
        double s = r / (1.0 - r);
        return -m / 2.0 + s + c * std::pow(s, p);
    };
    auto d_r = [=](double r) {
        double s = r / (1.0 - r);
        double ds = 1.0 / ((1.0 - r) * (1.0 - r));
        return (1.0 + c * p * std::pow(s, p - 1.0)) * ds;
    };
    // the root in s lies in (0, m/2], i.e. r in (0, m/(2+m)]
    double hi = m / (2.0 + m);
    auto root = roots::bisect_newton(eq_r, d_r, 0.0, hi);
    return {root.x, RadiusMethod::bracketed_root, std::abs(eq_r(root.x)), root.bracket.lo,
            root.bracket.hi};
}

}  // namespace detail

/// m / (2 + m), m in (0, 2].
inline RadiusResult radius_R_m(double m) {
    detail::require(m > 0.0 && m <= 2.0, "m must lie in (0, 2]");
    return detail::closed(m / (2.0 + m));
}

/// Unique root in (0, 1) of -m/2 + r/(1-r) + lambda (r/(1-r))^q = 0.
inline RadiusResult radius_R_mlq(double m, double lambda, double q) {
    detail::require(m > 0.0 && m <= 2.0, "m must lie in (0, 2]");
    detail::require(lambda >= 0.0, "lambda must be nonnegative");
    detail::require(q >= 1.0, "q must be at least 1");
    return detail::refined_radius(m, lambda, q);
}

/// Unique root in (0, 1) of -m/2 + r/(1-r) + lambda 2^{j-1} (r/(1-r))^j = 0.
inline RadiusResult radius_Rstar_mlj(double m, double lambda, double j) {
    detail::require(m > 0.0 && m <= 1.0, "m must lie in (0, 1]");
    detail::require(lambda >= 0.0, "lambda must be nonnegative");
    detail::require(j >= 1.0, "j must be at least 1");
    return detail::refined_radius(m, lambda * std::pow(2.0, j - 1.0), j);
}

inline double rstar_cubic(double r) { return ((3.0 * r - 5.0) * r - 3.0) * r + 1.0; }

/// Root in (0, 1) of 3r^3 - 5r^2 - 3r + 1; p(0) = 1 and p(1/3) < 0 bracket it.
inline RadiusResult radius_Rstar_cubic() {
    auto dp = [](double r) { return (9.0 * r - 10.0) * r - 3.0; };
    auto root = roots::bisect_newton(rstar_cubic, dp, 0.0, 1.0 / 3.0);
    return {root.x, RadiusMethod::bracketed_root, std::abs(rstar_cubic(root.x)), root.bracket.lo,
            root.bracket.hi};
}

/// 1 / (5 - 2 a0), a0 in [0, 1).
inline RadiusResult radius_R_a0(double a0) {
    detail::require(a0 >= 0.0 && a0 < 1.0, "a0 must lie in [0, 1)");
    return detail::closed(1.0 / (5.0 - 2.0 * a0));
}

/// Radius of the half-space distance inequality.
inline RadiusResult radius_distance_form() { return detail::closed(1.0 / 3.0); }

/// x (1 + x)^2 (1 - x^2)^{2k-2}
inline double c_k_objective(int k, double x) {
    return x * (1.0 + x) * (1.0 + x) * std::pow(1.0 - x * x, 2.0 * k - 2.0);
}

/// max over [0, 1] of x (1 + x)^2 (1 - x^2)^{2k-2}, k >= 2. A 10^4-point grid
/// picks the cell, then bisection on the sign of the derivative refines it.
inline double c_k_constant(int k) {
    detail::require(k >= 2, "c_k is defined for k >= 2");
    constexpr int grid = 10000;
    int best = 0;
    double best_v = 0.0;
    for (int n = 0; n <= grid; ++n) {
        double v = c_k_objective(k, static_cast<double>(n) / grid);
        if (v > best_v) {
            best_v = v;
            best = n;
        }
    }
    double lo = std::max(0, best - 1) / static_cast<double>(grid);
    double hi = std::min(grid, best + 1) / static_cast<double>(grid);
    // sign of d/dx log of the objective, times x (1 - x^2) > 0
    auto slope = [k](double x) { return 1.0 + 2.0 * x - (4.0 * k - 1.0) * x * x; };
    double xs = roots::argmax_unimodal(slope, lo, hi);
    return c_k_objective(k, xs);
}

/// m (2 + m) / (4 m + 4)
inline double M_m(double m) { return m * (2.0 + m) / (4.0 * m + 4.0); }

struct LCondition {
    double L;
    double m;
    bool holds;
};

/// L(d_1..d_N) = 8 d_1 M_m^2 + sum_{k>=2} 2(2k-1) c_k d_k M_m^{2k}, compared with m.
inline LCondition l_condition(std::span<double const> d, double m) {
    detail::require(m > 0.0 && m <= 1.0, "m must lie in (0, 1]");
    for (double v : d) detail::require(v >= 0.0, "Q_N coefficients must be nonnegative");
    double M2 = M_m(m) * M_m(m);
    double L = 0.0;
    double Mpow = M2;
    for (std::size_t n = 0; n < d.size(); ++n) {
        int k = static_cast<int>(n) + 1;
        double term = k == 1 ? 8.0 * d[n] * Mpow
                             : 2.0 * (2.0 * k - 1.0) * c_k_constant(k) * d[n] * Mpow;
        L += term;
        Mpow *= M2;
    }
    return {L, m, L <= m};
}

/// G(t) = -4t^5 + 32t^4 - 82t^3 + 58t^2 + 38t - 42
///        + beta (-4t^4 + 20t^3 - 21t^2 - 20t + 25)
inline double g_poly(double t, double beta) {
    double base = ((((-4.0 * t + 32.0) * t - 82.0) * t + 58.0) * t + 38.0) * t - 42.0;
    double lin = (((-4.0 * t + 20.0) * t - 21.0) * t - 20.0) * t + 25.0;
    return base + beta * lin;
}

inline double g_poly_derivative(double t, double beta) {
    double base = (((-20.0 * t + 128.0) * t - 246.0) * t + 116.0) * t + 38.0;
    double lin = ((-16.0 * t + 60.0) * t - 42.0) * t - 20.0;
    return base + beta * lin;
}

}  // namespace octobohr
