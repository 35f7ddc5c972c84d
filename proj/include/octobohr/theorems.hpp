#pragma once

/**
 * @file theorems.hpp
 * @brief Registry tying each Bohr-type inequality to its hypothesis class,
 *        its functional and its radius.
 */

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "octobohr/functionals.hpp"
#include "octobohr/radii.hpp"

namespace octobohr {

enum class Theorem { thm14, bs12, thm15, bs13, th15, thm17, theom17, thmF };

inline constexpr std::array<Theorem, 8> all_theorems{Theorem::thm14, Theorem::bs12, Theorem::thm15,
                                                     Theorem::bs13,  Theorem::th15, Theorem::thm17,
                                                     Theorem::theom17, Theorem::thmF};

inline std::string_view to_string(Theorem t) {
    switch (t) {
        case Theorem::thm14: return "thm14";
        case Theorem::bs12: return "bs12";
        case Theorem::thm15: return "thm15";
        case Theorem::bs13: return "bs13";
        case Theorem::th15: return "th15";
        case Theorem::thm17: return "thm17";
        case Theorem::theom17: return "theom17";
        case Theorem::thmF: return "thmF";
    }
    return "?";
}

inline Theorem theorem_from_string(std::string_view s) {
    for (auto t : all_theorems)
        if (to_string(t) == s) return t;
    throw std::invalid_argument("unknown theorem: " + std::string(s));
}

/// Hypothesis class: |f| <= 1 on the ball, or f(ball) inside {Re x <= 1}.
inline Certificate hypothesis(Theorem t) {
    switch (t) {
        case Theorem::thm14:
        case Theorem::bs12:
        case Theorem::thm15:
        case Theorem::bs13: return Certificate::unit_ball;
        default: return Certificate::halfspace;
    }
}

/// Radius sharpness is claimed for these; the two refined-by-|f - f(0)|
/// inequalities come without it.
inline bool has_sharpness_claim(Theorem t) { return t != Theorem::bs12 && t != Theorem::th15; }

/// Beyond this beta the theom17 inequality fails at its own radius.
inline constexpr double theom17_beta_max = 8.0 / 9.0;

/// Throws std::invalid_argument when the parameters leave the theorem's range.
inline void validate_params(Theorem t, BohrParams const& p) {
    auto need = [](bool ok, char const* what) {
        if (!ok) throw std::invalid_argument(what);
    };
    switch (t) {
        case Theorem::thm14: need(p.m > 0.0 && p.m <= 2.0, "m must lie in (0, 2]"); break;
        case Theorem::bs12:
            need(p.m > 0.0 && p.m <= 2.0, "m must lie in (0, 2]");
            need(p.lambda >= 0.0, "lambda must be nonnegative");
            need(p.q >= 1.0, "q must be at least 1");
            break;
        case Theorem::thm15: need(p.m > 0.0 && p.m <= 1.0, "m must lie in (0, 1]"); break;
        case Theorem::bs13:
            need(p.m > 0.0 && p.m <= 1.0, "m must lie in (0, 1]");
            for (double v : p.d) need(v >= 0.0, "Q_N coefficients must be nonnegative");
            break;
        case Theorem::th15:
            need(p.m > 0.0 && p.m <= 1.0, "m must lie in (0, 1]");
            need(p.lambda >= 0.0, "lambda must be nonnegative");
            need(p.j >= 1.0, "j must be at least 1");
            break;
        case Theorem::thm17: break;
        case Theorem::theom17: need(p.beta >= 0.0, "beta must be nonnegative"); break;
        case Theorem::thmF: break;
    }
}

/// Radius of the theorem. theom17 depends on a0 = f(0).
inline RadiusResult theorem_radius(Theorem t, BohrParams const& p, std::optional<double> a0 = std::nullopt) {
    switch (t) {
        case Theorem::thm14:
        case Theorem::thm15:
        case Theorem::bs13: return radius_R_m(p.m);
        case Theorem::bs12: return radius_R_mlq(p.m, p.lambda, p.q);
        case Theorem::th15: return radius_Rstar_mlj(p.m, p.lambda, p.j);
        case Theorem::thm17: return radius_Rstar_cubic();
        case Theorem::theom17: return radius_R_a0(a0.value_or(0.0));
        case Theorem::thmF: return radius_distance_form();
    }
    throw std::logic_error("unreachable");
}

/// The theorem's functional at |x| = r. For the two point-dependent ones the
/// deviation |f(x) - f(0)| is maximized over the sphere (exact in the unit,
/// `n_angles` samples in the angle).
inline FunctionalValue theorem_functional(Theorem t, SliceSeries const& f, double r, BohrParams const& p,
                                          int n_angles = 256) {
    switch (t) {
        case Theorem::thm14: return functional_A(f, r, p.m);
        case Theorem::bs12: return functional_A_plus_deviation_sphere(f, r, p.m, p.lambda, p.q, n_angles);
        case Theorem::thm15: return functional_C(f, r, p.m);
        case Theorem::bs13: return functional_D(f, r, p.m, p.d);
        case Theorem::th15: return functional_A_plus_deviation_sphere(f, r, p.m, p.lambda, p.j, n_angles);
        case Theorem::thm17: return functional_E(f, r);
        case Theorem::theom17: return functional_F(f, r, p.beta);
        case Theorem::thmF: return functional_distance_form(f, r);
    }
    throw std::logic_error("unreachable");
}

}  // namespace octobohr
