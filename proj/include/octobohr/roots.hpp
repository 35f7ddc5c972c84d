#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace octobohr::roots {

struct Bracket {
    double lo;
    double hi;
};

struct Root {
    double x;
    Bracket bracket;  ///< final bisection bracket, before polishing
    int iterations;
};

/// Bisection down to `width`, then `polish` Newton steps. A Newton step that
/// leaves the final bracket is discarded.
template <typename F, typename DF>
Root bisect_newton(F&& f, DF&& df, double lo, double hi, double width = 1e-13, int polish = 2) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return {lo, {lo, lo}, 0};
    if (fhi == 0.0) return {hi, {hi, hi}, 0};
    if ((flo < 0.0) == (fhi < 0.0)) throw std::invalid_argument("root not bracketed");
    int it = 0;
    while (hi - lo > width && it < 200) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        double fm = f(mid);
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        ++it;
    }
    Bracket br{lo, hi};
    double x = 0.5 * (lo + hi);
    for (int k = 0; k < polish; ++k) {
        double d = df(x);
        if (d == 0.0 || !std::isfinite(d)) break;
        double next = x - f(x) / d;
        if (next < br.lo || next > br.hi) break;
        x = next;
    }
    return {x, br, it};
}

/// Bisection on the sign of a derivative: locates the interior maximizer of a
/// unimodal function whose derivative changes sign from + to - once in [lo, hi].
template <typename DF>
double argmax_unimodal(DF&& df, double lo, double hi, double width = 1e-14) {
    if (df(lo) <= 0.0) return lo;
    if (df(hi) >= 0.0) return hi;
    while (hi - lo > width) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (df(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace octobohr::roots
