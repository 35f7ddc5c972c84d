// Majorant functional of the extremal f_a against r: the value crosses 1 at
// the radius m / (2 + m) as a approaches 1.

#include <cstdio>

#include "octobohr/octobohr.hpp"

int main() {
    using namespace octobohr;
    double m = 1.0;
    double radius = radius_R_m(m).value;
    std::printf("radius %.12f\n", radius);
    std::printf("%8s %14s %14s %14s\n", "r", "a=0.9", "a=0.99", "a=0.999");
    for (int n = 0; n <= 10; ++n) {
        double r = 0.25 + 0.02 * n;
        std::printf("%8.3f", r);
        for (double a : {0.9, 0.99, 0.999}) {
            auto f = make_f_a(a, Octonion::unit(1));
            std::printf(" %14.10f", functional_A(f, r, m).value());
        }
        std::printf("%s\n", r <= radius ? "" : "   beyond radius");
    }

    auto corpus = generate_corpus(Certificate::unit_ball, 1, 20);
    auto rep = run_verify(Theorem::thm14, {}, corpus);
    std::printf("20-entry corpus: max %.12f, %zu violations\n", rep.max_value, rep.violations.size());
}
