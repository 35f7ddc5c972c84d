#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "octobohr/corpus.hpp"
#include "octobohr/slice_series.hpp"

using namespace octobohr;

namespace {

void expect_near(Octonion const& a, Octonion const& b, double tol) {
    EXPECT_LE((a - b).norm(), tol) << a << " vs " << b;
}

Octonion random_in_ball(std::mt19937_64& rng, double rmax) {
    auto x = random_octonion(rng);
    double r = std::uniform_real_distribution<double>(0.0, rmax)(rng);
    return x * (r / x.norm());
}

SliceSeries random_poly(std::mt19937_64& rng, std::size_t degree) {
    std::vector<Octonion> c(degree + 1);
    for (auto& a : c) a = random_octonion(rng, 0.5);
    return SliceSeries{std::move(c)};
}

}  // namespace

TEST(SliceSeries, PowersStayInTheSlice) {
    std::mt19937_64 rng(1);
    for (int n = 0; n < 100; ++n) {
        auto x = random_in_ball(rng, 0.99);
        Octonion p{1.0};
        for (int k = 1; k < 8; ++k) {
            p = p * x;
            expect_near(slice_power(x, k), p, 1e-13);
        }
    }
}

TEST(SliceSeries, EvaluateMatchesDirectSum) {
    std::mt19937_64 rng(2);
    auto f = random_poly(rng, 6);
    for (int n = 0; n < 100; ++n) {
        auto x = random_in_ball(rng, 0.95);
        Octonion direct{};
        Octonion xk{1.0};
        for (std::size_t k = 0; k <= f.trunc_order(); ++k) {
            direct += xk * f[k];
            xk = xk * x;
        }
        expect_near(evaluate(f, x), direct, 1e-13);
    }
}

TEST(SliceSeries, EvaluateOutsideBallThrows) {
    auto f = SliceSeries::real({1.0, 2.0});
    EXPECT_THROW(evaluate(f, Octonion{1.0}), std::domain_error);
    EXPECT_THROW(evaluate(f, Octonion::unit(3) * 1.5), std::domain_error);
}

TEST(SliceSeries, XTimesOneMinusXInverse) {
    // x * (1 - x)^{-*} = sum_{k>=1} x^k
    auto inv = slice_reciprocal(SliceSeries::real({1.0, -1.0}), 50);
    auto g = slice_product(SliceSeries::real({0.0, 1.0}), inv);
    EXPECT_NEAR(g[0].norm(), 0.0, 0.0);
    for (std::size_t k = 1; k <= 50; ++k) expect_near(g[k], Octonion{1.0}, 1e-15);
}

TEST(SliceSeries, ProductIsConvolution) {
    auto i = Octonion::unit(1);
    auto l = Octonion::unit(4);
    SliceSeries f{std::vector<Octonion>{i, Octonion{1.0}}};
    SliceSeries g{std::vector<Octonion>{l, i}};
    auto h = slice_product(f, g);
    ASSERT_EQ(h.trunc_order(), 2u);
    EXPECT_TRUE(h.is_polynomial());
    expect_near(h[0], i * l, 0.0);
    expect_near(h[1], i * i + l, 0.0);
    expect_near(h[2], i, 0.0);
}

TEST(SliceSeries, NormalFunctionHasRealCoefficients) {
    std::mt19937_64 rng(3);
    for (int n = 0; n < 20; ++n) {
        auto f = random_poly(rng, 8);
        auto nf = normal(f);
        for (auto const& a : nf.coeffs()) EXPECT_LE(a.im().norm(), 1e-12);
    }
    auto fa = make_f_a(0.7, Octonion::unit(6));
    auto nfa = normal(fa);
    for (auto const& a : nfa.coeffs()) EXPECT_LE(a.im().norm(), 1e-12);
}

TEST(SliceSeries, ReciprocalInvertsTheProduct) {
    std::mt19937_64 rng(4);
    for (int n = 0; n < 20; ++n) {
        auto f = random_poly(rng, 5);
        if (f[0].norm() < 0.1) continue;
        auto g = slice_reciprocal(f, 40);
        EXPECT_LE(reciprocal_residual(f, g), 1e-13);
        auto h = slice_product(f, g);
        EXPECT_EQ(h.trunc_order(), 40u);
    }
}

TEST(SliceSeries, ReciprocalAtZeroThrows) {
    auto f = SliceSeries::real({0.0, 1.0});
    EXPECT_THROW(slice_reciprocal(f, 10), std::domain_error);
}

TEST(SliceSeries, ReciprocalBeyondKnownOrderThrows) {
    auto f = make_f_a(0.5, Octonion{1.0}, 20);
    EXPECT_THROW(slice_reciprocal(f, 21), std::invalid_argument);
    EXPECT_NO_THROW(slice_reciprocal(f, 20));
}

TEST(SliceSeries, ReciprocalValueIsPointwiseInverseOnRealAxis) {
    auto f = SliceSeries::real({2.0, 0.5, -0.25});
    auto g = slice_reciprocal(f, 200);
    for (double t : {-0.5, 0.0, 0.3, 0.7}) {
        Octonion x{t};
        expect_near(evaluate(g, x), evaluate(f, x).inv(), 1e-13);
    }
}

TEST(SliceSeries, DerivativeOfPolynomial) {
    auto f = SliceSeries::real({1.0, 2.0, 3.0});
    auto d = slice_derivative(f);
    ASSERT_EQ(d.trunc_order(), 1u);
    expect_near(d[0], Octonion{2.0}, 0.0);
    expect_near(d[1], Octonion{6.0}, 0.0);
    EXPECT_EQ(slice_derivative(SliceSeries::constant(Octonion{3.0})).trunc_order(), 0u);
}

TEST(SliceSeries, StemFunctionSymmetry) {
    std::mt19937_64 rng(5);
    auto f = random_poly(rng, 7);
    for (int n = 0; n < 50; ++n) {
        auto J = random_imaginary_unit(rng);
        std::complex<double> z{std::uniform_real_distribution<double>(-0.6, 0.6)(rng),
                               std::uniform_real_distribution<double>(0.01, 0.6)(rng)};
        auto s = stem_at(f, z, J);
        auto sb = stem_at(f, std::conj(z), J);
        expect_near(sb.F1, s.F1, 1e-13);
        expect_near(sb.F2, -s.F2, 1e-13);
        // the stem does not depend on the slice used to read it off
        auto K = random_imaginary_unit(rng);
        auto s2 = stem_at(f, z, K);
        expect_near(s2.F1, s.F1, 1e-13);
        expect_near(s2.F2, s.F2, 1e-13);
        auto [F1, F2] = slice_parts(f, z);
        expect_near(F1, s.F1, 1e-13);
        expect_near(F2, s.F2, 1e-13);
    }
}

TEST(SliceSeries, StemVanishesOnRealAxis) {
    auto f = SliceSeries{std::vector<Octonion>{Octonion::unit(2), Octonion::unit(5)}};
    auto s = stem_components(f, Octonion{0.4});
    EXPECT_EQ(s.F2.norm(), 0.0);
}

TEST(SliceSeries, SplittingBasisIsOrthonormal) {
    std::mt19937_64 rng(6);
    for (int n = 0; n < 50; ++n) {
        auto I = random_imaginary_unit(rng);
        auto b = splitting_basis(I);
        for (std::size_t p = 0; p < 8; ++p)
            for (std::size_t q = 0; q < 8; ++q) EXPECT_NEAR(dot(b[p], b[q]), p == q ? 1.0 : 0.0, 1e-12);
    }
    EXPECT_THROW(splitting_basis(Octonion{1.0}), std::domain_error);
    EXPECT_THROW(splitting_basis(Octonion::unit(1) * 2.0), std::domain_error);
}

TEST(SliceSeries, SplittingReconstructs) {
    std::mt19937_64 rng(7);
    auto f = random_poly(rng, 6);
    for (int n = 0; n < 50; ++n) {
        auto I = random_imaginary_unit(rng);
        std::complex<double> z{std::uniform_real_distribution<double>(-0.6, 0.6)(rng),
                               std::uniform_real_distribution<double>(-0.6, 0.6)(rng)};
        auto parts = split_components(f, I, z);
        expect_near(split_reconstruct(parts, I), evaluate(f, in_slice(z, I)), 1e-13);
    }
}

TEST(SliceSeries, SplitComponentsAreHolomorphic) {
    // Cauchy-Riemann by central differences
    std::mt19937_64 rng(8);
    auto f = random_poly(rng, 5);
    double h = 1e-5;
    for (int n = 0; n < 20; ++n) {
        auto I = random_imaginary_unit(rng);
        std::complex<double> z{std::uniform_real_distribution<double>(-0.5, 0.5)(rng),
                               std::uniform_real_distribution<double>(-0.5, 0.5)(rng)};
        auto dx_p = split_components(f, I, z + h);
        auto dx_m = split_components(f, I, z - h);
        auto dy_p = split_components(f, I, z + std::complex<double>(0, h));
        auto dy_m = split_components(f, I, z - std::complex<double>(0, h));
        for (std::size_t c = 0; c < 4; ++c) {
            auto fx = (dx_p[c] - dx_m[c]) / (2 * h);
            auto fy = (dy_p[c] - dy_m[c]) / (2 * h);
            // df/dy = i df/dx
            EXPECT_LE(std::abs(fy - std::complex<double>(0, 1) * fx), 1e-8);
        }
    }
}

TEST(SliceSeries, MaxOverUnitsMatchesSampling) {
    std::mt19937_64 rng(9);
    for (int n = 0; n < 20; ++n) {
        auto F1 = random_octonion(rng);
        auto F2 = random_octonion(rng);
        double mx = max_abs_over_units(F1, F2);
        double mr = max_re_over_units(F1, F2);
        double sa = 0.0, sr = -1e300;
        for (int k = 0; k < 20000; ++k) {
            auto J = random_imaginary_unit(rng);
            sa = std::max(sa, (F1 + J * F2).norm());
            sr = std::max(sr, (F1 + J * F2).re());
        }
        EXPECT_LE(sa, mx + 1e-12);
        EXPECT_GT(sa, mx * 0.97);
        EXPECT_LE(sr, mr + 1e-12);
    }
}

TEST(SliceSeries, SupNormBoundDominatesSampling) {
    std::mt19937_64 rng(10);
    auto f = random_poly(rng, 6);
    auto est = sup_norm_estimate(f, 0.9, 32, 256, 11);
    double bound = sup_norm_bound(f, 0.9);
    EXPECT_LE(est.sampled, bound);
    // refining the angle grid can only tighten the bound, by at most the Lipschitz slack
    double fine = sup_norm_bound(f, 0.9, 1 << 16);
    double lip = 0.0;
    for (std::size_t k = 1; k <= f.trunc_order(); ++k) lip += k * std::pow(0.9, k) * f[k].norm();
    EXPECT_LE(fine, bound + 1e-12);
    EXPECT_LE(bound - fine, lip * std::numbers::pi / 4096 + 1e-12);
    EXPECT_THROW(sup_norm_estimate(f, 1.0, 4, 4), std::domain_error);
}

TEST(SliceSeries, TailBookkeeping) {
    auto f = make_f_a(0.5, Octonion{1.0}, 30);
    ASSERT_TRUE(f.tail_coeff_bound());
    EXPECT_NEAR(*f.tail_coeff_bound(), 0.75 * std::pow(0.5, 30), 1e-20);
    auto t = f.truncated(10);
    EXPECT_EQ(t.trunc_order(), 10u);
    EXPECT_NEAR(*t.tail_coeff_bound(), 0.75 * std::pow(0.5, 10), 1e-18);
    // exact polynomial minus a truncated series keeps the series' order
    auto d = SliceSeries::constant(Octonion{1.0}) - f;
    EXPECT_EQ(d.trunc_order(), 30u);
    EXPECT_FALSE(d.is_polynomial());
    EXPECT_EQ(SliceSeries::real({1.0, 2.0}).tail_bound(0.5), 0.0);
    EXPECT_TRUE(std::isinf(SliceSeries(std::vector<Octonion>{Octonion{1.0}}, std::nullopt).tail_bound(0.5)));
}

TEST(SliceSeries, TfIdentityOnCorpus) {
    auto corpus = generate_corpus(Certificate::unit_ball, 7, 20);
    std::mt19937_64 rng(12);
    int functions = 0;
    for (auto const& e : corpus) {
        if (e.provenance.tag == "constant") continue;
        int points = 0;
        for (int tries = 0; points < 20 && tries < 500; ++tries) {
            auto x = random_in_ball(rng, 0.6);
            try {
                EXPECT_LE(t_f_identity_check(e.series, x), 1e-9);
                ++points;
            } catch (std::domain_error const&) {
            }
        }
        EXPECT_EQ(points, 20) << e.provenance.tag;
        if (++functions == 10) break;
    }
    EXPECT_EQ(functions, 10);
}

TEST(SliceSeries, TfRejectsRealPoints) {
    auto f = make_f_a(0.5, Octonion::unit(1), 50);
    EXPECT_THROW(t_f_map(f, Octonion{0.2}), std::domain_error);
}
