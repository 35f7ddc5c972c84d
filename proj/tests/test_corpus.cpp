#include <gtest/gtest.h>

#include <random>
#include <set>

#include "octobohr/corpus.hpp"

using namespace octobohr;

namespace {

double max_coeff_gap(SliceSeries const& a, SliceSeries const& b) {
    double d = 0.0;
    std::size_t n = std::min(a.trunc_order(), b.trunc_order());
    for (std::size_t k = 0; k <= n; ++k) d = std::max(d, (a[k] - b[k]).norm());
    return d;
}

}  // namespace

TEST(Extremal, FaCoefficients) {
    auto u = Octonion::unit(1);
    auto f = make_f_a(0.5, u);
    EXPECT_LE((f[0] - u * 0.5).norm(), 1e-16);
    EXPECT_LE((f[1] + u * 0.75).norm(), 1e-16);
    EXPECT_LE((f[3] + u * (0.75 * 0.25)).norm(), 1e-16);
    // a = 0, u = 1 is f(x) = -x
    auto g = make_f_a(0.0, Octonion{1.0});
    EXPECT_EQ(g[0].norm(), 0.0);
    EXPECT_EQ(g[1].re(), -1.0);
    for (std::size_t k = 2; k <= g.trunc_order(); ++k) EXPECT_EQ(g[k].norm(), 0.0);
}

TEST(Extremal, FaDualConstruction) {
    std::mt19937_64 rng(1);
    for (double a : {0.0, 0.1, 0.5, 0.9, 0.99}) {
        for (int n = 0; n < 4; ++n) {
            auto u = n == 0 ? Octonion::unit(1) : random_unit_octonion(rng);
            EXPECT_LE(max_coeff_gap(make_f_a(a, u), make_f_a_via_reciprocal(a, u)), 1e-10) << a;
        }
    }
}

TEST(Extremal, GaDualConstruction) {
    std::mt19937_64 rng(2);
    for (double a : {0.0, 0.3, 0.8, 0.999}) {
        auto u = random_unit_octonion(rng);
        auto g1 = make_g_a(a, u);
        auto g2 = make_g_a_via_reciprocal(a, u);
        EXPECT_EQ(g2.trunc_order(), g1.trunc_order());
        EXPECT_LE(max_coeff_gap(g1, g2), 1e-10);
    }
}

TEST(Extremal, GaCoefficientsAndDistance) {
    auto g = make_g_a(0.3, Octonion{1.0});
    EXPECT_EQ(g[0].re(), 0.3);
    for (std::size_t k = 1; k <= g.trunc_order(); ++k) EXPECT_NEAR(g[k].norm(), 1.4, 1e-15);
    EXPECT_DOUBLE_EQ(halfspace_distance(g), 0.7);
    auto near_one = make_g_a(1.0 - 1e-12, Octonion{1.0});
    EXPECT_LE(near_one[1].norm(), 3e-12);
}

TEST(Extremal, DomainErrors) {
    EXPECT_THROW(make_f_a(1.0, Octonion{1.0}), std::domain_error);
    EXPECT_THROW(make_f_a(-0.1, Octonion{1.0}), std::domain_error);
    EXPECT_THROW(make_f_a(0.5, Octonion{2.0}), std::domain_error);
    EXPECT_THROW(make_g_a(1.2, Octonion{1.0}), std::domain_error);
}

TEST(Extremal, FaIsBoundedByOne) {
    std::mt19937_64 rng(3);
    auto f = make_f_a(0.3, Octonion::unit(1));
    auto est = sup_norm_estimate(f, 0.99, 16, 512, 4);
    EXPECT_LE(est.sampled, 1.0 + 1e-9);
    EXPECT_TRUE(certify(f, Certificate::unit_ball).ok);
}

TEST(Extremal, ConvexCombinationOfGa) {
    auto g = make_g_a(0.2, Octonion{1.0}).scaled(0.5) + make_g_a(0.8, Octonion{1.0}).scaled(0.5);
    EXPECT_NEAR(g[0].re(), 0.5, 1e-15);
    auto c = certify(g, Certificate::halfspace);
    EXPECT_TRUE(c.ok);
    EXPECT_LE(c.boundary_max, 1.0 + 1e-9);
}

TEST(Corpus, UnitBallEntriesAreCertified) {
    auto corpus = generate_corpus(Certificate::unit_ball, 11, 40);
    std::set<std::string> tags;
    for (auto const& e : corpus) {
        tags.insert(e.provenance.tag);
        EXPECT_EQ(e.certificate, Certificate::unit_ball);
        EXPECT_TRUE(coefficient_bounds_check(e.series, Certificate::unit_ball).holds);
        EXPECT_TRUE(certify(e.series, Certificate::unit_ball).ok);
        auto est = sup_norm_estimate(e.series, 0.9, 8, 128, e.provenance.index);
        EXPECT_LE(est.sampled, 1.0 + 1e-9);
    }
    EXPECT_EQ(tags.size(), 5u);
}

TEST(Corpus, HalfspaceEntriesAreCertified) {
    auto corpus = generate_corpus(Certificate::halfspace, 12, 40);
    for (auto const& e : corpus) {
        EXPECT_EQ(e.certificate, Certificate::halfspace);
        EXPECT_LE(e.series[0].im().norm(), 1e-15);
        EXPECT_GE(e.series[0].re(), 0.0);
        EXPECT_LT(e.series[0].re(), 1.0);
        EXPECT_EQ(e.provenance.params.at("a0"), e.series[0].re());
        EXPECT_TRUE(coefficient_bounds_check(e.series, Certificate::halfspace).holds);
        EXPECT_TRUE(certify(e.series, Certificate::halfspace).ok);
    }
}

TEST(Corpus, Deterministic) {
    auto a = generate_corpus(Certificate::unit_ball, 5, 15);
    auto b = generate_corpus(Certificate::unit_ball, 5, 15);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].provenance, b[i].provenance);
        EXPECT_EQ(max_coeff_gap(a[i].series, b[i].series), 0.0);
    }
    auto c = generate_corpus(Certificate::unit_ball, 6, 15);
    EXPECT_GT(max_coeff_gap(a[0].series, c[0].series), 0.0);
}

TEST(Corpus, ConstantEntryGivesPowerOfModulus) {
    auto corpus = generate_corpus(Certificate::unit_ball, 3, 10);
    for (auto const& e : corpus) {
        if (e.provenance.tag != "constant") continue;
        double mod = e.series[0].norm();
        EXPECT_NEAR(mod, e.provenance.params.at("modulus"), 1e-15);
        EXPECT_NEAR(functional_A(e.series, 0.3, 0.5).value(), std::sqrt(mod), 1e-15);
    }
}

TEST(Corpus, ReciprocalResidual) {
    auto corpus = generate_corpus(Certificate::unit_ball, 7, 40);
    auto hs = generate_corpus(Certificate::halfspace, 7, 40);
    corpus.insert(corpus.end(), hs.begin(), hs.end());
    int checked = 0;
    for (auto const& e : corpus) {
        if (e.series[0].norm() < 0.1) continue;
        std::size_t n = e.series.is_polynomial() ? 40 : std::min<std::size_t>(40, e.series.trunc_order());
        auto g = slice_reciprocal(e.series, n);
        EXPECT_LE(reciprocal_residual(e.series, g), 1e-9) << e.provenance.tag;
        ++checked;
    }
    EXPECT_GT(checked, 20);
}

TEST(Sharpness, ProbeMisuse) {
    BohrParams p;
    EXPECT_THROW(sharpness_probe(Theorem::thm14, 0.3, 0.999, Octonion{1.0}, p), std::domain_error);
    EXPECT_NO_THROW(sharpness_probe(Theorem::thm14, 0.34, 0.999, Octonion{1.0}, p));
}

TEST(Sharpness, Thm14BeyondRadius) {
    BohrParams p;
    auto v = sharpness_probe(Theorem::thm14, 0.35, 0.999, Octonion{1.0}, p);
    EXPECT_GT(v.excess(), 0.0);
    double closed = 0.999 + (1 - 0.999 * 0.999) * 0.35 / (1 - 0.999 * 0.35);
    EXPECT_NEAR(v.value(), closed, 1e-13);
}

TEST(Sharpness, Thm17BeyondRadius) {
    // g_0 meets the bound with equality at the cubic root and exceeds it beyond
    BohrParams p;
    double rs = radius_Rstar_cubic().value;
    EXPECT_NEAR(theorem_functional(Theorem::thm17, make_g_a(0.0, Octonion{1.0}), rs, p).excess(), 0.0, 1e-12);
    EXPECT_GT(sharpness_probe(Theorem::thm17, 0.26, 0.0, Octonion{1.0}, p).excess(), 0.0);
    // near a = 1 the excess is (1 - a)(2r/(1 - r) - 1) to first order, negative below r = 1/3
    double a = 0.9999;
    double r = 0.26;
    double first = (1.0 - a) * (2.0 * r / (1.0 - r) - 1.0);
    EXPECT_NEAR(sharpness_probe(Theorem::thm17, r, a, Octonion{1.0}, p).excess(), first, 1e-7);
}

TEST(Sharpness, Theom17BetaAboveThreshold) {
    BohrParams p;
    p.beta = 0.9;
    double a = 0.999999;
    double r = radius_R_a0(a).value;
    EXPECT_GT(sharpness_probe(Theorem::theom17, r, a, Octonion{1.0}, p).excess(), 0.0);
    p.beta = 0.8;
    EXPECT_THROW(sharpness_probe(Theorem::theom17, r, a, Octonion{1.0}, p), std::domain_error);
}
