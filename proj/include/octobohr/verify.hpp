#pragma once

/**
 * @file verify.hpp
 * @brief Verification sweeps of the Bohr inequalities over certified corpora.
 */

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "octobohr/corpus.hpp"
#include "octobohr/radii.hpp"
#include "octobohr/theorems.hpp"

namespace octobohr {

/// The coefficient condition on Q_N fails, so the D-inequality does not apply.
class InapplicableTheorem : public std::runtime_error {
public:
    explicit InapplicableTheorem(LCondition l)
        : std::runtime_error("coefficient condition L(d) <= m violated, theorem inapplicable"), l_{l} {}
    LCondition const& condition() const { return l_; }

private:
    LCondition l_;
};

struct Violation {
    Provenance provenance;
    double r = 0.0;
    double value = 0.0;
    double upper = 0.0;

    bool operator==(Violation const&) const = default;
};

struct GridSpec {
    int points = 64;
    double r_max = 0.0;            ///< largest radius reached by the grid
    bool per_entry_radius = false;  ///< theom17: each entry sweeps [0, R(a0)]
    std::uint64_t corpus_seed = 0;
    std::size_t corpus_size = 0;
    std::size_t order = default_order;

    bool operator==(GridSpec const&) const = default;
};

struct VerificationReport {
    int schema = 1;
    Theorem theorem = Theorem::thm14;
    BohrParams params;
    RadiusResult radius;
    GridSpec grid;
    double tolerance = 1e-9;
    double max_value = 0.0;  ///< max functional value over corpus and grid
    double max_upper = 0.0;  ///< same with truncation tails
    double margin = 0.0;     ///< 1 - max_upper
    std::vector<Violation> violations;
    std::optional<LCondition> l_condition;
    double runtime_seconds = 0.0;
    std::string timestamp;

    bool passed() const { return violations.empty(); }
};

struct VerifyOptions {
    int grid_points = 64;
    double tolerance = 1e-9;
    unsigned threads = 0;  ///< 0: OCTOBOHR_THREADS or hardware concurrency
    int sphere_angles = 256;
};

/// Worker count: the explicit request, else OCTOBOHR_THREADS, else the hardware.
inline unsigned thread_count(unsigned requested = 0) {
    if (requested > 0) return requested;
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (char const* env = std::getenv("OCTOBOHR_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return std::min(hw, static_cast<unsigned>(v));
    }
    return hw;
}

/// Runs fn(i) for i in [0, n) on up to `threads` workers. fn must only touch slot i.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    threads = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), std::max<std::size_t>(n, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += threads) fn(i);
        });
}

inline std::string utc_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

/// r_i = i / (points - 1) * radius, i = 0 .. points - 1.
inline std::vector<double> radius_grid(double radius, int points) {
    std::vector<double> g(static_cast<std::size_t>(std::max(points, 2)));
    for (std::size_t i = 0; i < g.size(); ++i)
        g[i] = i + 1 == g.size() ? radius : radius * static_cast<double>(i) / static_cast<double>(g.size() - 1);
    return g;
}

/// Evaluates the theorem's functional on every entry over an r-grid up to the
/// radius. Throws std::invalid_argument on out-of-range parameters or a corpus
/// of the wrong hypothesis class, and InapplicableTheorem when the Q_N
/// coefficient condition fails.
inline VerificationReport run_verify(Theorem t, BohrParams const& p, std::vector<CorpusEntry> const& corpus,
                                     VerifyOptions const& opt = {}) {
    auto start = std::chrono::steady_clock::now();
    validate_params(t, p);
    if (t == Theorem::theom17 && p.beta > theom17_beta_max)
        throw std::invalid_argument("beta must lie in [0, 8/9] for verification");
    VerificationReport rep;
    rep.theorem = t;
    rep.params = p;
    rep.tolerance = opt.tolerance;
    if (t == Theorem::bs13) {
        auto l = l_condition(p.d, p.m);
        rep.l_condition = l;
        if (!l.holds) throw InapplicableTheorem(l);
    }
    for (auto const& e : corpus)
        if (e.certificate != hypothesis(t)) throw std::invalid_argument("corpus certificate does not match the theorem");

    rep.grid.points = std::max(opt.grid_points, 2);
    rep.grid.per_entry_radius = t == Theorem::theom17;
    rep.grid.corpus_size = corpus.size();
    if (!corpus.empty()) {
        rep.grid.corpus_seed = corpus.front().provenance.seed;
        rep.grid.order = corpus.front().series.trunc_order();
    }

    std::optional<RadiusResult> common;
    if (!rep.grid.per_entry_radius) common = theorem_radius(t, p);

    struct EntryResult {
        double max_value = -std::numeric_limits<double>::infinity();
        double max_upper = -std::numeric_limits<double>::infinity();
        std::vector<Violation> violations;
        RadiusResult radius;
    };
    std::vector<EntryResult> results(corpus.size());
    parallel_for(corpus.size(), thread_count(opt.threads), [&](std::size_t i) {
        auto const& e = corpus[i];
        auto& out = results[i];
        out.radius = common ? *common : theorem_radius(t, p, e.series[0].re());
        for (double r : radius_grid(out.radius.value, rep.grid.points)) {
            auto v = theorem_functional(t, e.series, r, p, opt.sphere_angles);
            out.max_value = std::max(out.max_value, v.value());
            out.max_upper = std::max(out.max_upper, v.upper());
            if (!(v.upper() <= 1.0 + opt.tolerance)) out.violations.push_back({e.provenance, r, v.value(), v.upper()});
        }
    });

    rep.max_value = -std::numeric_limits<double>::infinity();
    rep.max_upper = -std::numeric_limits<double>::infinity();
    rep.radius = common ? *common : RadiusResult{};
    for (auto const& res : results) {
        rep.max_value = std::max(rep.max_value, res.max_value);
        rep.max_upper = std::max(rep.max_upper, res.max_upper);
        rep.violations.insert(rep.violations.end(), res.violations.begin(), res.violations.end());
        if (!common && (rep.radius.value == 0.0 || res.radius.value < rep.radius.value)) rep.radius = res.radius;
    }
    if (corpus.empty()) rep.max_value = rep.max_upper = 0.0;
    rep.grid.r_max = 0.0;
    for (auto const& res : results) rep.grid.r_max = std::max(rep.grid.r_max, res.radius.value);
    if (corpus.empty() && common) rep.grid.r_max = common->value;
    rep.margin = 1.0 - rep.max_upper;
    std::sort(rep.violations.begin(), rep.violations.end(), [](Violation const& a, Violation const& b) {
        return std::tie(a.provenance.seed, a.provenance.index, a.r) < std::tie(b.provenance.seed, b.provenance.index, b.r);
    });
    rep.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rep.timestamp = utc_timestamp();
    return rep;
}

struct SharpnessReport {
    int schema = 1;
    Theorem theorem = Theorem::thm14;
    BohrParams params;
    RadiusResult radius;
    double r = 0.0;
    double a = 0.0;
    double value = 0.0;
    double excess = 0.0;

    bool demonstrated() const { return excess > 0.0; }
};

/// Sharpness probe at |x| = r on the extremal family with parameter a and u = 1.
/// For theom17 without an explicit r the probe sits at R(a).
inline SharpnessReport run_sharpness(Theorem t, BohrParams const& p, std::optional<double> r, double a) {
    validate_params(t, p);
    if (!has_sharpness_claim(t)) throw std::invalid_argument("theorem states no sharpness of its radius");
    if (t == Theorem::bs13) {
        auto l = l_condition(p.d, p.m);
        if (!l.holds) throw InapplicableTheorem(l);
    }
    if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("a must lie in [0, 1)");
    SharpnessReport rep;
    rep.theorem = t;
    rep.params = p;
    rep.a = a;
    rep.radius = theorem_radius(t, p, t == Theorem::theom17 ? std::optional<double>(a) : std::nullopt);
    rep.r = r.value_or(t == Theorem::theom17 ? rep.radius.value : rep.radius.value + 0.01);
    if (!(rep.r < 1.0)) throw std::invalid_argument("r must be below 1");
    FunctionalValue v;
    try {
        v = sharpness_probe(t, rep.r, a, Octonion{1.0}, p);
    } catch (std::domain_error const& e) {
        throw std::invalid_argument(e.what());
    }
    rep.value = v.value();
    rep.excess = v.excess();
    return rep;
}

struct SweepRow {
    double r = 0.0;
    double max_functional = 0.0;
    int radius_marker = 0;  ///< 1 while r is inside the verified region

    bool operator==(SweepRow const&) const = default;
};

/// Max of the theorem's functional over the corpus at each r in [r_min, r_max].
/// The radius marker refers to the common radius, or to R(a_marker) for theom17.
inline std::vector<SweepRow> run_sweep(Theorem t, BohrParams const& p, std::vector<CorpusEntry> const& corpus,
                                       double r_min, double r_max, int points, double a_marker = 0.0,
                                       unsigned threads = 0) {
    validate_params(t, p);
    if (!(r_min >= 0.0 && r_max < 1.0 && r_min <= r_max)) throw std::invalid_argument("bad r range");
    points = std::max(points, 2);
    double radius = theorem_radius(t, p, t == Theorem::theom17 ? std::optional<double>(a_marker) : std::nullopt).value;
    std::vector<SweepRow> rows(static_cast<std::size_t>(points));
    parallel_for(rows.size(), thread_count(threads), [&](std::size_t i) {
        double r = r_min + (r_max - r_min) * static_cast<double>(i) / static_cast<double>(points - 1);
        double best = -std::numeric_limits<double>::infinity();
        for (auto const& e : corpus) best = std::max(best, theorem_functional(t, e.series, r, p).value());
        rows[i] = {r, corpus.empty() ? 0.0 : best, r <= radius ? 1 : 0};
    });
    return rows;
}

}  // namespace octobohr
