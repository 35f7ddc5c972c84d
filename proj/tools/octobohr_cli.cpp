// octobohr: radius computations, verification sweeps and sharpness probes
// for Bohr-type inequalities of slice regular octonionic functions.
//
// Exit codes: 0 ok, 1 verification/sharpness negative, 2 invalid parameters,
// 3 coefficient condition violated, 4 I/O failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "octobohr/octobohr.hpp"

namespace {

using namespace octobohr;

enum Exit : int { ok = 0, negative = 1, invalid = 2, inapplicable = 3, io_failure = 4 };

struct Common {
    std::string theorem = "thm14";
    BohrParams params;
    std::string out;
};

struct CorpusOpts {
    std::size_t size = 100;
    std::uint64_t seed = 7;
    std::size_t order = default_order;
    std::string in;
    std::string export_to;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--theorem", c.theorem, "thm14|bs12|thm15|bs13|th15|thm17|theom17|thmF")
        ->check(CLI::IsMember({"thm14", "bs12", "thm15", "bs13", "th15", "thm17", "theom17", "thmF"}));
    cmd->add_option("--m", c.params.m, "exponent m");
    cmd->add_option("--lambda", c.params.lambda, "deviation weight");
    cmd->add_option("--q", c.params.q, "deviation exponent (bs12)");
    cmd->add_option("--j", c.params.j, "deviation exponent (th15)");
    cmd->add_option("--d", c.params.d, "Q_N coefficients d1,...,dN")->delimiter(',');
    cmd->add_option("--beta", c.params.beta, "weight of the area term (theom17)");
    cmd->add_option("--out", c.out, "output file");
}

void add_corpus(CLI::App* cmd, CorpusOpts& c) {
    cmd->add_option("--corpus", c.size, "number of generated corpus entries");
    cmd->add_option("--seed", c.seed, "corpus seed");
    cmd->add_option("--order", c.order, "truncation order of generated entries");
    cmd->add_option("--corpus-in", c.in, "read the corpus from a JSON file instead of generating it");
    cmd->add_option("--corpus-out", c.export_to, "write the corpus as JSON");
}

std::vector<CorpusEntry> load_corpus(CorpusOpts const& c, Certificate mode) {
    std::vector<CorpusEntry> corpus;
    if (!c.in.empty()) {
        corpus = corpus_from_json(parse_json(read_file(c.in)));
    } else {
        corpus = generate_corpus(mode, c.seed, c.size, c.order);
    }
    if (!c.export_to.empty()) write_file(c.export_to, corpus_to_json(corpus).dump(2) + "\n");
    return corpus;
}

void emit(std::string const& path, std::string const& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        write_file(path, text);
    }
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.16g", v);
    return buf;
}

int cmd_radius(Common const& c, std::optional<double> a0) {
    auto t = theorem_from_string(c.theorem);
    validate_params(t, c.params);
    auto r = theorem_radius(t, c.params, a0);
    std::cout << "theorem:  " << c.theorem << "\n"
              << "radius:   " << fmt(r.value) << "\n"
              << "method:   " << to_string(r.method) << "\n"
              << "residual: " << fmt(r.residual) << "\n";
    if (!c.out.empty()) {
        json j = {{"schema", report_schema},
                  {"kind", "radius"},
                  {"theorem", c.theorem},
                  {"params", to_json(c.params)},
                  {"radius", to_json(r)}};
        if (a0) j["a0"] = *a0;
        write_file(c.out, j.dump(2) + "\n");
    }
    return ok;
}

int cmd_verify(Common const& c, CorpusOpts const& co, VerifyOptions const& vo) {
    auto t = theorem_from_string(c.theorem);
    validate_params(t, c.params);
    if (t == Theorem::bs13) {
        // checked before generating anything
        auto l = l_condition(c.params.d, c.params.m);
        if (!l.holds) throw InapplicableTheorem(l);
    }
    auto corpus = load_corpus(co, hypothesis(t));
    auto rep = run_verify(t, c.params, corpus, vo);
    std::cout << "theorem:    " << c.theorem << "\n"
              << "radius:     " << fmt(rep.radius.value) << (rep.grid.per_entry_radius ? " (smallest over entries)" : "")
              << "\n"
              << "corpus:     " << rep.grid.corpus_size << " entries, seed " << rep.grid.corpus_seed << "\n"
              << "grid:       " << rep.grid.points << " points up to " << fmt(rep.grid.r_max) << "\n"
              << "max value:  " << fmt(rep.max_value) << "\n"
              << "max upper:  " << fmt(rep.max_upper) << "\n"
              << "margin:     " << fmt(rep.margin) << "\n"
              << "violations: " << rep.violations.size() << "\n";
    for (auto const& v : rep.violations)
        std::cout << "  entry " << v.provenance.index << " (" << v.provenance.tag << ") r=" << fmt(v.r)
                  << " value=" << fmt(v.value) << " upper=" << fmt(v.upper) << "\n";
    if (!c.out.empty()) write_file(c.out, to_json(rep).dump(2) + "\n");
    return rep.passed() ? ok : negative;
}

int cmd_sharpness(Common const& c, std::optional<double> r, double a) {
    auto t = theorem_from_string(c.theorem);
    auto rep = run_sharpness(t, c.params, r, a);
    std::cout << "theorem: " << c.theorem << "\n"
              << "radius:  " << fmt(rep.radius.value) << "\n"
              << "r:       " << fmt(rep.r) << "\n"
              << "a:       " << fmt(rep.a) << "\n"
              << "value:   " << fmt(rep.value) << "\n"
              << "excess:  " << fmt(rep.excess) << "\n"
              << (rep.demonstrated() ? "sharpness demonstrated\n" : "no excess: sharpness not demonstrated\n");
    if (!c.out.empty()) write_file(c.out, to_json(rep).dump(2) + "\n");
    return rep.demonstrated() ? ok : negative;
}

int cmd_sweep(Common const& c, CorpusOpts const& co, double rmin, double rmax, int points, double a,
              bool with_extremal) {
    auto t = theorem_from_string(c.theorem);
    validate_params(t, c.params);
    if (t == Theorem::bs13) {
        auto l = l_condition(c.params.d, c.params.m);
        if (!l.holds) throw InapplicableTheorem(l);
    }
    if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("a must lie in [0, 1)");
    auto corpus = co.size == 0 && co.in.empty() ? std::vector<CorpusEntry>{} : load_corpus(co, hypothesis(t));
    if (with_extremal)
        corpus.push_back({extremal_for(t, a, Octonion{1.0}, co.order), hypothesis(t), {"extremal", {{"a", a}}, 0, 0}});
    auto rows = run_sweep(t, c.params, corpus, rmin, rmax, points, a);
    emit(c.out, sweep_to_csv(rows));
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bohr-type inequalities for slice regular octonionic functions"};
    app.require_subcommand(1);

    Common common;
    CorpusOpts corpus;
    VerifyOptions vopt;
    std::optional<double> a0;
    std::optional<double> r_probe;
    double a = 0.999;
    double rmin = 0.0;
    double rmax = 0.5;
    int sweep_points = 101;
    bool no_extremal = false;

    auto* radius = app.add_subcommand("radius", "compute a theorem's radius");
    add_common(radius, common);
    radius->add_option("--a0", a0, "f(0) for the a0-dependent radius (theom17)");

    auto* verify = app.add_subcommand("verify", "check an inequality on a certified corpus");
    add_common(verify, common);
    add_corpus(verify, corpus);
    verify->add_option("--grid", vopt.grid_points, "r-grid points from 0 to the radius");
    verify->add_option("--tol", vopt.tolerance, "tolerance on the functional");

    auto* sharp = app.add_subcommand("sharpness", "probe the extremal family beyond the radius");
    add_common(sharp, common);
    sharp->add_option("--r", r_probe, "probe radius (default: radius + 0.01; theom17: R(a))");
    sharp->add_option("--a", a, "extremal parameter in [0, 1)");

    auto* sweep = app.add_subcommand("sweep", "tabulate the max functional against r as CSV");
    add_common(sweep, common);
    add_corpus(sweep, corpus);
    sweep->add_option("--rmin", rmin, "first r");
    sweep->add_option("--rmax", rmax, "last r");
    sweep->add_option("--grid", sweep_points, "number of r values");
    sweep->add_option("--a", a, "parameter of the extremal function added to the corpus");
    sweep->add_flag("--no-extremal", no_extremal, "sweep the corpus alone");

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e);
    } catch (CLI::ParseError const& e) {
        app.exit(e);
        return invalid;
    }

    try {
        if (*radius) return cmd_radius(common, a0);
        if (*verify) return cmd_verify(common, corpus, vopt);
        if (*sharp) return cmd_sharpness(common, r_probe, a);
        if (*sweep) return cmd_sweep(common, corpus, rmin, rmax, sweep_points, a, !no_extremal);
    } catch (InapplicableTheorem const& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cout << "L = " << fmt(e.condition().L) << " > m = " << fmt(e.condition().m) << "\n";
        return inapplicable;
    } catch (IoError const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io_failure;
    } catch (std::invalid_argument const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid;
    } catch (std::domain_error const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid;
    }
    return invalid;
}
