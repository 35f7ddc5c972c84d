#pragma once

/**
 * @file io.hpp
 * @brief JSON reports, corpus documents and sweep CSV files.
 *
 * Doubles are written with round-trip precision, so read(write(x)) == x.
 * Non-finite numbers become null.
 */

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "octobohr/verify.hpp"

namespace octobohr {

using nlohmann::json;

/// Raised for unreadable or unwritable files and malformed documents.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int report_schema = 1;

namespace detail {

inline json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

inline double num_or_inf(json const& j) {
    return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

}  // namespace detail

inline std::string_view to_string(Certificate c) { return c == Certificate::unit_ball ? "unit-ball" : "halfspace"; }

inline Certificate certificate_from_string(std::string_view s) {
    if (s == "unit-ball") return Certificate::unit_ball;
    if (s == "halfspace") return Certificate::halfspace;
    throw std::invalid_argument("unknown certificate: " + std::string(s));
}

inline json to_json(BohrParams const& p) {
    return {{"m", p.m}, {"lambda", p.lambda}, {"q", p.q}, {"j", p.j}, {"d", p.d}, {"beta", p.beta}};
}

inline BohrParams params_from_json(json const& j) {
    BohrParams p;
    p.m = j.at("m").get<double>();
    p.lambda = j.at("lambda").get<double>();
    p.q = j.at("q").get<double>();
    p.j = j.at("j").get<double>();
    p.d = j.at("d").get<std::vector<double>>();
    p.beta = j.at("beta").get<double>();
    return p;
}

inline json to_json(RadiusResult const& r) {
    return {{"value", r.value},
            {"method", std::string(to_string(r.method))},
            {"residual", r.residual},
            {"bracket", {r.bracket_lo, r.bracket_hi}}};
}

inline RadiusResult radius_from_json(json const& j) {
    RadiusResult r;
    r.value = j.at("value").get<double>();
    r.method = radius_method_from_string(j.at("method").get<std::string>());
    r.residual = j.at("residual").get<double>();
    r.bracket_lo = j.at("bracket").at(0).get<double>();
    r.bracket_hi = j.at("bracket").at(1).get<double>();
    return r;
}

inline json to_json(Provenance const& p) {
    return {{"tag", p.tag}, {"params", p.params}, {"seed", p.seed}, {"index", p.index}};
}

inline Provenance provenance_from_json(json const& j) {
    Provenance p;
    p.tag = j.at("tag").get<std::string>();
    p.params = j.at("params").get<std::map<std::string, double>>();
    p.seed = j.at("seed").get<std::uint64_t>();
    p.index = j.at("index").get<std::uint64_t>();
    return p;
}

inline json to_json(CorpusEntry const& e) {
    json coeffs = json::array();
    for (auto const& c : e.series.coeffs()) coeffs.push_back(c.coords());
    json tail = e.series.tail_coeff_bound() ? json(*e.series.tail_coeff_bound()) : json(nullptr);
    return {{"provenance", to_json(e.provenance)},
            {"certificate", std::string(to_string(e.certificate))},
            {"coefficients", std::move(coeffs)},
            {"tail_coeff_bound", std::move(tail)}};
}

inline CorpusEntry entry_from_json(json const& j) {
    CorpusEntry e;
    e.provenance = provenance_from_json(j.at("provenance"));
    e.certificate = certificate_from_string(j.at("certificate").get<std::string>());
    std::vector<Octonion> c;
    for (auto const& a : j.at("coefficients")) c.emplace_back(a.get<std::array<double, 8>>());
    std::optional<double> tail;
    if (auto it = j.find("tail_coeff_bound"); it != j.end() && !it->is_null()) tail = it->get<double>();
    e.series = SliceSeries{std::move(c), tail};
    return e;
}

inline json corpus_to_json(std::vector<CorpusEntry> const& corpus) {
    json entries = json::array();
    for (auto const& e : corpus) entries.push_back(to_json(e));
    return {{"schema", report_schema}, {"entries", std::move(entries)}};
}

/// Parses a corpus document. Entries are re-certified unless `trust` is set,
/// so an edited file cannot smuggle an uncertified function into a run.
inline std::vector<CorpusEntry> corpus_from_json(json const& j, bool trust = false) {
    if (j.value("schema", 0) != report_schema) throw IoError("unsupported corpus schema");
    std::vector<CorpusEntry> out;
    for (auto const& item : j.at("entries")) {
        auto e = entry_from_json(item);
        if (!trust && !certify(e.series, e.certificate).ok)
            throw std::invalid_argument("corpus entry " + std::to_string(e.provenance.index) + " fails its certificate");
        out.push_back(std::move(e));
    }
    return out;
}

inline json to_json(LCondition const& l) { return {{"L", l.L}, {"m", l.m}, {"holds", l.holds}}; }

inline json to_json(VerificationReport const& r) {
    json viol = json::array();
    for (auto const& v : r.violations)
        viol.push_back({{"provenance", to_json(v.provenance)}, {"r", v.r}, {"value", detail::num(v.value)},
                        {"upper", detail::num(v.upper)}});
    json j = {{"schema", r.schema},
              {"kind", "verify"},
              {"theorem", std::string(to_string(r.theorem))},
              {"params", to_json(r.params)},
              {"radius", to_json(r.radius)},
              {"grid",
               {{"points", r.grid.points},
                {"r_max", r.grid.r_max},
                {"per_entry_radius", r.grid.per_entry_radius},
                {"corpus_seed", r.grid.corpus_seed},
                {"corpus_size", r.grid.corpus_size},
                {"order", r.grid.order}}},
              {"tolerance", r.tolerance},
              {"max_value", detail::num(r.max_value)},
              {"max_upper", detail::num(r.max_upper)},
              {"margin", detail::num(r.margin)},
              {"violations", std::move(viol)},
              {"l_condition", r.l_condition ? to_json(*r.l_condition) : json(nullptr)},
              {"timing", {{"timestamp", r.timestamp}, {"runtime_seconds", r.runtime_seconds}}}};
    return j;
}

inline VerificationReport report_from_json(json const& j) {
    if (j.value("schema", 0) != report_schema) throw IoError("unsupported report schema");
    VerificationReport r;
    r.schema = j.at("schema").get<int>();
    r.theorem = theorem_from_string(j.at("theorem").get<std::string>());
    r.params = params_from_json(j.at("params"));
    r.radius = radius_from_json(j.at("radius"));
    auto const& g = j.at("grid");
    r.grid.points = g.at("points").get<int>();
    r.grid.r_max = g.at("r_max").get<double>();
    r.grid.per_entry_radius = g.at("per_entry_radius").get<bool>();
    r.grid.corpus_seed = g.at("corpus_seed").get<std::uint64_t>();
    r.grid.corpus_size = g.at("corpus_size").get<std::size_t>();
    r.grid.order = g.at("order").get<std::size_t>();
    r.tolerance = j.at("tolerance").get<double>();
    r.max_value = detail::num_or_inf(j.at("max_value"));
    r.max_upper = detail::num_or_inf(j.at("max_upper"));
    r.margin = j.at("margin").is_null() ? -std::numeric_limits<double>::infinity() : j.at("margin").get<double>();
    for (auto const& v : j.at("violations"))
        r.violations.push_back({provenance_from_json(v.at("provenance")), v.at("r").get<double>(),
                                detail::num_or_inf(v.at("value")), detail::num_or_inf(v.at("upper"))});
    if (auto const& l = j.at("l_condition"); !l.is_null())
        r.l_condition = LCondition{l.at("L").get<double>(), l.at("m").get<double>(), l.at("holds").get<bool>()};
    r.timestamp = j.at("timing").at("timestamp").get<std::string>();
    r.runtime_seconds = j.at("timing").at("runtime_seconds").get<double>();
    return r;
}

inline json to_json(SharpnessReport const& r) {
    return {{"schema", r.schema},
            {"kind", "sharpness"},
            {"theorem", std::string(to_string(r.theorem))},
            {"params", to_json(r.params)},
            {"radius", to_json(r.radius)},
            {"r", r.r},
            {"a", r.a},
            {"value", r.value},
            {"excess", r.excess},
            {"demonstrated", r.demonstrated()}};
}

inline SharpnessReport sharpness_from_json(json const& j) {
    SharpnessReport r;
    r.schema = j.at("schema").get<int>();
    r.theorem = theorem_from_string(j.at("theorem").get<std::string>());
    r.params = params_from_json(j.at("params"));
    r.radius = radius_from_json(j.at("radius"));
    r.r = j.at("r").get<double>();
    r.a = j.at("a").get<double>();
    r.value = j.at("value").get<double>();
    r.excess = j.at("excess").get<double>();
    return r;
}

inline constexpr char const* sweep_header = "r,max_functional,radius_marker";

inline std::string sweep_to_csv(std::vector<SweepRow> const& rows) {
    std::ostringstream os;
    os << sweep_header << '\n' << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (auto const& row : rows) os << row.r << ',' << row.max_functional << ',' << row.radius_marker << '\n';
    return os.str();
}

inline std::vector<SweepRow> sweep_from_csv(std::string const& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != sweep_header) throw IoError("sweep CSV: unexpected header");
    std::vector<SweepRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string a, b, c;
        if (!std::getline(ls, a, ',') || !std::getline(ls, b, ',') || !std::getline(ls, c))
            throw IoError("sweep CSV: malformed row");
        try {
            rows.push_back({std::stod(a), std::stod(b), std::stoi(c)});
        } catch (std::exception const&) {
            throw IoError("sweep CSV: malformed number");
        }
    }
    return rows;
}

inline std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(std::string const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path);
    out << text;
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

inline json parse_json(std::string const& text) {
    try {
        return json::parse(text);
    } catch (json::exception const& e) {
        throw IoError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace octobohr
