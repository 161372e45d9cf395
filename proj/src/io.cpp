#include "sizeramsey/io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>
#include <utility>

#include "sizeramsey/errors.hpp"

namespace ramsey {

std::string real_to_string(double x) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc{}) throw InvariantViolation("double did not fit its text buffer");
    return std::string(buf, end);
}

double real_from_json(const Json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (end == s.c_str() || *end != '\0')
            throw InvalidArgument("not a real number: \"" + s + "\"");
        return v;
    }
    throw InvalidArgument("expected a real number or its decimal string");
}

namespace {

std::vector<Vertex> vertex_array(const Json& j, const char* what) {
    if (!j.is_array()) throw InvalidArgument(std::string(what) + " must be an array");
    std::vector<Vertex> out;
    out.reserve(j.size());
    for (const Json& item : j) {
        if (!item.is_number_unsigned())
            throw InvalidArgument(std::string(what) + " must hold non-negative integers");
        out.push_back(item.get<Vertex>());
    }
    return out;
}

Json set_to_array(const VertexSet& s) {
    Json arr = Json::array();
    for (Vertex v : s.to_vector()) arr.push_back(v);
    return arr;
}

VertexSet set_from_array(const Json& j, std::size_t universe, const char* what) {
    VertexSet s(universe);
    for (Vertex v : vertex_array(j, what)) {
        if (v >= universe)
            throw InvalidArgument(std::string(what) + " lists vertex " + std::to_string(v) +
                                  " outside [0, " + std::to_string(universe) + ")");
        s.insert(v);
    }
    return s;
}

const Json& require(const Json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) throw InvalidArgument(std::string("missing key \"") + key + "\"");
    return *it;
}

} // namespace

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
    return Json{{"vertex_count", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidArgument("graph JSON must be an object");
    const Json& vc = require(j, "vertex_count");
    if (!vc.is_number_unsigned()) throw InvalidArgument("vertex_count must be a non-negative integer");
    const std::size_t n = vc.get<std::size_t>();
    const Json& ej = require(j, "edges");
    if (!ej.is_array()) throw InvalidArgument("edges must be an array");
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(ej.size());
    for (const Json& pair : ej) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
            !pair[1].is_number_unsigned())
            throw InvalidArgument("each edge must be a pair of non-negative integers");
        const Vertex u = pair[0].get<Vertex>();
        const Vertex v = pair[1].get<Vertex>();
        if (u >= v)
            throw InvalidArgument("edge [" + std::to_string(u) + ", " + std::to_string(v) +
                                  "] violates the u < v form");
        edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

Json colouring_to_json(const Colouring& c) {
    Json colours = Json::array();
    for (std::uint32_t v : c.values()) colours.push_back(v);
    return Json{{"r", c.colour_count()}, {"colours", std::move(colours)}};
}

Colouring colouring_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidArgument("colouring JSON must be an object");
    const Json& rj = require(j, "r");
    if (!rj.is_number_unsigned() || rj.get<std::uint64_t>() == 0)
        throw InvalidArgument("r must be a positive integer");
    const Json& cj = require(j, "colours");
    if (!cj.is_array()) throw InvalidArgument("colours must be an array");
    std::vector<std::uint32_t> values;
    values.reserve(cj.size());
    for (const Json& item : cj) {
        if (!item.is_number_unsigned()) throw InvalidArgument("colours must hold non-negative integers");
        values.push_back(item.get<std::uint32_t>());
    }
    return Colouring(rj.get<std::uint32_t>(), std::move(values));
}

Json witness_to_json(const ExpansionWitness& w) {
    return Json{{"S", set_to_array(w.s)},
                {"T", set_to_array(w.t)},
                {"edge_count", w.edge_count},
                {"budget", real_to_string(w.budget)}};
}

ExpansionWitness witness_from_json(const Json& j, std::size_t universe) {
    if (!j.is_object()) throw InvalidArgument("witness JSON must be an object");
    ExpansionWitness w{set_from_array(require(j, "S"), universe, "S"),
                       set_from_array(require(j, "T"), universe, "T"), 0, 0.0};
    const Json& ec = require(j, "edge_count");
    if (!ec.is_number_unsigned()) throw InvalidArgument("edge_count must be a non-negative integer");
    w.edge_count = ec.get<std::size_t>();
    w.budget = real_from_json(require(j, "budget"));
    return w;
}

namespace {

const char* method_label(ExpansionCheckMethod m) {
    switch (m) {
    case ExpansionCheckMethod::Skipped: return "skipped";
    case ExpansionCheckMethod::MonteCarlo: return "monte-carlo";
    case ExpansionCheckMethod::Exact: return "exact";
    }
    return "skipped";
}

} // namespace

Json sample_report_to_json(const SampleReport& r) {
    Json expansion{{"method", method_label(r.expansion.method)}};
    if (r.expansion.method != ExpansionCheckMethod::Skipped) {
        expansion["witness_found"] = r.expansion.witness_found;
        if (r.expansion.method == ExpansionCheckMethod::MonteCarlo) {
            expansion["trials"] = r.expansion.trials;
            expansion["max_seen"] = r.expansion.max_seen;
        }
    }
    return Json{{"seed", r.seed},
                {"edge_count", r.edge_count},
                {"edge_lower", real_to_string(r.edge_lower)},
                {"edge_upper", real_to_string(r.edge_upper)},
                {"satisfies_ii", r.satisfies_ii},
                {"attempts", r.attempts},
                {"out_of_regime", r.out_of_regime},
                {"expansion", std::move(expansion)}};
}

namespace {

const char* outcome_label(DfsOutcome o) {
    switch (o) {
    case DfsOutcome::path_found: return "path_found";
    case DfsOutcome::witness_found: return "witness_found";
    case DfsOutcome::budget_ok_contradiction: return "budget_ok_contradiction";
    }
    return "budget_ok_contradiction";
}

} // namespace

Json certificate_to_json(const DfsCertificate& cert) {
    Json path = nullptr;
    if (cert.path) {
        path = Json::array();
        for (Vertex v : cert.path->vertices) path.push_back(v);
    }
    Json witness = nullptr;
    if (cert.witness_phase) {
        witness = Json{{"phase", cert.witness_phase->index},
                       {"S", set_to_array(cert.witness_phase->s)},
                       {"T", set_to_array(cert.witness_phase->t)},
                       {"edge_count", cert.witness_phase->f_count}};
    }
    Json log = Json::array();
    for (const PhaseRecord& rec : cert.phase_log)
        log.push_back(Json{{"i", rec.index},
                           {"S_size", rec.s.cardinality()},
                           {"T_size", rec.t.cardinality()},
                           {"F_count", rec.f_count},
                           {"partial", rec.partial}});
    return Json{{"outcome", outcome_label(cert.outcome)},
                {"colour", cert.colour},
                {"path", std::move(path)},
                {"witness", std::move(witness)},
                {"phase_log", std::move(log)}};
}

CertificateFile certificate_from_json(const Json& j, std::size_t universe) {
    if (!j.is_object()) throw InvalidArgument("certificate JSON must be an object");
    CertificateFile file;
    const Json& outcome = require(j, "outcome");
    if (!outcome.is_string()) throw InvalidArgument("outcome must be a string");
    file.outcome = outcome.get<std::string>();
    const Json& colour = require(j, "colour");
    if (!colour.is_number_unsigned()) throw InvalidArgument("colour must be a non-negative integer");
    file.colour = colour.get<std::uint32_t>();

    const Json& path = require(j, "path");
    if (!path.is_null()) file.path_vertices = vertex_array(path, "path");

    const Json& witness = require(j, "witness");
    if (!witness.is_null()) {
        ExpansionWitness w{set_from_array(require(witness, "S"), universe, "S"),
                           set_from_array(require(witness, "T"), universe, "T"), 0, 0.0};
        const Json& ec = require(witness, "edge_count");
        if (!ec.is_number_unsigned())
            throw InvalidArgument("edge_count must be a non-negative integer");
        w.edge_count = ec.get<std::size_t>();
        file.witness = std::move(w);
    }

    const Json& log = require(j, "phase_log");
    if (!log.is_array()) throw InvalidArgument("phase_log must be an array");
    for (const Json& row : log) {
        CertificateFile::PhaseRow parsed;
        parsed.index = require(row, "i").get<std::uint32_t>();
        parsed.s_size = require(row, "S_size").get<std::size_t>();
        parsed.t_size = require(row, "T_size").get<std::size_t>();
        parsed.f_count = require(row, "F_count").get<std::size_t>();
        const auto partial = row.find("partial");
        parsed.partial = partial != row.end() && partial->is_boolean() && partial->get<bool>();
        file.phase_log.push_back(parsed);
    }
    return file;
}

Json verdict_to_json(const ArrowVerdict& v) {
    return Json{{"arrows", v.arrows},
                {"counterexample",
                 v.counterexample ? colouring_to_json(*v.counterexample) : Json(nullptr)},
                {"examined", v.colourings_examined},
                {"method", v.method == ArrowMethod::exhaustive ? "exhaustive" : "canonicalized"}};
}

Json chain_report_to_json(const ChainReport& rep) {
    return Json{{"edges_over_r", real_to_string(rep.edges_over_r)},
                {"colour_edges", rep.colour_edges},
                {"f_sum", rep.f_sum},
                {"f_max", rep.f_max},
                {"phase_budget", real_to_string(rep.phase_budget)},
                {"budget_total", real_to_string(rep.budget_total)},
                {"regime_lower_over_r", real_to_string(rep.regime_lower_over_r)},
                {"majority_holds", rep.majority_holds},
                {"partition_holds", rep.partition_holds},
                {"within_phase_budget", rep.within_phase_budget},
                {"pigeonhole_holds", rep.pigeonhole_holds},
                {"constants_hold", rep.constants_hold},
                {"chain_closes", rep.chain_closes}};
}

Json bound_row_to_json(const BoundRow& row) {
    return Json{{"r", row.r},
                {"main", real_to_string(row.main)},
                {"parametric", real_to_string(row.parametric)},
                {"parametric_c", real_to_string(row.parametric_c)},
                {"lower", real_to_string(row.lower)},
                {"four_power", real_to_string(row.four_power)}};
}

std::string graph_to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "# vertices: " << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph graph_from_edge_list(std::string_view text) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::optional<std::size_t> declared;
    std::size_t max_seen = 0;
    bool any = false;

    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;

        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            // "# vertices: N" pins the vertex count; other comments are skipped.
            std::istringstream dir{std::string(line.substr(hash + 1))};
            std::string word;
            std::size_t count = 0;
            if (!declared && dir >> word && word == "vertices:" && dir >> count)
                declared = count;
            line = line.substr(0, hash);
        }
        std::istringstream is{std::string(line)};
        Vertex u = 0;
        Vertex v = 0;
        if (!(is >> u)) continue; // blank or comment-only line
        if (!(is >> v))
            throw InvalidArgument("edge list line " + std::to_string(lineno) +
                                  " has a lone endpoint");
        std::string extra;
        if (is >> extra)
            throw InvalidArgument("edge list line " + std::to_string(lineno) +
                                  " has trailing content");
        edges.emplace_back(u, v);
        max_seen = std::max({max_seen, static_cast<std::size_t>(u), static_cast<std::size_t>(v)});
        any = true;
    }
    const std::size_t vertex_count = declared ? *declared : (any ? max_seen + 1 : 0);
    return Graph(vertex_count, std::move(edges));
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string() + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error("failed to read " + path.string());
    return std::move(buf).str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw Error("failed to write " + path.string());
}

} // namespace ramsey
