#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sizeramsey/dfs.hpp"
#include "sizeramsey/expansion.hpp"
#include "sizeramsey/graph.hpp"
#include "sizeramsey/oracle.hpp"
#include "sizeramsey/random_model.hpp"

namespace ramsey {

/// Insertion-ordered JSON keeps every serialization byte-stable.
using Json = nlohmann::ordered_json;

/// Shortest decimal string that parses back to exactly the same double.
/// Real-valued bounds always travel as such strings, never as JSON
/// numbers, so no reader or writer can reformat them.
std::string real_to_string(double x);
double real_from_json(const Json& j);

// {"vertex_count": int, "edges": [[u,v],...]}, u < v enforced both ways.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"r": int, "colours": [int,...]} aligned with the edge order.
Json colouring_to_json(const Colouring& c);
Colouring colouring_from_json(const Json& j);

// {"S": [ints], "T": [ints], "edge_count": int, "budget": real-string}
Json witness_to_json(const ExpansionWitness& w);
ExpansionWitness witness_from_json(const Json& j, std::size_t universe);

// {"seed", "edge_count", "edge_lower", "edge_upper", "satisfies_ii",
//  "attempts", "out_of_regime", "expansion"}
Json sample_report_to_json(const SampleReport& r);

// {"outcome", "colour", "path", "witness", "phase_log"}
Json certificate_to_json(const DfsCertificate& cert);

/// What a certificate file can give back without its graph: enough to
/// re-run the validators against the original graph and colouring.
struct CertificateFile {
    std::string outcome;
    std::uint32_t colour = 0;
    std::optional<std::vector<Vertex>> path_vertices;
    std::optional<ExpansionWitness> witness; // budget left 0; caller supplies the threshold
    struct PhaseRow {
        std::uint32_t index = 0;
        std::size_t s_size = 0;
        std::size_t t_size = 0;
        std::size_t f_count = 0;
        bool partial = false;
    };
    std::vector<PhaseRow> phase_log;
};
CertificateFile certificate_from_json(const Json& j, std::size_t universe);

// {"arrows": bool, "counterexample": colouring | null, "examined": int,
//  "method": "exhaustive" | "canonicalized"}
Json verdict_to_json(const ArrowVerdict& v);

Json chain_report_to_json(const ChainReport& rep);
Json bound_row_to_json(const BoundRow& row);

/// Edge-list text: one "u v" per line, '#' starts a comment. The writer
/// leads with "# vertices: N" so isolated vertices survive the trip;
/// files without that line get max endpoint + 1.
std::string graph_to_edge_list(const Graph& g);
Graph graph_from_edge_list(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

} // namespace ramsey
