#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sizeramsey/graph.hpp"
#include "sizeramsey/random_model.hpp"

namespace ramsey {

/// Read-only view handed to observers after every transition. path, u_set
/// and w_set partition the live vertex set at all times; no edge of the
/// live graph joins u_set and w_set.
struct DfsState {
    const Graph& graph;      // single-colour graph the walk runs on
    const VertexSet& alive;  // vertex mask of the live subgraph
    const Path& path;        // current P, head at the back
    const VertexSet& u_set;  // unexplored
    const VertexSet& w_set;  // dead
    std::uint64_t steps;     // transitions so far in this call, starting at 1
};

using DfsObserver = std::function<void(const DfsState&)>;

enum class DfsStop { path_target, dead_target, exhausted };

struct DfsOptions {
    std::optional<Vertex> start; // root of the first path; lowest-index live vertex when absent
    std::uint32_t stop_path = 0; // stop as soon as |P| reaches this many vertices (0: never)
    std::uint32_t stop_dead = 0; // stop as soon as |W| reaches this many vertices (0: never)
    DfsObserver observer;        // invoked after every transition
};

struct DfsResult {
    DfsStop stop = DfsStop::exhausted;
    Path longest;          // longest path achieved during the walk
    Path final_path;       // P at the moment the walk stopped
    VertexSet u_set;       // U at stop
    VertexSet w_set;       // W at stop
    std::uint64_t steps = 0;
};

/// Grows a path by depth-first end-extension on the subgraph induced by
/// alive. Extend the head into U along the lowest-index live neighbour;
/// when stuck, move the head to W and back up; when P empties, restart
/// from the lowest-index vertex remaining in U. Every transition moves
/// exactly one vertex, so |U| shrinks or |W| grows each step and the walk
/// takes at most 2|alive| steps.
DfsResult dfs_grow(const Graph& g, const VertexSet& alive, const DfsOptions& opts = {});

/// Record of one completed phase: s is the dead set W when the phase
/// ended, t the vertices of P at that moment, f_edges the live edges
/// incident to s (indices into the original graph's edge list).
struct PhaseRecord {
    std::uint32_t index = 0; // 1-based phase number
    VertexSet s;
    VertexSet t;
    std::vector<EdgeIndex> f_edges;
    std::size_t f_count = 0;
    bool partial = false; // live set ran out before |s| reached n
};

enum class DfsOutcome { path_found, witness_found, budget_ok_contradiction };

struct DfsCertificate {
    DfsOutcome outcome = DfsOutcome::budget_ok_contradiction;
    std::uint32_t colour = 0;
    std::optional<Path> path;                 // edge indices refer to the original graph
    std::optional<PhaseRecord> witness_phase; // phase with the largest f_count, when it certifies
    std::vector<PhaseRecord> phase_log;
    std::size_t colour_edge_count = 0;
    std::size_t pigeonhole_threshold = 0; // max(1, ceil(colour_edge_count / phase_count))
    std::uint32_t n = 0;
    std::uint32_t phase_count = 0;
};

/// Runs the phase procedure on one colour class: grow with dfs_grow until
/// |W| first reaches n, record the phase, delete W with its incident
/// edges, repeat on the remainder. Returns path_found the moment P holds
/// n vertices. With no path, phases continue until no vertex is left, so
/// the f_edges across the log partition the colour class; the result is
/// witness_found when some phase reaches the pigeonhole threshold and
/// budget_ok_contradiction otherwise.
DfsCertificate phase_run(const Graph& g, const Colouring& c, std::uint32_t colour,
                         std::uint32_t n, std::uint32_t phase_count,
                         const DfsObserver& observer = {});

struct FindPathOptions {
    bool try_all_colours = false; // on failure, retry colours in descending class size
    DfsObserver observer;
};

/// Picks the largest colour class (ties to the lowest colour index) and
/// runs phase_run with phase_count = 7r.
DfsCertificate find_monochromatic_path(const Graph& g, const Colouring& c, std::uint32_t n,
                                       const FindPathOptions& opts = {});

/// Numeric evaluation of every link in the counting argument that a
/// completed (pathless) run supports, at this instance's actual sizes.
struct ChainReport {
    double edges_over_r = 0.0;        // |E| / r
    std::size_t colour_edges = 0;     // size of the colour class the run used
    std::size_t f_sum = 0;            // sum of f_count over the phase log
    std::size_t f_max = 0;            // largest f_count in the log
    double phase_budget = 0.0;        // 70 ln(r) n
    double budget_total = 0.0;        // phase_count * 70 ln(r) n
    double regime_lower_over_r = 0.0; // 500 ln(r) r n
    bool majority_holds = false;      // |E|/r <= colour_edges
    bool partition_holds = false;     // f_sum == colour_edges
    bool within_phase_budget = false; // f_max < 70 ln(r) n
    bool pigeonhole_holds = false;    // f_max >= colour_edges / phase_count
    bool constants_hold = false;      // budget_total < regime_lower_over_r
    bool chain_closes = false;        // regime_lower_over_r < |E|/r
};

/// Requires a certificate whose phase log covers the whole colour class;
/// rejects path_found certificates (their log stops early).
ChainReport check_contradiction_chain(const DfsCertificate& cert, const RamseyParams& params,
                                      std::size_t total_edges);

} // namespace ramsey
