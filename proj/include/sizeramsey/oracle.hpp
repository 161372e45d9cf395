#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "sizeramsey/graph.hpp"

namespace ramsey {

struct LongestPathResult {
    std::size_t length = 0; // vertices on a longest simple path (0 only for the empty graph)
    Path witness;
};

/// Exact longest simple path by dynamic programming over (visited set,
/// last vertex). The witness is the lexicographically least vertex
/// sequence among all maximum-length paths. Exponential in |V|, hence
/// the cap.
LongestPathResult longest_path_exact(const Graph& g, std::size_t vertex_cap = 16);

enum class ArrowMethod { exhaustive, canonicalized };

struct ArrowVerdict {
    bool arrows = false;
    std::optional<Colouring> counterexample; // present iff arrows is false
    std::uint64_t colourings_examined = 0;
    ArrowMethod method = ArrowMethod::canonicalized;
};

struct ArrowOptions {
    bool canonicalize = true;                  // skip colour-permutation duplicates
    std::uint64_t colouring_cap = 1u << 20;    // refuse larger enumerations
    std::size_t path_vertex_cap = 16;          // forwarded to longest_path_exact
};

/// Decides g -> (P_n)_r by enumerating r-colourings of the edge list.
/// Canonicalized mode fixes colour-permutation symmetry by requiring
/// colour classes to appear in order of their least edge index; a
/// counterexample is then that canonical representative.
ArrowVerdict arrows_decide(const Graph& g, std::uint32_t n, std::uint32_t r,
                           const ArrowOptions& opts = {});

struct MinRamseyResult {
    std::size_t edge_count = 0;
    Graph witness;                    // isolated vertices trimmed, vertices relabelled densely
    std::uint64_t graphs_examined = 0; // non-isomorphic graphs tested
    std::uint32_t vertex_cap = 0;      // the search was exhaustive only up to this many vertices
};

/// Smallest edge count of a graph on at most vertex_cap vertices that
/// arrows (P_n)_r, by exhaustive search over non-isomorphic graphs
/// (canonical form: minimum edge bitmask over vertex relabellings).
/// Among minimizers, prefers fewer vertices, then the least canonical
/// form. Only tiny parameters are feasible: n <= 4, r <= 2, cap <= 7.
MinRamseyResult min_size_ramsey(std::uint32_t n, std::uint32_t r, std::uint32_t vertex_cap);

enum class AdversaryStrategy { uniform_random, greedy_path_breaker, balanced_partition };

AdversaryStrategy parse_strategy(std::string_view name);
std::string_view strategy_name(AdversaryStrategy s);

/// Colourings meant to frustrate the path search. uniform_random draws
/// i.i.d. colours; balanced_partition assigns edge k colour k mod r;
/// greedy_path_breaker scans edges in index order and gives each the
/// colour whose class keeps the smallest longest-path value, exact via
/// longest_path_exact when |V| <= exact_cap and otherwise estimated
/// incrementally (per-class disjoint sets; joining components with
/// estimates a and b yields a + b, in-component edges change nothing).
/// Ties resolve to the lowest colour index.
Colouring adversary_colour(const Graph& g, std::uint32_t n, std::uint32_t r,
                           AdversaryStrategy strategy, std::uint64_t seed,
                           std::size_t exact_cap = 16);

} // namespace ramsey
