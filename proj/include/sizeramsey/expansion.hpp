#pragma once

#include <cstdint>
#include <optional>

#include "sizeramsey/graph.hpp"

namespace ramsey {

/// A disjoint pair (S, T) whose induced edge count (edges inside S ∪ T with
/// an endpoint in S) meets or exceeds the stated budget.
struct ExpansionWitness {
    VertexSet s;
    VertexSet t;
    std::size_t edge_count = 0;
    double budget = 0.0;
};

struct ExpansionCapOptions {
    std::uint64_t pair_cap = 100'000'000; // refuse enumerations beyond this many (S, T) pairs
};

/// Exhaustive check over every ordered disjoint pair (S, T) with
/// |S| = |T| = n, S first then T, each in lexicographic order of the sorted
/// vertex list. Returns the first pair whose count strictly exceeds the
/// budget, or nullopt when every pair complies.
std::optional<ExpansionWitness> check_expansion_exact(const Graph& g, std::uint32_t n,
                                                      double budget,
                                                      const ExpansionCapOptions& opts = {});

struct MonteCarloExpansion {
    std::optional<ExpansionWitness> witness; // first violating sample, if any
    std::uint64_t trials = 0;                // trials actually executed
    std::size_t max_seen = 0;                // largest count observed
};

/// Samples uniform ordered disjoint (S, T) pairs with per-trial derived
/// seeds. Finding no witness is inconclusive, never a pass: the property
/// quantifies over exponentially many pairs.
MonteCarloExpansion check_expansion_monte_carlo(const Graph& g, std::uint32_t n, double budget,
                                                std::uint64_t trials, std::uint64_t seed);

/// Recomputes every claim a witness makes: matching universes, equal
/// cardinalities, disjointness, the edge count, and edge_count >= budget.
/// Malformed witnesses yield false, never an exception.
bool validate_witness(const Graph& g, const ExpansionWitness& w);

/// Extends t with the lowest-index vertices outside s ∪ t until |t| = |s|.
/// The induced count only grows, so a padded witness still violates any
/// budget the original did. Throws when the graph is too small to pad.
ExpansionWitness pad_witness(const Graph& g, const ExpansionWitness& w);

} // namespace ramsey
