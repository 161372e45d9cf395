#pragma once

// Reference implementations for cross-checking. Each is written with a
// different algorithm than the library counterpart (adjacency matrices,
// plain recursion, raw subset enumeration) so agreement is evidence, not
// tautology.

#include <cstdint>
#include <optional>
#include <vector>

#include "sizeramsey/graph.hpp"
#include "sizeramsey/rng.hpp"

namespace testsupport {

// Recount of induced_edge_count over all index pairs of an adjacency
// matrix.
std::size_t matrix_induced_count(const ramsey::Graph& g,
                                 const std::vector<ramsey::Vertex>& s,
                                 const std::vector<ramsey::Vertex>& t);

// Edges with both endpoints inside the set.
std::size_t matrix_inside_count(const ramsey::Graph& g, const std::vector<ramsey::Vertex>& s);

// Longest simple path in vertices by exhaustive recursion from every
// start. No memoization; keep |V| small.
std::uint32_t brute_longest_path(const ramsey::Graph& g);

struct NaiveWitness {
    std::vector<ramsey::Vertex> s;
    std::vector<ramsey::Vertex> t;
    std::size_t count = 0;
};

// Exhaustive disjoint-pair scan by bitmask; any witness, not necessarily
// the library's first-in-order one.
std::optional<NaiveWitness> bitmask_expansion_witness(const ramsey::Graph& g, std::uint32_t n,
                                                      double budget);

// Full r^m colouring recursion deciding whether every colouring leaves a
// monochromatic n-vertex path. No canonicalization, no pruning.
bool recursive_arrows(const ramsey::Graph& g, std::uint32_t n, std::uint32_t r);

// Smallest edge count over raw subsets of K_vertex_cap's edges whose
// graph arrows (P_n)_r; no isomorphism rejection at all.
std::optional<std::size_t> subset_min_ramsey(std::uint32_t n, std::uint32_t r,
                                             std::uint32_t vertex_cap);

// Dense Bernoulli sampling over all pairs; independent of the library's
// skip-based sampler.
ramsey::Graph random_graph(ramsey::Rng& rng, std::uint32_t vertex_count, double p);

ramsey::Colouring random_colouring(ramsey::Rng& rng, std::size_t edge_count, std::uint32_t r);

} // namespace testsupport
