#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "sizeramsey/graph.hpp"

namespace ramsey {

/// Parameter bundle for the host construction. All thresholds are derived
/// once here; log means natural logarithm throughout the project.
struct RamseyParams {
    std::uint32_t n = 0;            // target path vertex count
    std::uint32_t r = 2;            // colour count, >= 2
    std::size_t host_vertices = 0;  // 7 r n
    double edge_probability = 0.0;  // 22 ln(r) / n unless overridden
    double expansion_budget = 0.0;  // 70 ln(r) n
    double edge_lower = 0.0;        // 500 ln(r) r^2 n
    double edge_upper = 0.0;        // 600 ln(r) r^2 n
    std::uint32_t phase_count = 0;  // 7 r
    bool out_of_regime = false;     // true when edge_probability was supplied explicitly

    /// Canonical parameters; refuses 22 ln(r)/n > 1.
    static RamseyParams make(std::uint32_t n, std::uint32_t r);

    /// Same thresholds but with an explicit edge probability in [0, 1].
    /// Runs with these parameters are reported as out-of-regime.
    static RamseyParams with_probability(std::uint32_t n, std::uint32_t r, double p);
};

enum class ExpansionCheckMethod { Skipped, MonteCarlo, Exact };

struct ExpansionCheckSummary {
    ExpansionCheckMethod method = ExpansionCheckMethod::Skipped;
    bool witness_found = false;
    std::uint64_t trials = 0;   // Monte Carlo only
    std::size_t max_seen = 0;   // Monte Carlo only
};

struct SampleReport {
    std::uint64_t seed = 0; // seed of the accepted sample (feed to sample_gnp to replay)
    std::size_t edge_count = 0;
    double edge_lower = 0.0;
    double edge_upper = 0.0;
    bool satisfies_ii = false; // edge_lower < edge_count < edge_upper
    std::uint32_t attempts = 0;
    bool out_of_regime = false;
    ExpansionCheckSummary expansion;
};

/// G(N, p): every unordered pair is an edge independently with probability
/// p. Sparse case walks the lexicographic pair sequence with geometric
/// skips, so the cost is O(N + edges) rather than O(N^2). Deterministic:
/// identical (vertex_count, p, seed) gives an identical graph.
Graph sample_gnp(std::size_t vertex_count, double p, std::uint64_t seed);

struct HostOptions {
    std::uint32_t retry_limit = 100;
};

/// Sample a host on 7rn vertices, resampling with seeds
/// derive_seed(seed, attempt) until the edge count lands strictly inside
/// (edge_lower, edge_upper). In-regime parameters throw RetryExhausted when
/// the limit runs out; out-of-regime parameters return the first sample
/// with the failure recorded in the report instead.
std::pair<Graph, SampleReport> build_host(const RamseyParams& params, std::uint64_t seed,
                                          const HostOptions& opts = {});

/// Exact finite-n expectation (n^2 + C(n,2)) * p of the number of edges
/// induced by a disjoint pair of n-sets with an endpoint in the first set.
double expected_pair_edges(const RamseyParams& params);

/// Per-pair tail bound, reported as log-probabilities. log_exact is
/// -mu/3 with mu = expected_pair_edges; log_simplified is the weaker
/// closed form -10.9 ln(r) n.
struct ChernoffBound {
    double log_exact;
    double log_simplified;
};
ChernoffBound chernoff_failure_bound(const RamseyParams& params);

/// Per-n coefficient 2 ln(7 e r) - 10.9 ln(r). Negative means the union
/// bound closes at this r.
double union_bound_coefficient(std::uint32_t r);

/// Log of the union-bound failure probability: n * union_bound_coefficient(r).
double union_bound_log_failure(const RamseyParams& params);

/// Coefficients of n for the known bounds at a given r.
struct BoundRow {
    std::uint32_t r = 0;
    double main = 0.0;          // 600 ln(r) r^2, the bound this workbench certifies
    double parametric = 0.0;    // 400^5 C r^(2 + 1/(C-4))
    double parametric_c = 0.0;  // the C used (minimized unless supplied)
    double lower = 0.0;         // (r+3) r / 4; an additive O(r^2) slack is unknown
    double four_power = 0.0;    // 33 r 4^r
};

/// C > 5 minimizing 400^5 C r^(2 + 1/(C-4)), found by ternary search.
double minimize_parametric_c(std::uint32_t r);

/// One table row; pass c to pin the parametric bound's C (must be > 5).
BoundRow bound_row(std::uint32_t r, std::optional<double> c = std::nullopt);

} // namespace ramsey
