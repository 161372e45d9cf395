#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sizeramsey/dfs.hpp"
#include "sizeramsey/expansion.hpp"
#include "sizeramsey/graph.hpp"
#include "sizeramsey/io.hpp"
#include "sizeramsey/oracle.hpp"
#include "sizeramsey/random_model.hpp"

namespace ramsey {

struct SampleRun {
    Graph graph;
    SampleReport report;
};

/// build_host plus an optional expansion check against the parameter
/// budget, folded into the report. Trials > 0 selects Monte Carlo;
/// exact = true instead runs the exhaustive checker (tiny hosts only).
struct ExpansionCheckSpec {
    std::uint64_t trials = 0;
    bool exact = false;
    std::uint64_t seed = 0;
};
SampleRun run_sample(const RamseyParams& params, std::uint64_t seed, const HostOptions& host = {},
                     const std::optional<ExpansionCheckSpec>& check = {});

struct TrialRow {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0; // per-trial derived seed
    std::size_t edge_count = 0;
    DfsOutcome outcome = DfsOutcome::budget_ok_contradiction;
    std::uint32_t phases_used = 0; // recorded phases, plus the one a path interrupted
    std::size_t max_f_count = 0;
    double runtime_ms = 0.0; // only populated when timings were requested
};

struct RamseyTrialResult {
    std::vector<TrialRow> rows;
    std::uint64_t trials = 0;
    double path_found_rate = 0.0;
};

struct TrialOptions {
    bool collect_timings = false; // keep off for byte-stable outputs
    HostOptions host;
    // Invoked per trial with everything the trial produced, e.g. to write
    // certificate files.
    std::function<void(const TrialRow&, const Graph&, const Colouring&, const DfsCertificate&)>
        on_trial;
};

/// One experiment pipeline per trial: host, adversary colouring, path
/// search, certificate verification. A certificate that fails its own
/// validator raises InvariantViolation; rows are appended in trial order.
RamseyTrialResult run_ramsey_trials(const RamseyParams& params, AdversaryStrategy strategy,
                                    std::uint64_t trials, std::uint64_t base_seed,
                                    const TrialOptions& opts = {});

std::string trials_to_csv(const RamseyTrialResult& result, std::uint64_t base_seed,
                          bool timings);
Json trials_to_json(const RamseyTrialResult& result, const RamseyParams& params,
                    AdversaryStrategy strategy, std::uint64_t base_seed, bool timings);
Json params_to_json(const RamseyParams& params);

struct ExpansionRunResult {
    std::string result; // "pass" | "witness" | "no-witness-found"
    std::optional<ExpansionWitness> witness;
    ExpansionCheckMethod method = ExpansionCheckMethod::Exact;
    std::uint64_t trials = 0;  // Monte Carlo only
    std::size_t max_seen = 0;  // Monte Carlo only
    double budget = 0.0;
};

ExpansionRunResult run_check_expansion_exact(const Graph& g, std::uint32_t n, double budget,
                                             const ExpansionCapOptions& caps = {});
ExpansionRunResult run_check_expansion_monte_carlo(const Graph& g, std::uint32_t n,
                                                   double budget, std::uint64_t trials,
                                                   std::uint64_t seed);
Json expansion_run_to_json(const ExpansionRunResult& r);

/// Geometric grid of colour counts from r_min to r_max inclusive,
/// deduplicated after rounding; steps = 1 collapses to the endpoints.
std::vector<std::uint32_t> geometric_r_grid(std::uint32_t r_min, std::uint32_t r_max,
                                            std::uint32_t steps);

std::vector<BoundRow> make_bound_table(const std::vector<std::uint32_t>& rs,
                                       std::optional<double> c = {});
std::string bound_table_to_csv(const std::vector<BoundRow>& rows);
Json bound_table_to_json(const std::vector<BoundRow>& rows);

} // namespace ramsey
