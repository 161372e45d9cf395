#include "sizeramsey/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "sizeramsey/errors.hpp"
#include "sizeramsey/rng.hpp"

namespace ramsey {

namespace {

// Sub-stream tag for the adversary, far above any host retry index so the
// derived seeds can never collide with build_host's attempt seeds.
constexpr std::uint64_t kAdversaryStream = std::uint64_t{1} << 32;

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    const auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration<double, std::milli>(dt).count();
}

void verify_certificate(const Graph& g, const Colouring& c, std::uint32_t n,
                        const DfsCertificate& cert) {
    if (cert.outcome == DfsOutcome::path_found) {
        if (!cert.path || !verify_path(g, c, *cert.path, n, cert.colour)) {
            throw InvariantViolation("trial produced a path certificate that fails verification");
        }
        return;
    }
    if (cert.outcome == DfsOutcome::witness_found) {
        if (!cert.witness_phase) {
            throw InvariantViolation("witness outcome without a witness phase");
        }
        const MonoSubgraph mono = monochromatic_subgraph(g, c, cert.colour);
        ExpansionWitness w{cert.witness_phase->s, cert.witness_phase->t,
                           cert.witness_phase->f_count,
                           static_cast<double>(cert.pigeonhole_threshold)};
        w = pad_witness(mono.graph, w);
        if (!validate_witness(mono.graph, w)) {
            throw InvariantViolation("trial produced a witness certificate that fails validation");
        }
    }
}

std::uint32_t phases_used_of(const DfsCertificate& cert) {
    auto used = static_cast<std::uint32_t>(cert.phase_log.size());
    if (cert.outcome == DfsOutcome::path_found) {
        ++used; // the phase the path interrupted never reaches the log
    }
    return used;
}

std::size_t max_f_of(const DfsCertificate& cert) {
    std::size_t best = 0;
    for (const PhaseRecord& rec : cert.phase_log) {
        best = std::max(best, rec.f_count);
    }
    return best;
}

const char* outcome_name(DfsOutcome o) {
    switch (o) {
    case DfsOutcome::path_found: return "path_found";
    case DfsOutcome::witness_found: return "witness_found";
    case DfsOutcome::budget_ok_contradiction: return "budget_ok_contradiction";
    }
    throw InvariantViolation("unknown outcome value");
}

} // namespace

SampleRun run_sample(const RamseyParams& params, std::uint64_t seed, const HostOptions& host,
                     const std::optional<ExpansionCheckSpec>& check) {
    auto [graph, report] = build_host(params, seed, host);
    if (check) {
        if (check->exact) {
            report.expansion.method = ExpansionCheckMethod::Exact;
            const auto w = check_expansion_exact(graph, params.n, params.expansion_budget);
            report.expansion.witness_found = w.has_value();
        } else if (check->trials > 0) {
            const auto mc = check_expansion_monte_carlo(graph, params.n, params.expansion_budget,
                                                        check->trials, check->seed);
            report.expansion.method = ExpansionCheckMethod::MonteCarlo;
            report.expansion.witness_found = mc.witness.has_value();
            report.expansion.trials = mc.trials;
            report.expansion.max_seen = mc.max_seen;
        }
    }
    return SampleRun{std::move(graph), std::move(report)};
}

RamseyTrialResult run_ramsey_trials(const RamseyParams& params, AdversaryStrategy strategy,
                                    std::uint64_t trials, std::uint64_t base_seed,
                                    const TrialOptions& opts) {
    RamseyTrialResult out;
    out.trials = trials;
    out.rows.reserve(trials);
    std::uint64_t found = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const auto t0 = std::chrono::steady_clock::now();
        const std::uint64_t trial_seed = derive_seed(base_seed, trial);
        auto [graph, report] = build_host(params, trial_seed, opts.host);
        const Colouring colouring = adversary_colour(graph, params.n, params.r, strategy,
                                                     derive_seed(trial_seed, kAdversaryStream));
        const DfsCertificate cert = find_monochromatic_path(graph, colouring, params.n);
        verify_certificate(graph, colouring, params.n, cert);

        TrialRow row;
        row.trial = trial;
        row.seed = trial_seed;
        row.edge_count = report.edge_count;
        row.outcome = cert.outcome;
        row.phases_used = phases_used_of(cert);
        row.max_f_count = max_f_of(cert);
        if (opts.collect_timings) {
            row.runtime_ms = elapsed_ms(t0);
        }
        if (cert.outcome == DfsOutcome::path_found) {
            ++found;
        }
        if (opts.on_trial) {
            opts.on_trial(row, graph, colouring, cert);
        }
        out.rows.push_back(row);
    }
    out.path_found_rate = trials == 0 ? 0.0 : static_cast<double>(found) / static_cast<double>(trials);
    return out;
}

std::string trials_to_csv(const RamseyTrialResult& result, std::uint64_t base_seed,
                          bool timings) {
    std::ostringstream os;
    os << "trial,seed,edge_count,outcome,path_found,phases_used,max_f_count";
    if (timings) {
        os << ",runtime_ms";
    }
    os << '\n';
    double total_ms = 0.0;
    for (const TrialRow& row : result.rows) {
        os << row.trial << ',' << row.seed << ',' << row.edge_count << ','
           << outcome_name(row.outcome) << ','
           << (row.outcome == DfsOutcome::path_found ? 1 : 0) << ',' << row.phases_used << ','
           << row.max_f_count;
        if (timings) {
            os << ',' << real_to_string(row.runtime_ms);
            total_ms += row.runtime_ms;
        }
        os << '\n';
    }
    // Summary row: the path_found column carries the hit rate, the other
    // per-trial columns stay empty.
    os << "summary," << base_seed << ",,," << real_to_string(result.path_found_rate) << ",,";
    if (timings) {
        os << ',' << real_to_string(total_ms);
    }
    os << '\n';
    return os.str();
}

Json params_to_json(const RamseyParams& params) {
    Json j;
    j["n"] = params.n;
    j["r"] = params.r;
    j["host_vertices"] = params.host_vertices;
    j["edge_probability"] = real_to_string(params.edge_probability);
    j["edge_lower"] = real_to_string(params.edge_lower);
    j["edge_upper"] = real_to_string(params.edge_upper);
    j["expansion_budget"] = real_to_string(params.expansion_budget);
    j["phase_count"] = params.phase_count;
    j["out_of_regime"] = params.out_of_regime;
    return j;
}

Json trials_to_json(const RamseyTrialResult& result, const RamseyParams& params,
                    AdversaryStrategy strategy, std::uint64_t base_seed, bool timings) {
    Json j;
    j["params"] = params_to_json(params);
    j["strategy"] = strategy_name(strategy);
    j["seed"] = base_seed;
    Json rows = Json::array();
    double total_ms = 0.0;
    for (const TrialRow& row : result.rows) {
        Json r;
        r["trial"] = row.trial;
        r["seed"] = row.seed;
        r["edge_count"] = row.edge_count;
        r["outcome"] = outcome_name(row.outcome);
        r["path_found"] = row.outcome == DfsOutcome::path_found;
        r["phases_used"] = row.phases_used;
        r["max_f_count"] = row.max_f_count;
        if (timings) {
            r["runtime_ms"] = real_to_string(row.runtime_ms);
            total_ms += row.runtime_ms;
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    Json summary;
    summary["trials"] = result.trials;
    summary["path_found_rate"] = real_to_string(result.path_found_rate);
    if (timings) {
        summary["runtime_ms"] = real_to_string(total_ms);
    }
    j["summary"] = std::move(summary);
    return j;
}

ExpansionRunResult run_check_expansion_exact(const Graph& g, std::uint32_t n, double budget,
                                             const ExpansionCapOptions& caps) {
    ExpansionRunResult out;
    out.method = ExpansionCheckMethod::Exact;
    out.budget = budget;
    out.witness = check_expansion_exact(g, n, budget, caps);
    out.result = out.witness ? "witness" : "pass";
    return out;
}

ExpansionRunResult run_check_expansion_monte_carlo(const Graph& g, std::uint32_t n,
                                                   double budget, std::uint64_t trials,
                                                   std::uint64_t seed) {
    ExpansionRunResult out;
    out.method = ExpansionCheckMethod::MonteCarlo;
    out.budget = budget;
    const MonteCarloExpansion mc = check_expansion_monte_carlo(g, n, budget, trials, seed);
    out.witness = mc.witness;
    out.trials = mc.trials;
    out.max_seen = mc.max_seen;
    // Sampling can only ever exhibit a witness; it never certifies a pass.
    out.result = out.witness ? "witness" : "no-witness-found";
    return out;
}

Json expansion_run_to_json(const ExpansionRunResult& r) {
    Json j;
    j["result"] = r.result;
    j["method"] = r.method == ExpansionCheckMethod::Exact ? "exact" : "monte-carlo";
    j["budget"] = real_to_string(r.budget);
    j["witness"] = r.witness ? witness_to_json(*r.witness) : Json(nullptr);
    if (r.method == ExpansionCheckMethod::MonteCarlo) {
        j["trials"] = r.trials;
        j["max_seen"] = r.max_seen;
    }
    return j;
}

std::vector<std::uint32_t> geometric_r_grid(std::uint32_t r_min, std::uint32_t r_max,
                                            std::uint32_t steps) {
    if (r_min < 2 || r_max < r_min || steps < 1) {
        throw InvalidArgument("grid needs r_min >= 2, r_max >= r_min, steps >= 1");
    }
    std::vector<std::uint32_t> rs;
    if (steps == 1 || r_min == r_max) {
        rs.push_back(r_min);
        if (r_max != r_min) {
            rs.push_back(r_max);
        }
        return rs;
    }
    const double lo = std::log(static_cast<double>(r_min));
    const double hi = std::log(static_cast<double>(r_max));
    for (std::uint32_t k = 0; k < steps; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(steps - 1);
        const double value = std::exp(lo + t * (hi - lo));
        auto r = static_cast<std::uint32_t>(std::llround(value));
        r = std::clamp(r, r_min, r_max);
        if (rs.empty() || rs.back() != r) {
            rs.push_back(r);
        }
    }
    return rs;
}

std::vector<BoundRow> make_bound_table(const std::vector<std::uint32_t>& rs,
                                       std::optional<double> c) {
    std::vector<BoundRow> rows;
    rows.reserve(rs.size());
    for (const std::uint32_t r : rs) {
        rows.push_back(bound_row(r, c));
    }
    return rows;
}

std::string bound_table_to_csv(const std::vector<BoundRow>& rows) {
    std::ostringstream os;
    os << "# parametric_c is minimized numerically per row unless pinned; "
          "the minimizer grows on the order of ln r\n";
    os << "r,main,parametric,parametric_c,lower,four_power\n";
    for (const BoundRow& row : rows) {
        os << row.r << ',' << real_to_string(row.main) << ',' << real_to_string(row.parametric)
           << ',' << real_to_string(row.parametric_c) << ',' << real_to_string(row.lower) << ','
           << real_to_string(row.four_power) << '\n';
    }
    return os.str();
}

Json bound_table_to_json(const std::vector<BoundRow>& rows) {
    Json j;
    j["note"] = "parametric_c is minimized numerically per row unless pinned; "
                "the minimizer grows on the order of ln r";
    Json arr = Json::array();
    for (const BoundRow& row : rows) {
        arr.push_back(bound_row_to_json(row));
    }
    j["rows"] = std::move(arr);
    return j;
}

} // namespace ramsey
