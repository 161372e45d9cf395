// Command line front end. Data goes to files (or stdout via `--out -`),
// progress and errors go to stderr. Exit codes: 0 ok, 1 usage or bad
// input, 2 out-of-regime parameters, 3 cap exceeded, 4 internal
// invariant violation.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "sizeramsey/errors.hpp"
#include "sizeramsey/experiments.hpp"
#include "sizeramsey/io.hpp"

namespace {

using namespace ramsey;

void emit(const std::string& path, const std::string& body) {
    if (path == "-") {
        std::cout << body;
        return;
    }
    write_text_file(path, body);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Graph load_graph(const std::string& path) {
    const std::string text = read_text_file(path);
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
        return graph_from_json(Json::parse(text));
    }
    return graph_from_edge_list(text);
}

RamseyParams resolve_params(std::uint32_t n, std::uint32_t r, const std::optional<double>& p) {
    if (p) {
        return RamseyParams::with_probability(n, r, *p);
    }
    return RamseyParams::make(n, r);
}

struct SampleArgs {
    std::uint32_t n = 0;
    std::uint32_t r = 0;
    std::optional<double> p;
    std::uint64_t seed = 0;
    std::uint64_t retry_limit = 100;
    std::string check = "none";
    std::uint64_t expansion_trials = 1000;
    std::uint64_t expansion_seed = 0;
    std::string out = "host";
};

int cmd_sample(const SampleArgs& a) {
    const RamseyParams params = resolve_params(a.n, a.r, a.p);
    HostOptions host;
    host.retry_limit = a.retry_limit;
    std::optional<ExpansionCheckSpec> check;
    if (a.check == "monte-carlo") {
        check = ExpansionCheckSpec{a.expansion_trials, false, a.expansion_seed};
    } else if (a.check == "exact") {
        check = ExpansionCheckSpec{0, true, 0};
    } else if (a.check != "none") {
        throw InvalidArgument("--check-expansion must be none, monte-carlo or exact");
    }
    const SampleRun run = run_sample(params, a.seed, host, check);
    emit(a.out + ".graph.json", dump(graph_to_json(run.graph)));
    emit(a.out + ".report.json", dump(sample_report_to_json(run.report)));
    std::cerr << "sample: " << run.graph.vertex_count() << " vertices, "
              << run.graph.edge_count() << " edges, attempts " << run.report.attempts << "\n";
    if (params.out_of_regime || !run.report.satisfies_ii) {
        std::cerr << "sample: parameters out of regime, exiting 2\n";
        return 2;
    }
    return 0;
}

struct TrialArgs {
    std::uint32_t n = 0;
    std::uint32_t r = 0;
    std::optional<double> p;
    std::uint64_t seed = 0;
    std::uint64_t trials = 1;
    std::string adversary = "uniform-random";
    std::uint64_t retry_limit = 100;
    bool timings = false;
    std::string format = "csv";
    std::string out;
    std::string cert_dir;
};

int cmd_ramsey_trial(const TrialArgs& a) {
    const RamseyParams params = resolve_params(a.n, a.r, a.p);
    const AdversaryStrategy strategy = parse_strategy(a.adversary);
    TrialOptions opts;
    opts.collect_timings = a.timings;
    opts.host.retry_limit = a.retry_limit;
    if (!a.cert_dir.empty()) {
        std::filesystem::create_directories(a.cert_dir);
        opts.on_trial = [&](const TrialRow& row, const Graph& g, const Colouring& c,
                            const DfsCertificate& cert) {
            std::ostringstream stem;
            stem << a.cert_dir << "/trial_" << std::setw(4) << std::setfill('0') << row.trial;
            write_text_file(stem.str() + ".graph.json", dump(graph_to_json(g)));
            write_text_file(stem.str() + ".colouring.json", dump(colouring_to_json(c)));
            write_text_file(stem.str() + ".cert.json", dump(certificate_to_json(cert)));
        };
    }
    const RamseyTrialResult result = run_ramsey_trials(params, strategy, a.trials, a.seed, opts);
    const std::string out =
        a.out.empty() ? (a.format == "json" ? "trials.json" : "trials.csv") : a.out;
    if (a.format == "json") {
        emit(out, dump(trials_to_json(result, params, strategy, a.seed, a.timings)));
    } else if (a.format == "csv") {
        emit(out, trials_to_csv(result, a.seed, a.timings));
    } else {
        throw InvalidArgument("--format must be csv or json");
    }
    std::cerr << "ramsey-trial: " << result.trials << " trials, path rate "
              << real_to_string(result.path_found_rate) << "\n";
    return params.out_of_regime ? 2 : 0;
}

struct CheckExpansionArgs {
    std::string graph;
    std::uint32_t n = 0;
    std::optional<double> budget;
    std::optional<std::uint32_t> r;
    std::string method = "exact";
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::uint64_t pair_cap = 100'000'000;
    std::string out = "expansion.json";
};

int cmd_check_expansion(const CheckExpansionArgs& a) {
    const Graph g = load_graph(a.graph);
    double budget = 0.0;
    if (a.budget && a.r) {
        throw InvalidArgument("give either --budget or --r, not both");
    } else if (a.budget) {
        budget = *a.budget;
    } else if (a.r) {
        if (*a.r < 2) {
            throw InvalidArgument("--r must be at least 2");
        }
        budget = 70.0 * std::log(static_cast<double>(*a.r)) * static_cast<double>(a.n);
    } else {
        throw InvalidArgument("one of --budget or --r is required");
    }
    ExpansionRunResult result;
    if (a.method == "exact") {
        ExpansionCapOptions caps;
        caps.pair_cap = a.pair_cap;
        result = run_check_expansion_exact(g, a.n, budget, caps);
    } else if (a.method == "monte-carlo") {
        result = run_check_expansion_monte_carlo(g, a.n, budget, a.trials, a.seed);
    } else {
        throw InvalidArgument("--method must be exact or monte-carlo");
    }
    emit(a.out, dump(expansion_run_to_json(result)));
    std::cerr << "check-expansion: " << result.result << "\n";
    return 0;
}

struct BoundsArgs {
    std::uint32_t r_min = 2;
    std::optional<std::uint32_t> r_max;
    std::uint32_t steps = 1;
    std::optional<double> c;
    std::string format = "csv";
    std::string out;
};

int cmd_bounds(const BoundsArgs& a) {
    const std::uint32_t r_max = a.r_max.value_or(a.r_min);
    const auto rs = geometric_r_grid(a.r_min, r_max, a.steps);
    const auto rows = make_bound_table(rs, a.c);
    const std::string out =
        a.out.empty() ? (a.format == "json" ? "bounds.json" : "bounds.csv") : a.out;
    if (a.format == "json") {
        emit(out, dump(bound_table_to_json(rows)));
    } else if (a.format == "csv") {
        emit(out, bound_table_to_csv(rows));
    } else {
        throw InvalidArgument("--format must be csv or json");
    }
    std::cerr << "bounds: " << rows.size() << " rows\n";
    return 0;
}

struct ArrowsArgs {
    std::string graph;
    std::uint32_t n = 0;
    std::uint32_t r = 0;
    bool exhaustive = false;
    std::uint64_t colouring_cap = std::uint64_t{1} << 20;
    std::uint32_t path_cap = 16;
    std::string out = "verdict.json";
};

int cmd_oracle_arrows(const ArrowsArgs& a) {
    const Graph g = load_graph(a.graph);
    ArrowOptions opts;
    opts.canonicalize = !a.exhaustive;
    opts.colouring_cap = a.colouring_cap;
    opts.path_vertex_cap = a.path_cap;
    const ArrowVerdict verdict = arrows_decide(g, a.n, a.r, opts);
    emit(a.out, dump(verdict_to_json(verdict)));
    std::cerr << "oracle arrows: " << (verdict.arrows ? "arrows" : "does not arrow") << " after "
              << verdict.colourings_examined << " colourings\n";
    return 0;
}

struct LongestPathArgs {
    std::string graph;
    std::uint32_t cap = 16;
    std::string out = "longest-path.json";
};

int cmd_oracle_longest_path(const LongestPathArgs& a) {
    const Graph g = load_graph(a.graph);
    const LongestPathResult result = longest_path_exact(g, a.cap);
    Json j;
    j["length"] = result.length;
    j["path"] = Json::array();
    for (const Vertex v : result.witness.vertices) {
        j["path"].push_back(v);
    }
    emit(a.out, dump(j));
    std::cerr << "oracle longest-path: " << result.length << " vertices\n";
    return 0;
}

struct MinRamseyArgs {
    std::uint32_t n = 0;
    std::uint32_t r = 0;
    std::uint32_t cap = 5;
    std::string out = "min-ramsey.json";
};

int cmd_oracle_min_ramsey(const MinRamseyArgs& a) {
    const MinRamseyResult result = min_size_ramsey(a.n, a.r, a.cap);
    Json j;
    j["m"] = result.edge_count;
    j["witness"] = graph_to_json(result.witness);
    j["graphs_examined"] = result.graphs_examined;
    j["vertex_cap"] = result.vertex_cap;
    emit(a.out, dump(j));
    std::cerr << "oracle min-ramsey: m = " << result.edge_count << " ("
              << result.graphs_examined << " graphs examined)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"size-Ramsey path workbench"};
    app.require_subcommand(1);

    SampleArgs sample;
    auto* cmd_s = app.add_subcommand("sample", "sample a random host graph and report on it");
    cmd_s->add_option("--n", sample.n, "target path vertex count")->required();
    cmd_s->add_option("--r", sample.r, "colour count")->required();
    cmd_s->add_option("--p", sample.p, "override edge probability (marks the run out-of-regime)");
    cmd_s->add_option("--seed", sample.seed, "base RNG seed")->required();
    cmd_s->add_option("--retry-limit", sample.retry_limit, "resampling attempts before giving up");
    cmd_s->add_option("--check-expansion", sample.check, "none, monte-carlo or exact");
    cmd_s->add_option("--expansion-trials", sample.expansion_trials, "Monte Carlo pair samples");
    cmd_s->add_option("--expansion-seed", sample.expansion_seed, "Monte Carlo seed");
    cmd_s->add_option("--out", sample.out, "output prefix for .graph.json and .report.json");

    TrialArgs trial;
    auto* cmd_t = app.add_subcommand("ramsey-trial", "host + adversary colouring + path search");
    cmd_t->add_option("--n", trial.n, "target path vertex count")->required();
    cmd_t->add_option("--r", trial.r, "colour count")->required();
    cmd_t->add_option("--p", trial.p, "override edge probability (marks the run out-of-regime)");
    cmd_t->add_option("--seed", trial.seed, "base RNG seed")->required();
    cmd_t->add_option("--trials", trial.trials, "number of trials");
    cmd_t->add_option("--adversary", trial.adversary,
                      "uniform-random, greedy-path-breaker or balanced-partition");
    cmd_t->add_option("--retry-limit", trial.retry_limit, "resampling attempts per host");
    cmd_t->add_flag("--timings", trial.timings, "append runtime_ms (breaks byte determinism)");
    cmd_t->add_option("--format", trial.format, "csv or json");
    cmd_t->add_option("--out", trial.out, "output file, - for stdout");
    cmd_t->add_option("--cert-dir", trial.cert_dir, "emit per-trial graph/colouring/certificate");

    CheckExpansionArgs expansion;
    auto* cmd_e = app.add_subcommand("check-expansion", "hunt for a dense disjoint pair");
    cmd_e->add_option("--graph", expansion.graph, "graph file (.json or edge list)")->required();
    cmd_e->add_option("--n", expansion.n, "side size of the pair")->required();
    cmd_e->add_option("--budget", expansion.budget, "edge budget a witness must exceed");
    cmd_e->add_option("--r", expansion.r, "derive the budget from a colour count");
    cmd_e->add_option("--method", expansion.method, "exact or monte-carlo");
    cmd_e->add_option("--trials", expansion.trials, "Monte Carlo pair samples");
    cmd_e->add_option("--seed", expansion.seed, "Monte Carlo seed");
    cmd_e->add_option("--pair-cap", expansion.pair_cap, "exact method enumeration cap");
    cmd_e->add_option("--out", expansion.out, "output file, - for stdout");

    BoundsArgs bounds;
    auto* cmd_b = app.add_subcommand("bounds", "tabulate size-Ramsey bound formulas");
    cmd_b->add_option("--r-min", bounds.r_min, "smallest colour count")->required();
    cmd_b->add_option("--r-max", bounds.r_max, "largest colour count (defaults to --r-min)");
    cmd_b->add_option("--steps", bounds.steps, "geometric grid size");
    cmd_b->add_option("--c", bounds.c, "pin the parametric constant instead of minimizing");
    cmd_b->add_option("--format", bounds.format, "csv or json");
    cmd_b->add_option("--out", bounds.out, "output file, - for stdout");

    auto* cmd_o = app.add_subcommand("oracle", "exact small-case deciders");
    cmd_o->require_subcommand(1);

    ArrowsArgs arrows;
    auto* cmd_oa = cmd_o->add_subcommand("arrows", "does every r-colouring leave a mono path");
    cmd_oa->add_option("--graph", arrows.graph, "graph file (.json or edge list)")->required();
    cmd_oa->add_option("--n", arrows.n, "target path vertex count")->required();
    cmd_oa->add_option("--r", arrows.r, "colour count")->required();
    cmd_oa->add_flag("--exhaustive", arrows.exhaustive,
                     "enumerate all r^m colourings instead of canonical ones");
    cmd_oa->add_option("--colouring-cap", arrows.colouring_cap, "refuse above this many colourings");
    cmd_oa->add_option("--path-cap", arrows.path_cap, "longest-path vertex cap");
    cmd_oa->add_option("--out", arrows.out, "output file, - for stdout");

    LongestPathArgs longest;
    auto* cmd_ol = cmd_o->add_subcommand("longest-path", "exact longest path, small graphs");
    cmd_ol->add_option("--graph", longest.graph, "graph file (.json or edge list)")->required();
    cmd_ol->add_option("--cap", longest.cap, "vertex cap");
    cmd_ol->add_option("--out", longest.out, "output file, - for stdout");

    MinRamseyArgs minr;
    auto* cmd_om = cmd_o->add_subcommand("min-ramsey", "fewest edges of any arrowing graph");
    cmd_om->add_option("--n", minr.n, "target path vertex count")->required();
    cmd_om->add_option("--r", minr.r, "colour count")->required();
    cmd_om->add_option("--cap", minr.cap, "host vertex cap");
    cmd_om->add_option("--out", minr.out, "output file, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (cmd_s->parsed()) return cmd_sample(sample);
        if (cmd_t->parsed()) return cmd_ramsey_trial(trial);
        if (cmd_e->parsed()) return cmd_check_expansion(expansion);
        if (cmd_b->parsed()) return cmd_bounds(bounds);
        if (cmd_o->parsed()) {
            if (cmd_oa->parsed()) return cmd_oracle_arrows(arrows);
            if (cmd_ol->parsed()) return cmd_oracle_longest_path(longest);
            if (cmd_om->parsed()) return cmd_oracle_min_ramsey(minr);
        }
        std::cerr << "error: no subcommand selected\n";
        return 1;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const OutOfRegime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const RetryExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const Json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
