#include "sizeramsey/random_model.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "sizeramsey/errors.hpp"
#include "sizeramsey/rng.hpp"

namespace ramsey {

namespace {

void validate_nr(std::uint32_t n, std::uint32_t r) {
    if (n == 0) throw InvalidArgument("path vertex count n must be at least 1");
    if (r < 2) throw InvalidArgument("colour count r must be at least 2");
    if (7ULL * r > 0xffffffffULL) throw InvalidArgument("colour count r too large: 7r overflows");
}

RamseyParams derive_thresholds(std::uint32_t n, std::uint32_t r) {
    RamseyParams p;
    p.n = n;
    p.r = r;
    p.host_vertices = 7ULL * r * n;
    const double log_r = std::log(static_cast<double>(r));
    const double nd = static_cast<double>(n);
    const double rd = static_cast<double>(r);
    p.expansion_budget = 70.0 * log_r * nd;
    p.edge_lower = 500.0 * log_r * rd * rd * nd;
    p.edge_upper = 600.0 * log_r * rd * rd * nd;
    p.phase_count = 7 * r;
    return p;
}

} // namespace

RamseyParams RamseyParams::make(std::uint32_t n, std::uint32_t r) {
    validate_nr(n, r);
    RamseyParams p = derive_thresholds(n, r);
    p.edge_probability = 22.0 * std::log(static_cast<double>(r)) / static_cast<double>(n);
    if (p.edge_probability > 1.0)
        throw OutOfRegime("22 ln(r)/n = " + std::to_string(p.edge_probability) +
                          " exceeds 1; increase n or supply an explicit probability");
    p.out_of_regime = false;
    return p;
}

RamseyParams RamseyParams::with_probability(std::uint32_t n, std::uint32_t r, double prob) {
    validate_nr(n, r);
    if (!(prob >= 0.0 && prob <= 1.0))
        throw InvalidArgument("edge probability must lie in [0, 1]");
    RamseyParams p = derive_thresholds(n, r);
    p.edge_probability = prob;
    p.out_of_regime = true;
    return p;
}

Graph sample_gnp(std::size_t vertex_count, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0))
        throw InvalidArgument("edge probability must lie in [0, 1]");
    if (p == 1.0) return Graph::complete(vertex_count);

    std::vector<std::pair<Vertex, Vertex>> picked;
    if (p > 0.0 && vertex_count >= 2) {
        const std::uint64_t nv = vertex_count;
        const std::uint64_t pairs = nv * (nv - 1) / 2;
        picked.reserve(static_cast<std::size_t>(p * static_cast<double>(pairs) * 1.1) + 16);

        // Lexicographic walk over the pair sequence (0,1),(0,2),...,(1,2),...
        // with geometric gaps: each draw skips floor(ln(1-U)/ln(1-p)) pairs,
        // so the cost is proportional to the number of edges produced.
        Rng rng(seed);
        const double log_q = std::log1p(-p);
        std::uint64_t pos = 0;     // index of the next candidate pair
        std::size_t row = 0;       // candidate pair is (row, row + 1 + offset)
        std::uint64_t offset = 0;
        std::uint64_t row_len = nv - 1;
        while (pos < pairs) {
            const double gap = std::floor(std::log1p(-rng.next_unit()) / log_q);
            if (gap >= 9.2e18) break; // beyond any pair index
            const std::uint64_t skip = static_cast<std::uint64_t>(gap);
            if (skip >= pairs - pos) break;
            offset += skip;
            while (offset >= row_len) {
                offset -= row_len;
                ++row;
                row_len = nv - 1 - row;
            }
            picked.emplace_back(static_cast<Vertex>(row),
                                static_cast<Vertex>(row + 1 + offset));
            pos += skip + 1;
            ++offset; // next candidate; normalized on the following advance
        }
    }
    return Graph(vertex_count, std::move(picked));
}

std::pair<Graph, SampleReport> build_host(const RamseyParams& params, std::uint64_t seed,
                                          const HostOptions& opts) {
    if (opts.retry_limit == 0) throw InvalidArgument("retry limit must be at least 1");

    SampleReport report;
    report.edge_lower = params.edge_lower;
    report.edge_upper = params.edge_upper;
    report.out_of_regime = params.out_of_regime;

    std::optional<Graph> first;
    std::uint64_t first_seed = 0;
    std::size_t first_edges = 0;
    for (std::uint32_t attempt = 0; attempt < opts.retry_limit; ++attempt) {
        const std::uint64_t trial_seed = derive_seed(seed, attempt);
        Graph g = sample_gnp(params.host_vertices, params.edge_probability, trial_seed);
        const std::size_t m = g.edge_count();
        const double md = static_cast<double>(m);
        report.attempts = attempt + 1;
        if (params.edge_lower < md && md < params.edge_upper) {
            report.seed = trial_seed;
            report.edge_count = m;
            report.satisfies_ii = true;
            return {std::move(g), report};
        }
        if (attempt == 0) {
            first_seed = trial_seed;
            first_edges = m;
            first = std::move(g);
        }
    }
    if (!params.out_of_regime)
        throw RetryExhausted("edge count missed (" + std::to_string(params.edge_lower) + ", " +
                             std::to_string(params.edge_upper) + ") in " +
                             std::to_string(opts.retry_limit) +
                             " samples; n is too small for concentration at this r");
    // Explicit-probability runs keep the first sample and record the failure.
    report.seed = first_seed;
    report.edge_count = first_edges;
    report.satisfies_ii = false;
    return {std::move(*first), report};
}

double expected_pair_edges(const RamseyParams& params) {
    const double n = static_cast<double>(params.n);
    // n^2 cross pairs plus C(n,2) pairs inside S, each an edge with probability p.
    return (n * n + n * (n - 1.0) / 2.0) * params.edge_probability;
}

ChernoffBound chernoff_failure_bound(const RamseyParams& params) {
    const double mu = expected_pair_edges(params);
    const double n = static_cast<double>(params.n);
    return ChernoffBound{-mu / 3.0,
                         -10.9 * std::log(static_cast<double>(params.r)) * n};
}

double union_bound_coefficient(std::uint32_t r) {
    if (r < 2) throw InvalidArgument("colour count r must be at least 2");
    const double rd = static_cast<double>(r);
    return 2.0 * std::log(7.0 * std::numbers::e * rd) - 10.9 * std::log(rd);
}

double union_bound_log_failure(const RamseyParams& params) {
    return static_cast<double>(params.n) * union_bound_coefficient(params.r);
}

double minimize_parametric_c(std::uint32_t r) {
    if (r < 2) throw InvalidArgument("colour count r must be at least 2");
    const double log_r = std::log(static_cast<double>(r));
    // Minimize ln(C) + (2 + 1/(C-4)) ln(r) over C > 5; the objective is
    // unimodal there, so ternary search converges.
    auto objective = [log_r](double c) { return std::log(c) + log_r / (c - 4.0); };
    double lo = 5.0 + 1e-9;
    double hi = 16.0 + 2.0 * log_r; // stationary point sits below 8 + ln r
    for (int iter = 0; iter < 200; ++iter) {
        const double a = lo + (hi - lo) / 3.0;
        const double b = hi - (hi - lo) / 3.0;
        if (objective(a) < objective(b))
            hi = b;
        else
            lo = a;
    }
    return (lo + hi) / 2.0;
}

BoundRow bound_row(std::uint32_t r, std::optional<double> c) {
    if (r < 2) throw InvalidArgument("colour count r must be at least 2");
    if (c && !(*c > 5.0)) throw InvalidArgument("parametric bound requires C > 5");
    const double rd = static_cast<double>(r);
    const double log_r = std::log(rd);
    BoundRow row;
    row.r = r;
    row.main = 600.0 * log_r * rd * rd;
    row.parametric_c = c ? *c : minimize_parametric_c(r);
    const double k = 400.0 * 400.0 * 400.0 * 400.0 * 400.0;
    row.parametric = k * row.parametric_c *
                     std::pow(rd, 2.0 + 1.0 / (row.parametric_c - 4.0));
    row.lower = (rd + 3.0) * rd / 4.0;
    row.four_power = 33.0 * rd * std::exp2(2.0 * rd); // overflows to inf for large r
    return row;
}

} // namespace ramsey
