#include "sizeramsey/expansion.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "sizeramsey/combin.hpp"
#include "sizeramsey/errors.hpp"
#include "sizeramsey/rng.hpp"

namespace ramsey {

namespace {

VertexSet set_from_pool(const std::vector<Vertex>& pool, const std::vector<std::uint32_t>& idx,
                        std::size_t universe) {
    VertexSet s(universe);
    for (std::uint32_t k : idx) s.insert(pool[k]);
    return s;
}

} // namespace

std::optional<ExpansionWitness> check_expansion_exact(const Graph& g, std::uint32_t n,
                                                      double budget,
                                                      const ExpansionCapOptions& opts) {
    if (n == 0) throw InvalidArgument("set size n must be at least 1");
    const std::size_t v = g.vertex_count();
    if (2ULL * n > v) return std::nullopt; // no disjoint pair exists

    const double pair_estimate = choose_approx(v, n) * choose_approx(v - n, n);
    if (pair_estimate > static_cast<double>(opts.pair_cap))
        throw CapExceeded("enumeration needs about " + std::to_string(pair_estimate) +
                          " pairs, beyond the cap of " + std::to_string(opts.pair_cap));

    std::vector<Vertex> all(v);
    for (std::size_t i = 0; i < v; ++i) all[i] = static_cast<Vertex>(i);

    std::vector<std::uint32_t> s_idx(n);
    for (std::uint32_t i = 0; i < n; ++i) s_idx[i] = i;
    do {
        const VertexSet s = set_from_pool(all, s_idx, v);
        std::vector<Vertex> rest;
        rest.reserve(v - n);
        for (Vertex u : all)
            if (!s.contains(u)) rest.push_back(u);

        std::vector<std::uint32_t> t_idx(n);
        for (std::uint32_t i = 0; i < n; ++i) t_idx[i] = i;
        do {
            const VertexSet t = set_from_pool(rest, t_idx, v);
            const std::size_t count = induced_edge_count(g, s, t);
            if (static_cast<double>(count) > budget)
                return ExpansionWitness{s, t, count, budget};
        } while (next_combination(t_idx, rest.size()));
    } while (next_combination(s_idx, v));
    return std::nullopt;
}

MonteCarloExpansion check_expansion_monte_carlo(const Graph& g, std::uint32_t n, double budget,
                                                std::uint64_t trials, std::uint64_t seed) {
    if (n == 0) throw InvalidArgument("set size n must be at least 1");
    if (trials == 0) throw InvalidArgument("trial count must be at least 1");
    const std::size_t v = g.vertex_count();
    if (2ULL * n > v)
        throw InvalidArgument("graph has " + std::to_string(v) +
                              " vertices; need at least 2n = " + std::to_string(2ULL * n));

    MonteCarloExpansion result;
    std::vector<Vertex> pool(v);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        Rng rng(derive_seed(seed, trial));
        for (std::size_t i = 0; i < v; ++i) pool[i] = static_cast<Vertex>(i);
        // Partial Fisher-Yates: the first 2n slots become a uniform ordered
        // sample without replacement; first n form S, next n form T.
        for (std::uint32_t i = 0; i < 2 * n; ++i) {
            const std::uint64_t j = i + rng.next_below(v - i);
            std::swap(pool[i], pool[j]);
        }
        VertexSet s(v);
        VertexSet t(v);
        for (std::uint32_t i = 0; i < n; ++i) s.insert(pool[i]);
        for (std::uint32_t i = n; i < 2 * n; ++i) t.insert(pool[i]);

        const std::size_t count = induced_edge_count(g, s, t);
        result.max_seen = std::max(result.max_seen, count);
        result.trials = trial + 1;
        if (static_cast<double>(count) > budget) {
            result.witness = ExpansionWitness{std::move(s), std::move(t), count, budget};
            return result;
        }
    }
    return result;
}

bool validate_witness(const Graph& g, const ExpansionWitness& w) {
    const std::size_t v = g.vertex_count();
    if (w.s.universe_size() != v || w.t.universe_size() != v) return false;
    if (w.s.cardinality() == 0) return false;
    if (w.s.cardinality() != w.t.cardinality()) return false;
    if (!w.s.disjoint_with(w.t)) return false;
    if (induced_edge_count(g, w.s, w.t) != w.edge_count) return false;
    return static_cast<double>(w.edge_count) >= w.budget;
}

ExpansionWitness pad_witness(const Graph& g, const ExpansionWitness& w) {
    const std::size_t v = g.vertex_count();
    if (w.s.universe_size() != v || w.t.universe_size() != v)
        throw InvalidArgument("witness universe does not match the graph");
    if (!w.s.disjoint_with(w.t)) throw InvalidArgument("witness sets overlap");
    const std::size_t target = w.s.cardinality();
    ExpansionWitness padded = w;
    for (std::size_t u = 0; u < v && padded.t.cardinality() < target; ++u) {
        const Vertex vertex = static_cast<Vertex>(u);
        if (!padded.s.contains(vertex) && !padded.t.contains(vertex)) padded.t.insert(vertex);
    }
    if (padded.t.cardinality() < target)
        throw InvalidArgument("graph too small to pad T to |S| = " + std::to_string(target));
    padded.edge_count = induced_edge_count(g, padded.s, padded.t);
    return padded;
}

} // namespace ramsey
