#include "sizeramsey/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sizeramsey/combin.hpp"
#include "sizeramsey/errors.hpp"
#include "sizeramsey/rng.hpp"

namespace ramsey {

namespace {

// Vertices on the best simple path that starts at last, where mask holds
// every vertex already used (last included).
int dp_longest(std::uint32_t mask, std::uint32_t last, const std::vector<std::uint32_t>& nb,
               std::vector<std::int8_t>& memo, std::size_t nv) {
    std::int8_t& slot = memo[static_cast<std::size_t>(mask) * nv + last];
    if (slot >= 0) return slot;
    int best = 1;
    std::uint32_t cand = nb[last] & ~mask;
    while (cand != 0) {
        const std::uint32_t x = static_cast<std::uint32_t>(std::countr_zero(cand));
        cand &= cand - 1;
        best = std::max(best, 1 + dp_longest(mask | (1u << x), x, nb, memo, nv));
    }
    slot = static_cast<std::int8_t>(best);
    return best;
}

EdgeIndex edge_between(const Graph& g, Vertex a, Vertex b) {
    for (const auto& arc : g.neighbours(a))
        if (arc.to == b) return arc.edge;
    throw InvariantViolation("reconstructed path used a missing edge");
}

} // namespace

LongestPathResult longest_path_exact(const Graph& g, std::size_t vertex_cap) {
    const std::size_t nv = g.vertex_count();
    if (nv > vertex_cap)
        throw CapExceeded("exact longest path needs " + std::to_string(nv) +
                          " vertices, beyond the cap of " + std::to_string(vertex_cap));
    if (nv == 0) return {};

    std::vector<std::uint32_t> nb(nv, 0);
    for (const Edge& e : g.edges()) {
        nb[e.u] |= 1u << e.v;
        nb[e.v] |= 1u << e.u;
    }
    std::vector<std::int8_t> memo((std::size_t{1} << nv) * nv, -1);

    std::size_t best = 0;
    for (std::size_t v = 0; v < nv; ++v)
        best = std::max(best, static_cast<std::size_t>(
                                  dp_longest(1u << v, static_cast<std::uint32_t>(v), nb, memo, nv)));

    // Lexicographically least witness: at each position take the smallest
    // vertex from which the remaining length is still achievable.
    LongestPathResult res;
    res.length = best;
    std::uint32_t mask = 0;
    for (std::size_t v = 0; v < nv; ++v) {
        if (dp_longest(1u << v, static_cast<std::uint32_t>(v), nb, memo, nv) ==
            static_cast<int>(best)) {
            res.witness.vertices.push_back(static_cast<Vertex>(v));
            mask = 1u << v;
            break;
        }
    }
    while (res.witness.vertices.size() < best) {
        const Vertex last = res.witness.vertices.back();
        const int need = static_cast<int>(best - res.witness.vertices.size());
        std::uint32_t cand = nb[last] & ~mask;
        while (cand != 0) {
            const std::uint32_t x = static_cast<std::uint32_t>(std::countr_zero(cand));
            cand &= cand - 1;
            if (dp_longest(mask | (1u << x), x, nb, memo, nv) == need) {
                res.witness.edge_indices.push_back(edge_between(g, last, static_cast<Vertex>(x)));
                res.witness.vertices.push_back(static_cast<Vertex>(x));
                mask |= 1u << x;
                break;
            }
        }
    }
    return res;
}

namespace {

// Does the subgraph formed by these edges contain a path on n vertices?
// Isolated vertices are dropped before the exponential step.
bool edges_contain_path(const Graph& g, const std::vector<Edge>& es, std::uint32_t n,
                        std::size_t path_cap) {
    if (n <= 1) return g.vertex_count() >= 1;
    if (es.empty()) return false;
    if (n == 2) return true;
    std::vector<std::int32_t> dense(g.vertex_count(), -1);
    std::size_t used = 0;
    std::vector<std::pair<Vertex, Vertex>> mapped;
    mapped.reserve(es.size());
    for (const Edge& e : es) {
        for (Vertex v : {e.u, e.v})
            if (dense[v] < 0) dense[v] = static_cast<std::int32_t>(used++);
        mapped.emplace_back(static_cast<Vertex>(dense[e.u]), static_cast<Vertex>(dense[e.v]));
    }
    const Graph sub(used, std::move(mapped));
    return longest_path_exact(sub, path_cap).length >= n;
}

} // namespace

ArrowVerdict arrows_decide(const Graph& g, std::uint32_t n, std::uint32_t r,
                           const ArrowOptions& opts) {
    if (n == 0) throw InvalidArgument("path vertex count n must be at least 1");
    if (r == 0) throw InvalidArgument("colour count r must be at least 1");
    const std::size_t m = g.edge_count();

    const double free_positions = opts.canonicalize && m > 0 ? static_cast<double>(m - 1)
                                                             : static_cast<double>(m);
    if (std::pow(static_cast<double>(r), free_positions) >
        static_cast<double>(opts.colouring_cap))
        throw CapExceeded("about r^" + std::to_string(static_cast<std::uint64_t>(free_positions)) +
                          " colourings exceed the cap of " + std::to_string(opts.colouring_cap));

    ArrowVerdict verdict;
    verdict.method = opts.canonicalize ? ArrowMethod::canonicalized : ArrowMethod::exhaustive;

    std::vector<std::uint32_t> col(m, 0);
    std::vector<Edge> class_edges;
    class_edges.reserve(m);
    const auto colouring_good = [&]() {
        std::uint32_t used = 0;
        for (std::uint32_t c : col) used = std::max(used, c + 1);
        if (m == 0) used = 0;
        if (n <= 1) return g.vertex_count() >= 1;
        for (std::uint32_t c = 0; c < used; ++c) {
            class_edges.clear();
            for (std::size_t k = 0; k < m; ++k)
                if (col[k] == c) class_edges.push_back(g.edge(static_cast<EdgeIndex>(k)));
            if (edges_contain_path(g, class_edges, n, opts.path_vertex_cap)) return true;
        }
        return false;
    };

    while (true) {
        ++verdict.colourings_examined;
        if (!colouring_good()) {
            verdict.arrows = false;
            verdict.counterexample = Colouring(r, col);
            return verdict;
        }
        // Advance the odometer. Canonical mode pins col[0] = 0 and caps
        // each later digit one above the maximum of the prefix.
        bool advanced = false;
        std::size_t k = m;
        const std::size_t floor_pos = opts.canonicalize ? 1 : 0;
        while (k > floor_pos) {
            --k;
            std::uint32_t limit = r - 1;
            if (opts.canonicalize) {
                std::uint32_t prefix_max = 0;
                for (std::size_t j = 0; j < k; ++j) prefix_max = std::max(prefix_max, col[j]);
                limit = std::min(limit, prefix_max + 1);
            }
            if (col[k] < limit) {
                ++col[k];
                std::fill(col.begin() + static_cast<std::ptrdiff_t>(k) + 1, col.end(), 0u);
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    verdict.arrows = true;
    return verdict;
}

namespace {

Graph trim_isolated(const Graph& g) {
    std::vector<std::int32_t> dense(g.vertex_count(), -1);
    std::size_t used = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.degree(static_cast<Vertex>(v)) > 0) dense[v] = static_cast<std::int32_t>(used++);
    if (used == 0) return Graph(1, {}); // keep one vertex so a P_1 target stays witnessed
    std::vector<std::pair<Vertex, Vertex>> mapped;
    mapped.reserve(g.edge_count());
    for (const Edge& e : g.edges())
        mapped.emplace_back(static_cast<Vertex>(dense[e.u]), static_cast<Vertex>(dense[e.v]));
    return Graph(used, std::move(mapped));
}

} // namespace

MinRamseyResult min_size_ramsey(std::uint32_t n, std::uint32_t r, std::uint32_t vertex_cap) {
    if (n == 0) throw InvalidArgument("path vertex count n must be at least 1");
    if (r == 0) throw InvalidArgument("colour count r must be at least 1");
    if (n > 4 || r > 2 || vertex_cap == 0 || vertex_cap > 7)
        throw CapExceeded("exhaustive search is feasible only for n <= 4, r <= 2 and a vertex cap in [1, 7]");

    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < vertex_cap; ++u)
        for (Vertex v = u + 1; v < vertex_cap; ++v) pairs.emplace_back(u, v);
    const std::size_t np = pairs.size();

    std::vector<std::vector<std::uint32_t>> pair_index(vertex_cap,
                                                       std::vector<std::uint32_t>(vertex_cap, 0));
    for (std::size_t k = 0; k < np; ++k) {
        pair_index[pairs[k].first][pairs[k].second] = static_cast<std::uint32_t>(k);
        pair_index[pairs[k].second][pairs[k].first] = static_cast<std::uint32_t>(k);
    }

    std::vector<std::vector<Vertex>> perms;
    std::vector<Vertex> perm(vertex_cap);
    std::iota(perm.begin(), perm.end(), 0u);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    const auto canonical_mask = [&](std::uint32_t mask) {
        std::uint32_t best = ~0u;
        for (const auto& pm : perms) {
            std::uint32_t relabelled = 0;
            std::uint32_t rest = mask;
            while (rest != 0) {
                const std::uint32_t k = static_cast<std::uint32_t>(std::countr_zero(rest));
                rest &= rest - 1;
                relabelled |= 1u << pair_index[pm[pairs[k].first]][pm[pairs[k].second]];
            }
            best = std::min(best, relabelled);
        }
        return best;
    };

    std::unordered_set<std::uint32_t> seen;
    MinRamseyResult result;
    result.vertex_cap = vertex_cap;

    for (std::uint32_t m = 0; m <= np; ++m) {
        bool have_best = false;
        std::size_t best_vertices = 0;
        std::uint32_t best_canon = 0;
        Graph best_graph(0, {});

        std::vector<std::uint32_t> idx(m);
        std::iota(idx.begin(), idx.end(), 0u);
        bool more = true;
        while (more) {
            std::uint32_t mask = 0;
            for (std::uint32_t k : idx) mask |= 1u << k;
            const std::uint32_t canon = canonical_mask(mask);
            if (seen.insert(canon).second) {
                ++result.graphs_examined;
                std::vector<std::pair<Vertex, Vertex>> subset;
                subset.reserve(m);
                for (std::uint32_t k : idx) subset.push_back(pairs[k]);
                const Graph g(vertex_cap, std::move(subset));
                if (arrows_decide(g, n, r).arrows) {
                    Graph trimmed = trim_isolated(g);
                    if (!have_best || trimmed.vertex_count() < best_vertices ||
                        (trimmed.vertex_count() == best_vertices && canon < best_canon)) {
                        have_best = true;
                        best_vertices = trimmed.vertex_count();
                        best_canon = canon;
                        best_graph = std::move(trimmed);
                    }
                }
            }
            more = m > 0 && next_combination(idx, np);
        }
        if (have_best) {
            result.edge_count = m;
            result.witness = std::move(best_graph);
            return result;
        }
    }
    throw OutOfRegime("no graph on at most " + std::to_string(vertex_cap) +
                      " vertices arrows the target path");
}

AdversaryStrategy parse_strategy(std::string_view name) {
    if (name == "uniform-random") return AdversaryStrategy::uniform_random;
    if (name == "greedy-path-breaker") return AdversaryStrategy::greedy_path_breaker;
    if (name == "balanced-partition") return AdversaryStrategy::balanced_partition;
    throw InvalidArgument("unknown adversary strategy: " + std::string(name));
}

std::string_view strategy_name(AdversaryStrategy s) {
    switch (s) {
    case AdversaryStrategy::uniform_random: return "uniform-random";
    case AdversaryStrategy::greedy_path_breaker: return "greedy-path-breaker";
    case AdversaryStrategy::balanced_partition: return "balanced-partition";
    }
    throw InvalidArgument("unknown adversary strategy value");
}

namespace {

// Disjoint sets with a per-component estimate of the longest path the
// incremental growth could have produced there.
class EstimateForest {
public:
    explicit EstimateForest(std::size_t n) : parent_(n), estimate_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }
    std::size_t estimate(std::size_t root) const { return estimate_[root]; }
    void join(std::size_t ra, std::size_t rb) {
        parent_[rb] = ra;
        estimate_[ra] += estimate_[rb];
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> estimate_;
};

} // namespace

Colouring adversary_colour(const Graph& g, std::uint32_t n, std::uint32_t r,
                           AdversaryStrategy strategy, std::uint64_t seed,
                           std::size_t exact_cap) {
    if (n == 0) throw InvalidArgument("path vertex count n must be at least 1");
    if (r == 0) throw InvalidArgument("colour count r must be at least 1");
    const std::size_t m = g.edge_count();
    std::vector<std::uint32_t> col(m, 0);

    switch (strategy) {
    case AdversaryStrategy::uniform_random: {
        Rng rng(seed);
        for (std::size_t k = 0; k < m; ++k)
            col[k] = static_cast<std::uint32_t>(rng.next_below(r));
        break;
    }
    case AdversaryStrategy::balanced_partition:
        for (std::size_t k = 0; k < m; ++k) col[k] = static_cast<std::uint32_t>(k % r);
        break;
    case AdversaryStrategy::greedy_path_breaker: {
        if (r == 1) break;
        if (g.vertex_count() <= exact_cap) {
            // Exact mode: rebuild each candidate class and measure it.
            std::vector<std::vector<std::pair<Vertex, Vertex>>> classes(r);
            for (std::size_t k = 0; k < m; ++k) {
                const Edge e = g.edge(static_cast<EdgeIndex>(k));
                std::uint32_t best_c = 0;
                std::size_t best_len = ~std::size_t{0};
                for (std::uint32_t c = 0; c < r; ++c) {
                    std::vector<std::pair<Vertex, Vertex>> tentative = classes[c];
                    tentative.emplace_back(e.u, e.v);
                    const Graph sub(g.vertex_count(), std::move(tentative));
                    const std::size_t len = longest_path_exact(sub, exact_cap).length;
                    if (len < best_len) {
                        best_len = len;
                        best_c = c;
                    }
                }
                col[k] = best_c;
                classes[best_c].emplace_back(e.u, e.v);
            }
        } else {
            // Estimated mode: joining components adds their estimates;
            // an edge inside a component changes nothing.
            std::vector<EstimateForest> forests(r, EstimateForest(g.vertex_count()));
            std::vector<std::size_t> class_max(r, 1);
            for (std::size_t k = 0; k < m; ++k) {
                const Edge e = g.edge(static_cast<EdgeIndex>(k));
                std::uint32_t best_c = 0;
                std::size_t best_len = ~std::size_t{0};
                for (std::uint32_t c = 0; c < r; ++c) {
                    const std::size_t ra = forests[c].find(e.u);
                    const std::size_t rb = forests[c].find(e.v);
                    const std::size_t cand =
                        ra == rb ? class_max[c]
                                 : std::max(class_max[c],
                                            forests[c].estimate(ra) + forests[c].estimate(rb));
                    if (cand < best_len) {
                        best_len = cand;
                        best_c = c;
                    }
                }
                col[k] = best_c;
                const std::size_t ra = forests[best_c].find(e.u);
                const std::size_t rb = forests[best_c].find(e.v);
                if (ra != rb) forests[best_c].join(ra, rb);
                class_max[best_c] = std::max(class_max[best_c], best_len);
            }
        }
        break;
    }
    }
    return Colouring(r, std::move(col));
}

} // namespace ramsey
