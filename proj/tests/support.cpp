#include "support.hpp"

#include <algorithm>

namespace testsupport {

using namespace ramsey;

namespace {

std::vector<std::vector<bool>> adjacency(const Graph& g) {
    std::vector<std::vector<bool>> adj(g.vertex_count(),
                                       std::vector<bool>(g.vertex_count(), false));
    for (const Edge& e : g.edges()) {
        adj[e.u][e.v] = true;
        adj[e.v][e.u] = true;
    }
    return adj;
}

void longest_from(const std::vector<std::vector<bool>>& adj, Vertex at, std::uint64_t visited,
                  std::uint32_t depth, std::uint32_t& best) {
    best = std::max(best, depth);
    for (Vertex next = 0; next < adj.size(); ++next) {
        if (adj[at][next] && !(visited >> next & 1)) {
            longest_from(adj, next, visited | (std::uint64_t{1} << next), depth + 1, best);
        }
    }
}

bool subsets_colour_paths(const Graph& g, std::uint32_t n, std::uint32_t r,
                          std::vector<std::uint32_t>& colour, std::size_t at) {
    if (at == g.edge_count()) {
        for (std::uint32_t c = 0; c < r; ++c) {
            std::vector<std::pair<Vertex, Vertex>> keep;
            for (std::size_t k = 0; k < colour.size(); ++k) {
                if (colour[k] == c) {
                    keep.emplace_back(g.edge(static_cast<EdgeIndex>(k)).u,
                                      g.edge(static_cast<EdgeIndex>(k)).v);
                }
            }
            if (brute_longest_path(Graph(g.vertex_count(), keep)) >= n) {
                return true; // this colouring failed to avoid a path
            }
        }
        return false;
    }
    for (std::uint32_t c = 0; c < r; ++c) {
        colour[at] = c;
        if (!subsets_colour_paths(g, n, r, colour, at + 1)) {
            return false; // found an avoiding colouring
        }
    }
    return true;
}

} // namespace

std::size_t matrix_induced_count(const Graph& g, const std::vector<Vertex>& s,
                                 const std::vector<Vertex>& t) {
    const auto adj = adjacency(g);
    std::vector<int> where(g.vertex_count(), 0); // 1 = S, 2 = T
    for (const Vertex v : s) {
        where[v] = 1;
    }
    for (const Vertex v : t) {
        where[v] = 2;
    }
    std::size_t count = 0;
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
        for (Vertex b = a + 1; b < g.vertex_count(); ++b) {
            if (adj[a][b] && where[a] != 0 && where[b] != 0 && (where[a] == 1 || where[b] == 1)) {
                ++count;
            }
        }
    }
    return count;
}

std::size_t matrix_inside_count(const Graph& g, const std::vector<Vertex>& s) {
    const auto adj = adjacency(g);
    std::vector<bool> in(g.vertex_count(), false);
    for (const Vertex v : s) {
        in[v] = true;
    }
    std::size_t count = 0;
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
        for (Vertex b = a + 1; b < g.vertex_count(); ++b) {
            if (adj[a][b] && in[a] && in[b]) {
                ++count;
            }
        }
    }
    return count;
}

std::uint32_t brute_longest_path(const Graph& g) {
    if (g.vertex_count() == 0) {
        return 0;
    }
    const auto adj = adjacency(g);
    std::uint32_t best = 1;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        longest_from(adj, v, std::uint64_t{1} << v, 1, best);
    }
    return best;
}

std::optional<NaiveWitness> bitmask_expansion_witness(const Graph& g, std::uint32_t n,
                                                      double budget) {
    const std::uint32_t v = g.vertex_count();
    if (v > 20 || n == 0 || 2 * static_cast<std::uint64_t>(n) > v) {
        return std::nullopt;
    }
    const std::uint32_t top = std::uint32_t{1} << v;
    for (std::uint32_t smask = 0; smask < top; ++smask) {
        if (static_cast<std::uint32_t>(std::popcount(smask)) != n) {
            continue;
        }
        for (std::uint32_t tmask = 0; tmask < top; ++tmask) {
            if (static_cast<std::uint32_t>(std::popcount(tmask)) != n || (smask & tmask) != 0) {
                continue;
            }
            NaiveWitness w;
            for (Vertex x = 0; x < v; ++x) {
                if (smask >> x & 1) {
                    w.s.push_back(x);
                }
                if (tmask >> x & 1) {
                    w.t.push_back(x);
                }
            }
            w.count = matrix_induced_count(g, w.s, w.t);
            if (static_cast<double>(w.count) > budget) {
                return w;
            }
        }
    }
    return std::nullopt;
}

bool recursive_arrows(const Graph& g, std::uint32_t n, std::uint32_t r) {
    std::vector<std::uint32_t> colour(g.edge_count(), 0);
    return subsets_colour_paths(g, n, r, colour, 0);
}

std::optional<std::size_t> subset_min_ramsey(std::uint32_t n, std::uint32_t r,
                                             std::uint32_t vertex_cap) {
    std::vector<std::pair<Vertex, Vertex>> all;
    for (Vertex u = 0; u < vertex_cap; ++u) {
        for (Vertex v = u + 1; v < vertex_cap; ++v) {
            all.emplace_back(u, v);
        }
    }
    const std::size_t total = all.size();
    for (std::size_t m = 1; m <= total; ++m) {
        // raw subset enumeration by bitmask, smallest popcount first
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << total); ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) != m) {
                continue;
            }
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (std::size_t k = 0; k < total; ++k) {
                if (mask >> k & 1) {
                    edges.push_back(all[k]);
                }
            }
            if (recursive_arrows(Graph(vertex_cap, edges), n, r)) {
                return m;
            }
        }
    }
    return std::nullopt;
}

Graph random_graph(Rng& rng, std::uint32_t vertex_count, double p) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < vertex_count; ++u) {
        for (Vertex v = u + 1; v < vertex_count; ++v) {
            if (rng.next_unit() < p) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(vertex_count, std::move(edges));
}

Colouring random_colouring(Rng& rng, std::size_t edge_count, std::uint32_t r) {
    std::vector<std::uint32_t> values(edge_count);
    for (auto& value : values) {
        value = static_cast<std::uint32_t>(rng.next_below(r));
    }
    return Colouring(r, std::move(values));
}

} // namespace testsupport
