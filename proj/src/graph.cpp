#include "sizeramsey/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "sizeramsey/errors.hpp"

namespace ramsey {

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), bits_((universe + 63) / 64, 0) {}

VertexSet VertexSet::from_vertices(std::size_t universe, std::span<const Vertex> vs) {
    VertexSet s(universe);
    for (Vertex v : vs) s.insert(v);
    return s;
}

VertexSet VertexSet::from_vertices(std::size_t universe, std::initializer_list<Vertex> vs) {
    return from_vertices(universe, std::span<const Vertex>(vs.begin(), vs.size()));
}

void VertexSet::insert(Vertex v) {
    if (v >= universe_)
        throw InvalidArgument("VertexSet::insert: vertex " + std::to_string(v) +
                              " outside universe of size " + std::to_string(universe_));
    std::uint64_t& word = bits_[v >> 6];
    const std::uint64_t mask = 1ULL << (v & 63);
    if (!(word & mask)) {
        word |= mask;
        ++count_;
    }
}

void VertexSet::erase(Vertex v) {
    if (v >= universe_) return;
    std::uint64_t& word = bits_[v >> 6];
    const std::uint64_t mask = 1ULL << (v & 63);
    if (word & mask) {
        word &= ~mask;
        --count_;
    }
}

bool VertexSet::disjoint_with(const VertexSet& other) const {
    const std::size_t n = std::min(bits_.size(), other.bits_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (bits_[i] & other.bits_[i]) return false;
    return true;
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count_);
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        std::uint64_t word = bits_[w];
        while (word) {
            const int b = std::countr_zero(word);
            out.push_back(static_cast<Vertex>(w * 64 + b));
            word &= word - 1;
        }
    }
    return out;
}

Graph::Graph() : Graph(0, {}) {}

Graph::Graph(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges)
    : vertex_count_(vertex_count) {
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a == b)
            throw InvalidArgument("Graph: self-loop at vertex " + std::to_string(a));
        if (a >= vertex_count_ || b >= vertex_count_)
            throw InvalidArgument("Graph: edge (" + std::to_string(a) + "," +
                                  std::to_string(b) + ") outside vertex range");
        edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
    }

    // duplicate detection on the normalized pairs
    {
        std::vector<Edge> sorted = edges_;
        std::sort(sorted.begin(), sorted.end(), [](const Edge& x, const Edge& y) {
            return x.u != y.u ? x.u < y.u : x.v < y.v;
        });
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] == sorted[i - 1])
                throw InvalidArgument("Graph: duplicate edge (" + std::to_string(sorted[i].u) +
                                      "," + std::to_string(sorted[i].v) + ")");
    }

    // CSR adjacency, neighbours ascending; ties cannot occur (simple graph)
    adj_offsets_.assign(vertex_count_ + 1, 0);
    for (const Edge& e : edges_) {
        ++adj_offsets_[e.u + 1];
        ++adj_offsets_[e.v + 1];
    }
    for (std::size_t v = 0; v < vertex_count_; ++v) adj_offsets_[v + 1] += adj_offsets_[v];
    adj_.resize(edges_.size() * 2);
    std::vector<std::uint32_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (EdgeIndex k = 0; k < edges_.size(); ++k) {
        const Edge& e = edges_[k];
        adj_[cursor[e.u]++] = {e.v, k};
        adj_[cursor[e.v]++] = {e.u, k};
    }
    for (std::size_t v = 0; v < vertex_count_; ++v)
        std::sort(adj_.begin() + adj_offsets_[v], adj_.begin() + adj_offsets_[v + 1],
                  [](const Arc& x, const Arc& y) { return x.to < y.to; });
}

Graph Graph::complete(std::size_t k) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(k * (k - 1) / 2);
    for (Vertex u = 0; u < k; ++u)
        for (Vertex v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    return Graph(k, std::move(edges));
}

Colouring::Colouring(std::uint32_t colour_count, std::vector<std::uint32_t> assignment)
    : colour_count_(colour_count), assignment_(std::move(assignment)) {
    if (colour_count_ < 1)
        throw InvalidArgument("Colouring: colour_count must be >= 1");
    for (std::uint32_t c : assignment_)
        if (c >= colour_count_)
            throw InvalidArgument("Colouring: colour " + std::to_string(c) +
                                  " outside [0, " + std::to_string(colour_count_) + ")");
}

std::vector<std::size_t> Colouring::class_sizes() const {
    std::vector<std::size_t> sizes(colour_count_, 0);
    for (std::uint32_t c : assignment_) ++sizes[c];
    return sizes;
}

std::size_t induced_edge_count(const Graph& g, const VertexSet& s, const VertexSet& t) {
    if (s.universe_size() != g.vertex_count() || t.universe_size() != g.vertex_count())
        throw InvalidArgument("induced_edge_count: vertex set universe does not match graph");
    if (!s.disjoint_with(t))
        throw InvalidArgument("induced_edge_count: s and t must be disjoint");
    std::size_t count = 0;
    for (const Edge& e : g.edges()) {
        const bool us = s.contains(e.u), vs = s.contains(e.v);
        if (!us && !vs) continue; // needs an endpoint in s
        if ((us || t.contains(e.u)) && (vs || t.contains(e.v))) ++count;
    }
    return count;
}

MonoSubgraph monochromatic_subgraph(const Graph& g, const Colouring& c, std::uint32_t colour) {
    if (c.size() != g.edge_count())
        throw InvalidArgument("monochromatic_subgraph: colouring length does not match edge count");
    if (colour >= c.colour_count())
        throw InvalidArgument("monochromatic_subgraph: colour out of range");
    std::vector<std::pair<Vertex, Vertex>> kept;
    std::vector<EdgeIndex> original;
    for (EdgeIndex k = 0; k < g.edge_count(); ++k) {
        if (c.colour(k) == colour) {
            const Edge e = g.edge(k);
            kept.emplace_back(e.u, e.v);
            original.push_back(k);
        }
    }
    return {Graph(g.vertex_count(), std::move(kept)), std::move(original)};
}

bool verify_path(const Graph& g, const Colouring& c, const Path& p,
                 std::size_t target_len, std::uint32_t colour) {
    if (c.size() != g.edge_count() || colour >= c.colour_count()) return false;
    if (p.vertices.size() != target_len || target_len == 0) return false;
    if (p.edge_indices.size() + 1 != p.vertices.size()) return false;
    VertexSet seen(g.vertex_count());
    for (Vertex v : p.vertices) {
        if (v >= g.vertex_count() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (std::size_t i = 0; i < p.edge_indices.size(); ++i) {
        const EdgeIndex k = p.edge_indices[i];
        if (k >= g.edge_count()) return false;
        const Edge e = g.edge(k);
        const Vertex a = p.vertices[i], b = p.vertices[i + 1];
        if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) return false;
        if (c.colour(k) != colour) return false;
    }
    return true;
}

} // namespace ramsey
