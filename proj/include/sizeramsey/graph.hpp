#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace ramsey {

using Vertex = std::uint32_t;
using EdgeIndex = std::uint32_t;

/// Undirected edge, stored with u < v.
struct Edge {
    Vertex u;
    Vertex v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Subset of [0, universe) with cached cardinality.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    static VertexSet from_vertices(std::size_t universe, std::span<const Vertex> vs);
    static VertexSet from_vertices(std::size_t universe, std::initializer_list<Vertex> vs);

    bool contains(Vertex v) const {
        return bits_[v >> 6] >> (v & 63) & 1;
    }
    void insert(Vertex v);
    void erase(Vertex v);
    std::size_t cardinality() const { return count_; }
    std::size_t universe_size() const { return universe_; }
    bool empty() const { return count_ == 0; }
    bool disjoint_with(const VertexSet& other) const;
    std::vector<Vertex> to_vector() const; // ascending

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t universe_ = 0;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Immutable simple graph on dense vertex indices [0, vertex_count).
/// Edges keep their construction order, so a colouring is a positional
/// array aligned with the edge list. Neighbour lists are sorted ascending
/// and carry back-references to edge indices.
class Graph {
public:
    struct Arc {
        Vertex to;
        EdgeIndex edge;
    };

    Graph(); // the empty graph on zero vertices
    Graph(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    Edge edge(EdgeIndex k) const { return edges_[k]; }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const Arc> neighbours(Vertex v) const {
        return {adj_.data() + adj_offsets_[v], adj_.data() + adj_offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const {
        return adj_offsets_[v + 1] - adj_offsets_[v];
    }

    static Graph complete(std::size_t k);

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<Arc> adj_;
    std::vector<std::uint32_t> adj_offsets_;
};

/// Assignment of one of r colours to each edge index of a companion graph.
class Colouring {
public:
    Colouring(std::uint32_t colour_count, std::vector<std::uint32_t> assignment);

    std::uint32_t colour_count() const { return colour_count_; }
    std::uint32_t colour(EdgeIndex k) const { return assignment_[k]; }
    std::size_t size() const { return assignment_.size(); }
    std::span<const std::uint32_t> values() const { return assignment_; }
    std::vector<std::size_t> class_sizes() const;

    friend bool operator==(const Colouring&, const Colouring&) = default;

private:
    std::uint32_t colour_count_ = 1;
    std::vector<std::uint32_t> assignment_;
};

/// Simple path: distinct vertices plus the edge index joining each
/// consecutive pair.
struct Path {
    std::vector<Vertex> vertices;
    std::vector<EdgeIndex> edge_indices;

    std::size_t length_vertices() const { return vertices.size(); }
    friend bool operator==(const Path&, const Path&) = default;
};

/// Number of edges of g induced by s ∪ t that have at least one endpoint
/// in s. Requires s, t disjoint over g's vertex range.
std::size_t induced_edge_count(const Graph& g, const VertexSet& s, const VertexSet& t);

struct MonoSubgraph {
    Graph graph;                            // spanning: same vertex count
    std::vector<EdgeIndex> original_edge;   // subgraph edge k -> edge index in g
};

/// Spanning subgraph keeping exactly the edges of one colour, in their
/// original relative order, with the mapping back to g's edge indices.
MonoSubgraph monochromatic_subgraph(const Graph& g, const Colouring& c, std::uint32_t colour);

/// True iff p has exactly target_len distinct vertices, every consecutive
/// pair is joined by the stated edge of g, and every traversed edge has the
/// given colour. Malformed paths yield false; nothing throws.
bool verify_path(const Graph& g, const Colouring& c, const Path& p,
                 std::size_t target_len, std::uint32_t colour);

} // namespace ramsey
