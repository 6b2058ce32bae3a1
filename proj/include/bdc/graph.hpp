/**
 * Simple undirected graphs, per-vertex degree bounds, generators for the
 * path / cycle / caterpillar families and canonical codes for labeled forests.
 *
 * Vertex and edge identity is positional: edge i of a Graph is the i-th pair
 * in its edge list and is the name used for that edge as a complex vertex.
 */
#ifndef BDC_GRAPH_HPP
#define BDC_GRAPH_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace bdc {

using Vertex = std::size_t;
using EdgeIndex = std::size_t;

struct Edge {
    Vertex u;
    Vertex v;

    bool touches(Vertex x) const { return u == x || v == x; }
    Vertex other(Vertex x) const { return x == u ? v : u; }
    bool operator==(const Edge&) const = default;
};

class Graph {
public:
    Graph() = default;

    /// Validates simplicity and index ranges; throws Error on violation.
    Graph(std::size_t num_vertices, std::vector<Edge> edges);

    std::size_t num_vertices() const { return num_vertices_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeIndex i) const { return edges_[i]; }

    /// Edge indices incident to v, in increasing order.
    const std::vector<EdgeIndex>& incident(Vertex v) const { return incidence_[v]; }
    std::size_t degree(Vertex v) const { return incidence_[v].size(); }

    /// Copy of this graph without edge e. Vertex indices are unchanged, later
    /// edges shift down by one.
    Graph without_edge(EdgeIndex e) const;

    bool operator==(const Graph& other) const {
        return num_vertices_ == other.num_vertices_ && edges_ == other.edges_;
    }

private:
    std::size_t num_vertices_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeIndex>> incidence_;
};

/// One non-negative cap per vertex.
class DegreeBounds {
public:
    DegreeBounds() = default;
    explicit DegreeBounds(std::vector<int> bounds);

    std::size_t size() const { return bounds_.size(); }
    int operator[](Vertex v) const { return bounds_[v]; }
    const std::vector<int>& values() const { return bounds_; }

    bool operator==(const DegreeBounds&) const = default;

private:
    std::vector<int> bounds_;
};

/// G_n(m_1..m_n) together with the spine bounds; leaves are always capped at 1.
struct CaterpillarSpec {
    std::vector<int> leaves;        // m_i
    std::vector<int> spine_bounds;  // lambda_i

    std::size_t spine_length() const { return leaves.size(); }
    void validate() const;
};

/// Graph plus bounds; the unit every computation works on.
struct Instance {
    Graph graph;
    DegreeBounds bounds;
};

/// Throws unless bounds has one entry per vertex of g.
void check_bounds(const Graph& g, const DegreeBounds& b);

Graph make_graph(std::size_t num_vertices, const std::vector<std::pair<Vertex, Vertex>>& edges);

Graph gen_path(std::size_t n);

/// Edges (0,1),(1,2),...,(n-2,n-1) then the closing edge (0,n-1).
Graph gen_cycle(std::size_t n);

/// Spine vertices 0..n-1 first, then leaf blocks in spine order. Spine edges
/// come first in edge order, then leaf edges block by block. Bounds are
/// (lambda_1..lambda_n, 1, ..., 1).
Instance gen_caterpillar(const CaterpillarSpec& spec);

bool is_forest(const Graph& g);

/// A connected component with its maps back into the parent graph.
struct Component {
    Graph graph;
    DegreeBounds bounds;
    std::vector<Vertex> vertex_map;   // local vertex -> parent vertex
    std::vector<EdgeIndex> edge_map;  // local edge -> parent edge
};

/// Components with at least one edge, ordered by their smallest vertex.
std::vector<Component> components(const Graph& g, const DegreeBounds& b);

/// Disjoint union; vertices and edges of `second` are appended after `first`.
Instance disjoint_union(const Instance& first, const Instance& second);

using CanonicalKey = std::string;

/// Isomorphism-invariant code of a vertex-labeled forest (labels = bounds).
/// Throws NotAForest.
CanonicalKey canonical_code(const Graph& g, const DegreeBounds& b);

}  // namespace bdc

#endif  // BDC_GRAPH_HPP
