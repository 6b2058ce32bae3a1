#include "bdc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bdc/error.hpp"

namespace bdc {

Graph::Graph(std::size_t num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)), incidence_(num_vertices) {
    std::set<std::pair<Vertex, Vertex>> seen;
    for (EdgeIndex i = 0; i < edges_.size(); ++i) {
        const auto [u, v] = edges_[i];
        if (u >= num_vertices_ || v >= num_vertices_) {
            throw Error(ErrorCode::IndexOutOfRange,
                        "edge " + std::to_string(i) + " references a vertex >= " +
                            std::to_string(num_vertices_));
        }
        if (u == v) {
            throw Error(ErrorCode::LoopEdge, "edge " + std::to_string(i) + " is a loop");
        }
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
            throw Error(ErrorCode::DuplicateEdge, "edge " + std::to_string(i) + " is repeated");
        }
        incidence_[u].push_back(i);
        incidence_[v].push_back(i);
    }
}

Graph Graph::without_edge(EdgeIndex e) const {
    std::vector<Edge> rest;
    rest.reserve(edges_.size() - 1);
    for (EdgeIndex i = 0; i < edges_.size(); ++i) {
        if (i != e) rest.push_back(edges_[i]);
    }
    return Graph(num_vertices_, std::move(rest));
}

DegreeBounds::DegreeBounds(std::vector<int> bounds) : bounds_(std::move(bounds)) {
    for (int b : bounds_) {
        if (b < 0) throw Error(ErrorCode::InvalidSpec, "degree bounds must be non-negative");
    }
}

void CaterpillarSpec::validate() const {
    if (leaves.empty()) throw Error(ErrorCode::InvalidSpec, "caterpillar spine length must be >= 1");
    if (leaves.size() != spine_bounds.size()) {
        throw Error(ErrorCode::InvalidSpec, "caterpillar m and lambda lengths differ");
    }
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        if (leaves[i] < 0 || spine_bounds[i] < 0) {
            throw Error(ErrorCode::InvalidSpec, "caterpillar entries must be non-negative");
        }
    }
}

void check_bounds(const Graph& g, const DegreeBounds& b) {
    if (b.size() != g.num_vertices()) {
        throw Error(ErrorCode::InvalidSpec, "expected " + std::to_string(g.num_vertices()) +
                                                " degree bounds, got " + std::to_string(b.size()));
    }
}

Graph make_graph(std::size_t num_vertices, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    std::vector<Edge> list;
    list.reserve(edges.size());
    for (const auto& [u, v] : edges) list.push_back({u, v});
    return Graph(num_vertices, std::move(list));
}

Graph gen_path(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidSize, "path needs at least one vertex");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph gen_cycle(std::size_t n) {
    if (n < 3) throw Error(ErrorCode::InvalidSize, "cycle needs at least three vertices");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return Graph(n, std::move(edges));
}

Instance gen_caterpillar(const CaterpillarSpec& spec) {
    spec.validate();
    const std::size_t n = spec.spine_length();
    const auto total_leaves =
        static_cast<std::size_t>(std::accumulate(spec.leaves.begin(), spec.leaves.end(), 0));

    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    Vertex next = n;
    for (Vertex i = 0; i < n; ++i) {
        for (int j = 0; j < spec.leaves[i]; ++j) edges.push_back({i, next++});
    }

    std::vector<int> bounds(spec.spine_bounds);
    bounds.resize(n + total_leaves, 1);
    return {Graph(n + total_leaves, std::move(edges)), DegreeBounds(std::move(bounds))};
}

bool is_forest(const Graph& g) {
    // Union-find: an edge joining two vertices already connected closes a cycle.
    std::vector<Vertex> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges()) {
        const Vertex a = find(e.u);
        const Vertex b = find(e.v);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

std::vector<Component> components(const Graph& g, const DegreeBounds& b) {
    check_bounds(g, b);
    const std::size_t n = g.num_vertices();
    std::vector<int> label(n, -1);
    std::vector<Component> out;

    for (Vertex start = 0; start < n; ++start) {
        if (label[start] != -1 || g.degree(start) == 0) continue;
        const int id = static_cast<int>(out.size());
        std::vector<Vertex> members{start};
        label[start] = id;
        for (std::size_t head = 0; head < members.size(); ++head) {
            const Vertex x = members[head];
            for (EdgeIndex e : g.incident(x)) {
                const Vertex y = g.edge(e).other(x);
                if (label[y] == -1) {
                    label[y] = id;
                    members.push_back(y);
                }
            }
        }
        std::sort(members.begin(), members.end());

        Component c;
        c.vertex_map = members;
        std::vector<Vertex> local(n, 0);
        std::vector<int> local_bounds;
        for (std::size_t i = 0; i < members.size(); ++i) {
            local[members[i]] = i;
            local_bounds.push_back(b[members[i]]);
        }
        std::vector<Edge> local_edges;
        for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
            if (label[g.edge(e).u] != id) continue;
            local_edges.push_back({local[g.edge(e).u], local[g.edge(e).v]});
            c.edge_map.push_back(e);
        }
        c.graph = Graph(members.size(), std::move(local_edges));
        c.bounds = DegreeBounds(std::move(local_bounds));
        out.push_back(std::move(c));
    }
    return out;
}

Instance disjoint_union(const Instance& first, const Instance& second) {
    const std::size_t offset = first.graph.num_vertices();
    std::vector<Edge> edges = first.graph.edges();
    for (const auto& e : second.graph.edges()) edges.push_back({e.u + offset, e.v + offset});
    std::vector<int> bounds = first.bounds.values();
    bounds.insert(bounds.end(), second.bounds.values().begin(), second.bounds.values().end());
    return {Graph(offset + second.graph.num_vertices(), std::move(edges)),
            DegreeBounds(std::move(bounds))};
}

namespace {

// AHU code of the subtree hanging from `root` (away from `parent`), with the
// vertex label spliced in ahead of the sorted child codes.
std::string rooted_code(const Graph& g, const DegreeBounds& b, Vertex root, Vertex parent) {
    std::vector<std::string> children;
    for (EdgeIndex e : g.incident(root)) {
        const Vertex child = g.edge(e).other(root);
        if (child != parent) children.push_back(rooted_code(g, b, child, root));
    }
    std::sort(children.begin(), children.end());
    std::string code = "(" + std::to_string(b[root]);
    for (const auto& c : children) code += c;
    code += ")";
    return code;
}

// One or two centers of the tree containing `members`, found by peeling leaves.
std::vector<Vertex> tree_centers(const Graph& g, const std::vector<Vertex>& members) {
    if (members.size() <= 2) return members;
    std::vector<std::size_t> degree(g.num_vertices(), 0);
    std::vector<Vertex> layer;
    for (Vertex v : members) {
        degree[v] = g.degree(v);
        if (degree[v] <= 1) layer.push_back(v);
    }
    std::size_t remaining = members.size();
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<Vertex> next;
        for (Vertex leaf : layer) {
            for (EdgeIndex e : g.incident(leaf)) {
                const Vertex y = g.edge(e).other(leaf);
                if (--degree[y] == 1) next.push_back(y);
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

}  // namespace

CanonicalKey canonical_code(const Graph& g, const DegreeBounds& b) {
    check_bounds(g, b);
    if (!is_forest(g)) throw Error(ErrorCode::NotAForest, "canonical codes are defined for forests only");

    const std::size_t n = g.num_vertices();
    constexpr Vertex none = static_cast<Vertex>(-1);
    std::vector<bool> seen(n, false);
    std::vector<std::string> trees;
    for (Vertex start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<Vertex> members{start};
        seen[start] = true;
        for (std::size_t head = 0; head < members.size(); ++head) {
            for (EdgeIndex e : g.incident(members[head])) {
                const Vertex y = g.edge(e).other(members[head]);
                if (!seen[y]) {
                    seen[y] = true;
                    members.push_back(y);
                }
            }
        }
        std::string best;
        for (Vertex c : tree_centers(g, members)) {
            std::string code = rooted_code(g, b, c, none);
            if (best.empty() || code < best) best = std::move(code);
        }
        trees.push_back(std::move(best));
    }
    std::sort(trees.begin(), trees.end());

    CanonicalKey key;
    for (const auto& t : trees) key += t;
    return key;
}

}  // namespace bdc
