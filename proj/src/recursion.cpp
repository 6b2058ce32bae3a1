#include "bdc/recursion.hpp"

#include <algorithm>
#include <mutex>

#include "bdc/error.hpp"

namespace bdc {

DegreeBounds decrement_bounds(const Graph& f, const DegreeBounds& b, EdgeIndex e) {
    check_bounds(f, b);
    if (e >= f.num_edges()) throw Error(ErrorCode::IndexOutOfRange, "no edge " + std::to_string(e));
    const auto [u, v] = f.edge(e);
    if (b[u] == 0 || b[v] == 0) {
        throw Error(ErrorCode::WouldGoNegative, "edge " + std::to_string(e) + " has a zero-bound endpoint");
    }
    std::vector<int> out = b.values();
    --out[u];
    --out[v];
    return DegreeBounds(std::move(out));
}

Simplified simplify(const Graph& f, const DegreeBounds& b) {
    check_bounds(f, b);
    if (!is_forest(f)) throw Error(ErrorCode::NotAForest, "simplify expects a forest");

    std::vector<EdgeIndex> kept;
    std::vector<bool> used(f.num_vertices(), false);
    for (EdgeIndex e = 0; e < f.num_edges(); ++e) {
        const auto [u, v] = f.edge(e);
        if (b[u] == 0 || b[v] == 0) continue;
        kept.push_back(e);
        used[u] = used[v] = true;
    }
    std::vector<Vertex> renumber(f.num_vertices(), 0);
    std::vector<int> bounds;
    for (Vertex v = 0; v < f.num_vertices(); ++v) {
        if (!used[v]) continue;
        renumber[v] = bounds.size();
        bounds.push_back(b[v]);
    }
    std::vector<Edge> edges;
    for (EdgeIndex e : kept) edges.push_back({renumber[f.edge(e).u], renumber[f.edge(e).v]});
    return {Graph(bounds.size(), std::move(edges)), DegreeBounds(std::move(bounds)), std::move(kept)};
}

namespace {

bool has_outside_leaf(const Graph& f, EdgeIndex e) {
    const auto [v, w] = f.edge(e);
    for (Vertex end : {v, w}) {
        for (EdgeIndex i : f.incident(end)) {
            const Vertex u = f.edge(i).other(end);
            if (u != v && u != w && f.degree(u) == 1) return true;
        }
    }
    return false;
}

}  // namespace

std::vector<EdgeIndex> recursion_edges(const Graph& f) {
    std::vector<EdgeIndex> out;
    for (EdgeIndex e = 0; e < f.num_edges(); ++e) {
        if (has_outside_leaf(f, e)) out.push_back(e);
    }
    return out;
}

std::optional<EdgeIndex> pick_recursion_edge(const Graph& f) {
    for (EdgeIndex e = 0; e < f.num_edges(); ++e) {
        if (has_outside_leaf(f, e)) return e;
    }
    return std::nullopt;
}

SphereCountVector join_convolve(const SphereCountVector& a, const SphereCountVector& b) {
    SphereCountVector out;
    if (a.is_contractible() || b.is_contractible()) return out;
    for (const auto& [p, x] : a.entries()) {
        for (const auto& [q, y] : b.entries()) out.add(p + q + 1, checked_mul(x, y));
    }
    return out;
}

std::optional<SphereCountVector> MemoCache::find(const CanonicalKey& key) const {
    std::shared_lock lock(mutex_);
    const auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

void MemoCache::insert(const CanonicalKey& key, const SphereCountVector& value) {
    std::unique_lock lock(mutex_);
    table_.insert_or_assign(key, value);
}

std::size_t MemoCache::size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
}

std::unordered_map<CanonicalKey, SphereCountVector> MemoCache::snapshot() const {
    std::shared_lock lock(mutex_);
    return table_;
}

namespace {

SphereCountVector forest_counts(const Graph& f, const DegreeBounds& b, MemoCache* cache);

// Wedge of the deletion of e and the suspension of its link.
SphereCountVector split(const Graph& tree, const DegreeBounds& b, EdgeIndex e, MemoCache* cache) {
    const Graph rest = tree.without_edge(e);
    return forest_counts(rest, b, cache) +
           forest_counts(rest, decrement_bounds(tree, b, e), cache).shifted(1);
}

// Connected, simplified, at least one edge.
SphereCountVector tree_counts(const Graph& tree, const DegreeBounds& b, MemoCache* cache) {
    if (tree.num_edges() == 1) return SphereCountVector::contractible();

    // Bounds at or above the degree impose nothing; capping them lets more
    // instances share a cache entry.
    CanonicalKey key;
    if (cache != nullptr) {
        std::vector<int> capped(b.values());
        for (Vertex v = 0; v < tree.num_vertices(); ++v) {
            capped[v] = std::min(capped[v], static_cast<int>(tree.degree(v)));
        }
        key = canonical_code(tree, DegreeBounds(std::move(capped)));
        if (auto hit = cache->find(key)) return *hit;
    }

    const auto e = pick_recursion_edge(tree);
    SphereCountVector result = split(tree, b, *e, cache);
    if (cache != nullptr) cache->insert(key, result);
    return result;
}

SphereCountVector forest_counts(const Graph& f, const DegreeBounds& b, MemoCache* cache) {
    const Simplified s = simplify(f, b);
    SphereCountVector result = SphereCountVector::empty_complex();
    for (const Component& c : components(s.graph, s.bounds)) {
        result = join_convolve(result, tree_counts(c.graph, c.bounds, cache));
        if (result.is_contractible()) break;
    }
    return result;
}

}  // namespace

SphereCountVector sphere_counts(const Graph& f, const DegreeBounds& b, MemoCache* cache) {
    check_bounds(f, b);
    if (!is_forest(f)) throw Error(ErrorCode::NotAForest, "the recursion applies to forests only");
    return forest_counts(f, b, cache);
}

SphereCountVector sphere_counts_split_on(const Graph& f, const DegreeBounds& b, EdgeIndex e,
                                         MemoCache* cache) {
    check_bounds(f, b);
    if (!is_forest(f)) throw Error(ErrorCode::NotAForest, "the recursion applies to forests only");
    if (e >= f.num_edges() || !has_outside_leaf(f, e)) {
        throw Error(ErrorCode::InvalidParams, "edge " + std::to_string(e) + " has no leaf outside it");
    }
    for (Vertex x = 0; x < f.num_vertices(); ++x) {
        if (b[x] == 0 && f.degree(x) > 0) {
            throw Error(ErrorCode::InvalidParams, "split step needs a simplified forest");
        }
    }
    return split(f, b, e, cache);
}

}  // namespace bdc
