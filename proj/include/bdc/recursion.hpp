/**
 * Sphere counts of bounded degree complexes of forests, computed without
 * building the complex.
 *
 * Each connected piece with at least two edges is split along an edge {v,w}
 * that has a leaf hanging off v or w: the complex is the wedge of the
 * complex with that edge removed and the suspension of the complex with the
 * edge removed and both endpoint bounds lowered by one. Disjoint pieces
 * combine by join, which on sphere counts is a convolution.
 */
#ifndef BDC_RECURSION_HPP
#define BDC_RECURSION_HPP

#include <cstddef>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "bdc/graph.hpp"
#include "bdc/spheres.hpp"

namespace bdc {

/// Bounds of both endpoints of edge e lowered by one. Throws WouldGoNegative.
DegreeBounds decrement_bounds(const Graph& f, const DegreeBounds& b, EdgeIndex e);

/// Drops every edge touching a zero-bound vertex, then every isolated vertex.
/// The result has the same complex as the input under the surviving edges.
struct Simplified {
    Graph graph;
    DegreeBounds bounds;
    std::vector<EdgeIndex> edge_map;  // simplified edge -> input edge
};
Simplified simplify(const Graph& f, const DegreeBounds& b);

/// Smallest edge {v,w} such that a leaf outside {v,w} neighbors v or w;
/// nullopt when every component is a single edge.
std::optional<EdgeIndex> pick_recursion_edge(const Graph& f);

/// Every edge index satisfying the condition of pick_recursion_edge.
std::vector<EdgeIndex> recursion_edges(const Graph& f);

SphereCountVector join_convolve(const SphereCountVector& a, const SphereCountVector& b);

/// Thread-safe memo table keyed by canonical forest codes. Concurrent inserts
/// of the same key store equal values, so the last write wins.
class MemoCache {
public:
    std::optional<SphereCountVector> find(const CanonicalKey& key) const;
    void insert(const CanonicalKey& key, const SphereCountVector& value);
    std::size_t size() const;
    std::unordered_map<CanonicalKey, SphereCountVector> snapshot() const;

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<CanonicalKey, SphereCountVector> table_;
};

/// Throws NotAForest. `cache` may be null to disable memoization.
SphereCountVector sphere_counts(const Graph& f, const DegreeBounds& b, MemoCache* cache = nullptr);

/// One explicit split step on edge e of the simplified forest `f` (which must
/// satisfy the recursion_edges condition), then the default recursion.
SphereCountVector sphere_counts_split_on(const Graph& f, const DegreeBounds& b, EdgeIndex e,
                                         MemoCache* cache = nullptr);

}  // namespace bdc

#endif  // BDC_RECURSION_HPP
