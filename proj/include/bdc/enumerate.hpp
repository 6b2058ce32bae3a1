#ifndef BDC_ENUMERATE_HPP
#define BDC_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "bdc/graph.hpp"

namespace bdc {

/// Trees with exactly `edges` edges, one per isomorphism class.
std::vector<Graph> all_trees(std::size_t edges);

/// Forests without isolated vertices having 1..max_edges edges, one per
/// isomorphism class.
std::vector<Graph> all_forests(std::size_t max_edges);

/// Calls `visit` once per label-preserving isomorphism class of bound vectors
/// on the forest `f` with entries in {0..max_bound}. Bounds at or above a
/// vertex's degree give the same complex, so each class is represented with
/// max_bound in place of any such saturated value.
void for_each_bound_class(const Graph& f, int max_bound,
                          const std::function<void(const DegreeBounds&)>& visit);

/// Uniform labeled tree on `vertices` vertices from a Pruefer sequence.
Graph random_tree(std::size_t vertices, std::mt19937_64& rng);

/// Random forest with 1..max_edges edges: a few random trees glued side by
/// side, vertices relabeled by a random permutation.
Graph random_forest(std::size_t max_edges, std::mt19937_64& rng);

/// Bound vector with entries uniform in {0..max_bound}.
DegreeBounds random_bounds(std::size_t vertices, int max_bound, std::mt19937_64& rng);

/// Portable uniform draw in [0, n); std distributions are not reproducible
/// across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

}  // namespace bdc

#endif  // BDC_ENUMERATE_HPP
