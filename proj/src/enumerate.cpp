#include "bdc/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace bdc {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    // Rejection sampling keeps the draw unbiased.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

std::vector<Graph> all_trees(std::size_t edges) {
    if (edges == 0) return {Graph(1, {})};
    std::vector<Graph> level{gen_path(2)};
    for (std::size_t k = 2; k <= edges; ++k) {
        std::vector<Graph> next;
        std::unordered_set<CanonicalKey> seen;
        for (const auto& t : level) {
            const std::size_t n = t.num_vertices();
            const DegreeBounds zeros(std::vector<int>(n + 1, 0));
            for (Vertex v = 0; v < n; ++v) {
                std::vector<Edge> grown = t.edges();
                grown.push_back({v, n});
                Graph g(n + 1, std::move(grown));
                if (seen.insert(canonical_code(g, zeros)).second) next.push_back(std::move(g));
            }
        }
        level = std::move(next);
    }
    return level;
}

std::vector<Graph> all_forests(std::size_t max_edges) {
    // Trees indexed by (edge count, position); a forest is a non-decreasing
    // sequence of such indices.
    std::vector<std::pair<std::size_t, Graph>> catalog;
    for (std::size_t k = 1; k <= max_edges; ++k) {
        for (auto& t : all_trees(k)) catalog.emplace_back(k, std::move(t));
    }

    std::vector<Graph> out;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t from, std::size_t budget) {
        if (!chosen.empty()) {
            Instance acc{Graph(0, {}), DegreeBounds()};
            for (std::size_t idx : chosen) {
                const Graph& t = catalog[idx].second;
                acc = disjoint_union(acc, {t, DegreeBounds(std::vector<int>(t.num_vertices(), 0))});
            }
            out.push_back(std::move(acc.graph));
        }
        for (std::size_t i = from; i < catalog.size(); ++i) {
            if (catalog[i].first > budget) continue;
            chosen.push_back(i);
            extend(i, budget - catalog[i].first);
            chosen.pop_back();
        }
    };
    extend(0, max_edges);
    return out;
}

void for_each_bound_class(const Graph& f, int max_bound,
                          const std::function<void(const DegreeBounds&)>& visit) {
    const std::size_t n = f.num_vertices();
    // Distinct effective values per vertex: 0..min(deg, max_bound).
    std::vector<int> top(n);
    for (Vertex v = 0; v < n; ++v) {
        top[v] = std::min(static_cast<int>(f.degree(v)), max_bound);
    }
    std::vector<int> digits(n, 0);
    std::unordered_set<CanonicalKey> seen;
    while (true) {
        std::vector<int> capped(n), shown(n);
        for (Vertex v = 0; v < n; ++v) {
            capped[v] = digits[v];
            shown[v] = digits[v] >= static_cast<int>(f.degree(v)) ? max_bound : digits[v];
        }
        if (seen.insert(canonical_code(f, DegreeBounds(capped))).second) visit(DegreeBounds(shown));

        std::size_t pos = 0;
        while (pos < n && digits[pos] == top[pos]) digits[pos++] = 0;
        if (pos == n) break;
        ++digits[pos];
    }
}

Graph random_tree(std::size_t vertices, std::mt19937_64& rng) {
    if (vertices <= 1) return Graph(vertices, {});
    if (vertices == 2) return gen_path(2);
    std::vector<Vertex> code(vertices - 2);
    for (auto& c : code) c = uniform_below(rng, vertices);

    std::vector<std::size_t> degree(vertices, 1);
    for (Vertex c : code) ++degree[c];
    std::vector<Edge> edges;
    for (Vertex c : code) {
        Vertex leaf = 0;
        while (degree[leaf] != 1) ++leaf;
        edges.push_back({leaf, c});
        --degree[leaf];
        --degree[c];
    }
    std::vector<Vertex> last;
    for (Vertex v = 0; v < vertices; ++v) {
        if (degree[v] == 1) last.push_back(v);
    }
    edges.push_back({last[0], last[1]});
    return Graph(vertices, std::move(edges));
}

Graph random_forest(std::size_t max_edges, std::mt19937_64& rng) {
    std::size_t budget = 1 + uniform_below(rng, max_edges);
    Instance acc{Graph(0, {}), DegreeBounds()};
    while (budget > 0) {
        const std::size_t k = 1 + uniform_below(rng, budget);
        const Graph t = random_tree(k + 1, rng);
        acc = disjoint_union(acc, {t, DegreeBounds(std::vector<int>(t.num_vertices(), 0))});
        budget -= k;
    }

    const std::size_t n = acc.graph.num_vertices();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
    std::vector<Edge> edges;
    for (const auto& e : acc.graph.edges()) edges.push_back({perm[e.u], perm[e.v]});
    for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[uniform_below(rng, i)]);
    return Graph(n, std::move(edges));
}

DegreeBounds random_bounds(std::size_t vertices, int max_bound, std::mt19937_64& rng) {
    std::vector<int> b(vertices);
    for (auto& x : b) x = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_bound) + 1));
    return DegreeBounds(std::move(b));
}

}  // namespace bdc
