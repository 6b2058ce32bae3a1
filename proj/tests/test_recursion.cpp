#include <doctest.h>

#include <random>

#include "bdc/enumerate.hpp"
#include "bdc/error.hpp"
#include "bdc/homology.hpp"
#include "bdc/recursion.hpp"

using namespace bdc;

namespace {

SphereCountVector oracle_counts(const Graph& f, const DegreeBounds& b) {
    const WedgeOutcome w = wedge_profile(reduced_homology(build_complex(f, b)));
    REQUIRE(std::holds_alternative<SphereCountVector>(w));
    return std::get<SphereCountVector>(w);
}

}  // namespace

TEST_CASE("decrement_bounds") {
    const Graph p3 = gen_path(3);
    CHECK(decrement_bounds(p3, DegreeBounds({1, 2, 1}), 0).values() == std::vector<int>{0, 1, 1});
    CHECK(decrement_bounds(p3, DegreeBounds({3, 3, 3}), 1).values() == std::vector<int>{3, 2, 2});
    try {
        decrement_bounds(p3, DegreeBounds({0, 1, 1}), 0);
        FAIL("expected WouldGoNegative");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::WouldGoNegative);
    }
}

TEST_CASE("simplify") {
    const Simplified a = simplify(gen_path(3), DegreeBounds({0, 1, 1}));
    CHECK(a.graph == gen_path(2));
    CHECK(a.bounds.values() == std::vector<int>{1, 1});
    CHECK(a.edge_map == std::vector<EdgeIndex>{1});

    const Simplified b = simplify(gen_path(3), DegreeBounds({1, 0, 1}));
    CHECK(b.graph.num_vertices() == 0);
    CHECK(b.graph.num_edges() == 0);

    const Simplified c = simplify(gen_path(4), DegreeBounds({2, 1, 1, 3}));
    CHECK(c.graph == gen_path(4));
    CHECK(c.bounds.values() == std::vector<int>{2, 1, 1, 3});

    CHECK_THROWS_AS(simplify(gen_cycle(3), DegreeBounds({1, 1, 1})), Error);
}

TEST_CASE("recursion edge choice") {
    CHECK(pick_recursion_edge(gen_path(3)) == EdgeIndex{0});
    CHECK(pick_recursion_edge(gen_path(4)) == EdgeIndex{1});
    CHECK_FALSE(pick_recursion_edge(gen_path(2)).has_value());
    CHECK(recursion_edges(gen_path(5)) == std::vector<EdgeIndex>{1, 2});

    // Every tree with at least two edges has a usable edge.
    for (std::size_t k = 2; k <= 7; ++k)
        for (const Graph& t : all_trees(k)) CHECK(pick_recursion_edge(t).has_value());
}

TEST_CASE("join_convolve") {
    const auto s0 = SphereCountVector{{0, 1}};
    CHECK(join_convolve(s0, s0) == SphereCountVector{{1, 1}});
    CHECK(join_convolve(SphereCountVector{{0, 2}, {1, 1}}, SphereCountVector{{2, 3}}) ==
          SphereCountVector{{3, 6}, {4, 3}});
    CHECK(join_convolve(SphereCountVector::empty_complex(), SphereCountVector{{1, 4}}) == SphereCountVector{{1, 4}});
    CHECK(join_convolve(SphereCountVector::contractible(), SphereCountVector{{1, 4}}).is_contractible());
    CHECK(join_convolve(SphereCountVector{{1, 4}}, SphereCountVector::contractible()).is_contractible());
}

TEST_CASE("sphere_counts: fixed examples") {
    CHECK(sphere_counts(gen_path(3), DegreeBounds({1, 1, 1})) == SphereCountVector{{0, 1}});
    CHECK(sphere_counts(gen_path(2), DegreeBounds({0, 1})) == SphereCountVector::empty_complex());
    CHECK(sphere_counts(gen_path(2), DegreeBounds({1, 1})).is_contractible());
    const Instance fig2 = gen_caterpillar({{2, 1}, {2, 1}});
    CHECK(sphere_counts(fig2.graph, fig2.bounds) == SphereCountVector{{1, 1}});
    CHECK(sphere_counts(Graph(3, {}), DegreeBounds({1, 1, 1})) == SphereCountVector::empty_complex());
    CHECK_THROWS_AS(sphere_counts(gen_cycle(4), DegreeBounds({1, 1, 1, 1})), Error);
}

TEST_CASE("the result does not depend on the split edge") {
    std::mt19937_64 rng(31);
    std::size_t splits = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const Graph f = random_forest(9, rng);
        const DegreeBounds b = random_bounds(f.num_vertices(), 3, rng);
        const Simplified s = simplify(f, b);
        const SphereCountVector reference = sphere_counts(f, b);
        for (EdgeIndex e : recursion_edges(s.graph)) {
            CHECK(sphere_counts_split_on(s.graph, s.bounds, e) == reference);
            ++splits;
        }
    }
    CHECK(splits > 100);
    CHECK_THROWS_AS(sphere_counts_split_on(gen_path(2), DegreeBounds({1, 1}), 0), Error);
}

TEST_CASE("the memo cache does not change results") {
    MemoCache cache;
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph f = random_forest(10, rng);
        const DegreeBounds b = random_bounds(f.num_vertices(), 3, rng);
        CHECK(sphere_counts(f, b, &cache) == sphere_counts(f, b));
    }
    CHECK(cache.size() > 0);
}

TEST_CASE("the empty-complex entry appears exactly when no edge survives") {
    for (const Graph& f : all_forests(5)) {
        for_each_bound_class(f, 2, [&](const DegreeBounds& b) {
            const bool empty = simplify(f, b).graph.num_edges() == 0;
            const SphereCountVector v = sphere_counts(f, b);
            CHECK((v[-1] != 0) == empty);
            if (empty) CHECK(v == SphereCountVector::empty_complex());
        });
    }
}

TEST_CASE("recursion agrees with the homology oracle on forests up to 5 edges") {
    MemoCache cache;
    for (const Graph& f : all_forests(5)) {
        for_each_bound_class(f, 3, [&](const DegreeBounds& b) {
            CHECK(sphere_counts(f, b, &cache) == oracle_counts(f, b));
        });
    }
}
