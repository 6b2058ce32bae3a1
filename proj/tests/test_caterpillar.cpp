#include <doctest.h>

#include "bdc/caterpillar.hpp"
#include "bdc/error.hpp"
#include "bdc/homology.hpp"
#include "bdc/recursion.hpp"
#include "oracles.hpp"

using namespace bdc;

namespace {

SphereCountVector oracle_counts(const Graph& g, const DegreeBounds& b) {
    const WedgeOutcome w = wedge_profile(reduced_homology(build_complex(g, b)));
    REQUIRE(std::holds_alternative<SphereCountVector>(w));
    return std::get<SphereCountVector>(w);
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::InvalidParams;
}

template <typename Visit>
void for_each_vector(std::size_t n, int lo, int hi, Visit&& visit) {
    std::vector<int> v(n, lo);
    while (true) {
        visit(v);
        std::size_t pos = 0;
        while (pos < n && v[pos] == hi) v[pos++] = lo;
        if (pos == n) return;
        ++v[pos];
    }
}

}  // namespace

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(60, 30) == 118264581564861424ULL);
}

TEST_CASE("star profiles") {
    CHECK(star_profile(1, 3) == SphereCountVector{{0, 2}});
    CHECK(star_profile(3, 2).is_contractible());
    CHECK(star_profile(0, 5) == SphereCountVector::empty_complex());
    CHECK(star_profile(2, 4) == SphereCountVector{{1, 3}});
    CHECK(code_of([] { star_profile(1, 0); }) == ErrorCode::InvalidStar);
}

TEST_CASE("star profiles match the oracle and the recursion") {
    for (int r = 1; r <= 8; ++r) {
        for (int k = 0; k <= 8; ++k) {
            const Instance star = gen_caterpillar({{r}, {k}});
            const SphereCountVector expected = star_profile(k, r);
            CHECK(oracle_counts(star.graph, star.bounds) == expected);
            CHECK(sphere_counts(star.graph, star.bounds) == expected);
            CHECK(caterpillar_closed_form({{r}, {k}}) == expected);
        }
    }
}

TEST_CASE("closed form: fixed examples") {
    CHECK(caterpillar_closed_form({{2, 1}, {2, 1}}) == SphereCountVector{{1, 1}});
    const SphereCountVector v = caterpillar_closed_form({{4, 3}, {1, 1}});
    CHECK(v == SphereCountVector{{0, 1}, {1, 6}});
    const Instance c = gen_caterpillar({{4, 3}, {1, 1}});
    CHECK(oracle_counts(c.graph, c.bounds) == v);
    CHECK(caterpillar_closed_form({{1}, {1}}).is_contractible());
    CHECK(code_of([] { caterpillar_closed_form({{2, 0}, {1, 1}}); }) == ErrorCode::HypothesisViolated);
    CHECK(code_of([] { caterpillar_closed_form({{2}, {1, 1}}); }) == ErrorCode::InvalidSpec);
}

TEST_CASE("spine subsets") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
            const SpineSubset t(n, mask);
            int degrees = 0;
            int flags = 0;
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(t.degree(i) >= 0);
                CHECK(t.degree(i) <= 2);
                degrees += t.degree(i);
                flags += t.suspension_flag(i);
            }
            CHECK(degrees == 2 * static_cast<int>(t.size()));
            CHECK(flags == static_cast<int>(t.size()));
        }
    }
    CHECK_THROWS_AS(SpineSubset(3, 0b100), Error);
}

TEST_CASE("closed form = recursion = oracle on small caterpillars") {
    MemoCache cache;
    for (std::size_t n = 1; n <= 3; ++n) {
        for_each_vector(n, 1, 3, [&](const std::vector<int>& m) {
            for_each_vector(n, 0, 3, [&](const std::vector<int>& lambda) {
                const CaterpillarSpec spec{m, lambda};
                const Instance c = gen_caterpillar(spec);
                const SphereCountVector closed = caterpillar_closed_form(spec);
                CHECK(closed == sphere_counts(c.graph, c.bounds, &cache));
                CHECK(closed == oracle_counts(c.graph, c.bounds));
            });
        });
    }
}

TEST_CASE("cycle reduction: fixed examples") {
    const auto a = cycle_reduce(3, DegreeBounds({1, 1, 2}));
    REQUIRE(std::holds_alternative<CycleReduction>(a));
    const auto& ra = std::get<CycleReduction>(a);
    CHECK(ra.path == gen_path(4));
    CHECK(ra.bounds.values() == std::vector<int>{1, 1, 1, 1});
    CHECK(sphere_counts(ra.path, ra.bounds) == SphereCountVector{{0, 1}});
    CHECK(oracle_counts(gen_cycle(3), DegreeBounds({1, 1, 2})) == SphereCountVector{{0, 1}});

    const auto b = cycle_reduce(4, DegreeBounds({1, 1, 1, 0}));
    REQUIRE(std::holds_alternative<CycleReduction>(b));
    const auto& rb = std::get<CycleReduction>(b);
    CHECK(rb.path == gen_path(3));
    CHECK(rb.bounds.values() == std::vector<int>{1, 1, 1});

    CHECK(std::holds_alternative<NotReducible>(cycle_reduce(5, DegreeBounds({1, 1, 1, 1, 1}))));
    CHECK(code_of([] { cycle_reduce(2, DegreeBounds({1, 1})); }) == ErrorCode::InvalidSize);
}

TEST_CASE("cycle reduction preserves the face set") {
    for (std::size_t n = 3; n <= 7; ++n) {
        for_each_vector(n, 0, 3, [&](const std::vector<int>& lambda) {
            const DegreeBounds b(lambda);
            const auto red = cycle_reduce(n, b);
            if (std::holds_alternative<NotReducible>(red)) {
                CHECK(std::all_of(lambda.begin(), lambda.end(), [](int x) { return x == 1; }));
                return;
            }
            const auto& r = std::get<CycleReduction>(red);
            const oracle::FaceSet cycle_faces = oracle::brute_force_faces(gen_cycle(n), b);
            oracle::FaceSet mapped;
            bool dropped_edge_used = false;
            for (const auto& face : cycle_faces) {
                std::vector<std::size_t> image;
                for (std::size_t e : face) {
                    if (!r.edge_map[e]) {
                        dropped_edge_used = true;
                        continue;
                    }
                    image.push_back(*r.edge_map[e]);
                }
                std::sort(image.begin(), image.end());
                mapped.insert(image);
            }
            CHECK_FALSE(dropped_edge_used);
            CHECK(mapped.size() == cycle_faces.size());
            CHECK(mapped == oracle::brute_force_faces(r.path, r.bounds));
        });
    }
}
