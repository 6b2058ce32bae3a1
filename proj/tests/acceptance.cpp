// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every check is exact; time limits are in seconds on one thread.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "bdc/caterpillar.hpp"
#include "bdc/complex.hpp"
#include "bdc/enumerate.hpp"
#include "bdc/homology.hpp"
#include "bdc/recursion.hpp"
#include "oracles.hpp"

using namespace bdc;

namespace {

struct Outcome {
    bool ok = true;
    std::size_t instances = 0;
    std::string detail;

    void fail(const std::string& what) {
        if (ok) detail = what;
        ok = false;
    }
};

struct EulerTally {
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string first;

    void check(const SphereCountVector& v, const SimplicialComplex& k, const std::string& label) {
        ++checked;
        if (v.reduced_euler() != reduced_euler(k)) {
            if (failures++ == 0) first = label;
        }
    }
};

EulerTally euler;

std::optional<SphereCountVector> oracle_counts(const SimplicialComplex& k) {
    const WedgeOutcome w = wedge_profile(reduced_homology(k));
    if (const auto* v = std::get_if<SphereCountVector>(&w)) return *v;
    return std::nullopt;
}

std::string describe(const Graph& g, const DegreeBounds& b) {
    std::string s = "edges [";
    for (const auto& e : g.edges()) s += "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
    s += "] bounds [";
    for (int x : b.values()) s += std::to_string(x) + ",";
    return s + "]";
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

int failures = 0;

void report(int number, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_s > 0 && secs > limit_s) o.fail("took " + std::to_string(secs) + " s");
    if (!o.ok) ++failures;
    std::printf("%s criterion %d: %s [%zu instances, %.2f s%s]%s%s\n", o.ok ? "PASS" : "FAIL", number, title.c_str(),
                o.instances, secs, limit_s > 0 ? (", limit " + std::to_string(static_cast<int>(limit_s)) + " s").c_str() : "",
                o.ok ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
}

Outcome criterion1() {
    Outcome o;
    const CaterpillarSpec spec{{2, 1}, {2, 1}};
    const Instance in = gen_caterpillar(spec);
    if (in.bounds.values() != std::vector<int>{2, 1, 1, 1, 1}) o.fail("unexpected bound vector");
    const SimplicialComplex k = build_complex(in.graph, in.bounds);
    const std::vector<Face> maximal{Face::of({0, 1}), Face::of({0, 2}), Face::of({1, 2, 3})};
    // Maximal faces: those with no face one dimension up containing them.
    std::vector<Face> found;
    for (int d = 0; d <= k.dimension(); ++d) {
        for (Face f : k.faces(d)) {
            bool is_max = true;
            for (Face g : k.faces(d + 1)) is_max = is_max && (f.bits() & ~g.bits()) != 0;
            if (is_max) found.push_back(f);
        }
    }
    if (found != maximal) o.fail("maximal faces differ");
    const HomologyProfile h = reduced_homology(k);
    if (h.betti != std::map<int, std::size_t>{{1, 1}} || !h.torsion_free()) o.fail("homology is not {1:1}");
    const SphereCountVector expected{{1, 1}};
    if (caterpillar_closed_form(spec) != expected) o.fail("closed form is not {1:1}");
    if (sphere_counts(in.graph, in.bounds) != expected) o.fail("recursion is not {1:1}");
    o.instances = 1;
    return o;
}

Outcome criterion2() {
    Outcome o;
    for (int r = 1; r <= 8; ++r) {
        for (int k = 1; k <= 8; ++k) {
            const Instance star = gen_caterpillar({{r}, {k}});
            const HomologyProfile h = reduced_homology(build_complex(star.graph, star.bounds));
            ++o.instances;
            const std::string label = "k=" + std::to_string(k) + " r=" + std::to_string(r);
            if (!h.torsion_free()) o.fail(label + ": torsion");
            if (k < r) {
                const auto expected = static_cast<std::size_t>(binomial(r - 1, k));
                if (h.betti != std::map<int, std::size_t>{{k - 1, expected}}) o.fail(label + ": wrong Betti numbers");
            } else if (!h.betti.empty()) {
                o.fail(label + ": not acyclic");
            }
        }
    }
    return o;
}

Outcome criterion3() {
    Outcome o;
    MemoCache cache;
    for (const Graph& f : all_forests(7)) {
        for_each_bound_class(f, 3, [&](const DegreeBounds& b) {
            ++o.instances;
            const SimplicialComplex k = build_complex(f, b);
            const auto expected = oracle_counts(k);
            if (!expected) {
                o.fail("torsion on " + describe(f, b));
                return;
            }
            const SphereCountVector got = sphere_counts(f, b, &cache);
            if (got != *expected) o.fail("mismatch on " + describe(f, b));
            euler.check(got, k, "forest " + describe(f, b));
        });
    }
    return o;
}

Outcome criterion4() {
    Outcome o;
    MemoCache cache;
    for (std::size_t n = 1; n <= 4; ++n) {
        for_each_vector(n, 1, 3, [&](const std::vector<int>& m) {
            for_each_vector(n, 0, 3, [&](const std::vector<int>& lambda) {
                ++o.instances;
                const CaterpillarSpec spec{m, lambda};
                const Instance c = gen_caterpillar(spec);
                const SimplicialComplex k = build_complex(c.graph, c.bounds);
                const auto expected = oracle_counts(k);
                const SphereCountVector closed = caterpillar_closed_form(spec);
                const std::string label = describe(c.graph, c.bounds);
                if (!expected) {
                    o.fail("torsion on " + label);
                    return;
                }
                if (closed != *expected) o.fail("closed form mismatch on " + label);
                if (sphere_counts(c.graph, c.bounds, &cache) != *expected) o.fail("recursion mismatch on " + label);
                euler.check(closed, k, "caterpillar " + label);
            });
        });
    }
    return o;
}

Outcome criterion5() {
    Outcome o;
    for (std::size_t n = 3; n <= 7; ++n) {
        for_each_vector(n - 1, 0, 3, [&](const std::vector<int>& head) {
            for (int last : {0, 2, 3}) {
                ++o.instances;
                std::vector<int> lambda = head;
                lambda.push_back(last);
                const DegreeBounds b(lambda);
                const Graph cycle = gen_cycle(n);
                const std::string label = describe(cycle, b);
                const auto red = cycle_reduce(n, b);
                const auto* r = std::get_if<CycleReduction>(&red);
                if (r == nullptr) {
                    o.fail("not reducible: " + label);
                    continue;
                }
                const oracle::FaceSet cycle_faces = oracle::brute_force_faces(cycle, b);
                oracle::FaceSet mapped;
                bool ok = true;
                for (const auto& face : cycle_faces) {
                    std::vector<std::size_t> image;
                    for (std::size_t e : face) {
                        if (!r->edge_map[e]) ok = false;
                        else image.push_back(*r->edge_map[e]);
                    }
                    std::sort(image.begin(), image.end());
                    mapped.insert(image);
                }
                if (!ok || mapped.size() != cycle_faces.size() ||
                    mapped != oracle::brute_force_faces(r->path, r->bounds)) {
                    o.fail("face sets differ on " + label);
                }
                const SimplicialComplex kc = build_complex(cycle, b);
                const SimplicialComplex kp = build_complex(r->path, r->bounds);
                const HomologyProfile hc = reduced_homology(kc);
                if (hc != reduced_homology(kp)) o.fail("homology differs on " + label);
                const SphereCountVector path_counts = sphere_counts(r->path, r->bounds);
                const auto expected = oracle_counts(kc);
                if (!expected || path_counts != *expected) o.fail("sphere counts differ on " + label);
                euler.check(path_counts, kc, "cycle " + label);
            }
        });
    }
    return o;
}

Outcome criterion6() {
    Outcome o;
    for (std::size_t n = 1; n <= 3; ++n) {
        for_each_vector(n, 0, 3, [&](const std::vector<int>& m) {
            for (int k = 1; k <= 3; ++k) {
                ++o.instances;
                const Instance c = gen_caterpillar({m, std::vector<int>(n, k)});
                const DegreeBounds b(std::vector<int>(c.graph.num_vertices(), k));
                const HomologyProfile h = reduced_homology(build_complex(c.graph, b));
                if (!h.torsion_free()) o.fail("torsion on " + describe(c.graph, b));
            }
        });
    }
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 100; ++trial) {
        ++o.instances;
        const Graph f1 = random_forest(5, rng);
        const DegreeBounds b1 = random_bounds(f1.num_vertices(), 3, rng);
        const Graph f2 = random_forest(5, rng);
        const DegreeBounds b2 = random_bounds(f2.num_vertices(), 3, rng);
        const Instance u = disjoint_union({f1, b1}, {f2, b2});
        const SphereCountVector joined = join_convolve(sphere_counts(f1, b1), sphere_counts(f2, b2));
        if (sphere_counts(u.graph, u.bounds) != joined) o.fail("pair " + std::to_string(trial) + " differs");
        const auto expected = oracle_counts(build_complex(u.graph, u.bounds));
        if (!expected || *expected != joined) o.fail("pair " + std::to_string(trial) + " disagrees with homology");
    }
    return o;
}

Outcome criterion8() {
    Outcome o;
    o.instances = euler.checked;
    if (euler.checked == 0) o.fail("no instances were recorded");
    if (euler.failures != 0) o.fail(std::to_string(euler.failures) + " failures, first: " + euler.first);
    return o;
}

Outcome criterion9() {
    Outcome o;
    for (const Graph& f : all_forests(5)) {
        for_each_bound_class(f, 2, [&](const DegreeBounds& b) {
            ++o.instances;
            const SimplicialComplex k = build_complex(f, b);
            const auto w = grape_witness(k);
            if (!w) {
                o.fail("no witness for " + describe(f, b));
            } else if (!check_grape_witness(k, *w)) {
                o.fail("witness does not replay for " + describe(f, b));
            }
        });
    }
    return o;
}

}  // namespace

int main() {
    report(1, "two-spine caterpillar: maximal faces, homology, closed form, recursion", 1, criterion1);
    report(2, "star complexes BD^k(G_1(r)), 1<=k,r<=8", 10, criterion2);
    report(3, "forests with <= 7 edges, bounds in {0..3}: recursion = homology, torsion-free", 600, criterion3);
    report(4, "caterpillars n<=4, m_i in {1,2,3}, bounds in {0..3}: closed form = recursion = homology", 300,
           criterion4);
    report(5, "cycles n in 3..7, last bound in {0,2,3}: face sets and homology of the reduced path", 120, criterion5);
    report(6, "k-matching complexes of caterpillars n<=3, m_i<=3, k in {1,2,3}: torsion-free", 0, criterion6);
    report(7, "100 seeded random forest pairs: disjoint union = join convolution", 0, criterion7);
    report(8, "Euler characteristic of sphere counts on criteria 3-5", 0, criterion8);
    report(9, "grape witnesses for forests with <= 5 edges, bounds <= 2", 300, criterion9);
    std::printf("%s: %d criteria failed\n", failures == 0 ? "OK" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
