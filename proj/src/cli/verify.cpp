#include "bdc/cli/verify.hpp"

#include <random>

#include "bdc/caterpillar.hpp"
#include "bdc/cli/compute.hpp"
#include "bdc/cli/parallel.hpp"
#include "bdc/enumerate.hpp"
#include "bdc/error.hpp"
#include "bdc/homology.hpp"

namespace bdc::cli {

Family parse_family(const std::string& name) {
    if (name == "forests") return Family::Forests;
    if (name == "caterpillars") return Family::Caterpillars;
    if (name == "cycles") return Family::Cycles;
    if (name == "random") return Family::Random;
    if (name == "matching") return Family::Matching;
    throw Error(ErrorCode::InvalidParams, "unknown family '" + name + "'");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Forests: return "forests";
        case Family::Caterpillars: return "caterpillars";
        case Family::Cycles: return "cycles";
        case Family::Random: return "random";
        case Family::Matching: return "matching";
    }
    return "forests";
}

namespace {

// Calls visit(v) for every v in [lo, hi]^n, last coordinate fastest.
template <typename Visit>
void for_each_vector(std::size_t n, int lo, int hi, Visit&& visit) {
    if (hi < lo) return;
    std::vector<int> v(n, lo);
    while (true) {
        visit(v);
        std::size_t pos = n;
        while (pos > 0 && v[pos - 1] == hi) v[--pos] = lo;
        if (pos == 0) return;
        ++v[pos - 1];
    }
}

}  // namespace

std::vector<json> sweep_instances(const Sweep& s) {
    std::vector<json> out;
    switch (s.family) {
        case Family::Forests:
            for (const Graph& f : all_forests(s.max_edges)) {
                for_each_bound_class(f, s.max_bound,
                                     [&](const DegreeBounds& b) { out.push_back(explicit_json(f, b)); });
            }
            break;
        case Family::Caterpillars:
            for (std::size_t n = std::max<std::size_t>(1, s.min_n); n <= s.max_n; ++n) {
                for_each_vector(n, s.min_m, s.max_m, [&](const std::vector<int>& m) {
                    for_each_vector(n, 0, s.max_bound, [&](const std::vector<int>& lambda) {
                        out.push_back(caterpillar_json({m, lambda}));
                    });
                });
            }
            break;
        case Family::Cycles:
            for (std::size_t n = std::max<std::size_t>(3, s.min_n); n <= s.max_n; ++n) {
                for_each_vector(n, 0, s.max_bound, [&](const std::vector<int>& lambda) {
                    out.push_back(cycle_json(n, DegreeBounds(lambda)));
                });
            }
            break;
        case Family::Random: {
            std::mt19937_64 rng(s.seed);
            for (std::size_t i = 0; i < s.count; ++i) {
                const Graph f = random_forest(s.max_edges, rng);
                out.push_back(explicit_json(f, random_bounds(f.num_vertices(), s.max_bound, rng)));
            }
            break;
        }
        case Family::Matching:
            for (std::size_t n = std::max<std::size_t>(1, s.min_n); n <= s.max_n; ++n) {
                for_each_vector(n, s.min_m, s.max_m, [&](const std::vector<int>& m) {
                    for (int k = s.min_k; k <= s.max_k; ++k) {
                        const Instance c = gen_caterpillar({m, std::vector<int>(n, k)});
                        out.push_back(explicit_json(
                            c.graph, DegreeBounds(std::vector<int>(c.graph.num_vertices(), k))));
                    }
                });
            }
            break;
    }
    return out;
}

CheckOutcome check_instance(const ParsedInstance& p, std::size_t face_cap, MemoCache* cache) {
    CheckOutcome out;
    try {
        const Instance& inst = p.instance;
        const SimplicialComplex k = build_complex(inst.graph, inst.bounds, face_cap);
        const HomologyProfile h = reduced_homology(k);
        const WedgeOutcome wedge = wedge_profile(h);
        const auto* oracle = std::get_if<SphereCountVector>(&wedge);
        out.torsion = oracle == nullptr;
        if (out.torsion) {
            out.detail = "torsion in " + homology_json(h).dump();
            return out;
        }
        const std::int64_t chi = reduced_euler(k);
        if (h.euler_characteristic() != chi) {
            out.detail = "oracle Betti numbers disagree with the face-count Euler characteristic";
            return out;
        }

        std::vector<std::pair<std::string, SphereCountVector>> claims;
        if (is_forest(inst.graph)) claims.emplace_back("recursion", sphere_counts(inst.graph, inst.bounds, cache));
        if (p.caterpillar) {
            bool all_leaves = true;
            for (int m : p.caterpillar->leaves) all_leaves = all_leaves && m > 0;
            if (all_leaves) claims.emplace_back("closed-form", caterpillar_closed_form(*p.caterpillar));
        }
        if (p.kind == InstanceKind::Cycle) {
            const auto red = cycle_reduce(inst.graph.num_vertices(), inst.bounds);
            if (const auto* c = std::get_if<CycleReduction>(&red)) {
                const SimplicialComplex reduced = build_complex(c->path, c->bounds, face_cap);
                std::vector<Face> mapped;
                for (int d = 0; d <= k.dimension(); ++d) {
                    for (Face f : k.faces(d)) {
                        Face g;
                        for (std::size_t e : f.elements()) {
                            if (!c->edge_map[e]) throw Error(ErrorCode::InvalidParams, "face uses a dropped edge");
                            g = g.with(*c->edge_map[e]);
                        }
                        mapped.push_back(g);
                    }
                }
                if (SimplicialComplex::from_faces(reduced.ground_set(), mapped) != reduced ||
                    reduced.total_faces() != k.total_faces()) {
                    out.detail = "cycle reduction changed the face set";
                    return out;
                }
                claims.emplace_back("cycle-reduction", sphere_counts(c->path, c->bounds, cache));
            }
        }

        for (const auto& [name, v] : claims) {
            if (v != *oracle) {
                out.detail = name + " gives " + v.to_string() + ", homology gives " + oracle->to_string();
                return out;
            }
            if (v.reduced_euler() != chi) {
                out.detail = name + " fails the Euler characteristic check";
                return out;
            }
        }
        out.agree = true;
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    return out;
}

json VerifyReport::to_json() const {
    return {{"family", family},
            {"instances", instances},
            {"agreements", agreements},
            {"mismatches", mismatches},
            {"torsion", torsion},
            {"errors", errors},
            {"ok", ok()},
            {"first_counterexample", first_counterexample ? *first_counterexample : json(nullptr)},
            {"first_failure", first_failure ? json(*first_failure) : json(nullptr)}};
}

VerifyReport run_verify(const Sweep& sweep, std::size_t jobs, MemoCache* cache) {
    const std::vector<json> instances = sweep_instances(sweep);
    std::vector<CheckOutcome> outcomes(instances.size());
    parallel_for(instances.size(), jobs, [&](std::size_t i) {
        try {
            outcomes[i] = check_instance(parse_instance(instances[i]), default_face_cap, cache);
        } catch (const std::exception& e) {
            outcomes[i].error = e.what();
        }
    });

    VerifyReport report;
    report.family = family_name(sweep.family);
    report.instances = instances.size();
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const CheckOutcome& o = outcomes[i];
        if (o.agree) {
            ++report.agreements;
            continue;
        }
        if (o.error) {
            ++report.errors;
        } else if (o.torsion) {
            ++report.torsion;
        } else {
            ++report.mismatches;
        }
        if (!report.first_counterexample) {
            report.first_counterexample = instances[i];
            report.first_failure = o.error ? *o.error : o.detail;
        }
    }
    return report;
}

}  // namespace bdc::cli
