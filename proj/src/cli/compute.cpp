#include "bdc/cli/compute.hpp"

#include <chrono>
#include <limits>
#include <sstream>

#include "bdc/caterpillar.hpp"
#include "bdc/error.hpp"

namespace bdc::cli {

Method parse_method(const std::string& name) {
    if (name == "auto") return Method::Auto;
    if (name == "recursion") return Method::Recursion;
    if (name == "closed-form") return Method::ClosedForm;
    if (name == "homology") return Method::Homology;
    throw Error(ErrorCode::InvalidParams, "unknown method '" + name + "'");
}

std::string method_name(Method m) {
    switch (m) {
        case Method::Auto: return "auto";
        case Method::Recursion: return "recursion";
        case Method::ClosedForm: return "closed-form";
        case Method::Homology: return "homology";
    }
    return "auto";
}

namespace {

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

bool closed_form_applies(const ParsedInstance& p) {
    if (p.kind != InstanceKind::Caterpillar) return false;
    for (int m : p.caterpillar->leaves) {
        if (m == 0) return false;
    }
    return true;
}

struct OracleRun {
    HomologyProfile homology;
    std::optional<SphereCountVector> spheres;
};

OracleRun run_homology(const Instance& inst, const ComputeOptions& options, ComputeResult& r) {
    Stopwatch build;
    const SimplicialComplex k = build_complex(inst.graph, inst.bounds, options.face_cap);
    r.timing_ms["complex"] = build.elapsed_ms();
    Stopwatch snf;
    OracleRun run{reduced_homology(k), std::nullopt};
    r.timing_ms["homology"] = snf.elapsed_ms();
    const WedgeOutcome outcome = wedge_profile(run.homology);
    if (const auto* v = std::get_if<SphereCountVector>(&outcome)) run.spheres = *v;
    return run;
}

}  // namespace

ComputeResult compute(const ParsedInstance& p, const ComputeOptions& options) {
    ComputeResult r;
    Stopwatch total;
    const Instance& inst = p.instance;
    const bool forest = is_forest(inst.graph);

    Method method = options.method;
    if (method == Method::ClosedForm && !closed_form_applies(p)) {
        throw Error(ErrorCode::MethodMismatch,
                    "closed-form needs a caterpillar shorthand with every m_i >= 1");
    }
    if (method == Method::Recursion && !forest) {
        throw Error(ErrorCode::MethodMismatch, "recursion needs a forest");
    }

    std::optional<CycleReduction> reduction;
    if (method == Method::Auto) {
        if (closed_form_applies(p)) {
            method = Method::ClosedForm;
        } else if (forest) {
            method = Method::Recursion;
        } else if (p.kind == InstanceKind::Cycle) {
            auto red = cycle_reduce(inst.graph.num_vertices(), inst.bounds);
            if (auto* c = std::get_if<CycleReduction>(&red)) reduction = std::move(*c);
            method = reduction ? Method::Recursion : Method::Homology;
        } else {
            method = Method::Homology;
        }
    }

    switch (method) {
        case Method::ClosedForm: {
            Stopwatch w;
            r.spheres = caterpillar_closed_form(*p.caterpillar);
            r.timing_ms["closed_form"] = w.elapsed_ms();
            r.method_used = "closed-form";
            break;
        }
        case Method::Recursion: {
            Stopwatch w;
            if (reduction) {
                r.spheres = sphere_counts(reduction->path, reduction->bounds, options.cache);
                r.method_used = "cycle-reduction";
            } else {
                r.spheres = sphere_counts(inst.graph, inst.bounds, options.cache);
                r.method_used = "recursion";
            }
            r.timing_ms["recursion"] = w.elapsed_ms();
            break;
        }
        case Method::Homology:
        case Method::Auto: {
            OracleRun run = run_homology(inst, options, r);
            r.homology = std::move(run.homology);
            r.spheres = std::move(run.spheres);
            r.method_used = "homology";
            break;
        }
    }

    if (options.check && r.method_used != "homology") {
        OracleRun run = run_homology(inst, options, r);
        r.agreement = run.spheres.has_value() && run.spheres == r.spheres;
        r.homology = std::move(run.homology);
    }

    r.contractible = r.spheres.has_value() && r.spheres->is_contractible();
    r.timing_ms["total"] = total.elapsed_ms();
    if (!options.timings) r.timing_ms.clear();
    return r;
}

json spheres_json(const SphereCountVector& v) {
    json out = json::object();
    for (const auto& [d, c] : v.entries()) out[std::to_string(d)] = c;
    return out;
}

namespace {

json big_json(const BigInt& x) {
    if (x <= std::numeric_limits<std::int64_t>::max()) return static_cast<std::int64_t>(x);
    return x.str();
}

}  // namespace

json homology_json(const HomologyProfile& h) {
    json betti = json::object();
    for (const auto& [d, b] : h.betti) betti[std::to_string(d)] = b;
    json torsion = json::object();
    for (const auto& [d, factors] : h.torsion) {
        json list = json::array();
        for (const auto& f : factors) list.push_back(big_json(f));
        torsion[std::to_string(d)] = list;
    }
    return {{"betti", betti}, {"torsion", torsion}};
}

json result_json(const ParsedInstance& p, const ComputeResult& r) {
    json out;
    out["instance"] = p.source;
    out["method"] = r.method_used;
    out["contractible"] = r.contractible;
    out["spheres"] = r.spheres ? spheres_json(*r.spheres) : json(nullptr);
    if (r.homology) out["homology"] = homology_json(*r.homology);
    if (r.agreement) out["agreement"] = {{"oracle", "homology"}, {"agrees", *r.agreement}};
    if (!r.timing_ms.empty()) {
        json t = json::object();
        for (const auto& [phase, ms] : r.timing_ms) t[phase] = ms;
        out["timing_ms"] = t;
    }
    return out;
}

std::string result_table(const ParsedInstance& p, const ComputeResult& r) {
    std::ostringstream os;
    os << "instance     " << p.source.dump() << '\n';
    os << "method       " << r.method_used << '\n';
    if (!r.spheres) {
        os << "homotopy     not a wedge of spheres (torsion)\n";
    } else if (r.spheres->is_contractible()) {
        os << "homotopy     contractible\n";
    } else if (r.spheres->is_empty_complex()) {
        os << "homotopy     {emptyset} (S^-1)\n";
    } else {
        os << "homotopy    ";
        bool first = true;
        for (const auto& [d, c] : r.spheres->entries()) {
            os << (first ? " " : " v ") << c << " x S^" << d;
            first = false;
        }
        os << '\n';
    }
    if (r.homology) os << "homology     " << homology_json(*r.homology).dump() << '\n';
    if (r.agreement) os << "oracle       " << (*r.agreement ? "agrees" : "DISAGREES") << '\n';
    for (const auto& [phase, ms] : r.timing_ms) os << "time " << phase << "  " << ms << " ms\n";
    return os.str();
}

json error_json(const std::exception& e, std::optional<std::size_t> line) {
    json err;
    if (const auto* be = dynamic_cast<const Error*>(&e)) {
        err["code"] = std::string(to_string(be->code()));
    } else {
        err["code"] = "Internal";
    }
    err["message"] = e.what();
    if (line) err["line"] = *line;
    return {{"error", err}};
}

}  // namespace bdc::cli
