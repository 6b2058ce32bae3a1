#ifndef BDC_CLI_COMPUTE_HPP
#define BDC_CLI_COMPUTE_HPP

#include <map>
#include <optional>
#include <string>

#include "bdc/cli/instance.hpp"
#include "bdc/complex.hpp"
#include "bdc/homology.hpp"
#include "bdc/recursion.hpp"

namespace bdc::cli {

enum class Method { Auto, Recursion, ClosedForm, Homology };

Method parse_method(const std::string& name);
std::string method_name(Method m);

struct ComputeOptions {
    Method method = Method::Auto;
    std::size_t face_cap = default_face_cap;
    bool check = false;    // also run the homology oracle and report agreement
    bool timings = false;  // include wall-clock timings (breaks byte-stability)
    MemoCache* cache = nullptr;
};

struct ComputeResult {
    std::optional<SphereCountVector> spheres;  // nullopt when torsion was found
    bool contractible = false;
    std::optional<HomologyProfile> homology;
    std::string method_used;
    std::map<std::string, double> timing_ms;
    std::optional<bool> agreement;
};

/// Dispatches one instance. Auto prefers the caterpillar closed form, then the
/// forest recursion, then the cycle reduction, and falls back to homology.
/// Throws MethodMismatch when the forced method does not apply.
ComputeResult compute(const ParsedInstance& p, const ComputeOptions& options);

json spheres_json(const SphereCountVector& v);
json homology_json(const HomologyProfile& h);

/// Result object with keys in sorted order; without timings it is a pure
/// function of the instance and flags.
json result_json(const ParsedInstance& p, const ComputeResult& r);
std::string result_table(const ParsedInstance& p, const ComputeResult& r);

json error_json(const std::exception& e, std::optional<std::size_t> line = std::nullopt);

}  // namespace bdc::cli

#endif  // BDC_CLI_COMPUTE_HPP
