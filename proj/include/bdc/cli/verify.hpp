#ifndef BDC_CLI_VERIFY_HPP
#define BDC_CLI_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bdc/cli/instance.hpp"
#include "bdc/complex.hpp"
#include "bdc/recursion.hpp"

namespace bdc::cli {

enum class Family { Forests, Caterpillars, Cycles, Random, Matching };

Family parse_family(const std::string& name);
std::string family_name(Family f);

struct Sweep {
    Family family = Family::Forests;
    std::size_t max_edges = 5;   // forests, random
    int max_bound = 2;           // forests, caterpillars, cycles, random
    std::size_t min_n = 1;       // caterpillars, matching (spine); cycles (>= 3)
    std::size_t max_n = 3;
    int min_m = 0;               // caterpillars, matching
    int max_m = 3;
    int min_k = 1;               // matching
    int max_k = 3;
    std::size_t count = 200;     // random
    std::uint64_t seed = 42;     // random
};

/// Instances of a sweep in a deterministic order, as instance JSON.
std::vector<json> sweep_instances(const Sweep& sweep);

/// Outcome of running every applicable method plus the homology oracle on
/// one instance.
struct CheckOutcome {
    bool agree = false;       // every method matches the oracle, Euler included
    bool torsion = false;     // oracle found torsion
    std::optional<std::string> error;
    std::string detail;       // which comparison failed, if any
};

CheckOutcome check_instance(const ParsedInstance& p, std::size_t face_cap = default_face_cap,
                            MemoCache* cache = nullptr);

struct VerifyReport {
    std::string family;
    std::size_t instances = 0;
    std::size_t agreements = 0;
    std::size_t mismatches = 0;
    std::size_t torsion = 0;
    std::size_t errors = 0;
    std::optional<json> first_counterexample;
    std::optional<std::string> first_failure;

    bool ok() const { return mismatches == 0 && torsion == 0 && errors == 0; }
    json to_json() const;
};

VerifyReport run_verify(const Sweep& sweep, std::size_t jobs, MemoCache* cache = nullptr);

}  // namespace bdc::cli

#endif  // BDC_CLI_VERIFY_HPP
