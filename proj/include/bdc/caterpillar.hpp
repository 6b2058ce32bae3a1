#ifndef BDC_CATERPILLAR_HPP
#define BDC_CATERPILLAR_HPP

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "bdc/graph.hpp"
#include "bdc/spheres.hpp"

namespace bdc {

/// C(a, b), zero when b < 0 or b > a. Throws Overflow past 64 bits.
std::uint64_t binomial(int a, int b);

/// A subset T of the spine edges e_1..e_{n-1} of a caterpillar.
class SpineSubset {
public:
    SpineSubset(std::size_t spine_length, std::uint64_t membership);

    std::size_t spine_length() const { return n_; }
    bool contains(std::size_t edge) const { return (bits_ >> edge) & 1u; }
    std::size_t size() const;

    /// T_i: edges of T touching spine vertex i (0-based), in {0,1,2}.
    int degree(std::size_t i) const;

    /// 1 iff i > 0 and the spine edge entering vertex i from the left is in T.
    int suspension_flag(std::size_t i) const;

private:
    std::size_t n_;
    std::uint64_t bits_;
};

/// BD^k of the star with r leaves: the (k-1)-skeleton of an (r-1)-simplex.
/// Throws InvalidStar for r = 0.
SphereCountVector star_profile(int k, int r);

/// Wedge over spine subsets T of prod_i C(m_i - 1, lambda_i - T_i) spheres of
/// dimension |lambda| - #T - 1. Throws HypothesisViolated if some m_i = 0.
SphereCountVector caterpillar_closed_form(const CaterpillarSpec& spec);

/// Path instance whose complex equals BD^lambda(C_n) face for face.
struct CycleReduction {
    Graph path;
    DegreeBounds bounds;
    std::size_t rotation = 0;  // cycle vertex moved to position 0
    /// cycle edge index -> path edge index; nullopt for edges that no face
    /// of the cycle complex can contain.
    std::vector<std::optional<EdgeIndex>> edge_map;
};

/// Returned when every bound is 1; no path reduction applies.
struct NotReducible {};

/// Rotates the smallest index with lambda_i != 1 to the last position, then
/// cuts the cycle there: lambda_n = 0 drops the vertex, lambda_n >= 2 splits
/// it into two path ends with bounds 1 and lambda_n - 1.
std::variant<CycleReduction, NotReducible> cycle_reduce(std::size_t n, const DegreeBounds& b);

}  // namespace bdc

#endif  // BDC_CATERPILLAR_HPP
