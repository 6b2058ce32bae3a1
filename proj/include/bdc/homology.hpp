/**
 * Exact reduced integral homology of explicit complexes.
 *
 * Boundary operators come from the augmented chain complex, so the complex
 * {emptyset} has one generator in degree -1. Ranks and torsion are read off
 * Smith normal forms computed with arbitrary-precision integers.
 */
#ifndef BDC_HOMOLOGY_HPP
#define BDC_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "bdc/complex.hpp"
#include "bdc/spheres.hpp"

namespace bdc {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse integer matrix stored column by column; stored entries are nonzero
/// and each column is sorted by row.
class IntegerMatrix {
public:
    using Column = std::vector<std::pair<std::size_t, BigInt>>;

    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    static IntegerMatrix from_dense(const std::vector<std::vector<long long>>& dense);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }

    BigInt at(std::size_t r, std::size_t c) const;
    /// Writing zero removes the entry.
    void set(std::size_t r, std::size_t c, const BigInt& value);

    const Column& column(std::size_t c) const { return columns_[c]; }
    std::size_t nonzeros() const;

    /// Sparse product; used to check that consecutive boundaries compose to zero.
    IntegerMatrix operator*(const IntegerMatrix& rhs) const;
    bool is_zero() const { return nonzeros() == 0; }

private:
    std::size_t rows_;
    std::vector<Column> columns_;
};

/// d_1 | d_2 | ... | d_rank, all positive.
struct SmithForm {
    std::size_t rank = 0;
    std::vector<BigInt> invariant_factors;
};

/// Augmented boundary operator: rows are (d-1)-faces (the single empty face
/// when d = 0), columns d-faces, both in the complex's lexicographic order.
/// Removing the j-th smallest element of a face contributes (-1)^j.
IntegerMatrix boundary_matrix(const SimplicialComplex& k, int d);

/// Diagonalizes by unimodular row and column operations, always pivoting on
/// the smallest nonzero absolute value (ties: lowest row, then column).
/// Elimination starts in checked 64-bit arithmetic and restarts with
/// arbitrary precision on the first overflow.
SmithForm smith_normal_form(const IntegerMatrix& m);

/// Reduced Betti numbers and torsion, indexed by dimension d >= -1.
struct HomologyProfile {
    std::map<int, std::size_t> betti;               // nonzero entries only
    std::map<int, std::vector<BigInt>> torsion;     // invariant factors > 1

    std::size_t betti_at(int d) const;
    bool torsion_free() const { return torsion.empty(); }
    /// -betti[-1] + sum_{d>=0} (-1)^d betti[d].
    std::int64_t euler_characteristic() const;
    bool operator==(const HomologyProfile&) const = default;
};

HomologyProfile reduced_homology(const SimplicialComplex& k);

/// Torsion witnesses that a complex is not a wedge of spheres.
struct NotWedgeConsistent {
    std::map<int, std::vector<BigInt>> torsion;
};

using WedgeOutcome = std::variant<SphereCountVector, NotWedgeConsistent>;

WedgeOutcome wedge_profile(const HomologyProfile& h);

}  // namespace bdc

#endif  // BDC_HOMOLOGY_HPP
