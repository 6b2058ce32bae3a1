#ifndef BDC_SPHERES_HPP
#define BDC_SPHERES_HPP

#include <cstdint>
#include <map>
#include <string>

namespace bdc {

/// Multiplicity of S^d in a wedge of spheres, for d >= -1. Only nonzero
/// entries are stored. The empty map is a contractible space and {-1: 1} is
/// the complex {emptyset}.
class SphereCountVector {
public:
    using Count = std::uint64_t;

    SphereCountVector() = default;
    SphereCountVector(std::initializer_list<std::pair<const int, Count>> init);

    static SphereCountVector contractible() { return {}; }
    static SphereCountVector empty_complex() { return {{-1, 1}}; }

    Count operator[](int dim) const;
    void add(int dim, Count count);

    bool is_contractible() const { return counts_.empty(); }
    bool is_empty_complex() const;

    /// Every sphere raised by `by` dimensions (suspension when by = 1).
    SphereCountVector shifted(int by) const;

    /// -counts[-1] + sum_{d>=0} (-1)^d counts[d].
    std::int64_t reduced_euler() const;

    Count total() const;

    const std::map<int, Count>& entries() const { return counts_; }

    SphereCountVector& operator+=(const SphereCountVector& other);
    friend SphereCountVector operator+(SphereCountVector a, const SphereCountVector& b) { return a += b; }
    bool operator==(const SphereCountVector&) const = default;

    /// Compact form such as "{-1:1}" or "{0:2,1:6}"; "{}" when contractible.
    std::string to_string() const;

private:
    std::map<int, Count> counts_;
};

/// Overflow-checked arithmetic on sphere counts.
SphereCountVector::Count checked_add(SphereCountVector::Count a, SphereCountVector::Count b);
SphereCountVector::Count checked_mul(SphereCountVector::Count a, SphereCountVector::Count b);

}  // namespace bdc

#endif  // BDC_SPHERES_HPP
