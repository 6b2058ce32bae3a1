#include "bdc/caterpillar.hpp"

#include <bit>
#include <numeric>

#include "bdc/error.hpp"

namespace bdc {

std::uint64_t binomial(int a, int b) {
    if (b < 0 || a < 0 || b > a) return 0;
    b = std::min(b, a - b);
    std::uint64_t result = 1;
    for (int i = 1; i <= b; ++i) {
        // result * (a - b + i) is divisible by i at every step.
        const std::uint64_t num = checked_mul(result, static_cast<std::uint64_t>(a - b + i));
        result = num / static_cast<std::uint64_t>(i);
    }
    return result;
}

SpineSubset::SpineSubset(std::size_t spine_length, std::uint64_t membership)
    : n_(spine_length), bits_(membership) {
    if (spine_length == 0 || spine_length > 64) {
        throw Error(ErrorCode::InvalidSpec, "spine length must be in [1, 64]");
    }
    const std::size_t edges = spine_length - 1;
    if (edges < 64 && (membership >> edges) != 0) {
        throw Error(ErrorCode::InvalidSpec, "spine subset names a nonexistent edge");
    }
}

std::size_t SpineSubset::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

int SpineSubset::degree(std::size_t i) const {
    int t = 0;
    if (i > 0 && contains(i - 1)) ++t;
    if (i + 1 < n_ && contains(i)) ++t;
    return t;
}

int SpineSubset::suspension_flag(std::size_t i) const { return (i > 0 && contains(i - 1)) ? 1 : 0; }

SphereCountVector star_profile(int k, int r) {
    if (r <= 0) throw Error(ErrorCode::InvalidStar, "a star needs at least one leaf");
    if (k < 0) throw Error(ErrorCode::InvalidSpec, "bound must be non-negative");
    if (k == 0) return SphereCountVector::empty_complex();
    if (k >= r) return SphereCountVector::contractible();
    return SphereCountVector{{k - 1, binomial(r - 1, k)}};
}

SphereCountVector caterpillar_closed_form(const CaterpillarSpec& spec) {
    spec.validate();
    const std::size_t n = spec.spine_length();
    for (std::size_t i = 0; i < n; ++i) {
        if (spec.leaves[i] == 0) {
            throw Error(ErrorCode::HypothesisViolated,
                        "spine vertex " + std::to_string(i) + " has no leaf; use the recursion");
        }
    }
    if (n > 31) throw Error(ErrorCode::InvalidSpec, "spine too long for subset enumeration");

    const int total_bound = std::accumulate(spec.spine_bounds.begin(), spec.spine_bounds.end(), 0);
    SphereCountVector out;
    const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        const SpineSubset t(n, mask);
        std::uint64_t product = 1;
        for (std::size_t i = 0; i < n && product != 0; ++i) {
            product = checked_mul(product, binomial(spec.leaves[i] - 1, spec.spine_bounds[i] - t.degree(i)));
        }
        out.add(total_bound - static_cast<int>(t.size()) - 1, product);
    }
    return out;
}

std::variant<CycleReduction, NotReducible> cycle_reduce(std::size_t n, const DegreeBounds& b) {
    if (n < 3) throw Error(ErrorCode::InvalidSize, "cycle needs at least three vertices");
    if (b.size() != n) throw Error(ErrorCode::InvalidSpec, "expected one bound per cycle vertex");

    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (b[i] != 1) {
            pivot = i;
            break;
        }
    }
    if (pivot == n) return NotReducible{};

    // Rotated cycle: new vertex j is old vertex (pivot + 1 + j) mod n, so the
    // pivot lands at position n-1.
    const std::size_t shift = (pivot + 1) % n;
    auto old_vertex = [&](std::size_t j) { return (shift + j) % n; };
    std::vector<int> rotated(n);
    for (std::size_t j = 0; j < n; ++j) rotated[j] = b[old_vertex(j)];

    // Index in the original cycle of the edge joining old vertices a and a+1 (mod n).
    auto old_edge = [&](std::size_t a) { return a + 1 < n ? a : n - 1; };

    CycleReduction red;
    red.rotation = shift;
    red.edge_map.assign(n, std::nullopt);
    const int last = rotated[n - 1];
    if (last == 0) {
        red.path = gen_path(n - 1);
        red.bounds = DegreeBounds(std::vector<int>(rotated.begin(), rotated.end() - 1));
        for (std::size_t j = 0; j + 2 < n; ++j) red.edge_map[old_edge(old_vertex(j))] = j;
    } else {
        std::vector<int> bounds{1};
        bounds.insert(bounds.end(), rotated.begin(), rotated.end() - 1);
        bounds.push_back(last - 1);
        red.path = gen_path(n + 1);
        red.bounds = DegreeBounds(std::move(bounds));
        // Rotated edge (j, j+1) becomes path edge j+1; the closing edge
        // (n-1, 0) becomes path edge 0.
        for (std::size_t j = 0; j + 1 < n; ++j) red.edge_map[old_edge(old_vertex(j))] = j + 1;
        red.edge_map[old_edge(old_vertex(n - 1))] = 0;
    }
    return red;
}

}  // namespace bdc
