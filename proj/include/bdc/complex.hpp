/**
 * Explicit simplicial complexes over a ground set of at most 64 elements, the
 * bounded degree complex construction, vertex links and deletions, and the
 * combinatorial grape verifier.
 */
#ifndef BDC_COMPLEX_HPP
#define BDC_COMPLEX_HPP

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bdc/graph.hpp"

namespace bdc {

/// A face as a bit set over the ground set. Faces of equal size compare in
/// lexicographic order of their sorted element lists.
class Face {
public:
    static constexpr std::size_t max_ground = 64;

    constexpr Face() = default;
    constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}
    static Face of(std::initializer_list<std::size_t> elements);

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(std::size_t x) const { return (bits_ >> x) & 1u; }
    constexpr Face with(std::size_t x) const { return Face(bits_ | (std::uint64_t{1} << x)); }
    constexpr Face without(std::size_t x) const { return Face(bits_ & ~(std::uint64_t{1} << x)); }

    /// Sorted element list.
    std::vector<std::size_t> elements() const;

    constexpr bool operator==(const Face&) const = default;

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on sorted element lists (equal sizes assumed): the
/// smaller face owns the lowest element where the two differ.
constexpr bool lex_less(Face a, Face b) {
    const std::uint64_t diff = a.bits() ^ b.bits();
    return diff != 0 && (a.bits() & (diff & (~diff + 1))) != 0;
}

class SimplicialComplex {
public:
    /// The complex {emptyset} over `ground_set` potential vertices.
    explicit SimplicialComplex(std::size_t ground_set = 0);

    /// Builds from an arbitrary face list: closes it downward, drops duplicates
    /// and sorts each dimension.
    static SimplicialComplex from_faces(std::size_t ground_set, const std::vector<Face>& faces);

    std::size_t ground_set() const { return ground_set_; }

    /// Highest dimension with a face; -1 for {emptyset}.
    int dimension() const { return static_cast<int>(faces_by_dim_.size()) - 1; }

    /// Faces of dimension d (size d+1), lexicographically sorted. Empty for
    /// d outside [0, dimension()].
    const std::vector<Face>& faces(int d) const;

    /// f_d; f_{-1} = 1 for the implicit empty face.
    std::size_t face_count(int d) const;
    std::size_t total_faces() const;

    bool contains(Face f) const;
    bool is_vertex(std::size_t x) const { return contains(Face(std::uint64_t{1} << x)); }
    std::vector<std::size_t> vertices() const;

    bool operator==(const SimplicialComplex& other) const {
        return ground_set_ == other.ground_set_ && faces_by_dim_ == other.faces_by_dim_;
    }

    /// One face per line, dimensions in increasing order, indices
    /// comma-separated; the empty face is printed as "-".
    std::string dump() const;

private:
    friend SimplicialComplex build_complex(const Graph&, const DegreeBounds&, std::size_t);
    friend SimplicialComplex link(const SimplicialComplex&, std::size_t);
    friend SimplicialComplex deletion(const SimplicialComplex&, std::size_t);

    void sort_dimensions();

    std::size_t ground_set_;
    std::vector<std::vector<Face>> faces_by_dim_;
};

constexpr std::size_t default_face_cap = 5'000'000;

/// BD^lambda(G): every edge subset whose induced degrees respect the bounds.
/// Throws FaceCapExceeded when the face count (empty face included) would
/// exceed face_cap, GroundSetTooLarge for graphs with more than 64 edges.
SimplicialComplex build_complex(const Graph& g, const DegreeBounds& b,
                                std::size_t face_cap = default_face_cap);

/// (K:v). Throws NotAVertex unless v is a 0-face.
SimplicialComplex link(const SimplicialComplex& k, std::size_t v);

/// (K,v).
SimplicialComplex deletion(const SimplicialComplex& k, std::size_t v);

std::int64_t reduced_euler(const SimplicialComplex& k);

/// Certificate that a complex is a combinatorial grape: either a leaf (at most
/// one vertex) or a split vertex with a cone apex in the deletion and
/// certificates for the link and the deletion.
struct GrapeWitness {
    std::optional<std::size_t> split_vertex;
    std::optional<std::size_t> cone_apex;
    std::unique_ptr<GrapeWitness> link;
    std::unique_ptr<GrapeWitness> deletion;

    bool is_leaf() const { return !split_vertex.has_value(); }
    std::size_t depth() const;
};

/// Depth-first witness search: split vertices in index order, apexes in index
/// order, first success wins. Returns nullopt when no witness was found, which
/// is not a proof that the complex is not a grape. Throws DepthCapExceeded if
/// the recursion would go deeper than depth_cap.
std::optional<GrapeWitness> grape_witness(const SimplicialComplex& k, std::size_t depth_cap = 64);

/// Replays a witness against a complex; true iff every recorded split and
/// cone containment holds.
bool check_grape_witness(const SimplicialComplex& k, const GrapeWitness& w);

}  // namespace bdc

#endif  // BDC_COMPLEX_HPP
