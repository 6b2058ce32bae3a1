#include "bdc/complex.hpp"

#include <algorithm>
#include <set>

#include "bdc/error.hpp"

namespace bdc {

Face Face::of(std::initializer_list<std::size_t> elements) {
    Face f;
    for (std::size_t x : elements) f = f.with(x);
    return f;
}

std::vector<std::size_t> Face::elements() const {
    std::vector<std::size_t> out;
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    return out;
}

SimplicialComplex::SimplicialComplex(std::size_t ground_set) : ground_set_(ground_set) {
    if (ground_set > Face::max_ground) {
        throw Error(ErrorCode::GroundSetTooLarge,
                    "complexes support at most 64 ground elements, got " + std::to_string(ground_set));
    }
}

SimplicialComplex SimplicialComplex::from_faces(std::size_t ground_set, const std::vector<Face>& faces) {
    SimplicialComplex k(ground_set);
    std::set<std::uint64_t> closed;
    std::vector<std::uint64_t> stack;
    for (Face f : faces) {
        if (ground_set < 64 && (f.bits() >> ground_set) != 0) {
            throw Error(ErrorCode::IndexOutOfRange, "face element outside the ground set");
        }
        stack.push_back(f.bits());
    }
    while (!stack.empty()) {
        const std::uint64_t bits = stack.back();
        stack.pop_back();
        if (bits == 0 || !closed.insert(bits).second) continue;
        for (std::uint64_t rest = bits; rest != 0; rest &= rest - 1) {
            stack.push_back(bits & ~(rest & (~rest + 1)));
        }
    }
    for (std::uint64_t bits : closed) {
        const Face f(bits);
        if (k.faces_by_dim_.size() < f.size()) k.faces_by_dim_.resize(f.size());
        k.faces_by_dim_[f.size() - 1].push_back(f);
    }
    k.sort_dimensions();
    return k;
}

void SimplicialComplex::sort_dimensions() {
    for (auto& dim : faces_by_dim_) std::sort(dim.begin(), dim.end(), lex_less);
}

const std::vector<Face>& SimplicialComplex::faces(int d) const {
    static const std::vector<Face> none;
    if (d < 0 || d >= static_cast<int>(faces_by_dim_.size())) return none;
    return faces_by_dim_[static_cast<std::size_t>(d)];
}

std::size_t SimplicialComplex::face_count(int d) const {
    return d == -1 ? 1 : faces(d).size();
}

std::size_t SimplicialComplex::total_faces() const {
    std::size_t n = 1;
    for (const auto& dim : faces_by_dim_) n += dim.size();
    return n;
}

bool SimplicialComplex::contains(Face f) const {
    if (f.empty()) return true;
    const auto& dim = faces(static_cast<int>(f.size()) - 1);
    return std::binary_search(dim.begin(), dim.end(), f, lex_less);
}

std::vector<std::size_t> SimplicialComplex::vertices() const {
    std::vector<std::size_t> out;
    for (Face f : faces(0)) out.push_back(f.elements().front());
    return out;
}

std::string SimplicialComplex::dump() const {
    std::string out = "-\n";
    for (const auto& dim : faces_by_dim_) {
        for (Face f : dim) {
            bool first = true;
            for (std::size_t x : f.elements()) {
                if (!first) out += ',';
                first = false;
                out += std::to_string(x);
            }
            out += '\n';
        }
    }
    return out;
}

SimplicialComplex build_complex(const Graph& g, const DegreeBounds& b, std::size_t face_cap) {
    check_bounds(g, b);
    if (face_cap == 0) throw Error(ErrorCode::InvalidParams, "face_cap must be positive");
    SimplicialComplex k(g.num_edges());

    std::vector<int> budget = b.values();
    std::size_t total = 1;
    if (total > face_cap) throw Error(ErrorCode::FaceCapExceeded, "face cap " + std::to_string(face_cap));

    // Depth-first extension in increasing edge order visits faces in
    // lexicographic order, so every dimension comes out sorted.
    auto extend = [&](auto&& self, Face current, std::size_t size, EdgeIndex from) -> void {
        for (EdgeIndex e = from; e < g.num_edges(); ++e) {
            const auto [u, v] = g.edge(e);
            if (budget[u] == 0 || budget[v] == 0) continue;
            if (++total > face_cap) {
                throw Error(ErrorCode::FaceCapExceeded,
                            "more than " + std::to_string(face_cap) + " faces");
            }
            const Face next = current.with(e);
            if (k.faces_by_dim_.size() <= size) k.faces_by_dim_.resize(size + 1);
            k.faces_by_dim_[size].push_back(next);
            --budget[u];
            --budget[v];
            self(self, next, size + 1, e + 1);
            ++budget[u];
            ++budget[v];
        }
    };
    extend(extend, Face(), 0, 0);
    return k;
}

SimplicialComplex link(const SimplicialComplex& k, std::size_t v) {
    if (v >= k.ground_set() || !k.is_vertex(v)) {
        throw Error(ErrorCode::NotAVertex, std::to_string(v) + " is not a vertex of the complex");
    }
    SimplicialComplex out(k.ground_set());
    for (int d = 1; d <= k.dimension(); ++d) {
        std::vector<Face> layer;
        for (Face f : k.faces(d)) {
            if (f.contains(v)) layer.push_back(f.without(v));
        }
        if (layer.empty()) break;
        out.faces_by_dim_.push_back(std::move(layer));
    }
    out.sort_dimensions();
    return out;
}

SimplicialComplex deletion(const SimplicialComplex& k, std::size_t v) {
    SimplicialComplex out(k.ground_set());
    for (int d = 0; d <= k.dimension(); ++d) {
        std::vector<Face> layer;
        for (Face f : k.faces(d)) {
            if (v >= Face::max_ground || !f.contains(v)) layer.push_back(f);
        }
        if (layer.empty()) break;
        out.faces_by_dim_.push_back(std::move(layer));
    }
    return out;
}

std::int64_t reduced_euler(const SimplicialComplex& k) {
    std::int64_t chi = -1;
    for (int d = 0; d <= k.dimension(); ++d) {
        const auto f = static_cast<std::int64_t>(k.face_count(d));
        chi += d % 2 == 0 ? f : -f;
    }
    return chi;
}

std::size_t GrapeWitness::depth() const {
    if (is_leaf()) return 0;
    return 1 + std::max(link->depth(), deletion->depth());
}

namespace {

// Smallest vertex b of `del` with tau + {b} in `del` for every face tau of `lk`.
std::optional<std::size_t> cone_apex(const SimplicialComplex& lk, const SimplicialComplex& del) {
    for (std::size_t b : del.vertices()) {
        bool ok = true;
        for (int d = 0; d <= lk.dimension() && ok; ++d) {
            for (Face tau : lk.faces(d)) {
                if (!del.contains(tau.with(b))) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) return b;
    }
    return std::nullopt;
}

std::optional<GrapeWitness> search(const SimplicialComplex& k, std::size_t depth, std::size_t depth_cap) {
    if (k.face_count(0) <= 1) return GrapeWitness{};
    if (depth >= depth_cap) {
        throw Error(ErrorCode::DepthCapExceeded, "grape search deeper than " + std::to_string(depth_cap));
    }
    for (std::size_t a : k.vertices()) {
        const SimplicialComplex lk = link(k, a);
        const SimplicialComplex del = deletion(k, a);
        const auto apex = cone_apex(lk, del);
        if (!apex) continue;
        auto lw = search(lk, depth + 1, depth_cap);
        if (!lw) continue;
        auto dw = search(del, depth + 1, depth_cap);
        if (!dw) continue;
        GrapeWitness w;
        w.split_vertex = a;
        w.cone_apex = apex;
        w.link = std::make_unique<GrapeWitness>(std::move(*lw));
        w.deletion = std::make_unique<GrapeWitness>(std::move(*dw));
        return w;
    }
    return std::nullopt;
}

}  // namespace

std::optional<GrapeWitness> grape_witness(const SimplicialComplex& k, std::size_t depth_cap) {
    return search(k, 0, depth_cap);
}

bool check_grape_witness(const SimplicialComplex& k, const GrapeWitness& w) {
    if (w.is_leaf()) return k.face_count(0) <= 1;
    if (!w.cone_apex || !w.link || !w.deletion) return false;
    const std::size_t a = *w.split_vertex;
    const std::size_t b = *w.cone_apex;
    if (a >= k.ground_set() || !k.is_vertex(a)) return false;
    const SimplicialComplex lk = link(k, a);
    const SimplicialComplex del = deletion(k, a);
    if (b >= k.ground_set() || !del.is_vertex(b)) return false;
    for (int d = 0; d <= lk.dimension(); ++d) {
        for (Face tau : lk.faces(d)) {
            if (!del.contains(tau.with(b))) return false;
        }
    }
    return check_grape_witness(lk, *w.link) && check_grape_witness(del, *w.deletion);
}

}  // namespace bdc
