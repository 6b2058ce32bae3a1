#include "bdc/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_map>

#include "bdc/error.hpp"

namespace bdc {

IntegerMatrix IntegerMatrix::from_dense(const std::vector<std::vector<long long>>& dense) {
    const std::size_t rows = dense.size();
    const std::size_t cols = rows == 0 ? 0 : dense.front().size();
    IntegerMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, dense[r][c]);
    }
    return m;
}

BigInt IntegerMatrix::at(std::size_t r, std::size_t c) const {
    const auto& col = columns_[c];
    const auto it = std::lower_bound(col.begin(), col.end(), r,
                                     [](const auto& entry, std::size_t row) { return entry.first < row; });
    return (it != col.end() && it->first == r) ? it->second : BigInt(0);
}

void IntegerMatrix::set(std::size_t r, std::size_t c, const BigInt& value) {
    auto& col = columns_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& entry, std::size_t row) { return entry.first < row; });
    const bool present = it != col.end() && it->first == r;
    if (value == 0) {
        if (present) col.erase(it);
    } else if (present) {
        it->second = value;
    } else {
        col.insert(it, {r, value});
    }
}

std::size_t IntegerMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& col : columns_) n += col.size();
    return n;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    IntegerMatrix out(rows_, rhs.cols());
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
        std::map<std::size_t, BigInt> acc;
        for (const auto& [k, v] : rhs.column(c)) {
            for (const auto& [r, w] : columns_[k]) acc[r] += w * v;
        }
        for (const auto& [r, v] : acc) {
            if (v != 0) out.columns_[c].emplace_back(r, v);
        }
    }
    return out;
}

IntegerMatrix boundary_matrix(const SimplicialComplex& k, int d) {
    if (d < 0) throw Error(ErrorCode::InvalidParams, "boundary dimension must be >= 0");
    const auto& cols = k.faces(d);
    if (d == 0) {
        IntegerMatrix m(1, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) m.set(0, c, 1);
        return m;
    }
    const auto& rows = k.faces(d - 1);
    std::unordered_map<std::uint64_t, std::size_t> row_index;
    row_index.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r].bits(), r);

    IntegerMatrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        int sign = 1;
        for (std::size_t x : cols[c].elements()) {
            m.set(row_index.at(cols[c].without(x).bits()), c, sign);
            sign = -sign;
        }
    }
    return m;
}

namespace {

struct Overflowed {};

// Checked 64-bit scalar; any overflow abandons the whole computation.
struct Checked {
    std::int64_t v;

    friend Checked operator*(Checked a, Checked b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflowed{};
        return {r};
    }
    friend Checked operator-(Checked a, Checked b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflowed{};
        return {r};
    }
    friend Checked operator/(Checked a, Checked b) {
        if (a.v == INT64_MIN && b.v == -1) throw Overflowed{};
        return {a.v / b.v};
    }
    friend Checked operator%(Checked a, Checked b) {
        if (b.v == -1) return {0};
        return {a.v % b.v};
    }
    bool is_zero() const { return v == 0; }
    friend bool operator==(Checked a, Checked b) { return a.v == b.v; }
};

Checked magnitude(Checked a) {
    if (a.v == INT64_MIN) throw Overflowed{};
    return {a.v < 0 ? -a.v : a.v};
}
bool less_abs(Checked a, Checked b) { return magnitude(a).v < magnitude(b).v; }
bool is_unit(Checked a) { return a.v == 1 || a.v == -1; }
BigInt to_big(Checked a) { return BigInt(a.v); }
Checked from_big(const BigInt& b, Checked*) {
    if (b > INT64_MAX || b < INT64_MIN) throw Overflowed{};
    return {static_cast<std::int64_t>(b)};
}

BigInt magnitude(const BigInt& a) { return boost::multiprecision::abs(a); }
bool less_abs(const BigInt& a, const BigInt& b) { return magnitude(a) < magnitude(b); }
bool is_unit(const BigInt& a) { return a == 1 || a == -1; }
const BigInt& to_big(const BigInt& a) { return a; }
const BigInt& from_big(const BigInt& b, BigInt*) { return b; }
bool is_zero(const BigInt& a) { return a.is_zero(); }
bool is_zero(Checked a) { return a.is_zero(); }

// Row-major sparse elimination. Rows are sorted (column, value) lists; for each
// column we keep the rows that may hold an entry there (stale rows tolerated).
template <typename Scalar>
class Eliminator {
public:
    using Row = std::vector<std::pair<std::size_t, Scalar>>;

    explicit Eliminator(const IntegerMatrix& m) : rows_(m.rows()), column_rows_(m.cols()) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            for (const auto& [r, v] : m.column(c)) {
                rows_[r].emplace_back(c, from_big(v, static_cast<Scalar*>(nullptr)));
                column_rows_[c].push_back(r);
            }
        }
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (!rows_[r].empty()) active_.insert(r);
        }
    }

    std::vector<BigInt> run() {
        std::vector<BigInt> diagonal;
        while (!active_.empty()) {
            const auto [r, c] = find_pivot();
            const Scalar p = value(r, c);
            bool clean = clear_column(r, c, p);
            if (clean) clean = clear_row(r, c, p);
            if (clean) {
                diagonal.push_back(boost::multiprecision::abs(to_big(p)));
                rows_[r].clear();
                active_.erase(r);
            }
        }
        return diagonal;
    }

private:
    std::pair<std::size_t, std::size_t> find_pivot() const {
        std::size_t best_r = 0, best_c = 0;
        const Scalar* best = nullptr;
        for (std::size_t r : active_) {
            for (const auto& [c, v] : rows_[r]) {
                if (best == nullptr || less_abs(v, *best)) {
                    best = &v;
                    best_r = r;
                    best_c = c;
                    if (is_unit(v)) return {best_r, best_c};
                }
            }
        }
        return {best_r, best_c};
    }

    const Scalar& value(std::size_t r, std::size_t c) const {
        const auto& row = rows_[r];
        return std::lower_bound(row.begin(), row.end(), c,
                                [](const auto& e, std::size_t col) { return e.first < col; })
            ->second;
    }

    const Scalar* find(std::size_t r, std::size_t c) const {
        const auto& row = rows_[r];
        const auto it = std::lower_bound(row.begin(), row.end(), c,
                                         [](const auto& e, std::size_t col) { return e.first < col; });
        return (it != row.end() && it->first == c) ? &it->second : nullptr;
    }

    // target -= q * source, merging sorted rows.
    void axpy(std::size_t target, std::size_t source, const Scalar& q) {
        const Row& src = rows_[source];
        Row& dst = rows_[target];
        Row merged;
        merged.reserve(dst.size() + src.size());
        auto a = dst.begin();
        auto b = src.begin();
        while (a != dst.end() || b != src.end()) {
            if (b == src.end() || (a != dst.end() && a->first < b->first)) {
                merged.push_back(std::move(*a++));
            } else if (a == dst.end() || b->first < a->first) {
                merged.emplace_back(b->first, Scalar{} - q * b->second);
                column_rows_[b->first].push_back(target);
                ++b;
            } else {
                Scalar v = a->second - q * b->second;
                if (!is_zero(v)) merged.emplace_back(a->first, std::move(v));
                ++a;
                ++b;
            }
        }
        dst = std::move(merged);
        if (dst.empty()) active_.erase(target);
    }

    // Row operations against column c; true iff c is left holding only the pivot.
    bool clear_column(std::size_t r, std::size_t c, const Scalar& p) {
        bool clean = true;
        std::vector<std::size_t> candidates;
        candidates.swap(column_rows_[c]);
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        std::vector<std::size_t> keep{r};
        for (std::size_t i : candidates) {
            if (i == r) continue;
            const Scalar* entry = find(i, c);
            if (entry == nullptr) continue;
            const Scalar q = *entry / p;
            if (!is_zero(q)) axpy(i, r, q);
            if (find(i, c) != nullptr) {
                clean = false;
                keep.push_back(i);
            }
        }
        column_rows_[c] = std::move(keep);
        return clean;
    }

    // Column operations against row r. With column c already cleared they
    // only touch row r, so entries are reduced modulo the pivot in place.
    bool clear_row(std::size_t r, std::size_t c, const Scalar& p) {
        bool clean = true;
        Row reduced;
        for (auto& [j, v] : rows_[r]) {
            if (j == c) {
                reduced.emplace_back(j, v);
                continue;
            }
            Scalar rem = v % p;
            if (!is_zero(rem)) {
                clean = false;
                reduced.emplace_back(j, std::move(rem));
            }
        }
        rows_[r] = std::move(reduced);
        return clean;
    }

    std::vector<Row> rows_;
    std::vector<std::vector<std::size_t>> column_rows_;
    std::set<std::size_t> active_;
};

// Diagonal entries -> invariant factors with the divisibility chain.
std::vector<BigInt> normalize_diagonal(std::vector<BigInt> diagonal) {
    std::vector<BigInt> units, rest;
    for (auto& d : diagonal) (d == 1 ? units : rest).push_back(std::move(d));
    for (std::size_t i = 0; i < rest.size(); ++i) {
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
            const BigInt g = boost::multiprecision::gcd(rest[i], rest[j]);
            const BigInt l = rest[i] / g * rest[j];
            rest[i] = g;
            rest[j] = l;
        }
    }
    units.insert(units.end(), rest.begin(), rest.end());
    return units;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
    std::vector<BigInt> diagonal;
    try {
        diagonal = Eliminator<Checked>(m).run();
    } catch (const Overflowed&) {
        diagonal = Eliminator<BigInt>(m).run();
    }
    SmithForm form;
    form.rank = diagonal.size();
    form.invariant_factors = normalize_diagonal(std::move(diagonal));
    return form;
}

std::size_t HomologyProfile::betti_at(int d) const {
    const auto it = betti.find(d);
    return it == betti.end() ? 0 : it->second;
}

std::int64_t HomologyProfile::euler_characteristic() const {
    std::int64_t chi = 0;
    for (const auto& [d, b] : betti) {
        const auto v = static_cast<std::int64_t>(b);
        chi += (d >= 0 && d % 2 == 0) ? v : -v;
    }
    return chi;
}

HomologyProfile reduced_homology(const SimplicialComplex& k) {
    const int top = k.dimension();
    // forms[d + 1] is the Smith form of boundary d; boundary -1 and boundary
    // top+1 are zero maps.
    std::vector<SmithForm> forms(static_cast<std::size_t>(top + 3));
    for (int d = 0; d <= top; ++d) {
        forms[static_cast<std::size_t>(d + 1)] = smith_normal_form(boundary_matrix(k, d));
    }

    HomologyProfile h;
    for (int d = -1; d <= top; ++d) {
        const std::size_t cycles = k.face_count(d) - forms[static_cast<std::size_t>(d + 1)].rank;
        const SmithForm& next = forms[static_cast<std::size_t>(d + 2)];
        const std::size_t b = cycles - next.rank;
        if (b != 0) h.betti[d] = b;
        std::vector<BigInt> tors;
        for (const auto& f : next.invariant_factors) {
            if (f > 1) tors.push_back(f);
        }
        if (!tors.empty()) h.torsion[d] = std::move(tors);
    }
    return h;
}

WedgeOutcome wedge_profile(const HomologyProfile& h) {
    if (!h.torsion_free()) return NotWedgeConsistent{h.torsion};
    SphereCountVector v;
    for (const auto& [d, b] : h.betti) v.add(d, b);
    return v;
}

}  // namespace bdc
