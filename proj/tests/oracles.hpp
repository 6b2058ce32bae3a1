// Independent reference implementations used only by tests. None of these
// share code paths with the library routines they check.
#ifndef BDC_TESTS_ORACLES_HPP
#define BDC_TESTS_ORACLES_HPP

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <set>
#include <vector>

#include "bdc/graph.hpp"

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;
using Big = boost::multiprecision::cpp_int;
using FaceSet = std::set<std::vector<std::size_t>>;

/// Every edge subset of g (as sorted index lists) respecting the bounds, by
/// checking all 2^|E| subsets.
inline FaceSet brute_force_faces(const bdc::Graph& g, const bdc::DegreeBounds& b) {
    FaceSet out;
    const std::size_t m = g.num_edges();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<int> deg(g.num_vertices(), 0);
        std::vector<std::size_t> face;
        for (std::size_t e = 0; e < m; ++e) {
            if ((mask >> e) & 1u) {
                ++deg[g.edge(e).u];
                ++deg[g.edge(e).v];
                face.push_back(e);
            }
        }
        bool ok = true;
        for (std::size_t v = 0; v < g.num_vertices(); ++v) ok = ok && deg[v] <= b[v];
        if (ok) out.insert(face);
    }
    return out;
}

/// Label-preserving isomorphism by trying every vertex permutation.
inline bool isomorphic(const bdc::Graph& g, const bdc::DegreeBounds& gb, const bdc::Graph& h,
                       const bdc::DegreeBounds& hb) {
    const std::size_t n = g.num_vertices();
    if (n != h.num_vertices() || g.num_edges() != h.num_edges()) return false;
    std::vector<std::vector<bool>> adj_h(n, std::vector<bool>(n, false));
    for (const auto& e : h.edges()) adj_h[e.u][e.v] = adj_h[e.v][e.u] = true;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) ok = gb[v] == hb[perm[v]];
        for (const auto& e : g.edges()) {
            if (!ok) break;
            ok = adj_h[perm[e.u]][perm[e.v]];
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Rank over the rationals by dense Gaussian elimination.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> a) {
    std::size_t rank = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const Rational f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Invariant factors via determinantal divisors: d_k = D_k / D_{k-1} where
/// D_k is the gcd of all k x k minors. Exponential; tiny matrices only.
inline std::vector<Big> determinantal_factors(const std::vector<std::vector<long long>>& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();

    auto det = [&](const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) {
        const std::size_t k = rs.size();
        std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) a[i][j] = m[rs[i]][cs[j]];
        Rational d = 1;
        for (std::size_t c = 0; c < k; ++c) {
            std::size_t p = c;
            while (p < k && a[p][c] == 0) ++p;
            if (p == k) return Big(0);
            if (p != c) {
                std::swap(a[p], a[c]);
                d = -d;
            }
            d *= a[c][c];
            for (std::size_t r = c + 1; r < k; ++r) {
                const Rational f = a[r][c] / a[c][c];
                for (std::size_t j = c; j < k; ++j) a[r][j] -= f * a[c][j];
            }
        }
        return Big(boost::multiprecision::numerator(d));
    };

    auto subsets = [](std::size_t n, std::size_t k) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
        do {
            std::vector<std::size_t> s;
            for (std::size_t i = 0; i < n; ++i)
                if (pick[i]) s.push_back(i);
            out.push_back(s);
        } while (std::prev_permutation(pick.begin(), pick.end()));
        return out;
    };

    std::vector<Big> factors;
    Big previous = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        Big g = 0;
        for (const auto& rs : subsets(rows, k))
            for (const auto& cs : subsets(cols, k)) g = boost::multiprecision::gcd(g, abs(det(rs, cs)));
        if (g == 0) break;
        factors.push_back(g / previous);
        previous = g;
    }
    return factors;
}

}  // namespace oracle

#endif  // BDC_TESTS_ORACLES_HPP
