#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zlocus/algebra/poly_matrix.hpp"
#include "zlocus/constructible/constructible_set.hpp"
#include "zlocus/error.hpp"
#include "zlocus/groebner/ideal.hpp"

namespace zlocus {

/// Presentation R^q --A--> R^p ->> M together with a lift y in R^p of the
/// section m. q == 0 means M is free.
class ModulePresentation {
public:
    ModulePresentation(PolyMatrix A, std::vector<Poly> y) : A_(std::move(A)), y_(std::move(y)) {
        if (y_.empty()) throw dimension_mismatch("presentation needs at least one generator (p >= 1)");
        if (A_.rows() != y_.size())
            throw dimension_mismatch("matrix has " + std::to_string(A_.rows()) + " rows but y has " +
                                     std::to_string(y_.size()) + " components");
        for (const auto& v : y_) require_same_ring(v.ring(), A_.ring());
    }

    const RingPtr& ring() const noexcept { return A_.ring(); }
    const PolyMatrix& matrix() const noexcept { return A_; }
    const std::vector<Poly>& lift() const noexcept { return y_; }
    std::size_t p() const noexcept { return A_.rows(); }
    std::size_t q() const noexcept { return A_.cols(); }

private:
    PolyMatrix A_;
    std::vector<Poly> y_;
};

/// All k-subsets of {0..n-1}, each increasing, in lexicographic order.
inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t a = 0; a < k; ++a) idx[a] = a;
    while (true) {
        out.push_back(idx);
        std::size_t a = k;
        while (a > 0 && idx[a - 1] == n - k + (a - 1)) --a;
        if (a == 0) break;
        ++idx[a - 1];
        for (std::size_t b = a; b < k; ++b) idx[b] = idx[b - 1] + 1;
    }
    return out;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t a = 1; a <= k; ++a) r = r * (n - k + a) / a;
    return r;
}

/// Determinants of every size x size submatrix, ordered by (row set, column
/// set) lexicographically. size 0 gives {1}.
inline std::vector<Poly> minors(const PolyMatrix& A, std::size_t size) {
    if (size > std::min(A.rows(), A.cols()))
        throw dimension_mismatch("minor size " + std::to_string(size) + " exceeds min(rows, cols)");
    if (size == 0) return {Poly::one(A.ring())};
    std::vector<Poly> out;
    const auto row_sets = combinations(A.rows(), size);
    const auto col_sets = combinations(A.cols(), size);
    out.reserve(row_sets.size() * col_sets.size());
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) out.push_back(determinant(A.submatrix(rs, cs)));
    return out;
}

/// Data attached to one l x l submatrix A[S, T]: on D(f) ∩ V(I) the matrix
/// has rank exactly l, and there y lies in the column span iff J vanishes.
struct StratumCertificate {
    std::size_t level = 0;
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    Poly f;
    Ideal I;
    /// One entry per row outside S, in row order; zeros are kept here.
    std::vector<Poly> relations;
    /// Ideal generated by `relations`.
    Ideal J;

    bool degenerate() const noexcept { return f.is_zero(); }
    Cell cell() const { return {f, ideal_sum(I, J)}; }
};

namespace detail {

inline void check_index_set(std::span<const std::size_t> set, std::size_t bound, const char* what) {
    for (std::size_t a = 0; a < set.size(); ++a) {
        if (set[a] >= bound) throw dimension_mismatch(std::string(what) + " index out of range");
        if (a > 0 && set[a] <= set[a - 1]) throw dimension_mismatch(std::string(what) + " set must be strictly increasing");
    }
}

inline Ideal rank_ideal(const PolyMatrix& A, std::size_t level) {
    if (level >= std::min(A.rows(), A.cols())) return Ideal(A.ring());
    return Ideal(A.ring(), minors(A, level + 1));
}

inline StratumCertificate stratum_with(const PolyMatrix& A, std::span<const Poly> y, std::vector<std::size_t> S,
                                       std::vector<std::size_t> T, Ideal I) {
    const RingPtr& R = A.ring();
    const std::size_t level = S.size();
    PolyMatrix B = A.submatrix(S, T);
    Poly f = determinant(B);

    // C = A[., T] * adj(B); its rows in S equal f * Id, so the remaining rows
    // give the relations f y_i = sum_k C[i, k] y_{s_k} without inverting f.
    std::vector<std::size_t> all_rows(A.rows());
    for (std::size_t r = 0; r < all_rows.size(); ++r) all_rows[r] = r;
    PolyMatrix C = level == 0 ? PolyMatrix(R, A.rows(), 0) : A.submatrix(all_rows, T) * adjugate(B);

    std::vector<Poly> gens;
    gens.reserve(A.rows() - level);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        if (std::binary_search(S.begin(), S.end(), i)) continue;
        Poly g = f * y[i];
        for (std::size_t k = 0; k < level; ++k) g -= C(i, k) * y[S[k]];
        gens.push_back(std::move(g));
    }
    Ideal J(R, gens);
    return {level, std::move(S), std::move(T), std::move(f), std::move(I), std::move(gens), std::move(J)};
}

}  // namespace detail

/// Certificate for the submatrix A[S, T] with |S| = |T| = l.
inline StratumCertificate stratum(const PolyMatrix& A, std::span<const Poly> y, std::vector<std::size_t> S,
                                  std::vector<std::size_t> T) {
    if (y.size() != A.rows()) throw dimension_mismatch("y length differs from the number of rows of A");
    if (S.size() != T.size()) throw dimension_mismatch("row and column index sets differ in size");
    detail::check_index_set(S, A.rows(), "row");
    detail::check_index_set(T, A.cols(), "column");
    Ideal I = detail::rank_ideal(A, S.size());
    return detail::stratum_with(A, y, std::move(S), std::move(T), std::move(I));
}

/// Every certificate, ordered by level, then row set, then column set.
inline std::vector<StratumCertificate> strata(const ModulePresentation& pres) {
    const PolyMatrix& A = pres.matrix();
    std::vector<StratumCertificate> out;
    for (std::size_t level = 0; level <= std::min(pres.p(), pres.q()); ++level) {
        Ideal I = detail::rank_ideal(A, level);
        const auto row_sets = combinations(pres.p(), level);
        const auto col_sets = combinations(pres.q(), level);
        for (const auto& S : row_sets)
            for (const auto& T : col_sets) out.push_back(detail::stratum_with(A, pres.lift(), S, T, I));
    }
    return out;
}

/// Z(M, m) as a union of cells D(f) ∩ V(I + J), one per submatrix with a
/// nonvanishing determinant. With `prune`, cells empty over C are removed.
inline ConstructibleSet zero_locus(const ModulePresentation& pres, bool prune_empty = true) {
    std::vector<Cell> cells;
    for (const auto& cert : strata(pres)) {
        if (cert.degenerate()) continue;  // D(0) is empty
        cells.push_back(cert.cell());
    }
    ConstructibleSet s(pres.ring(), std::move(cells));
    return prune_empty ? prune(s) : s;
}

/// Rank of a dense matrix over Q(i) by Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<GaussianRational>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        GaussianRational inv = m[r][c].inverse();
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            GaussianRational factor = m[i][c] * inv;
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= factor * m[r][k];
        }
        ++r;
    }
    return r;
}

/// Whether y(pt) = A(pt) x has a solution over Q(i): rank [A | y] == rank A.
inline bool solvable_at_point(const ModulePresentation& pres, std::span<const GaussianRational> point) {
    if (point.size() != pres.ring()->nvars())
        throw dimension_mismatch("point has " + std::to_string(point.size()) + " coordinates, ring has " +
                                 std::to_string(pres.ring()->nvars()) + " variables");
    const PolyMatrix& A = pres.matrix();
    std::vector<std::vector<GaussianRational>> a(pres.p(), std::vector<GaussianRational>(pres.q()));
    std::vector<std::vector<GaussianRational>> ay(pres.p(), std::vector<GaussianRational>(pres.q() + 1));
    for (std::size_t r = 0; r < pres.p(); ++r) {
        for (std::size_t c = 0; c < pres.q(); ++c) ay[r][c] = a[r][c] = evaluate(A(r, c), point);
        ay[r][pres.q()] = evaluate(pres.lift()[r], point);
    }
    return rank(std::move(ay)) == rank(std::move(a));
}

inline bool solvable_at_point(const ModulePresentation& pres, const std::vector<GaussianRational>& point) {
    return solvable_at_point(pres, std::span<const GaussianRational>(point));
}

}  // namespace zlocus
