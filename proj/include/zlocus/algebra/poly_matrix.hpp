#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "zlocus/algebra/poly.hpp"
#include "zlocus/error.hpp"

namespace zlocus {

/// Dense row-major matrix of polynomials over one ring.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Poly(ring_)) {}

    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<Poly> entries)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) throw dimension_mismatch("matrix entry count differs from rows*cols");
        for (const auto& e : entries_) require_same_ring(e.ring(), ring_);
    }

    static PolyMatrix identity(RingPtr ring, std::size_t n) {
        PolyMatrix m(ring, n, n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = Poly::one(ring);
        return m;
    }

    const RingPtr& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const std::vector<Poly>& entries() const noexcept { return entries_; }

    Poly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Poly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const Poly& at(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw dimension_mismatch("matrix index out of range");
        return (*this)(r, c);
    }

    /// Submatrix on the given (ordered) row and column index lists.
    PolyMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
        PolyMatrix m(ring_, rows.size(), cols.size());
        for (std::size_t a = 0; a < rows.size(); ++a) {
            for (std::size_t b = 0; b < cols.size(); ++b) {
                if (rows[a] >= rows_ || cols[b] >= cols_) throw dimension_mismatch("submatrix index out of range");
                m(a, b) = (*this)(rows[a], cols[b]);
            }
        }
        return m;
    }

    PolyMatrix without(std::size_t row, std::size_t col) const {
        PolyMatrix m(ring_, rows_ - 1, cols_ - 1);
        for (std::size_t r = 0, mr = 0; r < rows_; ++r) {
            if (r == row) continue;
            for (std::size_t c = 0, mc = 0; c < cols_; ++c) {
                if (c == col) continue;
                m(mr, mc++) = (*this)(r, c);
            }
            ++mr;
        }
        return m;
    }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        require_same_ring(a.ring_, b.ring_);
        if (a.cols_ != b.rows_) throw dimension_mismatch("matrix product shape mismatch");
        PolyMatrix m(a.ring_, a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t c = 0; c < b.cols_; ++c)
                for (std::size_t k = 0; k < a.cols_; ++k) m(r, c) += a(r, k) * b(k, c);
        return m;
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return same_ring(a.ring_, b.ring_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    RingPtr ring_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Poly> entries_;
};

namespace detail {
inline void require_square(const PolyMatrix& m, const char* what) {
    if (!m.is_square())
        throw dimension_mismatch(std::string(what) + " of a non-square " + std::to_string(m.rows()) + "x" +
                                 std::to_string(m.cols()) + " matrix");
}
}  // namespace detail

/// Cofactor expansion along the first row. Exponential; used for small sizes
/// and as the independent check on Bareiss.
inline Poly laplace_determinant(const PolyMatrix& m) {
    detail::require_square(m, "determinant");
    const std::size_t n = m.rows();
    if (n == 0) return Poly::one(m.ring());
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    Poly det(m.ring());
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero()) continue;
        Poly term = m(0, c) * laplace_determinant(m.without(0, c));
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

/// Fraction-free Bareiss elimination; every division is exact in R.
inline Poly bareiss_determinant(const PolyMatrix& m) {
    detail::require_square(m, "determinant");
    const std::size_t n = m.rows();
    if (n == 0) return Poly::one(m.ring());
    PolyMatrix a = m;
    Poly prev = Poly::one(m.ring());
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k).is_zero()) ++swap;
            if (swap == n) return Poly(m.ring());
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
            negate = !negate;
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            for (std::size_t c = k + 1; c < n; ++c) {
                Poly num = a(r, c) * a(k, k) - a(r, k) * a(k, c);
                a(r, c) = prev.is_one() ? std::move(num) : divide_exact(num, prev);
            }
            a(r, k) = Poly(m.ring());
        }
        prev = a(k, k);
    }
    Poly det = a(n - 1, n - 1);
    return negate ? -det : det;
}

/// Laplace expansion up to 3x3, Bareiss above.
inline Poly determinant(const PolyMatrix& m) {
    detail::require_square(m, "determinant");
    return m.rows() <= 3 ? laplace_determinant(m) : bareiss_determinant(m);
}

/// Transposed cofactor matrix: m * adjugate(m) == determinant(m) * Id.
inline PolyMatrix adjugate(const PolyMatrix& m) {
    detail::require_square(m, "adjugate");
    const std::size_t n = m.rows();
    PolyMatrix adj(m.ring(), n, n);
    if (n == 1) {
        adj(0, 0) = Poly::one(m.ring());
        return adj;
    }
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            Poly minor = determinant(m.without(r, c));
            adj(c, r) = ((r + c) % 2 == 0) ? minor : -minor;
        }
    }
    return adj;
}

}  // namespace zlocus
