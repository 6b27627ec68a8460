#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "zlocus/algebra/poly_matrix.hpp"
#include "zlocus/constructible/constructible_set.hpp"
#include "zlocus/error.hpp"
#include "zlocus/zerolocus/zero_locus.hpp"

namespace zlocus {

/// Q(i)[x1..xn], the coordinate ring of a chart U.
inline RingPtr chart_ring(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t k = 1; k <= n; ++k) names.push_back("x" + std::to_string(k));
    return PolyRing::make(std::move(names));
}

/// Q(i)[x1..xn, xi1..xin], the coordinate ring of TU: base coordinates, then
/// fiber coordinates along d/dx_k.
inline RingPtr tangent_ring(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t k = 1; k <= n; ++k) names.push_back("x" + std::to_string(k));
    for (std::size_t k = 1; k <= n; ++k) names.push_back("xi" + std::to_string(k));
    return PolyRing::make(std::move(names));
}

/// Connection data of a normal function on one chart, in a frame e_1..e_p of
/// F^{-1}H whose first q vectors frame F^0H:
///   nabla e_i      = sum_k sum_j dx_k (x) a[k][i][j] e_j    (i < q)
///   nabla nu_tilde = sum_k sum_j dx_k (x) f[k][j] e_j
/// The entries are trusted; no flatness or transversality check is made.
class ChartConnection {
public:
    using Connection = std::vector<std::vector<std::vector<Poly>>>;
    using Derivative = std::vector<std::vector<Poly>>;

    ChartConnection(std::size_t n, std::size_t p, std::size_t q, Connection a, Derivative f)
        : n_(n), p_(p), q_(q), ring_(chart_ring(n)), a_(std::move(a)), f_(std::move(f)) {
        if (n_ == 0) throw dimension_mismatch("chart needs at least one coordinate (n >= 1)");
        if (p_ == 0) throw dimension_mismatch("chart needs p >= 1");
        if (q_ > p_) throw dimension_mismatch("rank of F^0 exceeds rank of F^-1 (q > p)");
        if (a_.size() != n_) throw dimension_mismatch("connection array: expected " + std::to_string(n_) + " slices");
        for (const auto& slice : a_) {
            if (slice.size() != q_) throw dimension_mismatch("connection array: expected q rows per slice");
            for (const auto& row : slice) {
                if (row.size() != p_) throw dimension_mismatch("connection array: expected p entries per row");
                for (const auto& e : row) require_same_ring(e.ring(), ring_);
            }
        }
        if (f_.size() != n_) throw dimension_mismatch("derivative array: expected " + std::to_string(n_) + " rows");
        for (const auto& row : f_) {
            if (row.size() != p_) throw dimension_mismatch("derivative array: expected p entries per row");
            for (const auto& e : row) require_same_ring(e.ring(), ring_);
        }
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t p() const noexcept { return p_; }
    std::size_t q() const noexcept { return q_; }
    const RingPtr& ring() const noexcept { return ring_; }
    const Poly& a(std::size_t k, std::size_t i, std::size_t j) const { return a_.at(k).at(i).at(j); }
    const Poly& f(std::size_t k, std::size_t j) const { return f_.at(k).at(j); }

private:
    std::size_t n_, p_, q_;
    RingPtr ring_;
    Connection a_;
    Derivative f_;
};

/// The p linear equations in the q(n+1) unknowns d(phi_i)/dx_k and phi_i
/// over the ring of TU. Columns: all derivative unknowns ordered by (i, k),
/// then the q value unknowns.
inline ModulePresentation build_tangent_system(const ChartConnection& c) {
    const std::size_t n = c.n(), p = c.p(), q = c.q();
    RingPtr tu = tangent_ring(n);

    std::vector<Poly> embed_vars;
    for (std::size_t k = 0; k < n; ++k) embed_vars.push_back(Poly::variable(tu, k));
    auto embed = [&](const Poly& g) { return symbolic_evaluate(g, embed_vars); };
    auto xi = [&](std::size_t k) { return Poly::variable(tu, n + k); };

    PolyMatrix A(tu, p, q * (n + 1));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t k = 0; k < n; ++k) A(i, i * n + k) = xi(k);
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
            Poly entry(tu);
            for (std::size_t k = 0; k < n; ++k) entry += xi(k) * embed(c.a(k, i, j));
            A(j, q * n + i) = std::move(entry);
        }
    }
    std::vector<Poly> y;
    for (std::size_t j = 0; j < p; ++j) {
        Poly rhs(tu);
        for (std::size_t k = 0; k < n; ++k) rhs += xi(k) * embed(c.f(k, j));
        y.push_back(std::move(rhs));
    }
    return {std::move(A), std::move(y)};
}

/// I(nu) ∩ TU as a constructible subset of the (x, xi) space.
inline ConstructibleSet infinitesimal_locus(const ChartConnection& c, bool prune_empty = true) {
    return zero_locus(build_tangent_system(c), prune_empty);
}

}  // namespace zlocus
