#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zlocus/algebra/gaussian_rational.hpp"
#include "zlocus/algebra/poly_ring.hpp"
#include "zlocus/error.hpp"

namespace zlocus {

/// Multivariate polynomial over Q(i) in canonical form: nonzero coefficients,
/// terms sorted strictly descending in the ring's monomial order. Two Polys
/// in the same ring are equal iff their term lists are equal.
class Poly {
public:
    struct Term {
        Monomial mono;
        GaussianRational coef;

        friend bool operator==(const Term&, const Term&) = default;
    };

    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly constant(RingPtr ring, const GaussianRational& c) {
        Poly p(std::move(ring));
        if (!c.is_zero()) p.terms_.push_back({Monomial(p.ring_->nvars()), c});
        return p;
    }

    static Poly one(RingPtr ring) { return constant(std::move(ring), 1); }

    static Poly variable(RingPtr ring, std::size_t index, std::uint32_t power = 1) {
        if (index >= ring->nvars()) throw dimension_mismatch("variable index out of range");
        Poly p(ring);
        p.terms_.push_back({Monomial::variable(ring->nvars(), index, power), 1});
        return p;
    }

    static Poly monomial(RingPtr ring, Monomial m, GaussianRational c) {
        if (m.size() != ring->nvars()) throw dimension_mismatch("monomial length differs from ring size");
        Poly p(std::move(ring));
        if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    /// Builds a canonical polynomial from arbitrary (unsorted, repeated, zero) terms.
    static Poly from_terms(RingPtr ring, std::vector<Term> terms) {
        for (const auto& t : terms)
            if (t.mono.size() != ring->nvars()) throw dimension_mismatch("monomial length differs from ring size");
        Poly p(std::move(ring));
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }

    /// Adopts terms that are already canonical (nonzero, strictly descending).
    static Poly from_canonical_terms(RingPtr ring, std::vector<Term> terms) {
        Poly p(std::move(ring));
        p.terms_ = std::move(terms);
        return p;
    }

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    bool is_one() const noexcept { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef.is_one(); }

    GaussianRational constant_value() const {
        if (!is_constant()) throw invariant_violation("constant_value of a non-constant polynomial");
        return terms_.empty() ? GaussianRational{} : terms_[0].coef;
    }

    const Term& leading_term() const {
        if (terms_.empty()) throw invariant_violation("leading term of the zero polynomial");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const GaussianRational& leading_coefficient() const { return leading_term().coef; }

    std::uint64_t total_degree() const noexcept {
        std::uint64_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& t : r.terms_) t.coef = -t.coef;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return a.add_scaled(b, 1, nullptr); }
    friend Poly operator-(const Poly& a, const Poly& b) { return a.add_scaled(b, -1, nullptr); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        require_same_ring(a.ring_, b.ring_);
        if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
        if (a.terms_.size() < b.terms_.size()) return b * a;
        // Each row a * (term of b) stays sorted, so fold them in with merges.
        Poly acc(a.ring_);
        for (const auto& t : b.terms_) acc = acc.add_scaled(a, t.coef, &t.mono);
        return acc;
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const GaussianRational& c) const {
        if (c.is_zero()) return Poly(ring_);
        Poly r(*this);
        for (auto& t : r.terms_) t.coef *= c;
        return r;
    }

    /// All terms but the leading one.
    Poly tail() const {
        Poly r(ring_);
        if (terms_.size() > 1) r.terms_.assign(terms_.begin() + 1, terms_.end());
        return r;
    }

    Poly monic() const {
        if (is_zero() || leading_coefficient().is_one()) return *this;
        return scaled(leading_coefficient().inverse());
    }

    Poly pow(std::uint64_t e) const {
        Poly result = one(ring_);
        Poly base = *this;
        while (e > 0) {
            if (e & 1U) result *= base;
            e >>= 1U;
            if (e > 0) base *= base;
        }
        return result;
    }

    /// Returns *this + c * m * g, where m == nullptr means m = 1.
    Poly add_scaled(const Poly& g, const GaussianRational& c, const Monomial* m) const {
        require_same_ring(ring_, g.ring_);
        if (c.is_zero() || g.is_zero()) return *this;
        const PolyRing& R = *ring_;
        Poly r(ring_);
        r.terms_.reserve(terms_.size() + g.terms_.size());
        auto it = terms_.begin();
        auto shifted = [&](const Term& t) {
            return Term{m ? t.mono * *m : t.mono, c.is_one() ? t.coef : t.coef * c};
        };
        for (const auto& gt : g.terms_) {
            Term s = shifted(gt);
            while (it != terms_.end() && R.compare(it->mono, s.mono) > 0) r.terms_.push_back(*it++);
            if (it != terms_.end() && it->mono == s.mono) {
                GaussianRational sum = it->coef + s.coef;
                if (!sum.is_zero()) r.terms_.push_back({std::move(s.mono), std::move(sum)});
                ++it;
            } else {
                r.terms_.push_back(std::move(s));
            }
        }
        r.terms_.insert(r.terms_.end(), it, terms_.end());
        return r;
    }

    /// Structural equality. Polys from different rings are never equal.
    friend bool operator==(const Poly& a, const Poly& b) {
        return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
    }

    /// Deterministic total order on polynomials of one ring (used for sorting
    /// bases into canonical sequence): compares term by term, leading first.
    friend std::strong_ordering structural_compare(const Poly& a, const Poly& b) {
        const PolyRing& R = *a.ring_;
        std::size_t n = std::min(a.terms_.size(), b.terms_.size());
        for (std::size_t k = 0; k < n; ++k) {
            if (auto c = R.compare(a.terms_[k].mono, b.terms_[k].mono); c != 0) return c;
            if (auto c = lexicographic_compare(a.terms_[k].coef, b.terms_[k].coef); c != 0) return c;
        }
        return a.terms_.size() <=> b.terms_.size();
    }

private:
    void canonicalize() {
        const PolyRing& R = *ring_;
        std::sort(terms_.begin(), terms_.end(),
                  [&](const Term& x, const Term& y) { return R.compare(x.mono, y.mono) > 0; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mono == t.mono) {
                out.back().coef += t.coef;
            } else {
                if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
                out.push_back(std::move(t));
            }
        }
        if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
        terms_ = std::move(out);
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

namespace detail {

template <class T, class Mul>
std::vector<std::vector<T>> power_table(std::span<const T> values, const std::vector<std::uint32_t>& max_exp,
                                        T one, Mul mul) {
    std::vector<std::vector<T>> table(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        table[k].reserve(max_exp[k] + 1);
        table[k].push_back(one);
        for (std::uint32_t e = 1; e <= max_exp[k]; ++e) table[k].push_back(mul(table[k].back(), values[k]));
    }
    return table;
}

inline std::vector<std::uint32_t> max_exponents(const Poly& p) {
    std::vector<std::uint32_t> mx(p.ring()->nvars(), 0);
    for (const auto& t : p.terms())
        for (std::size_t k = 0; k < mx.size(); ++k) mx[k] = std::max(mx[k], t.mono[k]);
    return mx;
}

}  // namespace detail

/// Exact value of p at a point of Q(i)^n.
inline GaussianRational evaluate(const Poly& p, std::span<const GaussianRational> point) {
    if (point.size() != p.ring()->nvars())
        throw dimension_mismatch("point has " + std::to_string(point.size()) + " coordinates, ring has " +
                                 std::to_string(p.ring()->nvars()) + " variables");
    auto powers = detail::power_table<GaussianRational>(point, detail::max_exponents(p), GaussianRational(1),
                                                        [](const auto& a, const auto& b) { return a * b; });
    GaussianRational acc;
    for (const auto& t : p.terms()) {
        GaussianRational v = t.coef;
        for (std::size_t k = 0; k < point.size(); ++k)
            if (t.mono[k] != 0) v *= powers[k][t.mono[k]];
        acc += v;
    }
    return acc;
}

inline GaussianRational evaluate(const Poly& p, const std::vector<GaussianRational>& point) {
    return evaluate(p, std::span<const GaussianRational>(point));
}

/// Substitutes substitution[k] for the k-th variable of p's ring. All
/// substitution entries must share one target ring.
inline Poly symbolic_evaluate(const Poly& p, std::span<const Poly> substitution) {
    if (substitution.size() != p.ring()->nvars())
        throw dimension_mismatch("substitution has " + std::to_string(substitution.size()) + " entries, ring has " +
                                 std::to_string(p.ring()->nvars()) + " variables");
    if (substitution.empty()) {
        throw dimension_mismatch("symbolic_evaluate over a ring without variables needs an explicit target ring");
    }
    const RingPtr& target = substitution.front().ring();
    for (const auto& s : substitution) require_same_ring(s.ring(), target);
    auto powers = detail::power_table<Poly>(substitution, detail::max_exponents(p), Poly::one(target),
                                            [](const Poly& a, const Poly& b) { return a * b; });
    Poly acc(target);
    for (const auto& t : p.terms()) {
        Poly v = Poly::constant(target, t.coef);
        for (std::size_t k = 0; k < substitution.size(); ++k)
            if (t.mono[k] != 0) v *= powers[k][t.mono[k]];
        acc += v;
    }
    return acc;
}

inline Poly symbolic_evaluate(const Poly& p, const std::vector<Poly>& substitution) {
    return symbolic_evaluate(p, std::span<const Poly>(substitution));
}

/// Quotient a / b when b divides a exactly; throws invariant_violation otherwise.
inline Poly divide_exact(const Poly& a, const Poly& b) {
    require_same_ring(a.ring(), b.ring());
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    const auto& lt = b.leading_term();
    GaussianRational inv = lt.coef.inverse();
    Poly q(a.ring());
    Poly r = a;
    while (!r.is_zero()) {
        const auto& rt = r.leading_term();
        if (!lt.mono.divides(rt.mono)) throw invariant_violation("divide_exact: divisor does not divide dividend");
        Monomial m = rt.mono.quotient(lt.mono);
        GaussianRational c = rt.coef * inv;
        q = q + Poly::monomial(a.ring(), m, c);
        r = r.add_scaled(b, -c, &m);
    }
    return q;
}

}  // namespace zlocus
