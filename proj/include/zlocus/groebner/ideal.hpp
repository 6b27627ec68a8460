#pragma once

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "zlocus/algebra/poly.hpp"
#include "zlocus/error.hpp"

namespace zlocus {

/// Remainder of p under full multivariate division by `divisors`. The first
/// divisor (in list order) whose leading monomial divides the current leading
/// term is used. Divisors must be nonzero.
inline Poly reduce(const Poly& p, std::span<const Poly> divisors) {
    using Term = Poly::Term;
    const PolyRing& R = *p.ring();
    std::vector<Term> rest(p.terms().begin(), p.terms().end());
    std::vector<Term> remainder;
    std::vector<Term> merged;
    std::size_t pos = 0;
    while (pos < rest.size()) {
        const Term& lt = rest[pos];
        const Poly* hit = nullptr;
        for (const auto& g : divisors) {
            if (g.leading_monomial().divides(lt.mono)) {
                hit = &g;
                break;
            }
        }
        if (!hit) {
            remainder.push_back(std::move(rest[pos++]));
            continue;
        }
        // rest[pos..] - (lt / lt(g)) * g; the leading terms cancel exactly.
        Monomial m = lt.mono.quotient(hit->leading_monomial());
        GaussianRational c = -(lt.coef / hit->leading_coefficient());
        const auto& gt = hit->terms();
        merged.clear();
        merged.reserve(rest.size() - pos + gt.size());
        std::size_t a = pos + 1;
        for (std::size_t b = 1; b < gt.size(); ++b) {
            Term s{gt[b].mono * m, gt[b].coef * c};
            while (a < rest.size() && R.compare(rest[a].mono, s.mono) > 0) merged.push_back(std::move(rest[a++]));
            if (a < rest.size() && rest[a].mono == s.mono) {
                GaussianRational sum = rest[a].coef + s.coef;
                if (!sum.is_zero()) merged.push_back({std::move(s.mono), std::move(sum)});
                ++a;
            } else {
                merged.push_back(std::move(s));
            }
        }
        for (; a < rest.size(); ++a) merged.push_back(std::move(rest[a]));
        std::swap(rest, merged);
        pos = 0;
    }
    // Terms were peeled off in descending order, so the list is already canonical.
    return Poly::from_canonical_terms(p.ring(), std::move(remainder));
}

inline Poly s_polynomial(const Poly& f, const Poly& g) {
    require_same_ring(f.ring(), g.ring());
    Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    Monomial mf = l.quotient(f.leading_monomial());
    Monomial mg = l.quotient(g.leading_monomial());
    Poly a = Poly(f.ring()).add_scaled(f, f.leading_coefficient().inverse(), &mf);
    return a.add_scaled(g, -g.leading_coefficient().inverse(), &mg);
}

namespace detail {

/// Buchberger's algorithm with the coprime-leading-term criterion and the
/// chain criterion. Pairs are processed by sugar degree, then total degree of
/// their lcm, ties broken by (i, j). Returns the reduced Groebner basis,
/// sorted descending by leading monomial.
inline std::vector<Poly> buchberger(const RingPtr& ring, const std::vector<Poly>& generators) {
    std::vector<Poly> basis;
    std::vector<std::uint64_t> sugar;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        if (g.is_constant()) return {Poly::one(ring)};
        basis.push_back(g.monic());
        sugar.push_back(g.total_degree());
    }
    if (basis.empty()) return {};

    using Pair = std::tuple<std::uint64_t, std::uint64_t, std::size_t, std::size_t>;  // (sugar, deg lcm, i, j), i < j
    std::set<Pair> queue;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            const Monomial& li = basis[i].leading_monomial();
            const Monomial& lj = basis[j].leading_monomial();
            const std::uint64_t d = lcm(li, lj).degree();
            const std::uint64_t s = std::max(sugar[i] + d - li.degree(), sugar[j] + d - lj.degree());
            queue.emplace(s, d, i, j);
            pending.emplace(i, j);
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

    auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

    while (!queue.empty()) {
        auto [s, deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({i, j});

        const Monomial& li = basis[i].leading_monomial();
        const Monomial& lj = basis[j].leading_monomial();
        if (coprime(li, lj)) continue;
        Monomial l = lcm(li, lj);
        bool chain = false;
        for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
            if (k == i || k == j) continue;
            if (!is_pending(i, k) && !is_pending(j, k) && basis[k].leading_monomial().divides(l)) chain = true;
        }
        if (chain) continue;

        Poly r = reduce(s_polynomial(basis[i], basis[j]), basis);
        if (r.is_zero()) continue;
        if (r.is_constant()) return {Poly::one(ring)};
        basis.push_back(r.monic());
        sugar.push_back(std::max<std::uint64_t>(s, r.total_degree()));
        add_pairs_for(basis.size() - 1);
    }

    // Minimalize: drop elements whose leading monomial is divisible by another's.
    std::vector<Poly> minimal;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
            if (a == b) continue;
            const auto& la = basis[a].leading_monomial();
            const auto& lb = basis[b].leading_monomial();
            if (lb.divides(la) && (!(la == lb) || b < a)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[a]);
    }

    // Interreduce: the leading terms are untouched, so each result stays monic.
    std::vector<Poly> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t a = 0; a < minimal.size(); ++a) {
        std::vector<Poly> others;
        for (std::size_t b = 0; b < minimal.size(); ++b)
            if (b != a) others.push_back(minimal[b]);
        reduced.push_back(reduce(minimal[a], others));
    }
    const PolyRing& R = *ring;
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& x, const Poly& y) {
        return R.compare(x.leading_monomial(), y.leading_monomial()) > 0;
    });
    return reduced;
}

struct BasisCache {
    std::once_flag once;
    std::atomic<bool> ready{false};
    std::vector<Poly> basis;
};

}  // namespace detail

/// Finitely generated ideal with a lazily filled reduced Groebner basis.
/// Generators never change after construction; copies share the cache.
class Ideal {
public:
    Ideal() : cache_(std::make_shared<detail::BasisCache>()) {}
    explicit Ideal(RingPtr ring) : ring_(std::move(ring)), cache_(std::make_shared<detail::BasisCache>()) {}

    /// Zero polynomials are dropped; an empty list is the zero ideal.
    Ideal(RingPtr ring, std::vector<Poly> generators) : Ideal(std::move(ring)) {
        for (auto& g : generators) {
            require_same_ring(g.ring(), ring_);
            if (!g.is_zero()) gens_.push_back(std::move(g));
        }
    }

    static Ideal unit(RingPtr ring) {
        auto one = Poly::one(ring);
        return Ideal(std::move(ring), {std::move(one)});
    }

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Poly>& generators() const noexcept { return gens_; }
    bool is_zero_ideal() const noexcept { return gens_.empty(); }

    bool has_cached_basis() const noexcept { return cache_ && cache_->ready.load(std::memory_order_acquire); }

    /// Reduced Groebner basis for the ring's monomial order. Thread-safe.
    const std::vector<Poly>& basis() const {
        std::call_once(cache_->once, [this] {
            cache_->basis = detail::buchberger(ring_, gens_);
            cache_->ready.store(true, std::memory_order_release);
        });
        return cache_->basis;
    }

    bool contains_one() const {
        const auto& b = basis();
        return b.size() == 1 && b.front().is_one();
    }

    friend bool operator==(const Ideal& a, const Ideal& b) {
        return same_ring(a.ring_, b.ring_) && a.gens_ == b.gens_;
    }

private:
    RingPtr ring_;
    std::vector<Poly> gens_;
    std::shared_ptr<detail::BasisCache> cache_;
};

/// Returns `ideal` with its basis cache filled.
inline Ideal groebner_basis(const Ideal& ideal) {
    (void)ideal.basis();
    return ideal;
}

inline Poly normal_form(const Poly& p, const Ideal& ideal) {
    require_same_ring(p.ring(), ideal.ring());
    return reduce(p, ideal.basis());
}

inline bool ideal_contains(const Ideal& ideal, const Poly& p) { return normal_form(p, ideal).is_zero(); }

/// Ideal equality, decided by comparing reduced bases.
inline bool same_ideal(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    return a.basis() == b.basis();
}

/// Generators concatenated, structural duplicates removed; fresh cache.
inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Poly> gens;
    gens.reserve(a.generators().size() + b.generators().size());
    for (const auto* src : {&a.generators(), &b.generators()})
        for (const auto& g : *src)
            if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
    return Ideal(a.ring(), std::move(gens));
}

/// Name for an auxiliary variable that does not collide with `ring`.
inline std::string fresh_variable_name(const PolyRing& ring, std::string base = "t_aux") {
    while (ring.index_of(base)) base += "_";
    return base;
}

/// Embeds p into `target`, whose first variables coincide with p's ring.
inline Poly extend_ring(const Poly& p, const RingPtr& target) {
    const std::size_t n = p.ring()->nvars();
    std::vector<Poly::Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        std::vector<std::uint32_t> e(target->nvars(), 0);
        std::copy_n(t.mono.exponents().begin(), n, e.begin());
        terms.push_back({Monomial(std::move(e)), t.coef});
    }
    return Poly::from_terms(target, std::move(terms));
}

/// p in sqrt(ideal) iff 1 in ideal + <1 - t p> over R[t], with t appended
/// last and grevlex order.
inline bool radical_membership(const Poly& p, const Ideal& ideal) {
    require_same_ring(p.ring(), ideal.ring());
    if (p.is_zero()) return true;
    if (ideal.has_cached_basis() && normal_form(p, ideal).is_zero()) return true;
    const PolyRing& base = *ideal.ring();
    auto names = base.names();
    names.push_back(fresh_variable_name(base));
    RingPtr ext = PolyRing::make(std::move(names), MonomialOrder::grevlex);
    std::vector<Poly> gens;
    gens.reserve(ideal.generators().size() + 1);
    for (const auto& g : ideal.generators()) gens.push_back(extend_ring(g, ext));
    Poly t = Poly::variable(ext, ext->nvars() - 1);
    gens.push_back(Poly::one(ext) - t * extend_ring(p, ext));
    return Ideal(ext, std::move(gens)).contains_one();
}

}  // namespace zlocus
