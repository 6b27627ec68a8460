#pragma once

// Incidence identities on the quadric surface Q = V(x0^2 + x1^2 + x2^2 + x3^2)
// in P^3: the lines L_alpha, L_beta, L_gamma, the pencil member
// Q_s = V(s^2 x0^2 + x1^2 - x2^2 - s^2 x3^2), the points alpha_k, beta_k,
// gamma_k in Q ∩ Q_s, the planes F1, F2, F3, and the involution
// theta(c0, c1, c2, c3) = (-c3, -c2, c1, c0). Each check is an exact identity
// in Q(i)[s] or Q(i)[t].

#include <array>
#include <string>
#include <vector>

#include "zlocus/algebra/poly.hpp"
#include "zlocus/cli/poly_text.hpp"

namespace zlocus {

struct NamedCheck {
    std::string name;
    bool passed = false;
};

/// Projective equality of coordinate vectors: both nonzero and every 2x2
/// minor u_a v_b - u_b v_a vanishes.
inline bool projectively_equal(const std::vector<Poly>& u, const std::vector<Poly>& v) {
    if (u.size() != v.size()) return false;
    auto nonzero = [](const std::vector<Poly>& w) {
        for (const auto& c : w)
            if (!c.is_zero()) return true;
        return false;
    };
    if (!nonzero(u) || !nonzero(v)) return false;
    for (std::size_t a = 0; a < u.size(); ++a)
        for (std::size_t b = a + 1; b < u.size(); ++b)
            if (!(u[a] * v[b] - u[b] * v[a]).is_zero()) return false;
    return true;
}

/// Polynomials that agree up to a nonzero scalar factor, so define the same hypersurface.
inline bool proportional(const Poly& g, const Poly& h) {
    if (g.is_zero() || h.is_zero()) return false;
    return g.scaled(h.leading_coefficient()) == h.scaled(g.leading_coefficient());
}

inline std::vector<NamedCheck> quadric_example_checks() {
    const RingPtr P3 = PolyRing::make({"x0", "x1", "x2", "x3"});
    const RingPtr P3s = PolyRing::make({"s", "x0", "x1", "x2", "x3"});
    const RingPtr S = PolyRing::make({"s"});
    const RingPtr T = PolyRing::make({"t"});

    auto vec = [](const RingPtr& r, std::array<const char*, 4> coords) {
        std::vector<Poly> v;
        for (const char* c : coords) v.push_back(parse_poly(c, r));
        return v;
    };
    auto theta = [](const std::vector<Poly>& c) { return std::vector<Poly>{-c[3], -c[2], c[1], c[0]}; };
    // Substitution for a polynomial over (s, x0..x3) at a point over Q(i)[s].
    auto with_s = [&](const std::vector<Poly>& pt) {
        std::vector<Poly> sub{Poly::variable(S, 0)};
        sub.insert(sub.end(), pt.begin(), pt.end());
        return sub;
    };

    const Poly q = parse_poly("x0^2 + x1^2 + x2^2 + x3^2", P3);
    const Poly qs = parse_poly("s^2*x0^2 + x1^2 - x2^2 - s^2*x3^2", P3s);
    const Poly F1 = parse_poly("s*x0 + i*x1 - x2 + i*s*x3", P3s);
    const Poly F2 = parse_poly("s*x0 - i*x1 + x2 + i*s*x3", P3s);
    const Poly F3 = parse_poly("i*x1 + x2", P3s);

    const auto L_alpha = vec(T, {"1", "t", "i*t", "i"});
    const auto L_beta = vec(T, {"1", "t", "-i*t", "i"});
    const auto L_gamma = vec(T, {"1", "t", "-i*t", "-i"});

    struct Pt {
        const char* name;
        std::vector<Poly> c;
    };
    const std::vector<Pt> points{
        {"alpha1", vec(S, {"1", "i*s", "-s", "i"})},  {"alpha2", vec(S, {"1", "-i*s", "s", "i"})},
        {"gamma1", vec(S, {"1", "i*s", "s", "-i"})},  {"gamma2", vec(S, {"1", "-i*s", "-s", "-i"})},
        {"beta1", vec(S, {"1", "i*s", "s", "i"})},    {"beta2", vec(S, {"1", "-i*s", "-s", "i"})},
    };
    auto point = [&](const std::string& name) -> const std::vector<Poly>& {
        for (const auto& p : points)
            if (name == p.name) return p.c;
        throw invariant_violation("unknown example point " + name);
    };

    std::vector<NamedCheck> out;
    auto check = [&](std::string name, bool ok) { out.push_back({std::move(name), ok}); };

    check("L_alpha lies on Q", symbolic_evaluate(q, L_alpha).is_zero());
    check("L_beta lies on Q", symbolic_evaluate(q, L_beta).is_zero());
    check("L_gamma lies on Q", symbolic_evaluate(q, L_gamma).is_zero());

    for (const auto& p : points) {
        check(std::string(p.name) + " lies on Q", symbolic_evaluate(q, p.c).is_zero());
        check(std::string(p.name) + " lies on Q_s", symbolic_evaluate(qs, with_s(p.c)).is_zero());
    }

    auto vanishes = [&](const char* plane, const Poly& F, std::initializer_list<const char*> names) {
        for (const char* n : names)
            check(std::string(plane) + " vanishes at " + n, symbolic_evaluate(F, with_s(point(n))).is_zero());
    };
    vanishes("F1", F1, {"alpha1", "alpha2", "gamma1"});
    vanishes("F2", F2, {"alpha1", "alpha2", "gamma2"});
    vanishes("F3", F3, {"beta1", "beta2", "gamma1", "gamma2"});

    {
        std::vector<Poly> xs;
        for (std::size_t k = 0; k < 4; ++k) xs.push_back(Poly::variable(P3, k));
        check("theta fixes q", symbolic_evaluate(q, theta(xs)) == q);
        std::vector<Poly> sx{Poly::variable(P3s, 0)};
        std::vector<Poly> rest;
        for (std::size_t k = 1; k < 5; ++k) rest.push_back(Poly::variable(P3s, k));
        auto moved = theta(rest);
        sx.insert(sx.end(), moved.begin(), moved.end());
        check("theta fixes Q_s", proportional(symbolic_evaluate(qs, sx), qs));
    }
    check("theta fixes L_alpha pointwise", projectively_equal(theta(L_alpha), L_alpha));
    check("theta fixes L_gamma pointwise", projectively_equal(theta(L_gamma), L_gamma));
    for (const char* n : {"alpha1", "alpha2", "gamma1", "gamma2"})
        check(std::string("theta fixes ") + n, projectively_equal(theta(point(n)), point(n)));
    check("theta maps beta1 to beta2", projectively_equal(theta(point("beta1")), point("beta2")));
    check("theta maps beta2 to beta1", projectively_equal(theta(point("beta2")), point("beta1")));
    return out;
}

}  // namespace zlocus
