#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zlocus/algebra/poly_matrix.hpp"
#include "zlocus/zerolocus/zero_locus.hpp"

namespace zlocus {

/// Bounds for randomly generated presentations.
struct RandomPresentationConfig {
    std::size_t max_vars = 2;
    std::size_t max_p = 3;
    std::size_t max_q = 3;
    std::uint32_t max_degree = 2;
    long coef_bound = 3;        // |re|, |im| <= coef_bound
    double zero_entry_rate = 0.25;
    std::size_t max_terms = 3;
};

inline long uniform_int(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline GaussianRational random_gaussian_integer(std::mt19937_64& rng, long bound) {
    // Mostly real coefficients keep the interesting integer points in play.
    long re = uniform_int(rng, -bound, bound);
    long im = uniform_int(rng, 0, 3) == 0 ? uniform_int(rng, -bound, bound) : 0;
    return {mpq_class(re), mpq_class(im)};
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars, std::uint32_t max_degree) {
    std::vector<std::uint32_t> e(nvars, 0);
    auto budget = static_cast<std::uint32_t>(uniform_int(rng, 0, max_degree));
    for (std::uint32_t d = 0; d < budget && nvars > 0; ++d) ++e[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(nvars) - 1))];
    return Monomial(std::move(e));
}

inline Poly random_poly(std::mt19937_64& rng, const RingPtr& ring, std::uint32_t max_degree, long coef_bound,
                        std::size_t max_terms) {
    std::vector<Poly::Term> terms;
    auto count = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(max_terms)));
    for (std::size_t t = 0; t < count; ++t)
        terms.push_back({random_monomial(rng, ring->nvars(), max_degree), random_gaussian_integer(rng, coef_bound)});
    return Poly::from_terms(ring, std::move(terms));
}

inline RingPtr random_ring(std::mt19937_64& rng, std::size_t max_vars) {
    static const char* names[] = {"x", "y", "z", "w"};
    auto n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(max_vars)));
    std::vector<std::string> v(names, names + std::min<std::size_t>(n, 4));
    return PolyRing::make(std::move(v));
}

inline ModulePresentation random_presentation(std::mt19937_64& rng, const RandomPresentationConfig& cfg = {}) {
    RingPtr ring = random_ring(rng, cfg.max_vars);
    auto p = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(cfg.max_p)));
    auto q = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(cfg.max_q)));
    std::bernoulli_distribution zero(cfg.zero_entry_rate);
    auto entry = [&] {
        if (zero(rng)) return Poly(ring);
        return random_poly(rng, ring, cfg.max_degree, cfg.coef_bound, cfg.max_terms);
    };
    PolyMatrix A(ring, p, q);
    for (std::size_t r = 0; r < p; ++r)
        for (std::size_t c = 0; c < q; ++c) A(r, c) = entry();
    std::vector<Poly> y;
    for (std::size_t r = 0; r < p; ++r) y.push_back(entry());
    return {std::move(A), std::move(y)};
}

/// Coordinate biased toward small integers so that degenerate strata are hit.
inline GaussianRational random_coordinate(std::mt19937_64& rng) {
    switch (uniform_int(rng, 0, 9)) {
        case 0:
        case 1:
        case 2:
            return GaussianRational(mpq_class(0));
        case 3:
        case 4:
        case 5:
            return GaussianRational(mpq_class(uniform_int(rng, -2, 2)));
        case 6:
        case 7:
        case 8:
            return GaussianRational(mpq_class(uniform_int(rng, -4, 4), uniform_int(rng, 1, 3)));
        default:
            return {mpq_class(uniform_int(rng, -2, 2)), mpq_class(uniform_int(rng, -2, 2))};
    }
}

inline std::vector<GaussianRational> random_point(std::mt19937_64& rng, std::size_t nvars) {
    std::vector<GaussianRational> pt;
    for (std::size_t k = 0; k < nvars; ++k) pt.push_back(random_coordinate(rng));
    return pt;
}

struct FuzzReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t points_per_trial = 0;
    std::size_t checks = 0;
    std::size_t mismatches = 0;
    std::size_t solvable = 0;
};

/// Oracle equivalence on random presentations: membership in the pruned and
/// unpruned zero locus must equal the rank test at every sampled point.
inline FuzzReport fuzz_oracle_equivalence(std::uint64_t seed, std::size_t trials, std::size_t points_per_trial = 25,
                                          const RandomPresentationConfig& cfg = {}) {
    std::mt19937_64 rng(seed);
    FuzzReport rep{seed, trials, points_per_trial, 0, 0, 0};
    for (std::size_t t = 0; t < trials; ++t) {
        auto pres = random_presentation(rng, cfg);
        auto raw = zero_locus(pres, false);
        auto pruned = prune(raw);
        for (std::size_t k = 0; k < points_per_trial; ++k) {
            auto pt = random_point(rng, pres.ring()->nvars());
            bool expect = solvable_at_point(pres, pt);
            rep.solvable += expect ? 1 : 0;
            rep.checks += 2;
            if (contains_point(raw, pt) != expect) ++rep.mismatches;
            if (contains_point(pruned, pt) != expect) ++rep.mismatches;
        }
    }
    return rep;
}

}  // namespace zlocus
