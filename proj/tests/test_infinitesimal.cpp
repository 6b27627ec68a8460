#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "test_support.hpp"

using namespace zlocus;
using namespace zlocus::testing;

namespace {

ChartConnection::Connection zero_connection(const RingPtr& R, std::size_t n, std::size_t q, std::size_t p) {
    return ChartConnection::Connection(n, std::vector<std::vector<Poly>>(q, std::vector<Poly>(p, Poly(R))));
}

ChartConnection random_chart(std::mt19937_64& rng, std::size_t n, std::size_t p, std::size_t q, std::uint32_t degree) {
    auto R = chart_ring(n);
    auto a = zero_connection(R, n, q, p);
    for (auto& slice : a)
        for (auto& row : slice)
            for (auto& e : row) e = random_poly(rng, R, degree, 3, 2);
    ChartConnection::Derivative f(n, std::vector<Poly>(p, Poly(R)));
    for (auto& row : f)
        for (auto& e : row) e = random_poly(rng, R, degree, 3, 2);
    return {n, p, q, std::move(a), std::move(f)};
}

// Degree of g in the fiber variables xi1..xin (the last n of 2n).
bool homogeneous_linear_in_xi(const Poly& g, std::size_t n) {
    for (const auto& t : g.terms()) {
        std::uint64_t d = 0;
        for (std::size_t k = n; k < 2 * n; ++k) d += t.mono[k];
        if (d != 1) return false;
    }
    return true;
}

}  // namespace

TEST(TangentRing, VariableNames) {
    EXPECT_EQ(tangent_ring(2)->names(), (std::vector<std::string>{"x1", "x2", "xi1", "xi2"}));
    EXPECT_EQ(chart_ring(1)->names(), std::vector<std::string>{"x1"});
}

TEST(ChartConnection, ShapeErrors) {
    auto R = chart_ring(1);
    ChartConnection::Derivative f1(1, std::vector<Poly>(1, Poly(R)));
    EXPECT_THROW(ChartConnection(1, 1, 2, zero_connection(R, 1, 2, 1), f1), dimension_mismatch);
    EXPECT_THROW(ChartConnection(0, 1, 0, {}, {}), dimension_mismatch);
    EXPECT_THROW(ChartConnection(1, 1, 1, zero_connection(R, 1, 1, 2), f1), dimension_mismatch);
    EXPECT_THROW(ChartConnection(1, 2, 1, zero_connection(R, 1, 1, 2), f1), dimension_mismatch);
    auto other = ring({"y"});
    ChartConnection::Derivative bad(1, std::vector<Poly>(1, P("y", other)));
    EXPECT_THROW(ChartConnection(1, 1, 0, zero_connection(R, 1, 0, 1), bad), ring_mismatch);
}

TEST(BuildTangentSystem, SingleChartLayout) {
    // n = 1, p = 2, q = 1 with a = (x1, 2), f = (x1^2, 1).
    auto R = chart_ring(1);
    auto a = zero_connection(R, 1, 1, 2);
    a[0][0] = {P("x1", R), P("2", R)};
    ChartConnection::Derivative f{{P("x1^2", R), P("1", R)}};
    auto sys = build_tangent_system(ChartConnection(1, 2, 1, a, f));
    auto T = tangent_ring(1);
    EXPECT_EQ(sys.matrix(), matrix(T, 2, 2, {"xi1", "xi1*x1", "0", "2*xi1"}));
    EXPECT_EQ(sys.lift(), (std::vector<Poly>{P("xi1*x1^2", T), P("xi1", T)}));
}

TEST(BuildTangentSystem, ColumnOrderDerivativesFirst) {
    // n = 2, p = q = 2, zero connection: derivative column (i, k) sits at i*n + k.
    auto R = chart_ring(2);
    ChartConnection::Derivative f(2, std::vector<Poly>(2, Poly(R)));
    auto sys = build_tangent_system(ChartConnection(2, 2, 2, zero_connection(R, 2, 2, 2), f));
    auto T = tangent_ring(2);
    EXPECT_EQ(sys.matrix(), matrix(T, 2, 6, {"xi1", "xi2", "0", "0", "0", "0", "0", "0", "xi1", "xi2", "0", "0"}));
}

TEST(BuildTangentSystem, ShapeAndHomogeneityProperty) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 3));
        const auto p = static_cast<std::size_t>(uniform_int(rng, 1, 3));
        const auto q = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(p)));
        auto sys = build_tangent_system(random_chart(rng, n, p, q, 2));
        EXPECT_EQ(sys.p(), p);
        EXPECT_EQ(sys.q(), q * (n + 1));
        EXPECT_EQ(sys.ring()->nvars(), 2 * n);
        for (std::size_t r = 0; r < sys.p(); ++r) {
            for (std::size_t c = 0; c < sys.q(); ++c) EXPECT_TRUE(homogeneous_linear_in_xi(sys.matrix()(r, c), n));
            EXPECT_TRUE(homogeneous_linear_in_xi(sys.lift()[r], n));
        }
    }
}

TEST(InfinitesimalLocus, FlatLiftingGivesWholeSpace) {
    std::mt19937_64 rng(62);
    auto R = chart_ring(2);
    auto chart = random_chart(rng, 2, 2, 1, 1);
    auto a = zero_connection(R, 2, 1, 2);
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t j = 0; j < 2; ++j) a[k][0][j] = chart.a(k, 0, j);
    ChartConnection flat(2, 2, 1, a, ChartConnection::Derivative(2, std::vector<Poly>(2, Poly(R))));
    for (const auto& y : build_tangent_system(flat).lift()) EXPECT_TRUE(y.is_zero());
    auto Z = infinitesimal_locus(flat);
    for (int k = 0; k < 100; ++k) EXPECT_TRUE(contains_point(Z, random_point(rng, 4)));
}

TEST(InfinitesimalLocus, NoHodgeSubbundleIsLiteralVanishing) {
    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 10; ++trial) {
        auto chart = random_chart(rng, 2, 2, 0, 1);
        auto sys = build_tangent_system(chart);
        EXPECT_EQ(sys.q(), 0u);
        auto Z = infinitesimal_locus(chart);
        auto T = tangent_ring(2);
        std::vector<Poly> xs{Poly::variable(T, 0), Poly::variable(T, 1)};
        for (int k = 0; k < 30; ++k) {
            auto p = random_point(rng, 4);
            bool all_vanish = true;
            for (std::size_t j = 0; j < 2; ++j) {
                Poly s(T);
                for (std::size_t m = 0; m < 2; ++m)
                    s += Poly::variable(T, 2 + m) * symbolic_evaluate(chart.f(m, j), xs);
                all_vanish = all_vanish && evaluate(s, p).is_zero();
            }
            EXPECT_EQ(contains_point(Z, p), all_vanish);
        }
        // (x, 0) is always a member.
        auto origin_fiber = random_point(rng, 2);
        origin_fiber.resize(4);
        EXPECT_TRUE(contains_point(Z, origin_fiber));
    }
}

TEST(InfinitesimalLocus, OneDimensionalChartIsEverything) {
    // n = p = q = 1, a = 0, f = x1: xi*x1 = xi*phi' is always solvable.
    auto R = chart_ring(1);
    ChartConnection c(1, 1, 1, zero_connection(R, 1, 1, 1), {{P("x1", R)}});
    auto sys = build_tangent_system(c);
    auto Z = infinitesimal_locus(c);
    for (const auto& p : integer_grid(2, -3, 3)) {
        EXPECT_TRUE(solvable_at_point(sys, p));
        EXPECT_TRUE(contains_point(Z, p));
    }
}

TEST(InfinitesimalLocus, AgreesWithRankOracleOnRandomCharts) {
    std::mt19937_64 rng(64);
    int checked = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 2));
        const auto p = static_cast<std::size_t>(uniform_int(rng, 1, 2));
        const auto q = static_cast<std::size_t>(uniform_int(rng, 0, 1));
        auto chart = random_chart(rng, n, p, q, 1);
        auto sys = build_tangent_system(chart);
        auto pruned = infinitesimal_locus(chart, true);
        auto raw = infinitesimal_locus(chart, false);
        for (int k = 0; k < 20; ++k, ++checked) {
            auto pt = random_point(rng, 2 * n);
            bool expected = solvable_at_point(sys, pt);
            EXPECT_EQ(contains_point(pruned, pt), expected);
            EXPECT_EQ(contains_point(raw, pt), expected);
        }
    }
    EXPECT_GE(checked, 500);
}

TEST(InfinitesimalLocus, ZeroSectionAndFiberScaling) {
    std::mt19937_64 rng(65);
    int scaled = 0;
    for (int trial = 0; trial < 25; ++trial) {
        const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 2));
        auto chart = random_chart(rng, n, 2, static_cast<std::size_t>(uniform_int(rng, 0, 1)), 1);
        auto Z = infinitesimal_locus(chart);
        for (int k = 0; k < 10; ++k) {
            auto x = random_point(rng, n);
            auto zero_fiber = x;
            zero_fiber.resize(2 * n);
            EXPECT_TRUE(contains_point(Z, zero_fiber));

            auto pt = random_point(rng, 2 * n);
            if (!contains_point(Z, pt)) continue;
            GaussianRational lambda(mpq_class(uniform_int(rng, 1, 7), uniform_int(rng, 1, 5)));
            if (uniform_int(rng, 0, 1) == 1) lambda = -lambda;
            for (std::size_t m = n; m < 2 * n; ++m) pt[m] *= lambda;
            EXPECT_TRUE(contains_point(Z, pt));
            ++scaled;
        }
    }
    EXPECT_GT(scaled, 20);
}

TEST(QuadricExample, AllChecksPassQuickly) {
    auto start = std::chrono::steady_clock::now();
    auto checks = quadric_example_checks();
    auto elapsed = std::chrono::steady_clock::now() - start;
    EXPECT_GE(checks.size(), 20u);
    for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name;
    EXPECT_LT(elapsed, std::chrono::seconds(1));
}

TEST(QuadricExample, CheckHelpersRejectNonIdentities) {
    auto S = ring({"s"});
    std::vector<Poly> beta1{P("1", S), P("i*s", S), P("s", S), P("i", S)};
    std::vector<Poly> beta2{P("1", S), P("-i*s", S), P("-s", S), P("i", S)};
    // theta(beta1) = (-i, -s, i*s, 1) equals -i * beta2.
    std::vector<Poly> theta_beta1{P("-i", S), P("-s", S), P("i*s", S), P("1", S)};
    EXPECT_TRUE(projectively_equal(theta_beta1, beta2));
    EXPECT_FALSE(projectively_equal(theta_beta1, beta1));
    EXPECT_FALSE(projectively_equal(beta1, std::vector<Poly>(4, Poly(S))));
    auto X = ring({"x0", "x1"});
    EXPECT_TRUE(proportional(P("x0^2 + x1^2", X), P("-3*i*x0^2 - 3*i*x1^2", X)));
    EXPECT_FALSE(proportional(P("x0^2 + x1^2", X), P("x0^2 - x1^2", X)));
    EXPECT_FALSE(proportional(Poly(X), Poly(X)));
}
