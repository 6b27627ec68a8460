#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace zlocus;
using namespace zlocus::testing;

TEST(GaussianRational, CanonicalForm) {
    GaussianRational a(mpq_class(2, 4), mpq_class(-3, 6));
    EXPECT_EQ(a.re(), mpq_class(1, 2));
    EXPECT_EQ(a.im(), mpq_class(-1, 2));
    GaussianRational b(mpq_class(1, -2));
    EXPECT_GT(b.re().get_den(), 0);
    EXPECT_EQ(b.re(), mpq_class(-1, 2));
    GaussianRational z = GaussianRational(3) - GaussianRational(3);
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z, GaussianRational());
    EXPECT_EQ(z.re().get_den(), 1);
}

TEST(GaussianRational, FieldOperations) {
    auto i = GaussianRational::i();
    EXPECT_EQ(i * i, GaussianRational(-1));
    GaussianRational w(mpq_class(3), mpq_class(-4));
    EXPECT_EQ(w * w.inverse(), GaussianRational(1));
    EXPECT_EQ(w.norm(), 25);
    EXPECT_THROW((void)GaussianRational().inverse(), std::domain_error);
}

TEST(PolyArith, DifferenceOfSquaresOverGaussianRationals) {
    auto R = ring({"x", "y"});
    EXPECT_EQ(P("x + i*y", R) * P("x - i*y", R), P("x^2 + y^2", R));
}

TEST(PolyArith, AdditiveIdentity) {
    auto R = ring({"x", "y"});
    Poly p = P("3*x^2*y - 1/2*i*y + 7", R);
    EXPECT_EQ(p + Poly(R), p);
    EXPECT_EQ(Poly(R) + p, p);
}

TEST(PolyArith, ExpandsTheWorkedExampleEquation) {
    auto R = ring({"y", "t"});
    Poly expanded = Poly::one(R) + P("y", R) * P("t", R);
    ASSERT_EQ(expanded.size(), 2u);
    EXPECT_EQ(expanded, P("1 + y*t", R));
    EXPECT_EQ(expanded.leading_monomial(), Monomial({1, 1}));
}

TEST(PolyArith, RingMismatchIsRejected) {
    auto R = ring({"x", "y"});
    auto S = ring({"x", "z"});
    EXPECT_THROW((void)(P("x", R) + P("x", S)), ring_mismatch);
    EXPECT_THROW((void)(P("x", R) * P("x", S)), ring_mismatch);
    // Equal names and order denote the same ring even through distinct objects.
    auto R2 = ring({"x", "y"});
    EXPECT_EQ(P("x", R) + P("y", R2), P("x + y", R));
}

TEST(PolyArith, MonomialOrders) {
    auto G = ring({"x", "y", "z"});
    auto L = ring({"x", "y", "z"}, MonomialOrder::lex);
    // grevlex: degree first, then the smaller last exponent wins.
    EXPECT_EQ(P("x^2 + x*y^2", G).leading_monomial(), Monomial({1, 2, 0}));
    EXPECT_EQ(P("x*z + y^2", G).leading_monomial(), Monomial({0, 2, 0}));
    EXPECT_EQ(P("x^2 + x*y^2", L).leading_monomial(), Monomial({2, 0, 0}));
}

TEST(PolyArith, DegreeCapIsEnforced) {
    auto R = ring({"x"});
    Poly big = Poly::variable(R, 0, static_cast<std::uint32_t>(max_total_degree));
    EXPECT_THROW((void)(big * P("x", R)), degree_overflow);
}

TEST(PolyArith, CanonicalFormProperties) {
    std::mt19937_64 rng(7);
    auto R = ring({"x", "y", "z"});
    for (int trial = 0; trial < 150; ++trial) {
        Poly a = random_poly(rng, R, 3, 5, 5);
        Poly b = random_poly(rng, R, 3, 5, 5);
        EXPECT_EQ(a + b - b, a);
        EXPECT_EQ(a * b, b * a);
        Poly c = random_poly(rng, R, 2, 5, 3);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        for (std::size_t k = 1; k < a.terms().size(); ++k)
            EXPECT_TRUE(R->compare(a.terms()[k - 1].mono, a.terms()[k].mono) > 0);
    }
}

TEST(Evaluate, Basics) {
    auto R = ring({"x", "y"});
    EXPECT_EQ(evaluate(P("x^2 + y^2", R), pt({3, 4})), GaussianRational(25));
    GaussianRational c(mpq_class(-5, 3), mpq_class(2));
    EXPECT_EQ(evaluate(Poly::constant(R, c), pt({9, -1})), c);
    EXPECT_THROW((void)evaluate(P("x", R), pt({1})), dimension_mismatch);
}

TEST(Evaluate, IsARingHomomorphism) {
    std::mt19937_64 rng(11);
    auto R = ring({"x", "y"});
    for (int trial = 0; trial < 120; ++trial) {
        Poly a = random_poly(rng, R, 3, 4, 4);
        Poly b = random_poly(rng, R, 3, 4, 4);
        auto x = random_point(rng, 2);
        EXPECT_EQ(evaluate(a * b, x), evaluate(a, x) * evaluate(b, x));
        EXPECT_EQ(evaluate(a + b, x), evaluate(a, x) + evaluate(b, x));
    }
}

TEST(SymbolicEvaluate, QuadricAtAlpha1) {
    auto X = ring({"x0", "x1", "x2", "x3"});
    auto S = ring({"s"});
    std::vector<Poly> alpha1{P("1", S), P("i*s", S), P("-s", S), P("i", S)};
    EXPECT_TRUE(symbolic_evaluate(P("x0^2 + x1^2 + x2^2 + x3^2", X), alpha1).is_zero());
}

TEST(SymbolicEvaluate, PlanesThroughExamplePoints) {
    auto X = ring({"s", "x0", "x1", "x2", "x3"});
    auto S = ring({"s"});
    std::vector<Poly> alpha1{P("s", S), P("1", S), P("i*s", S), P("-s", S), P("i", S)};
    std::vector<Poly> beta1{P("s", S), P("1", S), P("i*s", S), P("s", S), P("i", S)};
    EXPECT_TRUE(symbolic_evaluate(P("s*x0 + i*x1 - x2 + i*s*x3", X), alpha1).is_zero());
    EXPECT_TRUE(symbolic_evaluate(P("i*x1 + x2", X), beta1).is_zero());
    // F3 does not pass through alpha1: i*(i s) + (-s) = -2s.
    EXPECT_EQ(symbolic_evaluate(P("i*x1 + x2", X), alpha1), P("-2*s", S));
}

TEST(SymbolicEvaluate, IdentitySubstitution) {
    auto R = ring({"x", "y"});
    Poly p = P("x^3*y - 2*i*x*y^2 + 5", R);
    EXPECT_EQ(symbolic_evaluate(p, std::vector<Poly>{P("x", R), P("y", R)}), p);
    EXPECT_THROW((void)symbolic_evaluate(p, std::vector<Poly>{P("x", R)}), dimension_mismatch);
}

TEST(DivideExact, RecoversFactor) {
    auto R = ring({"x", "y"});
    Poly a = P("x^2 - i*y + 3", R);
    Poly b = P("x*y + y^2 - 1", R);
    EXPECT_EQ(divide_exact(a * b, b), a);
    EXPECT_THROW((void)divide_exact(a * b + Poly::one(R), b), invariant_violation);
}

TEST(Determinant, Examples) {
    auto R = ring({"x", "y"});
    EXPECT_EQ(determinant(matrix(R, 1, 1, {"-y"})), P("-y", R));
    EXPECT_EQ(determinant(PolyMatrix::identity(R, 3)), Poly::one(R));
    EXPECT_EQ(determinant(PolyMatrix(R, 0, 0)), Poly::one(R));
    EXPECT_EQ(determinant(matrix(R, 2, 2, {"x", "y", "y", "x"})), P("x^2 - y^2", R));
    EXPECT_THROW((void)determinant(PolyMatrix(R, 2, 3)), dimension_mismatch);
}

TEST(Determinant, BareissNeedsPivotSwap) {
    auto R = ring({"x"});
    auto m = matrix(R, 4, 4, {"0", "1", "0", "0", "1", "0", "0", "0", "0", "0", "x", "0", "0", "0", "0", "1"});
    EXPECT_EQ(bareiss_determinant(m), P("-x", R));
    EXPECT_EQ(laplace_determinant(m), P("-x", R));
}

TEST(Determinant, BareissAgreesWithLaplaceOnRandom4x4Linear) {
    std::mt19937_64 rng(4);
    auto R = ring({"x", "y"});
    for (int trial = 0; trial < 20; ++trial) {
        auto m = random_matrix(rng, R, 4, 4, 1);
        EXPECT_EQ(bareiss_determinant(m), laplace_determinant(m));
    }
}

TEST(Determinant, BareissAgreesWithLaplaceAllSizes) {
    std::mt19937_64 rng(5);
    auto R = ring({"x", "y"});
    int trials = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int t = 0; t < 30; ++t, ++trials) {
            auto m = random_matrix(rng, R, n, n, 2);
            if (t % 5 == 0) m(n - 1, 0) = Poly(R);  // exercise zero pivots too
            EXPECT_EQ(bareiss_determinant(m), laplace_determinant(m)) << "n=" << n;
        }
    }
    EXPECT_GE(trials, 100);
}

TEST(Adjugate, ClosedForms) {
    auto R = ring({"a", "b", "c", "d"});
    EXPECT_EQ(adjugate(matrix(R, 2, 2, {"a", "b", "c", "d"})), matrix(R, 2, 2, {"d", "-b", "-c", "a"}));
    EXPECT_EQ(adjugate(matrix(R, 1, 1, {"a^2 + b"})), matrix(R, 1, 1, {"1"}));
    EXPECT_THROW((void)adjugate(PolyMatrix(R, 1, 2)), dimension_mismatch);
}

TEST(Adjugate, TimesMatrixIsDeterminantTimesIdentity) {
    std::mt19937_64 rng(6);
    auto R = ring({"x", "y"});
    int trials = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int t = 0; t < 30; ++t, ++trials) {
            auto m = random_matrix(rng, R, n, n, 2);
            auto adj = adjugate(m);
            Poly det = determinant(m);
            PolyMatrix expected(R, n, n);
            for (std::size_t k = 0; k < n; ++k) expected(k, k) = det;
            EXPECT_EQ(m * adj, expected);
            EXPECT_EQ(adj * m, expected);
        }
    }
    EXPECT_GE(trials, 100);
}
