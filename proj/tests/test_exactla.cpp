#include <nsgrad/linalg.hpp>
#include <nsgrad/matrix.hpp>
#include <nsgrad/polynomial.hpp>
#include <nsgrad/rational.hpp>
#include <nsgrad/subspace.hpp>

#include <gtest/gtest.h>

#include "support/oracles.hpp"

#include <algorithm>

using namespace nsgrad;

TEST(Rational, ParsesAndPrintsLowestTerms) {
    EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
    EXPECT_EQ(to_string(parse_rational("-4/6")), "-2/3");
    EXPECT_EQ(parse_rational("7"), Rational(7));
}

TEST(Rational, Formatting) {
    EXPECT_EQ(to_string(Rational(0)), "0");
    EXPECT_EQ(to_string(Rational(-3)), "-3");
    EXPECT_EQ(to_string(Rational(-2, 6)), "-1/3");
    EXPECT_EQ(to_string(parse_rational("+10/5")), "2");
    EXPECT_EQ(to_string(parse_rational("-0/7")), "0");
    const Rational huge = parse_rational("123456789012345678901234567890/3");
    EXPECT_EQ(to_string(huge), "41152263004115226300411522630");
}

TEST(Rational, RejectsMalformedText) {
    for (const char* bad : {"", "1/0", "0.5", "1e3", "1/", "/2", "1/2/3", "abc", "- 1", "1 ", "--1", "1/-2"})
        EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(Rational, RoundTripsThroughText) {
    oracle::Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        const Rational r(rng.uniform(-1000, 1000), rng.uniform(1, 97));
        EXPECT_EQ(parse_rational(to_string(r)), r);
    }
}

TEST(WeightOrder, ListsSmallMagnitudesFirst) {
    std::vector<Rational> ws{2, -1, 0, Rational(1, 2), 1, -2, Rational(-1, 2)};
    std::sort(ws.begin(), ws.end(), WeightOrder{});
    std::vector<std::string> got;
    for (const auto& w : ws) got.push_back(to_string(w));
    EXPECT_EQ(got, (std::vector<std::string>{"0", "-1/2", "1/2", "-1", "1", "-2", "2"}));
}

TEST(Matrix, Arithmetic) {
    const Matrix a{{1, 2}, {3, 4}};
    const Matrix b{{0, 1}, {1, 0}};
    EXPECT_EQ(a * b, (Matrix{{2, 1}, {4, 3}}));
    EXPECT_EQ(a + b, (Matrix{{1, 3}, {4, 4}}));
    EXPECT_EQ(a - a, Matrix(2, 2));
    EXPECT_EQ(Rational(1, 2) * a, (Matrix{{Rational(1, 2), 1}, {Rational(3, 2), 2}}));
    EXPECT_EQ(a.transpose(), (Matrix{{1, 3}, {2, 4}}));
    EXPECT_EQ(a * (Vector{1, -1}), (Vector{-1, -1}));
    EXPECT_THROW(a * Matrix(3, 3), std::invalid_argument);
}

TEST(Rref, KnownExample) {
    const Matrix m{{2, 4, -2}, {1, 2, 0}, {3, 6, -2}};
    const Echelon e = rref(m);
    EXPECT_EQ(e.rank(), 2u);
    EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(e.form, (Matrix{{1, 2, 0}, {0, 0, 1}, {0, 0, 0}}));
}

TEST(Rref, EmptyAndZeroMatrices) {
    EXPECT_EQ(rank(Matrix(0, 3)), 0u);
    EXPECT_EQ(rank(Matrix(3, 3)), 0u);
    EXPECT_EQ(nullspace(Matrix(2, 3)).size(), 3u);
    EXPECT_TRUE(nullspace(Matrix::identity(4)).empty());
}

TEST(Nullspace, RandomMatricesSatisfyRankNullity) {
    oracle::Rng rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 5));
        const std::size_t c = static_cast<std::size_t>(rng.uniform(1, 6));
        const Matrix m = oracle::random_matrix(rng, r, c, -3, 3, 0.6);
        const auto ns = nullspace(m);
        EXPECT_EQ(rank(m) + ns.size(), c);
        for (const auto& v : ns) EXPECT_TRUE(is_zero(m * v));
        EXPECT_EQ(Subspace::span(c, ns).dim(), ns.size());
    }
}

static std::vector<Vector> rows_of(const Matrix& m) {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row_vector(i));
    return out;
}

TEST(Rref, IsIdempotentAndRowSpacePreserving) {
    oracle::Rng rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const Matrix m = oracle::random_matrix(rng, 4, 5, -2, 2, 0.5);
        const Echelon e = rref(m);
        EXPECT_EQ(rref(e.form).form, e.form);
        EXPECT_EQ(Subspace::span(5, rows_of(m)), Subspace::span(5, rows_of(e.form)));
    }
}

TEST(CharPoly, KnownValues) {
    EXPECT_EQ(char_poly(Matrix::diagonal({0, 0, 1, 1, -1, -1})).to_string(), "t^6 - 2*t^4 + t^2");
    EXPECT_EQ(char_poly(Matrix{{0, -1}, {1, 0}}).to_string(), "t^2 + 1");
    EXPECT_EQ(char_poly(Matrix(0, 0)).to_string(), "1");
    EXPECT_THROW(char_poly(Matrix(2, 3)), std::invalid_argument);
}

TEST(CharPoly, CayleyHamiltonOnRandomMatrices) {
    oracle::Rng rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
        const Matrix m = oracle::random_matrix(rng, n, n, -3, 3);
        const Polynomial p = char_poly(m);
        EXPECT_EQ(p.degree(), static_cast<long>(n));
        EXPECT_EQ(p.leading(), 1);
        EXPECT_TRUE(p(m).is_zero());
        // The trace appears, negated, at t^(n-1).
        Rational trace = 0;
        for (std::size_t i = 0; i < n; ++i) trace += m(i, i);
        EXPECT_EQ(p.coefficient(n - 1), -trace);
    }
}

TEST(RationalRoots, RecoversPlantedRoots) {
    oracle::Rng rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial p = Polynomial::constant(Rational(rng.uniform(1, 5)));
        std::map<Rational, std::size_t> planted;
        const long k = rng.uniform(1, 4);
        for (long i = 0; i < k; ++i) {
            const Rational r(rng.uniform(-6, 6), rng.uniform(1, 4));
            p = p * Polynomial::linear_factor(r);
            ++planted[r];
        }
        const bool irreducible_factor = rng.chance(0.3);
        if (irreducible_factor) p = p * Polynomial({2, 0, 1});  // t^2 + 2
        const RootSplit s = rational_roots(p);
        EXPECT_EQ(s.roots, planted);
        EXPECT_EQ(s.splits(), !irreducible_factor);
        if (irreducible_factor) EXPECT_EQ(s.residual, Polynomial({2, 0, 1}));
    }
}

TEST(RationalRoots, ZeroRootsAndConstants) {
    const RootSplit s = rational_roots(Polynomial({0, 0, 1}));
    EXPECT_EQ(s.roots.at(0), 2u);
    EXPECT_TRUE(s.splits());
    EXPECT_TRUE(rational_roots(Polynomial::constant(3)).roots.empty());
    EXPECT_THROW(rational_roots(Polynomial()), std::invalid_argument);
}

TEST(GeneralizedEigenspace, JordanBlock) {
    const Matrix j{{2, 1, 0}, {0, 2, 0}, {0, 0, 3}};
    EXPECT_EQ(generalized_eigenspace(j, 2).size(), 2u);
    EXPECT_EQ(generalized_eigenspace(j, 3).size(), 1u);
    EXPECT_TRUE(generalized_eigenspace(j, 5).empty());
}

TEST(GeneralizedEigenspace, DimensionsMatchMultiplicities) {
    oracle::Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        // Conjugate an upper-triangular matrix by a unimodular one.
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
        Matrix t = oracle::random_matrix(rng, n, n, -2, 2, 0.5);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < i; ++k) t(i, k) = 0;
        Matrix u = Matrix::identity(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = i + 1; k < n; ++k) u(i, k) = rng.uniform(-2, 2);
        Matrix uinv = Matrix::identity(n);  // inverse of unit upper-triangular by back substitution
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t i = c; i-- > 0;) {
                Rational s = 0;
                for (std::size_t k = i + 1; k <= c; ++k) s += u(i, k) * uinv(k, c);
                uinv(i, c) = -s;
            }
        ASSERT_EQ(u * uinv, Matrix::identity(n));
        const Matrix m = u * t * uinv;
        const RootSplit s = rational_roots(char_poly(m));
        ASSERT_TRUE(s.splits());
        std::size_t total = 0;
        std::vector<Subspace> parts;
        for (const auto& [lambda, mult] : s.roots) {
            const auto g = generalized_eigenspace(m, lambda);
            EXPECT_EQ(g.size(), mult);
            total += g.size();
            parts.push_back(Subspace::span(n, g));
        }
        EXPECT_EQ(total, n);
        EXPECT_TRUE(independent(parts, n));
    }
}

TEST(Subspace, DimensionFormula) {
    oracle::Rng rng(6);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
        auto gens = [&]() {
            std::vector<Vector> g;
            const long k = rng.uniform(0, static_cast<long>(n));
            for (long i = 0; i < k; ++i) g.push_back(oracle::random_matrix(rng, 1, n, -2, 2, 0.6).row_vector(0));
            return g;
        };
        const Subspace u = Subspace::span(n, gens()), w = Subspace::span(n, gens());
        const Subspace s = u.sum(w), i = u.intersection(w);
        EXPECT_EQ(s.dim() + i.dim(), u.dim() + w.dim());
        EXPECT_TRUE(s.contains(u) && s.contains(w));
        EXPECT_TRUE(u.contains(i) && w.contains(i));
        EXPECT_EQ(u.sum(w), w.sum(u));
        EXPECT_EQ(u.intersection(w), w.intersection(u));
    }
}

TEST(Subspace, CanonicalBasisMakesEqualityStructural) {
    const Subspace a = Subspace::span(3, {{1, 1, 0}, {0, 1, 1}});
    const Subspace b = Subspace::span(3, {{1, 2, 1}, {2, 1, -1}, {1, 0, -1}});
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.basis(), b.basis());
    EXPECT_TRUE(a.contains(Vector{3, 5, 2}));
    EXPECT_FALSE(a.contains(Vector{1, 0, 0}));
    EXPECT_TRUE(Subspace(3).is_zero());
    EXPECT_EQ(Subspace::whole(3).dim(), 3u);
}

TEST(Subspace, Independence) {
    const Subspace x = Subspace::span(3, {{1, 0, 0}});
    const Subspace y = Subspace::span(3, {{0, 1, 0}});
    const Subspace xy = Subspace::span(3, {{1, 1, 0}});
    EXPECT_TRUE(independent({x, y}, 3));
    EXPECT_FALSE(independent({x, y, xy}, 3));
    EXPECT_TRUE(independent({}, 3));
}

TEST(Polynomial, DivisionAndEvaluation) {
    const Polynomial p({-6, 11, -6, 1});  // (t-1)(t-2)(t-3)
    const auto [q, r] = p.divide_linear(2);
    EXPECT_EQ(r, 0);
    EXPECT_EQ(q, Polynomial({3, -4, 1}));
    EXPECT_EQ(p(Rational(4)), 6);
    EXPECT_EQ(Polynomial({0, 0, 0}).degree(), -1);
    EXPECT_EQ(Polynomial({Rational(1, 2), -1}).to_string("x"), "-x + 1/2");
}
