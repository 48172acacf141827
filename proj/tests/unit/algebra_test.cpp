#include <gtest/gtest.h>

#include <random>

#include "psym/algebra/basis.hpp"
#include "psym/algebra/matrix.hpp"
#include "psym/algebra/polynomial.hpp"
#include "psym/algebra/rational.hpp"
#include "test_util.hpp"

using namespace psym;
using testutil::q;

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(parse_rational("2/4"), q(1, 2));
    EXPECT_EQ(parse_rational("-3"), q(-3));
    EXPECT_EQ(to_string(q(6, 4)), "3/2");
    EXPECT_EQ(to_string(q(0)), "0");
    EXPECT_EQ(to_string(q(5)), "5");
}

TEST(Rational, RejectsFloatsAndZeroDenominator) {
    EXPECT_THROW(parse_rational("0.5"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1e3"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/0"), std::exception);
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Matrix, VecMatMul) {
    Matrix<Rational> m(2, 3);
    m(0, 0) = q(1);
    m(0, 2) = q(1, 2);
    m(1, 1) = q(3);
    auto v = vec_mat_mul(std::vector<Rational>{q(2), q(1, 3)}, m);
    EXPECT_EQ(v, (std::vector<Rational>{q(2), q(1), q(1)}));
    EXPECT_THROW(vec_mat_mul(std::vector<Rational>{q(1)}, m), DimensionError);
}

TEST(Polynomial, ArithmeticAndEvaluation) {
    Polynomial y1 = Polynomial::variable(2, 0);
    Polynomial y2 = Polynomial::variable(2, 1);
    Polynomial p = (y1 + y2) * (y1 - y2);
    EXPECT_EQ(p, y1 * y1 - y2 * y2);
    std::vector<Rational> pt{q(3), q(2)};
    EXPECT_EQ(p.evaluate(pt), q(5));
    EXPECT_EQ(p.total_degree(), 2u);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(p.derivative(0), y1 * q(2));
}

TEST(Polynomial, Printing) {
    Polynomial y1 = Polynomial::variable(1, 0);
    Polynomial p = y1 * q(1, 2) + Polynomial(1, q(1, 2));
    EXPECT_EQ(p.coefficient({1}), q(1, 2));
    EXPECT_EQ(p.coefficient({2}), q(0));
    EXPECT_FALSE(p.to_string().empty());
}

TEST(Basis, ExtendsOnlyIndependentVectors) {
    Basis<Rational> b(3);
    EXPECT_TRUE(b.extend({q(1), q(2), q(0)}, {}));
    EXPECT_TRUE(b.extend({q(0), q(1), q(1)}, {}));
    EXPECT_FALSE(b.extend({q(2), q(5), q(1)}, {}));
    EXPECT_TRUE(b.contains({q(1), q(3), q(1)}));
    EXPECT_FALSE(b.contains({q(0), q(0), q(1)}));
    EXPECT_EQ(b.size(), 2u);
    EXPECT_THROW(b.extend({q(1)}, {}), DimensionError);
}

// Property: the basis size equals the rank computed by an independent
// Gaussian elimination, for random small integer vectors.
TEST(Basis, RankMatchesIndependentElimination) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + trial % 4, m = 1 + (trial / 4) % 6;
        std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(n));
        for (auto& r : rows)
            for (auto& x : r) x = entry(rng);
        Basis<Rational> b(n);
        for (const auto& r : rows) b.extend(r, {});

        auto a = rows;
        std::size_t rank = 0;
        for (std::size_t c = 0; c < n && rank < m; ++c) {
            std::size_t p = rank;
            while (p < m && a[p][c] == 0) ++p;
            if (p == m) continue;
            std::swap(a[p], a[rank]);
            for (std::size_t r = 0; r < m; ++r)
                if (r != rank && a[r][c] != 0) {
                    Rational f = a[r][c] / a[rank][c];
                    for (std::size_t j = 0; j < n; ++j) a[r][j] -= f * a[rank][j];
                }
            ++rank;
        }
        EXPECT_EQ(b.size(), rank);
        for (const auto& r : rows) EXPECT_TRUE(b.contains(r));
    }
}

TEST(Basis, PolynomialSpanOverFractionField) {
    Polynomial y = Polynomial::variable(1, 0);
    Polynomial one(1, q(1));
    Basis<Polynomial> b(2);
    EXPECT_TRUE(b.extend({y, one}, {}));
    // (y^2, y) = y * (y, 1) is dependent over Q(y).
    EXPECT_FALSE(b.extend({y * y, y}, {}));
    EXPECT_TRUE(b.extend({one, one}, {}));
}
