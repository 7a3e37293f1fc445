/*
   Copyright 2026 The torusmod Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"
#include "torusmod/matrix.hpp"
#include "torusmod/multi_index.hpp"
#include "torusmod/scalar.hpp"

using namespace torusmod;
using testing_support::Gen;

TEST(Scalar, ParseAndPrintCanonical) {
    EXPECT_EQ(Scalar::parse("6/4").to_string(), "3/2");
    EXPECT_EQ(Scalar::parse("-3/2+1/4i").to_string(), "-3/2+1/4i");
    EXPECT_EQ(Scalar::parse("1/4i").to_string(), "1/4i");
    EXPECT_EQ(Scalar::parse("-i"), Scalar(Rational(0), Rational(-1)));
    EXPECT_EQ(Scalar::parse("2-i").to_string(), "2-1i");
    EXPECT_EQ(Scalar::parse("0").to_string(), "0");
    EXPECT_THROW(Scalar::parse("1/0"), std::domain_error);
    EXPECT_THROW(Scalar::parse("abc"), std::invalid_argument);
    EXPECT_THROW(Scalar::parse(""), std::invalid_argument);
}

TEST(Scalar, RoundTrip) {
    Gen g(11);
    for (int i = 0; i < 200; ++i) {
        Scalar s = g.gaussian();
        EXPECT_EQ(Scalar::parse(s.to_string()), s) << s;
    }
}

TEST(Scalar, FieldAxioms) {
    Gen g(12);
    for (int i = 0; i < 300; ++i) {
        Scalar a = g.gaussian(), b = g.gaussian(), c = g.gaussian();
        EXPECT_EQ((a + b) - b, a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        if (!a.is_zero()) EXPECT_EQ(a * (Scalar(1) / a), Scalar(1));
    }
    Scalar i = Scalar::imaginary_unit();
    EXPECT_EQ(i * i, Scalar(-1));
    EXPECT_THROW(Scalar(1) / Scalar(0), std::domain_error);
}

TEST(MultiIndex, Weight) {
    EXPECT_EQ(weight(MultiIndex{2, 3}), 5);
    EXPECT_EQ(weight(MultiIndex{0, 0, 0}), 0);
    EXPECT_EQ(weight(MultiIndex{1, -2, 4}), 3);
}

TEST(MultiIndex, Factorial) {
    EXPECT_EQ(factorial_mi(MultiIndex{2, 3}), 12);
    EXPECT_EQ(factorial_mi(MultiIndex{0, 0}), 1);
    EXPECT_EQ(factorial_mi(MultiIndex{1, 1, 2}), 2);
    EXPECT_THROW(factorial_mi(MultiIndex{1, -1}), std::domain_error);
}

TEST(MultiIndex, MonomialPower) {
    EXPECT_EQ(monomial_power(MultiIndex{2, 3}, MultiIndex{1, 2}), Scalar(18));
    EXPECT_EQ(monomial_power(MultiIndex{0, 5}, MultiIndex{0, 0}), Scalar(1));
    EXPECT_EQ(monomial_power(MultiIndex{-1, 2}, MultiIndex{2, 1}), Scalar(2));
    EXPECT_EQ(monomial_power(MultiIndex{0, 2}, MultiIndex{1, 0}), Scalar(0));
}

TEST(MultiIndex, MonomialPowerMultiplicative) {
    Gen g(13);
    for (int i = 0; i < 300; ++i) {
        std::size_t n = 2 + g.index(3);
        MultiIndex r = g.point(n, 4), j = g.exponent(n, 4), k = g.exponent(n, 4);
        EXPECT_EQ(monomial_power(r, j + k), monomial_power(r, j) * monomial_power(r, k));
    }
}

TEST(MultiIndex, Compositions) {
    auto c = compositions(2, 2);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c.front(), (MultiIndex{2, 0}));
    EXPECT_EQ(c.back(), (MultiIndex{0, 2}));
    EXPECT_EQ(compositions(3, 3).size(), 10u);
    EXPECT_EQ(box_points(2, -1, 1).size(), 9u);
}

TEST(Matrix, ProductAssociativeIdentityNeutral) {
    Gen g(14);
    for (int i = 0; i < 50; ++i) {
        Matrix a = g.matrix(3, 3), b = g.matrix(3, 3), c = g.matrix(3, 3);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * Matrix::identity(3), a);
        EXPECT_EQ(Matrix::identity(3) * a, a);
    }
}

TEST(Matrix, NullspaceAndInverse) {
    Matrix m{{1, 2, 3}, {2, 4, 6}};
    auto ns = nullspace(m);
    ASSERT_EQ(ns.size(), 2u);
    for (const auto& v : ns) EXPECT_TRUE(is_zero(m.apply(v)));
    EXPECT_EQ(rank(m), 1u);

    Matrix a{{2, 1}, {1, 1}};
    auto inv = inverse(a);
    ASSERT_TRUE(inv);
    EXPECT_EQ(a * *inv, Matrix::identity(2));
    EXPECT_FALSE(inverse(Matrix{{1, 2}, {2, 4}}));

    auto x = solve(a, Vector{Scalar(3), Scalar(2)});
    ASSERT_TRUE(x);
    EXPECT_EQ((*x)[0], Scalar(1));
    EXPECT_EQ((*x)[1], Scalar(1));
}

TEST(Matrix, Text) {
    Matrix m{{Scalar::fraction(1, 2), 0}, {Scalar::imaginary_unit(), -3}};
    EXPECT_EQ(m.to_string(), "[[1/2,0],[1i,-3]]");
}
