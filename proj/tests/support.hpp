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

#ifndef TORUSMOD_TESTS_SUPPORT_HPP
#define TORUSMOD_TESTS_SUPPORT_HPP

#include <cstddef>
#include <random>

#include "torusmod/matrix.hpp"
#include "torusmod/multi_index.hpp"
#include "torusmod/scalar.hpp"
#include "torusmod/torus_fields.hpp"

namespace testing_support {

using namespace torusmod;

class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }

    // small p/q with |p| <= 5, 1 <= q <= 4
    Scalar rational() { return Scalar::fraction(integer(-5, 5), integer(1, 4)); }
    Scalar gaussian() { return Scalar(rational().re(), integer(0, 2) == 0 ? rational().re() : Rational(0)); }
    Scalar nonzero() {
        Scalar s;
        while (s.is_zero()) s = gaussian();
        return s;
    }

    MultiIndex point(std::size_t n, long radius) {
        MultiIndex r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = integer(-radius, radius);
        return r;
    }
    MultiIndex exponent(std::size_t n, long max_total) {
        MultiIndex k(n);
        long left = integer(0, max_total);
        for (std::size_t i = 0; i < n && left > 0; ++i) {
            long e = i + 1 == n ? left : integer(0, left);
            k[i] = e;
            left -= e;
        }
        return k;
    }

    VectorField field(std::size_t n, long radius, int terms = 3) {
        VectorField x(n);
        for (int t = 0; t < terms; ++t) x.add_term(point(n, radius), index(n), rational());
        return x;
    }
    // sum of random d_ab(r) and Cartan elements: divergence zero by construction
    VectorField divfree(std::size_t n, long radius, int terms = 3) {
        VectorField x(n);
        for (int t = 0; t < terms; ++t) {
            std::size_t a = index(n), b = index(n);
            x += rational() * d_ab(a, b, point(n, radius));
        }
        x += rational() * VectorField::cartan(n, index(n));
        return x;
    }

    Matrix matrix(std::size_t rows, std::size_t cols) {
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational();
        return m;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

}  // namespace testing_support

#endif  // TORUSMOD_TESTS_SUPPORT_HPP
