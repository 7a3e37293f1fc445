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

#ifndef TORUSMOD_ROOTS_HPP
#define TORUSMOD_ROOTS_HPP

// Minimal polynomials of matrices and their roots in Q(i).

#include <gmpxx.h>

#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"
#include "scalar.hpp"

namespace torusmod {

/// Monic minimal polynomial of a square matrix, coefficients from degree 0 up.
inline std::vector<Scalar> minimal_polynomial(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("minimal_polynomial: matrix is not square");
    std::size_t n = m.rows();
    auto flat = [](const Matrix& x) { return Vector(x.data().begin(), x.data().end()); };
    std::vector<Vector> powers{flat(Matrix::identity(n))};
    Matrix cur = Matrix::identity(n);
    while (true) {
        cur = m * cur;
        Vector v = flat(cur);
        if (auto x = solve(from_columns(powers, n * n), v)) {
            std::vector<Scalar> poly;
            for (const auto& c : *x) poly.push_back(-c);
            poly.push_back(1);
            return poly;
        }
        powers.push_back(std::move(v));
    }
}

inline Scalar evaluate_polynomial(const std::vector<Scalar>& poly, const Scalar& x) {
    Scalar acc;
    for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
    return acc;
}

namespace detail {

struct GaussInt {
    mpz_class re, im;
};

inline mpz_class gauss_norm(const GaussInt& z) { return z.re * z.re + z.im * z.im; }

inline bool gauss_divides(const GaussInt& g, const GaussInt& z) {
    mpz_class n = gauss_norm(g);
    mpz_class re = z.re * g.re + z.im * g.im, im = z.im * g.re - z.re * g.im;
    return mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) && mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t());
}

/// Gaussian integer divisors of z (all associates); empty if the norm exceeds `limit`.
inline std::vector<GaussInt> gauss_divisors(const GaussInt& z, const mpz_class& limit) {
    mpz_class n = gauss_norm(z);
    if (n > limit) return {};
    unsigned long nn = n.get_ui();
    std::vector<unsigned long> divs;
    for (unsigned long d = 1; d * d <= nn; ++d)
        if (nn % d == 0) {
            divs.push_back(d);
            if (d * d != nn) divs.push_back(nn / d);
        }
    std::vector<GaussInt> out;
    for (unsigned long d : divs)
        for (unsigned long x = 0; x * x <= d; ++x) {
            unsigned long y2 = d - x * x;
            mpz_class y;
            mpz_sqrt(y.get_mpz_t(), mpz_class(y2).get_mpz_t());
            if (y * y != y2) continue;
            for (int sx : {1, -1})
                for (int sy : {1, -1}) {
                    if ((x == 0 && sx < 0) || (y == 0 && sy < 0)) continue;
                    GaussInt g{mpz_class(sx) * mpz_class(x), sy * y};
                    if (gauss_divides(g, z)) out.push_back(g);
                }
        }
    return out;
}

}  // namespace detail

/// Distinct roots in Q(i) of a polynomial with Gaussian rational coefficients
/// (degree 0 first), by the rational root theorem over Z[i]. Candidates are
/// only enumerated when the relevant norms are at most `limit`, so the list
/// may be incomplete for large coefficients.
inline std::vector<Scalar> gaussian_rational_roots(std::vector<Scalar> poly, const mpz_class& limit = 100000000) {
    while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
    std::vector<Scalar> roots;
    if (poly.size() <= 1) return roots;
    if (poly.front().is_zero()) {
        roots.push_back(Scalar(0));
        while (poly.front().is_zero()) poly.erase(poly.begin());
        if (poly.size() <= 1) return roots;
    }
    mpz_class den = 1;
    for (const auto& c : poly) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.re().get_den_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.im().get_den_mpz_t());
    }
    auto to_int = [&](const Scalar& c) {
        Rational re = c.re() * den, im = c.im() * den;
        return detail::GaussInt{re.get_num(), im.get_num()};
    };
    auto ps = detail::gauss_divisors(to_int(poly.front()), limit);
    auto qs = detail::gauss_divisors(to_int(poly.back()), limit);
    std::set<std::pair<Rational, Rational>> seen;
    for (const auto& p : ps)
        for (const auto& q : qs) {
            Scalar cand = Scalar(Rational(p.re), Rational(p.im)) / Scalar(Rational(q.re), Rational(q.im));
            if (!seen.insert({cand.re(), cand.im()}).second) continue;
            if (evaluate_polynomial(poly, cand).is_zero()) roots.push_back(cand);
        }
    return roots;
}

}  // namespace torusmod

#endif  // TORUSMOD_ROOTS_HPP
