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

#ifndef TORUSMOD_MULTI_INDEX_HPP
#define TORUSMOD_MULTI_INDEX_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace torusmod {

/// A point of Z^N. Used for exponents t^r, x^k, grid points and shifts.
/// Directions are 0-based in the C++ API and 1-based in every text format.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t n) : v_(n, 0) {}
    MultiIndex(std::initializer_list<long> entries) : v_(entries) {}
    explicit MultiIndex(std::vector<long> entries) : v_(std::move(entries)) {}

    static MultiIndex unit(std::size_t n, std::size_t a) {
        if (a >= n) throw std::out_of_range("direction out of range");
        MultiIndex e(n);
        e.v_[a] = 1;
        return e;
    }

    std::size_t size() const noexcept { return v_.size(); }
    long operator[](std::size_t i) const { return v_[i]; }
    long& operator[](std::size_t i) { return v_[i]; }
    const std::vector<long>& entries() const noexcept { return v_; }
    auto begin() const noexcept { return v_.begin(); }
    auto end() const noexcept { return v_.end(); }

    bool is_zero() const noexcept {
        for (long x : v_)
            if (x != 0) return false;
        return true;
    }
    bool nonnegative() const noexcept {
        for (long x : v_)
            if (x < 0) return false;
        return true;
    }

    MultiIndex& operator+=(const MultiIndex& o) {
        check_same(o);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
        return *this;
    }
    MultiIndex& operator-=(const MultiIndex& o) {
        check_same(o);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
        return *this;
    }
    MultiIndex& operator*=(long c) {
        for (long& x : v_) x *= c;
        return *this;
    }
    friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
    friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) { return a -= b; }
    friend MultiIndex operator*(long c, MultiIndex a) { return a *= c; }
    MultiIndex operator-() const {
        MultiIndex r = *this;
        for (long& x : r.v_) x = -x;
        return r;
    }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.v_ <=> b.v_; }

    /// "[r1,...,rN]"
    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(v_[i]);
        }
        return s + "]";
    }
    friend std::ostream& operator<<(std::ostream& os, const MultiIndex& m) { return os << m.to_string(); }

private:
    void check_same(const MultiIndex& o) const {
        if (o.v_.size() != v_.size()) throw std::invalid_argument("multi-index dimension mismatch");
    }
    std::vector<long> v_;
};

/// |k| = k_1 + ... + k_N.
inline long weight(const MultiIndex& k) {
    long s = 0;
    for (long x : k) s += x;
    return s;
}

inline Rational factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of a negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

/// k! = k_1! ... k_N!; k must be nonnegative.
inline Rational factorial_mi(const MultiIndex& k) {
    Rational p = 1;
    for (long x : k) {
        if (x < 0) throw std::domain_error("factorial_mi: negative entry in " + k.to_string());
        p *= factorial(x);
    }
    return p;
}

inline Rational binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

inline Rational int_power(long base, long exp) {
    mpz_class p;
    mpz_class b(base);
    mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
    return Rational(p);
}

/// r^k = prod r_i^{k_i} with 0^0 = 1; k must be nonnegative.
inline Scalar monomial_power(const MultiIndex& r, const MultiIndex& k) {
    if (r.size() != k.size()) throw std::invalid_argument("monomial_power: dimension mismatch");
    Rational p = 1;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] < 0) throw std::domain_error("monomial_power: negative exponent");
        if (k[i] > 0) p *= int_power(r[i], k[i]);
    }
    return Scalar(p);
}

/// Every point of [lo, hi]^n in lexicographic order.
inline std::vector<MultiIndex> box_points(std::size_t n, long lo, long hi) {
    std::vector<MultiIndex> out;
    if (hi < lo) return out;
    MultiIndex cur(n);
    for (std::size_t i = 0; i < n; ++i) cur[i] = lo;
    while (true) {
        out.push_back(cur);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (cur[i] < hi) {
                ++cur[i];
                for (std::size_t j = i + 1; j < n; ++j) cur[j] = lo;
                break;
            }
            if (i == 0) return out;
        }
        if (n == 0) return out;
    }
}

/// All nonnegative k in N variables with |k| == total, lexicographically descending
/// (so x_1^total comes first).
inline std::vector<MultiIndex> compositions(std::size_t n, long total) {
    std::vector<MultiIndex> out;
    if (total < 0 || n == 0) return out;
    MultiIndex cur(n);
    std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long left) {
        if (pos + 1 == n) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (long x = left; x >= 0; --x) {
            cur[pos] = x;
            rec(pos + 1, left - x);
        }
    };
    rec(0, total);
    return out;
}

}  // namespace torusmod

#endif  // TORUSMOD_MULTI_INDEX_HPP
