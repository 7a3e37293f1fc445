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

#ifndef TORUSMOD_TORUS_FIELDS_HPP
#define TORUSMOD_TORUS_FIELDS_HPP

// Laurent polynomials A_N, the Witt algebra W_N of vector fields
// sum f_a(t) d_a with d_a = t_a d/dt_a, and the divergence-zero subalgebra.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multi_index.hpp"
#include "scalar.hpp"
#include "text.hpp"

namespace torusmod {

class LaurentPoly {
public:
    using Terms = std::map<MultiIndex, Scalar>;

    explicit LaurentPoly(std::size_t n) : n_(n) {}

    static LaurentPoly monomial(const MultiIndex& r, Scalar c = 1) {
        LaurentPoly p(r.size());
        p.add_term(r, std::move(c));
        return p;
    }
    static LaurentPoly constant(std::size_t n, Scalar c) { return monomial(MultiIndex(n), std::move(c)); }

    std::size_t dimension() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Scalar coefficient(const MultiIndex& r) const {
        auto it = terms_.find(r);
        return it == terms_.end() ? Scalar() : it->second;
    }

    void add_term(const MultiIndex& r, const Scalar& c) {
        if (r.size() != n_) throw std::invalid_argument("LaurentPoly: dimension mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(r, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        check(o);
        for (const auto& [r, c] : o.terms_) add_term(r, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        check(o);
        for (const auto& [r, c] : o.terms_) add_term(r, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const Scalar& c, const LaurentPoly& p) {
        LaurentPoly out(p.n_);
        for (const auto& [r, x] : p.terms_) out.add_term(r, c * x);
        return out;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check(b);
        LaurentPoly out(a.n_);
        for (const auto& [r, x] : a.terms_)
            for (const auto& [s, y] : b.terms_) out.add_term(r + s, x * y);
        return out;
    }
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    void check(const LaurentPoly& o) const {
        if (o.n_ != n_) throw std::invalid_argument("LaurentPoly: dimension mismatch");
    }

    std::size_t n_;
    Terms terms_;
};

/// d_a applied to f: multiplies each t^r by r_a.
inline LaurentPoly apply_cartan(std::size_t a, const LaurentPoly& f) {
    if (a >= f.dimension()) throw std::out_of_range("direction out of range");
    LaurentPoly out(f.dimension());
    for (const auto& [r, c] : f.terms()) out.add_term(r, Scalar(r[a]) * c);
    return out;
}

/// Element sum c * t^r d_a of W_N, stored termwise over the d_a basis.
class VectorField {
public:
    using Key = std::pair<MultiIndex, std::size_t>;
    using Terms = std::map<Key, Scalar>;

    explicit VectorField(std::size_t n) : n_(n) {}

    /// c * t^r d_a
    static VectorField term(const MultiIndex& r, std::size_t a, Scalar c = 1) {
        VectorField x(r.size());
        x.add_term(r, a, std::move(c));
        return x;
    }
    /// The Cartan element d_a = t^0 d_a.
    static VectorField cartan(std::size_t n, std::size_t a) { return term(MultiIndex(n), a); }

    std::size_t dimension() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Scalar coefficient(const MultiIndex& r, std::size_t a) const {
        auto it = terms_.find(Key{r, a});
        return it == terms_.end() ? Scalar() : it->second;
    }

    void add_term(const MultiIndex& r, std::size_t a, const Scalar& c) {
        if (r.size() != n_) throw std::invalid_argument("VectorField: dimension mismatch");
        if (a >= n_) throw std::out_of_range("VectorField: direction out of range");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(Key{r, a}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Coefficient function f_a of X = sum_a f_a d_a.
    LaurentPoly component(std::size_t a) const {
        LaurentPoly f(n_);
        for (const auto& [key, c] : terms_)
            if (key.second == a) f.add_term(key.first, c);
        return f;
    }

    VectorField& operator+=(const VectorField& o) {
        check(o);
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    VectorField& operator-=(const VectorField& o) {
        check(o);
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(const Scalar& c, const VectorField& x) {
        VectorField out(x.n_);
        for (const auto& [k, v] : x.terms_) out.add_term(k.first, k.second, c * v);
        return out;
    }
    friend bool operator==(const VectorField&, const VectorField&) = default;

    std::string to_string() const {
        std::vector<text::Term> ts;
        for (const auto& [k, c] : terms_) ts.push_back({c, k.first, k.second});
        return text::print_terms(ts, text::torus_syntax);
    }

    /// Reads "c * t^[r1,...,rN] d_a + ..."; "0" needs an explicit dimension.
    static VectorField parse(std::string_view s, std::size_t n_if_zero = 0) {
        auto ts = text::parse_terms(s, text::torus_syntax);
        VectorField x(ts.empty() ? n_if_zero : ts.front().exponent.size());
        for (const auto& t : ts) x.add_term(t.exponent, t.direction, t.coeff);
        return x;
    }

private:
    void check(const VectorField& o) const {
        if (o.n_ != n_) throw std::invalid_argument("VectorField: dimension mismatch");
    }

    std::size_t n_;
    Terms terms_;
};

/// X(f) for the derivation X = sum_a f_a d_a.
inline LaurentPoly apply_field(const VectorField& x, const LaurentPoly& f) {
    if (x.dimension() != f.dimension()) throw std::invalid_argument("apply_field: dimension mismatch");
    LaurentPoly out(f.dimension());
    for (const auto& [key, c] : x.terms()) {
        const auto& [r, a] = key;
        for (const auto& [s, y] : f.terms()) {
            if (s[a] == 0) continue;
            out.add_term(r + s, c * y * Scalar(s[a]));
        }
    }
    return out;
}

/// [t^r d_i, t^s d_j] = s_i t^{r+s} d_j - r_j t^{r+s} d_i, extended bilinearly.
inline VectorField bracket(const VectorField& x, const VectorField& y) {
    if (x.dimension() != y.dimension()) throw std::invalid_argument("bracket: dimension mismatch");
    VectorField out(x.dimension());
    for (const auto& [kx, cx] : x.terms()) {
        const auto& [r, i] = kx;
        for (const auto& [ky, cy] : y.terms()) {
            const auto& [s, j] = ky;
            MultiIndex rs = r + s;
            Scalar c = cx * cy;
            if (s[i] != 0) out.add_term(rs, j, Scalar(s[i]) * c);
            if (r[j] != 0) out.add_term(rs, i, Scalar(-r[j]) * c);
        }
    }
    return out;
}

/// sum_j d_j(f_j): the divergence in angular coordinates.
inline LaurentPoly divergence(const VectorField& x) {
    LaurentPoly out(x.dimension());
    for (const auto& [key, c] : x.terms()) {
        const auto& [r, a] = key;
        if (r[a] != 0) out.add_term(r, Scalar(r[a]) * c);
    }
    return out;
}

/// d_ab(r) = r_b t^r d_a - r_a t^r d_b (0-based directions).
inline VectorField d_ab(std::size_t a, std::size_t b, const MultiIndex& r) {
    std::size_t n = r.size();
    if (a >= n || b >= n) throw std::out_of_range("d_ab: direction out of range");
    VectorField x(n);
    if (a == b) return x;
    x.add_term(r, a, Scalar(r[b]));
    x.add_term(r, b, Scalar(-r[a]));
    return x;
}

}  // namespace torusmod

#endif  // TORUSMOD_TORUS_FIELDS_HPP
