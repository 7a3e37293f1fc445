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

#ifndef TORUSMOD_POLY_FIELDS_HPP
#define TORUSMOD_POLY_FIELDS_HPP

// Divergence-zero polynomial vector fields sum c x^k d/dx_a, their grading
// L_n (coefficient degree n + 1), the identification L_0 = sl_N and highest
// weight vectors for the adjoint action of sl_N on each L_n.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "multi_index.hpp"
#include "scalar.hpp"
#include "text.hpp"

namespace torusmod {

class XVectorField {
public:
    using Key = std::pair<MultiIndex, std::size_t>;
    using Terms = std::map<Key, Scalar>;

    explicit XVectorField(std::size_t n) : n_(n) {}

    /// c * x^k d/dx_a
    static XVectorField term(const MultiIndex& k, std::size_t a, Scalar c = 1) {
        XVectorField x(k.size());
        x.add_term(k, a, std::move(c));
        return x;
    }

    std::size_t dimension() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Scalar coefficient(const MultiIndex& k, std::size_t a) const {
        auto it = terms_.find(Key{k, a});
        return it == terms_.end() ? Scalar() : it->second;
    }

    void add_term(const MultiIndex& k, std::size_t a, const Scalar& c) {
        if (k.size() != n_) throw std::invalid_argument("XVectorField: dimension mismatch");
        if (a >= n_) throw std::out_of_range("XVectorField: direction out of range");
        if (!k.nonnegative()) throw std::invalid_argument("XVectorField: negative exponent " + k.to_string());
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(Key{k, a}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    XVectorField& operator+=(const XVectorField& o) {
        check(o);
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    XVectorField& operator-=(const XVectorField& o) {
        check(o);
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend XVectorField operator+(XVectorField a, const XVectorField& b) { return a += b; }
    friend XVectorField operator-(XVectorField a, const XVectorField& b) { return a -= b; }
    friend XVectorField operator*(const Scalar& c, const XVectorField& x) {
        XVectorField out(x.n_);
        for (const auto& [k, v] : x.terms_) out.add_term(k.first, k.second, c * v);
        return out;
    }
    friend bool operator==(const XVectorField&, const XVectorField&) = default;

    /// Grade n when every term has coefficient degree n + 1; nullopt otherwise
    /// (including the zero field).
    std::optional<long> grade() const {
        std::optional<long> g;
        for (const auto& [k, _] : terms_) {
            long d = weight(k.first) - 1;
            if (g && *g != d) return std::nullopt;
            g = d;
        }
        return g;
    }

    std::string to_string() const {
        std::vector<text::Term> ts;
        for (const auto& [k, c] : terms_) ts.push_back({c, k.first, k.second});
        return text::print_terms(ts, text::poly_syntax);
    }

    static XVectorField parse(std::string_view s, std::size_t n_if_zero = 0) {
        auto ts = text::parse_terms(s, text::poly_syntax);
        XVectorField x(ts.empty() ? n_if_zero : ts.front().exponent.size());
        for (const auto& t : ts) x.add_term(t.exponent, t.direction, t.coeff);
        return x;
    }

private:
    void check(const XVectorField& o) const {
        if (o.n_ != n_) throw std::invalid_argument("XVectorField: dimension mismatch");
    }

    std::size_t n_;
    Terms terms_;
};

/// S_ab(k) = k_b x^{k-e_b} d/dx_a - k_a x^{k-e_a} d/dx_b (0-based a != b).
inline XVectorField s_generator(std::size_t a, std::size_t b, const MultiIndex& k) {
    std::size_t n = k.size();
    if (a >= n || b >= n) throw std::out_of_range("s_generator: direction out of range");
    if (a == b) throw std::invalid_argument("s_generator: a must differ from b");
    if (!k.nonnegative()) throw std::invalid_argument("s_generator: negative exponent");
    XVectorField x(n);
    if (k[b] > 0) x.add_term(k - MultiIndex::unit(n, b), a, Scalar(k[b]));
    if (k[a] > 0) x.add_term(k - MultiIndex::unit(n, a), b, Scalar(-k[a]));
    return x;
}

/// [x^p d_i, x^q d_j] = q_i x^{p+q-e_i} d_j - p_j x^{p+q-e_j} d_i
inline XVectorField x_bracket(const XVectorField& x, const XVectorField& y) {
    if (x.dimension() != y.dimension()) throw std::invalid_argument("x_bracket: dimension mismatch");
    std::size_t n = x.dimension();
    XVectorField out(n);
    for (const auto& [kx, cx] : x.terms()) {
        const auto& [p, i] = kx;
        for (const auto& [ky, cy] : y.terms()) {
            const auto& [q, j] = ky;
            Scalar c = cx * cy;
            if (q[i] > 0) out.add_term(p + q - MultiIndex::unit(n, i), j, Scalar(q[i]) * c);
            if (p[j] > 0) out.add_term(p + q - MultiIndex::unit(n, j), i, Scalar(-p[j]) * c);
        }
    }
    return out;
}

/// sum_a d f_a / d x_a, as a coefficient map over monomials.
inline std::map<MultiIndex, Scalar> x_divergence(const XVectorField& x) {
    std::map<MultiIndex, Scalar> out;
    std::size_t n = x.dimension();
    for (const auto& [key, c] : x.terms()) {
        const auto& [k, a] = key;
        if (k[a] == 0) continue;
        MultiIndex m = k - MultiIndex::unit(n, a);
        Scalar& slot = out[m];
        slot += Scalar(k[a]) * c;
        if (slot.is_zero()) out.erase(m);
    }
    return out;
}

/// Basis of L_n. `ambient` lists the monomial fields x^m d_a with |m| = n+1;
/// basis vector i has coefficient 1 at ambient position free[i] and 0 at the
/// other free positions, which makes expansion a coordinate read-off.
struct GradedBasis {
    std::size_t n_vars = 0;
    long grade = 0;
    std::vector<XVectorField::Key> ambient;
    std::vector<XVectorField> vectors;
    std::vector<std::size_t> free;

    std::size_t size() const noexcept { return vectors.size(); }

    Vector ambient_coordinates(const XVectorField& x) const {
        Vector v(ambient.size());
        for (std::size_t i = 0; i < ambient.size(); ++i) v[i] = x.coefficient(ambient[i].first, ambient[i].second);
        return v;
    }

    XVectorField combine(std::span<const Scalar> coords) const {
        if (coords.size() != vectors.size()) throw std::invalid_argument("GradedBasis::combine: wrong length");
        XVectorField out(n_vars);
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (!coords[i].is_zero()) out += coords[i] * vectors[i];
        return out;
    }
};

/// Basis of L_n as the null space of the divergence on fields with
/// homogeneous coefficients of degree n + 1.
inline GradedBasis graded_component_basis(std::size_t n_vars, long n) {
    if (n < -1) throw std::invalid_argument("graded_component_basis: grade must be >= -1");
    if (n_vars < 1) throw std::invalid_argument("graded_component_basis: need at least one variable");
    GradedBasis gb;
    gb.n_vars = n_vars;
    gb.grade = n;
    for (const auto& m : compositions(n_vars, n + 1))
        for (std::size_t a = 0; a < n_vars; ++a) gb.ambient.emplace_back(m, a);

    std::vector<MultiIndex> rows = n >= 0 ? compositions(n_vars, n) : std::vector<MultiIndex>{};
    std::map<MultiIndex, std::size_t> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
    Matrix div(rows.size(), gb.ambient.size());
    for (std::size_t j = 0; j < gb.ambient.size(); ++j) {
        const auto& [m, a] = gb.ambient[j];
        if (m[a] == 0) continue;
        div(row_of.at(m - MultiIndex::unit(n_vars, a)), j) = Scalar(m[a]);
    }
    Matrix reduced = div;
    auto pivots = rref(reduced);
    std::vector<bool> is_pivot(gb.ambient.size(), false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t j = 0; j < gb.ambient.size(); ++j)
        if (!is_pivot[j]) gb.free.push_back(j);
    for (const auto& v : nullspace(div)) {
        XVectorField x(n_vars);
        for (std::size_t j = 0; j < v.size(); ++j) x.add_term(gb.ambient[j].first, gb.ambient[j].second, v[j]);
        gb.vectors.push_back(std::move(x));
    }
    return gb;
}

/// Coordinates of g in the basis; throws std::logic_error if g is not in L_n.
inline Vector expand_generator(const XVectorField& g, const GradedBasis& basis) {
    if (g.dimension() != basis.n_vars) throw std::invalid_argument("expand_generator: dimension mismatch");
    if (auto gr = g.grade(); gr && *gr != basis.grade)
        throw std::invalid_argument("expand_generator: field is not of grade " + std::to_string(basis.grade));
    Vector amb = basis.ambient_coordinates(g);
    Vector coords(basis.size());
    for (std::size_t i = 0; i < basis.free.size(); ++i) coords[i] = amb[basis.free[i]];
    if (basis.combine(coords) != g) throw std::logic_error("expand_generator: field is not in the graded component");
    return coords;
}

/// L_0 = sl_N via x_a d/dx_b <-> E_ab.
struct SlIdentification {
    std::size_t n = 0;
    /// Basis of sl_N: E_ab (a != b) then H_a = E_aa - E_{a+1,a+1}.
    std::vector<std::string> names;
    std::vector<Matrix> matrices;
    std::vector<XVectorField> fields;

    /// sum_ab M_ab x_a d/dx_b; M must be traceless.
    XVectorField to_field(const Matrix& m) const {
        XVectorField x(n);
        Scalar trace;
        for (std::size_t a = 0; a < n; ++a) {
            trace += m(a, a);
            for (std::size_t b = 0; b < n; ++b) x.add_term(MultiIndex::unit(n, a), b, m(a, b));
        }
        if (!trace.is_zero()) throw std::invalid_argument("sl identification: matrix is not traceless");
        return x;
    }

    /// Inverse of to_field on L_0.
    Matrix to_matrix(const XVectorField& x) const {
        Matrix m(n, n);
        for (const auto& [key, c] : x.terms()) {
            const auto& [k, b] = key;
            if (weight(k) != 1) throw std::invalid_argument("sl identification: field is not in L_0");
            std::size_t a = 0;
            while (k[a] == 0) ++a;
            m(a, b) += c;
        }
        return m;
    }
};

inline SlIdentification sl_identification(std::size_t n) {
    if (n < 2) throw std::invalid_argument("sl_identification: N must be at least 2");
    SlIdentification id;
    id.n = n;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            id.names.push_back("E_" + std::to_string(a + 1) + "_" + std::to_string(b + 1));
            id.matrices.push_back(Matrix::unit(n, a, b));
        }
    for (std::size_t a = 0; a + 1 < n; ++a) {
        id.names.push_back("H_" + std::to_string(a + 1) + "_" + std::to_string(a + 2));
        id.matrices.push_back(Matrix::unit(n, a, a) - Matrix::unit(n, a + 1, a + 1));
    }
    for (const auto& m : id.matrices) id.fields.push_back(id.to_field(m));
    return id;
}

/// Joint kernel of ad(x_a d/dx_b), a < b, on L_n. Each returned vector is
/// scaled so its first stored coefficient is 1.
inline std::vector<XVectorField> highest_weight_vectors(std::size_t n_vars, long n) {
    GradedBasis basis = graded_component_basis(n_vars, n);
    GradedBasis target = graded_component_basis(n_vars, n);  // ad(L_0) preserves L_n
    std::vector<XVectorField> raising;
    for (std::size_t a = 0; a < n_vars; ++a)
        for (std::size_t b = a + 1; b < n_vars; ++b) raising.push_back(XVectorField::term(MultiIndex::unit(n_vars, a), b));

    std::size_t amb = target.ambient.size();
    Matrix joint(raising.size() * amb, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t r = 0; r < raising.size(); ++r) {
            Vector img = target.ambient_coordinates(x_bracket(raising[r], basis.vectors[j]));
            for (std::size_t i = 0; i < amb; ++i) joint(r * amb + i, j) = img[i];
        }
    std::vector<XVectorField> out;
    for (const auto& v : nullspace(joint)) {
        XVectorField x = basis.combine(v);
        Scalar lead = x.terms().begin()->second;
        out.push_back(Scalar(1) / lead * x);
    }
    return out;
}

}  // namespace torusmod

#endif  // TORUSMOD_POLY_FIELDS_HPP
