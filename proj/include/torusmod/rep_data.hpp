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

#ifndef TORUSMOD_REP_DATA_HPP
#define TORUSMOD_REP_DATA_HPP

// Representation data on a finite-dimensional space U: images of the
// generators S_ab(k) (|k| >= 2) of S_N^+, plus a Heisenberg triple X, Y, Z
// (N = 2) or commuting C_1..C_N (N >= 3). From these the coefficient family
// P_ab^(k) and the operators D_ab(r) = sum_k r^k/k! P_ab^(k) are built.

#include <cstddef>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "difference.hpp"
#include "matrix.hpp"
#include "multi_index.hpp"
#include "poly_fields.hpp"
#include "report.hpp"
#include "scalar.hpp"

namespace torusmod {

/// Generator S_ab(k) with a < b (0-based).
struct GenKey {
    std::size_t a = 0;
    std::size_t b = 1;
    MultiIndex k;

    friend auto operator<=>(const GenKey&, const GenKey&) = default;
    friend bool operator==(const GenKey&, const GenKey&) = default;

    std::string to_string() const {
        return "S_" + std::to_string(a + 1) + "_" + std::to_string(b + 1) + "(" + k.to_string() + ")";
    }
};

class RepData {
public:
    RepData(std::size_t n, std::size_t dim, long k_max) : n_(n), dim_(dim), k_max_(k_max) {
        if (n < 2) throw std::invalid_argument("RepData: N must be at least 2");
        if (dim < 1) throw std::invalid_argument("RepData: dimU must be at least 1");
        if (k_max < 2) throw std::invalid_argument("RepData: K_max must be at least 2");
        if (n == 2) {
            x_ = y_ = z_ = Matrix::zero(dim);
        } else {
            c_.assign(n, Matrix::zero(dim));
        }
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t dim() const noexcept { return dim_; }
    long k_max() const noexcept { return k_max_; }
    bool heisenberg() const noexcept { return n_ == 2; }

    const std::map<GenKey, Matrix>& s_images() const noexcept { return s_; }

    /// rho(S_ab(k)) for any a, b (orientation and a = b handled); 0 when unset.
    Matrix s_image(std::size_t a, std::size_t b, const MultiIndex& k) const {
        if (a == b) return Matrix::zero(dim_);
        if (a > b) return -s_image(b, a, k);
        auto it = s_.find(GenKey{a, b, k});
        return it == s_.end() ? Matrix::zero(dim_) : it->second;
    }

    void set_s_image(std::size_t a, std::size_t b, const MultiIndex& k, Matrix m) {
        if (a >= n_ || b >= n_ || a == b) throw std::out_of_range("RepData: bad generator directions");
        if (k.size() != n_ || !k.nonnegative()) throw std::invalid_argument("RepData: bad exponent " + k.to_string());
        long w = weight(k);
        if (w < 2 || w > k_max_)
            throw std::invalid_argument("RepData: |k| must lie in [2, K_max] for " + k.to_string());
        if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("RepData: image must be dimU x dimU");
        if (a > b) {
            std::swap(a, b);
            m = -m;
        }
        if (m.is_zero())
            s_.erase(GenKey{a, b, k});
        else
            s_.insert_or_assign(GenKey{a, b, k}, std::move(m));
    }

    const Matrix& x() const { return require_heisenberg(), x_; }
    const Matrix& y() const { return require_heisenberg(), y_; }
    const Matrix& z() const { return require_heisenberg(), z_; }
    void set_heisenberg(Matrix x, Matrix y, Matrix z) {
        require_heisenberg();
        for (const Matrix* m : {&x, &y, &z})
            if (m->rows() != dim_ || m->cols() != dim_) throw std::invalid_argument("RepData: image must be dimU x dimU");
        x_ = std::move(x);
        y_ = std::move(y);
        z_ = std::move(z);
    }

    const std::vector<Matrix>& c() const {
        if (heisenberg()) throw std::logic_error("RepData: N = 2 carries a Heisenberg part, not C_a");
        return c_;
    }
    void set_c(std::size_t a, Matrix m) {
        if (heisenberg()) throw std::logic_error("RepData: N = 2 carries a Heisenberg part, not C_a");
        if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("RepData: image must be dimU x dimU");
        c_.at(a) = std::move(m);
    }

    /// The extra-part matrices: X, Y, Z or C_1..C_N, with their names.
    std::vector<std::pair<std::string, Matrix>> extra() const {
        if (heisenberg()) return {{"X", x_}, {"Y", y_}, {"Z", z_}};
        std::vector<std::pair<std::string, Matrix>> out;
        for (std::size_t a = 0; a < n_; ++a) out.emplace_back("C_" + std::to_string(a + 1), c_[a]);
        return out;
    }

    friend bool operator==(const RepData&, const RepData&) = default;

private:
    void require_heisenberg() const {
        if (!heisenberg()) throw std::logic_error("RepData: only N = 2 carries a Heisenberg part");
    }

    std::size_t n_;
    std::size_t dim_;
    long k_max_;
    std::map<GenKey, Matrix> s_;
    Matrix x_, y_, z_;
    std::vector<Matrix> c_;
};

/// Generators S_ab(k) (a < b, |k| = n + 2) of L_n together with their
/// coordinates in graded_component_basis(N, n) and the linear relations
/// among them.
struct GeneratorGrade {
    GradedBasis basis;
    std::vector<GenKey> gens;
    Matrix coords;                    // dim L_n x gens
    std::vector<Vector> relations;    // null space of coords
};

inline GeneratorGrade make_generator_grade(std::size_t n_vars, long n) {
    GeneratorGrade g;
    g.basis = graded_component_basis(n_vars, n);
    for (std::size_t a = 0; a < n_vars; ++a)
        for (std::size_t b = a + 1; b < n_vars; ++b)
            for (const auto& k : compositions(n_vars, n + 2)) g.gens.push_back(GenKey{a, b, k});
    std::vector<Vector> cols;
    for (const auto& key : g.gens) cols.push_back(expand_generator(s_generator(key.a, key.b, key.k), g.basis));
    g.coords = from_columns(cols, g.basis.size());
    g.relations = nullspace(g.coords);
    return g;
}

/// Cached per (N, n); safe to call from several threads.
inline const GeneratorGrade& generator_grade(std::size_t n_vars, long n) {
    static std::mutex mu;
    static std::map<std::pair<std::size_t, long>, GeneratorGrade> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::pair{n_vars, n};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make_generator_grade(n_vars, n)).first;
    return it->second;
}

/// rho(X) for X in S_N^+ (every term of coefficient degree >= 1), through a
/// decomposition of each homogeneous part over the generators. Grades above
/// K_max - 2 act by zero.
inline Matrix rho(const RepData& data, const XVectorField& x) {
    if (x.dimension() != data.n()) throw std::invalid_argument("rho: dimension mismatch");
    std::map<long, XVectorField> parts;
    for (const auto& [key, c] : x.terms()) {
        long g = weight(key.first) - 1;
        if (g < 0) throw std::invalid_argument("rho: field has a component outside S_N^+");
        parts.try_emplace(g, XVectorField(data.n())).first->second.add_term(key.first, key.second, c);
    }
    Matrix out = Matrix::zero(data.dim());
    for (const auto& [g, part] : parts) {
        if (g + 2 > data.k_max()) continue;
        const GeneratorGrade& gg = generator_grade(data.n(), g);
        Vector v = expand_generator(part, gg.basis);
        auto sol = solve(gg.coords, v);
        if (!sol) throw std::logic_error("rho: generators do not span the graded component");
        for (std::size_t i = 0; i < sol->size(); ++i)
            if (!(*sol)[i].is_zero()) out += (*sol)[i] * data.s_image(gg.gens[i].a, gg.gens[i].b, gg.gens[i].k);
    }
    return out;
}

namespace detail {

inline Witness matrices_witness(Witness w, const std::string& lhs_name, const Matrix& lhs, const std::string& rhs_name,
                                const Matrix& rhs) {
    w.emplace_back(lhs_name, lhs.to_string());
    w.emplace_back(rhs_name, rhs.to_string());
    return w;
}

}  // namespace detail

/// Checks the RepData invariants. Every violated invariant becomes a failed
/// check carrying its first witness; an all-pass report means valid data.
inline Report validate(const RepData& data) {
    Report rep;
    std::size_t n = data.n(), dim = data.dim();

    {
        CheckBuilder cb("rep.shape");
        for (const auto& [key, m] : data.s_images()) {
            bool ok = key.a < key.b && key.b < n && key.k.size() == n && key.k.nonnegative() && weight(key.k) >= 2 &&
                      weight(key.k) <= data.k_max() && m.rows() == dim && m.cols() == dim;
            cb.record(ok, [&] { return Witness{{"generator", key.to_string()}}; });
        }
        rep.add(std::move(cb).done());
    }

    {
        CheckBuilder cb("rep.well_defined");
        for (long g = 0; g + 2 <= data.k_max(); ++g) {
            const GeneratorGrade& gg = generator_grade(n, g);
            for (const auto& rel : gg.relations) {
                Matrix sum = Matrix::zero(dim);
                std::string text;
                for (std::size_t i = 0; i < rel.size(); ++i) {
                    if (rel[i].is_zero()) continue;
                    sum += rel[i] * data.s_image(gg.gens[i].a, gg.gens[i].b, gg.gens[i].k);
                    text += (text.empty() ? "" : " + ") + ("(" + rel[i].to_string() + ") " + gg.gens[i].to_string());
                }
                cb.record(sum.is_zero(), [&] {
                    return Witness{{"relation", text + " = 0"}, {"image_of_relation", sum.to_string()}};
                });
            }
        }
        rep.add(std::move(cb).done());
    }

    {
        CheckBuilder cb("rep.bracket");
        std::vector<GenKey> all;
        for (long g = 0; g + 2 <= data.k_max(); ++g) {
            const auto& gens = generator_grade(n, g).gens;
            all.insert(all.end(), gens.begin(), gens.end());
        }
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j) {
                const GenKey &p = all[i], &q = all[j];
                Matrix lhs = commutator(data.s_image(p.a, p.b, p.k), data.s_image(q.a, q.b, q.k));
                XVectorField br = x_bracket(s_generator(p.a, p.b, p.k), s_generator(q.a, q.b, q.k));
                Matrix rhs = rho(data, br);
                cb.record(lhs == rhs, [&] {
                    return detail::matrices_witness(
                        {{"pair", "[" + p.to_string() + ", " + q.to_string() + "]"}, {"bracket", br.to_string()}},
                        "commutator", lhs, "image_of_bracket", rhs);
                });
            }
        rep.add(std::move(cb).done());
    }

    {
        CheckBuilder cb("rep.extra_relations");
        if (data.heisenberg()) {
            const Matrix &x = data.x(), &y = data.y(), &z = data.z();
            Matrix xy = commutator(x, y), xz = commutator(x, z), yz = commutator(y, z);
            cb.record(xy == z, [&] { return detail::matrices_witness({{"relation", "[X,Y] = Z"}}, "[X,Y]", xy, "Z", z); });
            cb.record(xz.is_zero(), [&] { return Witness{{"relation", "[X,Z] = 0"}, {"[X,Z]", xz.to_string()}}; });
            cb.record(yz.is_zero(), [&] { return Witness{{"relation", "[Y,Z] = 0"}, {"[Y,Z]", yz.to_string()}}; });
        } else {
            const auto& c = data.c();
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b) {
                    Matrix ab = commutator(c[a], c[b]);
                    cb.record(ab.is_zero(), [&] {
                        std::string name = "[C_" + std::to_string(a + 1) + ",C_" + std::to_string(b + 1) + "]";
                        return Witness{{"relation", name + " = 0"}, {name, ab.to_string()}};
                    });
                }
        }
        rep.add(std::move(cb).done());
    }

    {
        CheckBuilder cb("rep.extra_commutes");
        for (const auto& [name, e] : data.extra())
            for (const auto& [key, m] : data.s_images()) {
                Matrix cm = commutator(e, m);
                cb.record(cm.is_zero(), [&] {
                    return Witness{{"pair", "[" + name + ", " + key.to_string() + "]"}, {"commutator", cm.to_string()}};
                });
            }
        rep.add(std::move(cb).done());
    }
    return rep;
}

/// The family P_ab^(k) over ordered pairs a != b.
class PolyOperator {
public:
    using Family = std::map<MultiIndex, Matrix>;

    PolyOperator(std::size_t n, std::size_t dim) : n_(n), dim_(dim) {}

    std::size_t n() const noexcept { return n_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::map<std::pair<std::size_t, std::size_t>, Family>& families() const noexcept { return p_; }

    Matrix coefficient(std::size_t a, std::size_t b, const MultiIndex& k) const {
        auto it = p_.find({a, b});
        if (it == p_.end()) return Matrix::zero(dim_);
        auto jt = it->second.find(k);
        return jt == it->second.end() ? Matrix::zero(dim_) : jt->second;
    }

    /// Sets P_ab^(k) for the ordered pair (a, b) only.
    void set(std::size_t a, std::size_t b, const MultiIndex& k, Matrix m) {
        if (a >= n_ || b >= n_ || a == b) throw std::out_of_range("PolyOperator: bad pair");
        if (k.size() != n_ || !k.nonnegative()) throw std::invalid_argument("PolyOperator: bad exponent");
        if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("PolyOperator: shape mismatch");
        auto& fam = p_[{a, b}];
        if (m.is_zero())
            fam.erase(k);
        else
            fam.insert_or_assign(k, std::move(m));
    }
    /// Sets P_ab^(k) and P_ba^(k) = -P_ab^(k).
    void set_antisymmetric(std::size_t a, std::size_t b, const MultiIndex& k, const Matrix& m) {
        set(a, b, k, m);
        set(b, a, k, -m);
    }

    long degree() const {
        long d = -1;
        for (const auto& [_, fam] : p_)
            for (const auto& [k, m] : fam) d = std::max(d, weight(k));
        return d;
    }

    /// Every stored coefficient matrix, in a fixed order.
    std::vector<Matrix> all_matrices() const {
        std::vector<Matrix> out;
        for (const auto& [_, fam] : p_)
            for (const auto& [k, m] : fam) out.push_back(m);
        return out;
    }

    friend bool operator==(const PolyOperator&, const PolyOperator&) = default;

private:
    std::size_t n_;
    std::size_t dim_;
    std::map<std::pair<std::size_t, std::size_t>, Family> p_;
};

/// N = 2: P_12^(e_1) = X, P_12^(e_2) = Y, P_12^(0) = Z. N >= 3:
/// P_ab^(e_b) = C_a, P_ab^(e_a) = -C_b. In both cases P_ab^(k) = rho(S_ab(k))
/// for |k| >= 2, and P_ba = -P_ab.
inline PolyOperator to_poly_operator(const RepData& data) {
    if (!validate(data).passed()) throw std::invalid_argument("to_poly_operator: representation data is not valid");
    std::size_t n = data.n();
    PolyOperator p(n, data.dim());
    for (const auto& [key, m] : data.s_images()) p.set_antisymmetric(key.a, key.b, key.k, m);
    if (data.heisenberg()) {
        p.set_antisymmetric(0, 1, MultiIndex{1, 0}, data.x());
        p.set_antisymmetric(0, 1, MultiIndex{0, 1}, data.y());
        p.set_antisymmetric(0, 1, MultiIndex{0, 0}, data.z());
    } else {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                p.set_antisymmetric(a, b, MultiIndex::unit(n, b), data.c()[a]);
                p.set_antisymmetric(a, b, MultiIndex::unit(n, a), -data.c()[b]);
            }
    }
    return p;
}

/// Inverse of to_poly_operator; reads the a < b families only.
inline RepData from_poly_operator(const PolyOperator& p, long k_max) {
    std::size_t n = p.n();
    RepData data(n, p.dim(), k_max);
    for (const auto& [pair, fam] : p.families()) {
        auto [a, b] = pair;
        if (a > b) continue;
        for (const auto& [k, m] : fam)
            if (weight(k) >= 2) data.set_s_image(a, b, k, m);
    }
    if (n == 2) {
        data.set_heisenberg(p.coefficient(0, 1, {1, 0}), p.coefficient(0, 1, {0, 1}), p.coefficient(0, 1, {0, 0}));
    } else {
        for (std::size_t a = 0; a < n; ++a) {
            std::size_t b = a == 0 ? 1 : 0;
            data.set_c(a, p.coefficient(a, b, MultiIndex::unit(n, b)));
        }
    }
    return data;
}

/// Structural invariants of a coefficient family: antisymmetry, and for
/// N >= 3 vanishing when k_a = k_b = 0 and P_ab^(e_b) = P_ac^(e_c).
inline Report check_poly_invariants(const PolyOperator& p) {
    Report rep;
    std::size_t n = p.n();
    CheckBuilder anti("poly.antisymmetry");
    for (const auto& [pair, fam] : p.families()) {
        auto [a, b] = pair;
        std::set<MultiIndex> ks;
        for (const auto& [k, _] : fam) ks.insert(k);
        for (const auto& [k, _] : p.families().count({b, a}) ? p.families().at({b, a}) : PolyOperator::Family{})
            ks.insert(k);
        for (const auto& k : ks) {
            Matrix ab = p.coefficient(a, b, k), ba = p.coefficient(b, a, k);
            anti.record(ab == -ba, [&] {
                return detail::matrices_witness(
                    {{"pair", std::to_string(a + 1) + "," + std::to_string(b + 1)}, {"k", k.to_string()}}, "P_ab", ab,
                    "P_ba", ba);
            });
        }
    }
    rep.add(std::move(anti).done());
    if (n >= 3) {
        CheckBuilder zero("poly.transverse_zero");
        CheckBuilder lin("poly.linear_consistency");
        for (const auto& [pair, fam] : p.families()) {
            auto [a, b] = pair;
            for (const auto& [k, m] : fam)
                zero.record(k[a] != 0 || k[b] != 0 || m.is_zero(), [&] {
                    return Witness{{"pair", std::to_string(a + 1) + "," + std::to_string(b + 1)},
                                   {"k", k.to_string()},
                                   {"P", m.to_string()}};
                });
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    if (a == b || a == c || b >= c) continue;
                    Matrix pb = p.coefficient(a, b, MultiIndex::unit(n, b)), pc = p.coefficient(a, c, MultiIndex::unit(n, c));
                    lin.record(pb == pc, [&] {
                        return detail::matrices_witness({{"directions", std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
                                                                           std::to_string(c + 1)}},
                                                        "P_ab^(e_b)", pb, "P_ac^(e_c)", pc);
                    });
                }
        rep.add(std::move(zero).done());
        rep.add(std::move(lin).done());
    }
    return rep;
}

/// D_ab(r) = sum_k r^k/k! P_ab^(k) for r != 0, and D_ab(0) = 0.
inline Matrix assemble_D(const PolyOperator& p, std::size_t a, std::size_t b, const MultiIndex& r) {
    if (r.size() != p.n()) throw std::invalid_argument("assemble_D: dimension mismatch");
    if (a >= p.n() || b >= p.n()) throw std::out_of_range("assemble_D: direction out of range");
    Matrix out = Matrix::zero(p.dim());
    if (a == b || r.is_zero()) return out;
    auto it = p.families().find({a, b});
    if (it == p.families().end()) return out;
    for (const auto& [k, m] : it->second) {
        Scalar w = monomial_power(r, k);
        if (w.is_zero()) continue;
        out += (w / Scalar(factorial_mi(k))) * m;
    }
    return out;
}

/// D_ab sampled on the given points.
inline GridFunction assemble_grid(const PolyOperator& p, std::size_t a, std::size_t b, const std::vector<MultiIndex>& pts) {
    return GridFunction::sample(pts, [&](const MultiIndex& r) { return assemble_D(p, a, b, r); });
}

/// One generator pair ((a,b,r), (c,d,s)) for check_D_bracket.
struct DPair {
    std::size_t a, b;
    MultiIndex r;
    std::size_t c, d;
    MultiIndex s;
};

/// Right-hand side of the D bracket:
/// (r_a s_b - r_b s_a) D_cd(s) + (r_c s_d - r_d s_c) D_ab(r) + r_b s_c D_ad(r+s)
///   - r_b s_d D_ac(r+s) - r_a s_c D_bd(r+s) + r_a s_d D_bc(r+s).
inline Matrix d_bracket_rhs(const PolyOperator& p, const DPair& q) {
    const auto &r = q.r, &s = q.s;
    MultiIndex rs = r + s;
    auto sc = [](long v) { return Scalar(v); };
    return sc(r[q.a] * s[q.b] - r[q.b] * s[q.a]) * assemble_D(p, q.c, q.d, s) +
           sc(r[q.c] * s[q.d] - r[q.d] * s[q.c]) * assemble_D(p, q.a, q.b, r) +
           sc(r[q.b] * s[q.c]) * assemble_D(p, q.a, q.d, rs) - sc(r[q.b] * s[q.d]) * assemble_D(p, q.a, q.c, rs) -
           sc(r[q.a] * s[q.c]) * assemble_D(p, q.b, q.d, rs) + sc(r[q.a] * s[q.d]) * assemble_D(p, q.b, q.c, rs);
}

inline Check check_D_bracket(const PolyOperator& p, const std::vector<DPair>& pairs) {
    CheckBuilder cb("identity.bracket");
    for (const auto& q : pairs) {
        Matrix lhs = commutator(assemble_D(p, q.a, q.b, q.r), assemble_D(p, q.c, q.d, q.s));
        Matrix rhs = d_bracket_rhs(p, q);
        cb.record(lhs == rhs, [&] {
            auto dn = [](std::size_t a, std::size_t b, const MultiIndex& r) {
                return "D_" + std::to_string(a + 1) + "_" + std::to_string(b + 1) + "(" + r.to_string() + ")";
            };
            return detail::matrices_witness({{"pair", "[" + dn(q.a, q.b, q.r) + ", " + dn(q.c, q.d, q.s) + "]"}},
                                            "commutator", lhs, "expected", rhs);
        });
    }
    return std::move(cb).done();
}

/// Seeded sample of generator pairs with entries in [-radius, radius].
template <class Rng>
std::vector<DPair> sample_d_pairs(std::size_t n, long radius, std::size_t count, Rng& rng) {
    std::uniform_int_distribution<long> coord(-radius, radius);
    std::uniform_int_distribution<std::size_t> dir(0, n - 1);
    std::vector<DPair> out;
    while (out.size() < count) {
        DPair q{dir(rng), dir(rng), MultiIndex(n), dir(rng), dir(rng), MultiIndex(n)};
        if (q.a == q.b || q.c == q.d) continue;
        for (std::size_t i = 0; i < n; ++i) {
            q.r[i] = coord(rng);
            q.s[i] = coord(rng);
        }
        out.push_back(std::move(q));
    }
    return out;
}

/// Points base + i e_a + j e_b, |i|, |j| <= radius.
inline std::vector<MultiIndex> plane_points(std::size_t n, std::size_t a, std::size_t b, long radius) {
    std::vector<MultiIndex> pts;
    for (long i = -radius; i <= radius; ++i)
        for (long j = -radius; j <= radius; ++j) {
            MultiIndex p(n);
            p[a] += i;
            p[b] += j;
            pts.push_back(p);
        }
    return pts;
}

namespace detail {

inline void commutator_pair(CheckBuilder& cb, const PolyOperator& p, std::size_t a, std::size_t b, long max_m, long max_n,
                         long radius) {
    std::size_t n_vars = p.n();
    GridFunction f = assemble_grid(p, a, b, plane_points(n_vars, a, b, radius));
    MultiIndex ea = MultiIndex::unit(n_vars, a), eb = MultiIndex::unit(n_vars, b);
    Matrix dmb = assemble_D(p, a, b, -eb), dma = assemble_D(p, a, b, -ea);
    for (long m = 1; m <= max_m; ++m)
        for (long n = 0; n <= max_n; ++n) {
            auto mm = mixed_deriv_at(f, a, m, b, n, ea);
            if (!mm) throw std::invalid_argument("check_commutator_identity: radius too small for the stencil");
            Matrix lhs = commutator(dmb, commutator(dma, *mm));
            Matrix rhs = Scalar(-n * (m + 1)) * *mm;
            cb.record(lhs == rhs, [&] {
                return matrices_witness({{"pair", std::to_string(a + 1) + "," + std::to_string(b + 1)},
                                         {"m", std::to_string(m)},
                                         {"n", std::to_string(n)}},
                                        "lhs", lhs, "rhs", rhs);
            });
        }
}

}  // namespace detail

/// [D_ab(-e_b), [D_ab(-e_a), M]] = -n(m+1) M with M = d_a^m d_b^n D_ab(e_a),
/// for 1 <= m <= max_m and 0 <= n <= max_n, on the (a, b) plane of radius R.
inline Check check_commutator_identity(const PolyOperator& p, std::size_t a, std::size_t b, long max_m, long max_n, long radius) {
    CheckBuilder cb("identity.commutator");
    detail::commutator_pair(cb, p, a, b, max_m, max_n, radius);
    return std::move(cb).done();
}

/// The same identity for every ordered pair a != b.
inline Check check_commutator_identity(const PolyOperator& p, long max_m, long max_n, long radius) {
    CheckBuilder cb("identity.commutator");
    for (std::size_t a = 0; a < p.n(); ++a)
        for (std::size_t b = 0; b < p.n(); ++b)
            if (a != b) detail::commutator_pair(cb, p, a, b, max_m, max_n, radius);
    return std::move(cb).done();
}

/// Distinct values -n(m+1) (m >= 1, n >= 0, within the stencil range) for
/// which d_a^m d_b^n D_ab(e_a) is nonzero.
inline std::set<long> commutator_eigenvalues(const PolyOperator& p, std::size_t a, std::size_t b, long max_order, long radius) {
    std::size_t n_vars = p.n();
    GridFunction f = assemble_grid(p, a, b, plane_points(n_vars, a, b, radius));
    MultiIndex ea = MultiIndex::unit(n_vars, a);
    std::set<long> out;
    for (long m = 1; m <= max_order; ++m)
        for (long n = 0; n <= max_order; ++n) {
            auto mm = mixed_deriv_at(f, a, m, b, n, ea);
            if (!mm) throw std::invalid_argument("commutator_eigenvalues: radius too small for the stencil");
            if (!mm->is_zero()) out.insert(-n * (m + 1));
        }
    return out;
}

/// Count of distinct eigenvalues against the bound dimU^2 - dimU + 1. The
/// plane radius is widened to fit the stencil when needed.
inline Check check_eigenvalue_bound(const PolyOperator& p, long radius) {
    CheckBuilder cb("identity.eigenvalue_bound");
    long max_order = std::max(p.degree(), 1L) + 1;
    radius = std::max(radius, max_order + 1);
    std::size_t bound = p.dim() * p.dim() - p.dim() + 1;
    for (std::size_t a = 0; a < p.n(); ++a)
        for (std::size_t b = 0; b < p.n(); ++b) {
            if (a == b) continue;
            auto ev = commutator_eigenvalues(p, a, b, max_order, radius);
            cb.record(ev.size() <= bound, [&] {
                std::string list;
                for (long v : ev) list += (list.empty() ? "" : ",") + std::to_string(v);
                return Witness{{"pair", std::to_string(a + 1) + "," + std::to_string(b + 1)},
                               {"eigenvalues", "{" + list + "}"},
                               {"bound", std::to_string(bound)}};
            });
        }
    return std::move(cb).done();
}

/// N >= 3: r_c D_ab(r) + r_a D_bc(r) + r_b D_ca(r) = 0 for distinct a, b, c.
inline Check check_cyclic(const PolyOperator& p, const std::vector<MultiIndex>& points) {
    CheckBuilder cb("identity.cyclic");
    std::size_t n = p.n();
    for (const auto& r : points)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                for (std::size_t c = b + 1; c < n; ++c) {
                    Matrix sum = Scalar(r[c]) * assemble_D(p, a, b, r) + Scalar(r[a]) * assemble_D(p, b, c, r) +
                                 Scalar(r[b]) * assemble_D(p, c, a, r);
                    cb.record(sum.is_zero(), [&] {
                        return Witness{{"r", r.to_string()},
                                       {"directions", std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
                                                          std::to_string(c + 1)},
                                       {"sum", sum.to_string()}};
                    });
                }
    return std::move(cb).done();
}

}  // namespace torusmod

#endif  // TORUSMOD_REP_DATA_HPP
