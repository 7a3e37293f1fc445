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

#ifndef TORUSMOD_TENSOR_MODULE_HPP
#define TORUSMOD_TENSOR_MODULE_HPP

// Tensor modules A_N (x) U: the Cartan action with weights s + lambda, the
// action of d_ab(r) through D_ab(r), the A_N action by shifts, axiom
// verification and invariant subspace detection on U.

#include <chrono>
#include <cstdint>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "multi_index.hpp"
#include "rep_data.hpp"
#include "report.hpp"
#include "roots.hpp"
#include "scalar.hpp"
#include "torus_fields.hpp"

namespace torusmod {

/// Finite sum of t^s (x) u_s; zero components are dropped.
class ModuleElement {
public:
    using Components = std::map<MultiIndex, Vector>;

    ModuleElement(std::size_t n, std::size_t dim) : n_(n), dim_(dim) {}

    static ModuleElement basis(const MultiIndex& s, std::size_t dim, std::size_t i) {
        ModuleElement v(s.size(), dim);
        Vector u(dim);
        u.at(i) = 1;
        v.add(s, u);
        return v;
    }
    static ModuleElement homogeneous(const MultiIndex& s, Vector u) {
        ModuleElement v(s.size(), u.size());
        v.add(s, u);
        return v;
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t dim() const noexcept { return dim_; }
    const Components& components() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }

    Vector component(const MultiIndex& s) const {
        auto it = c_.find(s);
        return it == c_.end() ? Vector(dim_) : it->second;
    }

    void add(const MultiIndex& s, const Vector& u, const Scalar& scale = 1) {
        if (s.size() != n_) throw std::invalid_argument("ModuleElement: dimension mismatch");
        if (u.size() != dim_) throw std::invalid_argument("ModuleElement: fiber dimension mismatch");
        if (scale.is_zero() || torusmod::is_zero(u)) return;
        auto [it, inserted] = c_.try_emplace(s, dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            if (!u[i].is_zero()) it->second[i] += scale * u[i];
        if (torusmod::is_zero(it->second)) c_.erase(it);
    }

    ModuleElement& operator+=(const ModuleElement& o) {
        check(o);
        for (const auto& [s, u] : o.c_) add(s, u);
        return *this;
    }
    ModuleElement& operator-=(const ModuleElement& o) {
        check(o);
        for (const auto& [s, u] : o.c_) add(s, u, -1);
        return *this;
    }
    friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
    friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
    friend ModuleElement operator*(const Scalar& c, const ModuleElement& v) {
        ModuleElement out(v.n_, v.dim_);
        for (const auto& [s, u] : v.c_) out.add(s, u, c);
        return out;
    }
    friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

    /// "t^[s] (x) [u1,...,ud] + ..." or "0".
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (const auto& [s, u] : c_) {
            if (!out.empty()) out += " + ";
            out += "t^" + s.to_string() + " (x) [";
            for (std::size_t i = 0; i < u.size(); ++i) out += (i ? "," : "") + u[i].to_string();
            out += "]";
        }
        return out;
    }

private:
    void check(const ModuleElement& o) const {
        if (o.n_ != n_ || o.dim_ != dim_) throw std::invalid_argument("ModuleElement: shape mismatch");
    }

    std::size_t n_;
    std::size_t dim_;
    Components c_;
};

class TensorModule {
public:
    /// From validated representation data; throws if the data is invalid.
    TensorModule(std::vector<Scalar> lambda, RepData data)
        : lambda_(std::move(lambda)), p_(to_poly_operator(data)), data_(std::move(data)) {
        if (lambda_.size() != p_.n()) throw std::invalid_argument("TensorModule: lambda must have N entries");
    }
    /// From a raw coefficient family, unchecked. Used to study corrupted data.
    TensorModule(std::vector<Scalar> lambda, PolyOperator p) : lambda_(std::move(lambda)), p_(std::move(p)) {
        if (lambda_.size() != p_.n()) throw std::invalid_argument("TensorModule: lambda must have N entries");
    }

    std::size_t n() const noexcept { return p_.n(); }
    std::size_t dim() const noexcept { return p_.dim(); }
    const std::vector<Scalar>& lambda() const noexcept { return lambda_; }
    const PolyOperator& poly() const noexcept { return p_; }
    const std::optional<RepData>& data() const noexcept { return data_; }

    /// D_ab(r), memoized.
    const Matrix& D(std::size_t a, std::size_t b, const MultiIndex& r) const {
        auto key = std::tuple{a, b, r};
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, assemble_D(p_, a, b, r)).first;
        return it->second;
    }

private:
    std::vector<Scalar> lambda_;
    PolyOperator p_;
    std::optional<RepData> data_;
    mutable std::map<std::tuple<std::size_t, std::size_t, MultiIndex>, Matrix> cache_;
};

/// d_a (t^s (x) u) = (s_a + lambda_a) t^s (x) u
inline ModuleElement act_cartan(const TensorModule& m, std::size_t a, const ModuleElement& v) {
    if (a >= m.n()) throw std::out_of_range("act_cartan: direction out of range");
    ModuleElement out(m.n(), m.dim());
    for (const auto& [s, u] : v.components()) out.add(s, u, Scalar(s[a]) + m.lambda()[a]);
    return out;
}

/// d_ab(r) (t^s (x) u) = (r_b s_a - r_a s_b) t^{r+s} (x) u + t^{r+s} (x) D_ab(r) u
inline ModuleElement act_dab(const TensorModule& m, std::size_t a, std::size_t b, const MultiIndex& r,
                             const ModuleElement& v) {
    if (a >= m.n() || b >= m.n()) throw std::out_of_range("act_dab: direction out of range");
    ModuleElement out(m.n(), m.dim());
    if (a == b || r.is_zero()) return out;
    const Matrix& d = m.D(a, b, r);
    for (const auto& [s, u] : v.components()) {
        MultiIndex rs = r + s;
        out.add(rs, u, Scalar(r[b] * s[a] - r[a] * s[b]));
        out.add(rs, d.apply(u));
    }
    return out;
}

/// Action of a divergence-free field. The t^0 part is a sum of Cartan
/// elements; for r != 0 with first nonzero entry r_p, the t^r part
/// sum_a f_a t^r d_a equals sum_{a != p} (f_a / r_p) d_ap(r).
inline ModuleElement act_field(const TensorModule& m, const VectorField& x, const ModuleElement& v) {
    if (x.dimension() != m.n()) throw std::invalid_argument("act_field: dimension mismatch");
    if (!divergence(x).is_zero()) throw std::invalid_argument("act_field: field has nonzero divergence");
    std::map<MultiIndex, std::map<std::size_t, Scalar>> by_r;
    for (const auto& [key, c] : x.terms()) by_r[key.first][key.second] = c;
    ModuleElement out(m.n(), m.dim());
    for (const auto& [r, comps] : by_r) {
        if (r.is_zero()) {
            for (const auto& [a, c] : comps) out += c * act_cartan(m, a, v);
            continue;
        }
        std::size_t p = 0;
        while (r[p] == 0) ++p;
        for (const auto& [a, c] : comps) {
            if (a == p) continue;
            out += (c / Scalar(r[p])) * act_dab(m, a, p, r, v);
        }
    }
    return out;
}

/// t^q (t^s (x) u) = t^{q+s} (x) u, extended bilinearly.
inline ModuleElement act_laurent(const TensorModule& m, const LaurentPoly& f, const ModuleElement& v) {
    if (f.dimension() != m.n()) throw std::invalid_argument("act_laurent: dimension mismatch");
    ModuleElement out(m.n(), m.dim());
    for (const auto& [q, c] : f.terms())
        for (const auto& [s, u] : v.components()) out.add(q + s, u, c);
    return out;
}

struct VerifyOptions {
    long radius = 3;
    std::size_t samples = 300;
    std::uint64_t seed = 20260415;
    /// Above this many Leibniz instances the fiber index s cycles through the
    /// box instead of ranging over all of it.
    std::size_t leibniz_budget = 400000;
    bool timing = false;
};

namespace detail {

/// Generators of S_N used by the sweeps: d_a (r = 0, b = npos) or d_ab(r), a < b.
struct Generator {
    std::size_t a;
    std::size_t b;
    MultiIndex r;

    bool cartan() const noexcept { return b == static_cast<std::size_t>(-1); }
    VectorField field(std::size_t n) const { return cartan() ? VectorField::cartan(n, a) : d_ab(a, b, r); }
    std::string to_string() const {
        if (cartan()) return "d_" + std::to_string(a + 1);
        return "d_" + std::to_string(a + 1) + "_" + std::to_string(b + 1) + "(" + r.to_string() + ")";
    }
};

inline ModuleElement act_generator(const TensorModule& m, const Generator& g, const ModuleElement& v) {
    return g.cartan() ? act_cartan(m, g.a, v) : act_dab(m, g.a, g.b, g.r, v);
}

inline std::vector<Generator> generators(std::size_t n, const std::vector<MultiIndex>& box) {
    std::vector<Generator> out;
    for (std::size_t a = 0; a < n; ++a) out.push_back({a, static_cast<std::size_t>(-1), MultiIndex(n)});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (const auto& r : box)
                if (!r.is_zero()) out.push_back({a, b, r});
    return out;
}

template <class F>
Check timed(bool timing, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    Check c = f();
    if (timing) c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

}  // namespace detail

/// Exact sweep of the module axioms over [-R, R]^N:
///  module.j1          d_a is diagonal on t^s (x) e_i with eigenvalue s_a + lambda_a
///  module.j3          X(t^q v) = X(t^q) v + t^q X(v) for every generator X and monomial t^q
///  module.well_defined act(d_ab(r)) = -act(d_ba(r)), and for N >= 3 the cyclic relation
///  module.bracket     act([X,Y]) = [act(X), act(Y)] for seeded generator pairs
///  poly.*             structural invariants of the coefficient family
inline Report verify_axioms(const TensorModule& m, const VerifyOptions& opt = {}) {
    Report rep;
    std::size_t n = m.n(), dim = m.dim();
    std::vector<MultiIndex> box = box_points(n, -opt.radius, opt.radius);
    auto gens = detail::generators(n, box);

    rep.add(detail::timed(opt.timing, [&] {
        CheckBuilder cb("module.j1");
        for (const auto& s : box)
            for (std::size_t i = 0; i < dim; ++i) {
                ModuleElement v = ModuleElement::basis(s, dim, i);
                for (std::size_t a = 0; a < n; ++a) {
                    Scalar ev = Scalar(s[a]) + m.lambda()[a];
                    ModuleElement got = act_field(m, VectorField::cartan(n, a), v);
                    cb.record(got == ev * v, [&] {
                        return Witness{{"generator", "d_" + std::to_string(a + 1)},
                                       {"vector", v.to_string()},
                                       {"image", got.to_string()},
                                       {"expected_eigenvalue", ev.to_string()}};
                    });
                }
            }
        return std::move(cb).done();
    }));

    rep.add(detail::timed(opt.timing, [&] {
        CheckBuilder cb("module.j3");
        bool full = gens.size() * box.size() * box.size() * dim <= opt.leibniz_budget;
        std::size_t cursor = 0;
        for (const auto& g : gens) {
            VectorField x = g.field(n);
            for (const auto& q : box) {
                LaurentPoly f = LaurentPoly::monomial(q);
                LaurentPoly xf = apply_field(x, f);
                auto run = [&](const MultiIndex& s) {
                    for (std::size_t i = 0; i < dim; ++i) {
                        ModuleElement v = ModuleElement::basis(s, dim, i);
                        ModuleElement lhs = detail::act_generator(m, g, act_laurent(m, f, v));
                        ModuleElement rhs = act_laurent(m, xf, v) + act_laurent(m, f, detail::act_generator(m, g, v));
                        cb.record(lhs == rhs, [&] {
                            return Witness{{"generator", g.to_string()},
                                           {"monomial", "t^" + q.to_string()},
                                           {"vector", v.to_string()},
                                           {"lhs", lhs.to_string()},
                                           {"rhs", rhs.to_string()}};
                        });
                    }
                };
                if (full)
                    for (const auto& s : box) run(s);
                else
                    run(box[cursor++ % box.size()]);
            }
        }
        return std::move(cb).done(full ? "full sweep" : "s cycles through the box for each (X, t^q)");
    }));

    rep.add(detail::timed(opt.timing, [&] {
        CheckBuilder cb("module.well_defined");
        for (const auto& r : box) {
            if (r.is_zero()) continue;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b) {
                    const Matrix &ab = m.D(a, b, r), &ba = m.D(b, a, r);
                    cb.record(ab == -ba, [&] {
                        return Witness{{"relation", "d_ab(r) + d_ba(r) = 0"},
                                       {"pair", std::to_string(a + 1) + "," + std::to_string(b + 1)},
                                       {"r", r.to_string()},
                                       {"D_ab(r)", ab.to_string()},
                                       {"D_ba(r)", ba.to_string()}};
                    });
                }
        }
        Check c = std::move(cb).done();
        if (n >= 3) {
            Check cyc = check_cyclic(m.poly(), box);
            c.tested += cyc.tested;
            if (cyc.failures && !c.failures) c.witness = cyc.witness;
            c.failures += cyc.failures;
            c.status = c.failures ? Status::fail : Status::pass;
            c.summary = std::to_string(c.tested) + " instances, " + std::to_string(c.failures) +
                        " failed; antisymmetry and cyclic relation";
        }
        return c;
    }));

    rep.add(detail::timed(opt.timing, [&] {
        CheckBuilder cb("module.bracket");
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1), pick_s(0, box.size() - 1);
        for (std::size_t t = 0; t < opt.samples; ++t) {
            const auto& gx = gens[pick(rng)];
            const auto& gy = gens[pick(rng)];
            VectorField br = bracket(gx.field(n), gy.field(n));
            for (int rep_s = 0; rep_s < 2; ++rep_s) {
                const MultiIndex& s = box[pick_s(rng)];
                for (std::size_t i = 0; i < dim; ++i) {
                    ModuleElement v = ModuleElement::basis(s, dim, i);
                    ModuleElement lhs = act_field(m, br, v);
                    ModuleElement rhs = detail::act_generator(m, gx, detail::act_generator(m, gy, v)) -
                                        detail::act_generator(m, gy, detail::act_generator(m, gx, v));
                    cb.record(lhs == rhs, [&] {
                        return Witness{{"pair", "[" + gx.to_string() + ", " + gy.to_string() + "]"},
                                       {"bracket", br.to_string()},
                                       {"vector", v.to_string()},
                                       {"act_of_bracket", lhs.to_string()},
                                       {"commutator_of_acts", rhs.to_string()}};
                    });
                }
            }
        }
        return std::move(cb).done("seeded generator pairs");
    }));

    Report inv = check_poly_invariants(m.poly());
    rep.merge(inv);
    return rep;
}

enum class Verdict { irreducible, reducible, inconclusive };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::irreducible: return "irreducible";
        case Verdict::reducible: return "reducible";
        case Verdict::inconclusive: return "inconclusive over the base field";
    }
    return "?";
}

struct InvariantSubspaceResult {
    Verdict verdict = Verdict::inconclusive;
    std::size_t algebra_dim = 0;
    std::vector<Vector> witness;  // basis of a proper invariant subspace when reducible
};

namespace detail {

inline Vector flatten(const Matrix& m) { return Vector(m.data().begin(), m.data().end()); }

inline Matrix unflatten(const Vector& v, std::size_t dim) {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < v.size(); ++i) m(i / dim, i % dim) = v[i];
    return m;
}

/// Basis of the unital algebra generated by `gens`, by span closure under
/// left multiplication with the generators.
inline std::vector<Matrix> generated_algebra(const std::vector<Matrix>& gens, std::size_t dim) {
    std::vector<Vector> flat{flatten(Matrix::identity(dim))};
    std::vector<Matrix> basis{Matrix::identity(dim)};
    std::size_t frontier = 0;
    while (frontier < basis.size()) {
        std::vector<Matrix> fresh;
        for (std::size_t i = frontier; i < basis.size(); ++i)
            for (const auto& g : gens) {
                Matrix prod = g * basis[i];
                std::vector<Vector> trial = flat;
                trial.push_back(flatten(prod));
                if (rank(from_columns(trial, dim * dim)) > flat.size()) {
                    flat.push_back(flatten(prod));
                    fresh.push_back(std::move(prod));
                }
            }
        frontier = basis.size();
        basis.insert(basis.end(), fresh.begin(), fresh.end());
        if (basis.size() == dim * dim) break;
    }
    return basis;
}

inline bool is_invariant(const std::vector<Vector>& w, const std::vector<Matrix>& ops, std::size_t dim) {
    std::size_t r = w.size();
    for (const auto& op : ops)
        for (const auto& v : w) {
            std::vector<Vector> trial = w;
            trial.push_back(op.apply(v));
            if (span_basis(trial, dim).size() != r) return false;
        }
    return true;
}

inline Scalar trace(const Matrix& m) {
    Scalar t;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

/// Radical of the algebra with basis `alg`: the kernel of the trace form
/// (characteristic zero).
inline std::vector<Matrix> radical(const std::vector<Matrix>& alg, std::size_t dim) {
    Matrix gram(alg.size(), alg.size());
    for (std::size_t i = 0; i < alg.size(); ++i)
        for (std::size_t j = 0; j < alg.size(); ++j) gram(i, j) = trace(alg[i] * alg[j]);
    std::vector<Matrix> out;
    for (const auto& v : nullspace(gram)) {
        Matrix x = Matrix::zero(dim);
        for (std::size_t i = 0; i < alg.size(); ++i)
            if (!v[i].is_zero()) x += v[i] * alg[i];
        out.push_back(std::move(x));
    }
    return out;
}

/// Matrices commuting with every generator.
inline std::vector<Matrix> commutant(const std::vector<Matrix>& gens, std::size_t dim) {
    std::size_t d2 = dim * dim;
    Matrix eq(gens.size() * d2, d2);
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                std::size_t row = g * d2 + i * dim + j;
                for (std::size_t k = 0; k < dim; ++k) {
                    eq(row, k * dim + j) += gens[g](i, k);
                    eq(row, i * dim + k) -= gens[g](k, j);
                }
            }
    std::vector<Matrix> out;
    for (const auto& v : nullspace(eq)) out.push_back(unflatten(v, dim));
    return out;
}

inline bool is_scalar_matrix(const Matrix& m) { return m == m(0, 0) * Matrix::identity(m.rows()); }

}  // namespace detail

/// Burnside-style test on U over the operators P_ab^(k). A full matrix
/// algebra certifies irreducibility. Otherwise a proper invariant subspace is
/// extracted from, in order: the radical R of the algebra (last nonzero R^k U),
/// eigenspaces for eigenvalues in Q(i) of non-scalar elements of the
/// commutant, and A v or annihilators of A^T v for standard basis, kernel and
/// diagonal-eigenvalue vectors.
inline InvariantSubspaceResult invariant_subspace_test(const std::vector<Matrix>& ops, std::size_t dim) {
    InvariantSubspaceResult res;
    auto alg = detail::generated_algebra(ops, dim);
    res.algebra_dim = alg.size();
    if (alg.size() == dim * dim) {
        res.verdict = Verdict::irreducible;
        return res;
    }
    auto found = [&](std::vector<Vector> w) {
        if (w.empty() || w.size() >= dim || !detail::is_invariant(w, ops, dim)) return false;
        res.verdict = Verdict::reducible;
        res.witness = std::move(w);
        return true;
    };
    auto rad = detail::radical(alg, dim);
    if (!rad.empty()) {
        std::vector<Vector> w;
        for (std::size_t i = 0; i < dim; ++i) {
            Vector e(dim);
            e[i] = 1;
            w.push_back(std::move(e));
        }
        while (true) {
            std::vector<Vector> next;
            for (const auto& x : rad)
                for (const auto& v : w) next.push_back(x.apply(v));
            next = span_basis(next, dim);
            if (next.empty()) break;
            w = std::move(next);
        }
        if (found(span_basis(w, dim))) return res;
    }
    for (const auto& c : detail::commutant(ops, dim)) {
        if (detail::is_scalar_matrix(c)) continue;
        for (const auto& ev : gaussian_rational_roots(minimal_polynomial(c)))
            if (found(span_basis(nullspace(c - ev * Matrix::identity(dim)), dim))) return res;
    }
    auto candidates = [&](const std::vector<Matrix>& a) {
        std::vector<Vector> out;
        for (std::size_t i = 0; i < dim; ++i) {
            Vector e(dim);
            e[i] = 1;
            out.push_back(e);
        }
        for (const auto& b : a) {
            for (auto& v : nullspace(b)) out.push_back(std::move(v));
            for (std::size_t i = 0; i < dim; ++i)
                for (auto& v : nullspace(b - b(i, i) * Matrix::identity(dim))) out.push_back(std::move(v));
        }
        return out;
    };
    auto orbit = [&](const std::vector<Matrix>& a, const Vector& v) {
        std::vector<Vector> imgs;
        for (const auto& b : a) imgs.push_back(b.apply(v));
        return span_basis(imgs, dim);
    };
    for (const auto& v : candidates(alg))
        if (found(orbit(alg, v))) return res;
    std::vector<Matrix> alg_t;
    for (const auto& b : alg) alg_t.push_back(b.transpose());
    for (const auto& v : candidates(alg_t)) {
        auto w = orbit(alg_t, v);
        if (w.empty() || w.size() >= dim) continue;
        Matrix rows(w.size(), dim);
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = 0; j < dim; ++j) rows(i, j) = w[i][j];
        if (found(span_basis(nullspace(rows), dim))) return res;
    }
    res.verdict = Verdict::inconclusive;
    return res;
}

inline InvariantSubspaceResult invariant_subspace_test(const TensorModule& m) {
    return invariant_subspace_test(m.poly().all_matrices(), m.dim());
}

}  // namespace torusmod

#endif  // TORUSMOD_TENSOR_MODULE_HPP
