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

#ifndef TORUSMOD_SIMPLE_MODULE_HPP
#define TORUSMOD_SIMPLE_MODULE_HPP

// Tensor modules built from a representation phi of sl_N and scalars mu:
// D_ab(r) = sum_{i != a} r_i r_b phi(E_ia) - sum_{i != b} r_i r_a phi(E_ib)
//           + r_a r_b phi(E_aa - E_bb) + (r_b mu_a - r_a mu_b) I.

#include <cstddef>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "poly_fields.hpp"
#include "rep_data.hpp"
#include "report.hpp"
#include "tensor_module.hpp"

namespace torusmod {

struct SimpleSpec {
    std::size_t n = 2;
    std::size_t dim = 1;
    /// Keys "E_a_b" (a != b) and "H_a_b" = E_aa - E_bb, 1-based.
    std::map<std::string, Matrix> phi;
    std::vector<Scalar> mu;
    std::vector<Scalar> lambda;
};

inline std::string e_name(std::size_t a, std::size_t b) { return "E_" + std::to_string(a + 1) + "_" + std::to_string(b + 1); }
inline std::string h_name(std::size_t a, std::size_t b) { return "H_" + std::to_string(a + 1) + "_" + std::to_string(b + 1); }

/// phi of a traceless matrix, through E_ab (a != b) and H_a_{a+1}; the
/// diagonal d is sum_a (d_1 + ... + d_a) H_a_{a+1}.
inline Matrix phi_of(const SimpleSpec& spec, const Matrix& m) {
    std::size_t n = spec.n;
    Matrix out = Matrix::zero(spec.dim);
    Scalar running;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && !m(a, b).is_zero()) out += m(a, b) * spec.phi.at(e_name(a, b));
        running += m(a, a);
        if (a + 1 < n && !running.is_zero()) out += running * spec.phi.at(h_name(a, a + 1));
    }
    if (!running.is_zero()) throw std::invalid_argument("phi_of: matrix is not traceless");
    return out;
}

/// Shape, key coverage and the homomorphism property of phi.
inline Report check_spec(const SimpleSpec& spec) {
    Report rep;
    std::size_t n = spec.n;
    CheckBuilder shape("simple.spec_shape");
    shape.record(n >= 2, [&] { return Witness{{"N", std::to_string(n)}}; });
    shape.record(spec.mu.size() == n, [&] { return Witness{{"mu_length", std::to_string(spec.mu.size())}}; });
    shape.record(spec.lambda.size() == n, [&] { return Witness{{"lambda_length", std::to_string(spec.lambda.size())}}; });
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            shape.record(spec.phi.count(e_name(a, b)) != 0, [&] { return Witness{{"missing", e_name(a, b)}}; });
        }
    for (std::size_t a = 0; a + 1 < n; ++a)
        shape.record(spec.phi.count(h_name(a, a + 1)) != 0, [&] { return Witness{{"missing", h_name(a, a + 1)}}; });
    for (const auto& [name, m] : spec.phi)
        shape.record(m.rows() == spec.dim && m.cols() == spec.dim, [&] { return Witness{{"bad_shape", name}}; });
    bool shape_ok = !shape.failed();
    rep.add(std::move(shape).done());
    if (!shape_ok) return rep;

    CheckBuilder keys("simple.phi_consistent");
    for (const auto& [name, m] : spec.phi) {
        unsigned a = 0, b = 0;
        char kind = 0;
        if (std::sscanf(name.c_str(), "%c_%u_%u", &kind, &a, &b) != 3 || a < 1 || b < 1 || a > n || b > n || a == b ||
            (kind != 'E' && kind != 'H')) {
            keys.fail(Witness{{"unknown_key", name}});
            continue;
        }
        if (kind != 'H') continue;
        Matrix h = Matrix::unit(n, a - 1, a - 1) - Matrix::unit(n, b - 1, b - 1);
        Matrix expect = phi_of(spec, h);
        keys.record(expect == m, [&] { return Witness{{"key", name}, {"given", m.to_string()}, {"implied", expect.to_string()}}; });
    }
    rep.add(std::move(keys).done());

    CheckBuilder hom("simple.phi_homomorphism");
    auto id = sl_identification(n);
    std::vector<Matrix> images;
    for (const auto& x : id.matrices) images.push_back(phi_of(spec, x));
    for (std::size_t i = 0; i < id.matrices.size(); ++i)
        for (std::size_t j = i + 1; j < id.matrices.size(); ++j) {
            Matrix lhs = commutator(images[i], images[j]);
            Matrix rhs = phi_of(spec, commutator(id.matrices[i], id.matrices[j]));
            hom.record(lhs == rhs, [&] {
                return Witness{{"pair", "[" + id.names[i] + ", " + id.names[j] + "]"},
                               {"commutator_of_images", lhs.to_string()},
                               {"image_of_commutator", rhs.to_string()}};
            });
        }
    rep.add(std::move(hom).done());
    return rep;
}

/// Representation data with rho(S_ab(k)) = phi(S_ab(k)) on L_0 = sl_N (via
/// x_a d/dx_b <-> E_ab), zero on higher grades, and the mu-scalars as the
/// extra part: C_a = mu_a I, or X = -mu_2 I, Y = mu_1 I, Z = 0 when N = 2.
inline RepData build_simple_data(const SimpleSpec& spec) {
    if (!check_spec(spec).passed()) throw std::invalid_argument("build_simple: specification is not valid");
    std::size_t n = spec.n;
    RepData data(n, spec.dim, 2);
    auto id = sl_identification(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (const auto& k : compositions(n, 2))
                data.set_s_image(a, b, k, phi_of(spec, id.to_matrix(s_generator(a, b, k))));
    Matrix one = Matrix::identity(spec.dim);
    if (n == 2)
        data.set_heisenberg(-spec.mu[1] * one, spec.mu[0] * one, Matrix::zero(spec.dim));
    else
        for (std::size_t a = 0; a < n; ++a) data.set_c(a, spec.mu[a] * one);
    return data;
}

inline TensorModule build_simple(const SimpleSpec& spec) { return TensorModule(spec.lambda, build_simple_data(spec)); }

/// Direct evaluation of the closed-form D_ab(r).
inline Matrix simple_D(const SimpleSpec& spec, std::size_t a, std::size_t b, const MultiIndex& r) {
    std::size_t n = spec.n;
    Matrix out = Matrix::zero(spec.dim);
    if (a == b || r.is_zero()) return out;
    for (std::size_t i = 0; i < n; ++i) {
        if (i != a) out += Scalar(r[i] * r[b]) * spec.phi.at(e_name(i, a));
        if (i != b) out -= Scalar(r[i] * r[a]) * spec.phi.at(e_name(i, b));
    }
    out += Scalar(r[a] * r[b]) * phi_of(spec, Matrix::unit(n, a, a) - Matrix::unit(n, b, b));
    out += (Scalar(r[b]) * spec.mu[a] - Scalar(r[a]) * spec.mu[b]) * Matrix::identity(spec.dim);
    return out;
}

/// Builds the module and checks: spec validity, validate, verify_axioms,
/// vanishing of all |k| >= 3 coefficients, P^(0) = 0 for N = 2, agreement of
/// the assembled D with simple_D, and that the module is irreducible exactly
/// when phi is.
inline Report check_simple_theorem(const SimpleSpec& spec, const VerifyOptions& opt = {}) {
    Report rep = check_spec(spec);
    if (!rep.passed()) return rep;
    RepData data = build_simple_data(spec);
    rep.merge(validate(data));
    TensorModule m(spec.lambda, data);
    rep.merge(verify_axioms(m, opt));
    std::size_t n = spec.n;

    CheckBuilder high("simple.higher_grades_vanish");
    for (const auto& [pair, fam] : m.poly().families())
        for (const auto& [k, c] : fam)
            high.record(weight(k) <= 2, [&] { return Witness{{"k", k.to_string()}, {"P", c.to_string()}}; });
    rep.add(std::move(high).done());

    if (n == 2) {
        CheckBuilder center("simple.center_acts_by_zero");
        Matrix p0 = m.poly().coefficient(0, 1, MultiIndex{0, 0});
        center.record(p0.is_zero(), [&] { return Witness{{"P_12^(0)", p0.to_string()}}; });
        rep.add(std::move(center).done());
    }

    CheckBuilder direct("simple.direct_formula");
    for (const auto& r : box_points(n, -opt.radius, opt.radius))
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (a == b) continue;
                Matrix lhs = m.D(a, b, r), rhs = simple_D(spec, a, b, r);
                direct.record(lhs == rhs, [&] {
                    return Witness{{"pair", std::to_string(a + 1) + "," + std::to_string(b + 1)},
                                   {"r", r.to_string()},
                                   {"assembled", lhs.to_string()},
                                   {"closed_form", rhs.to_string()}};
                });
            }
    rep.add(std::move(direct).done());

    CheckBuilder irr("simple.irreducibility_matches_phi");
    auto module_res = invariant_subspace_test(m);
    std::vector<Matrix> phi_ops;
    for (const auto& [_, x] : spec.phi) phi_ops.push_back(x);
    auto phi_res = invariant_subspace_test(phi_ops, spec.dim);
    bool definite = module_res.verdict != Verdict::inconclusive && phi_res.verdict != Verdict::inconclusive;
    irr.record(definite && module_res.verdict == phi_res.verdict, [&] {
        return Witness{{"module", verdict_name(module_res.verdict)}, {"phi", verdict_name(phi_res.verdict)}};
    });
    Check ic = std::move(irr).done(std::string("module ") + verdict_name(module_res.verdict) + ", algebra dim " +
                                   std::to_string(module_res.algebra_dim));
    if (!definite) ic.status = Status::inconclusive;
    rep.add(std::move(ic));
    return rep;
}

}  // namespace torusmod

#endif  // TORUSMOD_SIMPLE_MODULE_HPP
