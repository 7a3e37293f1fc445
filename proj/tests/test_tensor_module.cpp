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

#include <algorithm>

#include "support.hpp"
#include "torusmod/io.hpp"
#include "torusmod/tensor_module.hpp"

using namespace torusmod;
using testing_support::Gen;

namespace {

TensorModule load(const std::string& name) {
    auto [d, l] = io::module_from_json(io::read_json_file(std::string(TORUSMOD_DATA_DIR "/") + name));
    return TensorModule(l, d);
}

const std::vector<std::string> kExamples = {"trivial_rank1.json", "trivial_rank2.json", "heisenberg.json",
                                            "abelian_n3.json", "poly_functions.json"};

Matrix E(std::size_t n, std::size_t i, std::size_t j) { return Matrix::unit(n, i, j); }

TensorModule heisenberg(std::vector<Scalar> lambda = {0, 0}) {
    RepData d(2, 3, 2);
    d.set_heisenberg(E(3, 0, 1), E(3, 1, 2), E(3, 0, 2));
    return TensorModule(std::move(lambda), d);
}

Vector vec(std::initializer_list<Scalar> xs) { return Vector(xs); }

ModuleElement random_element(Gen& g, std::size_t n, std::size_t dim, long radius, int terms = 3) {
    ModuleElement v(n, dim);
    for (int t = 0; t < terms; ++t) {
        Vector u(dim);
        for (auto& x : u) x = g.rational();
        v.add(g.point(n, radius), u);
    }
    return v;
}

LaurentPoly monomial(const MultiIndex& q) {
    LaurentPoly f(q.size());
    f.add_term(q, 1);
    return f;
}

}  // namespace

TEST(ModuleElementText, Format) {
    ModuleElement v = ModuleElement::homogeneous({1, -2}, vec({1, Scalar::fraction(-1, 2)}));
    EXPECT_EQ(v.to_string(), "t^[1,-2] (x) [1,-1/2]");
    EXPECT_TRUE((v - v).is_zero());
    EXPECT_TRUE(ModuleElement::basis({0, 0}, 2, 1).component({0, 0})[1] == Scalar(1));
}

TEST(ActCartan, Examples) {
    TensorModule m0({0, 0}, RepData(2, 1, 2));
    ModuleElement v = ModuleElement::homogeneous({2, 3}, vec({1}));
    EXPECT_EQ(act_cartan(m0, 0, v), Scalar(2) * v);

    TensorModule mh({Scalar::fraction(1, 2), 0}, RepData(2, 1, 2));
    ModuleElement w = ModuleElement::homogeneous({0, 0}, vec({1}));
    EXPECT_EQ(act_cartan(mh, 0, w), Scalar::fraction(1, 2) * w);
    EXPECT_TRUE(act_cartan(mh, 1, ModuleElement(2, 1)).is_zero());
}

TEST(ActDab, Examples) {
    TensorModule m0({0, 0}, RepData(2, 1, 2));
    ModuleElement v = ModuleElement::homogeneous({1, 0}, vec({1}));
    EXPECT_EQ(act_dab(m0, 0, 1, {1, 1}, v), ModuleElement::homogeneous({2, 1}, vec({1})));

    TensorModule h = heisenberg();
    Vector u = vec({Scalar::fraction(1, 3), 2, -1});
    ModuleElement x = ModuleElement::homogeneous({0, 0}, u);
    ModuleElement want = ModuleElement::homogeneous({1, 0}, (E(3, 0, 1) + E(3, 0, 2)).apply(u));
    EXPECT_EQ(act_dab(h, 0, 1, {1, 0}, x), want);
    EXPECT_TRUE(act_dab(h, 0, 1, {0, 0}, x).is_zero());
}

TEST(ActDab, WeightedOrbitalIsLinearShift) {
    // the orbital factor with full weights s + lambda equals the bare factor
    // on a module whose linear part is shifted by lambda
    Scalar l1 = Scalar::fraction(1, 3), l2 = Scalar::fraction(-2, 5);
    TensorModule h = heisenberg({l1, l2});
    RepData shifted(2, 3, 2);
    shifted.set_heisenberg(E(3, 0, 1) - l2 * Matrix::identity(3), E(3, 1, 2) + l1 * Matrix::identity(3), E(3, 0, 2));
    TensorModule hs({l1, l2}, shifted);
    Gen g(6);
    for (int i = 0; i < 30; ++i) {
        MultiIndex r = g.point(2, 3), s = g.point(2, 3);
        if (r.is_zero()) continue;
        Vector u = g.matrix(3, 1).column(0);
        ModuleElement v = ModuleElement::homogeneous(s, u);
        Scalar weighted = Scalar(r[1]) * (Scalar(s[0]) + l1) - Scalar(r[0]) * (Scalar(s[1]) + l2);
        ModuleElement want = ModuleElement::homogeneous(r + s, h.D(0, 1, r).apply(u));
        want.add(r + s, u, weighted);
        EXPECT_EQ(act_dab(hs, 0, 1, r, v), want);
        ModuleElement bare = ModuleElement::homogeneous(r + s, h.D(0, 1, r).apply(u));
        bare.add(r + s, u, Scalar(r[1] * s[0] - r[0] * s[1]));
        EXPECT_EQ(act_dab(h, 0, 1, r, v), bare);
    }
}

TEST(ActField, GeneratorsAndDecomposition) {
    Gen g(21);
    for (const auto& f : kExamples) {
        TensorModule m = load(f);
        std::size_t n = m.n();
        for (int i = 0; i < 30; ++i) {
            MultiIndex r = g.point(n, 3);
            std::size_t a = g.index(n), b = g.index(n);
            if (a == b || r.is_zero()) continue;
            ModuleElement v = random_element(g, n, m.dim(), 3);
            EXPECT_EQ(act_field(m, d_ab(a, b, r), v), act_dab(m, a, b, r, v)) << f << " " << r;
        }
        ModuleElement v = random_element(g, n, m.dim(), 2);
        VectorField x = VectorField::cartan(n, 0) + d_ab(0, 1, MultiIndex(std::vector<long>(n, 1)));
        EXPECT_EQ(act_field(m, x, v), act_cartan(m, 0, v) + act_dab(m, 0, 1, MultiIndex(std::vector<long>(n, 1)), v));
    }
}

TEST(ActField, Relations) {
    TensorModule m = load("abelian_n3.json");
    Gen g(4);
    ModuleElement v = random_element(g, 3, 2, 2);
    MultiIndex r{2, -1, 3};
    EXPECT_TRUE(act_field(m, d_ab(0, 1, r) + d_ab(1, 0, r), v).is_zero());
    EXPECT_TRUE((act_dab(m, 0, 1, r, v) + act_dab(m, 1, 0, r, v)).is_zero());
    ModuleElement cyc = Scalar(r[2]) * act_dab(m, 0, 1, r, v) + Scalar(r[0]) * act_dab(m, 1, 2, r, v) +
                        Scalar(r[1]) * act_dab(m, 2, 0, r, v);
    EXPECT_TRUE(cyc.is_zero());

    VectorField bad(3);
    bad.add_term({1, 0, 0}, 0, 1);
    EXPECT_THROW(act_field(m, bad, v), std::invalid_argument);
}

TEST(ActField, BracketOfRandomFields) {
    Gen g(8);
    for (const auto& f : kExamples) {
        TensorModule m = load(f);
        std::size_t n = m.n();
        for (int i = 0; i < 20; ++i) {
            VectorField x = g.divfree(n, 2, 2), y = g.divfree(n, 2, 2);
            ModuleElement v = random_element(g, n, m.dim(), 2, 2);
            ModuleElement lhs = act_field(m, bracket(x, y), v);
            ModuleElement rhs = act_field(m, x, act_field(m, y, v)) - act_field(m, y, act_field(m, x, v));
            EXPECT_EQ(lhs, rhs) << f;
        }
    }
}

TEST(ActLaurent, Examples) {
    TensorModule m = heisenberg();
    Vector u = vec({1, 2, 3});
    ModuleElement v = ModuleElement::homogeneous({0, 1}, u);
    EXPECT_EQ(act_laurent(m, monomial({1, 0}), v), ModuleElement::homogeneous({1, 1}, u));
    EXPECT_EQ(act_laurent(m, monomial({0, 0}), v), v);
    LaurentPoly f = monomial({1, 0}) + monomial({-2, 2});
    EXPECT_EQ(act_laurent(m, f, v), ModuleElement::homogeneous({1, 1}, u) + ModuleElement::homogeneous({-2, 3}, u));
}

TEST(Weights, SupportShiftsByExponent) {
    Gen g(30);
    TensorModule m = load("poly_functions.json");
    for (int i = 0; i < 40; ++i) {
        MultiIndex s = g.point(2, 3), r = g.point(2, 3);
        if (r.is_zero()) continue;
        ModuleElement v = ModuleElement::basis(s, m.dim(), g.index(m.dim()));
        ModuleElement x = act_dab(m, 0, 1, r, v), y = act_laurent(m, monomial(r), v);
        for (const auto& [w, _] : x.components()) EXPECT_EQ(w, s + r);
        for (const auto& [w, _] : y.components()) EXPECT_EQ(w, s + r);
    }
}

TEST(Leibniz, RandomInstances) {
    Gen g(12);
    for (const auto& f : kExamples) {
        TensorModule m = load(f);
        std::size_t n = m.n();
        for (int i = 0; i < 40; ++i) {
            VectorField x = g.divfree(n, 3, 2);
            LaurentPoly q = monomial(g.point(n, 3));
            ModuleElement v = random_element(g, n, m.dim(), 3, 2);
            ModuleElement lhs = act_field(m, x, act_laurent(m, q, v));
            ModuleElement rhs = act_laurent(m, apply_field(x, q), v) + act_laurent(m, q, act_field(m, x, v));
            EXPECT_EQ(lhs, rhs) << f;
        }
    }
}

TEST(VerifyAxioms, Examples) {
    VerifyOptions opt;
    opt.radius = 2;
    for (const auto& f : kExamples) {
        Report rep = verify_axioms(load(f), opt);
        EXPECT_TRUE(rep.passed()) << f << "\n" << rep.to_text();
        for (const char* name : {"module.j1", "module.j3", "module.well_defined", "module.bracket"})
            EXPECT_NE(rep.find(name), nullptr) << name;
    }
}

TEST(VerifyAxioms, HeisenbergRadiusThree) {
    Report rep = verify_axioms(heisenberg({Scalar::fraction(1, 2), Scalar::fraction(-1, 3)}));
    EXPECT_TRUE(rep.passed()) << rep.to_text();
    EXPECT_EQ(rep.find("module.j3")->status, Status::pass);
    EXPECT_EQ(rep.find("module.bracket")->tested, 1800u);
}

TEST(VerifyAxioms, ReportIsDeterministic) {
    VerifyOptions opt;
    opt.radius = 2;
    opt.samples = 50;
    TensorModule m = load("abelian_n3.json");
    EXPECT_EQ(verify_axioms(m, opt).to_json().dump(), verify_axioms(m, opt).to_json().dump());
    opt.seed = 7;
    EXPECT_TRUE(verify_axioms(m, opt).passed());
}

TEST(Mutation, SingleEntryIsDetected) {
    Gen g(2026);
    VerifyOptions opt;
    opt.radius = 2;
    opt.samples = 100;
    for (const auto& f : kExamples) {
        TensorModule m = load(f);
        long k_max = m.data()->k_max();
        for (int i = 0; i < 10; ++i) {
            PolyOperator p = m.poly();
            std::size_t a = g.index(m.n()), b = g.index(m.n());
            if (a == b) b = (a + 1) % m.n();
            MultiIndex k = g.exponent(m.n(), k_max);
            Matrix c = p.coefficient(a, b, k);
            c(g.index(m.dim()), g.index(m.dim())) += g.nonzero();
            p.set(a, b, k, c);
            TensorModule bad(m.lambda(), p);
            Report rep = verify_axioms(bad, opt);
            EXPECT_FALSE(rep.passed()) << f << " P_" << a + 1 << b + 1 << "^(" << k << ")";
        }
    }
}

TEST(Mutation, BrokenBracketRelationFailsCompatibility) {
    TensorModule h = heisenberg();
    PolyOperator p = h.poly();
    p.set_antisymmetric(0, 1, {0, 0}, Matrix::zero(3));
    Report rep = verify_axioms(TensorModule({0, 0}, p));
    const Check* c = rep.find("module.bracket");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->status, Status::fail);
    EXPECT_FALSE(c->witness.empty());
    EXPECT_FALSE(validate(from_poly_operator(p, 2)).passed());
}

TEST(Burnside, Examples) {
    InvariantSubspaceResult one = invariant_subspace_test(load("trivial_rank1.json"));
    EXPECT_EQ(one.verdict, Verdict::irreducible);
    EXPECT_EQ(one.algebra_dim, 1u);

    InvariantSubspaceResult h = invariant_subspace_test(heisenberg());
    EXPECT_EQ(h.verdict, Verdict::reducible);
    EXPECT_EQ(h.algebra_dim, 4u);
    ASSERT_EQ(h.witness.size(), 1u);
    EXPECT_EQ(span_basis(h.witness, 3), span_basis({vec({1, 0, 0})}, 3));

    InvariantSubspaceResult two = invariant_subspace_test(load("trivial_rank2.json"));
    EXPECT_EQ(two.verdict, Verdict::reducible);
    EXPECT_EQ(two.witness.size(), 1u);
}

TEST(Burnside, LowerTriangularWitnessFromTranspose) {
    // span{e_2} invariant under E_21 and E_11; e_1's orbit is everything
    std::vector<Matrix> ops = {E(2, 1, 0), E(2, 0, 0)};
    InvariantSubspaceResult r = invariant_subspace_test(ops, 2);
    EXPECT_EQ(r.verdict, Verdict::reducible);
    EXPECT_TRUE(detail::is_invariant(r.witness, ops, 2));
}

TEST(Burnside, EigenlineOverGaussianRationals) {
    // rotation by 90 degrees: no rational invariant line, but x^2 + 1 splits over Q(i)
    std::vector<Matrix> ops = {Matrix{{0, -1}, {1, 0}}};
    InvariantSubspaceResult r = invariant_subspace_test(ops, 2);
    EXPECT_EQ(r.algebra_dim, 2u);
    EXPECT_EQ(r.verdict, Verdict::reducible);
    ASSERT_EQ(r.witness.size(), 1u);
    EXPECT_FALSE(r.witness[0][1].is_real());
    EXPECT_TRUE(detail::is_invariant(r.witness, ops, 2));
}

TEST(Burnside, InconclusiveOverBaseField) {
    // x^2 - 2 has no root in Q(i)
    std::vector<Matrix> ops = {Matrix{{0, 2}, {1, 0}}};
    InvariantSubspaceResult r = invariant_subspace_test(ops, 2);
    EXPECT_EQ(r.algebra_dim, 2u);
    EXPECT_EQ(r.verdict, Verdict::inconclusive);
    EXPECT_STREQ(verdict_name(r.verdict), "inconclusive over the base field");
}

TEST(Burnside, RepeatedSummandUsesCommutant) {
    // natural sl_2 module doubled: semisimple algebra of dimension 4 in M_4
    auto twice = [](const Matrix& m) {
        Matrix out(4, 4);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) out(i, j) = out(i + 2, j + 2) = m(i, j);
        return out;
    };
    std::vector<Matrix> ops = {twice(E(2, 0, 1)), twice(E(2, 1, 0))};
    InvariantSubspaceResult r = invariant_subspace_test(ops, 4);
    EXPECT_EQ(r.algebra_dim, 4u);
    EXPECT_EQ(r.verdict, Verdict::reducible);
    EXPECT_EQ(r.witness.size(), 2u);
    EXPECT_TRUE(detail::is_invariant(r.witness, ops, 4));
}

TEST(Roots, MinimalPolynomialAndRoots) {
    EXPECT_EQ(minimal_polynomial(Matrix::identity(3)), (std::vector<Scalar>{-1, 1}));
    EXPECT_EQ(minimal_polynomial(E(3, 0, 1) + E(3, 1, 2)), (std::vector<Scalar>{0, 0, 0, 1}));
    Matrix d{{Scalar::fraction(1, 2), 0}, {0, -3}};
    auto roots = gaussian_rational_roots(minimal_polynomial(d));
    std::sort(roots.begin(), roots.end(), [](const Scalar& a, const Scalar& b) { return a.re() < b.re(); });
    EXPECT_EQ(roots, (std::vector<Scalar>{-3, Scalar::fraction(1, 2)}));
    // (x - (1+2i)/3)(x + 2)
    Scalar z(Rational(1, 3), Rational(2, 3));
    std::vector<Scalar> poly{Scalar(-2) * z, Scalar(2) - z, 1};
    auto zr = gaussian_rational_roots(poly);
    EXPECT_EQ(zr.size(), 2u);
    EXPECT_NE(std::find(zr.begin(), zr.end(), z), zr.end());
    EXPECT_TRUE(gaussian_rational_roots({-2, 0, 1}).empty());
}

TEST(Burnside, StableUnderBaseChange) {
    Gen g(77);
    for (const auto& f : kExamples) {
        TensorModule m = load(f);
        auto base = invariant_subspace_test(m);
        std::size_t dim = m.dim();
        Matrix q(dim, dim), qi(dim, dim);
        while (true) {
            q = g.matrix(dim, dim);
            auto inv = inverse(q);
            if (inv) {
                qi = *inv;
                break;
            }
        }
        std::vector<Matrix> ops;
        for (const auto& x : m.poly().all_matrices()) ops.push_back(q * x * qi);
        auto moved = invariant_subspace_test(ops, dim);
        EXPECT_EQ(moved.verdict, base.verdict) << f;
        EXPECT_EQ(moved.algebra_dim, base.algebra_dim) << f;
        if (moved.verdict == Verdict::reducible) EXPECT_TRUE(detail::is_invariant(moved.witness, ops, dim));
    }
}
