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

#include "support.hpp"
#include "torusmod/io.hpp"
#include "torusmod/simple_module.hpp"

using namespace torusmod;
using testing_support::Gen;

namespace {

SimpleSpec load(const std::string& name) {
    return io::simple_spec_from_json(io::read_json_file(std::string(TORUSMOD_DATA_DIR "/") + name));
}

Matrix E(std::size_t n, std::size_t i, std::size_t j) { return Matrix::unit(n, i, j); }

SimpleSpec natural(std::size_t n, std::vector<Scalar> mu, std::vector<Scalar> lambda) {
    SimpleSpec s{n, n, {}, std::move(mu), std::move(lambda)};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b) s.phi[e_name(a, b)] = E(n, a, b);
    for (std::size_t a = 0; a + 1 < n; ++a) s.phi[h_name(a, a + 1)] = E(n, a, a) - E(n, a + 1, a + 1);
    return s;
}

SimpleSpec conjugated(const SimpleSpec& s, const Matrix& q, const Matrix& qi) {
    SimpleSpec out = s;
    for (auto& [_, m] : out.phi) m = q * m * qi;
    return out;
}

ModuleElement shifted(const ModuleElement& v, const MultiIndex& by) {
    ModuleElement out(v.n(), v.dim());
    for (const auto& [s, u] : v.components()) out.add(s + by, u);
    return out;
}

VerifyOptions quick() {
    VerifyOptions opt;
    opt.radius = 2;
    opt.samples = 100;
    return opt;
}

}  // namespace

TEST(Spec, BundledSpecsAreValid) {
    for (const auto& f : {"sl2_natural.json", "sl2_adjoint.json", "sl2_trivial_sum.json", "sl3_natural.json"})
        EXPECT_TRUE(check_spec(load(f)).passed()) << f;
}

TEST(Spec, Violations) {
    SimpleSpec s = natural(2, {0, 0}, {0, 0});
    s.phi.erase("E_2_1");
    Report r1 = check_spec(s);
    EXPECT_EQ(r1.find("simple.spec_shape")->status, Status::fail);

    SimpleSpec h = natural(2, {0, 0}, {0, 0});
    h.phi["H_1_2"] = Matrix::identity(2);
    EXPECT_FALSE(check_spec(h).passed());

    SimpleSpec hom = natural(2, {0, 0}, {0, 0});
    hom.phi["E_1_2"] = Scalar(2) * E(2, 0, 1);
    Report r3 = check_spec(hom);
    EXPECT_EQ(r3.find("simple.phi_homomorphism")->status, Status::fail);
    EXPECT_THROW(build_simple_data(hom), std::invalid_argument);

    SimpleSpec key = natural(2, {0, 0}, {0, 0});
    key.phi["E_1_1"] = Matrix::zero(2);
    EXPECT_EQ(check_spec(key).find("simple.phi_consistent")->status, Status::fail);
}

TEST(PhiOf, Diagonal) {
    SimpleSpec s = natural(3, {0, 0, 0}, {0, 0, 0});
    Matrix d{{2, 0, 0}, {0, -5, 0}, {0, 0, 3}};
    EXPECT_EQ(phi_of(s, d), d);
    EXPECT_EQ(phi_of(s, E(3, 2, 0)), E(3, 2, 0));
    EXPECT_THROW(phi_of(s, Matrix::identity(3)), std::invalid_argument);
}

TEST(Build, ZeroSpecIsTrivial) {
    SimpleSpec s = load("sl2_trivial_sum.json");
    TensorModule m = build_simple(s);
    for (const auto& x : m.poly().all_matrices()) EXPECT_TRUE(x.is_zero());
    ModuleElement v = ModuleElement::homogeneous({1, 0}, {1, 2});
    EXPECT_EQ(act_dab(m, 0, 1, {1, 1}, v), ModuleElement::homogeneous({2, 1}, {1, 2}));
}

TEST(Build, QuadraticCoefficients) {
    // expand r -> sum_{i != a} r_i r_b phi(E_ia) - sum_{i != b} r_i r_a phi(E_ib) + r_a r_b phi(E_aa - E_bb)
    // by hand for N = 3, (a, b) = (1, 2); P^(k) is k! times the monomial coefficient
    Gen g(3);
    SimpleSpec s = natural(3, {0, 0, 0}, {0, 0, 0});
    Matrix q = g.matrix(3, 3);
    auto qi = inverse(q);
    ASSERT_TRUE(qi);
    s = conjugated(s, q, *qi);
    PolyOperator p = to_poly_operator(build_simple_data(s));
    auto phi = [&](const std::string& k) { return s.phi.at(k); };
    EXPECT_EQ(p.coefficient(0, 1, {0, 1, 1}), phi("E_3_1"));
    EXPECT_EQ(p.coefficient(0, 1, {1, 0, 1}), -phi("E_3_2"));
    EXPECT_EQ(p.coefficient(0, 1, {0, 2, 0}), Scalar(2) * phi("E_2_1"));
    EXPECT_EQ(p.coefficient(0, 1, {2, 0, 0}), Scalar(-2) * phi("E_1_2"));
    EXPECT_EQ(p.coefficient(0, 1, {1, 1, 0}), phi("H_1_2"));
    EXPECT_TRUE(p.coefficient(0, 1, {0, 0, 2}).is_zero());
}

TEST(Build, AlternativeQuadraticAssignmentBreaksBracket) {
    // the assignment with r_a and r_b exchanged in the two sums is not a
    // representation: the D-bracket relation fails
    SimpleSpec s = natural(2, {0, 0}, {0, 0});
    PolyOperator p(2, 2);
    Matrix m = s.phi.at("E_2_1") - s.phi.at("E_1_2") + s.phi.at("H_1_2");
    p.set_antisymmetric(0, 1, {1, 1}, m);
    std::mt19937 rng(1);
    EXPECT_EQ(check_D_bracket(p, sample_d_pairs(2, 3, 50, rng)).status, Status::fail);
    EXPECT_EQ(check_D_bracket(to_poly_operator(build_simple_data(s)), sample_d_pairs(2, 3, 50, rng)).status,
              Status::pass);
}

TEST(Build, AlwaysValidates) {
    Gen g(17);
    std::vector<SimpleSpec> specs = {load("sl2_natural.json"), load("sl2_adjoint.json"), load("sl2_trivial_sum.json"),
                                     load("sl3_natural.json")};
    for (int i = 0; i < 6; ++i) {
        SimpleSpec s = specs[i % specs.size()];
        for (auto& x : s.mu) x = g.gaussian();
        Matrix q = g.matrix(s.dim, s.dim);
        auto qi = inverse(q);
        if (!qi) continue;
        s = conjugated(s, q, *qi);
        Report rep = validate(build_simple_data(s));
        EXPECT_TRUE(rep.passed()) << rep.to_text();
    }
}

TEST(Build, DirectFormulaMatchesAssembly) {
    Gen g(23);
    for (const auto& f : {"sl2_natural.json", "sl2_adjoint.json", "sl3_natural.json"}) {
        SimpleSpec s = load(f);
        TensorModule m = build_simple(s);
        for (int i = 0; i < 60; ++i) {
            MultiIndex r = g.point(s.n, 4);
            std::size_t a = g.index(s.n), b = g.index(s.n);
            if (a == b) continue;
            EXPECT_EQ(m.D(a, b, r), simple_D(s, a, b, r)) << f << " " << r;
        }
    }
}

TEST(Build, CenterActsByZeroForN2) {
    for (const auto& f : {"sl2_natural.json", "sl2_adjoint.json", "sl2_trivial_sum.json"}) {
        TensorModule m = build_simple(load(f));
        EXPECT_TRUE(m.poly().coefficient(0, 1, {0, 0}).is_zero()) << f;
    }
}

TEST(Build, MuShiftCovariance) {
    Gen g(31);
    for (const auto& f : {"sl2_natural.json", "sl3_natural.json"}) {
        SimpleSpec s = load(f);
        MultiIndex shift = g.point(s.n, 2);
        SimpleSpec t = s;
        for (std::size_t a = 0; a < s.n; ++a) {
            t.mu[a] += Scalar(shift[a]);
            t.lambda[a] += Scalar(shift[a]);
        }
        TensorModule ms = build_simple(s), mt = build_simple(t);
        for (const auto& sp : box_points(s.n, -1, 1))
            for (std::size_t i = 0; i < s.dim; ++i) {
                ModuleElement v = ModuleElement::basis(sp, s.dim, i);
                ModuleElement vs = shifted(v, shift);
                for (std::size_t a = 0; a < s.n; ++a) EXPECT_EQ(act_cartan(mt, a, v), shifted(act_cartan(ms, a, vs), -shift));
                for (int k = 0; k < 3; ++k) {
                    MultiIndex r = g.point(s.n, 2);
                    std::size_t a = g.index(s.n), b = g.index(s.n);
                    if (a == b) continue;
                    EXPECT_EQ(act_dab(mt, a, b, r, v), shifted(act_dab(ms, a, b, r, vs), -shift)) << f << " " << r;
                }
            }
    }
}

TEST(SimpleModule, Sl2Natural) {
    Report rep = check_simple_theorem(load("sl2_natural.json"), quick());
    EXPECT_TRUE(rep.passed()) << rep.to_text();
    EXPECT_EQ(rep.find("simple.irreducibility_matches_phi")->status, Status::pass);
    auto res = invariant_subspace_test(build_simple(load("sl2_natural.json")));
    EXPECT_EQ(res.verdict, Verdict::irreducible);
    EXPECT_EQ(res.algebra_dim, 4u);
}

TEST(SimpleModule, Sl2Adjoint) {
    Report rep = check_simple_theorem(load("sl2_adjoint.json"), quick());
    EXPECT_TRUE(rep.passed()) << rep.to_text();
    auto res = invariant_subspace_test(build_simple(load("sl2_adjoint.json")));
    EXPECT_EQ(res.verdict, Verdict::irreducible);
    EXPECT_EQ(res.algebra_dim, 9u);
}

TEST(SimpleModule, TrivialSumIsReducible) {
    SimpleSpec s = load("sl2_trivial_sum.json");
    Report rep = check_simple_theorem(s, quick());
    EXPECT_TRUE(rep.passed()) << rep.to_text();
    TensorModule m = build_simple(s);
    auto res = invariant_subspace_test(m);
    EXPECT_EQ(res.verdict, Verdict::reducible);
    ASSERT_EQ(res.witness.size(), 1u);
    EXPECT_TRUE(detail::is_invariant(res.witness, m.poly().all_matrices(), 2));
}

TEST(SimpleModule, Sl3Natural) {
    VerifyOptions opt = quick();
    opt.radius = 1;
    Report rep = check_simple_theorem(load("sl3_natural.json"), opt);
    EXPECT_TRUE(rep.passed()) << rep.to_text();
    EXPECT_EQ(invariant_subspace_test(build_simple(load("sl3_natural.json"))).algebra_dim, 9u);
}
