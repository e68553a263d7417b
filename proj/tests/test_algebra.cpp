// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The comlie Authors

#include "comlie/algebra.hpp"

#include <gtest/gtest.h>

#include <random>

#include "support/oracle.hpp"
#include "support/testing.hpp"

using namespace comlie;

namespace {

/// [a, a] = b, every other product zero.
Algebra square_algebra() {
  Algebra a(gf2(), {"a", "b"});
  a.set_bracket(0, 0, SparseVec{{1, 1}});
  return a;
}

std::vector<Algebra> builders() {
  return {abelian(0), abelian(1), abelian(3), dim2(), heisenberg(1), heisenberg(2),
          zassenhaus_e(2), zassenhaus_e(3), zassenhaus_e(4), zassenhaus_f(2), zassenhaus_f(3),
          zassenhaus_f(4), square_algebra()};
}

}  // namespace

TEST(Algebra, BuildersSatisfyJacobi) {
  for (const Algebra& a : builders()) EXPECT_TRUE(check_axioms(a).valid()) << a.dim();
}

TEST(Algebra, AbelianIsValid) { EXPECT_TRUE(check_axioms(abelian(3)).valid()); }

TEST(Algebra, InjectedJacobiViolation) {
  Algebra a = abelian(2);
  a.set_bracket(0, 1, SparseVec{{0, 1}});
  a.set_bracket(0, 0, SparseVec{{1, 1}});
  const AxiomReport rep = check_axioms(a);
  // Expanding the cyclic sum by hand: on (e1,e1,e1) it is 3 [e2, e1] = e1, while
  // on (e1,e1,e2) it is [e2,e2] + [e1,e1] + [e1,e1] = 0.
  ASSERT_EQ(rep.violations.size(), 1U);
  EXPECT_EQ(rep.violations[0].i, 0U);
  EXPECT_EQ(rep.violations[0].j, 0U);
  EXPECT_EQ(rep.violations[0].k, 0U);
  EXPECT_EQ(rep.violations[0].defect, (Vec{1, 0}));
}

TEST(Algebra, ZassenhausTwoTable) {
  const Algebra w = zassenhaus_e(2);
  ASSERT_EQ(w.dim(), 3U);
  EXPECT_EQ(w.names(), (std::vector<std::string>{"e-1", "e0", "e1"}));
  EXPECT_EQ(w.bracket_dense(0, 1), (Vec{1, 0, 0}));
  EXPECT_EQ(w.bracket_dense(2, 1), (Vec{0, 0, 1}));
  EXPECT_EQ(w.bracket_dense(0, 2), (Vec{0, 1, 0}));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(w.bracket(i, i).empty());
}

TEST(Algebra, ZassenhausStructureConstants) {
  for (unsigned n = 2; n <= 5; ++n) {
    const Algebra w = zassenhaus_e(n);
    const long top = (1L << n) - 3;
    ASSERT_EQ(w.dim(), static_cast<std::size_t>(top + 2));
    for (long i = -1; i <= top; ++i) {
      for (long j = -1; j <= top; ++j) {
        Vec expect(w.dim(), 0);
        if (i + j >= -1 && i + j <= top) expect[i + j + 1] = static_cast<Elem>(binom_mod2(i + j + 2, i + 1));
        EXPECT_EQ(w.bracket_dense(i + 1, j + 1), expect);
      }
    }
  }
}

TEST(Algebra, HeisenbergTwo) {
  const Algebra h = heisenberg(2);
  ASSERT_EQ(h.dim(), 5U);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      const bool pair = (i == 1 && j == 3) || (i == 3 && j == 1) || (i == 2 && j == 4) || (i == 4 && j == 2);
      EXPECT_EQ(h.bracket_dense(i, j), pair ? (Vec{1, 0, 0, 0, 0}) : Vec(5, 0));
    }
  }
}

TEST(Algebra, ZassenhausFOverGF4) {
  const Algebra f = zassenhaus_f(2);
  EXPECT_EQ(f.field(), make_field(2));
  // basis f_1, f_x, f_{x+1}; x + (x+1) = 1
  EXPECT_EQ(f.bracket_dense(1, 2), (Vec{1, 0, 0}));
  EXPECT_EQ(f.dim(), zassenhaus_e(2).dim());
  EXPECT_TRUE(is_lie(f));
}

TEST(Algebra, IsLie) {
  EXPECT_TRUE(is_lie(heisenberg(3)));
  EXPECT_FALSE(is_lie(square_algebra()));
  EXPECT_TRUE(is_lie(abelian(0)));
}

TEST(Algebra, SquareIdeal) {
  EXPECT_EQ(square_ideal(heisenberg(2)).dim(), 0U);
  EXPECT_EQ(square_ideal(zassenhaus_e(2)).dim(), 0U);
  const Subspace s = square_ideal(square_algebra());
  ASSERT_EQ(s.dim(), 1U);
  EXPECT_EQ(s.basis()[0], (Vec{0, 1}));
}

TEST(Algebra, SquareIdealIsCentralAndQuotientIsLie) {
  for (const Algebra& a : builders()) {
    const Subspace s = square_ideal(a);
    for (const Vec& v : s.basis()) {
      for (std::size_t j = 0; j < a.dim(); ++j) {
        const Vec b = a.bracket(v, a.basis_vector(j));
        EXPECT_TRUE(std::all_of(b.begin(), b.end(), [](Elem e) { return e == 0; }));
      }
    }
    EXPECT_TRUE(is_lie(quotient_by(a, s).algebra));
  }
}

TEST(Algebra, Quotients) {
  const Quotient q = quotient_by(square_algebra(), square_ideal(square_algebra()));
  EXPECT_EQ(q.algebra.dim(), 1U);
  EXPECT_TRUE(q.algebra.bracket(0, 0).empty());

  const Algebra h = heisenberg(1);
  const std::vector<Vec> center{{1, 0, 0}};
  const Quotient hq = quotient_by(h, Subspace::span(gf2(), 3, center));
  EXPECT_EQ(hq.algebra.dim(), 2U);
  EXPECT_TRUE(check_axioms(hq.algebra).valid());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_TRUE(hq.algebra.bracket(i, j).empty());

  const Quotient same = quotient_by(dim2(), Subspace(gf2(), 2));
  EXPECT_EQ(same.algebra, dim2());

  const std::vector<Vec> b{{0, 1}};
  EXPECT_ERROR_CODE(quotient_by(dim2(), Subspace::span(gf2(), 2, b)), "not-ideal");
}

TEST(Algebra, Modules) {
  for (const Algebra& a : builders()) {
    const Subspace squares = square_ideal(a);
    for (const Module& m : {trivial_module(a), adjoint_module(a), dual_module(a)}) {
      EXPECT_TRUE(check_module_axioms(a, m.dim(), m.actions()).empty());
      // squares act trivially
      for (const Vec& v : squares.basis()) EXPECT_TRUE(m.action_of(v).is_zero());
    }
  }
  const Module ad = adjoint_module(abelian(3));
  for (const Matrix& x : ad.actions()) EXPECT_TRUE(x.is_zero());

  const Algebra d2 = dim2();
  const Module adj = adjoint_module(d2);
  EXPECT_EQ(adj.act(d2.basis_vector(1), d2.basis_vector(0)), (Vec{1, 0}));
  const Module dual = dual_module(d2);
  // (b . a*)(a) = a*([b, a]) = 1
  EXPECT_EQ(dual.act(d2.basis_vector(1), Vec{1, 0})[0], 1);
}

TEST(Algebra, ModuleAxiomViolation) {
  const Algebra d2 = dim2();
  Matrix one = Matrix::identity(gf2(), 1);
  // b acts by 1 and a by 0: rho([a,b]) = rho(a) = 0 but rho(a)rho(b) + rho(b)rho(a) = 0 too; fine.
  EXPECT_NO_THROW(module_from_actions(d2, {Matrix(gf2(), 1, 1), one}));
  // a acts by 1: rho([a,b]) = 1 but the right side is 0.
  EXPECT_ERROR_CODE(module_from_actions(d2, {one, Matrix(gf2(), 1, 1)}), "module-axiom");
}

TEST(Algebra, Derivations) {
  EXPECT_EQ(derivation_space(abelian(2)).derivations.dim(), 4U);
  EXPECT_EQ(derivation_space(abelian(2)).outer_dim(), 4U);
  EXPECT_EQ(derivation_space(dim2()).derivations.dim(), 2U);
  EXPECT_EQ(derivation_space(heisenberg(1)).inner.dim(), 2U);
  for (const Algebra& a : {dim2(), heisenberg(1), zassenhaus_e(2), abelian(2), square_algebra()}) {
    EXPECT_EQ(derivation_space(a).derivations.dim(), oracle::derivation_dim_enumerated(oracle::table_of(a)));
  }
}

TEST(Algebra, SpanSubalgebra) {
  const Algebra w = zassenhaus_e(3);
  // e_{-1} and e_{1}: [e-1, e1] = e0, [e-1, e0] = e-1, [e0, e1] = e1 (C(3,1) = 3)
  const std::vector<Vec> gens{w.basis_vector(0), w.basis_vector(2)};
  const Subalgebra s = span_subalgebra(w, gens);
  EXPECT_EQ(s.algebra.dim(), 3U);
  EXPECT_TRUE(check_axioms(s.algebra).valid());
  EXPECT_ERROR_CODE(span_subalgebra(w, gens, Closure::require_closed), "not-closed");
}

TEST(Algebra, FRealizationSubalgebras) {
  // Three elements with all partial sums nonzero span a copy of the n = 2 and n = 3 algebras.
  const Algebra f = zassenhaus_f(3);
  const std::vector<Vec> two{f.basis_vector(0), f.basis_vector(1)};
  EXPECT_EQ(span_subalgebra(f, two).algebra.dim(), 3U);
  const std::vector<Vec> three{f.basis_vector(0), f.basis_vector(1), f.basis_vector(3)};
  EXPECT_EQ(span_subalgebra(f, three).algebra.dim(), 7U);
}

TEST(Algebra, ChangeField) {
  const Algebra h = change_field(heisenberg(1), 3);
  EXPECT_EQ(h.field(), make_field(3));
  EXPECT_TRUE(check_axioms(h).valid());
  EXPECT_ERROR_CODE(change_field(zassenhaus_f(2), 3), "unsupported-embedding");
  EXPECT_EQ(change_field(zassenhaus_f(2), 2), zassenhaus_f(2));
}

TEST(Algebra, ExtendByForm) {
  Matrix form(gf2(), 2, 2);
  form(0, 0) = 1;
  const Algebra e = extend_by_form(dim2(), form);
  EXPECT_EQ(e.dim(), 3U);
  EXPECT_EQ(e.bracket_dense(0, 0), (Vec{0, 0, 1}));
  EXPECT_FALSE(is_lie(e));
  form(0, 1) = 1;
  EXPECT_ERROR_CODE(extend_by_form(dim2(), form), "not-symmetric");
}

TEST(Algebra, BuilderRanges) {
  EXPECT_ERROR_CODE(heisenberg(0), "parameter-range");
  EXPECT_ERROR_CODE(zassenhaus_e(1), "parameter-range");
  EXPECT_ERROR_CODE(zassenhaus_f(1), "parameter-range");
}
