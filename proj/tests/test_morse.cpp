// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The comlie Authors

#include "comlie/morse.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "comlie/cohomology.hpp"
#include "support/complexes.hpp"
#include "support/testing.hpp"

using namespace comlie;

namespace {

std::vector<Matrix> dense_slices(const ComplexGraph& g) {
  std::vector<Matrix> out;
  for (std::size_t n = 0; n < g.top(); ++n) out.push_back(g.differential(n).to_dense());
  return out;
}

std::vector<std::size_t> direct_dims(const ComplexGraph& g) {
  const auto slices = dense_slices(g);
  return complex_cohomology_dims(slices);
}

std::size_t sym_index(const Module& m, std::size_t n, std::vector<Arg> args) {
  return *make_space(m, n, Flavor::symmetric)->tuple_index(args);
}

std::vector<Arg> chi_args(std::size_t p, std::size_t q) {
  std::vector<Arg> args(p, 0);
  args.insert(args.end(), q, 1);
  return args;
}

Matching dim2_matching(const Module& k, std::size_t top) {
  Matching m;
  for (std::size_t p = 1; p < top; p += 2)
    for (std::size_t q = 0; p + q < top; q += 2)
      m.push_back({p + q, sym_index(k, p + q, chi_args(p, q)), sym_index(k, p + q + 1, chi_args(p, q + 1))});
  return m;
}

}  // namespace

TEST(Morse, ZeroComplexIsEdgeless) {
  const std::vector<Matrix> zero{Matrix(gf2(), 3, 2), Matrix(gf2(), 1, 3)};
  const ComplexGraph g = ComplexGraph::from_dense(zero);
  EXPECT_EQ(g.edge_count(), 0U);
  EXPECT_EQ(g.label(1, 2), "v1.2");
}

TEST(Morse, DimTwoEdges) {
  const Module k = trivial_module(dim2());
  const ComplexGraph g = build_graph(k, 3);
  ASSERT_EQ(g.top(), 4U);
  std::size_t count = 0;
  for (std::size_t n = 0; n < g.top(); ++n) {
    for (std::size_t p = 0; p <= n; ++p) {
      const std::size_t q = n - p;
      const Elem w = g.weight(n, sym_index(k, n, chi_args(p, q)), sym_index(k, n + 1, chi_args(p, q + 1)));
      EXPECT_EQ(w, (p % 2 == 1 && q % 2 == 0) ? 1 : 0);
      count += w;
    }
  }
  EXPECT_EQ(g.edge_count(), count);
}

TEST(Morse, HeisenbergLowEdge) {
  const Module k = trivial_module(heisenberg(1));
  const ComplexGraph g = build_graph(k, 2);
  const std::size_t a = sym_index(k, 1, {0});
  const std::size_t bc = sym_index(k, 2, {1, 2});
  ASSERT_EQ(g.differential(1).nnz(), 1U);
  EXPECT_EQ(g.weight(1, a, bc), 1);
  EXPECT_EQ(g.label(2, bc), "(b1,c1)");
}

TEST(Morse, GraphErrors) {
  const std::vector<Matrix> bad_shape{Matrix(gf2(), 2, 1), Matrix(gf2(), 1, 3)};
  EXPECT_ERROR_CODE(ComplexGraph::from_dense(bad_shape), "dimension-mismatch");
  const std::vector<Matrix> not_complex{Matrix::identity(gf2(), 1), Matrix::identity(gf2(), 1)};
  EXPECT_ERROR_CODE(ComplexGraph::from_dense(not_complex), "not-a-complex");
}

TEST(Morse, ValidationViolations) {
  Matrix ones(gf2(), 2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) ones(i, j) = 1;
  const std::vector<Matrix> slices{ones};
  const ComplexGraph g = ComplexGraph::from_dense(slices);

  EXPECT_TRUE(validate_matching(g, {}).valid());

  const MatchingReport shared = validate_matching(g, {{0, 0, 0}, {0, 1, 0}});
  EXPECT_FALSE(shared.valid());
  ASSERT_EQ(shared.shared_vertices.size(), 1U);
  EXPECT_EQ(shared.shared_vertices[0], (Vertex{1, 0}));

  const ComplexGraph sparse = ComplexGraph::from_dense(std::vector<Matrix>{Matrix::identity(gf2(), 2)});
  const MatchingReport missing = validate_matching(sparse, {{0, 0, 1}});
  ASSERT_EQ(missing.missing_edges.size(), 1U);
  EXPECT_EQ(missing.missing_edges[0], (MatchedEdge{0, 0, 1}));

  // u0 -> v1 -> u1 -> v0 -> u0 once u0-v0 and u1-v1 are reversed
  const MatchingReport cyc = validate_matching(g, {{0, 0, 0}, {0, 1, 1}});
  EXPECT_TRUE(cyc.missing_edges.empty());
  EXPECT_TRUE(cyc.shared_vertices.empty());
  ASSERT_EQ(cyc.cycle.size(), 5U);
  EXPECT_EQ(cyc.cycle.front(), cyc.cycle.back());
  EXPECT_TRUE(cyc.touches_boundary);
  EXPECT_ERROR_CODE(morse_complex(g, {{0, 0, 0}, {0, 1, 1}}), "invalid-matching");

  EXPECT_TRUE(validate_matching(g, {{0, 0, 0}}).valid());
}

TEST(Morse, EmptyMatchingReproducesComplex) {
  const ComplexGraph g = build_graph(trivial_module(heisenberg(1)), 4);
  const MorseComplex mc = morse_complex(g, {});
  for (std::size_t n = 0; n < g.top(); ++n) {
    EXPECT_EQ(mc.differentials[n], g.differential(n).to_dense());
    EXPECT_EQ(mc.critical[n].size(), g.vertex_count(n));
  }
  EXPECT_FALSE(mc.boundary_affected);
  EXPECT_EQ(mc.cohomology_dims(), direct_dims(g));
}

TEST(Morse, DimTwoMatching) {
  const Module k = trivial_module(dim2());
  const ComplexGraph g = build_graph(k, 6);
  const std::size_t top = g.top();
  const Matching m = dim2_matching(k, top);
  ASSERT_TRUE(validate_matching(g, m).valid());
  const MorseComplex mc = morse_complex(g, m);
  for (std::size_t n = 0; n < top; ++n) {
    std::vector<std::size_t> expect;
    for (std::size_t p = 0; p <= n; p += 2) expect.push_back(sym_index(k, n, chi_args(p, n - p)));
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(mc.critical[n], expect);
    EXPECT_TRUE(mc.differentials[n].is_zero());
  }
  const auto dims = mc.cohomology_dims();
  ASSERT_EQ(dims.size(), top);
  for (std::size_t n = 0; n < top; ++n) EXPECT_EQ(dims[n], n / 2 + 1);
}

TEST(Morse, HeisenbergClosedFormSmall) {
  using M = HeisenbergMonomial;
  const auto [c0, c1] = heisenberg_closed_form(1, 2);
  EXPECT_EQ(c0, (std::vector<M>{M{0, {0}, {2}}, M{0, {2}, {0}}}));
  EXPECT_EQ(c1, (std::vector<M>{M{1, {0}, {1}}, M{1, {1}, {0}}}));
  const auto [z0, z1] = heisenberg_closed_form(1, 0);
  EXPECT_EQ(z0, (std::vector<M>{M{0, {0}, {0}}}));
  EXPECT_TRUE(z1.empty());
  const auto [t0, t1] = heisenberg_closed_form(1, 3);
  EXPECT_EQ(t0.size() + t1.size(), 6U);
}

TEST(Morse, HeisenbergMonomialRoundTrip) {
  const HeisenbergMonomial m{2, {1, 0}, {0, 3}};
  EXPECT_EQ(m.degree(), 6U);
  const auto args = heisenberg_args(m);
  EXPECT_EQ(args, (std::vector<Arg>{0, 0, 1, 4, 4, 4}));
  EXPECT_EQ(heisenberg_monomial(args, 2), m);
}

TEST(Morse, HeisenbergMatchingEdges) {
  const Module k = trivial_module(heisenberg(1));
  const ComplexGraph g = build_graph(k, 4);
  const Matching m = heisenberg_matching(g, 1);
  const auto has = [&](MatchedEdge e) { return std::find(m.begin(), m.end(), e) != m.end(); };
  EXPECT_TRUE(has({1, sym_index(k, 1, {0}), sym_index(k, 2, {1, 2})}));
  const std::size_t abc = sym_index(k, 3, {0, 1, 2});
  EXPECT_TRUE(has({2, sym_index(k, 2, {0, 0}), abc}));
  for (const MatchedEdge& e : m) {
    EXPECT_FALSE(e.degree == 3 && e.lower == abc);
    // alpha = 0 is never a tail
    EXPECT_NE(heisenberg_monomial(make_space(k, e.degree, Flavor::symmetric)->tuple(e.lower), 1).alpha, 0U);
  }
}

TEST(Morse, HeisenbergReduction) {
  for (std::size_t l : {1U, 2U}) {
    const Module k = trivial_module(heisenberg(l));
    const ComplexGraph g = build_graph(k, 3);
    const std::size_t top = g.top();
    const Matching m = heisenberg_matching(g, l);
    ASSERT_TRUE(validate_matching(g, m).valid());
    const MorseComplex mc = morse_complex(g, m);
    const auto dims = mc.cohomology_dims();
    for (std::size_t n = 0; n < top; ++n) {
      EXPECT_TRUE(mc.differentials[n].is_zero());
      const auto [c0, c1] = heisenberg_closed_form(l, n);
      std::vector<std::size_t> expect;
      for (const auto* fam : {&c0, &c1})
        for (const auto& mono : *fam) expect.push_back(sym_index(k, n, heisenberg_args(mono)));
      std::sort(expect.begin(), expect.end());
      EXPECT_EQ(mc.critical[n], expect) << l << " " << n;
      EXPECT_EQ(dims[n], cohomology(k, n).dim_h());
      EXPECT_EQ(expect.size(), cohomology(k, n).dim_h());
      // closed-form cochains are cocycles: their columns of d_n vanish
      const Matrix dn = g.differential(n).to_dense();
      for (std::size_t c : expect)
        for (std::size_t r = 0; r < dn.rows(); ++r) EXPECT_EQ(dn(r, c), 0);
    }
    if (l == 1) {
      const std::vector<std::size_t> expect{1, 2, 4, 6};
      EXPECT_EQ(dims, expect);
    }
  }
}

TEST(Morse, RandomComplexes) {
  std::mt19937_64 rng(41);
  for (unsigned k : {1U, 2U}) {
    const Field f = make_field(k);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t top = 2 + rng() % 3;
      const ComplexGraph g = ComplexGraph::from_dense(testing_support::random_complex(rng, f, top));
      const Matching m = testing_support::greedy_matching(g);
      ASSERT_TRUE(validate_matching(g, m).valid());
      const MorseComplex mc = morse_complex(g, m);
      for (std::size_t n = 0; n + 1 < mc.top(); ++n)
        EXPECT_TRUE((mc.differentials[n + 1] * mc.differentials[n]).is_zero());
      EXPECT_EQ(mc.cohomology_dims(), direct_dims(g)) << k << " " << trial;
      std::size_t matched = 0;
      for (std::size_t n = 0; n <= top; ++n) matched += g.vertex_count(n) - mc.critical[n].size();
      EXPECT_EQ(matched, 2 * m.size());
    }
  }
}
