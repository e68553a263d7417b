// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The comlie Authors

#include "comlie/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

#include "support/testing.hpp"

using namespace comlie;
using testing_support::random_matrix;
using testing_support::random_vec;

TEST(Linalg, IdentityRank) { EXPECT_EQ(rank(Matrix::identity(gf2(), 5)), 5U); }

TEST(Linalg, KernelOfAllOnesRow) {
  Matrix a(gf2(), 1, 2);
  a(0, 0) = a(0, 1) = 1;
  const Subspace k = kernel_basis(a);
  ASSERT_EQ(k.dim(), 1U);
  EXPECT_EQ(k.basis()[0], (Vec{1, 1}));
}

TEST(Linalg, QuotientByLine) {
  const Subspace z = Subspace::whole(gf2(), 3);
  const std::vector<Vec> line{{1, 0, 0}};
  const Subspace b = Subspace::span(gf2(), 3, line);
  const auto q = quotient_basis(z, b);
  ASSERT_EQ(q.size(), 2U);
  EXPECT_EQ(q[0], (Vec{0, 1, 0}));
  EXPECT_EQ(q[1], (Vec{0, 0, 1}));
}

TEST(Linalg, QuotientErrors) {
  const std::vector<Vec> v1{{1, 0, 0}}, v2{{0, 1, 0}};
  const Subspace a = Subspace::span(gf2(), 3, v1);
  const Subspace b = Subspace::span(gf2(), 3, v2);
  EXPECT_ERROR_CODE(quotient_basis(a, b), "containment");
  EXPECT_ERROR_CODE(quotient_basis(a, Subspace(gf2(), 4)), "dimension-mismatch");
}

TEST(Linalg, EntryCap) {
  const std::size_t old = entry_cap();
  set_entry_cap(100);
  EXPECT_ERROR_CODE(Matrix(gf2(), 11, 10), "cap-exceeded");
  EXPECT_NO_THROW(Matrix(gf2(), 10, 10));
  set_entry_cap(old);
}

TEST(Linalg, RankNullityAndKernelRandom) {
  std::mt19937_64 rng(7);
  for (unsigned k : {1U, 2U, 3U, 8U}) {
    const Field f = make_field(k);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
      Matrix a = random_matrix(rng, f, r, c);
      if (trial % 3 == 0 && r > 1) {
        // force dependent rows
        for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = f.add(a(0, j), f.mul(3 % f.order(), a(0, j)));
      }
      const Subspace ker = kernel_basis(a);
      EXPECT_EQ(rank(a) + ker.dim(), c);
      for (const Vec& v : ker.basis()) {
        const Vec av = a.apply(v);
        EXPECT_TRUE(std::all_of(av.begin(), av.end(), [](Elem e) { return e == 0; }));
      }
      EXPECT_EQ(image_basis(a).dim(), rank(a));
      EXPECT_EQ(rank(a.transpose()), rank(a));
    }
  }
}

TEST(Linalg, SubspaceIsCanonicalRref) {
  std::mt19937_64 rng(11);
  const Field f = make_field(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vec> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(random_vec(rng, f, 7));
    const Subspace s = Subspace::span(f, 7, gens);
    for (std::size_t i = 0; i < s.dim(); ++i) {
      const Vec& row = s.basis()[i];
      EXPECT_EQ(row[s.pivots()[i]], 1);
      for (std::size_t j = 0; j < s.pivots()[i]; ++j) EXPECT_EQ(row[j], 0);
      for (std::size_t o = 0; o < s.dim(); ++o) {
        if (o != i) EXPECT_EQ(s.basis()[o][s.pivots()[i]], 0);
      }
      if (i > 0) EXPECT_LT(s.pivots()[i - 1], s.pivots()[i]);
    }
    // Same span from a shuffled, rescaled generating set gives an equal subspace.
    std::vector<Vec> other(gens.rbegin(), gens.rend());
    for (Vec& v : other) {
      for (Elem& e : v) e = f.mul(e, 5);
    }
    EXPECT_EQ(Subspace::span(f, 7, other), s);
    for (const Vec& g : gens) EXPECT_TRUE(s.contains(g));
    const auto c = s.coordinates(gens[0]);
    ASSERT_TRUE(c.has_value());
    Vec back(7, 0);
    for (std::size_t i = 0; i < s.dim(); ++i) {
      for (std::size_t j = 0; j < 7; ++j) back[j] ^= f.mul((*c)[i], s.basis()[i][j]);
    }
    EXPECT_EQ(back, gens[0]);
  }
}

TEST(Linalg, QuotientBasisProperty) {
  std::mt19937_64 rng(5);
  const Field f = make_field(2);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Vec> zg, bg;
    for (int i = 0; i < 5; ++i) zg.push_back(random_vec(rng, f, 8));
    for (int i = 0; i < 2; ++i) {
      // random combinations of Z generators
      Vec v(8, 0);
      for (const Vec& z : zg) {
        const Elem c = static_cast<Elem>(rng() % 4);
        for (std::size_t j = 0; j < 8; ++j) v[j] ^= f.mul(c, z[j]);
      }
      bg.push_back(v);
    }
    const Subspace z = Subspace::span(f, 8, zg);
    const Subspace b = Subspace::span(f, 8, bg);
    const auto q = quotient_basis(z, b);
    EXPECT_EQ(q.size(), z.dim() - b.dim());
    std::vector<Vec> all = b.basis();
    all.insert(all.end(), q.begin(), q.end());
    const Subspace sum = Subspace::span(f, 8, all);
    EXPECT_EQ(sum, z);
    EXPECT_EQ(sum.dim(), all.size());  // independent modulo B
  }
}

TEST(Linalg, SolveNeverLies) {
  std::mt19937_64 rng(3);
  const Field f = make_field(4);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix a = random_matrix(rng, f, 1 + rng() % 6, 1 + rng() % 6);
    const Vec b = random_vec(rng, f, a.rows());
    const auto x = solve(a, b);
    if (x) {
      EXPECT_EQ(a.apply(*x), b);
    } else {
      // inconsistent: b is outside the column space
      EXPECT_FALSE(image_basis(a).contains(b));
    }
    const Vec x0 = random_vec(rng, f, a.cols());
    const auto y = solve(a, a.apply(x0));
    ASSERT_TRUE(y.has_value());
    EXPECT_EQ(a.apply(*y), a.apply(x0));
  }
}

TEST(Linalg, PackedAgreesWithGeneric) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t r = 1 + rng() % 64, c = 1 + rng() % 64;
    Matrix a(gf2(), r, c);
    const unsigned density = 1 + rng() % 4;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) a(i, j) = rng() % (density + 1) == 0 ? 1 : 0;
    }
    const Echelon p = row_reduce(a, Elimination::packed);
    const Echelon g = row_reduce(a, Elimination::generic);
    ASSERT_EQ(p.pivots, g.pivots);
    ASSERT_EQ(p.rows, g.rows);
    ASSERT_EQ(kernel_basis(a, Elimination::packed), kernel_basis(a, Elimination::generic));
  }
}

TEST(Linalg, BitMatrixRoundTrip) {
  std::mt19937_64 rng(1);
  const Matrix a = random_matrix(rng, gf2(), 9, 130);
  EXPECT_EQ(BitMatrix(a).to_matrix(), a);
  EXPECT_ERROR_CODE(BitMatrix(Matrix(make_field(2), 1, 1)), "field-mismatch");
}

TEST(Linalg, SparseMatchesDense) {
  std::mt19937_64 rng(9);
  const Field f = make_field(3);
  const Matrix a = random_matrix(rng, f, 6, 5);
  const Matrix b = random_matrix(rng, f, 5, 4);
  const SparseMatrix sa = SparseMatrix::from_dense(a);
  EXPECT_EQ(sa.to_dense(), a);
  EXPECT_EQ(multiply(sa, SparseMatrix::from_dense(b)).to_dense(), a * b);
  const Vec x = random_vec(rng, f, 5);
  EXPECT_EQ(sa.apply(x), a.apply(x));
}

TEST(Linalg, SparseRowsAreCanonical) {
  SparseMatrix s(gf2(), 1, 4);
  s.append_row({{3, 1}, {1, 1}, {3, 1}, {0, 0}});
  ASSERT_EQ(s.row(0).size(), 1U);
  EXPECT_EQ(s.row(0)[0].col, 1U);
}

TEST(Linalg, DumpIsHexRows) {
  Matrix a(make_field(2), 2, 2);
  a(0, 1) = 3;
  a(1, 0) = 2;
  EXPECT_EQ(a.dump(), "0 3\n2 0\n");
}
