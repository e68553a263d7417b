// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The comlie Authors

#include "comlie/cochain.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "support/oracle.hpp"
#include "support/testing.hpp"

using namespace comlie;

namespace {

std::vector<Module> modules_of(const Algebra& a) {
  return {trivial_module(a), adjoint_module(a), dual_module(a)};
}

/// chi_{p,q} on dim2(): 1 on (a^p, b^q), zero elsewhere.
Cochain chi(const SpacePtr& s, std::size_t p, std::size_t q) {
  std::vector<Arg> args(p, 0);
  args.insert(args.end(), q, 1);
  return Cochain::basis(s, *s->tuple_index(args));
}

Cochain random_cochain(std::mt19937_64& rng, const SpacePtr& s) {
  return Cochain(s, testing_support::random_vec(rng, s->field(), s->dim()));
}

}  // namespace

TEST(Cochain, SymDim) {
  EXPECT_EQ(sym_dim(2, 3, 1), 4U);
  EXPECT_EQ(sym_dim(3, 2, 1), 6U);
  EXPECT_EQ(sym_dim(5, 0, 7), 7U);
  EXPECT_EQ(binomial(64, 32), 1832624140942590534ULL);
  EXPECT_ERROR_CODE(binomial(200, 100), "cap-exceeded");
}

TEST(Cochain, FlavorNames) {
  EXPECT_EQ(parse_flavor("comm"), Flavor::symmetric);
  EXPECT_EQ(parse_flavor("alternating"), Flavor::alternating);
  EXPECT_EQ(parse_flavor("leibniz"), Flavor::tensor);
  EXPECT_EQ(to_string(Flavor::tensor), "leibniz");
  EXPECT_ERROR_CODE(parse_flavor("lie"), "unknown-flavor");
}

TEST(Cochain, SpaceDimensions) {
  for (std::size_t d = 1; d <= 5; ++d) {
    const Module m = adjoint_module(abelian(d));
    for (std::size_t n = 0; n <= 4; ++n) {
      EXPECT_EQ(make_space(m, n, Flavor::symmetric)->dim(), binomial(d + n - 1, n) * d);
      EXPECT_EQ(make_space(m, n, Flavor::alternating)->dim(), binomial(d, n) * d);
      std::size_t p = 1;
      for (std::size_t i = 0; i < n; ++i) p *= d;
      EXPECT_EQ(make_space(m, n, Flavor::tensor)->dim(), p * d);
    }
  }
}

TEST(Cochain, RankIsABijection) {
  for (Flavor fl : {Flavor::symmetric, Flavor::alternating, Flavor::tensor}) {
    for (std::size_t d = 1; d <= 5; ++d) {
      for (std::size_t n = 0; n <= 4; ++n) {
        const SpacePtr s = make_space(trivial_module(abelian(d)), n, fl);
        std::set<std::vector<Arg>> seen;
        for (std::size_t t = 0; t < s->tuple_count(); ++t) {
          const auto tup = s->tuple(t);
          std::vector<Arg> v(tup.begin(), tup.end());
          if (fl == Flavor::symmetric) EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
          if (fl == Flavor::alternating) EXPECT_TRUE(std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end());
          EXPECT_EQ(s->rank_canonical(v), t);
          EXPECT_TRUE(seen.insert(v).second);
          if (fl != Flavor::tensor) {
            std::reverse(v.begin(), v.end());
            EXPECT_EQ(s->tuple_index(v), t);
          }
        }
      }
    }
  }
  const SpacePtr alt = make_space(trivial_module(abelian(3)), 2, Flavor::alternating);
  const std::vector<Arg> rep{1, 1};
  EXPECT_FALSE(alt->tuple_index(rep).has_value());
}

TEST(Cochain, Labels) {
  const SpacePtr s = make_space(trivial_module(dim2()), 3, Flavor::symmetric);
  EXPECT_EQ(s->label(*s->tuple_index(std::vector<Arg>{1, 0, 1})), "(a,b,b)");
  const SpacePtr t = make_space(adjoint_module(dim2()), 1, Flavor::symmetric);
  EXPECT_EQ(t->label(t->index(1, 0)), "(b):0");
}

TEST(Cochain, DimTwoDifferential) {
  const Module k = trivial_module(dim2());
  for (std::size_t n = 0; n <= 6; ++n) {
    const SpacePtr s = make_space(k, n, Flavor::symmetric);
    const Differential d(s);
    for (std::size_t p = 0; p <= n; ++p) {
      const std::size_t q = n - p;
      Cochain expect(d.target());
      if ((p * (q + 1)) % 2 == 1) expect = chi(d.target(), p, q + 1);
      EXPECT_EQ(d.apply(chi(s, p, q)), expect) << p << "," << q;
    }
  }
}

TEST(Cochain, AbelianDifferentialVanishes) {
  for (std::size_t d = 1; d <= 4; ++d)
    for (std::size_t n = 0; n <= 3; ++n)
      EXPECT_TRUE(differential_matrix(trivial_module(abelian(d)), n, Flavor::symmetric).is_zero());
}

TEST(Cochain, HeisenbergDegreeTwoRow) {
  const Module k = trivial_module(heisenberg(1));
  const Matrix d2 = differential_matrix(k, 2, Flavor::symmetric);
  const SpacePtr src = make_space(k, 2, Flavor::symmetric);
  const SpacePtr dst = make_space(k, 3, Flavor::symmetric);
  const std::size_t abc = *dst->tuple_index(std::vector<Arg>{0, 1, 2});
  const std::size_t aa = *src->tuple_index(std::vector<Arg>{0, 0});
  for (std::size_t r = 0; r < d2.rows(); ++r) {
    for (std::size_t c = 0; c < d2.cols(); ++c) EXPECT_EQ(d2(r, c), (r == abc && c == aa) ? 1 : 0);
  }
}

TEST(Cochain, DifferentialMatchesOracle) {
  for (const Algebra& a : {dim2(), heisenberg(1), heisenberg(2), zassenhaus_e(2), zassenhaus_e(3)}) {
    const oracle::Table t = oracle::table_of(a);
    for (int n = 0; n <= 3; ++n) {
      const auto ref = oracle::sym_coboundary(t, n);
      const auto src = oracle::multisets(t.d, n);
      const auto dst = oracle::multisets(t.d, n + 1);
      const Module k = trivial_module(a);
      const Matrix m = differential_matrix(k, n, Flavor::symmetric);
      const SpacePtr s = make_space(k, n, Flavor::symmetric);
      const SpacePtr s1 = make_space(k, n + 1, Flavor::symmetric);
      for (std::size_t r = 0; r < dst.size(); ++r) {
        const std::vector<Arg> rt(dst[r].begin(), dst[r].end());
        for (std::size_t c = 0; c < src.size(); ++c) {
          const std::vector<Arg> ct(src[c].begin(), src[c].end());
          ASSERT_EQ(m(*s1->tuple_index(rt), *s->tuple_index(ct)), ref[r][c]);
        }
      }
    }
  }
}

TEST(Cochain, SquareIsZero) {
  for (const Algebra& a : {abelian(2), dim2(), heisenberg(1), zassenhaus_e(2)}) {
    for (const Module& m : modules_of(a)) {
      for (Flavor fl : {Flavor::symmetric, Flavor::alternating, Flavor::tensor}) {
        for (std::size_t n = 0; n <= 3; ++n) {
          EXPECT_TRUE(square_is_zero(m, n, fl));
          const Matrix dd = differential_matrix(m, n + 1, fl) * differential_matrix(m, n, fl);
          EXPECT_TRUE(dd.is_zero()) << a.dim() << " " << to_string(fl) << " " << n;
        }
      }
    }
  }
}

TEST(Cochain, SquareIsZeroOverGF4) {
  const Algebra f = zassenhaus_f(2);
  for (const Module& m : modules_of(f)) {
    for (std::size_t n = 0; n <= 3; ++n) EXPECT_TRUE(square_is_zero(m, n, Flavor::symmetric));
  }
}

TEST(Cochain, SquareDetectsJacobiFailure) {
  Algebra a = abelian(2);
  a.set_bracket(0, 1, SparseVec{{0, 1}});
  a.set_bracket(0, 0, SparseVec{{1, 1}});
  bool any = false;
  for (std::size_t n = 0; n <= 3; ++n) any = any || !square_is_zero(trivial_module(a), n, Flavor::symmetric);
  EXPECT_TRUE(any);
}

TEST(Cochain, CartanIdentities) {
  for (const Algebra& a : {dim2(), heisenberg(1)}) {
    for (const Module& m : {trivial_module(a), adjoint_module(a)}) {
      for (std::size_t n = 0; n <= 3; ++n) {
        const SpacePtr s = make_space(m, n, Flavor::symmetric);
        const Differential d(s);
        const Differential d_lower = n > 0 ? Differential(make_space(m, n - 1, Flavor::symmetric)) : d;
        for (std::size_t b = 0; b < s->dim(); ++b) {
          const Cochain phi = Cochain::basis(s, b);
          const Cochain dphi = d.apply(phi);
          for (std::size_t i = 0; i < a.dim(); ++i) {
            const Vec x = a.basis_vector(i);
            const Cochain th = lie_derivative(x, phi);
            EXPECT_EQ(lie_derivative(x, dphi), Differential(th.space_ptr()).apply(th));
            Cochain lhs = contract(x, dphi);
            if (n > 0) lhs += d_lower.apply(contract(x, phi));
            EXPECT_EQ(lhs, th);
            if (n == 0) continue;
            for (std::size_t j = 0; j < a.dim(); ++j) {
              const Vec y = a.basis_vector(j);
              const Cochain left = lie_derivative(x, contract(y, phi)) + contract(y, th);
              EXPECT_EQ(left, contract(a.bracket(x, y), phi));
            }
          }
        }
      }
    }
  }
}

TEST(Cochain, ChainMapSquares) {
  for (const Algebra& a : {abelian(2), dim2(), heisenberg(1), heisenberg(2), zassenhaus_e(2), zassenhaus_e(3)}) {
    for (const Module& m : {trivial_module(a), adjoint_module(a)}) {
      for (std::size_t n = 0; n <= (a.dim() <= 3 ? 3U : a.dim() <= 5 ? 2U : 1U); ++n) {
        const SpacePtr alt = make_space(m, n, Flavor::alternating), alt1 = make_space(m, n + 1, Flavor::alternating);
        const SpacePtr sym = make_space(m, n, Flavor::symmetric), sym1 = make_space(m, n + 1, Flavor::symmetric);
        const SpacePtr ten = make_space(m, n, Flavor::tensor), ten1 = make_space(m, n + 1, Flavor::tensor);
        const Matrix ds = Differential(sym).dense();
        if (is_lie(a)) {
          EXPECT_EQ(ds * inclusion_matrix(*alt, *sym),
                    inclusion_matrix(*alt1, *sym1) * Differential(alt).dense());
        }
        EXPECT_EQ(Differential(ten).dense() * inclusion_matrix(*sym, *ten), inclusion_matrix(*sym1, *ten1) * ds);
      }
    }
  }
}

TEST(Cochain, LieDifferentialPreservesAlternating) {
  std::mt19937_64 rng(7);
  for (const Algebra& a : {heisenberg(1), heisenberg(2), zassenhaus_e(2), zassenhaus_e(3)}) {
    ASSERT_TRUE(is_lie(a));
    for (std::size_t n = 0; n <= 3; ++n) {
      const SpacePtr alt = make_space(trivial_module(a), n, Flavor::alternating);
      for (int trial = 0; trial < 20; ++trial) {
        const Cochain image = Differential(make_space(trivial_module(a), n, Flavor::symmetric))
                                  .apply(include(random_cochain(rng, alt), Flavor::symmetric));
        for (std::size_t t = 0; t < image.space().tuple_count(); ++t) {
          const auto tup = image.space().tuple(t);
          if (std::adjacent_find(tup.begin(), tup.end()) != tup.end()) EXPECT_EQ(image.coeffs()[t], 0);
        }
      }
    }
  }
}

TEST(Cochain, Evaluate) {
  const Algebra a = dim2();
  const SpacePtr s = make_space(trivial_module(a), 2, Flavor::symmetric);
  const Cochain c11 = chi(s, 1, 1);
  const std::vector<Vec> args{{1, 1}, {0, 1}};
  EXPECT_EQ(evaluate(c11, args), Vec{1});
  const std::vector<Vec> zero{{0, 0}, {1, 1}};
  EXPECT_EQ(evaluate(c11, zero), Vec{0});

  std::mt19937_64 rng(3);
  const SpacePtr h = make_space(adjoint_module(zassenhaus_f(2)), 2, Flavor::symmetric);
  for (int trial = 0; trial < 20; ++trial) {
    const Cochain phi = random_cochain(rng, h);
    for (std::size_t t = 0; t < h->tuple_count(); ++t) {
      const auto tup = h->tuple(t);
      const std::vector<Vec> basis_args{h->algebra().basis_vector(tup[0]), h->algebra().basis_vector(tup[1])};
      EXPECT_EQ(evaluate(phi, basis_args), phi.value(tup));
    }
    const Vec x = testing_support::random_vec(rng, h->field(), 3), y = testing_support::random_vec(rng, h->field(), 3);
    const std::vector<Vec> xy{x, y}, yx{y, x};
    EXPECT_EQ(evaluate(phi, xy), evaluate(phi, yx));
  }
}

TEST(Cochain, ContractAndLieDerivative) {
  const Algebra a = dim2();
  const Module k = trivial_module(a);
  const SpacePtr s2 = make_space(k, 2, Flavor::symmetric);
  const Cochain c = contract(Vec{1, 0}, chi(s2, 1, 1));
  EXPECT_EQ(c.space().degree(), 1U);
  EXPECT_EQ(c.value(std::vector<Arg>{1}), Vec{1});
  EXPECT_TRUE(contract(Vec{0, 0}, chi(s2, 1, 1)).is_zero());

  const SpacePtr s1 = make_space(k, 1, Flavor::symmetric);
  const Cochain c10 = chi(s1, 1, 0);
  const Cochain scalar = contract(Vec{1, 0}, c10);
  EXPECT_EQ(scalar.space().degree(), 0U);
  EXPECT_EQ(scalar.coeffs(), Vec{1});

  EXPECT_EQ(lie_derivative(Vec{0, 1}, c10).value(std::vector<Arg>{0}), Vec{1});

  const SpacePtr ab = make_space(trivial_module(abelian(3)), 2, Flavor::symmetric);
  std::mt19937_64 rng(5);
  EXPECT_TRUE(lie_derivative(Vec{1, 1, 0}, random_cochain(rng, ab)).is_zero());

  // degree 0: theta(x) is the module action
  const Module ad = adjoint_module(a);
  const SpacePtr s0 = make_space(ad, 0, Flavor::symmetric);
  const Cochain v(s0, Vec{1, 0});
  EXPECT_EQ(lie_derivative(Vec{0, 1}, v).coeffs(), ad.act(Vec{0, 1}, Vec{1, 0}));
}

TEST(Cochain, Include) {
  const Algebra a = heisenberg(1);
  const SpacePtr alt = make_space(trivial_module(a), 2, Flavor::alternating);
  const Cochain phi = Cochain::basis(alt, 0);
  const Cochain sym = include(phi, Flavor::symmetric);
  const Cochain ten = include(sym, Flavor::tensor);
  const auto t = alt->tuple(0);
  const std::vector<Arg> rev{t[1], t[0]};
  EXPECT_EQ(ten.value(t), Vec{1});
  EXPECT_EQ(ten.value(rev), Vec{1});
  EXPECT_ERROR_CODE(include(sym, Flavor::alternating), "flavor-mismatch");
  Cochain other(make_space(trivial_module(a), 2, Flavor::symmetric));
  EXPECT_ERROR_CODE(other += Cochain(make_space(trivial_module(dim2()), 2, Flavor::symmetric)), "space-mismatch");
}

TEST(Cochain, TupleCap) {
  const std::size_t old = tuple_cap();
  set_tuple_cap(100);
  EXPECT_ERROR_CODE(make_space(trivial_module(abelian(5)), 5, Flavor::symmetric), "cap-exceeded");
  set_tuple_cap(old);
}
