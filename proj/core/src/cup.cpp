// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The comlie Authors

#include "comlie/cup.hpp"

#include <algorithm>

#include "comlie/error.hpp"

namespace comlie {
namespace {

void require_trivial_symmetric(const CochainSpace& s) {
  if (s.flavor() != Flavor::symmetric || s.module().dim() != 1 || !s.module().is_trivial()) {
    throw Error("flavor-mismatch", "cup products need symmetric cochains with trivial coefficients",
                ErrorKind::computation);
  }
}

}  // namespace

Cochain cup(const Cochain& phi, const Cochain& psi) {
  const CochainSpace& a = phi.space();
  const CochainSpace& b = psi.space();
  require_trivial_symmetric(a);
  require_trivial_symmetric(b);
  if (!(a.algebra() == b.algebra())) {
    throw Error("flavor-mismatch", "cup product of cochains on different algebras",
                ErrorKind::computation);
  }
  const std::size_t p = a.degree();
  const std::size_t q = b.degree();
  const Field f = a.field();
  const SpacePtr target = make_space(a.module(), p + q, Flavor::symmetric);
  Cochain out(target);

  // choose[k] marks the positions that go to phi; prev_permutation walks all splits.
  std::vector<char> choose(p + q, 0);
  std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(p), 1);
  std::vector<Arg> left(p), right(q);
  for (std::size_t t = 0; t < target->tuple_count(); ++t) {
    const auto args = target->tuple(t);
    std::vector<char> split = choose;
    Elem sum = 0;
    do {
      std::size_t l = 0, r = 0;
      for (std::size_t k = 0; k < args.size(); ++k) {
        if (split[k]) {
          left[l++] = args[k];
        } else {
          right[r++] = args[k];
        }
      }
      const Elem x = phi.coeffs()[a.rank_canonical(left)];
      if (x != 0) sum ^= f.mul(x, psi.coeffs()[b.rank_canonical(right)]);
    } while (std::prev_permutation(split.begin(), split.end()));
    out.coeffs()[t] = sum;
  }
  return out;
}

Cochain unit_cochain(const Algebra& a) {
  return Cochain::basis(make_space(trivial_module(a), 0, Flavor::symmetric), 0);
}

RingTable::RingTable(const Algebra& a, std::size_t max_degree) {
  const Module triv = trivial_module(a);
  for (std::size_t n = 0; n <= max_degree; ++n) {
    groups_.push_back(cohomology(triv, n));
    std::vector<std::string> names;
    for (const Cochain& r : groups_.back().representatives) {
      const auto lead = std::find_if(r.coeffs().begin(), r.coeffs().end(), [](Elem e) { return e != 0; });
      names.push_back(r.space().label(static_cast<std::size_t>(lead - r.coeffs().begin())));
    }
    labels_.push_back(std::move(names));
  }
  for (std::size_t p = 0; p <= max_degree; ++p) {
    for (std::size_t q = 0; p + q <= max_degree; ++q) {
      for (std::size_t i = 0; i < groups_[p].dim_h(); ++i) {
        for (std::size_t j = 0; j < groups_[q].dim_h(); ++j) {
          const Cochain c = cup(groups_[p].representatives[i], groups_[q].representatives[j]);
          auto cls = groups_[p + q].class_of(c.coeffs());
          if (!cls) {
            throw Error("not-cocycle", "cup product of cocycles is not a cocycle",
                        ErrorKind::computation);
          }
          products_.emplace(std::tuple{p, i, q, j}, std::move(*cls));
        }
      }
    }
  }
}

const Vec& RingTable::product(std::size_t p, std::size_t i, std::size_t q, std::size_t j) const {
  const auto it = products_.find({p, i, q, j});
  if (it == products_.end()) {
    throw Error("parameter-range", "product outside the table", ErrorKind::computation);
  }
  return it->second;
}

CohomologyClass RingTable::multiply(const CohomologyClass& x, const CohomologyClass& y) const {
  const std::size_t n = x.degree + y.degree;
  if (n > max_degree()) throw Error("parameter-range", "product beyond the table degree");
  const Field f = groups_[0].space->field();
  CohomologyClass out{n, Vec(groups_[n].dim_h(), 0)};
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (x.coords[i] == 0) continue;
    for (std::size_t j = 0; j < y.coords.size(); ++j) {
      if (y.coords[j] == 0) continue;
      const Elem c = f.mul(x.coords[i], y.coords[j]);
      const Vec& v = product(x.degree, i, y.degree, j);
      for (std::size_t k = 0; k < v.size(); ++k) out.coords[k] ^= f.mul(c, v[k]);
    }
  }
  return out;
}

std::vector<std::size_t> RingTable::generated_dims(std::span<const CohomologyClass> generators) const {
  const Field f = groups_[0].space->field();
  std::vector<Subspace> spans;
  for (std::size_t n = 0; n <= max_degree(); ++n) {
    std::vector<Vec> vectors;
    if (n == 0) {
      // The constant 1 is the first H^0 representative when H^0 is nonzero.
      if (groups_[0].dim_h() > 0) vectors.push_back(*groups_[0].class_of(Vec{1}));
    }
    for (const CohomologyClass& g : generators) {
      if (g.degree == 0 || g.degree > n) continue;
      if (g.degree == n) {
        vectors.push_back(g.coords);
        continue;
      }
      for (const Vec& s : spans[n - g.degree].basis()) {
        vectors.push_back(multiply({n - g.degree, s}, g).coords);
      }
    }
    spans.push_back(Subspace::span(f, groups_[n].dim_h(), vectors));
  }
  std::vector<std::size_t> dims;
  for (const Subspace& s : spans) dims.push_back(s.dim());
  return dims;
}

}  // namespace comlie
