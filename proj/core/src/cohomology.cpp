// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The comlie Authors

#include "comlie/cohomology.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "comlie/error.hpp"

namespace comlie {
namespace {

bool all_zero(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

Subspace zero_space(const CochainSpace& s) { return Subspace(s.field(), s.dim()); }

/// Value of an alternating degree-2 trivial form (coordinates in `alt2`) on [e_i, e_j] and e_k.
Elem form_on_bracket(const Algebra& a, const CochainSpace& alt2, std::span<const Elem> beta,
                     std::size_t i, std::size_t j, std::size_t k) {
  const Field f = a.field();
  Elem out = 0;
  for (const Term& t : a.bracket(i, j)) {
    const std::array<Arg, 2> args{static_cast<Arg>(t.index), static_cast<Arg>(k)};
    if (const auto idx = alt2.tuple_index(args)) out ^= f.mul(t.coeff, beta[*idx]);
  }
  return out;
}

}  // namespace

std::optional<Vec> CohomologyResult::class_of(std::span<const Elem> v) const {
  if (!cocycles.contains(v)) return std::nullopt;
  const Vec w = coboundaries.reduce(Vec(v.begin(), v.end()));
  Vec coords(representatives.size(), 0);
  for (std::size_t i = 0; i < representatives.size(); ++i) {
    // The leading entry of a representative is a Z pivot that B does not have.
    const Vec& r = representatives[i].coeffs();
    const auto lead = std::find_if(r.begin(), r.end(), [](Elem e) { return e != 0; });
    coords[i] = w[static_cast<std::size_t>(lead - r.begin())];
  }
  return coords;
}

Vec CohomologyResult::lift(std::span<const Elem> coords) const {
  const Field f = space->field();
  Vec out(space->dim(), 0);
  for (std::size_t i = 0; i < representatives.size(); ++i) {
    if (coords[i] == 0) continue;
    const Vec& r = representatives[i].coeffs();
    for (std::size_t k = 0; k < out.size(); ++k) out[k] ^= f.mul(coords[i], r[k]);
  }
  return out;
}

CohomologyResult cohomology(const Module& module, std::size_t n, Flavor flavor) {
  const SpacePtr space = make_space(module, n, flavor);
  Subspace z = space->dim() == 0 ? zero_space(*space) : kernel_basis(Differential(space).dense());
  Subspace b = zero_space(*space);
  if (n > 0) {
    const SpacePtr prev = make_space(module, n - 1, flavor);
    if (prev->dim() > 0 && space->dim() > 0) b = image_basis(Differential(prev).dense());
  }
  std::vector<Cochain> reps;
  for (Vec& v : quotient_basis(z, b)) reps.emplace_back(space, std::move(v));
  return CohomologyResult{n, flavor, space, std::move(z), std::move(b), std::move(reps)};
}

std::vector<std::size_t> complex_cohomology_dims(std::span<const Matrix> differentials) {
  std::vector<std::size_t> ranks;
  for (const Matrix& d : differentials) ranks.push_back(rank(d));
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n < differentials.size(); ++n) {
    if (n > 0 && differentials[n - 1].rows() != differentials[n].cols()) {
      throw Error("dimension-mismatch", "consecutive differentials do not compose",
                  ErrorKind::computation);
    }
    dims.push_back(differentials[n].cols() - ranks[n] - (n > 0 ? ranks[n - 1] : 0));
  }
  return dims;
}

Subspace invariants_H0(const Module& module) {
  const std::size_t m = module.dim();
  const std::size_t d = module.algebra().dim();
  const Field f = module.algebra().field();
  if (d == 0 || m == 0) return Subspace::whole(f, m);
  Matrix stacked(f, d * m, m);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) stacked(i * m + r, c) = module.action(i)(r, c);
    }
  }
  return kernel_basis(stacked);
}

std::size_t abelianization_dual_dim(const Algebra& a) {
  return a.dim() - derived_subalgebra(a).dim();
}

std::size_t outer_derivation_dim(const Algebra& a) { return derivation_space(a).outer_dim(); }

InducedMap induced_map(const CohomologyResult& source, const CohomologyResult& target,
                       const Matrix& chain_map) {
  if (chain_map.cols() != source.space->dim() || chain_map.rows() != target.space->dim()) {
    throw Error("dimension-mismatch", "chain map does not fit the cochain spaces",
                ErrorKind::computation);
  }
  InducedMap out{Matrix(source.space->field(), target.dim_h(), source.dim_h()), source.dim_h(),
                 target.dim_h(), 0, true};
  for (const Vec& z : source.cocycles.basis()) {
    out.well_defined = out.well_defined && target.is_cocycle(chain_map.apply(z));
  }
  for (const Vec& b : source.coboundaries.basis()) {
    out.well_defined = out.well_defined && target.is_coboundary(chain_map.apply(b));
  }
  for (std::size_t i = 0; i < source.dim_h(); ++i) {
    const auto coords = target.class_of(chain_map.apply(source.representatives[i].coeffs()));
    if (!coords) {
      out.well_defined = false;
      continue;
    }
    for (std::size_t r = 0; r < coords->size(); ++r) out.matrix(r, i) = (*coords)[r];
  }
  out.rank = rank(out.matrix);
  return out;
}

InducedMap comparison_lie_to_comm(const Module& module, std::size_t n) {
  if (!is_lie(module.algebra())) {
    throw Error("not-lie", "alternating cohomology needs an algebra with zero squares");
  }
  const CohomologyResult alt = cohomology(module, n, Flavor::alternating);
  const CohomologyResult sym = cohomology(module, n, Flavor::symmetric);
  return induced_map(alt, sym, inclusion_matrix(*alt.space, *sym.space));
}

InducedMap comparison_comm_to_leibniz(const Module& module, std::size_t n) {
  const CohomologyResult sym = cohomology(module, n, Flavor::symmetric);
  const CohomologyResult ten = cohomology(module, n, Flavor::tensor);
  return induced_map(sym, ten, inclusion_matrix(*sym.space, *ten.space));
}

Subspace alternating_invariant_forms(const Algebra& a) {
  const std::size_t d = a.dim();
  const SpacePtr alt2 = make_space(trivial_module(a), 2, Flavor::alternating);
  const Field f = a.field();
  std::vector<Vec> rows;
  Vec row(alt2->dim(), 0);
  const auto add = [&](std::size_t i, std::size_t j, std::size_t k) {
    for (const Term& t : a.bracket(i, j)) {
      const std::array<Arg, 2> args{static_cast<Arg>(t.index), static_cast<Arg>(k)};
      if (const auto idx = alt2->tuple_index(args)) row[*idx] ^= t.coeff;
    }
  };
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        std::fill(row.begin(), row.end(), 0);
        add(i, j, k);
        add(k, i, j);
        if (!all_zero(row)) rows.push_back(row);
      }
    }
  }
  if (rows.empty()) return Subspace::whole(f, alt2->dim());
  return kernel_basis(Matrix::from_rows(f, alt2->dim(), rows));
}

ExactSequenceReport exact_sequence_check(const Algebra& a) {
  const std::size_t d = a.dim();
  const Field f = a.field();
  const Module triv = trivial_module(a);
  const CohomologyResult h2 = cohomology(triv, 2);
  const CohomologyResult h1 = cohomology(dual_module(a), 1);
  const CohomologyResult h3 = cohomology(triv, 3);
  const Subspace balt = alternating_invariant_forms(a);
  const SpacePtr alt2 = make_space(triv, 2, Flavor::alternating);

  ExactSequenceReport rep;
  rep.h2 = h2.dim_h();
  rep.h1_dual = h1.dim_h();
  rep.b_alt = balt.dim();
  rep.h3 = h3.dim_h();

  // (1) phi -> (e_k -> sum_r phi(e_k, e_r) e_r^*)
  Matrix f1(f, h1.space->dim(), h2.space->dim());
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t r = 0; r < d; ++r) {
      const std::array<Arg, 2> args{static_cast<Arg>(k), static_cast<Arg>(r)};
      f1(h1.space->index(k, r), *h2.space->tuple_index(args)) = 1;
    }
  }
  const InducedMap m1 = induced_map(h2, h1, f1);
  rep.map1_well_defined = m1.well_defined;
  rep.rank1 = m1.rank;
  if (!m1.well_defined) rep.notes.push_back("map 1 does not descend to cohomology");

  // (2) psi -> psi(x)(y) + psi(y)(x)
  Matrix f2(f, alt2->dim(), h1.space->dim());
  for (std::size_t t = 0; t < alt2->tuple_count(); ++t) {
    const auto ij = alt2->tuple(t);
    f2(t, h1.space->index(ij[0], ij[1])) ^= 1;
    f2(t, h1.space->index(ij[1], ij[0])) ^= 1;
  }
  rep.map2_well_defined = true;
  for (const Vec& z : h1.cocycles.basis()) {
    rep.map2_well_defined = rep.map2_well_defined && balt.contains(f2.apply(z));
  }
  for (const Vec& b : h1.coboundaries.basis()) {
    rep.map2_well_defined = rep.map2_well_defined && all_zero(f2.apply(b));
  }
  Matrix m2(f, balt.dim(), h1.dim_h());
  for (std::size_t i = 0; i < h1.dim_h(); ++i) {
    if (const auto c = balt.coordinates(f2.apply(h1.representatives[i].coeffs()))) {
      for (std::size_t r = 0; r < c->size(); ++r) m2(r, i) = (*c)[r];
    }
  }
  rep.rank2 = rank(m2);
  if (!rep.map2_well_defined) rep.notes.push_back("map 2 does not land in B_alt or kill B^1");

  // (3) beta -> class of beta([x,y],z)
  rep.map3_well_defined = true;
  Matrix m3(f, h3.dim_h(), balt.dim());
  for (std::size_t b = 0; b < balt.dim(); ++b) {
    const Vec& beta = balt.basis()[b];
    Vec gamma(h3.space->dim(), 0);
    for (std::size_t t = 0; t < h3.space->tuple_count(); ++t) {
      const auto ijk = h3.space->tuple(t);
      const Elem v = form_on_bracket(a, *alt2, beta, ijk[0], ijk[1], ijk[2]);
      const Elem v2 = form_on_bracket(a, *alt2, beta, ijk[1], ijk[2], ijk[0]);
      const Elem v3 = form_on_bracket(a, *alt2, beta, ijk[2], ijk[0], ijk[1]);
      if (v != v2 || v != v3) rep.map3_well_defined = false;
      gamma[t] = v;
    }
    const auto c = h3.class_of(gamma);
    if (!c) {
      rep.map3_well_defined = false;
      continue;
    }
    for (std::size_t r = 0; r < c->size(); ++r) m3(r, b) = (*c)[r];
  }
  rep.rank3 = rank(m3);
  if (!rep.map3_well_defined) {
    rep.notes.push_back("beta([x,y],z) is not a symmetric 3-cocycle for some beta in B_alt");
  }

  rep.injective_left = m1.well_defined && m1.rank == rep.h2;
  rep.exact_at_h1 = (m2 * m1.matrix).is_zero() && rep.rank1 + rep.rank2 == rep.h1_dual;
  rep.exact_at_balt = (m3 * m2).is_zero() && rep.rank2 + rep.rank3 == rep.b_alt;
  if (!rep.injective_left) rep.notes.push_back("map 1 is not injective");
  if (!rep.exact_at_h1) rep.notes.push_back("not exact at H^1(L,L*)");
  if (!rep.exact_at_balt) rep.notes.push_back("not exact at B_alt");
  return rep;
}

Module base_change(const Module& module, unsigned degree) { return change_field(module, degree); }

namespace {

void require_trivial_2cochain(const Algebra& a, const Cochain& phi) {
  const CochainSpace& s = phi.space();
  if (s.degree() != 2 || s.flavor() != Flavor::symmetric || s.module().dim() != 1 ||
      !s.module().is_trivial() || !(s.algebra() == a)) {
    throw Error("space-mismatch", "expected a symmetric 2-cochain with trivial coefficients");
  }
}

}  // namespace

Algebra central_extension(const Algebra& a, const Cochain& phi) {
  require_trivial_2cochain(a, phi);
  const Cochain dphi = Differential(phi.space_ptr()).apply(phi);
  for (std::size_t i = 0; i < dphi.coeffs().size(); ++i) {
    if (dphi.coeffs()[i] != 0) {
      throw Error("not-cocycle", "cocycle condition fails on " + dphi.space().label(i));
    }
  }
  Matrix form(a.field(), a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const std::array<Arg, 2> args{static_cast<Arg>(i), static_cast<Arg>(j)};
      form(i, j) = phi.value(args)[0];
    }
  }
  return extend_by_form(a, form);
}

std::optional<Vec> splitting_section(const Algebra& a, const Cochain& phi) {
  require_trivial_2cochain(a, phi);
  return solve(differential_matrix(phi.space().module(), 1, Flavor::symmetric), phi.coeffs());
}

Fingerprint fingerprint(const Algebra& a) {
  const Module triv = trivial_module(a);
  Fingerprint fp;
  fp.dim = a.dim();
  fp.square_dim = square_ideal(a).dim();
  fp.lie = is_lie(a);
  fp.h1_comm = cohomology(triv, 1).dim_h();
  fp.h2_comm = cohomology(triv, 2).dim_h();
  if (fp.lie) {
    fp.h1_alt = cohomology(triv, 1, Flavor::alternating).dim_h();
    fp.h2_alt = cohomology(triv, 2, Flavor::alternating).dim_h();
  }
  const DerivationSpace der = derivation_space(a);
  fp.derivations = der.derivations.dim();
  fp.outer_derivations = der.outer_dim();
  fp.b_alt = alternating_invariant_forms(a).dim();
  return fp;
}

GradedFamilyReport graded_family_check(unsigned n) {
  const Algebra a = zassenhaus_e(n);
  const Module triv = trivial_module(a);
  const CohomologyResult h2 = cohomology(triv, 2);
  GradedFamilyReport rep;
  rep.n = n;
  rep.h2 = h2.dim_h();
  std::vector<Vec> classes;
  for (unsigned k = 0; k < n; ++k) {
    Cochain c(h2.space);
    // Basis index of e_i is i + 1.
    const auto square = static_cast<Arg>((1u << k) - 1);
    const auto top = static_cast<Arg>((2u << k) - 2);
    const std::array<Arg, 2> diag{square, square};
    const std::array<Arg, 2> pair{0, top};
    c.coeffs()[*h2.space->tuple_index(diag)] = 1;
    c.coeffs()[*h2.space->tuple_index(pair)] = 1;
    const auto cls = h2.class_of(c.coeffs());
    rep.cocycle.push_back(cls.has_value());
    if (cls) classes.push_back(*cls);
    rep.members.push_back(std::move(c));
  }
  rep.span_in_h2 = classes.empty() ? 0 : Subspace::span(a.field(), rep.h2, classes).dim();
  return rep;
}

Subspace diagonal_relation_space(unsigned n) {
  const Field f = make_field(n);
  const std::size_t count = (std::size_t{1} << n) - 1;
  std::vector<Vec> rows;
  for (std::size_t x = 1; x <= count; ++x) {
    for (std::size_t y = x + 1; y <= count; ++y) {
      const std::size_t s = x ^ y;
      Vec row(count, 0);
      row[x - 1] = static_cast<Elem>(x);
      row[y - 1] = static_cast<Elem>(y);
      row[s - 1] = static_cast<Elem>(s);
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return Subspace::whole(f, count);
  return kernel_basis(Matrix::from_rows(f, count, rows));
}

}  // namespace comlie
