// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The comlie Authors

#ifndef COMLIE_COHOMOLOGY_HPP
#define COMLIE_COHOMOLOGY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "comlie/algebra.hpp"
#include "comlie/cochain.hpp"
#include "comlie/linalg.hpp"

namespace comlie {

/// Z^n, B^n and a basis of H^n = Z^n / B^n for one flavor and degree.
///
/// Representatives are the RREF basis vectors of Z whose pivots are not
/// pivots of B, in increasing pivot order.
struct CohomologyResult {
  std::size_t degree;
  Flavor flavor;
  SpacePtr space;
  Subspace cocycles;
  Subspace coboundaries;
  std::vector<Cochain> representatives;

  std::size_t dim_z() const noexcept { return cocycles.dim(); }
  std::size_t dim_b() const noexcept { return coboundaries.dim(); }
  std::size_t dim_h() const noexcept { return representatives.size(); }

  bool is_cocycle(std::span<const Elem> v) const { return cocycles.contains(v); }
  bool is_coboundary(std::span<const Elem> v) const { return coboundaries.contains(v); }
  /// Coordinates of the class of v in the representative basis; nullopt
  /// when v is not a cocycle.
  std::optional<Vec> class_of(std::span<const Elem> v) const;
  /// Cocycle of the class with these coordinates.
  Vec lift(std::span<const Elem> coords) const;
};

CohomologyResult cohomology(const Module& module, std::size_t n, Flavor flavor = Flavor::symmetric);

/// dim H^n of an abstract complex given by its differentials d_0, d_1, ...
/// (d_n maps degree n to n+1, so d_{n+1} d_n = 0). Returns one entry per matrix.
std::vector<std::size_t> complex_cohomology_dims(std::span<const Matrix> differentials);

/// M^L: vectors killed by every basis element.
Subspace invariants_H0(const Module& module);
/// dim (L / [L, L])^*.
std::size_t abelianization_dual_dim(const Algebra& a);
/// dim Der(L) - dim Inn(L).
std::size_t outer_derivation_dim(const Algebra& a);

/// A linear map between cohomology spaces, written in their representative bases.
struct InducedMap {
  /// (dim target H) x (dim source H).
  Matrix matrix;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::size_t rank = 0;
  /// The chain map sends cocycles to cocycles and coboundaries to coboundaries.
  bool well_defined = false;

  std::size_t kernel_dim() const noexcept { return source_dim - rank; }
  bool injective() const noexcept { return well_defined && rank == source_dim; }
  bool isomorphism() const noexcept { return injective() && rank == target_dim; }
};

/// Map on cohomology induced by a cochain-level matrix (rows = target space,
/// columns = source space).
InducedMap induced_map(const CohomologyResult& source, const CohomologyResult& target,
                       const Matrix& chain_map);

/// H^n(alternating) -> H^n(symmetric). Throws Error("not-lie") unless is_lie().
InducedMap comparison_lie_to_comm(const Module& module, std::size_t n);
/// H^n(symmetric) -> H^n(tensor).
InducedMap comparison_comm_to_leibniz(const Module& module, std::size_t n);

/// Alternating bilinear forms with phi([x,y],z) = phi([z,x],y), as a
/// subspace of the alternating degree-2 trivial cochains.
Subspace alternating_invariant_forms(const Algebra& a);

/// The four-term sequence
///   0 -> H^2(L,K) -> H^1(L,L*) -> B_alt(L) -> H^3(L,K)
/// with maps phi -> (x -> phi(x,-)), psi -> psi(x)(y) + psi(y)(x), and
/// beta -> class of beta([x,y],z).
struct ExactSequenceReport {
  std::size_t h2 = 0, h1_dual = 0, b_alt = 0, h3 = 0;
  std::size_t rank1 = 0, rank2 = 0, rank3 = 0;
  bool map1_well_defined = false;
  bool map2_well_defined = false;
  /// beta([x,y],z) is symmetric in x,y,z and a cocycle for every beta in B_alt.
  bool map3_well_defined = false;
  bool injective_left = false;
  bool exact_at_h1 = false;
  bool exact_at_balt = false;
  std::vector<std::string> notes;

  bool exact() const noexcept {
    return map1_well_defined && map2_well_defined && map3_well_defined && injective_left &&
           exact_at_h1 && exact_at_balt;
  }
};
ExactSequenceReport exact_sequence_check(const Algebra& a);

/// Same structure constants over GF(2^degree); see change_field().
Module base_change(const Module& module, unsigned degree);

/// L + K z with [x,y]' = [x,y] + phi(x,y) z. phi must be a symmetric
/// 2-cocycle with trivial coefficients; otherwise throws Error("not-cocycle")
/// naming a basis triple where the cocycle condition fails.
Algebra central_extension(const Algebra& a, const Cochain& phi);
/// omega in L* with phi = d(omega), i.e. x -> x + omega(x) z is a splitting
/// homomorphism of the extension; nullopt when phi is not a coboundary.
std::optional<Vec> splitting_section(const Algebra& a, const Cochain& phi);

/// Invariants used to tell algebras apart.
struct Fingerprint {
  std::size_t dim = 0;
  std::size_t square_dim = 0;
  bool lie = false;
  std::size_t h1_comm = 0, h2_comm = 0;
  std::optional<std::size_t> h1_alt, h2_alt;
  std::size_t derivations = 0, outer_derivations = 0;
  std::size_t b_alt = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};
Fingerprint fingerprint(const Algebra& a);

/// The family of symmetric forms on zassenhaus_e(n), k = 0..n-1:
///   e_i e_j -> 1 if i = j = 2^k - 2 or {i, j} = {-1, 2^{k+1} - 3}, else 0.
/// Reports which members are cocycles and how much of H^2 they span.
struct GradedFamilyReport {
  unsigned n = 0;
  std::vector<Cochain> members;
  std::vector<bool> cocycle;
  std::size_t h2 = 0;
  /// dim of (span of the cocycle members + B^2) / B^2.
  std::size_t span_in_h2 = 0;
  bool spans_h2() const noexcept { return span_in_h2 == h2 && h2 == members.size(); }
};
GradedFamilyReport graded_family_check(unsigned n);

/// Solutions (lambda_a) over GF(2^n), indexed like zassenhaus_f(n), of
///   a lambda_a + b lambda_b + (a + b) lambda_{a+b} = 0 for all nonzero a != b.
Subspace diagonal_relation_space(unsigned n);

}  // namespace comlie

#endif  // COMLIE_COHOMOLOGY_HPP
