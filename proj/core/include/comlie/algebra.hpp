// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The comlie Authors

#ifndef COMLIE_ALGEBRA_HPP
#define COMLIE_ALGEBRA_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "comlie/field.hpp"
#include "comlie/linalg.hpp"

namespace comlie {

/// One nonzero coordinate of a sparse vector.
struct Term {
  std::uint32_t index;
  Elem coeff;
  friend bool operator==(const Term&, const Term&) = default;
};
using SparseVec = std::vector<Term>;

/// A commutative Lie algebra given by structure constants on a basis.
///
/// Products are stored once per unordered pair {i, j}, diagonal included,
/// so [x, y] = [y, x] holds by construction and [x, x] may be nonzero.
/// The Jacobi identity is not enforced here; see check_axioms().
class Algebra {
 public:
  Algebra(Field field, std::vector<std::string> names);

  Field field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Sets [e_i, e_j] = [e_j, e_i] = value (dense, length dim()).
  void set_bracket(std::size_t i, std::size_t j, std::span<const Elem> value);
  void set_bracket(std::size_t i, std::size_t j, SparseVec value);

  /// Nonzero terms of [e_i, e_j], sorted by index.
  std::span<const Term> bracket(std::size_t i, std::size_t j) const {
    return table_[pair_index(i, j)];
  }
  Vec bracket_dense(std::size_t i, std::size_t j) const;
  /// Bilinear extension to arbitrary vectors.
  Vec bracket(std::span<const Elem> x, std::span<const Elem> y) const;

  /// Matrix of ad(x) = [x, -]; column j holds [x, e_j].
  Matrix ad(std::span<const Elem> x) const;
  Vec basis_vector(std::size_t i) const;

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  static std::size_t pair_index(std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return j * (j + 1) / 2 + i;
  }

  Field field_;
  std::vector<std::string> names_;
  std::vector<SparseVec> table_;
};

/// Jacobi defect [[e_i,e_j],e_k] + [[e_k,e_i],e_j] + [[e_j,e_k],e_i] != 0 on a basis triple.
struct JacobiViolation {
  std::size_t i, j, k;
  Vec defect;
};

struct AxiomReport {
  std::vector<JacobiViolation> violations;
  bool valid() const noexcept { return violations.empty(); }
};

/// Checks Jacobi on every basis triple i <= j <= k (the identity is symmetric
/// in its three arguments once the product is commutative).
AxiomReport check_axioms(const Algebra& a);

/// True iff every basis square vanishes, i.e. the algebra is an ordinary Lie algebra.
bool is_lie(const Algebra& a);

/// span{[x, x]}. Squares are additive in characteristic 2, so the basis
/// squares span it. Throws Error("inconsistent") if the span is not central.
Subspace square_ideal(const Algebra& a);

/// Bracket span [L, L].
Subspace derived_subalgebra(const Algebra& a);

struct Quotient {
  Algebra algebra;
  /// (dim L/I) x (dim L) matrix of the canonical projection.
  Matrix projection;
};

/// L / I on the complement basis {e_j : j not a pivot of I}. Throws
/// Error("not-ideal") with a witness pair if [I, L] is not inside I.
Quotient quotient_by(const Algebra& a, const Subspace& ideal);

/// An action of an algebra: one m x m matrix per basis element, obeying
/// rho([x, y]) = rho(x) rho(y) + rho(y) rho(x).
class Module {
 public:
  /// Validates the module axiom; throws Error("module-axiom") on failure.
  Module(Algebra algebra, std::size_t dim, std::vector<Matrix> actions,
         std::string kind = "custom");

  const Algebra& algebra() const noexcept { return algebra_; }
  std::size_t dim() const noexcept { return dim_; }
  const Matrix& action(std::size_t i) const { return actions_.at(i); }
  const std::vector<Matrix>& actions() const noexcept { return actions_; }
  const std::string& kind() const noexcept { return kind_; }
  bool is_trivial() const noexcept;

  /// Nonzero entries of row r of action(i), as (column, value) terms.
  std::span<const Term> action_row(std::size_t i, std::size_t r) const {
    return sparse_rows_[i * dim_ + r];
  }
  /// x . v for arbitrary x in L and v in M.
  Vec act(std::span<const Elem> x, std::span<const Elem> v) const;
  /// Action matrix of an arbitrary algebra vector.
  Matrix action_of(std::span<const Elem> x) const;

 private:
  Algebra algebra_;
  std::size_t dim_;
  std::vector<Matrix> actions_;
  std::string kind_;
  std::vector<SparseVec> sparse_rows_;
};

struct ModuleViolation {
  std::size_t i, j;
  Matrix defect;
};

/// Every basis pair (i <= j) where the module axiom fails.
std::vector<ModuleViolation> check_module_axioms(const Algebra& a, std::size_t dim,
                                                 std::span<const Matrix> actions);

Module trivial_module(const Algebra& a);
Module adjoint_module(const Algebra& a);
/// x acts on f in L* by f o ad(x), i.e. by the transpose of ad(x).
Module dual_module(const Algebra& a);
/// Module dimension is taken from the matrices (1 when the algebra is 0-dimensional).
Module module_from_actions(const Algebra& a, std::vector<Matrix> actions);

/// Derivations, as a subspace of the d*d matrix space flattened row-major
/// (entry (k, j) = coefficient of e_k in D(e_j)), and the inner ones span{ad e_i}.
struct DerivationSpace {
  Subspace derivations;
  Subspace inner;
  std::size_t outer_dim() const noexcept { return derivations.dim() - inner.dim(); }
};
DerivationSpace derivation_space(const Algebra& a);

// Builders. All of them satisfy check_axioms().

/// d-dimensional algebra with zero product, basis e1..ed.
Algebra abelian(std::size_t d, Field field = gf2());
/// Basis {a, b} with [a, b] = a.
Algebra dim2(Field field = gf2());
/// Basis a, b1..bl, c1..cl with [b_i, c_i] = a.
Algebra heisenberg(std::size_t l, Field field = gf2());
/// Zassenhaus algebra in the graded basis e_{-1} .. e_{2^n-3}:
/// [e_i, e_j] = C(i+j+2, i+1) e_{i+j} while the index stays in range.
Algebra zassenhaus_e(unsigned n, Field field = gf2());
/// Zassenhaus algebra over GF(2^n): basis f_a for nonzero a in increasing
/// bitmask order, [f_a, f_b] = (a + b) f_{a+b}.
Algebra zassenhaus_f(unsigned n);

enum class Closure {
  /// Bracket-close the span until stable.
  iterate,
  /// Error("not-closed") unless the span of the generators is already closed.
  require_closed,
};

struct Subalgebra {
  Algebra algebra;
  /// RREF basis of the subalgebra in the coordinates of the ambient algebra.
  std::vector<Vec> basis;
};

Subalgebra span_subalgebra(const Algebra& a, std::span<const Vec> generators,
                           Closure mode = Closure::iterate);

/// Same structure constants over GF(2^degree). Requires constants in the
/// prime field unless the degree is unchanged; otherwise throws
/// Error("unsupported-embedding").
Algebra change_field(const Algebra& a, unsigned degree);
Module change_field(const Module& m, unsigned degree);

/// L + K z with [x, y]' = [x, y] + phi(x, y) z for a symmetric bilinear form
/// given as a d x d matrix (no cocycle check here; see cohomology).
Algebra extend_by_form(const Algebra& a, const Matrix& form, const std::string& central_name = "z");

}  // namespace comlie

#endif  // COMLIE_ALGEBRA_HPP
