// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The comlie Authors

#ifndef COMLIE_COCHAIN_HPP
#define COMLIE_COCHAIN_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "comlie/algebra.hpp"
#include "comlie/linalg.hpp"

namespace comlie {

/// Which cochain complex: symmetric maps (commutative cohomology),
/// alternating maps (Chevalley-Eilenberg), or all multilinear maps (Leibniz).
enum class Flavor { symmetric, alternating, tensor };

/// "comm", "alt", "leibniz".
std::string to_string(Flavor f);
/// Accepts the short names above and "symmetric", "alternating", "tensor".
Flavor parse_flavor(const std::string& text);

/// Exact C(n, k); throws Error("cap-exceeded") on 64-bit overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
/// Dimension of the symmetric n-cochains with values in an m-dim module: C(d+n-1, n) * m.
std::uint64_t sym_dim(std::uint64_t d, std::uint64_t n, std::uint64_t m);

/// Upper bound on the number of argument tuples a cochain space may have.
std::size_t tuple_cap() noexcept;
void set_tuple_cap(std::size_t cap);

using Arg = std::uint16_t;

/// Based space of n-cochains of one flavor with values in a module.
///
/// Basis element (t, r) is the cochain taking value e_r (of the module) on
/// the argument tuple t and zero on every other basis tuple; its index is
/// t * dim(M) + r. Tuples are non-decreasing (symmetric), strictly
/// increasing (alternating) or arbitrary (tensor). Symmetric and
/// alternating tuples are numbered in colexicographic order through the
/// combinatorial number system, tensor tuples as base-d numerals.
class CochainSpace {
 public:
  CochainSpace(Module module, std::size_t degree, Flavor flavor);

  const Module& module() const noexcept { return module_; }
  const Algebra& algebra() const noexcept { return module_.algebra(); }
  Field field() const noexcept { return module_.algebra().field(); }
  std::size_t degree() const noexcept { return degree_; }
  Flavor flavor() const noexcept { return flavor_; }

  std::size_t tuple_count() const noexcept { return tuple_count_; }
  std::size_t dim() const noexcept { return tuple_count_ * module_.dim(); }

  std::span<const Arg> tuple(std::size_t t) const {
    return {tuples_.data() + t * degree_, degree_};
  }
  /// Index of the basis tuple carrying these arguments in any order, or
  /// nullopt when the flavor makes the value vanish (repeated argument of an
  /// alternating cochain).
  std::optional<std::size_t> tuple_index(std::span<const Arg> args) const;
  /// Same, but `args` is already in canonical order for this flavor.
  std::size_t rank_canonical(std::span<const Arg> args) const;

  std::size_t index(std::size_t t, std::size_t r) const noexcept { return t * module_.dim() + r; }
  /// "(a,b,b)" for one-dimensional modules, "(a,b,b):r" otherwise.
  std::string label(std::size_t basis_index) const;

  bool same_as(const CochainSpace& other) const;

 private:
  Module module_;
  std::size_t degree_;
  Flavor flavor_;
  std::size_t tuple_count_ = 0;
  std::vector<Arg> tuples_;
  // binom_[c * (degree_ + 2) + k] = C(c, k)
  std::vector<std::uint64_t> binom_;
};

using SpacePtr = std::shared_ptr<const CochainSpace>;
SpacePtr make_space(const Module& module, std::size_t degree, Flavor flavor);

/// Coefficient vector over a CochainSpace's basis.
class Cochain {
 public:
  explicit Cochain(SpacePtr space);
  Cochain(SpacePtr space, Vec coeffs);
  static Cochain basis(SpacePtr space, std::size_t index);

  const CochainSpace& space() const noexcept { return *space_; }
  const SpacePtr& space_ptr() const noexcept { return space_; }
  const Vec& coeffs() const noexcept { return coeffs_; }
  Vec& coeffs() noexcept { return coeffs_; }
  bool is_zero() const noexcept;

  /// Module vector phi(e_{a_1}, ..., e_{a_n}) for basis arguments in any order.
  Vec value(std::span<const Arg> args) const;

  Cochain& operator+=(const Cochain& other);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  Cochain scaled(Elem c) const;
  friend bool operator==(const Cochain& a, const Cochain& b);

 private:
  SpacePtr space_;
  Vec coeffs_;
};

/// The coboundary map from a cochain space to the next degree:
///
///   (d phi)(x_1..x_{n+1}) = sum_{i<j} phi([x_i, x_j], x_1..^i..^j..x_{n+1})
///                         + sum_i x_i . phi(x_1..^i..x_{n+1}),
///
/// evaluated on basis argument tuples position by position (so a repeated
/// argument contributes once per position pair). The tensor flavor puts
/// [x_i, x_j] in position i and deletes position j instead. Rows are
/// produced one target basis element at a time, which lets callers stream
/// differentials too large to hold densely.
class Differential {
 public:
  explicit Differential(SpacePtr source);

  const SpacePtr& source() const noexcept { return source_; }
  const SpacePtr& target() const noexcept { return target_; }

  /// Row of the matrix for one target basis element, canonical sparse form.
  void row(std::size_t target_index, std::vector<SparseMatrix::Entry>& out) const;
  SparseMatrix sparse() const;
  /// Dense matrix: rows = target basis, columns = source basis.
  Matrix dense() const;
  Cochain apply(const Cochain& phi) const;

 private:
  struct Contribution {
    std::size_t source_tuple;
    // Bracket coefficient for pair terms; kAction marks an action term.
    Elem coeff;
    Arg acting;
  };
  static constexpr Elem kAction = 0;

  void contributions(std::size_t target_tuple, std::vector<Contribution>& out) const;
  void emit(std::span<const Contribution> terms, std::size_t r,
            std::vector<SparseMatrix::Entry>& out) const;

  SpacePtr source_;
  SpacePtr target_;
};

/// Matrix of d from degree n to n+1.
Matrix differential_matrix(const Module& module, std::size_t n, Flavor flavor);

/// True iff d_{n+1} o d_n = 0, streaming the rows of d_{n+1}.
bool square_is_zero(const Module& module, std::size_t n, Flavor flavor);

/// Multilinear evaluation phi(x_1, ..., x_n) on arbitrary algebra vectors.
Vec evaluate(const Cochain& phi, std::span<const Vec> args);

/// i(x): (i(x) phi)(x_1..x_{n-1}) = phi(x, x_1..x_{n-1}). Requires degree >= 1.
Cochain contract(std::span<const Elem> x, const Cochain& phi);

/// theta(x): (theta(x) phi)(x_1..x_n) = x . phi(x_1..x_n) + sum_i phi(x_1..[x, x_i]..x_n).
Cochain lie_derivative(std::span<const Elem> x, const Cochain& phi);

/// Reinterprets phi as a cochain of a wider flavor (alternating -> symmetric
/// -> tensor) by evaluating it on the target basis tuples.
Cochain include(const Cochain& phi, Flavor to);
/// Matrix of include() between two spaces over the same module and degree.
Matrix inclusion_matrix(const CochainSpace& from, const CochainSpace& to);

}  // namespace comlie

#endif  // COMLIE_COCHAIN_HPP
