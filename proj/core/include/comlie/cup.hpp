// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The comlie Authors

#ifndef COMLIE_CUP_HPP
#define COMLIE_CUP_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "comlie/cochain.hpp"
#include "comlie/cohomology.hpp"

namespace comlie {

/// (phi cup psi)(x_1..x_{p+q}) = sum over (p,q)-shuffles (I,J) of phi(x_I) psi(x_J).
/// Both factors must be symmetric with trivial one-dimensional coefficients
/// over the same algebra; otherwise throws Error("flavor-mismatch").
Cochain cup(const Cochain& phi, const Cochain& psi);

/// Constant cochain 1 of degree 0 with trivial coefficients.
Cochain unit_cochain(const Algebra& a);

/// An element of H^degree given by coordinates in the representative basis.
struct CohomologyClass {
  std::size_t degree;
  Vec coords;
};

/// Products of representative classes of H^*(L, K) up to total degree N.
class RingTable {
 public:
  RingTable(const Algebra& a, std::size_t max_degree);

  std::size_t max_degree() const noexcept { return groups_.size() - 1; }
  const CohomologyResult& group(std::size_t n) const { return groups_.at(n); }
  /// Label of representative i of H^n: the argument tuple of its leading term.
  const std::string& label(std::size_t n, std::size_t i) const { return labels_.at(n).at(i); }

  /// Class of rep(p, i) cup rep(q, j) in H^{p+q}; requires p + q <= max_degree().
  const Vec& product(std::size_t p, std::size_t i, std::size_t q, std::size_t j) const;
  CohomologyClass multiply(const CohomologyClass& x, const CohomologyClass& y) const;

  /// Dimension, per degree 0..max_degree(), of the subring generated by the
  /// unit and the given classes.
  std::vector<std::size_t> generated_dims(std::span<const CohomologyClass> generators) const;

 private:
  std::vector<CohomologyResult> groups_;
  std::vector<std::vector<std::string>> labels_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, Vec> products_;
};

}  // namespace comlie

#endif  // COMLIE_CUP_HPP
