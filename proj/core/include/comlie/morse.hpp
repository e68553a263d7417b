// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The comlie Authors

#ifndef COMLIE_MORSE_HPP
#define COMLIE_MORSE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "comlie/algebra.hpp"
#include "comlie/cochain.hpp"
#include "comlie/linalg.hpp"

namespace comlie {

/// Weighted digraph of a based cochain complex truncated to degrees 0..top().
/// Vertices of degree n are the basis elements of C^n; there is an edge
/// c -> c' of weight [c:c'] for every nonzero entry (row c', column c) of d_n.
class ComplexGraph {
 public:
  /// `differentials[n]` maps degree n to n+1. Throws Error("not-a-complex")
  /// if two consecutive matrices do not compose to zero, and
  /// Error("dimension-mismatch") if their shapes do not chain.
  ComplexGraph(std::vector<SparseMatrix> differentials,
               std::vector<std::vector<std::string>> labels = {});
  static ComplexGraph from_dense(std::span<const Matrix> differentials,
                                 std::vector<std::vector<std::string>> labels = {});

  Field field() const noexcept { return field_; }
  /// Highest degree with vertices (the number of differentials).
  std::size_t top() const noexcept { return diffs_.size(); }
  std::size_t vertex_count(std::size_t n) const;
  const std::string& label(std::size_t n, std::size_t v) const { return labels_.at(n).at(v); }
  const SparseMatrix& differential(std::size_t n) const { return diffs_.at(n); }
  /// Entry [c:c'] for c in degree n, c' in degree n+1 (0 when there is no edge).
  Elem weight(std::size_t n, std::size_t c, std::size_t c_up) const;
  /// Edges leaving c in degree n, as (vertex in degree n+1, weight).
  std::span<const SparseMatrix::Entry> edges_up(std::size_t n, std::size_t c) const {
    return up_.at(n).at(c);
  }
  std::size_t edge_count() const noexcept;

 private:
  Field field_;
  std::vector<SparseMatrix> diffs_;
  // columns of d_n as (row, value) lists, for walking edges upward
  std::vector<std::vector<std::vector<SparseMatrix::Entry>>> up_;
  std::vector<std::vector<std::string>> labels_;
};

/// Symmetric cochain complex d_0..d_N of a module with labels "(a,b)" or "(a,b):r".
ComplexGraph build_graph(const Module& module, std::size_t max_degree);

/// Matched edge c -> c' with c in degree `degree`, c' in degree + 1.
struct MatchedEdge {
  std::size_t degree;
  std::size_t lower;
  std::size_t upper;
  friend bool operator==(const MatchedEdge&, const MatchedEdge&) = default;
};
using Matching = std::vector<MatchedEdge>;

struct Vertex {
  std::size_t degree;
  std::size_t index;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct MatchingReport {
  /// Matched pairs that are not edges of the graph.
  std::vector<MatchedEdge> missing_edges;
  /// Vertices covered by more than one matched edge.
  std::vector<Vertex> shared_vertices;
  /// A directed cycle of the graph with matched edges reversed, first vertex repeated at the end.
  std::vector<Vertex> cycle;
  /// Some matched edge goes from degree top()-1 to top().
  bool touches_boundary = false;

  bool valid() const noexcept {
    return missing_edges.empty() && shared_vertices.empty() && cycle.empty();
  }
};

MatchingReport validate_matching(const ComplexGraph& g, const Matching& m);

/// Reduced complex on the unmatched vertices.
struct MorseComplex {
  /// critical[n] = unmatched vertices of degree n, increasing.
  std::vector<std::vector<std::size_t>> critical;
  /// differentials[n]: critical[n+1] x critical[n].
  std::vector<Matrix> differentials;
  /// Degree top()-1 has matched edges into the truncation boundary.
  bool boundary_affected = false;

  std::size_t top() const noexcept { return differentials.size(); }
  /// dim H^n for n = 0..top()-1; degree top() is left out because the
  /// truncation hides its outgoing differential.
  std::vector<std::size_t> cohomology_dims() const;
};

/// Sums path weights in the graph with matched edges reversed (weight 1/[c:c']).
/// Throws Error("invalid-matching") when validate_matching fails.
MorseComplex morse_complex(const ComplexGraph& g, const Matching& m);

/// Exponents (alpha; beta; gamma) of a symmetric cochain on the Heisenberg algebra:
/// alpha copies of a, beta_i copies of b_i, gamma_i copies of c_i.
struct HeisenbergMonomial {
  std::size_t alpha = 0;
  std::vector<std::size_t> beta;
  std::vector<std::size_t> gamma;
  std::size_t degree() const noexcept;
  friend bool operator==(const HeisenbergMonomial&, const HeisenbergMonomial&) = default;
  friend bool operator<(const HeisenbergMonomial& x, const HeisenbergMonomial& y);
};

/// Basis tuple of heisenberg(l) carrying this monomial (a, b1..bl, c1..cl order).
std::vector<Arg> heisenberg_args(const HeisenbergMonomial& m);
HeisenbergMonomial heisenberg_monomial(std::span<const Arg> args, std::size_t l);

/// Edges chi(alpha;beta;gamma) -> chi(alpha-1; beta+1_k; gamma+1_k) where k is the
/// largest index with beta_k, gamma_k both even and k beats every index with
/// beta_i, gamma_i both odd (an empty set loses to everything), on
/// build_graph(trivial_module(heisenberg(l)), max_degree).
Matching heisenberg_matching(const ComplexGraph& g, std::size_t l);

/// The two families of unmatched monomials in degree n:
///   first:  alpha = 0 and the even-even maximum beats the odd-odd maximum;
///   second: no index where beta_i, gamma_i have equal parity.
std::pair<std::vector<HeisenbergMonomial>, std::vector<HeisenbergMonomial>> heisenberg_closed_form(
    std::size_t l, std::size_t n);

}  // namespace comlie

#endif  // COMLIE_MORSE_HPP
