// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The comlie Authors

#include "comlie/morse.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "comlie/error.hpp"

namespace comlie {

// ComplexGraph

ComplexGraph::ComplexGraph(std::vector<SparseMatrix> differentials,
                           std::vector<std::vector<std::string>> labels)
    : field_(differentials.empty() ? gf2() : differentials.front().field()),
      diffs_(std::move(differentials)),
      labels_(std::move(labels)) {
  for (std::size_t n = 1; n < diffs_.size(); ++n) {
    if (diffs_[n].cols() != diffs_[n - 1].rows() || !(diffs_[n].field() == field_)) {
      throw Error("dimension-mismatch", "differentials " + std::to_string(n - 1) + " and " +
                                            std::to_string(n) + " do not chain");
    }
    if (!multiply(diffs_[n], diffs_[n - 1]).is_zero()) {
      throw Error("not-a-complex", "d_" + std::to_string(n) + " d_" + std::to_string(n - 1) + " != 0");
    }
  }
  up_.resize(diffs_.size());
  for (std::size_t n = 0; n < diffs_.size(); ++n) {
    up_[n].resize(diffs_[n].cols());
    for (std::size_t r = 0; r < diffs_[n].rows(); ++r) {
      for (const auto& e : diffs_[n].row(r)) {
        up_[n][e.col].push_back({static_cast<std::uint32_t>(r), e.value});
      }
    }
  }
  if (labels_.empty()) {
    for (std::size_t n = 0; n <= top(); ++n) {
      std::vector<std::string> names;
      for (std::size_t v = 0; v < vertex_count(n); ++v) {
        names.push_back("v" + std::to_string(n) + "." + std::to_string(v));
      }
      labels_.push_back(std::move(names));
    }
  }
  if (labels_.size() != top() + 1) {
    throw Error("dimension-mismatch", "one label list per degree is required");
  }
  for (std::size_t n = 0; n <= top(); ++n) {
    if (labels_[n].size() != vertex_count(n)) {
      throw Error("dimension-mismatch", "label count differs from basis size in degree " +
                                            std::to_string(n));
    }
  }
}

ComplexGraph ComplexGraph::from_dense(std::span<const Matrix> differentials,
                                      std::vector<std::vector<std::string>> labels) {
  std::vector<SparseMatrix> sparse;
  for (const Matrix& m : differentials) sparse.push_back(SparseMatrix::from_dense(m));
  return ComplexGraph(std::move(sparse), std::move(labels));
}

std::size_t ComplexGraph::vertex_count(std::size_t n) const {
  if (diffs_.empty()) return 0;
  if (n < diffs_.size()) return diffs_[n].cols();
  if (n == diffs_.size()) return diffs_.back().rows();
  return 0;
}

Elem ComplexGraph::weight(std::size_t n, std::size_t c, std::size_t c_up) const {
  if (n >= diffs_.size() || c_up >= diffs_[n].rows()) return 0;
  const auto row = diffs_[n].row(c_up);
  const auto it = std::lower_bound(row.begin(), row.end(), c, [](const SparseMatrix::Entry& e, std::size_t col) {
    return e.col < col;
  });
  return it != row.end() && it->col == c ? it->value : 0;
}

std::size_t ComplexGraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto& d : diffs_) total += d.nnz();
  return total;
}

ComplexGraph build_graph(const Module& module, std::size_t max_degree) {
  std::vector<SparseMatrix> diffs;
  std::vector<std::vector<std::string>> labels;
  SpacePtr space = make_space(module, 0, Flavor::symmetric);
  for (std::size_t n = 0; n <= max_degree + 1; ++n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < space->dim(); ++i) names.push_back(space->label(i));
    labels.push_back(std::move(names));
    if (n == max_degree + 1) break;
    const Differential d(space);
    diffs.push_back(d.sparse());
    space = d.target();
  }
  return ComplexGraph(std::move(diffs), std::move(labels));
}

// Matchings

namespace {

/// Matched edges in lookup form.
struct MatchIndex {
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> edges;
  // (degree of upper, upper) -> lowers
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> down;

  explicit MatchIndex(const Matching& m) {
    for (const MatchedEdge& e : m) {
      edges.insert({e.degree, e.lower, e.upper});
      down[{e.degree + 1, e.upper}].push_back(e.lower);
    }
  }
  bool matched(std::size_t n, std::size_t lower, std::size_t upper) const {
    return edges.count({n, lower, upper}) > 0;
  }
};

}  // namespace

MatchingReport validate_matching(const ComplexGraph& g, const Matching& m) {
  MatchingReport rep;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> uses;
  for (const MatchedEdge& e : m) {
    if (e.degree >= g.top() || e.lower >= g.vertex_count(e.degree) ||
        e.upper >= g.vertex_count(e.degree + 1) || g.weight(e.degree, e.lower, e.upper) == 0) {
      rep.missing_edges.push_back(e);
      continue;
    }
    if (e.degree + 1 == g.top()) rep.touches_boundary = true;
    ++uses[{e.degree, e.lower}];
    ++uses[{e.degree + 1, e.upper}];
  }
  for (const auto& [v, count] : uses) {
    if (count > 1) rep.shared_vertices.push_back({v.first, v.second});
  }
  if (!rep.missing_edges.empty()) return rep;

  // Depth-first search with colors over the graph with matched edges reversed.
  const MatchIndex index(m);
  std::vector<std::size_t> offset(g.top() + 2, 0);
  for (std::size_t n = 0; n <= g.top(); ++n) offset[n + 1] = offset[n] + g.vertex_count(n);
  const auto id = [&](Vertex v) { return offset[v.degree] + v.index; };
  const auto successors = [&](Vertex v) {
    std::vector<Vertex> out;
    if (v.degree < g.top()) {
      for (const auto& e : g.edges_up(v.degree, v.index)) {
        if (!index.matched(v.degree, v.index, e.col)) out.push_back({v.degree + 1, e.col});
      }
    }
    if (const auto it = index.down.find({v.degree, v.index}); it != index.down.end()) {
      for (std::size_t lower : it->second) out.push_back({v.degree - 1, lower});
    }
    return out;
  };

  enum : char { white, grey, black };
  std::vector<char> color(offset.back(), white);
  struct Frame {
    Vertex v;
    std::vector<Vertex> next;
    std::size_t pos;
  };
  for (std::size_t n = 0; n <= g.top() && rep.cycle.empty(); ++n) {
    for (std::size_t i = 0; i < g.vertex_count(n) && rep.cycle.empty(); ++i) {
      if (color[id({n, i})] != white) continue;
      std::vector<Frame> stack;
      stack.push_back({{n, i}, successors({n, i}), 0});
      color[id({n, i})] = grey;
      while (!stack.empty() && rep.cycle.empty()) {
        Frame& top = stack.back();
        if (top.pos == top.next.size()) {
          color[id(top.v)] = black;
          stack.pop_back();
          continue;
        }
        const Vertex w = top.next[top.pos++];
        if (color[id(w)] == grey) {
          auto it = std::find_if(stack.begin(), stack.end(), [&](const Frame& f) { return f.v == w; });
          for (; it != stack.end(); ++it) rep.cycle.push_back(it->v);
          rep.cycle.push_back(w);
        } else if (color[id(w)] == white) {
          color[id(w)] = grey;
          stack.push_back({w, successors(w), 0});
        }
      }
    }
  }
  return rep;
}

std::vector<std::size_t> MorseComplex::cohomology_dims() const {
  std::vector<std::size_t> ranks;
  for (const Matrix& d : differentials) ranks.push_back(rank(d));
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n < differentials.size(); ++n) {
    dims.push_back(critical[n].size() - ranks[n] - (n > 0 ? ranks[n - 1] : 0));
  }
  return dims;
}

MorseComplex morse_complex(const ComplexGraph& g, const Matching& m) {
  const MatchingReport check = validate_matching(g, m);
  if (!check.valid()) throw Error("invalid-matching", "matching is not an acyclic matching");
  const Field f = g.field();

  // partner_down[(n, v)] = lower partner of an upper vertex; matched_up marks lower vertices.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> partner_down;
  std::set<std::pair<std::size_t, std::size_t>> matched;
  for (const MatchedEdge& e : m) {
    partner_down[{e.degree + 1, e.upper}] = e.lower;
    matched.insert({e.degree, e.lower});
    matched.insert({e.degree + 1, e.upper});
  }

  MorseComplex out;
  out.boundary_affected = check.touches_boundary;
  std::vector<std::vector<std::size_t>> position(g.top() + 1);
  for (std::size_t n = 0; n <= g.top(); ++n) {
    position[n].assign(g.vertex_count(n), SIZE_MAX);
    std::vector<std::size_t> crit;
    for (std::size_t v = 0; v < g.vertex_count(n); ++v) {
      if (!matched.count({n, v})) {
        position[n][v] = crit.size();
        crit.push_back(v);
      }
    }
    out.critical.push_back(std::move(crit));
  }

  using Sparse = std::vector<SparseMatrix::Entry>;
  for (std::size_t n = 0; n < g.top(); ++n) {
    // flow[u]: weighted sum of paths from u (degree n+1) to critical vertices of degree n+1.
    // Such paths zigzag between degrees n+1 and n, because a path that climbs
    // to n+2 can only come back down onto matched vertices.
    std::map<std::size_t, Sparse> flow;
    std::function<const Sparse&(std::size_t)> paths = [&](std::size_t u) -> const Sparse& {
      if (const auto it = flow.find(u); it != flow.end()) return it->second;
      Sparse acc;
      if (position[n + 1][u] != SIZE_MAX) {
        acc.push_back({static_cast<std::uint32_t>(position[n + 1][u]), 1});
      } else if (const auto p = partner_down.find({n + 1, u}); p != partner_down.end()) {
        const std::size_t v = p->second;
        const Elem back = f.inv(g.weight(n, v, u));
        for (const auto& e : g.edges_up(n, v)) {
          if (e.col == u) continue;
          const Elem w = f.mul(back, e.value);
          for (const auto& t : paths(e.col)) acc.push_back({t.col, f.mul(w, t.value)});
        }
        canonicalize(acc);
      }
      return flow.emplace(u, std::move(acc)).first->second;
    };

    Matrix d(f, out.critical[n + 1].size(), out.critical[n].size());
    for (std::size_t j = 0; j < out.critical[n].size(); ++j) {
      for (const auto& e : g.edges_up(n, out.critical[n][j])) {
        for (const auto& t : paths(e.col)) d(t.col, j) ^= f.mul(e.value, t.value);
      }
    }
    out.differentials.push_back(std::move(d));
  }
  return out;
}

// Heisenberg

std::size_t HeisenbergMonomial::degree() const noexcept {
  std::size_t total = alpha;
  for (auto b : beta) total += b;
  for (auto c : gamma) total += c;
  return total;
}

bool operator<(const HeisenbergMonomial& x, const HeisenbergMonomial& y) {
  return std::tie(x.alpha, x.beta, x.gamma) < std::tie(y.alpha, y.beta, y.gamma);
}

std::vector<Arg> heisenberg_args(const HeisenbergMonomial& m) {
  const std::size_t l = m.beta.size();
  std::vector<Arg> args(m.alpha, 0);
  for (std::size_t i = 0; i < l; ++i) args.insert(args.end(), m.beta[i], static_cast<Arg>(1 + i));
  for (std::size_t i = 0; i < l; ++i) args.insert(args.end(), m.gamma[i], static_cast<Arg>(1 + l + i));
  return args;
}

HeisenbergMonomial heisenberg_monomial(std::span<const Arg> args, std::size_t l) {
  HeisenbergMonomial m{0, std::vector<std::size_t>(l, 0), std::vector<std::size_t>(l, 0)};
  for (Arg a : args) {
    if (a == 0) {
      ++m.alpha;
    } else if (a <= l) {
      ++m.beta[a - 1];
    } else if (a <= 2 * l) {
      ++m.gamma[a - 1 - l];
    } else {
      throw Error("parameter-range", "argument outside heisenberg(" + std::to_string(l) + ")");
    }
  }
  return m;
}

namespace {

/// 1-based largest index where beta_i, gamma_i both have parity `odd`; 0 when none.
std::size_t last_common(const HeisenbergMonomial& m, bool odd) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < m.beta.size(); ++i) {
    if ((m.beta[i] % 2 == 1) == odd && (m.gamma[i] % 2 == 1) == odd) k = i + 1;
  }
  return k;
}

}  // namespace

Matching heisenberg_matching(const ComplexGraph& g, std::size_t l) {
  const Module triv = trivial_module(heisenberg(l, g.field()));
  Matching out;
  SpacePtr lower = make_space(triv, 0, Flavor::symmetric);
  for (std::size_t n = 0; n < g.top(); ++n) {
    const SpacePtr upper = make_space(triv, n + 1, Flavor::symmetric);
    if (lower->dim() != g.vertex_count(n) || upper->dim() != g.vertex_count(n + 1)) {
      throw Error("dimension-mismatch", "graph is not the heisenberg(" + std::to_string(l) + ") complex");
    }
    for (std::size_t t = 0; t < lower->tuple_count(); ++t) {
      HeisenbergMonomial m = heisenberg_monomial(lower->tuple(t), l);
      const std::size_t k = last_common(m, false);
      if (m.alpha == 0 || k == 0 || k <= last_common(m, true)) continue;
      --m.alpha;
      ++m.beta[k - 1];
      ++m.gamma[k - 1];
      out.push_back({n, t, *upper->tuple_index(heisenberg_args(m))});
    }
    lower = upper;
  }
  return out;
}

std::pair<std::vector<HeisenbergMonomial>, std::vector<HeisenbergMonomial>> heisenberg_closed_form(
    std::size_t l, std::size_t n) {
  std::vector<HeisenbergMonomial> first, second;
  std::vector<std::size_t> exps(2 * l + 1, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t left) {
    if (pos + 1 == exps.size()) {
      exps[pos] = left;
      const HeisenbergMonomial m{exps[0], {exps.begin() + 1, exps.begin() + 1 + static_cast<std::ptrdiff_t>(l)},
                                 {exps.begin() + 1 + static_cast<std::ptrdiff_t>(l), exps.end()}};
      const std::size_t even = last_common(m, false);
      const std::size_t odd = last_common(m, true);
      if (m.alpha == 0 && even > odd) first.push_back(m);
      if (even == 0 && odd == 0) second.push_back(m);
      return;
    }
    for (std::size_t e = 0; e <= left; ++e) {
      exps[pos] = e;
      rec(pos + 1, left - e);
    }
  };
  rec(0, n);
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  return {first, second};
}

}  // namespace comlie
