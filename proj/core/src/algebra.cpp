// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The comlie Authors

#include "comlie/algebra.hpp"

#include <algorithm>
#include <utility>

#include "comlie/error.hpp"

namespace comlie {
namespace {

bool is_zero(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

SparseVec to_sparse(std::span<const Elem> v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i]) out.push_back({static_cast<std::uint32_t>(i), v[i]});
  }
  return out;
}

/// out += c * [x, e_k] for sparse x.
void add_bracket(const Algebra& a, std::span<const Term> x, std::size_t k, Elem c, Vec& out) {
  const Field f = a.field();
  for (const Term& t : x) {
    const Elem s = f.mul(c, t.coeff);
    for (const Term& u : a.bracket(t.index, k)) out[u.index] ^= f.mul(s, u.coeff);
  }
}

std::string vec_text(std::span<const Elem> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + elem_to_hex(v[i]);
  return s + ")";
}

}  // namespace

// Algebra

Algebra::Algebra(Field field, std::vector<std::string> names)
    : field_(field), names_(std::move(names)), table_(dim() * (dim() + 1) / 2) {}

std::optional<std::size_t> Algebra::index_of(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

void Algebra::set_bracket(std::size_t i, std::size_t j, std::span<const Elem> value) {
  if (value.size() != dim()) {
    throw Error("dimension-mismatch", "bracket value has wrong length");
  }
  set_bracket(i, j, to_sparse(value));
}

void Algebra::set_bracket(std::size_t i, std::size_t j, SparseVec value) {
  if (i >= dim() || j >= dim()) throw Error("dimension-mismatch", "basis index out of range");
  std::sort(value.begin(), value.end(), [](const Term& x, const Term& y) { return x.index < y.index; });
  SparseVec clean;
  for (const Term& t : value) {
    if (t.index >= dim() || !field_.contains(t.coeff)) {
      throw Error("dimension-mismatch", "bracket term out of range");
    }
    if (!clean.empty() && clean.back().index == t.index) {
      clean.back().coeff ^= t.coeff;
    } else {
      clean.push_back(t);
    }
  }
  std::erase_if(clean, [](const Term& t) { return t.coeff == 0; });
  table_[pair_index(i, j)] = std::move(clean);
}

Vec Algebra::bracket_dense(std::size_t i, std::size_t j) const {
  Vec out(dim(), 0);
  for (const Term& t : bracket(i, j)) out[t.index] = t.coeff;
  return out;
}

Vec Algebra::bracket(std::span<const Elem> x, std::span<const Elem> y) const {
  if (x.size() != dim() || y.size() != dim()) {
    throw Error("dimension-mismatch", "bracket arguments have wrong length", ErrorKind::computation);
  }
  Vec out(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!y[j]) continue;
      const Elem c = field_.mul(x[i], y[j]);
      for (const Term& t : bracket(i, j)) out[t.index] ^= field_.mul(c, t.coeff);
    }
  }
  return out;
}

Matrix Algebra::ad(std::span<const Elem> x) const {
  Matrix m(field_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    const Vec col = bracket(x, basis_vector(j));
    for (std::size_t k = 0; k < dim(); ++k) m(k, j) = col[k];
  }
  return m;
}

Vec Algebra::basis_vector(std::size_t i) const {
  Vec v(dim(), 0);
  v.at(i) = 1;
  return v;
}

// Axioms and structure

AxiomReport check_axioms(const Algebra& a) {
  AxiomReport report;
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      for (std::size_t k = j; k < d; ++k) {
        Vec defect(d, 0);
        add_bracket(a, a.bracket(i, j), k, 1, defect);
        add_bracket(a, a.bracket(k, i), j, 1, defect);
        add_bracket(a, a.bracket(j, k), i, 1, defect);
        if (!is_zero(defect)) report.violations.push_back({i, j, k, std::move(defect)});
      }
    }
  }
  return report;
}

bool is_lie(const Algebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!a.bracket(i, i).empty()) return false;
  }
  return true;
}

Subspace square_ideal(const Algebra& a) {
  std::vector<Vec> squares;
  for (std::size_t i = 0; i < a.dim(); ++i) squares.push_back(a.bracket_dense(i, i));
  Subspace s = Subspace::span(a.field(), a.dim(), squares);
  for (const Vec& v : s.basis()) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (!is_zero(a.bracket(v, a.basis_vector(j)))) {
        throw Error("inconsistent",
                    "square " + vec_text(v) + " does not commute with " + a.name(j) +
                        "; the presentation violates Jacobi");
      }
    }
  }
  return s;
}

Subspace derived_subalgebra(const Algebra& a) {
  std::vector<Vec> products;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) products.push_back(a.bracket_dense(i, j));
  return Subspace::span(a.field(), a.dim(), products);
}

Quotient quotient_by(const Algebra& a, const Subspace& ideal) {
  if (ideal.ambient_dim() != a.dim() || !(ideal.field() == a.field())) {
    throw Error("dimension-mismatch", "ideal lives in a different space");
  }
  for (std::size_t s = 0; s < ideal.dim(); ++s) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (!ideal.contains(a.bracket(ideal.basis()[s], a.basis_vector(j)))) {
        throw Error("not-ideal", "[" + vec_text(ideal.basis()[s]) + ", " + a.name(j) +
                                     "] leaves the subspace");
      }
    }
  }
  std::vector<char> pivot(a.dim(), 0);
  for (auto p : ideal.pivots()) pivot[p] = 1;
  std::vector<std::size_t> keep;
  std::vector<std::string> names;
  for (std::size_t j = 0; j < a.dim(); ++j) {
    if (!pivot[j]) {
      keep.push_back(j);
      names.push_back(a.name(j));
    }
  }

  Matrix projection(a.field(), keep.size(), a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const Vec r = ideal.reduce(a.basis_vector(j));
    for (std::size_t q = 0; q < keep.size(); ++q) projection(q, j) = r[keep[q]];
  }
  Algebra out(a.field(), names);
  for (std::size_t x = 0; x < keep.size(); ++x) {
    for (std::size_t y = x; y < keep.size(); ++y) {
      const Vec r = ideal.reduce(a.bracket_dense(keep[x], keep[y]));
      Vec value(keep.size());
      for (std::size_t q = 0; q < keep.size(); ++q) value[q] = r[keep[q]];
      out.set_bracket(x, y, value);
    }
  }
  return {std::move(out), std::move(projection)};
}

// Modules

std::vector<ModuleViolation> check_module_axioms(const Algebra& a, std::size_t m,
                                                 std::span<const Matrix> actions) {
  std::vector<ModuleViolation> out;
  if (actions.size() != a.dim()) {
    throw Error("dimension-mismatch", "need one action matrix per basis element");
  }
  for (const Matrix& act : actions) {
    if (act.rows() != m || act.cols() != m || !(act.field() == a.field())) {
      throw Error("dimension-mismatch", "action matrices must be square, equal-sized, same field");
    }
  }
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      Matrix defect = actions[i] * actions[j] + actions[j] * actions[i];
      for (const Term& t : a.bracket(i, j)) {
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t c = 0; c < m; ++c)
            defect(r, c) ^= a.field().mul(t.coeff, actions[t.index](r, c));
      }
      if (!defect.is_zero()) out.push_back({i, j, std::move(defect)});
    }
  }
  return out;
}

Module::Module(Algebra algebra, std::size_t dim, std::vector<Matrix> actions, std::string kind)
    : algebra_(std::move(algebra)), dim_(dim), actions_(std::move(actions)), kind_(std::move(kind)) {
  const auto bad = check_module_axioms(algebra_, dim_, actions_);
  if (!bad.empty()) {
    const auto& v = bad.front();
    throw Error("module-axiom", "rho([" + algebra_.name(v.i) + "," + algebra_.name(v.j) +
                                    "]) != rho(x)rho(y)+rho(y)rho(x); defect:\n" + v.defect.dump());
  }
  sparse_rows_.resize(actions_.size() * dim_);
  for (std::size_t i = 0; i < actions_.size(); ++i)
    for (std::size_t r = 0; r < dim_; ++r) sparse_rows_[i * dim_ + r] = to_sparse(actions_[i].row(r));
}

bool Module::is_trivial() const noexcept {
  return std::all_of(actions_.begin(), actions_.end(), [](const Matrix& m) { return m.is_zero(); });
}

Matrix Module::action_of(std::span<const Elem> x) const {
  const Field f = algebra_.field();
  Matrix out(f, dim_, dim_);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    for (std::size_t r = 0; r < dim_; ++r)
      for (const Term& t : action_row(i, r)) out(r, t.index) ^= f.mul(x[i], t.coeff);
  }
  return out;
}

Vec Module::act(std::span<const Elem> x, std::span<const Elem> v) const {
  return action_of(x).apply(v);
}

Module trivial_module(const Algebra& a) {
  std::vector<Matrix> actions(a.dim(), Matrix(a.field(), 1, 1));
  return Module(a, 1, std::move(actions), "trivial");
}

Module adjoint_module(const Algebra& a) {
  std::vector<Matrix> actions;
  for (std::size_t i = 0; i < a.dim(); ++i) actions.push_back(a.ad(a.basis_vector(i)));
  return Module(a, a.dim(), std::move(actions), "adjoint");
}

Module dual_module(const Algebra& a) {
  std::vector<Matrix> actions;
  for (std::size_t i = 0; i < a.dim(); ++i) actions.push_back(a.ad(a.basis_vector(i)).transpose());
  return Module(a, a.dim(), std::move(actions), "dual");
}

Module module_from_actions(const Algebra& a, std::vector<Matrix> actions) {
  const std::size_t m = actions.empty() ? 1 : actions.front().rows();
  return Module(a, m, std::move(actions), "custom");
}

// Derivations

DerivationSpace derivation_space(const Algebra& a) {
  const std::size_t d = a.dim();
  const Field f = a.field();
  const auto unknown = [d](std::size_t k, std::size_t j) { return k * d + j; };

  std::vector<Vec> rows;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        Vec row(d * d, 0);
        // D([e_i, e_j])_k
        for (const Term& t : a.bracket(i, j)) row[unknown(k, t.index)] ^= t.coeff;
        // [D e_i, e_j]_k + [e_i, D e_j]_k
        for (std::size_t s = 0; s < d; ++s) {
          for (const Term& u : a.bracket(s, j)) {
            if (u.index == k) row[unknown(s, i)] ^= u.coeff;
          }
          for (const Term& u : a.bracket(i, s)) {
            if (u.index == k) row[unknown(s, j)] ^= u.coeff;
          }
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
  }
  Subspace all = rows.empty() ? Subspace::whole(f, d * d)
                              : kernel_basis(Matrix::from_rows(f, d * d, rows));

  std::vector<Vec> ads;
  for (std::size_t i = 0; i < d; ++i) {
    const Matrix m = a.ad(a.basis_vector(i));
    Vec flat(d * d);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) flat[unknown(k, j)] = m(k, j);
    ads.push_back(std::move(flat));
  }
  return {std::move(all), Subspace::span(f, d * d, ads)};
}

// Builders

Algebra abelian(std::size_t d, Field field) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= d; ++i) names.push_back("e" + std::to_string(i));
  return Algebra(field, std::move(names));
}

Algebra dim2(Field field) {
  Algebra a(field, {"a", "b"});
  a.set_bracket(0, 1, SparseVec{{0, 1}});
  return a;
}

Algebra heisenberg(std::size_t l, Field field) {
  if (l < 1) throw Error("parameter-range", "heisenberg needs l >= 1");
  std::vector<std::string> names{"a"};
  for (std::size_t i = 1; i <= l; ++i) names.push_back("b" + std::to_string(i));
  for (std::size_t i = 1; i <= l; ++i) names.push_back("c" + std::to_string(i));
  Algebra h(field, std::move(names));
  for (std::size_t i = 1; i <= l; ++i) h.set_bracket(i, l + i, SparseVec{{0, 1}});
  return h;
}

Algebra zassenhaus_e(unsigned n, Field field) {
  if (n < 2 || n > 12) throw Error("parameter-range", "zassenhaus_e needs 2 <= n <= 12");
  const long top = (1L << n) - 3;
  std::vector<std::string> names;
  for (long i = -1; i <= top; ++i) names.push_back("e" + std::to_string(i));
  Algebra w(field, std::move(names));
  // Basis index = degree + 1.
  for (long i = -1; i <= top; ++i) {
    for (long j = i; j <= top; ++j) {
      const long s = i + j;
      if (s < -1 || s > top) continue;
      if (binom_mod2(static_cast<std::uint64_t>(s + 2), static_cast<std::uint64_t>(i + 1))) {
        w.set_bracket(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(j + 1),
                      SparseVec{{static_cast<std::uint32_t>(s + 1), 1}});
      }
    }
  }
  return w;
}

Algebra zassenhaus_f(unsigned n) {
  if (n < 2 || n > 12) throw Error("parameter-range", "zassenhaus_f needs 2 <= n <= 12");
  const Field f = make_field(n);
  const std::uint32_t q = f.order();
  std::vector<std::string> names;
  for (std::uint32_t alpha = 1; alpha < q; ++alpha) names.push_back("f" + elem_to_hex(static_cast<Elem>(alpha)));
  Algebra w(f, std::move(names));
  // Element alpha sits at index alpha - 1.
  for (std::uint32_t x = 1; x < q; ++x) {
    for (std::uint32_t y = x + 1; y < q; ++y) {
      const auto s = static_cast<Elem>(x ^ y);
      w.set_bracket(x - 1, y - 1, SparseVec{{static_cast<std::uint32_t>(s - 1), s}});
    }
  }
  return w;
}

Subalgebra span_subalgebra(const Algebra& a, std::span<const Vec> generators, Closure mode) {
  const Field f = a.field();
  Subspace s = Subspace::span(f, a.dim(), generators);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Vec> vectors = s.basis();
    for (std::size_t x = 0; x < s.dim(); ++x) {
      for (std::size_t y = x; y < s.dim(); ++y) {
        Vec p = a.bracket(s.basis()[x], s.basis()[y]);
        if (s.contains(p)) continue;
        if (mode == Closure::require_closed) {
          throw Error("not-closed", "bracket " + vec_text(p) + " of generators leaves their span");
        }
        vectors.push_back(std::move(p));
        grew = true;
      }
    }
    if (grew) s = Subspace::span(f, a.dim(), vectors);
  }

  std::vector<std::string> names;
  for (std::size_t x = 0; x < s.dim(); ++x) {
    const Vec& v = s.basis()[x];
    const bool unit = std::count_if(v.begin(), v.end(), [](Elem e) { return e != 0; }) == 1;
    names.push_back(unit ? a.name(s.pivots()[x]) : "s" + std::to_string(x));
  }
  Algebra sub(f, std::move(names));
  for (std::size_t x = 0; x < s.dim(); ++x) {
    for (std::size_t y = x; y < s.dim(); ++y) {
      const Vec p = a.bracket(s.basis()[x], s.basis()[y]);
      sub.set_bracket(x, y, *s.coordinates(p));
    }
  }
  return {std::move(sub), s.basis()};
}

namespace {

Field target_field(Field from, unsigned degree) {
  return degree == from.degree() ? from : make_field(degree);
}

void require_prime_constant(Elem e, Field from, unsigned degree) {
  if (degree != from.degree() && e > 1) {
    throw Error("unsupported-embedding",
                "constant " + elem_to_hex(e) + " is not in the prime field; only prime-field "
                "presentations can be moved to another field");
  }
}

}  // namespace

Algebra change_field(const Algebra& a, unsigned degree) {
  const Field to = target_field(a.field(), degree);
  Algebra out(to, a.names());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      SparseVec v(a.bracket(i, j).begin(), a.bracket(i, j).end());
      for (const Term& t : v) require_prime_constant(t.coeff, a.field(), degree);
      out.set_bracket(i, j, std::move(v));
    }
  }
  return out;
}

Module change_field(const Module& m, unsigned degree) {
  const Algebra a = change_field(m.algebra(), degree);
  std::vector<Matrix> actions;
  for (const Matrix& act : m.actions()) {
    Matrix out(a.field(), act.rows(), act.cols());
    for (std::size_t r = 0; r < act.rows(); ++r) {
      for (std::size_t c = 0; c < act.cols(); ++c) {
        require_prime_constant(act(r, c), act.field(), degree);
        out(r, c) = act(r, c);
      }
    }
    actions.push_back(std::move(out));
  }
  return Module(a, m.dim(), std::move(actions), m.kind());
}

Algebra extend_by_form(const Algebra& a, const Matrix& form, const std::string& central_name) {
  const std::size_t d = a.dim();
  if (form.rows() != d || form.cols() != d || !(form.field() == a.field())) {
    throw Error("dimension-mismatch", "form must be a dim x dim matrix over the algebra's field");
  }
  if (!(form == form.transpose())) throw Error("not-symmetric", "extension form must be symmetric");
  auto names = a.names();
  names.push_back(central_name);
  Algebra out(a.field(), std::move(names));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      SparseVec v(a.bracket(i, j).begin(), a.bracket(i, j).end());
      if (form(i, j)) v.push_back({static_cast<std::uint32_t>(d), form(i, j)});
      out.set_bracket(i, j, std::move(v));
    }
  }
  return out;
}

}  // namespace comlie
