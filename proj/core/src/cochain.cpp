// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The comlie Authors

#include "comlie/cochain.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <utility>

#include "comlie/error.hpp"

namespace comlie {
namespace {

std::atomic<std::size_t> g_tuple_cap{std::size_t{1} << 24};

std::uint64_t count_tuples(std::uint64_t d, std::uint64_t n, Flavor f) {
  switch (f) {
    case Flavor::symmetric:
      if (n == 0) return 1;
      if (d == 0) return 0;
      return binomial(d + n - 1, n);
    case Flavor::alternating:
      return n > d ? 0 : binomial(d, n);
    case Flavor::tensor: {
      std::uint64_t c = 1;
      for (std::uint64_t i = 0; i < n; ++i) {
        if (__builtin_mul_overflow(c, d, &c) || c > tuple_cap()) {
          throw Error("cap-exceeded", "tensor cochain space too large", ErrorKind::computation);
        }
      }
      return c;
    }
  }
  return 0;
}

/// Calls visit(tuple) for every canonical tuple of the flavor.
void for_each_tuple(std::size_t d, std::size_t n, Flavor f,
                    const std::function<void(std::span<const Arg>)>& visit) {
  std::vector<Arg> t(n);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == n) {
      visit(t);
      return;
    }
    std::size_t lo = 0;
    if (pos > 0 && f == Flavor::symmetric) lo = t[pos - 1];
    if (pos > 0 && f == Flavor::alternating) lo = t[pos - 1] + 1u;
    for (std::size_t a = lo; a < d; ++a) {
      t[pos] = static_cast<Arg>(a);
      rec(pos + 1);
    }
  };
  rec(0);
}

}  // namespace

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::symmetric:
      return "comm";
    case Flavor::alternating:
      return "alt";
    case Flavor::tensor:
      return "leibniz";
  }
  return "?";
}

Flavor parse_flavor(const std::string& text) {
  if (text == "comm" || text == "symmetric") return Flavor::symmetric;
  if (text == "alt" || text == "alternating") return Flavor::alternating;
  if (text == "leibniz" || text == "tensor") return Flavor::tensor;
  throw Error("unknown-flavor", "unknown flavor '" + text + "'");
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    // r * (n - i) is divisible by i + 1; split the division to delay overflow.
    const std::uint64_t g = std::gcd(r, i + 1);
    if (__builtin_mul_overflow(r / g, (n - i) / ((i + 1) / g), &r)) {
      throw Error("cap-exceeded", "binomial overflow", ErrorKind::computation);
    }
  }
  return r;
}

std::uint64_t sym_dim(std::uint64_t d, std::uint64_t n, std::uint64_t m) {
  std::uint64_t v = 0;
  if (__builtin_mul_overflow(count_tuples(d, n, Flavor::symmetric), m, &v)) {
    throw Error("cap-exceeded", "dimension overflow", ErrorKind::computation);
  }
  return v;
}

std::size_t tuple_cap() noexcept { return g_tuple_cap.load(); }

void set_tuple_cap(std::size_t cap) {
  if (cap == 0) throw Error("parameter-range", "tuple cap must be positive");
  g_tuple_cap.store(cap);
}

// CochainSpace

CochainSpace::CochainSpace(Module module, std::size_t degree, Flavor flavor)
    : module_(std::move(module)), degree_(degree), flavor_(flavor) {
  const std::size_t d = algebra().dim();
  const std::uint64_t count = count_tuples(d, degree, flavor);
  if (count > tuple_cap() || count * std::max<std::size_t>(degree, 1) > tuple_cap() * 8) {
    throw Error("cap-exceeded",
                to_string(flavor) + " cochains of degree " + std::to_string(degree) + " on a " +
                    std::to_string(d) + "-dim algebra: " + std::to_string(count) + " tuples",
                ErrorKind::computation);
  }
  tuple_count_ = static_cast<std::size_t>(count);

  const std::size_t top = d + degree + 1;
  binom_.assign((top + 1) * (degree + 2), 0);
  for (std::size_t c = 0; c <= top; ++c) {
    for (std::size_t k = 0; k <= degree + 1; ++k) {
      std::uint64_t v = 0;
      if (k == 0) {
        v = 1;
      } else if (c > 0) {
        v = binom_[(c - 1) * (degree + 2) + k - 1] + binom_[(c - 1) * (degree + 2) + k];
      }
      binom_[c * (degree + 2) + k] = v;
    }
  }

  tuples_.resize(tuple_count_ * degree_);
  for_each_tuple(d, degree_, flavor_, [&](std::span<const Arg> t) {
    const std::size_t r = rank_canonical(t);
    std::copy(t.begin(), t.end(), tuples_.begin() + static_cast<std::ptrdiff_t>(r * degree_));
  });
}

std::size_t CochainSpace::rank_canonical(std::span<const Arg> args) const {
  std::size_t r = 0;
  const std::size_t stride = degree_ + 2;
  switch (flavor_) {
    case Flavor::symmetric:
      for (std::size_t i = 0; i < args.size(); ++i) r += binom_[(args[i] + i) * stride + i + 1];
      break;
    case Flavor::alternating:
      for (std::size_t i = 0; i < args.size(); ++i) r += binom_[args[i] * stride + i + 1];
      break;
    case Flavor::tensor:
      for (Arg a : args) r = r * algebra().dim() + a;
      break;
  }
  return r;
}

std::optional<std::size_t> CochainSpace::tuple_index(std::span<const Arg> args) const {
  if (args.size() != degree_) {
    throw Error("dimension-mismatch", "expected " + std::to_string(degree_) + " arguments",
                ErrorKind::computation);
  }
  if (flavor_ == Flavor::tensor) return rank_canonical(args);
  Arg buf[32];
  std::vector<Arg> big;
  std::span<Arg> sorted;
  if (args.size() <= 32) {
    std::copy(args.begin(), args.end(), buf);
    sorted = std::span<Arg>(buf, args.size());
  } else {
    big.assign(args.begin(), args.end());
    sorted = big;
  }
  std::sort(sorted.begin(), sorted.end());
  if (flavor_ == Flavor::alternating &&
      std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return std::nullopt;
  }
  return rank_canonical(sorted);
}

std::string CochainSpace::label(std::size_t basis_index) const {
  const std::size_t m = module_.dim();
  const auto t = tuple(basis_index / m);
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + algebra().name(t[i]);
  s += ")";
  if (m > 1) s += ":" + std::to_string(basis_index % m);
  return s;
}

bool CochainSpace::same_as(const CochainSpace& other) const {
  return this == &other ||
         (degree_ == other.degree_ && flavor_ == other.flavor_ && module_.dim() == other.module_.dim() &&
          algebra() == other.algebra() && module_.actions() == other.module_.actions());
}

SpacePtr make_space(const Module& module, std::size_t degree, Flavor flavor) {
  return std::make_shared<const CochainSpace>(module, degree, flavor);
}

// Cochain

Cochain::Cochain(SpacePtr space) : space_(std::move(space)), coeffs_(space_->dim(), 0) {}

Cochain::Cochain(SpacePtr space, Vec coeffs) : space_(std::move(space)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != space_->dim()) {
    throw Error("dimension-mismatch", "coefficient vector does not match the cochain space",
                ErrorKind::computation);
  }
}

Cochain Cochain::basis(SpacePtr space, std::size_t index) {
  Cochain c(std::move(space));
  c.coeffs_.at(index) = 1;
  return c;
}

bool Cochain::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Elem e) { return e == 0; });
}

Vec Cochain::value(std::span<const Arg> args) const {
  const std::size_t m = space_->module().dim();
  Vec out(m, 0);
  if (const auto t = space_->tuple_index(args)) {
    std::copy_n(coeffs_.begin() + static_cast<std::ptrdiff_t>(*t * m), m, out.begin());
  }
  return out;
}

Cochain& Cochain::operator+=(const Cochain& other) {
  if (!space_->same_as(other.space())) {
    throw Error("space-mismatch", "adding cochains from different spaces", ErrorKind::computation);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] ^= other.coeffs_[i];
  return *this;
}

Cochain Cochain::scaled(Elem c) const {
  Cochain out = *this;
  const Field f = space_->field();
  for (Elem& e : out.coeffs_) e = f.mul(e, c);
  return out;
}

bool operator==(const Cochain& a, const Cochain& b) {
  return a.space_->same_as(*b.space_) && a.coeffs_ == b.coeffs_;
}

// Differential

Differential::Differential(SpacePtr source)
    : source_(std::move(source)),
      target_(make_space(source_->module(), source_->degree() + 1, source_->flavor())) {}

void Differential::contributions(std::size_t target_tuple, std::vector<Contribution>& out) const {
  out.clear();
  const CochainSpace& src = *source_;
  const Algebra& alg = src.algebra();
  const auto t = target_->tuple(target_tuple);
  const std::size_t len = t.size();
  Arg buf[64];
  std::span<Arg> args(buf, len == 0 ? 0 : len - 1);

  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      const auto br = alg.bracket(t[i], t[j]);
      if (br.empty()) continue;
      for (const Term& term : br) {
        if (src.flavor() == Flavor::tensor) {
          std::size_t p = 0;
          for (std::size_t q = 0; q < len; ++q) {
            if (q == j) continue;
            args[p++] = q == i ? static_cast<Arg>(term.index) : t[q];
          }
          out.push_back({src.rank_canonical(args), term.coeff, 0});
        } else {
          std::size_t p = 0;
          args[p++] = static_cast<Arg>(term.index);
          for (std::size_t q = 0; q < len; ++q) {
            if (q != i && q != j) args[p++] = t[q];
          }
          if (const auto s = src.tuple_index(args)) out.push_back({*s, term.coeff, 0});
        }
      }
    }
  }
  if (src.module().is_trivial()) return;
  for (std::size_t i = 0; i < len; ++i) {
    std::size_t p = 0;
    for (std::size_t q = 0; q < len; ++q) {
      if (q != i) args[p++] = t[q];
    }
    // Dropping one entry keeps every flavor's canonical order.
    out.push_back({src.rank_canonical(args), kAction, t[i]});
  }
}

void Differential::emit(std::span<const Contribution> terms, std::size_t r,
                        std::vector<SparseMatrix::Entry>& out) const {
  out.clear();
  const CochainSpace& src = *source_;
  for (const Contribution& c : terms) {
    if (c.coeff != kAction) {
      out.push_back({static_cast<std::uint32_t>(src.index(c.source_tuple, r)), c.coeff});
    } else {
      for (const Term& a : src.module().action_row(c.acting, r)) {
        out.push_back({static_cast<std::uint32_t>(src.index(c.source_tuple, a.index)), a.coeff});
      }
    }
  }
  canonicalize(out);
}

void Differential::row(std::size_t target_index, std::vector<SparseMatrix::Entry>& out) const {
  const std::size_t m = target_->module().dim();
  std::vector<Contribution> terms;
  contributions(target_index / m, terms);
  emit(terms, target_index % m, out);
}

SparseMatrix Differential::sparse() const {
  const std::size_t m = target_->module().dim();
  SparseMatrix s(source_->field(), target_->dim(), source_->dim());
  std::vector<Contribution> terms;
  std::vector<SparseMatrix::Entry> row;
  for (std::size_t t = 0; t < target_->tuple_count(); ++t) {
    contributions(t, terms);
    for (std::size_t r = 0; r < m; ++r) {
      emit(terms, r, row);
      s.append_row(row);
    }
  }
  return s;
}

Matrix Differential::dense() const { return sparse().to_dense(); }

Cochain Differential::apply(const Cochain& phi) const {
  if (!phi.space().same_as(*source_)) {
    throw Error("space-mismatch", "differential applied to a cochain of another space",
                ErrorKind::computation);
  }
  return Cochain(target_, sparse().apply(phi.coeffs()));
}

Matrix differential_matrix(const Module& module, std::size_t n, Flavor flavor) {
  return Differential(make_space(module, n, flavor)).dense();
}

bool square_is_zero(const Module& module, std::size_t n, Flavor flavor) {
  const Differential first(make_space(module, n, flavor));
  const SparseMatrix d1 = first.sparse();
  const Differential second(first.target());
  const Field f = module.algebra().field();

  Vec acc(first.source()->dim(), 0);
  std::vector<std::uint32_t> touched;
  std::vector<SparseMatrix::Entry> row;
  for (std::size_t r = 0; r < second.target()->dim(); ++r) {
    second.row(r, row);
    touched.clear();
    for (const auto& e : row) {
      for (const auto& g : d1.row(e.col)) {
        if (acc[g.col] == 0) touched.push_back(g.col);
        acc[g.col] ^= f.mul(e.value, g.value);
      }
    }
    bool zero = true;
    for (auto c : touched) {
      zero = zero && acc[c] == 0;
      acc[c] = 0;
    }
    if (!zero) return false;
  }
  return true;
}

// Operators on cochains

Vec evaluate(const Cochain& phi, std::span<const Vec> args) {
  const CochainSpace& space = phi.space();
  if (args.size() != space.degree()) {
    throw Error("dimension-mismatch", "evaluate needs exactly degree() arguments",
                ErrorKind::computation);
  }
  const Field f = space.field();
  const std::size_t d = space.algebra().dim();
  Vec out(space.module().dim(), 0);
  std::vector<Arg> tuple(args.size());
  std::function<void(std::size_t, Elem)> rec = [&](std::size_t pos, Elem weight) {
    if (pos == args.size()) {
      const Vec v = phi.value(tuple);
      for (std::size_t r = 0; r < out.size(); ++r) out[r] ^= f.mul(weight, v[r]);
      return;
    }
    for (std::size_t a = 0; a < d; ++a) {
      if (args[pos][a] == 0) continue;
      tuple[pos] = static_cast<Arg>(a);
      rec(pos + 1, f.mul(weight, args[pos][a]));
    }
  };
  for (const Vec& x : args) {
    if (x.size() != d) {
      throw Error("dimension-mismatch", "argument vector has wrong length", ErrorKind::computation);
    }
  }
  rec(0, 1);
  return out;
}

Cochain contract(std::span<const Elem> x, const Cochain& phi) {
  const CochainSpace& space = phi.space();
  if (space.degree() == 0) {
    throw Error("parameter-range", "contraction needs a cochain of degree >= 1", ErrorKind::computation);
  }
  const Field f = space.field();
  const std::size_t m = space.module().dim();
  auto out_space = make_space(space.module(), space.degree() - 1, space.flavor());
  Cochain out(out_space);
  std::vector<Arg> args(space.degree());
  for (std::size_t t = 0; t < out_space->tuple_count(); ++t) {
    const auto s = out_space->tuple(t);
    std::copy(s.begin(), s.end(), args.begin() + 1);
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k] == 0) continue;
      args[0] = static_cast<Arg>(k);
      const Vec v = phi.value(args);
      for (std::size_t r = 0; r < m; ++r) out.coeffs()[out_space->index(t, r)] ^= f.mul(x[k], v[r]);
    }
  }
  return out;
}

Cochain lie_derivative(std::span<const Elem> x, const Cochain& phi) {
  const CochainSpace& space = phi.space();
  const Algebra& alg = space.algebra();
  const Field f = space.field();
  const std::size_t m = space.module().dim();
  const Matrix act = space.module().action_of(x);
  std::vector<Vec> ad_x;
  for (std::size_t j = 0; j < alg.dim(); ++j) ad_x.push_back(alg.bracket(x, alg.basis_vector(j)));

  Cochain out(phi.space_ptr());
  std::vector<Arg> args(space.degree());
  for (std::size_t t = 0; t < space.tuple_count(); ++t) {
    const auto s = space.tuple(t);
    const Vec here = phi.value(s);
    const Vec moved = act.apply(here);
    for (std::size_t r = 0; r < m; ++r) out.coeffs()[space.index(t, r)] ^= moved[r];
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::copy(s.begin(), s.end(), args.begin());
      for (std::size_t l = 0; l < alg.dim(); ++l) {
        const Elem c = ad_x[s[i]][l];
        if (c == 0) continue;
        args[i] = static_cast<Arg>(l);
        const Vec v = phi.value(args);
        for (std::size_t r = 0; r < m; ++r) out.coeffs()[space.index(t, r)] ^= f.mul(c, v[r]);
      }
    }
  }
  return out;
}

namespace {
int width(Flavor f) {
  switch (f) {
    case Flavor::alternating:
      return 0;
    case Flavor::symmetric:
      return 1;
    case Flavor::tensor:
      return 2;
  }
  return 0;
}
}  // namespace

Cochain include(const Cochain& phi, Flavor to) {
  const CochainSpace& from = phi.space();
  if (width(to) < width(from.flavor())) {
    throw Error("flavor-mismatch", "can only include into a wider flavor", ErrorKind::computation);
  }
  auto space = make_space(from.module(), from.degree(), to);
  return Cochain(space, inclusion_matrix(from, *space).apply(phi.coeffs()));
}

Matrix inclusion_matrix(const CochainSpace& from, const CochainSpace& to) {
  if (from.degree() != to.degree() || from.module().dim() != to.module().dim() ||
      !(from.algebra() == to.algebra())) {
    throw Error("space-mismatch", "inclusion between unrelated cochain spaces", ErrorKind::computation);
  }
  const std::size_t m = from.module().dim();
  Matrix inc(from.field(), to.dim(), from.dim());
  for (std::size_t t = 0; t < to.tuple_count(); ++t) {
    if (const auto s = from.tuple_index(to.tuple(t))) {
      for (std::size_t r = 0; r < m; ++r) inc(to.index(t, r), from.index(*s, r)) = 1;
    }
  }
  return inc;
}

}  // namespace comlie
