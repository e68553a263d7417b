// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The comlie Authors

#include "comlie/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <utility>

#include "comlie/error.hpp"

namespace comlie {
namespace {

std::atomic<std::size_t> g_entry_cap{1'000'000};

void require(bool ok, const char* code, const std::string& what) {
  if (!ok) throw Error(code, what, ErrorKind::computation);
}

/// row += c * pivot, starting at column `from`.
void axpy(Field f, std::span<Elem> row, Elem c, std::span<const Elem> pivot, std::size_t from) {
  if (c == 0) return;
  if (c == 1) {
    for (std::size_t j = from; j < row.size(); ++j) row[j] ^= pivot[j];
    return;
  }
  for (std::size_t j = from; j < row.size(); ++j) {
    if (pivot[j] != 0) row[j] ^= f.mul(c, pivot[j]);
  }
}

Echelon reduce_generic(const Matrix& a) {
  const Field f = a.field();
  std::vector<Vec> rows;
  rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) rows.emplace_back(a.row(r).begin(), a.row(r).end());

  Echelon out;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    Vec& piv = rows[rank];
    if (const Elem lead = piv[c]; lead != 1) {
      const Elem s = f.inv(lead);
      for (std::size_t j = c; j < piv.size(); ++j) piv[j] = f.mul(piv[j], s);
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][c] != 0) axpy(f, rows[r], rows[r][c], piv, c);
    }
    out.pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  out.rows = std::move(rows);
  return out;
}

Echelon reduce_packed(const Matrix& a) {
  BitMatrix bits(a);
  Echelon out;
  out.pivots = bits.reduce();
  out.rows.reserve(out.pivots.size());
  for (std::size_t r = 0; r < out.pivots.size(); ++r) {
    Vec row(a.cols(), 0);
    for (std::size_t c = out.pivots[r]; c < a.cols(); ++c) row[c] = bits.get(r, c) ? 1 : 0;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::size_t entry_cap() noexcept { return g_entry_cap.load(); }

void set_entry_cap(std::size_t cap) {
  if (cap == 0) throw Error("parameter-range", "entry cap must be positive");
  g_entry_cap.store(cap);
}

// Matrix

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (cols != 0 && rows > entry_cap() / cols) {
    throw Error("cap-exceeded",
                std::to_string(rows) + "x" + std::to_string(cols) + " matrix exceeds entry cap " +
                    std::to_string(entry_cap()),
                ErrorKind::computation);
  }
  data_.assign(rows * cols, 0);
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, std::span<const Vec> rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, "dimension-mismatch", "row length differs from column count");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vec Matrix::apply(std::span<const Elem> x) const {
  require(x.size() == cols_, "dimension-mismatch", "vector length differs from column count");
  Vec y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    Elem acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc ^= field_.mul((*this)(r, c), x[c]);
    y[r] = acc;
  }
  return y;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.field_ == b.field_, "field-mismatch", "matrix product across fields");
  require(a.cols_ == b.rows_, "dimension-mismatch", "matrix product shape");
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (const Elem s = a(i, k); s != 0) axpy(a.field_, c.row(i), s, b.row(k), 0);
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.field_ == b.field_, "field-mismatch", "matrix sum across fields");
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "dimension-mismatch", "matrix sum shape");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] ^= b.data_[i];
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::dump() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << elem_to_hex((*this)(r, c));
    os << '\n';
  }
  return os.str();
}

// BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

BitMatrix::BitMatrix(const Matrix& m) : BitMatrix(m.rows(), m.cols()) {
  require(m.field().is_prime(), "field-mismatch", "bit-packed matrices are GF(2) only");
  for (std::size_t r = 0; r < rows_; ++r) {
    auto src = m.row(r);
    std::uint64_t* dst = row_ptr(r);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (src[c]) dst[c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
  const std::uint64_t mask = std::uint64_t{1} << (c % 64);
  auto& w = bits_[r * words_ + c / 64];
  w = v ? (w | mask) : (w & ~mask);
}

std::vector<std::size_t> BitMatrix::reduce() {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t p = rank;
    while (p < rows_ && !(bits_[p * words_ + w] & mask)) ++p;
    if (p == rows_) continue;
    if (p != rank) {
      std::swap_ranges(row_ptr(p), row_ptr(p) + words_, row_ptr(rank));
    }
    const std::uint64_t* piv = row_ptr(rank);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == rank) continue;
      std::uint64_t* row = row_ptr(r);
      if (row[w] & mask) {
        for (std::size_t k = w; k < words_; ++k) row[k] ^= piv[k];
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

Matrix BitMatrix::to_matrix() const {
  Matrix m(gf2(), rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = get(r, c) ? 1 : 0;
  return m;
}

// Elimination

Echelon row_reduce(const Matrix& a, Elimination how) {
  if (how == Elimination::automatic) {
    how = a.field().is_prime() ? Elimination::packed : Elimination::generic;
  }
  if (how == Elimination::packed) {
    require(a.field().is_prime(), "field-mismatch", "packed elimination needs GF(2)");
    return reduce_packed(a);
  }
  return reduce_generic(a);
}

std::size_t rank(const Matrix& a, Elimination how) { return row_reduce(a, how).pivots.size(); }

Subspace kernel_basis(const Matrix& a, Elimination how) {
  const Echelon e = row_reduce(a, how);
  std::vector<char> is_pivot(a.cols(), 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  std::vector<Vec> vectors;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(a.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = e.rows[i][f];
    vectors.push_back(std::move(v));
  }
  return Subspace::span(a.field(), a.cols(), vectors, how);
}

Subspace image_basis(const Matrix& a, Elimination how) {
  const Echelon e = row_reduce(a.transpose(), how);
  return Subspace::span(a.field(), a.rows(), e.rows, how);
}

std::optional<Vec> solve(const Matrix& a, std::span<const Elem> b, Elimination how) {
  require(b.size() == a.rows(), "dimension-mismatch", "right-hand side length");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), aug.row(r).begin());
    aug(r, a.cols()) = b[r];
  }
  const Echelon e = row_reduce(aug, how);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols(), 0);
  for (std::size_t i = 0; i < e.rows.size(); ++i) x[e.pivots[i]] = e.rows[i][a.cols()];
  return x;
}

// Subspace

Subspace::Subspace(Field field, std::size_t ambient_dim) : field_(field), ambient_(ambient_dim) {}

Subspace Subspace::span(Field field, std::size_t ambient_dim, std::span<const Vec> vectors,
                        Elimination how) {
  Subspace s(field, ambient_dim);
  if (vectors.empty()) return s;
  Echelon e = row_reduce(Matrix::from_rows(field, ambient_dim, vectors), how);
  s.basis_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::whole(Field field, std::size_t ambient_dim) {
  Subspace s(field, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vec v(ambient_dim, 0);
    v[i] = 1;
    s.basis_.push_back(std::move(v));
    s.pivots_.push_back(i);
  }
  return s;
}

Vec Subspace::reduce(Vec v) const {
  require(v.size() == ambient_, "dimension-mismatch",
          "vector length " + std::to_string(v.size()) + " vs ambient " + std::to_string(ambient_));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (const Elem c = v[pivots_[i]]; c != 0) axpy(field_, v, c, basis_[i], pivots_[i]);
  }
  return v;
}

bool Subspace::contains(std::span<const Elem> v) const {
  const Vec r = reduce(Vec(v.begin(), v.end()));
  return std::all_of(r.begin(), r.end(), [](Elem e) { return e == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  require(other.ambient_ == ambient_ && other.field_ == field_, "dimension-mismatch",
          "subspaces live in different spaces");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Vec& v) { return contains(v); });
}

std::optional<Vec> Subspace::coordinates(std::span<const Elem> v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

std::vector<Vec> quotient_basis(const Subspace& z, const Subspace& b) {
  if (z.ambient_dim() != b.ambient_dim() || !(z.field() == b.field())) {
    throw Error("dimension-mismatch", "quotient of subspaces in different spaces",
                ErrorKind::computation);
  }
  for (const Vec& v : b.basis()) {
    if (!z.contains(v)) {
      std::string text;
      for (Elem e : v) text += elem_to_hex(e);
      throw Error("containment", "B is not contained in Z; offending vector " + text,
                  ErrorKind::computation);
    }
  }
  std::vector<char> b_pivot(z.ambient_dim(), 0);
  for (auto p : b.pivots()) b_pivot[p] = 1;
  std::vector<Vec> out;
  for (std::size_t i = 0; i < z.dim(); ++i) {
    if (!b_pivot[z.pivots()[i]]) out.push_back(z.basis()[i]);
  }
  return out;
}

// SparseMatrix

SparseMatrix::SparseMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), offsets_{0} {}

void canonicalize(std::vector<SparseMatrix::Entry>& entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& x, const auto& y) { return x.col < y.col; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < entries.size();) {
    SparseMatrix::Entry e = entries[i++];
    while (i < entries.size() && entries[i].col == e.col) e.value ^= entries[i++].value;
    if (e.value != 0) entries[out++] = e;
  }
  entries.resize(out);
}

void SparseMatrix::append_row(std::vector<Entry> entries) {
  require(appended_rows() < rows_, "dimension-mismatch", "too many rows appended");
  canonicalize(entries);
  if (!entries.empty()) {
    require(entries.back().col < cols_, "dimension-mismatch", "column out of range");
  }
  entries_.insert(entries_.end(), entries.begin(), entries.end());
  offsets_.push_back(entries_.size());
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(field_, rows_, cols_);
  for (std::size_t r = 0; r < appended_rows(); ++r)
    for (const Entry& e : row(r)) m(r, e.col) = e.value;
  return m;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Entry> entries;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c)) entries.push_back({static_cast<std::uint32_t>(c), m(r, c)});
    }
    s.append_row(std::move(entries));
  }
  return s;
}

Vec SparseMatrix::apply(std::span<const Elem> x) const {
  require(x.size() == cols_, "dimension-mismatch", "vector length differs from column count");
  Vec y(rows_, 0);
  for (std::size_t r = 0; r < appended_rows(); ++r) {
    Elem acc = 0;
    for (const Entry& e : row(r)) acc ^= field_.mul(e.value, x[e.col]);
    y[r] = acc;
  }
  return y;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  require(a.field() == b.field(), "field-mismatch", "sparse product across fields");
  require(a.cols() == b.rows(), "dimension-mismatch", "sparse product shape");
  const Field f = a.field();
  SparseMatrix c(f, a.rows(), b.cols());
  std::vector<SparseMatrix::Entry> acc;
  for (std::size_t r = 0; r < a.appended_rows(); ++r) {
    acc.clear();
    for (const auto& ea : a.row(r)) {
      if (ea.col >= b.appended_rows()) continue;
      for (const auto& eb : b.row(ea.col)) acc.push_back({eb.col, f.mul(ea.value, eb.value)});
    }
    c.append_row(acc);
  }
  return c;
}

}  // namespace comlie
