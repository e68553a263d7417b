// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The comlie Authors

#ifndef COMLIE_LINALG_HPP
#define COMLIE_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "comlie/field.hpp"

namespace comlie {

/// Coefficient vector; the field travels separately with the owning object.
using Vec = std::vector<Elem>;

/// Maximum number of entries of a dense Matrix (default 10^6). Larger
/// requests throw Error("cap-exceeded").
std::size_t entry_cap() noexcept;
void set_entry_cap(std::size_t cap);

/// Dense row-major matrix over GF(2^k).
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix identity(Field field, std::size_t n);
  /// Matrix whose rows are `rows` (all of length `cols`).
  static Matrix from_rows(Field field, std::size_t cols, std::span<const Vec> rows);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar at(std::size_t r, std::size_t c) const { return field_(data_.at(r * cols_ + c)); }

  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vec column(std::size_t c) const;

  Matrix transpose() const;
  Vec apply(std::span<const Elem> x) const;
  bool is_zero() const noexcept;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// One row per line, entries as space-separated hex scalars.
  std::string dump() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

/// Bit-packed matrix over GF(2), 64 columns per word.
class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols);
  /// Requires a GF(2) matrix.
  explicit BitMatrix(const Matrix& m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool v);

  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> reduce();
  Matrix to_matrix() const;

 private:
  std::uint64_t* row_ptr(std::size_t r) { return bits_.data() + r * words_; }

  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Which elimination kernel to run. `automatic` picks `packed` over GF(2).
enum class Elimination { automatic, generic, packed };

/// Nonzero rows of the reduced row echelon form (leftmost pivots, pivot
/// entries 1, pivot columns cleared) and their pivot columns.
struct Echelon {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(const Matrix& a, Elimination how = Elimination::automatic);

/// Linear subspace of Field^ambient kept as a canonical RREF basis.
class Subspace {
 public:
  Subspace(Field field, std::size_t ambient_dim);
  static Subspace span(Field field, std::size_t ambient_dim, std::span<const Vec> vectors,
                       Elimination how = Elimination::automatic);
  static Subspace whole(Field field, std::size_t ambient_dim);

  Field field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Remainder of v after clearing every pivot column; zero iff v is in the subspace.
  Vec reduce(Vec v) const;
  bool contains(std::span<const Elem> v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in basis(), or nullopt if v is not in the subspace.
  std::optional<Vec> coordinates(std::span<const Elem> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const Matrix& a, Elimination how = Elimination::automatic);
/// Right kernel {v : A v = 0}.
Subspace kernel_basis(const Matrix& a, Elimination how = Elimination::automatic);
/// Column space of A.
Subspace image_basis(const Matrix& a, Elimination how = Elimination::automatic);
/// Some x with A x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& a, std::span<const Elem> b,
                         Elimination how = Elimination::automatic);
/// Vectors of Z whose classes form a basis of Z/B: the RREF basis vectors of
/// Z whose pivots are not pivots of B. Throws Error("containment") if B is
/// not inside Z.
std::vector<Vec> quotient_basis(const Subspace& z, const Subspace& b);

/// Row-compressed sparse matrix. Rows are appended in order; each row is
/// kept sorted by column with no zero entries.
class SparseMatrix {
 public:
  struct Entry {
    std::uint32_t col;
    Elem value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SparseMatrix(Field field, std::size_t rows, std::size_t cols);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept { return entries_.size(); }

  /// Sorts, merges duplicates (adding values) and drops zeros, then appends.
  void append_row(std::vector<Entry> entries);
  std::span<const Entry> row(std::size_t r) const {
    return {entries_.data() + offsets_[r], offsets_[r + 1] - offsets_[r]};
  }
  std::size_t appended_rows() const noexcept { return offsets_.size() - 1; }

  Matrix to_dense() const;
  static SparseMatrix from_dense(const Matrix& m);
  Vec apply(std::span<const Elem> x) const;
  bool is_zero() const noexcept { return entries_.empty(); }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::size_t> offsets_;
  std::vector<Entry> entries_;
};

/// Puts an entry list into canonical form (sorted, merged, no zeros).
void canonicalize(std::vector<SparseMatrix::Entry>& entries);

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace comlie

#endif  // COMLIE_LINALG_HPP
