// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The comlie Authors

#ifndef COMLIE_FIELD_HPP
#define COMLIE_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace comlie {

/// Raw k-bit polynomial representative of an element of GF(2^k).
using Elem = std::uint16_t;

namespace detail {
struct FieldData;
}

class Scalar;

/// Handle to an interned, immutable finite field GF(2^k), 1 <= k <= 16.
///
/// Fields are created through make_field() and live for the rest of the
/// process, so a Field is a trivially copyable pointer-sized handle and two
/// handles are equal exactly when they name the same (degree, modulus) pair.
/// Addition of raw elements is XOR in every field of characteristic 2; the
/// multiplicative operations go through log/antilog tables.
class Field {
 public:
  /// GF(2).
  Field();

  unsigned degree() const noexcept;
  /// Modulus polynomial as a (degree+1)-bit mask.
  std::uint32_t modulus() const noexcept;
  /// Number of elements, 2^degree.
  std::uint32_t order() const noexcept;
  bool is_prime() const noexcept { return degree() == 1; }

  static Elem add(Elem a, Elem b) noexcept { return static_cast<Elem>(a ^ b); }
  Elem mul(Elem a, Elem b) const noexcept;
  /// Throws Error("domain") for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  bool contains(Elem a) const noexcept { return a < order(); }

  Scalar operator()(Elem bits) const;
  Scalar zero() const;
  Scalar one() const;

  friend bool operator==(Field a, Field b) noexcept { return a.data_ == b.data_; }

  /// "GF(2^k) mod 0x..." for diagnostics.
  std::string describe() const;

 private:
  explicit Field(const detail::FieldData* data) : data_(data) {}
  friend Field make_field(unsigned, std::optional<std::uint32_t>);

  const detail::FieldData* data_;
};

/// Returns GF(2^k). Without a modulus the numerically smallest irreducible
/// polynomial of degree k is used (for k = 1 that is x+1, so GF(2) has a
/// single canonical handle). A reducible modulus is rejected with an error
/// naming a nontrivial factor.
Field make_field(unsigned degree, std::optional<std::uint32_t> modulus = std::nullopt);

/// The prime field GF(2).
inline Field gf2() { return make_field(1); }

/// True iff the polynomial encoded by `poly` (degree >= 1) is irreducible over GF(2).
bool is_irreducible(std::uint32_t poly);

/// Smallest nontrivial factor of `poly`, or 0 if it is irreducible.
std::uint32_t find_factor(std::uint32_t poly);

/// Element of a specific field. Arithmetic between elements of different
/// fields throws Error("field-mismatch").
class Scalar {
 public:
  Scalar(Field field, Elem bits);

  Field field() const noexcept { return field_; }
  Elem bits() const noexcept { return bits_; }
  bool is_zero() const noexcept { return bits_ == 0; }

  Scalar inv() const;

  friend Scalar operator+(Scalar a, Scalar b);
  friend Scalar operator-(Scalar a, Scalar b) { return a + b; }
  friend Scalar operator*(Scalar a, Scalar b);
  friend Scalar operator/(Scalar a, Scalar b);
  /// Equal iff same field and same representative.
  friend bool operator==(Scalar a, Scalar b) noexcept {
    return a.field_ == b.field_ && a.bits_ == b.bits_;
  }

  /// Lowercase hex of the representative ("0", "1", "3").
  std::string to_hex() const;
  static Scalar from_hex(Field field, const std::string& text);

 private:
  Field field_;
  Elem bits_;
};

/// Binomial coefficient C(a, b) reduced mod 2 (Lucas: b's bits must be a subset of a's).
constexpr int binom_mod2(std::uint64_t a, std::uint64_t b) noexcept {
  return b <= a && (b & ~a) == 0 ? 1 : 0;
}

/// Hex text of a raw element.
std::string elem_to_hex(Elem e);
/// Parses hex text; throws Error("parse") on malformed input or an
/// element outside `field`.
Elem elem_from_hex(Field field, const std::string& text);

}  // namespace comlie

#endif  // COMLIE_FIELD_HPP
