// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The comlie Authors

#include "comlie/field.hpp"

#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>
#include <vector>

#include "comlie/error.hpp"

namespace comlie {
namespace detail {

struct FieldData {
  unsigned degree;
  std::uint32_t modulus;
  std::uint32_t order;
  // antilog has 2*(order-1) entries so log a + log b never needs a modulo.
  std::vector<Elem> antilog;
  std::vector<std::uint32_t> log;
};

}  // namespace detail

namespace {

int poly_degree(std::uint32_t p) { return p == 0 ? -1 : 31 - std::countl_zero(p); }

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
  return a;
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, unsigned degree) {
  std::uint32_t r = 0;
  while (b != 0) {
    if (b & 1U) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> degree) a ^= modulus;
  }
  return r;
}

std::unique_ptr<detail::FieldData> build_field(unsigned degree, std::uint32_t modulus) {
  auto data = std::make_unique<detail::FieldData>();
  data->degree = degree;
  data->modulus = modulus;
  data->order = 1U << degree;
  const std::uint32_t units = data->order - 1;

  // The modulus need not be primitive, so search for a generator of the unit group.
  for (std::uint32_t g = 1; g < data->order; ++g) {
    std::vector<Elem> powers;
    powers.reserve(units);
    std::uint32_t x = 1;
    do {
      powers.push_back(static_cast<Elem>(x));
      x = mul_mod(x, g, modulus, degree);
    } while (x != 1 && powers.size() <= units);
    if (powers.size() != units) continue;
    data->antilog.resize(2 * units);
    data->log.assign(data->order, 0);
    for (std::uint32_t i = 0; i < units; ++i) {
      data->antilog[i] = powers[i];
      data->antilog[i + units] = powers[i];
      data->log[powers[i]] = i;
    }
    return data;
  }
  throw Error("internal", "no generator found for " + std::to_string(modulus), ErrorKind::computation);
}

}  // namespace

std::uint32_t find_factor(std::uint32_t poly) {
  const int d = poly_degree(poly);
  if (d < 1) return 0;
  for (std::uint32_t q = 2; poly_degree(q) <= d / 2; ++q) {
    if (poly_mod(poly, q) == 0) return q;
  }
  return 0;
}

bool is_irreducible(std::uint32_t poly) { return poly_degree(poly) >= 1 && find_factor(poly) == 0; }

Field make_field(unsigned degree, std::optional<std::uint32_t> modulus) {
  if (degree < 1 || degree > 16) {
    throw Error("parameter-range", "field degree must be in 1..16, got " + std::to_string(degree));
  }
  std::uint32_t m = 0;
  if (modulus) {
    m = *modulus;
    if (poly_degree(m) != static_cast<int>(degree)) {
      throw Error("bad-modulus", "modulus " + std::to_string(m) + " does not have degree " +
                                     std::to_string(degree));
    }
    if (const auto f = find_factor(m); f != 0) {
      throw Error("reducible-modulus",
                  "modulus " + std::to_string(m) + " is divisible by " + std::to_string(f));
    }
  } else if (degree == 1) {
    m = 0b11;
  } else {
    for (m = 1U << degree; !is_irreducible(m); ++m) {
    }
  }

  static std::mutex mutex;
  static std::map<std::pair<unsigned, std::uint32_t>, std::unique_ptr<detail::FieldData>> registry;
  const std::lock_guard lock(mutex);
  auto& slot = registry[{degree, m}];
  if (!slot) slot = build_field(degree, m);
  return Field(slot.get());
}

Field::Field() : Field(make_field(1)) {}

unsigned Field::degree() const noexcept { return data_->degree; }
std::uint32_t Field::modulus() const noexcept { return data_->modulus; }
std::uint32_t Field::order() const noexcept { return data_->order; }

Elem Field::mul(Elem a, Elem b) const noexcept {
  if (a == 0 || b == 0) return 0;
  if (data_->degree == 1) return 1;
  return data_->antilog[data_->log[a] + data_->log[b]];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error("domain", "inverse of zero", ErrorKind::computation);
  if (data_->degree == 1) return 1;
  const std::uint32_t units = data_->order - 1;
  return data_->antilog[(units - data_->log[a]) % units];
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t units = data_->order - 1;
  return data_->antilog[(data_->log[a] * (e % units)) % units];
}

Scalar Field::operator()(Elem bits) const { return Scalar(*this, bits); }
Scalar Field::zero() const { return Scalar(*this, 0); }
Scalar Field::one() const { return Scalar(*this, 1); }

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(2^" << degree() << ") mod 0x" << std::hex << modulus();
  return os.str();
}

Scalar::Scalar(Field field, Elem bits) : field_(field), bits_(bits) {
  if (!field.contains(bits)) {
    throw Error("domain", "representative " + elem_to_hex(bits) + " outside " + field.describe());
  }
}

namespace {
void require_same(Scalar a, Scalar b) {
  if (!(a.field() == b.field())) {
    throw Error("field-mismatch", a.field().describe() + " vs " + b.field().describe(),
                ErrorKind::computation);
  }
}
}  // namespace

Scalar operator+(Scalar a, Scalar b) {
  require_same(a, b);
  return Scalar(a.field_, Field::add(a.bits_, b.bits_));
}

Scalar operator*(Scalar a, Scalar b) {
  require_same(a, b);
  return Scalar(a.field_, a.field_.mul(a.bits_, b.bits_));
}

Scalar operator/(Scalar a, Scalar b) {
  require_same(a, b);
  return Scalar(a.field_, a.field_.div(a.bits_, b.bits_));
}

Scalar Scalar::inv() const { return Scalar(field_, field_.inv(bits_)); }

std::string Scalar::to_hex() const { return elem_to_hex(bits_); }

Scalar Scalar::from_hex(Field field, const std::string& text) {
  return Scalar(field, elem_from_hex(field, text));
}

std::string elem_to_hex(Elem e) {
  std::ostringstream os;
  os << std::hex << e;
  return os.str();
}

Elem elem_from_hex(Field field, const std::string& text) {
  if (text.empty() || text.size() > 4) throw Error("parse", "bad scalar '" + text + "'");
  std::uint32_t v = 0;
  for (char c : text) {
    v <<= 4;
    if (c >= '0' && c <= '9') {
      v |= static_cast<std::uint32_t>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      v |= static_cast<std::uint32_t>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      v |= static_cast<std::uint32_t>(c - 'A' + 10);
    } else {
      throw Error("parse", "bad scalar '" + text + "'");
    }
  }
  if (v >= field.order()) throw Error("parse", "scalar '" + text + "' outside " + field.describe());
  return static_cast<Elem>(v);
}

}  // namespace comlie
