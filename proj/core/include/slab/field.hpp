#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slab/errors.hpp"

namespace slab {

// GF(2^k) for 1 <= k <= 16, elements encoded as bitmasks of polynomial
// coefficients. Every instantiation of a given k uses the same fixed
// irreducible modulus, so encodings are reproducible across runs.
//
// Field is a cheap value handle onto an interned table; copies share state.
class Field {
 public:
  static constexpr int kMaxDegree = 16;

  // Interned field of order 2^k with the fixed modulus for that k.
  static Field gf(int k);

  // Parses "gf2^k".
  static Field parse(const std::string& name);

  int degree() const { return tab_->k; }
  uint32_t order() const { return uint32_t(1) << tab_->k; }
  uint32_t modulus() const { return tab_->modulus; }
  std::string name() const;

  bool operator==(const Field& o) const { return tab_ == o.tab_; }
  bool operator!=(const Field& o) const { return tab_ != o.tab_; }

  uint16_t add(uint16_t a, uint16_t b) const { return a ^ b; }

  uint16_t mul(uint16_t a, uint16_t b) const {
    if (a == 0 || b == 0) return 0;
    unsigned s = tab_->log[a] + tab_->log[b];
    unsigned g = order() - 1;
    if (s >= g) s -= g;
    return tab_->exp[s];
  }

  uint16_t inv(uint16_t a) const {
    if (a == 0) fail(errc::division_by_zero, "inverse of zero in " + name());
    if (a == 1) return 1;
    return tab_->exp[order() - 1 - tab_->log[a]];
  }

  uint16_t square(uint16_t a) const { return mul(a, a); }

  uint16_t pow(uint16_t a, uint64_t e) const;

  // Multiplicative order of a nonzero element.
  uint32_t mult_order(uint16_t a) const;

  struct Tables {
    int k;
    uint32_t modulus;
    std::vector<uint16_t> exp;  // exp[i] = g^i, g a fixed generator
    std::vector<uint16_t> log;  // log[exp[i]] = i
  };

 private:
  explicit Field(const Tables* tab) : tab_(tab) {}
  const Tables* tab_;
};

struct FieldElem {
  Field field;
  uint16_t bits = 0;

  FieldElem(Field f, uint16_t b) : field(f), bits(b) {}

  bool is_zero() const { return bits == 0; }
  bool operator==(const FieldElem& o) const {
    return field == o.field && bits == o.bits;
  }
};

inline void require_same_field(const FieldElem& a, const FieldElem& b) {
  if (a.field != b.field)
    fail(errc::field_mismatch,
         "operands live in " + a.field.name() + " and " + b.field.name());
}

inline FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  return FieldElem(a.field, a.field.add(a.bits, b.bits));
}

inline FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  return FieldElem(a.field, a.field.mul(a.bits, b.bits));
}

inline FieldElem inv(const FieldElem& a) {
  return FieldElem(a.field, a.field.inv(a.bits));
}

// a^2; the relevant semilinearity in characteristic 2.
inline FieldElem frobenius(const FieldElem& a) {
  return FieldElem(a.field, a.field.square(a.bits));
}

// All 2^k elements in increasing bitmask order.
std::vector<FieldElem> enumerate(Field field);

// Carry-less polynomial product reduced mod `modulus`, independent of the
// log/exp tables. Lives here so tests can cross-check table arithmetic.
uint16_t polymul_reduce(uint32_t a, uint32_t b, uint32_t modulus, int k);

}  // namespace slab
