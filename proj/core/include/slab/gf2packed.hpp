#pragma once

#include <array>
#include <cstdint>

#include "slab/matrix.hpp"

namespace slab {

// Bit-packed square matrix over GF(2), one uint64 word per row (n <= 32).
// Backs the F_2 hot paths (nilcone scans, group closure, orbit edges) behind
// the same element encodings as Mat.
struct Gf2Mat {
  static constexpr int kMaxDim = 32;

  int n = 0;
  std::array<uint64_t, kMaxDim> row{};

  static Gf2Mat identity(int n) {
    Gf2Mat m;
    m.n = n;
    for (int i = 0; i < n; ++i) m.row[size_t(i)] = uint64_t(1) << i;
    return m;
  }

  bool get(int i, int j) const { return (row[size_t(i)] >> j) & 1u; }
  void set(int i, int j, bool v) {
    if (v)
      row[size_t(i)] |= uint64_t(1) << j;
    else
      row[size_t(i)] &= ~(uint64_t(1) << j);
  }

  bool is_zero() const {
    for (int i = 0; i < n; ++i)
      if (row[size_t(i)]) return false;
    return true;
  }

  bool operator==(const Gf2Mat& o) const {
    if (n != o.n) return false;
    for (int i = 0; i < n; ++i)
      if (row[size_t(i)] != o.row[size_t(i)]) return false;
    return true;
  }

  // Row-major bit key; valid for n*n <= 64.
  uint64_t key() const {
    uint64_t k = 0;
    for (int i = n - 1; i >= 0; --i)
      k = (k << n) | (row[size_t(i)] & ((uint64_t(1) << n) - 1));
    return k;
  }
  static Gf2Mat from_key(uint64_t k, int n) {
    Gf2Mat m;
    m.n = n;
    uint64_t mask = (uint64_t(1) << n) - 1;
    for (int i = 0; i < n; ++i) {
      m.row[size_t(i)] = k & mask;
      k >>= n;
    }
    return m;
  }
};

inline Gf2Mat mul(const Gf2Mat& a, const Gf2Mat& b) {
  Gf2Mat r;
  r.n = a.n;
  for (int i = 0; i < a.n; ++i) {
    uint64_t acc = 0;
    uint64_t ai = a.row[size_t(i)];
    while (ai) {
      int j = __builtin_ctzll(ai);
      acc ^= b.row[size_t(j)];
      ai &= ai - 1;
    }
    r.row[size_t(i)] = acc;
  }
  return r;
}

inline Gf2Mat add(const Gf2Mat& a, const Gf2Mat& b) {
  Gf2Mat r = a;
  for (int i = 0; i < a.n; ++i) r.row[size_t(i)] ^= b.row[size_t(i)];
  return r;
}

inline bool is_nilpotent(const Gf2Mat& x) {
  Gf2Mat p = x;
  int covered = 1;
  while (covered < x.n) {
    p = mul(p, p);
    covered *= 2;
  }
  return p.is_zero();
}

Gf2Mat pack_gf2(const Mat& m);
Mat unpack_gf2(const Gf2Mat& m);

int rank(const Gf2Mat& m);
Gf2Mat inverse_gf2(const Gf2Mat& a);

}  // namespace slab
