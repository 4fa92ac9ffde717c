#pragma once

#include <string>
#include <vector>

#include "slab/errors.hpp"

namespace slab {

// Integer partition: weakly decreasing positive parts. The empty partition
// (n = 0) is an empty parts list.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int n() const;
  bool empty() const { return parts.empty(); }
  int first() const { return parts.empty() ? 0 : parts[0]; }
  int length() const { return int(parts.size()); }
  // Part at 1-based index i, 0 beyond the end.
  int part(int i) const {
    return (i >= 1 && i <= length()) ? parts[size_t(i - 1)] : 0;
  }

  Partition conjugate() const;

  // n(lambda) = sum_i (i-1) * lambda_i
  long long n_stat() const;

  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator!=(const Partition& o) const { return parts != o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }

  std::string to_string() const;  // "2+1", "-" when empty
};

// True iff a <= b in dominance order (requires |a| = |b|).
bool dominated_by(const Partition& a, const Partition& b);

// Coordinatewise sum: parts[i] = a_i + b_i (then trailing zeros dropped).
Partition coordinatewise_sum(const Partition& a, const Partition& b);

// Multiset union of parts, re-sorted.
Partition union_sum(const Partition& a, const Partition& b);

// All partitions of n, descending lexicographic ((n) first, (1^n) last).
std::vector<Partition> partitions_of(int n);

}  // namespace slab
