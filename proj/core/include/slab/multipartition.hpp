#pragma once

#include <string>
#include <vector>

#include "slab/partition.hpp"

namespace slab {

// r-tuple of partitions of total weight n.
struct Multipartition {
  std::vector<Partition> components;

  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> comps)
      : components(std::move(comps)) {}

  int r() const { return int(components.size()); }
  int n() const;
  const Partition& operator[](size_t i) const { return components[i]; }

  bool operator==(const Multipartition& o) const {
    return components == o.components;
  }
  bool operator!=(const Multipartition& o) const { return !(*this == o); }
  bool operator<(const Multipartition& o) const {
    return components < o.components;
  }
  std::string to_string() const;  // "(2+1, -, 1)"
};

// Complete, duplicate-free, deterministic: first component weight descends
// from n, partitions of each weight in descending lex order, recursing right.
std::vector<Multipartition> enumerate_multipartitions(int n, int r);

// m = (m1, m2, m3) with m1+m2+m3 = n; p1 = m1, p2 = m1+m2.
struct CompositionM {
  int m1 = 0, m2 = 0, m3 = 0;

  CompositionM() = default;
  CompositionM(int a, int b, int c);

  int n() const { return m1 + m2 + m3; }
  int p1() const { return m1; }
  int p2() const { return m1 + m2; }

  bool operator==(const CompositionM& o) const {
    return m1 == o.m1 && m2 == o.m2 && m3 == o.m3;
  }
  std::string to_string() const;
};

// Partial order: m' <= m iff p'_1 <= p_1 and p'_2 <= p_2.
bool leq(const CompositionM& a, const CompositionM& b);

// All of Q_{n,3}, deterministically ordered; (n+1)(n+2)/2 entries.
std::vector<CompositionM> enumerate_q_n3(int n);
// The m3 = 0 subset.
std::vector<CompositionM> enumerate_q0_n3(int n);

// Composition attached to a 3-multipartition by component weights, with
// m = (|l1|, |l2|+|l3|, 0) and k = |l2|.
CompositionM grouping_of(const Multipartition& mp);

}  // namespace slab
