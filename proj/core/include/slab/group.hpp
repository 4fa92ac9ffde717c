#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "slab/form.hpp"

namespace slab {

enum class FiniteGroup { Sp, G_theta, GL };

// Order formulas over F_q:
//   |Sp_2n(q)|  = q^(n^2) * prod_{i=1..n} (q^(2i) - 1)
//   |GL_n(q)|   = prod_{i=0..n-1} (q^n - q^i)
// G_theta in odd dimension is isomorphic to Sp_2n.
unsigned long long sp_order(int n, uint32_t q);
unsigned long long gl_order(int n, uint32_t q);
unsigned long long predicted_order(FiniteGroup which, const FormContext& ctx);

// Root-subgroup generators of Sp(V) in the even context, every root and
// every nonzero field coefficient.
std::vector<Mat> sp_generators(const FormContext& ctx);
// Elementary transvections and a diagonal generator for GL_N.
std::vector<Mat> gl_generators(Field f, int N);
// Generators of G_theta: block-embedded Sp generators (odd N).
std::vector<Mat> g_theta_generators(const FormContext& ctx);

struct GroupTable {
  FormContext ctx;
  FiniteGroup which;
  std::vector<Mat> elements;  // sorted by canonical key
  std::vector<Mat> generators;
  unsigned long long claimed_order = 0;

  bool contains(const Mat& g) const;
};

// Exhaustive predicate scan when q^(N^2) is small, otherwise BFS closure of
// the generator set. The resulting size must match the order formula.
// Orders above the resource guard (default 10^7) are rejected unless
// `unsafe` is set.
GroupTable group_enumerate(const FormContext& ctx, FiniteGroup which,
                           bool unsafe = false,
                           unsigned long long guard = 10000000ull);

// Witness g with g x g^-1 = y over a fully enumerated group, if any.
std::optional<Mat> conjugacy_test(const Mat& x, const Mat& y,
                                  const GroupTable& group);

// Deterministic pseudo-random group element: a seeded word in the
// generators. Used where full enumeration is infeasible.
Mat random_group_element(const std::vector<Mat>& generators, uint64_t seed,
                         int word_length = 24);

}  // namespace slab
