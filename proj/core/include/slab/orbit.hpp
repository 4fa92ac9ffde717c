#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slab/group.hpp"
#include "slab/theta.hpp"

namespace slab {

// Conjugacy invariant of a nilpotent in the symplectic algebra over a field
// of characteristic 2: the Jordan type plus the indicator sequence
//   eps[m] = 1  iff  some v in ker(x^m) has <x^(m-1) v, v> != 0.
// The map v -> <x^(m-1)v, v> is additive for self-adjoint x in char 2 and
// twists by squaring under scaling, so testing a kernel basis suffices.
struct OrbitFingerprint {
  Partition lambda;
  std::vector<int> eps;  // eps[m-1] for m = 1..lambda_1

  bool operator==(const OrbitFingerprint& o) const {
    return lambda == o.lambda && eps == o.eps;
  }
  bool operator!=(const OrbitFingerprint& o) const { return !(*this == o); }
  bool operator<(const OrbitFingerprint& o) const {
    if (lambda != o.lambda) return lambda < o.lambda;
    return eps < o.eps;
  }
  std::string to_string() const;  // e.g. "2+2|01"
};

OrbitFingerprint sp_nilpotent_fingerprint(const Mat& x, const FormContext& ctx);
// Same invariant for a nilpotent self-adjoint map written in an arbitrary
// basis with Gram matrix `gram` (alternating, nondegenerate).
OrbitFingerprint nilpotent_fingerprint_gram(const Mat& x, const Mat& gram);

// Basis of sp(V) in the even context: A-block units with their partners,
// plus the symmetric B and C blocks. Supports are pairwise disjoint.
std::vector<Mat> sp_basis(const FormContext& ctx);
// Basis of the fixed space in the odd context.
std::vector<Mat> g_theta_basis(const FormContext& ctx);

// All nilpotent elements of the row-span of `space` (a subspace of the
// N x N matrix space); q^dim scan with a Gray-code fast path over GF(2).
std::vector<Mat> enumerate_nilpotents_in_space(Field f, int N,
                                               const Subspace& space,
                                               bool unsafe = false,
                                               unsigned long long guard = 10000000ull);
std::vector<Mat> enumerate_sp_nilpotents(const FormContext& ctx,
                                         bool unsafe = false);
std::vector<Mat> enumerate_gl_nilpotents(Field f, int N, bool unsafe = false);

struct OrbitPartition {
  std::vector<int> orbit_of;              // element index -> orbit id
  std::vector<std::vector<int>> orbits;   // orbit id -> sorted element indices
  size_t count() const { return orbits.size(); }
};

enum class OrbitAction { conjugation, pair_action };

// Union-find partition of `elements` under the generator action. The element
// list must be closed under the action; an escaping image raises.
OrbitPartition orbit_partition(const std::vector<Mat>& elements,
                               const std::vector<Mat>& generators,
                               OrbitAction action = OrbitAction::conjugation,
                               int jobs = 0);

// Diagonal action on pairs (x, v): elements are the full product of the x
// list and all q^len vectors; pair index = x_index * q^len + code(v).
OrbitPartition orbit_partition_pairs(const std::vector<Mat>& xs, int vec_len,
                                     const std::vector<Mat>& generators,
                                     int jobs = 0);
uint32_t vec_code(const Vec& v, int kbits);
Vec vec_decode(uint32_t code, int len, int kbits);

// Regular-family element x(xi) in the odd fixed space: the sp part is the
// standard regular nilpotent, the vector part is xi times the last
// e-coordinate. Nilpotent for every xi; Jordan type (N) iff xi != 0.
Mat x_xi_family(int n, FieldElem xi);

// Point-count dimension estimate from orbit sizes at q and q^2, with the
// |orbit| * |stabilizer| = |group| cross-check.
struct DimEstimate {
  int dim = -1;
  bool reliable = false;
};
DimEstimate estimate_orbit_dim(unsigned long long size_q1,
                               unsigned long long size_q2,
                               unsigned long long group_q1,
                               unsigned long long group_q2, int dim_group);

// One orbit of the nilcone: canonical fingerprint, size, least-key
// representative.
struct SpOrbitInfo {
  OrbitFingerprint fp;
  unsigned long long size = 0;
  Mat rep;
};

// Full classification of the sp nilcone over the context field: scan,
// partition under root-subgroup generators, fingerprint representatives.
// Sorted by fingerprint. check_constancy additionally fingerprints every
// element and raises on an orbit with mixed fingerprints.
std::vector<SpOrbitInfo> sp_orbit_summary(const FormContext& ctx,
                                          bool check_constancy = false,
                                          bool unsafe = false, int jobs = 0);

}  // namespace slab
