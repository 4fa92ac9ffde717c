#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "slab/matrix.hpp"
#include "slab/partition.hpp"

namespace slab {

// Subspace of k^ambient in reduced row echelon form, one basis vector per
// row. RREF is canonical, so equality of subspaces is matrix equality.
struct Subspace {
  int ambient = 0;
  Mat basis;  // dim x ambient, RREF

  static Subspace zero(Field f, int ambient);
  static Subspace full(Field f, int ambient);
  // Span of arbitrary row vectors.
  static Subspace span(const Mat& rows);
  static Subspace span_vectors(Field f, int ambient, const std::vector<Vec>& vs);

  Field field() const { return basis.field(); }
  int dim() const { return basis.rows(); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Canonical coset representative: v reduced by the RREF basis.
  Vec reduce(const Vec& v) const;
  // Coordinates of v in the basis, if v lies in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  // Pivot columns of the RREF basis.
  std::vector<int> pivots() const;
  // Standard basis vectors (lowest index first) completing this subspace to
  // the ambient space.
  std::vector<int> completion_indices() const;

  bool operator==(const Subspace& o) const {
    return ambient == o.ambient && basis == o.basis;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
};

struct RrefResult {
  Mat rref;
  int rank = 0;
  Subspace kernel;  // right kernel: vectors v with m v = 0
};

RrefResult rref_rank_kernel(const Mat& m);
int rank(const Mat& m);

// Solution space of op(x) = 0 inside the rows x cols matrix space, op linear
// (applied to each elementary matrix to assemble the constraint system).
Subspace matrix_space_solutions(Field f, int rows, int cols,
                                const std::function<Mat(const Mat&)>& op);

// Jordan type of a nilpotent square matrix from the rank sequence of powers.
Partition jordan_type(const Mat& x);

// All y with yx = xy, as a subspace of the n x n matrix space.
Subspace centralizer_algebra(const Mat& x);

// span{ y v : y in basis of E }, E a subspace of the matrix space.
Subspace algebra_orbit_of_vector(const Subspace& E, const Vec& v);

struct RestrictQuotient {
  Mat on_subspace;  // action in the RREF basis of W
  Mat on_quotient;  // action in the greedy standard completion basis
};

// Requires x W <= W (checked); returns the action on W and on ambient/W.
RestrictQuotient restrict_and_quotient(const Mat& x, const Subspace& W);

}  // namespace slab
