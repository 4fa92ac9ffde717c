#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slab/field.hpp"

namespace slab {

// Dense row-major matrix over GF(2^k). Entries are raw bitmasks; the field
// travels with the matrix.
class Mat {
 public:
  Mat() : field_(Field::gf(1)), rows_(0), cols_(0) {}
  Mat(Field f, int rows, int cols)
      : field_(f), rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

  static Mat identity(Field f, int n);
  // Builds a matrix from integer seed rows (entries taken mod the field
  // encoding, so 0/1 seeds mean the prime subfield).
  static Mat from_rows(Field f, const std::vector<std::vector<int>>& rows);

  Field field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  uint16_t at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }
  void set(int i, int j, uint16_t v) { a_[size_t(i) * cols_ + j] = v; }

  const std::vector<uint16_t>& data() const { return a_; }
  std::vector<uint16_t>& data() { return a_; }

  bool is_zero() const;
  Mat transpose() const;

  bool operator==(const Mat& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  // Canonical byte encoding, usable as a hash/dedup key.
  std::string key() const;

  std::string to_string() const;

 private:
  Field field_;
  int rows_, cols_;
  std::vector<uint16_t> a_;
};

using Vec = std::vector<uint16_t>;  // coordinates over an implicit field

void require_same_shape(const Mat& a, const Mat& b);

Mat add(const Mat& a, const Mat& b);
Mat mul(const Mat& a, const Mat& b);
Mat scalar_mul(uint16_t c, const Mat& a);
Vec mul_vec(const Mat& a, const Vec& v);
// Row-vector product v^t A.
Vec vec_mul(const Vec& v, const Mat& a);

inline Mat operator+(const Mat& a, const Mat& b) { return add(a, b); }
inline Mat operator*(const Mat& a, const Mat& b) { return mul(a, b); }

Mat mat_pow(const Mat& a, uint64_t e);

// True iff x^r = 0 where r = dim; cheap squaring ladder.
bool is_nilpotent(const Mat& x);

// Inverse via Gauss-Jordan; singularity error when not invertible.
Mat inverse(const Mat& a);

// g x g^{-1}
Mat conjugate(const Mat& g, const Mat& x);

// Flatten/unflatten between the N x N matrix space and row vectors of
// length N^2 (row-major), used for subspaces of matrix spaces.
Vec vectorize(const Mat& m);
Mat unvectorize(Field f, int rows, int cols, const Vec& v);

}  // namespace slab
