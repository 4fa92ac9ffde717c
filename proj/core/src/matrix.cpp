#include "slab/matrix.hpp"

#include <sstream>

namespace slab {

Mat Mat::identity(Field f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::from_rows(Field f, const std::vector<std::vector<int>>& rows) {
  int r = int(rows.size());
  int c = r ? int(rows[0].size()) : 0;
  Mat m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (int(rows[i].size()) != c)
      fail(errc::shape, "ragged rows in matrix literal");
    for (int j = 0; j < c; ++j) {
      int v = rows[i][j];
      if (v < 0 || uint32_t(v) >= f.order())
        fail(errc::bad_input, "entry " + std::to_string(v) +
                                  " out of range for " + f.name());
      m.set(i, j, uint16_t(v));
    }
  }
  return m;
}

bool Mat::is_zero() const {
  for (uint16_t v : a_)
    if (v) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

std::string Mat::key() const {
  std::string s;
  s.reserve(a_.size() * 2 + 8);
  s.push_back(char(rows_));
  s.push_back(char(cols_));
  for (uint16_t v : a_) {
    s.push_back(char(v & 0xff));
    s.push_back(char(v >> 8));
  }
  return s;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "\n[" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    os << "]";
  }
  return os.str();
}

void require_same_shape(const Mat& a, const Mat& b) {
  if (a.field() != b.field())
    fail(errc::field_mismatch, "matrices over distinct fields");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(errc::shape, "shape mismatch");
}

Mat add(const Mat& a, const Mat& b) {
  require_same_shape(a, b);
  Mat r = a;
  for (size_t i = 0; i < r.data().size(); ++i) r.data()[i] ^= b.data()[i];
  return r;
}

Mat mul(const Mat& a, const Mat& b) {
  if (a.field() != b.field())
    fail(errc::field_mismatch, "matrices over distinct fields");
  if (a.cols() != b.rows()) fail(errc::shape, "inner dimension mismatch");
  Field f = a.field();
  Mat r(f, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      uint16_t aik = a.at(i, k);
      if (!aik) continue;
      for (int j = 0; j < b.cols(); ++j) {
        uint16_t bkj = b.at(k, j);
        if (bkj) r.set(i, j, r.at(i, j) ^ f.mul(aik, bkj));
      }
    }
  return r;
}

Mat scalar_mul(uint16_t c, const Mat& a) {
  Mat r = a;
  Field f = a.field();
  for (auto& v : r.data()) v = f.mul(c, v);
  return r;
}

Vec mul_vec(const Mat& a, const Vec& v) {
  if (int(v.size()) != a.cols()) fail(errc::shape, "vector length mismatch");
  Field f = a.field();
  Vec r(size_t(a.rows()), 0);
  for (int i = 0; i < a.rows(); ++i) {
    uint16_t s = 0;
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) && v[j]) s ^= f.mul(a.at(i, j), v[j]);
    r[i] = s;
  }
  return r;
}

Vec vec_mul(const Vec& v, const Mat& a) {
  if (int(v.size()) != a.rows()) fail(errc::shape, "vector length mismatch");
  Field f = a.field();
  Vec r(size_t(a.cols()), 0);
  for (int i = 0; i < a.rows(); ++i) {
    if (!v[i]) continue;
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j)) r[j] ^= f.mul(v[i], a.at(i, j));
  }
  return r;
}

Mat mat_pow(const Mat& a, uint64_t e) {
  if (!a.is_square()) fail(errc::shape, "power of non-square matrix");
  Mat r = Mat::identity(a.field(), a.rows());
  Mat base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    if (e >>= 1) base = mul(base, base);
  }
  return r;
}

bool is_nilpotent(const Mat& x) {
  if (!x.is_square()) fail(errc::shape, "nilpotency of non-square matrix");
  Mat p = x;
  int covered = 1;
  while (covered < x.rows()) {
    p = mul(p, p);
    covered *= 2;
  }
  return p.is_zero();
}

Mat inverse(const Mat& a) {
  if (!a.is_square()) fail(errc::shape, "inverse of non-square matrix");
  Field f = a.field();
  int n = a.rows();
  Mat work = a;
  Mat inv = Mat::identity(f, n);
  int row = 0;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = row; i < n; ++i)
      if (work.at(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) fail(errc::membership, "matrix is singular");
    for (int j = 0; j < n; ++j) {
      std::swap(work.data()[size_t(piv) * n + j], work.data()[size_t(row) * n + j]);
      std::swap(inv.data()[size_t(piv) * n + j], inv.data()[size_t(row) * n + j]);
    }
    uint16_t s = f.inv(work.at(row, col));
    if (s != 1)
      for (int j = 0; j < n; ++j) {
        work.set(row, j, f.mul(s, work.at(row, j)));
        inv.set(row, j, f.mul(s, inv.at(row, j)));
      }
    for (int i = 0; i < n; ++i) {
      if (i == row) continue;
      uint16_t c = work.at(i, col);
      if (!c) continue;
      for (int j = 0; j < n; ++j) {
        work.set(i, j, work.at(i, j) ^ f.mul(c, work.at(row, j)));
        inv.set(i, j, inv.at(i, j) ^ f.mul(c, inv.at(row, j)));
      }
    }
    ++row;
  }
  return inv;
}

Mat conjugate(const Mat& g, const Mat& x) { return mul(mul(g, x), inverse(g)); }

Vec vectorize(const Mat& m) { return m.data(); }

Mat unvectorize(Field f, int rows, int cols, const Vec& v) {
  if (int(v.size()) != rows * cols) fail(errc::shape, "bad vector length");
  Mat m(f, rows, cols);
  m.data() = v;
  return m;
}

}  // namespace slab
