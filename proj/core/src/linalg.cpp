#include "slab/linalg.hpp"

#include <algorithm>

namespace slab {

namespace {

// In-place Gauss-Jordan; returns pivot columns.
std::vector<int> reduce_in_place(Mat& m) {
  Field f = m.field();
  int rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int i = row; i < rows; ++i)
      if (m.at(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < cols; ++j) {
        uint16_t t = m.at(piv, j);
        m.set(piv, j, m.at(row, j));
        m.set(row, j, t);
      }
    uint16_t s = f.inv(m.at(row, col));
    if (s != 1)
      for (int j = col; j < cols; ++j) m.set(row, j, f.mul(s, m.at(row, j)));
    for (int i = 0; i < rows; ++i) {
      if (i == row) continue;
      uint16_t c = m.at(i, col);
      if (!c) continue;
      for (int j = col; j < cols; ++j)
        m.set(i, j, m.at(i, j) ^ f.mul(c, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Mat take_rows(const Mat& m, int count) {
  Mat out(m.field(), count, m.cols());
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < m.cols(); ++j) out.set(i, j, m.at(i, j));
  return out;
}

}  // namespace

Subspace Subspace::zero(Field f, int ambient) {
  Subspace s;
  s.ambient = ambient;
  s.basis = Mat(f, 0, ambient);
  return s;
}

Subspace Subspace::full(Field f, int ambient) {
  Subspace s;
  s.ambient = ambient;
  s.basis = Mat::identity(f, ambient);
  return s;
}

Subspace Subspace::span(const Mat& rows) {
  Mat work = rows;
  std::vector<int> piv = reduce_in_place(work);
  Subspace s;
  s.ambient = rows.cols();
  s.basis = take_rows(work, int(piv.size()));
  return s;
}

Subspace Subspace::span_vectors(Field f, int ambient,
                                const std::vector<Vec>& vs) {
  Mat rows(f, int(vs.size()), ambient);
  for (size_t i = 0; i < vs.size(); ++i) {
    if (int(vs[i].size()) != ambient) fail(errc::shape, "bad vector length");
    for (int j = 0; j < ambient; ++j) rows.set(int(i), j, vs[i][j]);
  }
  return span(rows);
}

Vec Subspace::reduce(const Vec& v) const {
  if (int(v.size()) != ambient) fail(errc::shape, "bad vector length");
  Field f = field();
  Vec r = v;
  std::vector<int> piv = pivots();
  for (int i = 0; i < dim(); ++i) {
    uint16_t c = r[size_t(piv[size_t(i)])];
    if (!c) continue;
    for (int j = 0; j < ambient; ++j)
      if (basis.at(i, j)) r[size_t(j)] ^= f.mul(c, basis.at(i, j));
  }
  return r;
}

bool Subspace::contains(const Vec& v) const {
  Vec r = reduce(v);
  for (uint16_t x : r)
    if (x) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (int i = 0; i < other.dim(); ++i) {
    Vec row(size_t(ambient));
    for (int j = 0; j < ambient; ++j) row[size_t(j)] = other.basis.at(i, j);
    if (!contains(row)) return false;
  }
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  Field f = field();
  Vec r = v;
  Vec coords(size_t(dim()), 0);
  std::vector<int> piv = pivots();
  for (int i = 0; i < dim(); ++i) {
    uint16_t c = r[size_t(piv[size_t(i)])];
    if (!c) continue;
    coords[size_t(i)] = c;
    for (int j = 0; j < ambient; ++j)
      if (basis.at(i, j)) r[size_t(j)] ^= f.mul(c, basis.at(i, j));
  }
  for (uint16_t x : r)
    if (x) return std::nullopt;
  return coords;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (ambient != o.ambient) fail(errc::shape, "ambient mismatch");
  Mat rows(field(), dim() + o.dim(), ambient);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < ambient; ++j) rows.set(i, j, basis.at(i, j));
  for (int i = 0; i < o.dim(); ++i)
    for (int j = 0; j < ambient; ++j) rows.set(dim() + i, j, o.basis.at(i, j));
  return span(rows);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (ambient != o.ambient) fail(errc::shape, "ambient mismatch");
  // Zassenhaus: reduce [A|A; B|0]; rows with zero left half carry the
  // intersection in the right half.
  Field f = field();
  int n = ambient;
  Mat work(f, dim() + o.dim(), 2 * n);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < n; ++j) {
      work.set(i, j, basis.at(i, j));
      work.set(i, n + j, basis.at(i, j));
    }
  for (int i = 0; i < o.dim(); ++i)
    for (int j = 0; j < n; ++j) work.set(dim() + i, j, o.basis.at(i, j));
  reduce_in_place(work);
  std::vector<Vec> inter;
  for (int i = 0; i < work.rows(); ++i) {
    bool left_zero = true;
    for (int j = 0; j < n && left_zero; ++j)
      if (work.at(i, j)) left_zero = false;
    if (!left_zero) continue;
    Vec v(size_t(n));
    bool nonzero = false;
    for (int j = 0; j < n; ++j) {
      v[size_t(j)] = work.at(i, n + j);
      nonzero |= v[size_t(j)] != 0;
    }
    if (nonzero) inter.push_back(v);
  }
  return span_vectors(f, n, inter);
}

std::vector<int> Subspace::pivots() const {
  std::vector<int> piv;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < ambient; ++j)
      if (basis.at(i, j)) {
        piv.push_back(j);
        break;
      }
  return piv;
}

std::vector<int> Subspace::completion_indices() const {
  std::vector<bool> used(size_t(ambient), false);
  for (int p : pivots()) used[size_t(p)] = true;
  std::vector<int> out;
  for (int j = 0; j < ambient; ++j)
    if (!used[size_t(j)]) out.push_back(j);
  return out;
}

RrefResult rref_rank_kernel(const Mat& m) {
  Field f = m.field();
  Mat work = m;
  std::vector<int> piv = reduce_in_place(work);
  RrefResult res;
  res.rank = int(piv.size());
  res.rref = work;

  // Kernel basis: one vector per free column.
  std::vector<int> pivot_of_col(size_t(m.cols()), -1);
  for (size_t i = 0; i < piv.size(); ++i) pivot_of_col[size_t(piv[i])] = int(i);
  std::vector<Vec> kernel_rows;
  for (int j = 0; j < m.cols(); ++j) {
    if (pivot_of_col[size_t(j)] >= 0) continue;
    Vec v(size_t(m.cols()), 0);
    v[size_t(j)] = 1;
    for (int c = 0; c < m.cols(); ++c) {
      int i = pivot_of_col[size_t(c)];
      if (i >= 0) v[size_t(c)] = work.at(i, j);  // char 2: -a = a
    }
    kernel_rows.push_back(v);
  }
  res.kernel = Subspace::span_vectors(f, m.cols(), kernel_rows);
  return res;
}

int rank(const Mat& m) {
  Mat work = m;
  return int(reduce_in_place(work).size());
}

Subspace matrix_space_solutions(Field f, int rows, int cols,
                                const std::function<Mat(const Mat&)>& op) {
  int dim = rows * cols;
  Mat zero(f, rows, cols);
  Mat img0 = op(zero);
  int out_dim = img0.rows() * img0.cols();
  // Columns of the constraint matrix are op(E_ij) vectorized.
  Mat constraints(f, out_dim, dim);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      Mat e(f, rows, cols);
      e.set(i, j, 1);
      Mat img = op(e);
      if (img.rows() != img0.rows() || img.cols() != img0.cols())
        fail(errc::shape, "constraint operator changes shape");
      Vec v = vectorize(img);
      for (int r = 0; r < out_dim; ++r)
        constraints.set(r, i * cols + j, v[size_t(r)]);
    }
  return rref_rank_kernel(constraints).kernel;
}

Partition jordan_type(const Mat& x) {
  if (!x.is_square()) fail(errc::shape, "jordan type of non-square matrix");
  int n = x.rows();
  if (n == 0) return Partition();
  if (!is_nilpotent(x)) fail(errc::nilpotency, "matrix is not nilpotent");
  // parts >= i count = rank(x^{i-1}) - rank(x^i)
  std::vector<int> ranks;
  ranks.push_back(n);
  Mat p = x;
  while (true) {
    int r = rank(p);
    ranks.push_back(r);
    if (r == 0) break;
    p = mul(p, x);
  }
  std::vector<int> cols;  // conjugate parts
  for (size_t i = 1; i < ranks.size(); ++i) {
    int c = ranks[i - 1] - ranks[i];
    if (c > 0) cols.push_back(c);
  }
  return Partition(cols).conjugate();
}

Subspace centralizer_algebra(const Mat& x) {
  if (!x.is_square()) fail(errc::shape, "centralizer of non-square matrix");
  return matrix_space_solutions(
      x.field(), x.rows(), x.cols(),
      [&x](const Mat& y) { return add(mul(y, x), mul(x, y)); });
}

Subspace algebra_orbit_of_vector(const Subspace& E, const Vec& v) {
  Field f = E.field();
  int n = int(v.size());
  if (E.ambient != n * n) fail(errc::shape, "E is not a matrix-space subspace");
  std::vector<Vec> images;
  for (int i = 0; i < E.dim(); ++i) {
    Vec row(size_t(E.ambient));
    for (int j = 0; j < E.ambient; ++j) row[size_t(j)] = E.basis.at(i, j);
    Mat y = unvectorize(f, n, n, row);
    images.push_back(mul_vec(y, v));
  }
  return Subspace::span_vectors(f, n, images);
}

RestrictQuotient restrict_and_quotient(const Mat& x, const Subspace& W) {
  if (!x.is_square() || x.rows() != W.ambient)
    fail(errc::shape, "ambient mismatch");
  Field f = x.field();
  int k = W.dim();
  int n = W.ambient;

  RestrictQuotient out{Mat(f, k, k), Mat(f, n - k, n - k)};
  // x restricted to W in the RREF basis.
  for (int i = 0; i < k; ++i) {
    Vec w(size_t(n));
    for (int j = 0; j < n; ++j) w[size_t(j)] = W.basis.at(i, j);
    Vec img = mul_vec(x, w);
    auto coords = W.coordinates(img);
    if (!coords) fail(errc::stability, "subspace is not x-stable");
    for (int r = 0; r < k; ++r) out.on_subspace.set(r, i, (*coords)[size_t(r)]);
  }
  // Quotient in the greedy standard completion basis: reduce images mod W
  // and read coordinates at the completion indices.
  std::vector<int> comp = W.completion_indices();
  for (size_t ci = 0; ci < comp.size(); ++ci) {
    Vec e(size_t(n), 0);
    e[size_t(comp[ci])] = 1;
    Vec img = W.reduce(mul_vec(x, e));
    for (size_t r = 0; r < comp.size(); ++r)
      out.on_quotient.set(int(r), int(ci), img[size_t(comp[r])]);
  }
  return out;
}

}  // namespace slab
