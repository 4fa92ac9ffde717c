#include "slab/theta.hpp"

#include <algorithm>

namespace slab {

namespace {

void require_even(const FormContext& ctx) {
  if (ctx.parity() != Parity::even)
    fail(errc::domain, "this subalgebra needs the even context");
}

Mat unit(Field f, int N, int i, int j) {
  Mat m(f, N, N);
  m.set(i, j, 1);
  return m;
}

Subspace span_mats(Field f, int N, const std::vector<Mat>& mats) {
  std::vector<Vec> rows;
  rows.reserve(mats.size());
  for (const Mat& m : mats) rows.push_back(vectorize(m));
  return Subspace::span_vectors(f, N * N, rows);
}

}  // namespace

StandardSubalgebra standard_subalgebra(const FormContext& ctx,
                                       SubalgebraName name, int param) {
  Field f = ctx.field();
  int N = ctx.N(), n = ctx.n();
  std::vector<Mat> mats;
  switch (name) {
    case SubalgebraName::t: {
      require_even(ctx);
      for (int i = 0; i < n; ++i)
        mats.push_back(add(unit(f, N, i, i), unit(f, N, n + i, n + i)));
      break;
    }
    case SubalgebraName::n: {
      require_even(ctx);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          mats.push_back(add(unit(f, N, i, j), unit(f, N, n + j, n + i)));
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
          mats.push_back(i == j ? unit(f, N, i, n + i)
                                : add(unit(f, N, i, n + j), unit(f, N, j, n + i)));
      break;
    }
    case SubalgebraName::n_s: {
      require_even(ctx);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          mats.push_back(add(unit(f, N, i, j), unit(f, N, n + j, n + i)));
          mats.push_back(add(unit(f, N, i, n + j), unit(f, N, j, n + i)));
        }
      break;
    }
    case SubalgebraName::D: {
      require_even(ctx);
      for (int i = 0; i < n; ++i) mats.push_back(unit(f, N, i, n + i));
      break;
    }
    case SubalgebraName::D_k: {
      require_even(ctx);
      if (param < 0 || param > n) fail(errc::domain, "k out of range");
      for (int i = 0; i < param; ++i) mats.push_back(unit(f, N, i, n + i));
      break;
    }
    case SubalgebraName::b: {
      StandardSubalgebra t = standard_subalgebra(ctx, SubalgebraName::t);
      StandardSubalgebra nn = standard_subalgebra(ctx, SubalgebraName::n);
      return {name, param, t.basis.sum(nn.basis)};
    }
    case SubalgebraName::N_k: {
      if (param < 0 || param > n) fail(errc::domain, "k out of range");
      StandardSubalgebra t = standard_subalgebra(ctx, SubalgebraName::t);
      StandardSubalgebra ns = standard_subalgebra(ctx, SubalgebraName::n_s);
      StandardSubalgebra dk =
          standard_subalgebra(ctx, SubalgebraName::D_k, param);
      return {name, param, t.basis.sum(ns.basis).sum(dk.basis)};
    }
    case SubalgebraName::M_i: {
      if (param < 1 || param > n) fail(errc::domain, "i out of range");
      std::vector<Vec> rows;
      for (int i = 1; i <= param; ++i) {
        Vec v(size_t(N), 0);
        v[size_t(ctx.e_index(i))] = 1;
        rows.push_back(v);
      }
      StandardSubalgebra out{name, param,
                             Subspace::span_vectors(f, N, rows)};
      return out;
    }
    case SubalgebraName::g_V: {
      if (ctx.parity() != Parity::odd)
        fail(errc::domain, "g_V needs the odd context");
      for (int i = 0; i < 2 * n; ++i) {
        GThetaParts parts;
        parts.h_part = Mat(f, 2 * n, 2 * n);
        parts.v_part.assign(size_t(2 * n), 0);
        parts.v_part[size_t(i)] = 1;
        mats.push_back(assemble_g_theta(parts, ctx));
      }
      break;
    }
    case SubalgebraName::z: {
      if (ctx.parity() != Parity::odd)
        fail(errc::domain, "z needs the odd context");
      mats.push_back(unit(f, N, 0, 0));
      break;
    }
  }
  return {name, param, span_mats(f, N, mats)};
}

bool in_t(const Mat& x, const FormContext& ctx) {
  if (!x.is_square() || x.rows() != ctx.N()) return false;
  int n = ctx.n();
  for (int i = 0; i < ctx.N(); ++i)
    for (int j = 0; j < ctx.N(); ++j)
      if (i != j && x.at(i, j)) return false;
  for (int i = 0; i < n; ++i)
    if (x.at(i, i) != x.at(n + i, n + i)) return false;
  return true;
}

bool in_t_sr(const Mat& x, const FormContext& ctx) {
  if (!in_t(x, ctx)) return false;
  int n = ctx.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (x.at(i, i) == x.at(j, j)) return false;
  return true;
}

Mat torus_element(const FormContext& ctx, const std::vector<uint16_t>& ts) {
  require_even(ctx);
  int n = ctx.n();
  if (int(ts.size()) != n) fail(errc::shape, "need n torus entries");
  Mat x(ctx.field(), 2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    x.set(i, i, ts[size_t(i)]);
    x.set(n + i, n + i, ts[size_t(i)]);
  }
  return x;
}

std::vector<Mat> enumerate_t_sr(const FormContext& ctx) {
  require_even(ctx);
  int n = ctx.n();
  uint32_t q = ctx.field().order();
  std::vector<Mat> out;
  std::vector<uint16_t> ts(size_t(n), 0);
  // odometer over all n-tuples, keep the pairwise-distinct ones
  while (true) {
    bool distinct = true;
    for (int i = 0; i < n && distinct; ++i)
      for (int j = i + 1; j < n && distinct; ++j)
        if (ts[size_t(i)] == ts[size_t(j)]) distinct = false;
    if (distinct) out.push_back(torus_element(ctx, ts));
    int pos = 0;
    while (pos < n) {
      if (++ts[size_t(pos)] < q) break;
      ts[size_t(pos)] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  return out;
}

Mat diagonalize_split_semisimple(const Mat& x, const FormContext& ctx) {
  require_even(ctx);
  if (!membership(x, ctx, GroupKind::sp_lie))
    fail(errc::membership, "input is not in the symplectic algebra");
  if (in_t(x, ctx)) return Mat::identity(ctx.field(), ctx.N());

  Field f = ctx.field();
  int N = ctx.N(), n = ctx.n();
  // Split eigenspace decomposition.
  std::vector<std::pair<uint16_t, Subspace>> eigen;
  int total = 0;
  for (uint32_t mu = 0; mu < f.order(); ++mu) {
    Mat shifted = x;
    for (int i = 0; i < N; ++i)
      shifted.set(i, i, shifted.at(i, i) ^ uint16_t(mu));
    Subspace ker = rref_rank_kernel(shifted).kernel;
    if (ker.dim() > 0) {
      eigen.emplace_back(uint16_t(mu), ker);
      total += ker.dim();
    }
  }
  if (total != N) {
    // distinguish repeated roots from roots outside the field
    int gen_total = 0;
    for (auto& [mu, ker] : eigen) {
      Mat shifted = x;
      for (int i = 0; i < N; ++i)
        shifted.set(i, i, shifted.at(i, i) ^ mu);
      gen_total += rref_rank_kernel(mat_pow(shifted, uint64_t(N))).kernel.dim();
    }
    if (gen_total == N)
      fail(errc::semisimplicity, "matrix is not semisimple");
    fail(errc::splitting, "eigenvalues do not all lie in the base field");
  }
  for (auto& [mu, ker] : eigen)
    if (ker.dim() % 2 != 0)
      fail(errc::semisimplicity, "odd-dimensional eigenspace");

  // Greedy symplectic basis inside each eigenspace: pick v, find w with
  // <v,w> != 0, normalize, pass to the orthogonal complement of the pair.
  std::vector<Vec> es, fs;
  std::vector<uint16_t> values;
  for (auto& [mu, ker] : eigen) {
    std::vector<Vec> space;
    for (int i = 0; i < ker.dim(); ++i) {
      Vec v(size_t(N));
      for (int j = 0; j < N; ++j) v[size_t(j)] = ker.basis.at(i, j);
      space.push_back(v);
    }
    while (!space.empty()) {
      Vec v = space[0];
      int wi = -1;
      for (size_t i = 1; i < space.size(); ++i)
        if (ctx.form(v, space[i])) {
          wi = int(i);
          break;
        }
      if (wi < 0)
        fail(errc::semisimplicity, "degenerate form on eigenspace");
      Vec w = space[size_t(wi)];
      uint16_t scale = f.inv(ctx.form(v, w));
      for (auto& c : w) c = f.mul(scale, c);
      es.push_back(v);
      fs.push_back(w);
      values.push_back(mu);
      // project the rest into the perp of <v, w>
      std::vector<Vec> next;
      for (size_t i = 1; i < space.size(); ++i) {
        if (int(i) == wi) continue;
        Vec u = space[i];
        uint16_t a = ctx.form(u, w);  // coefficient along v
        uint16_t b = ctx.form(v, u);  // coefficient along w
        for (int j = 0; j < N; ++j)
          u[size_t(j)] ^= uint16_t(f.mul(a, v[size_t(j)]) ^ f.mul(b, w[size_t(j)]));
        bool nz = false;
        for (auto c : u) nz |= c != 0;
        if (nz) next.push_back(u);
      }
      space = std::move(next);
    }
  }
  (void)values;
  if (int(es.size()) != n) fail(errc::semisimplicity, "pairing failed");
  Mat g(f, N, N);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < N; ++i) {
      g.set(i, j, es[size_t(j)][size_t(i)]);
      g.set(i, n + j, fs[size_t(j)][size_t(i)]);
    }
  if (!membership(g, ctx, GroupKind::Sp))
    fail(errc::membership, "assembled change of basis is not symplectic");
  Mat conj = mul(mul(inverse(g), x), g);
  if (!in_t(conj, ctx)) fail(errc::semisimplicity, "conjugate missed t");
  return g;
}

}  // namespace slab
