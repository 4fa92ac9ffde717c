#include "slab/orbit.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <unordered_map>

#include "slab/gf2packed.hpp"
#include "slab/parallel.hpp"

namespace slab {

std::string OrbitFingerprint::to_string() const {
  std::string s = lambda.to_string();
  s += "|";
  for (int e : eps) s += char('0' + e);
  return s;
}

namespace {

uint16_t gram_form(const Mat& gram, const Vec& u, const Vec& v) {
  Field f = gram.field();
  Vec gv = mul_vec(gram, v);
  uint16_t s = 0;
  for (size_t i = 0; i < u.size(); ++i)
    if (u[i] && gv[i]) s ^= f.mul(u[i], gv[i]);
  return s;
}

}  // namespace

OrbitFingerprint nilpotent_fingerprint_gram(const Mat& x, const Mat& gram) {
  if (!x.is_square() || gram.rows() != x.rows())
    fail(errc::shape, "gram/matrix shape mismatch");
  int N = x.rows();
  OrbitFingerprint fp;
  if (N == 0) return fp;
  fp.lambda = jordan_type(x);  // raises on non-nilpotent input
  int top = fp.lambda.first();
  fp.eps.assign(size_t(top), 0);
  Mat xp = Mat::identity(x.field(), N);  // x^(m-1)
  Mat xm = x;                            // x^m
  for (int m = 1; m <= top; ++m) {
    Subspace ker = rref_rank_kernel(xm).kernel;
    for (int i = 0; i < ker.dim() && !fp.eps[size_t(m - 1)]; ++i) {
      Vec v(size_t(N));
      for (int j = 0; j < N; ++j) v[size_t(j)] = ker.basis.at(i, j);
      Vec xv = mul_vec(xp, v);
      if (gram_form(gram, xv, v)) fp.eps[size_t(m - 1)] = 1;
    }
    xp = xm;
    xm = mul(xm, x);
  }
  return fp;
}

OrbitFingerprint sp_nilpotent_fingerprint(const Mat& x,
                                          const FormContext& ctx) {
  if (!membership(x, ctx, GroupKind::sp_lie))
    fail(errc::membership, "not in the symplectic algebra");
  return nilpotent_fingerprint_gram(x, ctx.J());
}

std::vector<Mat> sp_basis(const FormContext& ctx) {
  if (ctx.parity() != Parity::even)
    fail(errc::domain, "sp basis needs the even context");
  Field f = ctx.field();
  int n = ctx.n(), N = ctx.N();
  std::vector<Mat> basis;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat m(f, N, N);
      m.set(i, j, 1);
      m.set(n + j, n + i, 1);
      basis.push_back(m);
    }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Mat b(f, N, N);
      b.set(i, n + j, 1);
      if (i != j) b.set(j, n + i, 1);
      basis.push_back(b);
      Mat c(f, N, N);
      c.set(n + i, j, 1);
      if (i != j) c.set(n + j, i, 1);
      basis.push_back(c);
    }
  return basis;
}

std::vector<Mat> g_theta_basis(const FormContext& ctx) {
  if (ctx.parity() != Parity::odd)
    fail(errc::domain, "fixed-space basis needs the odd context");
  Subspace sol = matrix_space_solutions(
      ctx.field(), ctx.N(), ctx.N(), [&ctx](const Mat& m) {
        Mat jm = mul(ctx.J(), m);
        return add(jm, jm.transpose());
      });
  std::vector<Mat> basis;
  for (int i = 0; i < sol.dim(); ++i) {
    Vec row(size_t(sol.ambient));
    for (int j = 0; j < sol.ambient; ++j) row[size_t(j)] = sol.basis.at(i, j);
    basis.push_back(unvectorize(ctx.field(), ctx.N(), ctx.N(), row));
  }
  return basis;
}

namespace {

void mul_into(Field f, int N, const std::vector<uint16_t>& a,
              const std::vector<uint16_t>& b, std::vector<uint16_t>& out) {
  std::fill(out.begin(), out.end(), 0);
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k) {
      uint16_t aik = a[size_t(i) * N + k];
      if (!aik) continue;
      const uint16_t* brow = &b[size_t(k) * N];
      uint16_t* orow = &out[size_t(i) * N];
      for (int j = 0; j < N; ++j)
        if (brow[j]) orow[j] ^= f.mul(aik, brow[j]);
    }
}

bool nilpotent_flat(Field f, int N, const std::vector<uint16_t>& a,
                    std::vector<uint16_t>& t1, std::vector<uint16_t>& t2) {
  t1 = a;
  int covered = 1;
  while (covered < N) {
    mul_into(f, N, t1, t1, t2);
    std::swap(t1, t2);
    covered *= 2;
  }
  for (uint16_t v : t1)
    if (v) return false;
  return true;
}

std::vector<Mat> space_basis_mats(Field f, int N, const Subspace& space) {
  std::vector<Mat> basis;
  for (int i = 0; i < space.dim(); ++i) {
    Vec row(size_t(space.ambient));
    for (int j = 0; j < space.ambient; ++j) row[size_t(j)] = space.basis.at(i, j);
    basis.push_back(unvectorize(f, N, N, row));
  }
  return basis;
}

}  // namespace

std::vector<Mat> enumerate_nilpotents_in_space(Field f, int N,
                                               const Subspace& space,
                                               bool unsafe,
                                               unsigned long long guard) {
  if (space.ambient != N * N) fail(errc::shape, "not a matrix-space subspace");
  int d = space.dim();
  double total = std::pow(double(f.order()), d);
  if (!unsafe && total > double(guard))
    fail(errc::resource_limit, "scan of " + std::to_string(total) +
                                   " elements exceeds the guard");
  std::vector<Mat> basis = space_basis_mats(f, N, space);
  std::vector<Mat> out;

  if (f.degree() == 1 && N <= 8) {
    // Gray-code walk: one basis flip per step.
    std::vector<Gf2Mat> pb;
    for (const Mat& b : basis) pb.push_back(pack_gf2(b));
    Gf2Mat cur;
    cur.n = N;
    uint64_t steps = uint64_t(1) << d;
    if (is_nilpotent(cur)) out.push_back(unpack_gf2(cur));
    for (uint64_t i = 1; i < steps; ++i) {
      int flip = __builtin_ctzll(i);
      cur = add(cur, pb[size_t(flip)]);
      if (is_nilpotent(cur)) out.push_back(unpack_gf2(cur));
    }
    return out;
  }

  // Radix-q odometer; one digit changes per step, supports are XOR deltas.
  std::vector<std::vector<int>> support(size_t(d));
  for (int i = 0; i < d; ++i)
    for (int c = 0; c < N * N; ++c)
      if (basis[size_t(i)].data()[size_t(c)]) support[size_t(i)].push_back(c);
  std::vector<uint16_t> digits(size_t(d), 0);
  std::vector<uint16_t> cur(size_t(N) * N, 0), t1(cur), t2(cur);
  uint32_t q = f.order();
  while (true) {
    if (nilpotent_flat(f, N, cur, t1, t2))
      out.push_back(unvectorize(f, N, N, cur));
    int pos = 0;
    while (pos < d) {
      uint16_t oldv = digits[size_t(pos)];
      uint16_t newv = uint16_t((oldv + 1) % q);
      digits[size_t(pos)] = newv;
      uint16_t delta = oldv ^ newv;
      for (int c : support[size_t(pos)]) cur[size_t(c)] ^= delta;
      if (newv != 0) break;
      ++pos;
    }
    if (pos == d) break;
  }
  return out;
}

std::vector<Mat> enumerate_sp_nilpotents(const FormContext& ctx, bool unsafe) {
  Subspace space = matrix_space_solutions(
      ctx.field(), ctx.N(), ctx.N(), [&ctx](const Mat& m) {
        return add(mul(m.transpose(), ctx.J()), mul(ctx.J(), m));
      });
  return enumerate_nilpotents_in_space(ctx.field(), ctx.N(), space, unsafe);
}

std::vector<Mat> enumerate_gl_nilpotents(Field f, int N, bool unsafe) {
  return enumerate_nilpotents_in_space(f, N, Subspace::full(f, N * N), unsafe);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) {
    for (size_t i = 0; i < n; ++i) parent[i] = int(i);
  }
  int find(int a) {
    while (parent[size_t(a)] != a) {
      parent[size_t(a)] = parent[size_t(parent[size_t(a)])];
      a = parent[size_t(a)];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[size_t(b)] = a;  // smaller index wins: deterministic roots
  }
};

OrbitPartition finish(UnionFind& uf) {
  OrbitPartition part;
  size_t n = uf.parent.size();
  part.orbit_of.assign(n, -1);
  std::unordered_map<int, int> root_to_orbit;
  for (size_t i = 0; i < n; ++i) {
    int r = uf.find(int(i));
    auto [it, fresh] = root_to_orbit.try_emplace(r, int(part.orbits.size()));
    if (fresh) part.orbits.emplace_back();
    part.orbit_of[i] = it->second;
    part.orbits[size_t(it->second)].push_back(int(i));
  }
  return part;
}

bool key_fits_u64(Field f, int N) { return f.degree() * N * N <= 64; }

uint64_t mat_key_u64(const Mat& m, int kbits) {
  uint64_t key = 0;
  const auto& a = m.data();
  for (size_t i = a.size(); i-- > 0;) key = (key << kbits) | a[i];
  return key;
}

}  // namespace

uint32_t vec_code(const Vec& v, int kbits) {
  uint32_t code = 0;
  for (size_t i = v.size(); i-- > 0;) code = (code << kbits) | v[i];
  return code;
}

Vec vec_decode(uint32_t code, int len, int kbits) {
  Vec v(size_t(len));
  uint32_t mask = (uint32_t(1) << kbits) - 1;
  for (int i = 0; i < len; ++i) {
    v[size_t(i)] = uint16_t(code & mask);
    code >>= kbits;
  }
  return v;
}

OrbitPartition orbit_partition(const std::vector<Mat>& elements,
                               const std::vector<Mat>& generators,
                               OrbitAction action, int jobs) {
  if (action == OrbitAction::pair_action)
    fail(errc::precondition, "pair action goes through orbit_partition_pairs");
  if (elements.empty()) return OrbitPartition{};
  Field f = elements[0].field();
  int N = elements[0].rows();
  if (!key_fits_u64(f, N))
    fail(errc::resource_limit, "element keys exceed 64 bits");
  int kbits = f.degree();

  std::vector<uint64_t> keys(elements.size());
  for (size_t i = 0; i < elements.size(); ++i)
    keys[i] = mat_key_u64(elements[i], kbits);
  std::vector<size_t> order(elements.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return keys[a] < keys[b]; });
  std::vector<uint64_t> sorted_keys(elements.size());
  for (size_t i = 0; i < order.size(); ++i) sorted_keys[i] = keys[order[i]];
  auto locate = [&](uint64_t key) -> int {
    auto it = std::lower_bound(sorted_keys.begin(), sorted_keys.end(), key);
    if (it == sorted_keys.end() || *it != key)
      fail(errc::closure, "generator image escapes the element set");
    return int(order[size_t(it - sorted_keys.begin())]);
  };

  UnionFind uf(elements.size());
  if (f.degree() == 1 && N <= 8) {
    std::vector<Gf2Mat> g2, gi2, x2(elements.size());
    for (const Mat& g : generators) {
      Gf2Mat p = pack_gf2(g);
      g2.push_back(p);
      gi2.push_back(inverse_gf2(p));
    }
    for (size_t i = 0; i < elements.size(); ++i) x2[i] = pack_gf2(elements[i]);
    // images computed in parallel, unions applied sequentially per chunk
    size_t gcount = g2.size();
    std::vector<int> images(elements.size() * gcount);
    parallel_chunks(
        elements.size(),
        [&](size_t lo, size_t hi) {
          for (size_t i = lo; i < hi; ++i)
            for (size_t gi = 0; gi < gcount; ++gi) {
              Gf2Mat img = mul(mul(g2[gi], x2[i]), gi2[gi]);
              images[i * gcount + gi] = locate(img.key());
            }
        },
        jobs);
    for (size_t i = 0; i < elements.size(); ++i)
      for (size_t gi = 0; gi < gcount; ++gi)
        uf.unite(int(i), images[i * gcount + gi]);
  } else {
    std::vector<Mat> ginv;
    for (const Mat& g : generators) ginv.push_back(inverse(g));
    size_t gcount = generators.size();
    std::vector<int> images(elements.size() * gcount);
    parallel_chunks(
        elements.size(),
        [&](size_t lo, size_t hi) {
          for (size_t i = lo; i < hi; ++i)
            for (size_t gi = 0; gi < gcount; ++gi) {
              Mat img = mul(mul(generators[gi], elements[i]), ginv[gi]);
              images[i * gcount + gi] = locate(mat_key_u64(img, kbits));
            }
        },
        jobs);
    for (size_t i = 0; i < elements.size(); ++i)
      for (size_t gi = 0; gi < gcount; ++gi)
        uf.unite(int(i), images[i * gcount + gi]);
  }
  return finish(uf);
}

OrbitPartition orbit_partition_pairs(const std::vector<Mat>& xs, int vec_len,
                                     const std::vector<Mat>& generators,
                                     int jobs) {
  (void)jobs;
  if (xs.empty()) return OrbitPartition{};
  Field f = xs[0].field();
  int kbits = f.degree();
  if (!key_fits_u64(f, xs[0].rows()))
    fail(errc::resource_limit, "element keys exceed 64 bits");
  uint32_t q = f.order();
  uint64_t vcount = 1;
  for (int i = 0; i < vec_len; ++i) vcount *= q;

  std::vector<uint64_t> keys(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) keys[i] = mat_key_u64(xs[i], kbits);
  std::vector<size_t> order(xs.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return keys[a] < keys[b]; });
  std::vector<uint64_t> sorted_keys(xs.size());
  for (size_t i = 0; i < order.size(); ++i) sorted_keys[i] = keys[order[i]];
  auto locate = [&](uint64_t key) -> int {
    auto it = std::lower_bound(sorted_keys.begin(), sorted_keys.end(), key);
    if (it == sorted_keys.end() || *it != key)
      fail(errc::closure, "generator image escapes the element set");
    return int(order[size_t(it - sorted_keys.begin())]);
  };

  UnionFind uf(xs.size() * size_t(vcount));
  for (const Mat& g : generators) {
    // permutation of the x list and of the vector codes
    std::vector<int> xperm(xs.size());
    for (size_t i = 0; i < xs.size(); ++i)
      xperm[i] = locate(mat_key_u64(conjugate(g, xs[i]), kbits));
    std::vector<uint32_t> vperm(size_t(vcount));
    for (uint64_t c = 0; c < vcount; ++c) {
      Vec v = vec_decode(uint32_t(c), vec_len, kbits);
      vperm[size_t(c)] = vec_code(mul_vec(g, v), kbits);
    }
    for (size_t i = 0; i < xs.size(); ++i) {
      size_t base = i * size_t(vcount);
      size_t ibase = size_t(xperm[i]) * size_t(vcount);
      for (uint64_t c = 0; c < vcount; ++c)
        uf.unite(int(base + c), int(ibase + vperm[size_t(c)]));
    }
  }
  return finish(uf);
}

Mat x_xi_family(int n, FieldElem xi) {
  if (n < 1) fail(errc::precondition, "need n >= 1");
  FormContext ctx(xi.field, 2 * n + 1);
  Field f = xi.field;
  Mat y(f, 2 * n, 2 * n);
  for (int j = 1; j < n; ++j) y.set(j - 1, j, 1);  // e_n -> ... -> e_1 -> 0
  y.set(n - 1, 2 * n - 1, 1);                      // B = Diag(0,..,0,1)
  for (int j = 1; j < n; ++j) y.set(n + j, n + j - 1, 1);  // f part: (t)a
  GThetaParts parts;
  parts.h_part = y;
  parts.v_part.assign(size_t(2 * n), 0);
  parts.v_part[size_t(n - 1)] = xi.bits;  // c = (0,...,0,xi) on the e side
  parts.z_part = 0;
  Mat x = assemble_g_theta(parts, ctx);
  if (!membership(x, ctx, GroupKind::g_theta_lie))
    fail(errc::membership, "family element escaped the fixed space");
  return x;
}

DimEstimate estimate_orbit_dim(unsigned long long size_q1,
                               unsigned long long size_q2,
                               unsigned long long group_q1,
                               unsigned long long group_q2, int dim_group) {
  DimEstimate est;
  double d_orbit = std::log2(double(size_q2) / double(size_q1));
  double d_stab = std::log2((double(group_q2) / double(size_q2)) /
                            (double(group_q1) / double(size_q1)));
  int d_o = int(std::lround(d_orbit));
  int d_s = int(std::lround(d_stab));
  est.dim = d_o;
  est.reliable = std::abs(d_orbit - d_o) < 0.49 &&
                 std::abs(d_stab - d_s) < 0.49 && d_o + d_s == dim_group;
  return est;
}

std::vector<SpOrbitInfo> sp_orbit_summary(const FormContext& ctx,
                                          bool check_constancy, bool unsafe,
                                          int jobs) {
  std::vector<Mat> nilp = enumerate_sp_nilpotents(ctx, unsafe);
  std::vector<Mat> gens = sp_generators(ctx);
  OrbitPartition part = orbit_partition(nilp, gens, OrbitAction::conjugation, jobs);

  std::vector<SpOrbitInfo> out;
  for (const auto& orbit : part.orbits) {
    SpOrbitInfo info;
    info.size = orbit.size();
    info.rep = nilp[size_t(orbit[0])];
    info.fp = sp_nilpotent_fingerprint(info.rep, ctx);
    out.push_back(std::move(info));
  }
  if (check_constancy) {
    std::vector<OrbitFingerprint> want;
    for (auto& o : out) want.push_back(o.fp);
    std::atomic<bool> ok{true};
    parallel_chunks(
        nilp.size(),
        [&](size_t lo, size_t hi) {
          for (size_t i = lo; i < hi && ok.load(); ++i) {
            OrbitFingerprint fp = sp_nilpotent_fingerprint(nilp[i], ctx);
            if (fp != want[size_t(part.orbit_of[i])]) ok.store(false);
          }
        },
        jobs);
    if (!ok.load())
      fail(errc::domain, "fingerprint is not constant on an orbit");
  }
  std::sort(out.begin(), out.end(), [](const SpOrbitInfo& a, const SpOrbitInfo& b) {
    if (a.fp != b.fp) return a.fp < b.fp;
    return a.size < b.size;
  });
  for (size_t i = 0; i + 1 < out.size(); ++i)
    if (out[i].fp == out[i + 1].fp)
      fail(errc::domain, "fingerprint fails to separate two orbits");
  return out;
}

}  // namespace slab
