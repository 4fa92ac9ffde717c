#include "slab/form.hpp"

namespace slab {

FormContext::FormContext(Field f, int N) : field_(f), N_(N), J_(f, N, N) {
  if (N < 2) fail(errc::bad_input, "ambient dimension must be >= 2");
  n_ = N / 2;
  parity_ = (N % 2 == 0) ? Parity::even : Parity::odd;
  if (parity_ == Parity::even) {
    for (int i = 0; i < n_; ++i) {
      J_.set(i, n_ + i, 1);
      J_.set(n_ + i, i, 1);
    }
  } else {
    J_.set(0, 0, 1);
    for (int i = 0; i < n_; ++i) {
      J_.set(1 + i, 1 + n_ + i, 1);
      J_.set(1 + n_ + i, 1 + i, 1);
    }
  }
}

int FormContext::e_index(int i) const {
  if (i < 1 || i > n_) fail(errc::bad_input, "basis index out of range");
  return (parity_ == Parity::even) ? i - 1 : i;
}

int FormContext::f_index(int i) const {
  if (i < 1 || i > n_) fail(errc::bad_input, "basis index out of range");
  return (parity_ == Parity::even) ? n_ + i - 1 : 1 + n_ + i - 1;
}

int FormContext::e0_index() const {
  if (parity_ != Parity::odd) fail(errc::domain, "e_0 needs odd dimension");
  return 0;
}

uint16_t FormContext::form(const Vec& v, const Vec& w) const {
  if (int(v.size()) != N_ || int(w.size()) != N_)
    fail(errc::shape, "vector length mismatch");
  uint16_t s = 0;
  for (int i = 1; i <= n_; ++i) {
    int e = e_index(i), ff = f_index(i);
    if (v[size_t(e)] && w[size_t(ff)]) s ^= field_.mul(v[size_t(e)], w[size_t(ff)]);
    if (v[size_t(ff)] && w[size_t(e)]) s ^= field_.mul(v[size_t(ff)], w[size_t(e)]);
  }
  return s;
}

uint16_t FormContext::quad(const Vec& v) const {
  if (int(v.size()) != N_) fail(errc::shape, "vector length mismatch");
  uint16_t s = 0;
  if (parity_ == Parity::odd) s = field_.square(v[size_t(e0_index())]);
  for (int i = 1; i <= n_; ++i) {
    uint16_t a = v[size_t(e_index(i))], b = v[size_t(f_index(i))];
    if (a && b) s ^= field_.mul(a, b);
  }
  return s;
}

Mat theta(const Mat& g, const FormContext& ctx, ThetaLevel level) {
  if (!g.is_square() || g.rows() != ctx.N()) fail(errc::shape, "bad dimension");
  const Mat& J = ctx.J();
  if (level == ThetaLevel::lie) return mul(mul(J, g.transpose()), J);
  // group level needs g invertible; inverse() raises on singular input
  return mul(mul(J, inverse(g).transpose()), J);
}

bool membership(const Mat& m, const FormContext& ctx, GroupKind which) {
  if (!m.is_square() || m.rows() != ctx.N()) fail(errc::shape, "bad dimension");
  const Mat& J = ctx.J();
  Field f = ctx.field();
  int N = ctx.N();
  switch (which) {
    case GroupKind::Sp:
      if (ctx.parity() != Parity::even)
        fail(errc::domain, "Sp needs even dimension");
      [[fallthrough]];
    case GroupKind::G_theta: {
      Mat lhs = mul(mul(m.transpose(), J), m);
      return lhs == J;
    }
    case GroupKind::O: {
      // Preserves the polarized form on all basis pairs and Q on the basis;
      // additivity of Q(v+w) - Q(v) - Q(w) makes this sufficient in char 2.
      Mat lhs = mul(mul(m.transpose(), J), m);
      if (lhs != J) return false;
      for (int j = 0; j < N; ++j) {
        Vec e(size_t(N), 0), img(size_t(N));
        e[size_t(j)] = 1;
        for (int i = 0; i < N; ++i) img[size_t(i)] = m.at(i, j);
        if (ctx.quad(img) != ctx.quad(e)) return false;
      }
      return true;
    }
    case GroupKind::G_iota_theta: {
      Mat jm = mul(J, m);
      return jm == jm.transpose();
    }
    case GroupKind::sp_lie: {
      Mat lhs = add(mul(m.transpose(), J), mul(J, m));
      return lhs.is_zero();
    }
    case GroupKind::g_theta_lie: {
      Mat jm = mul(J, m);
      return jm == jm.transpose();
    }
  }
  (void)f;
  return false;
}

GThetaParts decompose_g_theta(const Mat& x, const FormContext& ctx) {
  if (ctx.parity() != Parity::odd)
    fail(errc::domain, "decomposition needs odd dimension");
  if (!membership(x, ctx, GroupKind::g_theta_lie))
    fail(errc::membership, "matrix fails the fixed-space predicate");
  int n = ctx.n();
  GThetaParts out;
  out.h_part = Mat(ctx.field(), 2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) out.h_part.set(i, j, x.at(1 + i, 1 + j));
  out.z_part = x.at(0, 0);
  // v = sum c_i e_i + sum b_i f_i where row 0 of x is (a, b, c); as a
  // coordinate vector that is the first column below the corner.
  out.v_part.assign(size_t(2 * n), 0);
  for (int i = 0; i < 2 * n; ++i) out.v_part[size_t(i)] = x.at(1 + i, 0);
  return out;
}

Mat assemble_g_theta(const GThetaParts& parts, const FormContext& ctx) {
  if (ctx.parity() != Parity::odd)
    fail(errc::domain, "assembly needs odd dimension");
  int n = ctx.n();
  if (parts.h_part.rows() != 2 * n || int(parts.v_part.size()) != 2 * n)
    fail(errc::shape, "bad part shapes");
  Mat x(ctx.field(), 2 * n + 1, 2 * n + 1);
  x.set(0, 0, parts.z_part);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) x.set(1 + i, 1 + j, parts.h_part.at(i, j));
  // column below the corner is (c; b); row right of the corner is (b, c)
  for (int i = 0; i < n; ++i) {
    uint16_t c = parts.v_part[size_t(i)];
    uint16_t b = parts.v_part[size_t(n + i)];
    x.set(1 + i, 0, c);
    x.set(1 + n + i, 0, b);
    x.set(0, 1 + i, b);
    x.set(0, 1 + n + i, c);
  }
  return x;
}

}  // namespace slab
