#pragma once

#include <string>
#include <vector>

#include "slab/linalg.hpp"
#include "slab/matrix.hpp"

namespace slab {

enum class Parity { even, odd };

// Ambient data for GL_N in characteristic 2: the symmetric matrix J, the
// quadratic form Q polarizing to <v,w> = v^t J w, and the labelled basis.
//
// N = 2n:   basis e_1..e_n f_1..f_n, J = antidiagonal identity blocks,
//           Q(v) = sum x_i y_i.
// N = 2n+1: basis e_0 e_1..e_n f_1..f_n, J has a leading 1 block,
//           Q(v) = x_0^2 + sum x_i y_i.
class FormContext {
 public:
  FormContext(Field f, int N);

  Field field() const { return field_; }
  int N() const { return N_; }
  int n() const { return n_; }
  Parity parity() const { return parity_; }
  const Mat& J() const { return J_; }

  // 0-based basis indices.
  int e_index(int i) const;  // e_i, 1 <= i <= n
  int f_index(int i) const;  // f_i, 1 <= i <= n
  int e0_index() const;      // odd N only

  // <v, w> = v^t J w
  uint16_t form(const Vec& v, const Vec& w) const;
  // Q(v): diagonal squares plus the e_i f_i cross terms.
  uint16_t quad(const Vec& v) const;

  // Same dimension and n over another field (integer seed data carries over).
  FormContext over(Field f) const { return FormContext(f, N_); }

 private:
  Field field_;
  int N_, n_;
  Parity parity_;
  Mat J_;
};

// theta at the two levels: group g -> J^-1 (g^t)^-1 J, lie x -> J x^t J.
enum class ThetaLevel { group, lie };
Mat theta(const Mat& g, const FormContext& ctx, ThetaLevel level);

enum class GroupKind {
  Sp,            // g^t J g = J  (N even)
  O,             // form preserved and Q(g e) = Q(e) on the basis
  G_theta,       // g^t J g = J  (either parity)
  G_iota_theta,  // (Jg)^t = Jg
  sp_lie,        // x^t J + J x = 0
  g_theta_lie,   // (Jx)^t = Jx
};

bool membership(const Mat& m, const FormContext& ctx, GroupKind which);

// Odd-N decomposition g^theta = h + g_V + z: the sp(V) block, the vector
// part (e-coordinates then f-coordinates), and the scalar corner.
struct GThetaParts {
  Mat h_part;   // 2n x 2n, in sp(V)
  Vec v_part;   // length 2n
  uint16_t z_part = 0;
};
GThetaParts decompose_g_theta(const Mat& x, const FormContext& ctx);
Mat assemble_g_theta(const GThetaParts& parts, const FormContext& ctx);

}  // namespace slab
