#pragma once

#include <optional>

#include "slab/form.hpp"

namespace slab {

// Named subalgebras/subspaces attached to the even standard context,
// realized as explicit bases. Matrix-space members live in k^(N*N)
// (row-major), M_i lives in k^N.
enum class SubalgebraName {
  t,    // Diag(t_1..t_n, t_1..t_n)
  b,    // t + n
  n,    // strict upper a with symmetric upper-right block
  n_s,  // short-root part: zero diagonal in the upper-right block
  D,    // diagonal upper-right block
  D_k,  // first k diagonal positions (param k)
  N_k,  // t + n_s + D_k (param k)
  M_i,  // span(e_1..e_i) inside V (param i)
  g_V,  // odd contexts: the vector part of the fixed space
  z,    // odd contexts: the scalar corner line
};

struct StandardSubalgebra {
  SubalgebraName name;
  int param = -1;
  Subspace basis;
};

StandardSubalgebra standard_subalgebra(const FormContext& ctx,
                                       SubalgebraName name, int param = -1);

// Subregular predicate: semisimple diagonal with pairwise distinct entries.
bool in_t(const Mat& x, const FormContext& ctx);
bool in_t_sr(const Mat& x, const FormContext& ctx);
// All t_sr(F_q) points (even context), as matrices.
std::vector<Mat> enumerate_t_sr(const FormContext& ctx);
Mat torus_element(const FormContext& ctx, const std::vector<uint16_t>& ts);

// Lemma-style diagonalization: for x in sp semisimple with all eigenvalues
// in the base field and even-dimensional eigenspaces, returns g in Sp with
// g^-1 x g in t. Eigenspace decomposition, then a greedy symplectic basis
// per eigenspace.
Mat diagonalize_split_semisimple(const Mat& x, const FormContext& ctx);

}  // namespace slab
