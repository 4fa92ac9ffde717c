#include "slab/gf2packed.hpp"

namespace slab {

Gf2Mat pack_gf2(const Mat& m) {
  if (m.field().degree() != 1) fail(errc::field_mismatch, "pack needs GF(2)");
  if (!m.is_square() || m.rows() > Gf2Mat::kMaxDim)
    fail(errc::shape, "pack needs square matrix of dim <= 32");
  Gf2Mat p;
  p.n = m.rows();
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (m.at(i, j)) p.row[size_t(i)] |= uint64_t(1) << j;
  return p;
}

Mat unpack_gf2(const Gf2Mat& m) {
  Mat out(Field::gf(1), m.n, m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (m.get(i, j)) out.set(i, j, 1);
  return out;
}

int rank(const Gf2Mat& m) {
  std::array<uint64_t, Gf2Mat::kMaxDim> rows = m.row;
  int r = 0;
  for (int col = 0; col < m.n; ++col) {
    int piv = -1;
    for (int i = r; i < m.n; ++i)
      if ((rows[size_t(i)] >> col) & 1u) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[size_t(piv)], rows[size_t(r)]);
    for (int i = 0; i < m.n; ++i)
      if (i != r && ((rows[size_t(i)] >> col) & 1u))
        rows[size_t(i)] ^= rows[size_t(r)];
    ++r;
  }
  return r;
}

Gf2Mat inverse_gf2(const Gf2Mat& a) {
  Gf2Mat work = a;
  Gf2Mat inv = Gf2Mat::identity(a.n);
  int r = 0;
  for (int col = 0; col < a.n; ++col) {
    int piv = -1;
    for (int i = r; i < a.n; ++i)
      if ((work.row[size_t(i)] >> col) & 1u) {
        piv = i;
        break;
      }
    if (piv < 0) fail(errc::membership, "singular packed matrix");
    std::swap(work.row[size_t(piv)], work.row[size_t(r)]);
    std::swap(inv.row[size_t(piv)], inv.row[size_t(r)]);
    for (int i = 0; i < a.n; ++i)
      if (i != r && ((work.row[size_t(i)] >> col) & 1u)) {
        work.row[size_t(i)] ^= work.row[size_t(r)];
        inv.row[size_t(i)] ^= inv.row[size_t(r)];
      }
    ++r;
  }
  return inv;
}

}  // namespace slab
