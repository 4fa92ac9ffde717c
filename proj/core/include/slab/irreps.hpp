#pragma once

#include <string>
#include <vector>

#include "slab/multipartition.hpp"

namespace slab {

// Hook-length dimension of the S_n irreducible labelled by lambda, with the
// unit representation at lambda = (n).
unsigned long long hook_dim(const Partition& lambda);

unsigned long long binomial(int n, int k);
unsigned long long multinomial(int n, const std::vector<int>& parts);

// dim of the W_{n,r} irreducible labelled by an r-multipartition:
// multinomial(n; |l^(i)|) * prod hook_dim(l^(i)).
unsigned long long wreath_dim(const Multipartition& label);

// Label of an irreducible of W-nat_m = S_{m1} x W_{m2}: a partition of m1
// and a bipartition of m2.
struct WNatLabel {
  Partition rho1;
  Partition mu2;  // trivially-extended slot, |mu2| = k
  Partition mu3;  // sign-extended slot,     |mu3| = m2 - k
  std::string to_string() const;
  bool operator==(const WNatLabel& o) const {
    return rho1 == o.rho1 && mu2 == o.mu2 && mu3 == o.mu3;
  }
  bool operator<(const WNatLabel& o) const {
    if (rho1 != o.rho1) return rho1 < o.rho1;
    if (mu2 != o.mu2) return mu2 < o.mu2;
    return mu3 < o.mu3;
  }
};

// dim rho-nat = hook(rho1) * binom(m2, k) * hook(mu2) * hook(mu3).
unsigned long long w_nat_dim(const WNatLabel& label);

// The k-indexed bijection from pairs (rho', rho'') in S_k^ x S_{n-k}^ onto
// bipartitions: label-level identity with dim binom(n,k) hook hook.
struct WnBijectionRow {
  Partition rho_prime, rho_doubleprime;  // |rho'| = k
  Multipartition image;                  // bipartition (rho', rho'')
  unsigned long long dim = 0;
};
WnBijectionRow bijection_wn(const Partition& rho_prime,
                            const Partition& rho_doubleprime);

// From a triple in S_{m(k)}^ (weights m1, k, m2-k) to the W_{n,3} label and
// the W-nat_m label.
struct NatHatRow {
  Multipartition rho_hat;  // (l1, l2, l3)
  WNatLabel rho_nat;       // (l1, (l2, l3))
  unsigned long long dim_hat = 0;
  unsigned long long dim_nat = 0;
};
NatHatRow nat_and_hat_maps(const Partition& rho1, const Partition& rho2,
                           const Partition& rho3);

// |W_{n,r}| = r^n n!
unsigned long long wreath_order(int n, int r);

// W-nat_m data for m = (m1, m2, 0): the order m1! 2^m2 m2!, and the count of
// signed permutations fixing span(e_1..e_m1) with no sign flips inside it.
struct WNatData {
  unsigned long long order = 0;
  unsigned long long stabilizer_count = 0;
};
WNatData w_nat_data(int n, const CompositionM& m);

}  // namespace slab
