#pragma once

#include <vector>

#include "bordx/integer.hpp"
#include "bordx/partition.hpp"

namespace bordx {

// p if i + 1 is a power of the prime p, otherwise 1.
Integer m_number(int i);
// Minimal |s_{n-1}| target: -48, 2 m_{n-1} m_{n-2} (odd n > 3), m_{n-1} m_{n-2} (even n > 3).
Integer g_number(int n);
// multinomial(n; w) * prod (i_j + 1)^{i_j}
Integer alpha(const Partition& w);
// Partitions of n with all parts at most n - 2.
std::vector<Partition> phat(int n);
// Number of partitions of n by Euler's pentagonal recurrence.
Integer partition_count(int n);

// -C(n,1) + C(n,2) - ... + C(n,n1) with n = n1 + n2: s-number of Ltilde(n1, n2).
Integer ltilde_s_closed_form(int n1, int n2);
// 2(-C(n,1) + C(n,2) - ... + C(n,n1) - n1) with n = n1 + n2 + 1: s-number of Ntilde(n1, n2).
Integer ntilde_s_closed_form(int n1, int n2);

struct GcdCheck {
  Integer gcd;
  Integer target;
  bool matches = false;
};

// gcd of alpha(w) over phat(n), compared with |g(n)|.
GcdCheck verify_alpha_gcd(int n);
// gcd of |C(2k+1, 2i) - C(2k+1, 2i-1)| over 0 < i <= k, compared with m_{2k+1} m_{2k}.
GcdCheck verify_gcddif(int k);

struct PowerCheck {
  Integer largest_power;
  Integer expected;
  bool matches = false;
};

// a_i = sum_{j=1}^{2i} (-1)^j C(2k, j) - 2i for 0 < i < k.
Integer nmod_term(int k, int i);
// Largest power of the prime p dividing every a_i.
PowerCheck verify_nmod(int k, unsigned long p);

struct RankRow {
  int dimension = 0;  // real dimension 2n
  Integer rank_omega_u;
  Integer rank_w;
  Integer rank_omega_su;
  Integer tors_rank;      // Tors Omega^SU in dimension 2n
  Integer tors_rank_odd;  // Tors Omega^SU in dimension 2n + 1
  Integer hw_rank;        // Z/2-rank of H(W, d) in dimension 2n
};

std::vector<RankRow> rank_table(int max_n);

}  // namespace bordx
