#pragma once

#include "bordx/chern_vector.hpp"
#include "bordx/integer.hpp"
#include "bordx/partition.hpp"

namespace bordx {

ChernVector cp(int n);
ChernVector product(const ChernVector& a, const ChernVector& b);

Integer s_num(const ChernVector& a);
// Characteristic number of the monomial symmetric function m_w (s_(n) = s_num).
Integer s_omega(const ChernVector& a, const Partition& w);
Rational todd(const ChernVector& a);

ChernVector boundary(const ChernVector& a);
ChernVector boundary_k(const ChernVector& a, int k);
ChernVector delta(const ChernVector& a);
ChernVector psi_k1k2(const ChernVector& a, int k1, int k2);
inline ChernVector chi(const ChernVector& a) { return psi_k1k2(a, 1, 0); }
inline ChernVector psi(const ChernVector& a) { return psi_k1k2(a, 1, 1); }

ChernVector twisted_mul(const ChernVector& a, const ChernVector& b);
ChernVector rho(const ChernVector& a);
ChernVector stong_pi(const ChernVector& a);

bool in_W(const ChernVector& a);
bool in_ker_boundary(const ChernVector& a);
bool c1_numbers_vanish(const ChernVector& a);

// V^4 = Psi(point), with c1^2 = -1, c2 = 1.
ChernVector v4_class();
// K = 9 [CP^1]^2 - 8 [CP^2], with c1^2 = 0, c2 = 12.
ChernVector k_class();

}  // namespace bordx
