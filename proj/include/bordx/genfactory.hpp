#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bordx/chern_vector.hpp"
#include "bordx/integer.hpp"
#include "bordx/partition.hpp"

namespace bordx {

struct CombinationTerm {
  Integer coefficient;
  std::string source;
};

struct SuChecks {
  bool c1_vanish = false;
  bool in_w = false;
  bool in_ker_boundary = false;
  bool all() const { return c1_vanish && in_w && in_ker_boundary; }
};

struct GeneratorCertificate {
  int dimension = 0;  // real dimension 2i
  std::vector<CombinationTerm> combination;
  ChernVector cls;
  Integer s_value;
  Integer target;
  SuChecks su_checks;

  // s_value recomputed from the class, |s_value| = |target|, all SU checks.
  bool valid() const;
};

// Chern numbers of CP^{i_1} x ... x CP^{i_k}.
ChernVector cp_product(const Partition& omega);
// The Calabi-Yau hypersurface dual to c_1 in CP^omega, i.e. boundary(cp_product(omega)).
ChernVector cy_hypersurface(const Partition& omega);

// Combination of cy_hypersurface(w), w in phat(n), with s_{n-1} = g(n).
GeneratorCertificate cy_generator_combo(int n);
// Combination of Ltilde(n1, n2), n1 + n2 = 2k + 1, with |s| = m_{2k+1} m_{2k}.
GeneratorCertificate quasitoric_generator_odd(int k);
// Combination of Ntilde(n1, n2), n1 + n2 + 1 = 2k, with |s| = 2 m_{2k} m_{2k-1}.
GeneratorCertificate quasitoric_generator_even(int k);

// b_1 = CP^1; b_i = pi[CP^{2^p} x CP^{2^{p+1} q}] for i = 2^p (2q+1);
// b_i = pi[CP^{2^p} x CP^{2^p}] for i = 2^{p+1}; b_i = boundary(b_{i+1}) for odd i >= 3.
ChernVector construct_b(int i);

GeneratorCertificate y2_class();
ChernVector s6_class();

struct GrassmannS4 {
  Integer gamma;            // s_4(gamma)
  Integer gamma_bar;        // s_4(conjugate gamma)
  Integer gamma_bar_gamma;  // s_4(conjugate gamma (x) gamma)
  Integer total;            // 2 s_4(gamma_bar) + 2 s_4(gamma) - s_4(gamma_bar gamma)
};
GrassmannS4 grassmann_s4_breakdown();
Integer grassmann_s4();

enum class CyTag { y, minus_y, other };
std::string cy_tag_name(CyTag tag, int index);

struct Cy3Result {
  Integer chi;
  Integer s3;
  CyTag tag = CyTag::other;
};
Cy3Result cy3_criterion(long h11, long h21);

struct Cy4Result {
  Integer chi1_neg;  // h11 - h21 + h31
  Integer chi1;
  Integer c4;
  Integer c2sq;
  Integer chi2;
  Integer h22;
  Integer s4;
  CyTag tag = CyTag::other;
};
// Throws InconsistencyError when the Riemann-Roch relations have no integral
// solution, or when a supplied h22 contradicts the Euler characteristic c4.
Cy4Result cy4_invariants(long h11, long h21, long h31, std::optional<long> h22 = std::nullopt);

}  // namespace bordx
