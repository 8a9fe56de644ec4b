#include "bordx/genfactory.hpp"

#include <stdexcept>
#include <string>

#include "bordx/bordclass.hpp"
#include "bordx/cohomring.hpp"
#include "bordx/error.hpp"
#include "bordx/graded_poly.hpp"
#include "bordx/numbers.hpp"
#include "bordx/tower.hpp"

namespace bordx {
namespace {

SuChecks run_su_checks(const ChernVector& cls) {
  SuChecks checks;
  checks.c1_vanish = c1_numbers_vanish(cls);
  checks.in_w = in_W(cls);
  checks.in_ker_boundary = in_ker_boundary(cls);
  return checks;
}

struct Candidate {
  std::string source;
  ChernVector cls;
};

// Smallest-|s| integer combination of the candidates, signed so that s_value
// has the sign of target.
GeneratorCertificate combine(const std::vector<Candidate>& candidates, const Integer& target) {
  if (candidates.empty()) throw std::invalid_argument("no candidate classes to combine");
  std::vector<Integer> s;
  s.reserve(candidates.size());
  for (const auto& c : candidates) s.push_back(s_num(c.cls));
  BezoutCombo combo = ext_gcd_combo(s);
  const int sign = target < 0 ? -1 : 1;

  GeneratorCertificate cert;
  const int n = candidates.front().cls.dimension();
  cert.dimension = 2 * n;
  cert.cls = ChernVector(n);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    Integer coef = combo.coeffs[i] * sign;
    if (coef == 0) continue;
    cert.combination.push_back({coef, candidates[i].source});
    cert.cls += candidates[i].cls * coef;
  }
  cert.s_value = s_num(cert.cls);
  cert.target = target;
  cert.su_checks = run_su_checks(cert.cls);
  return cert;
}

std::string describe(const std::string& family, int n1, int n2) {
  return family + "(" + std::to_string(n1) + "," + std::to_string(n2) + ")";
}

ChernVector tower_class(const TowerSpec& spec) { return chern_numbers(with_convention(spec, Orientation::bordism)); }

}  // namespace

bool GeneratorCertificate::valid() const {
  return s_value == s_num(cls) && abs(s_value) == abs(target) && su_checks.all();
}

ChernVector cp_product(const Partition& omega) {
  ChernVector out = ChernVector::point();
  for (int part : omega.parts()) out = product(out, cp(part));
  return out;
}

ChernVector cy_hypersurface(const Partition& omega) {
  if (omega.parts().empty()) throw std::invalid_argument("cy_hypersurface: empty partition");
  return boundary(cp_product(omega));
}

GeneratorCertificate cy_generator_combo(int n) {
  if (n < 3) throw std::invalid_argument("cy_generator_combo: n must be at least 3");
  std::vector<Candidate> candidates;
  for (const auto& w : phat(n)) candidates.push_back({"N(" + w.key() + ")", cy_hypersurface(w)});
  return combine(candidates, g_number(n));
}

GeneratorCertificate quasitoric_generator_odd(int k) {
  if (k <= 1)
    throw std::invalid_argument("quasitoric generators need k > 1: quasitoric SU-manifolds vanish below dimension 10");
  const int n = 2 * k + 1;
  std::vector<Candidate> candidates;
  for (int n1 = 2; n1 < n; n1 += 2) candidates.push_back({describe("Ltilde", n1, n - n1), tower_class(build_ltilde(n1, n - n1))});
  return combine(candidates, m_number(n) * m_number(n - 1));
}

GeneratorCertificate quasitoric_generator_even(int k) {
  if (k <= 2)
    throw std::invalid_argument("quasitoric generators need k > 2: quasitoric SU-manifolds vanish below dimension 10");
  const int n = 2 * k;
  std::vector<Candidate> candidates;
  for (int n1 = 2; n1 < n - 1; n1 += 2)
    candidates.push_back({describe("Ntilde", n1, n - 1 - n1), tower_class(build_ntilde(n1, n - 1 - n1))});
  return combine(candidates, 2 * m_number(n) * m_number(n - 1));
}

ChernVector construct_b(int i) {
  if (i < 1) throw std::invalid_argument("construct_b: index must be positive");
  if (i == 2) throw std::invalid_argument("construct_b: b_2 is not defined");
  if (i == 1) return cp(1);
  if (i % 2 == 1) return boundary(construct_b(i + 1));
  int p = 0;
  while ((i >> p) % 2 == 0) ++p;
  const int odd = i >> p;
  if (odd == 1) {
    const int half = i / 2;
    return stong_pi(product(cp(half), cp(half)));
  }
  const int a = 1 << p;
  return stong_pi(product(cp(a), cp(i - a)));
}

GeneratorCertificate y2_class() {
  GeneratorCertificate cert;
  cert.dimension = 4;
  cert.combination.push_back({Integer(2), "K"});
  cert.cls = k_class() * Integer(2);
  cert.s_value = s_num(cert.cls);
  cert.target = g_number(3);
  cert.su_checks = run_su_checks(cert.cls);
  return cert;
}

ChernVector s6_class() {
  ChernVector out(3);
  out.set(Partition{3}, 2);
  return out;
}

GrassmannS4 grassmann_s4_breakdown() {
  const PresentedRing ring = grassmannian_g24_ring();
  const std::vector<int> chern_deg{2, 4, 6, 8};
  const GradedPoly s4 =
      parse_graded_poly("c1^4 - 4*c1^2*c2 + 4*c1*c3 + 2*c2^2 - 4*c4", {"c1", "c2", "c3", "c4"}, chern_deg);
  const GradedPoly c1 = ring.gen("c1");
  const GradedPoly c2 = ring.gen("c2");
  const GradedPoly zero = ring.zero();
  auto evaluate = [&](const GradedPoly& e1, const GradedPoly& e2) {
    const std::vector<GradedPoly> images{e1, e2, zero, zero};
    return evaluate_top(ring, substitute(s4, images, ring.top_degree()));
  };
  GrassmannS4 out;
  out.gamma = evaluate(c1, c2);
  out.gamma_bar = evaluate(-c1, c2);
  // c(conj(gamma) (x) gamma) = 1 - c1^2 + 4 c2
  out.gamma_bar_gamma = evaluate(zero, c2 * Integer(4) - c1 * c1);
  out.total = 2 * out.gamma_bar + 2 * out.gamma - out.gamma_bar_gamma;
  return out;
}

Integer grassmann_s4() { return grassmann_s4_breakdown().total; }

std::string cy_tag_name(CyTag tag, int index) {
  switch (tag) {
    case CyTag::y:
      return "y" + std::to_string(index);
    case CyTag::minus_y:
      return "-y" + std::to_string(index);
    case CyTag::other:
      break;
  }
  return "other";
}

Cy3Result cy3_criterion(long h11, long h21) {
  if (h11 < 0 || h21 < 0) throw std::invalid_argument("Hodge numbers must be nonnegative");
  Cy3Result r;
  r.chi = 2 * (Integer(h11) - h21);
  r.s3 = 3 * r.chi;
  if (r.chi == 2)
    r.tag = CyTag::y;
  else if (r.chi == -2)
    r.tag = CyTag::minus_y;
  return r;
}

Cy4Result cy4_invariants(long h11, long h21, long h31, std::optional<long> h22) {
  if (h11 < 0 || h21 < 0 || h31 < 0 || (h22 && *h22 < 0))
    throw std::invalid_argument("Hodge numbers must be nonnegative");
  Cy4Result r;
  r.chi1_neg = Integer(h11) - h21 + h31;
  r.chi1 = -r.chi1_neg;
  // Riemann-Roch with chi_0 = 2: 720 chi_0 = -c4 + 3 c2^2, 180 chi_1 = -31 c4 + 3 c2^2.
  r.c4 = 48 - 6 * r.chi1;
  const Integer c2sq_num = 1440 + r.c4;
  if (c2sq_num % 3 != 0) throw InconsistencyError("c2^2 = (1440 + c4)/3 is not an integer");
  r.c2sq = c2sq_num / 3;
  const Integer chi2_num = 79 * r.c4 + 3 * r.c2sq;
  if (chi2_num % 120 != 0) throw InconsistencyError("chi_2 = (79 c4 + 3 c2^2)/120 is not an integer");
  r.chi2 = chi2_num / 120;
  r.h22 = r.chi2 + 2 * Integer(h21);
  if (h22) {
    const Integer euler = 2 * (2 + Integer(h11) - 2 * Integer(h21) + h31) + *h22;
    if (euler != r.c4)
      throw InconsistencyError("h22 = " + std::to_string(*h22) + " gives Euler characteristic " + to_string(euler) +
                               " but Riemann-Roch requires c4 = " + to_string(r.c4));
  }
  r.s4 = 2 * r.c2sq - 4 * r.c4;
  if (r.s4 == 20)
    r.tag = CyTag::y;
  else if (r.s4 == -20)
    r.tag = CyTag::minus_y;
  return r;
}

}  // namespace bordx
