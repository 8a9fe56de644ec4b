#include <stdexcept>

#include "bordx/integer.hpp"
#include "bordx/partition.hpp"

namespace bordx {

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer multinomial(int n, const Partition& omega) {
  if (omega.weight() != n) throw std::invalid_argument("multinomial: partition weight differs from n");
  Integer r = factorial(static_cast<unsigned>(n));
  for (int part : omega.parts()) r /= factorial(static_cast<unsigned>(part));
  return r;
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BezoutCombo ext_gcd_combo(std::span<const Integer> values) {
  if (values.empty()) throw std::invalid_argument("ext_gcd_combo: empty input");
  BezoutCombo out;
  out.coeffs.assign(values.size(), 0);
  Integer g = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Integer& v = values[i];
    if (v == 0) continue;
    if (g == 0) {
      g = abs(v);
      out.coeffs[i] = sgn(v);
      continue;
    }
    if (v % g == 0) continue;
    // g = s * g_old + t * v; the earlier coefficients scale by s.
    Integer ng, s, t;
    mpz_gcdext(ng.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    for (std::size_t j = 0; j < i; ++j) out.coeffs[j] *= s;
    out.coeffs[i] = t;
    g = ng;
  }
  if (g == 0) throw std::invalid_argument("ext_gcd_combo: all values are zero");
  out.gcd = g;
  return out;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<unsigned long> prime_power_base(unsigned long n) {
  if (n < 2) return std::nullopt;
  unsigned long p = 0;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return n;
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return p;
}

std::optional<std::int64_t> to_int64(const Integer& x) {
  if (!mpz_fits_slong_p(x.get_mpz_t())) return std::nullopt;
  return static_cast<std::int64_t>(x.get_si());
}

std::string to_string(const Integer& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace bordx
