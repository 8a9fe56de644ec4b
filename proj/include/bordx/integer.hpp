#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bordx {

using Integer = mpz_class;
using Rational = mpq_class;

class Partition;

Integer factorial(unsigned n);
Integer binomial(long n, long k);
Integer multinomial(int n, const Partition& omega);
Integer ipow(const Integer& base, unsigned long exp);

struct BezoutCombo {
  Integer gcd;
  std::vector<Integer> coeffs;
};

// Nonnegative gcd of the values with integer coefficients realising it.
BezoutCombo ext_gcd_combo(std::span<const Integer> values);

// Smallest prime p with n = p^k (k >= 1), if n is a prime power.
std::optional<unsigned long> prime_power_base(unsigned long n);
bool is_prime(unsigned long n);

std::optional<std::int64_t> to_int64(const Integer& x);
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

}  // namespace bordx
