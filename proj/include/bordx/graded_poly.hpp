#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bordx/integer.hpp"

namespace bordx {

using Exponent = std::vector<int>;

inline constexpr int kNoDegreeCap = std::numeric_limits<int>::max();

// Polynomial with integer coefficients in generators of positive even degree.
class GradedPoly {
 public:
  using TermMap = std::map<Exponent, Integer>;

  GradedPoly() = default;
  explicit GradedPoly(std::vector<int> generator_degrees);

  static GradedPoly constant(std::vector<int> degrees, const Integer& c);
  static GradedPoly generator(std::vector<int> degrees, std::size_t index, int power = 1);
  static GradedPoly monomial(std::vector<int> degrees, Exponent e, const Integer& c = 1);

  const std::vector<int>& generator_degrees() const noexcept { return degrees_; }
  std::size_t num_generators() const noexcept { return degrees_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  int degree_of(const Exponent& e) const;
  // Largest term degree; nullopt for the zero polynomial.
  std::optional<int> degree() const;
  bool is_homogeneous() const;
  Integer coefficient(const Exponent& e) const;
  Integer constant_term() const;

  void add_term(const Exponent& e, const Integer& c);
  GradedPoly homogeneous_part(int degree) const;
  GradedPoly truncated(int degree_cap) const;
  Exponent zero_exponent() const { return Exponent(degrees_.size(), 0); }

  GradedPoly operator-() const;
  GradedPoly& operator+=(const GradedPoly& other);
  GradedPoly& operator-=(const GradedPoly& other);
  GradedPoly& operator*=(const Integer& c);
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(GradedPoly a, const Integer& c) { return a *= c; }
  friend GradedPoly operator*(const Integer& c, GradedPoly a) { return a *= c; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  friend bool operator==(const GradedPoly&, const GradedPoly&) = default;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void check_compatible(const GradedPoly& other) const;

  std::vector<int> degrees_;
  TermMap terms_;
};

GradedPoly graded_mul(const GradedPoly& a, const GradedPoly& b, int degree_cap);
GradedPoly graded_pow(const GradedPoly& a, unsigned k, int degree_cap);

// Inverse of f as a power series, truncated at degree_cap; f(0) must be +-1.
GradedPoly inverse_series(const GradedPoly& f, int degree_cap);

// Replaces generator i of p by images[i]; all images share one generator list.
GradedPoly substitute(const GradedPoly& p, std::span<const GradedPoly> images, int degree_cap);

// Homogeneous parts f_0, f_1, ..., f_k of f where f_i has degree 2i.
std::vector<GradedPoly> graded_parts(const GradedPoly& f, int max_half_degree);

// Enumerates exponent vectors of the given degree (lexicographically increasing).
std::vector<Exponent> monomials_of_degree(std::span<const int> degrees, int degree);

// Parses "+", "-", "*", "^", parentheses, integer literals and generator names.
GradedPoly parse_graded_poly(std::string_view text, const std::vector<std::string>& names,
                             const std::vector<int>& degrees);

}  // namespace bordx
