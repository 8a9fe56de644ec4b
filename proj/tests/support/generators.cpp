#include "generators.hpp"

namespace bordx::testing {

Integer Gen::big(int bits) {
  Integer x = 0;
  for (int b = 0; b < bits; b += 16) x = x * 65536 + uniform(0, 65535);
  const Integer bound = Integer(1) << static_cast<unsigned>(bits);
  x %= bound + 1;
  return coin() ? Integer(-x) : x;
}

ChernVector Gen::chern_vector(int n, long range) {
  ChernVector out(n);
  for (const auto& w : out.keys()) out.set(w, uniform(-range, range));
  return out;
}

IntMatrix Gen::matrix(std::size_t rows, std::size_t cols, long range) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(-range, range);
  return m;
}

GradedPoly Gen::homogeneous(const std::vector<int>& degrees, int degree, int terms, long range) {
  GradedPoly p(degrees);
  const auto monomials = monomials_of_degree(degrees, degree);
  if (monomials.empty()) return p;
  for (int t = 0; t < terms; ++t)
    p.add_term(monomials[static_cast<std::size_t>(uniform(0, static_cast<long>(monomials.size()) - 1))],
               uniform(-range, range));
  return p;
}

GradedPoly Gen::inhomogeneous(const std::vector<int>& degrees, int max_degree, int terms, long range) {
  GradedPoly p(degrees);
  for (int t = 0; t < terms; ++t) p += homogeneous(degrees, 2 * static_cast<int>(uniform(0, max_degree / 2)), 1, range);
  return p;
}

}  // namespace bordx::testing
