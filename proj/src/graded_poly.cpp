#include "bordx/graded_poly.hpp"

#include <stdexcept>

namespace bordx {

GradedPoly::GradedPoly(std::vector<int> generator_degrees) : degrees_(std::move(generator_degrees)) {
  for (int d : degrees_)
    if (d <= 0 || d % 2 != 0)
      throw std::invalid_argument("generator degrees must be positive and even");
}

GradedPoly GradedPoly::constant(std::vector<int> degrees, const Integer& c) {
  GradedPoly p(std::move(degrees));
  p.add_term(p.zero_exponent(), c);
  return p;
}

GradedPoly GradedPoly::generator(std::vector<int> degrees, std::size_t index, int power) {
  GradedPoly p(std::move(degrees));
  if (index >= p.num_generators()) throw std::out_of_range("generator index out of range");
  Exponent e = p.zero_exponent();
  e[index] = power;
  p.add_term(e, 1);
  return p;
}

GradedPoly GradedPoly::monomial(std::vector<int> degrees, Exponent e, const Integer& c) {
  GradedPoly p(std::move(degrees));
  p.add_term(e, c);
  return p;
}

int GradedPoly::degree_of(const Exponent& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * degrees_[i];
  return d;
}

std::optional<int> GradedPoly::degree() const {
  std::optional<int> best;
  for (const auto& [e, c] : terms_) {
    int d = degree_of(e);
    if (!best || d > *best) best = d;
  }
  return best;
}

bool GradedPoly::is_homogeneous() const {
  std::optional<int> seen;
  for (const auto& [e, c] : terms_) {
    int d = degree_of(e);
    if (seen && *seen != d) return false;
    seen = d;
  }
  return true;
}

Integer GradedPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer GradedPoly::constant_term() const { return coefficient(zero_exponent()); }

void GradedPoly::add_term(const Exponent& e, const Integer& c) {
  if (e.size() != degrees_.size()) throw std::invalid_argument("exponent length differs from generator count");
  for (int x : e)
    if (x < 0) throw std::invalid_argument("negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GradedPoly GradedPoly::homogeneous_part(int degree) const {
  GradedPoly out(degrees_);
  for (const auto& [e, c] : terms_)
    if (degree_of(e) == degree) out.terms_.emplace_hint(out.terms_.end(), e, c);
  return out;
}

GradedPoly GradedPoly::truncated(int degree_cap) const {
  GradedPoly out(degrees_);
  for (const auto& [e, c] : terms_)
    if (degree_of(e) <= degree_cap) out.terms_.emplace_hint(out.terms_.end(), e, c);
  return out;
}

void GradedPoly::check_compatible(const GradedPoly& other) const {
  if (degrees_ != other.degrees_) throw std::invalid_argument("polynomials over different generators");
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

GradedPoly& GradedPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) { return graded_mul(a, b, kNoDegreeCap); }

std::string GradedPoly::to_string(const std::vector<std::string>& names) const {
  if (names.size() != degrees_.size()) throw std::invalid_argument("name count differs from generator count");
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

GradedPoly graded_mul(const GradedPoly& a, const GradedPoly& b, int degree_cap) {
  if (a.generator_degrees() != b.generator_degrees())
    throw std::invalid_argument("graded_mul: polynomials over different generators");
  GradedPoly out(a.generator_degrees());
  if (a.is_zero() || b.is_zero()) return out;
  std::vector<int> bdeg;
  bdeg.reserve(b.size());
  for (const auto& [e, c] : b.terms()) bdeg.push_back(b.degree_of(e));
  const std::size_t n = a.num_generators();
  std::map<Exponent, Integer> acc;
  Exponent e(n);
  for (const auto& [ea, ca] : a.terms()) {
    const int da = a.degree_of(ea);
    if (da > degree_cap) continue;
    std::size_t j = 0;
    for (const auto& [eb, cb] : b.terms()) {
      if (da <= degree_cap - bdeg[j]) {
        for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
        auto [it, inserted] = acc.try_emplace(e);
        mpz_addmul(it->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      }
      ++j;
    }
  }
  for (auto& [ex, c] : acc)
    if (c != 0) out.add_term(ex, c);
  return out;
}

GradedPoly graded_pow(const GradedPoly& a, unsigned k, int degree_cap) {
  GradedPoly result = GradedPoly::constant(a.generator_degrees(), 1).truncated(degree_cap);
  GradedPoly base = a.truncated(degree_cap);
  while (k) {
    if (k & 1u) result = graded_mul(result, base, degree_cap);
    k >>= 1u;
    if (k) base = graded_mul(base, base, degree_cap);
  }
  return result;
}

GradedPoly inverse_series(const GradedPoly& f, int degree_cap) {
  const Integer c0 = f.constant_term();
  if (c0 != 1 && c0 != -1) throw std::invalid_argument("inverse_series: constant term must be a unit");
  GradedPoly g = f;
  g.add_term(f.zero_exponent(), -c0);
  // 1/f = c0 * sum_k (-c0 g)^k
  GradedPoly h = g * Integer(-c0);
  GradedPoly power = GradedPoly::constant(f.generator_degrees(), 1);
  GradedPoly sum = power;
  while (true) {
    power = graded_mul(power, h, degree_cap);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * c0;
}

GradedPoly substitute(const GradedPoly& p, std::span<const GradedPoly> images, int degree_cap) {
  if (images.size() != p.num_generators()) throw std::invalid_argument("substitute: wrong number of images");
  if (images.empty()) return p;
  const auto& target = images.front().generator_degrees();
  for (const auto& im : images)
    if (im.generator_degrees() != target) throw std::invalid_argument("substitute: images over different generators");
  std::vector<std::vector<GradedPoly>> powers(images.size());
  auto power_of = [&](std::size_t i, int k) -> const GradedPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(GradedPoly::constant(target, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(graded_mul(cache.back(), images[i], degree_cap));
    return cache[static_cast<std::size_t>(k)];
  };
  GradedPoly out(target);
  for (const auto& [e, c] : p.terms()) {
    GradedPoly term = GradedPoly::constant(target, c);
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i)
      if (e[i]) term = graded_mul(term, power_of(i, e[i]), degree_cap);
    out += term;
  }
  return out;
}

std::vector<GradedPoly> graded_parts(const GradedPoly& f, int max_half_degree) {
  std::vector<GradedPoly> parts(static_cast<std::size_t>(max_half_degree) + 1, GradedPoly(f.generator_degrees()));
  for (const auto& [e, c] : f.terms()) {
    int d = f.degree_of(e);
    if (d <= 2 * max_half_degree) parts[static_cast<std::size_t>(d / 2)].add_term(e, c);
  }
  return parts;
}

namespace {

void enumerate_monomials(std::span<const int> degrees, std::size_t i, int remaining, Exponent& e,
                         std::vector<Exponent>& out) {
  if (i == degrees.size()) {
    if (remaining == 0) out.push_back(e);
    return;
  }
  for (int k = 0; k * degrees[i] <= remaining; ++k) {
    e[i] = k;
    enumerate_monomials(degrees, i + 1, remaining - k * degrees[i], e, out);
  }
  e[i] = 0;
}

}  // namespace

std::vector<Exponent> monomials_of_degree(std::span<const int> degrees, int degree) {
  std::vector<Exponent> out;
  if (degree < 0) return out;
  Exponent e(degrees.size(), 0);
  enumerate_monomials(degrees, 0, degree, e, out);
  return out;
}

}  // namespace bordx
