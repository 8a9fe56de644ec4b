#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bordx/graded_poly.hpp"
#include "bordx/int_matrix.hpp"

namespace bordx {

enum class Backend { triangular, lattice };

struct RingGenerator {
  std::string name;
  int degree = 2;
};

// Graded ring Z[generators]/(relations), zero above top_degree, together with
// the monomial that pairs to +1 with the fundamental class.
class PresentedRing {
 public:
  PresentedRing(std::vector<RingGenerator> generators, std::vector<GradedPoly> relations, int top_degree,
                Exponent fundamental_monomial, Backend backend = Backend::triangular);

  const std::vector<RingGenerator>& generators() const noexcept { return generators_; }
  const std::vector<GradedPoly>& relations() const noexcept { return relations_; }
  int top_degree() const noexcept { return top_degree_; }
  const Exponent& fundamental_monomial() const noexcept { return fundamental_; }
  Backend backend() const noexcept { return backend_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  std::vector<std::string> names() const;

  std::size_t generator_index(std::string_view name) const;
  GradedPoly zero() const { return GradedPoly(degrees_); }
  GradedPoly one() const { return GradedPoly::constant(degrees_, 1); }
  GradedPoly gen(std::size_t index, int power = 1) const { return GradedPoly::generator(degrees_, index, power); }
  GradedPoly gen(std::string_view name, int power = 1) const { return gen(generator_index(name), power); }
  GradedPoly parse(std::string_view text) const;

 private:
  std::vector<RingGenerator> generators_;
  std::vector<int> degrees_;
  std::vector<GradedPoly> relations_;
  int top_degree_;
  Exponent fundamental_;
  Backend backend_;
};

// x_generator^power = tail, where tail is the rest of a relation that is monic
// in that pure power.
struct RewriteRule {
  std::size_t generator;
  int power;
  GradedPoly tail;
};

// Throws StructureError when some relation has no usable monic pure-power term.
std::vector<RewriteRule> triangular_rules(const PresentedRing& ring);
bool is_triangular(const PresentedRing& ring);

class TriangularReducer {
 public:
  explicit TriangularReducer(const PresentedRing& ring, std::size_t step_budget = 20'000'000);

  GradedPoly reduce(const GradedPoly& x) const;
  Integer evaluate(const GradedPoly& x) const;
  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }

 private:
  PresentedRing ring_;
  std::vector<RewriteRule> rules_;
  std::size_t step_budget_;
};

// Pairing with the fundamental class computed from the top-degree quotient
// lattice: Z{top monomials} / (relation multiples) must be Z generated by the
// fundamental monomial.
class LatticeEvaluator {
 public:
  explicit LatticeEvaluator(const PresentedRing& ring);

  Integer operator()(const GradedPoly& x) const;
  const std::vector<Exponent>& top_monomials() const noexcept { return monomials_; }
  const IntVector& functional() const noexcept { return functional_; }

 private:
  std::vector<int> degrees_;
  int top_degree_;
  std::vector<Exponent> monomials_;
  std::map<Exponent, std::size_t> index_;
  IntVector functional_;
};

// Primitive functional on the top-degree monomials (listed in *monomials)
// that kills every relation multiple; throws StructureError unless the
// top-degree quotient has rank one. The sign is not normalised.
IntVector top_degree_functional(const std::vector<int>& degrees, const std::vector<GradedPoly>& relations,
                                int top_degree, std::vector<Exponent>* monomials = nullptr);

GradedPoly normal_form(const PresentedRing& ring, const GradedPoly& x);
Integer evaluate_top(const PresentedRing& ring, const GradedPoly& x);
Integer lattice_evaluate(const PresentedRing& ring, const GradedPoly& x);
int graded_rank(const PresentedRing& ring, int degree);

// Z[c1,c2]/(c1^3 - 2 c1 c2, c2^2 - c1^2 c2) with fundamental monomial c1^2 c2.
PresentedRing grassmannian_g24_ring();

}  // namespace bordx
