#include "bordx/cohomring.hpp"

#include <algorithm>
#include <stdexcept>

#include "bordx/error.hpp"

namespace bordx {

PresentedRing::PresentedRing(std::vector<RingGenerator> generators, std::vector<GradedPoly> relations,
                             int top_degree, Exponent fundamental_monomial, Backend backend)
    : generators_(std::move(generators)),
      relations_(std::move(relations)),
      top_degree_(top_degree),
      fundamental_(std::move(fundamental_monomial)),
      backend_(backend) {
  for (const auto& g : generators_) {
    if (g.degree <= 0 || g.degree % 2 != 0)
      throw std::invalid_argument("generator '" + g.name + "' must have positive even degree");
    degrees_.push_back(g.degree);
  }
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (generators_[i].name == generators_[j].name)
        throw std::invalid_argument("duplicate generator name '" + generators_[i].name + "'");
  if (top_degree_ < 0 || top_degree_ % 2 != 0) throw std::invalid_argument("top degree must be even and nonnegative");
  for (const auto& r : relations_) {
    if (r.generator_degrees() != degrees_) throw std::invalid_argument("relation over the wrong generators");
    if (r.is_zero()) throw std::invalid_argument("zero relation");
    if (!r.is_homogeneous()) throw std::invalid_argument("relations must be homogeneous");
  }
  if (fundamental_.size() != degrees_.size())
    throw std::invalid_argument("fundamental monomial has the wrong length");
  int d = 0;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (fundamental_[i] < 0) throw std::invalid_argument("negative exponent in fundamental monomial");
    d += fundamental_[i] * degrees_[i];
  }
  if (d != top_degree_) throw std::invalid_argument("fundamental monomial must have the top degree");
}

std::vector<std::string> PresentedRing::names() const {
  std::vector<std::string> out;
  for (const auto& g : generators_) out.push_back(g.name);
  return out;
}

std::size_t PresentedRing::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

GradedPoly PresentedRing::parse(std::string_view text) const { return parse_graded_poly(text, names(), degrees_); }

std::vector<RewriteRule> triangular_rules(const PresentedRing& ring) {
  const std::size_t n = ring.degrees().size();
  std::vector<bool> used(n, false);
  std::vector<RewriteRule> rules;
  for (const auto& rel : ring.relations()) {
    std::optional<std::size_t> chosen;
    int power = 0;
    Integer lead;
    for (std::size_t g = n; g-- > 0 && !chosen;) {
      if (used[g]) continue;
      for (const auto& [e, c] : rel.terms()) {
        if (c != 1 && c != -1) continue;
        bool pure = e[g] > 0;
        for (std::size_t i = 0; i < n && pure; ++i)
          if (i != g && e[i] != 0) pure = false;
        if (pure) {
          chosen = g;
          power = e[g];
          lead = c;
          break;
        }
      }
    }
    if (!chosen)
      throw StructureError("relation " + rel.to_string(ring.names()) +
                           " is not monic in a pure generator power; use the lattice backend");
    used[*chosen] = true;
    Exponent lead_exp(n, 0);
    lead_exp[*chosen] = power;
    GradedPoly tail = rel;
    tail.add_term(lead_exp, -lead);
    tail *= Integer(-lead);
    rules.push_back({*chosen, power, std::move(tail)});
  }
  return rules;
}

bool is_triangular(const PresentedRing& ring) {
  try {
    triangular_rules(ring);
    return true;
  } catch (const StructureError&) {
    return false;
  }
}

namespace {

// Orders exponents by the last generator first, so rewriting a stage generator
// (which only introduces lower powers of it and earlier generators) always
// moves towards smaller keys.
struct LastGeneratorFirst {
  bool operator()(const Exponent& a, const Exponent& b) const {
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

}  // namespace

TriangularReducer::TriangularReducer(const PresentedRing& ring, std::size_t step_budget)
    : ring_(ring), rules_(triangular_rules(ring)), step_budget_(step_budget) {}

GradedPoly TriangularReducer::reduce(const GradedPoly& x) const {
  if (x.generator_degrees() != ring_.degrees()) throw std::invalid_argument("element over the wrong generators");
  const int top = ring_.top_degree();
  std::map<Exponent, Integer, LastGeneratorFirst> pending;
  for (const auto& [e, c] : x.terms())
    if (x.degree_of(e) <= top) pending[e] += c;
  GradedPoly result(ring_.degrees());
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto it = std::prev(pending.end());
    Exponent e = it->first;
    Integer c = std::move(it->second);
    pending.erase(it);
    if (c == 0) continue;
    const RewriteRule* rule = nullptr;
    for (const auto& r : rules_)
      if (e[r.generator] >= r.power && (!rule || r.generator > rule->generator)) rule = &r;
    if (!rule) {
      result.add_term(e, c);
      continue;
    }
    if (++steps > step_budget_)
      throw StructureError("rewriting did not terminate within the step budget; use the lattice backend");
    e[rule->generator] -= rule->power;
    for (const auto& [te, tc] : rule->tail.terms()) {
      Exponent ne = e;
      for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += te[i];
      if (result.degree_of(ne) > top) continue;
      auto [pt, inserted] = pending.try_emplace(std::move(ne));
      mpz_addmul(pt->second.get_mpz_t(), c.get_mpz_t(), tc.get_mpz_t());
    }
  }
  return result;
}

Integer TriangularReducer::evaluate(const GradedPoly& x) const {
  if (x.is_zero()) return 0;
  if (!x.is_homogeneous() || *x.degree() != ring_.top_degree())
    throw std::invalid_argument("evaluate_top: element is not homogeneous of the top degree");
  GradedPoly r = reduce(x);
  Integer value = 0;
  for (const auto& [e, c] : r.terms()) {
    if (e != ring_.fundamental_monomial())
      throw StructureError("top-degree normal form is not a multiple of the fundamental monomial");
    value = c;
  }
  return value;
}

namespace {

std::vector<IntVector> relation_multiples(const std::vector<int>& degrees, const std::vector<GradedPoly>& relations,
                                          int degree, const std::map<Exponent, std::size_t>& index) {
  std::vector<IntVector> rows;
  for (const auto& rel : relations) {
    const int d = *rel.degree();
    if (d > degree) continue;
    for (const auto& m : monomials_of_degree(degrees, degree - d)) {
      IntVector v(index.size(), Integer(0));
      for (const auto& [e, c] : rel.terms()) {
        Exponent s = e;
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += m[i];
        v[index.at(s)] += c;
      }
      rows.push_back(std::move(v));
    }
  }
  return rows;
}

}  // namespace

IntVector top_degree_functional(const std::vector<int>& degrees, const std::vector<GradedPoly>& relations,
                                int top_degree, std::vector<Exponent>* monomials_out) {
  auto monomials = monomials_of_degree(degrees, top_degree);
  std::map<Exponent, std::size_t> index;
  for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
  const std::size_t n = monomials.size();
  IntMatrix hnf = hermite_normal_form(IntMatrix::from_rows(relation_multiples(degrees, relations, top_degree, index), n));
  if (hnf.rows() + 1 != n)
    throw StructureError("top-degree quotient has rank " + std::to_string(n - hnf.rows()) + ", expected 1");
  IntVector phi = lattice_rank_kernel(hnf).kernel_basis.at(0);
  if (monomials_out) *monomials_out = std::move(monomials);
  return phi;
}

LatticeEvaluator::LatticeEvaluator(const PresentedRing& ring)
    : degrees_(ring.degrees()), top_degree_(ring.top_degree()) {
  functional_ = top_degree_functional(degrees_, ring.relations(), top_degree_, &monomials_);
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
  const std::size_t n = monomials_.size();
  const std::size_t mu = index_.at(ring.fundamental_monomial());
  // The quotient is Z generated by mu iff the primitive functional (which
  // spans the dual of the quotient) takes the value +-1 on mu, provided the
  // quotient is torsion free; check that via the full lattice.
  std::vector<IntVector> rows = relation_multiples(degrees_, ring.relations(), top_degree_, index_);
  IntVector unit(n, Integer(0));
  unit[mu] = 1;
  rows.push_back(unit);
  if (hermite_normal_form(IntMatrix::from_rows(rows, n)) != IntMatrix::identity(n))
    throw StructureError("top-degree quotient is not infinite cyclic generated by the fundamental monomial");
  if (functional_[mu] < 0)
    for (auto& x : functional_) x = -x;
  if (functional_[mu] != 1) throw StructureError("fundamental monomial does not generate the quotient");
}

Integer LatticeEvaluator::operator()(const GradedPoly& x) const {
  if (x.is_zero()) return 0;
  if (x.generator_degrees() != degrees_) throw std::invalid_argument("element over the wrong generators");
  if (!x.is_homogeneous() || *x.degree() != top_degree_)
    throw std::invalid_argument("lattice_evaluate: element is not homogeneous of the top degree");
  Integer value = 0;
  for (const auto& [e, c] : x.terms()) value += c * functional_[index_.at(e)];
  return value;
}

GradedPoly normal_form(const PresentedRing& ring, const GradedPoly& x) {
  if (!x.is_homogeneous()) throw std::invalid_argument("normal_form: element is not homogeneous");
  return TriangularReducer(ring).reduce(x);
}

Integer evaluate_top(const PresentedRing& ring, const GradedPoly& x) {
  if (ring.backend() == Backend::lattice) return LatticeEvaluator(ring)(x);
  return TriangularReducer(ring).evaluate(x);
}

Integer lattice_evaluate(const PresentedRing& ring, const GradedPoly& x) { return LatticeEvaluator(ring)(x); }

int graded_rank(const PresentedRing& ring, int degree) {
  if (degree < 0 || degree % 2 != 0 || degree > ring.top_degree())
    throw std::invalid_argument("graded_rank: degree must be even and within [0, top_degree]");
  auto monomials = monomials_of_degree(ring.degrees(), degree);
  std::map<Exponent, std::size_t> index;
  for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
  auto rows = relation_multiples(ring.degrees(), ring.relations(), degree, index);
  const std::size_t rank = hermite_normal_form(IntMatrix::from_rows(rows, monomials.size())).rows();
  return static_cast<int>(monomials.size() - rank);
}

PresentedRing grassmannian_g24_ring() {
  std::vector<RingGenerator> gens{{"c1", 2}, {"c2", 4}};
  std::vector<std::string> names{"c1", "c2"};
  std::vector<int> degrees{2, 4};
  std::vector<GradedPoly> rels{parse_graded_poly("c1^3 - 2*c1*c2", names, degrees),
                               parse_graded_poly("c2^2 - c1^2*c2", names, degrees)};
  return PresentedRing(gens, rels, 8, Exponent{2, 1});
}

}  // namespace bordx
