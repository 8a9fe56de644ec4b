#include "bordx/tower.hpp"

#include <stdexcept>

#include "chern_calculus.hpp"

namespace bordx {

int TowerSpec::complex_dimension() const {
  int n = 0;
  for (int b : base) n += b;
  for (const auto& s : stages) n += static_cast<int>(s.lines.size()) - 1;
  return n;
}

std::vector<std::vector<int>> TowerSpec::roster() const {
  const std::size_t g = num_generators();
  std::vector<std::vector<int>> out;
  for (std::size_t j = 0; j < base.size(); ++j) {
    std::vector<int> w(g, 0);
    w[j] = 1;
    for (int i = 0; i <= base[j]; ++i) out.push_back(w);
  }
  for (std::size_t s = 0; s < stages.size(); ++s) {
    const std::size_t gi = base.size() + s;
    for (const auto& line : stages[s].lines) {
      std::vector<int> w(g, 0);
      for (std::size_t j = 0; j < line.size(); ++j) w[j] = line[j];
      w[gi] += 1;
      out.push_back(std::move(w));
    }
  }
  return out;
}

std::vector<std::string> TowerSpec::names() const {
  if (!generator_names.empty()) return generator_names;
  std::vector<std::string> out;
  for (std::size_t j = 0; j < base.size(); ++j) out.push_back("g" + std::to_string(j + 1));
  for (std::size_t s = 0; s < stages.size(); ++s) out.push_back("v" + std::to_string(s + 1));
  return out;
}

void TowerSpec::validate() const {
  for (int b : base)
    if (b < 1) throw std::invalid_argument("tower base dimensions must be positive");
  for (std::size_t s = 0; s < stages.size(); ++s) {
    if (stages[s].lines.size() < 2) throw std::invalid_argument("each tower stage needs at least two line bundles");
    for (const auto& line : stages[s].lines)
      if (line.size() != base.size() + s)
        throw std::invalid_argument("stage " + std::to_string(s) + ": weight vector must have " +
                                    std::to_string(base.size() + s) + " entries");
  }
  std::size_t roster_size = 0;
  for (int b : base) roster_size += static_cast<std::size_t>(b) + 1;
  for (const auto& s : stages) roster_size += s.lines.size();
  for (std::size_t c : conjugations)
    if (c >= roster_size) throw std::invalid_argument("conjugation index " + std::to_string(c) + " out of range");
  if (!generator_names.empty() && generator_names.size() != num_generators())
    throw std::invalid_argument("generator name count differs from generator count");
}

Family parse_family(const std::string& name) {
  if (name == "L") return Family::L;
  if (name == "Ltilde") return Family::Ltilde;
  if (name == "Ntilde") return Family::Ntilde;
  if (name == "CPprod") return Family::CPprod;
  throw std::invalid_argument("unknown family '" + name + "' (expected L, Ltilde, Ntilde or CPprod)");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::L: return "L";
    case Family::Ltilde: return "Ltilde";
    case Family::Ntilde: return "Ntilde";
    case Family::CPprod: return "CPprod";
  }
  return "?";
}

TowerSpec build_l(int n1, int n2) {
  if (n1 < 0 || n2 < 0) throw std::invalid_argument("L(n1, n2) needs n1, n2 >= 0");
  TowerSpec t;
  if (n1 == 0 && n2 == 0) return t;
  if (n1 == 0 || n2 == 0) {
    t.base = {n1 + n2};
    t.generator_names = {n1 ? "u" : "v"};
    return t;
  }
  t.base = {n1};
  TowerStage stage;
  stage.lines.push_back({-1});
  for (int i = 0; i < n2; ++i) stage.lines.push_back({0});
  t.stages.push_back(stage);
  t.generator_names = {"u", "v"};
  return t;
}

namespace {

void check_parity(const char* family, int n1, int n2) {
  if (n1 <= 0 || n1 % 2 != 0 || n2 <= 0 || n2 % 2 != 1)
    throw std::invalid_argument(std::string(family) + "(n1, n2) needs n1 positive even and n2 positive odd");
}

}  // namespace

TowerSpec build_ltilde(int n1, int n2) {
  check_parity("Ltilde", n1, n2);
  const int k1 = n1 / 2, k2 = (n2 - 1) / 2;
  TowerSpec t = build_l(n1, n2);
  // Roster: u x (n1+1), v - u, v x n2.
  for (int i = 0; i < k1; ++i) t.conjugations.insert(static_cast<std::size_t>(i));
  const std::size_t first_v = static_cast<std::size_t>(n1) + 2;
  for (int i = 0; i <= k2; ++i) t.conjugations.insert(first_v + static_cast<std::size_t>(i));
  return t;
}

TowerSpec build_ntilde(int n1, int n2) {
  check_parity("Ntilde", n1, n2);
  const int k1 = n1 / 2, k2 = (n2 - 1) / 2;
  TowerSpec t;
  t.base = {1, n1};
  t.generator_names = {"u", "v", "w"};
  TowerStage stage;
  if (n2 >= 3) {
    stage.lines = {{-1, 0}, {-1, 0}, {0, 1}};
    for (int i = 0; i < n2 - 2; ++i) stage.lines.push_back({0, 0});
  } else {
    stage.lines = {{0, 1}, {0, 0}};
  }
  t.stages.push_back(stage);
  // Roster: u x 2, v x (n1+1), then the fiber summands in stage order.
  const std::size_t first_v = 2;
  const std::size_t fiber = first_v + static_cast<std::size_t>(n1) + 1;
  t.conjugations.insert(0);
  for (int i = 0; i < k1; ++i) t.conjugations.insert(first_v + static_cast<std::size_t>(i));
  if (n2 >= 3) {
    t.conjugations.insert(fiber);      // one of the two w - u
    t.conjugations.insert(fiber + 2);  // w + v
    for (int i = 0; i < k2 - 1; ++i) t.conjugations.insert(fiber + 3 + static_cast<std::size_t>(i));
  } else {
    t.conjugations.insert(fiber);  // w + v
  }
  return t;
}

TowerSpec build_cp_product(const Partition& omega) {
  TowerSpec t;
  t.base = omega.parts();
  if (t.base.size() == 1) {
    t.generator_names = {"u"};
  } else {
    for (std::size_t i = 0; i < t.base.size(); ++i) t.generator_names.push_back("u" + std::to_string(i + 1));
  }
  return t;
}

TowerSpec build_family(Family family, const FamilyParams& params) {
  switch (family) {
    case Family::L: return build_l(params.n1, params.n2);
    case Family::Ltilde: return build_ltilde(params.n1, params.n2);
    case Family::Ntilde: return build_ntilde(params.n1, params.n2);
    case Family::CPprod: return build_cp_product(params.omega);
  }
  throw std::invalid_argument("unknown family");
}

TowerSpec with_convention(TowerSpec spec, Orientation convention) {
  spec.convention = convention;
  return spec;
}

namespace {

std::vector<int> degrees_for(const TowerSpec& spec) { return std::vector<int>(spec.num_generators(), 2); }

GradedPoly linear_form(const std::vector<int>& degrees, const std::vector<int>& w) {
  GradedPoly p(degrees);
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (!w[j]) continue;
    Exponent e(degrees.size(), 0);
    e[j] = 1;
    p.add_term(e, w[j]);
  }
  return p;
}

Integer orientation_sign(const TowerSpec& spec) {
  if (spec.convention == Orientation::bordism && spec.conjugations.size() % 2 == 1) return -1;
  return 1;
}

}  // namespace

PresentedRing presentation(const TowerSpec& spec, Backend backend) {
  spec.validate();
  const auto degrees = degrees_for(spec);
  const auto names = spec.names();
  std::vector<RingGenerator> gens;
  for (const auto& n : names) gens.push_back({n, 2});
  std::vector<GradedPoly> relations;
  Exponent mu(degrees.size(), 0);
  for (std::size_t j = 0; j < spec.base.size(); ++j) {
    relations.push_back(GradedPoly::generator(degrees, j, spec.base[j] + 1));
    mu[j] = spec.base[j];
  }
  for (std::size_t s = 0; s < spec.stages.size(); ++s) {
    const std::size_t gi = spec.base.size() + s;
    GradedPoly rel = GradedPoly::constant(degrees, 1);
    for (const auto& line : spec.stages[s].lines) {
      std::vector<int> w(degrees.size(), 0);
      for (std::size_t j = 0; j < line.size(); ++j) w[j] = line[j];
      w[gi] += 1;
      rel = rel * linear_form(degrees, w);
    }
    relations.push_back(rel);
    mu[gi] = static_cast<int>(spec.stages[s].lines.size()) - 1;
  }
  return PresentedRing(gens, relations, 2 * spec.complex_dimension(), mu, backend);
}

GradedPoly total_chern(const TowerSpec& spec) {
  spec.validate();
  const auto degrees = degrees_for(spec);
  const int cap = 2 * spec.complex_dimension();
  const auto roster = spec.roster();
  GradedPoly c = GradedPoly::constant(degrees, 1);
  for (std::size_t r = 0; r < roster.size(); ++r) {
    GradedPoly x = linear_form(degrees, roster[r]);
    if (spec.conjugations.count(r)) x = -x;
    c = graded_mul(c, GradedPoly::constant(degrees, 1) + x, cap);
  }
  return c;
}

namespace detail {

ChernVector chern_numbers_in_ring(const PresentedRing& ring, const GradedPoly& total, Backend backend) {
  const int n = ring.top_degree() / 2;
  const int cap = ring.top_degree();
  ChernVector out(n);
  std::vector<Integer> values(out.values().size());
  if (backend == Backend::triangular) {
    TriangularReducer reducer(ring);
    auto parts = graded_parts(reducer.reduce(total), n);
    detail::for_each_partition_product(
        parts, n, ring.one(),
        [&](const GradedPoly& x, const GradedPoly& y) { return reducer.reduce(graded_mul(x, y, cap)); },
        [&](std::size_t i, const GradedPoly& p) { values[i] = reducer.evaluate(p); });
  } else {
    LatticeEvaluator eval(ring);
    auto parts = graded_parts(total, n);
    detail::for_each_partition_product(
        parts, n, ring.one(), [&](const GradedPoly& x, const GradedPoly& y) { return graded_mul(x, y, cap); },
        [&](std::size_t i, const GradedPoly& p) { values[i] = eval(p); });
  }
  const auto& keys = out.keys();
  for (std::size_t i = 0; i < keys.size(); ++i) out.set(keys[i], values[i]);
  return out;
}

}  // namespace detail

ChernVector chern_numbers(const TowerSpec& spec, Backend backend) {
  ChernVector v = detail::chern_numbers_in_ring(presentation(spec, backend), total_chern(spec), backend);
  return v * orientation_sign(spec);
}

Integer s_number(const TowerSpec& spec) {
  PresentedRing ring = presentation(spec);
  const int n = spec.complex_dimension();
  if (n == 0) return 0;
  const auto roster = spec.roster();
  GradedPoly sum = ring.zero();
  for (std::size_t r = 0; r < roster.size(); ++r) {
    GradedPoly x = linear_form(ring.degrees(), roster[r]);
    if (spec.conjugations.count(r)) x = -x;
    sum += graded_pow(x, static_cast<unsigned>(n), kNoDegreeCap);
  }
  return TriangularReducer(ring).evaluate(sum) * orientation_sign(spec);
}

}  // namespace bordx
