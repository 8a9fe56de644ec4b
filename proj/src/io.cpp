#include "bordx/io.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace bordx::io {
namespace {

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw std::invalid_argument(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string monomial_string(const std::vector<int>& degrees, const Exponent& e, const std::vector<std::string>& names) {
  return GradedPoly::monomial(degrees, e).to_string(names);
}

}  // namespace

json integer_to_json(const Integer& x) {
  if (auto v = to_int64(x)) return *v;
  return to_string(x);
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("not a decimal integer: " + j.get<std::string>());
    return x;
  }
  throw std::invalid_argument("expected an integer or a decimal string");
}

json to_json(const ChernVector& a) {
  json numbers = json::object();
  for (std::size_t i = 0; i < a.keys().size(); ++i) numbers[a.keys()[i].key()] = integer_to_json(a.at(i));
  return {{"dim", a.dimension()}, {"numbers", numbers}};
}

ChernVector chern_vector_from_json(const json& j) {
  const int n = as_int(j.at("dim"), "dim");
  if (n < 0) throw std::invalid_argument("dim must be nonnegative");
  ChernVector out(n);
  for (const auto& [key, value] : j.at("numbers").items()) {
    Partition w = key.empty() ? Partition{} : Partition::parse(key);
    if (w.weight() != n) throw std::invalid_argument("partition " + key + " does not have weight " + std::to_string(n));
    out.set(w, integer_from_json(value));
  }
  return out;
}

json to_json(const TowerSpec& spec) {
  std::size_t base_size = 0;
  for (int b : spec.base) base_size += static_cast<std::size_t>(b) + 1;
  json stages = json::array();
  std::size_t offset = base_size;
  for (const auto& stage : spec.stages) {
    json conj = json::array();
    for (std::size_t i = 0; i < stage.lines.size(); ++i)
      if (spec.conjugations.count(offset + i)) conj.push_back(i);
    stages.push_back({{"lines", stage.lines}, {"conjugate", conj}});
    offset += stage.lines.size();
  }
  json base_conj = json::array();
  for (std::size_t c : spec.conjugations)
    if (c < base_size) base_conj.push_back(c);
  json out = {{"base", spec.base}, {"stages", stages}, {"conjugate", base_conj},
              {"convention", spec.convention == Orientation::toric ? "toric" : "bordism"}};
  if (!spec.generator_names.empty()) out["generator_names"] = spec.generator_names;
  return out;
}

TowerSpec tower_spec_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("tower spec must be a JSON object");
  TowerSpec spec;
  for (const auto& b : j.at("base")) spec.base.push_back(as_int(b, "base entry"));
  std::size_t offset = 0;
  for (int b : spec.base) offset += static_cast<std::size_t>(b < 0 ? 0 : b) + 1;
  if (j.contains("conjugate"))
    for (const auto& c : j.at("conjugate")) spec.conjugations.insert(static_cast<std::size_t>(as_int(c, "conjugate index")));
  if (j.contains("stages")) {
    for (const auto& s : j.at("stages")) {
      TowerStage stage;
      for (const auto& line : s.at("lines")) {
        std::vector<int> w;
        for (const auto& x : line) w.push_back(as_int(x, "line weight"));
        stage.lines.push_back(std::move(w));
      }
      if (s.contains("conjugate")) {
        for (const auto& c : s.at("conjugate")) {
          const int i = as_int(c, "conjugate index");
          if (i < 0 || static_cast<std::size_t>(i) >= stage.lines.size())
            throw std::invalid_argument("stage conjugate index out of range");
          spec.conjugations.insert(offset + static_cast<std::size_t>(i));
        }
      }
      offset += stage.lines.size();
      spec.stages.push_back(std::move(stage));
    }
  }
  const std::string conv = j.value("convention", std::string("toric"));
  if (conv == "toric")
    spec.convention = Orientation::toric;
  else if (conv == "bordism")
    spec.convention = Orientation::bordism;
  else
    throw std::invalid_argument("convention must be \"toric\" or \"bordism\"");
  if (j.contains("generator_names")) spec.generator_names = j.at("generator_names").get<std::vector<std::string>>();
  spec.validate();
  return spec;
}

json to_json(const CharMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.lambda.rows(); ++r) {
    json row = json::array();
    for (const auto& x : m.lambda.row(r)) row.push_back(integer_to_json(x));
    rows.push_back(row);
  }
  return {{"simplex_dims", m.simplex_dims}, {"lambda", rows}};
}

CharMatrix char_matrix_from_json(const json& j) {
  CharMatrix m;
  for (const auto& d : j.at("simplex_dims")) m.simplex_dims.push_back(as_int(d, "simplex dimension"));
  std::vector<IntVector> rows;
  for (const auto& row : j.at("lambda")) {
    IntVector r;
    for (const auto& x : row) r.push_back(integer_from_json(x));
    rows.push_back(std::move(r));
  }
  std::size_t cols = 0;
  for (int d : m.simplex_dims) cols += static_cast<std::size_t>(d < 0 ? 0 : d) + 1;
  m.lambda = IntMatrix::from_rows(rows, rows.empty() ? cols : rows.front().size());
  m.validate();
  return m;
}

json to_json(const PresentedRing& ring) {
  json gens = json::array();
  for (const auto& g : ring.generators()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
  json rels = json::array();
  for (const auto& r : ring.relations()) rels.push_back(r.to_string(ring.names()));
  return {{"generators", gens},
          {"relations", rels},
          {"top_degree", ring.top_degree()},
          {"fundamental_monomial", monomial_string(ring.degrees(), ring.fundamental_monomial(), ring.names())}};
}

PresentedRing presented_ring_from_json(const json& j, Backend backend) {
  std::vector<RingGenerator> gens;
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (const auto& g : j.at("generators")) {
    RingGenerator rg{g.at("name").get<std::string>(), as_int(g.at("degree"), "degree")};
    names.push_back(rg.name);
    degrees.push_back(rg.degree);
    gens.push_back(std::move(rg));
  }
  std::vector<GradedPoly> rels;
  for (const auto& r : j.at("relations")) rels.push_back(parse_graded_poly(r.get<std::string>(), names, degrees));
  const int top = as_int(j.at("top_degree"), "top_degree");
  Exponent mu;
  const auto& f = j.at("fundamental_monomial");
  if (f.is_array()) {
    for (const auto& x : f) mu.push_back(as_int(x, "exponent"));
  } else {
    GradedPoly p = parse_graded_poly(f.get<std::string>(), names, degrees);
    if (p.terms().size() != 1 || p.terms().begin()->second != 1)
      throw std::invalid_argument("fundamental_monomial must be a single monomial");
    mu = p.terms().begin()->first;
  }
  return PresentedRing(std::move(gens), std::move(rels), top, std::move(mu), backend);
}

json to_json(const GeneratorCertificate& cert) {
  json combo = json::array();
  for (const auto& t : cert.combination) combo.push_back({{"coefficient", integer_to_json(t.coefficient)}, {"source", t.source}});
  return {{"dimension", cert.dimension},
          {"combination", combo},
          {"class", to_json(cert.cls)},
          {"s_value", integer_to_json(cert.s_value)},
          {"target", integer_to_json(cert.target)},
          {"su_checks",
           {{"c1_vanish", cert.su_checks.c1_vanish},
            {"in_W", cert.su_checks.in_w},
            {"in_ker_boundary", cert.su_checks.in_ker_boundary}}},
          {"valid", cert.valid()}};
}

json to_json(const std::vector<RankRow>& table) {
  json rows = json::array();
  for (const auto& r : table)
    rows.push_back({{"dimension", r.dimension},
                    {"rank_omega_u", integer_to_json(r.rank_omega_u)},
                    {"rank_w", integer_to_json(r.rank_w)},
                    {"rank_omega_su", integer_to_json(r.rank_omega_su)},
                    {"tors_rank", integer_to_json(r.tors_rank)},
                    {"tors_rank_odd", integer_to_json(r.tors_rank_odd)},
                    {"hw_rank", integer_to_json(r.hw_rank)}});
  return rows;
}

std::string rank_table_tsv(const std::vector<RankRow>& table) {
  std::ostringstream out;
  out << "dimension\trank_omega_u\trank_w\trank_omega_su\ttors_rank\ttors_rank_odd\thw_rank\n";
  for (const auto& r : table)
    out << r.dimension << '\t' << r.rank_omega_u << '\t' << r.rank_w << '\t' << r.rank_omega_su << '\t' << r.tors_rank
        << '\t' << r.tors_rank_odd << '\t' << r.hw_rank << '\n';
  return out.str();
}

json to_json(const Cy3Result& r) {
  return {{"chi", integer_to_json(r.chi)}, {"s3", integer_to_json(r.s3)}, {"tag", cy_tag_name(r.tag, 3)}};
}

json to_json(const Cy4Result& r) {
  return {{"chi1_neg", integer_to_json(r.chi1_neg)}, {"c4", integer_to_json(r.c4)},
          {"c2sq", integer_to_json(r.c2sq)},         {"chi2", integer_to_json(r.chi2)},
          {"h22", integer_to_json(r.h22)},           {"s4", integer_to_json(r.s4)},
          {"tag", cy_tag_name(r.tag, 4)}};
}

}  // namespace bordx::io
