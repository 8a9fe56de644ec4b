#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bordx/chern_vector.hpp"
#include "bordx/cohomring.hpp"
#include "bordx/genfactory.hpp"
#include "bordx/integer.hpp"
#include "bordx/numbers.hpp"
#include "bordx/tower.hpp"

namespace bordx::io {

using json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
json integer_to_json(const Integer& x);
Integer integer_from_json(const json& j);

// {dim, numbers: {"2,1,1": c, ...}}
json to_json(const ChernVector& a);
ChernVector chern_vector_from_json(const json& j);

// {base, stages: [{lines, conjugate}], conjugate, convention}. Stage conjugate
// indices are local to the stage; the top-level list holds roster indices of
// the base summands.
json to_json(const TowerSpec& spec);
TowerSpec tower_spec_from_json(const json& j);

json to_json(const CharMatrix& m);
CharMatrix char_matrix_from_json(const json& j);

// {generators: [{name, degree}], relations: [strings], top_degree, fundamental_monomial}
json to_json(const PresentedRing& ring);
PresentedRing presented_ring_from_json(const json& j, Backend backend = Backend::triangular);

json to_json(const GeneratorCertificate& cert);
json to_json(const std::vector<RankRow>& table);
// dimension, rank_omega_u, rank_w, rank_omega_su, tors_rank, tors_rank_odd, hw_rank
std::string rank_table_tsv(const std::vector<RankRow>& table);

json to_json(const Cy3Result& r);
json to_json(const Cy4Result& r);

}  // namespace bordx::io
