#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "bordx/chern_vector.hpp"
#include "bordx/cohomring.hpp"
#include "bordx/graded_poly.hpp"
#include "bordx/int_matrix.hpp"
#include "bordx/partition.hpp"

namespace bordx {

enum class Orientation { toric, bordism };

// One projectivisation step: CP(L_0 + ... + L_f) over everything built so far.
// Each line bundle is a weight vector w with c1(L) = sum_j w_j g_j over the
// generators defined by earlier stages.
struct TowerStage {
  std::vector<std::vector<int>> lines;
};

// A tower of projectivisations over CP^{n_1} x ... x CP^{n_k}.
//
// The stable tangent bundle splits into line summands (the roster): n_j + 1
// copies of the hyperplane class g_j for each base factor, then v_s + c1(L_i)
// for every line bundle of stage s. Conjugated roster entries contribute
// 1 - x instead of 1 + x to the total Chern class.
struct TowerSpec {
  std::vector<int> base;
  std::vector<TowerStage> stages;
  std::set<std::size_t> conjugations;
  Orientation convention = Orientation::toric;
  std::vector<std::string> generator_names;  // optional; defaults to g1.., v1..

  std::size_t num_generators() const { return base.size() + stages.size(); }
  int complex_dimension() const;
  // Weight vectors (over all generators) of the stable tangent line summands.
  std::vector<std::vector<int>> roster() const;
  std::vector<std::string> names() const;
  void validate() const;
};

enum class Family { L, Ltilde, Ntilde, CPprod };

struct FamilyParams {
  int n1 = 0;
  int n2 = 0;
  Partition omega;
};

Family parse_family(const std::string& name);
std::string family_name(Family f);

TowerSpec build_family(Family family, const FamilyParams& params);
TowerSpec build_l(int n1, int n2);
TowerSpec build_ltilde(int n1, int n2);
TowerSpec build_ntilde(int n1, int n2);
TowerSpec build_cp_product(const Partition& omega);

PresentedRing presentation(const TowerSpec& spec, Backend backend = Backend::triangular);
GradedPoly total_chern(const TowerSpec& spec);
ChernVector chern_numbers(const TowerSpec& spec, Backend backend = Backend::triangular);
// s_n as the power sum of the roster classes, evaluated on the fundamental class.
Integer s_number(const TowerSpec& spec);
// The same spec with the bordism orientation convention.
TowerSpec with_convention(TowerSpec spec, Orientation convention);

// Characteristic matrix of a quasitoric manifold over a product of simplices;
// the columns of each simplex factor are consecutive.
struct CharMatrix {
  std::vector<int> simplex_dims;
  IntMatrix lambda;

  std::size_t dimension() const { return lambda.rows(); }
  // Column index sets (one facet omitted per simplex factor) of the vertices.
  std::vector<std::vector<std::size_t>> vertices() const;
  void validate() const;
};

CharMatrix char_matrix(Family family, const FamilyParams& params);
bool su_check(const CharMatrix& m);

// Z[v_1..v_m] / (linear relations from the rows of lambda, product of the
// facets of each simplex factor), with the v_i at the vertex omitting the last
// facet of every factor eliminated through the linear relations. The
// remaining generators are x1..xk (one per simplex factor); the fundamental
// monomial is the first top-degree monomial generating the quotient.
PresentedRing quasitoric_presentation(const CharMatrix& m);
// Total Chern class prod (1 + v_i) in that presentation.
GradedPoly quasitoric_total_chern(const CharMatrix& m);
// Chern numbers from the quasitoric presentation (lattice backend). The
// fundamental monomial is chosen from the quotient, so the result agrees with
// the omniorientation's class up to a global sign.
ChernVector quasitoric_chern_numbers(const CharMatrix& m);

}  // namespace bordx
