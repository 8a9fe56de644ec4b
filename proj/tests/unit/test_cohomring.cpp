#include <doctest.h>

#include "bordx/cohomring.hpp"
#include "bordx/error.hpp"
#include "bordx/io.hpp"
#include "bordx/tower.hpp"
#include "generators.hpp"

using namespace bordx;
using bordx::testing::Gen;

namespace {

PresentedRing cp_ring(int n, Backend backend = Backend::triangular) {
  const std::vector<int> deg{2};
  return PresentedRing({{"u", 2}}, {GradedPoly::generator(deg, 0, n + 1)}, 2 * n, {n}, backend);
}

std::vector<PresentedRing> family_rings() {
  std::vector<PresentedRing> rings;
  for (int a = 0; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) rings.push_back(presentation(build_l(a, b)));
  for (int n1 : {2, 4})
    for (int n2 : {1, 3, 5}) {
      rings.push_back(presentation(build_ltilde(n1, n2)));
      rings.push_back(presentation(build_ntilde(n1, n2)));
    }
  rings.push_back(grassmannian_g24_ring());
  return rings;
}

}  // namespace

TEST_SUITE("cohomring") {

TEST_CASE("projective space ring") {
  const PresentedRing r = cp_ring(3);
  CHECK(normal_form(r, r.gen("u", 5)).is_zero());
  CHECK(evaluate_top(r, r.gen("u", 3)) == 1);
  CHECK(graded_rank(r, 4) == 1);
  CHECK(lattice_evaluate(cp_ring(2), cp_ring(2).gen("u", 2)) == 1);
  const GradedPoly u = r.gen("u");
  CHECK(lattice_evaluate(r, (u * Integer(4)) * (u * u * Integer(4))) == 16);
  CHECK_THROWS(evaluate_top(r, u));
}

TEST_CASE("Grassmannian ring") {
  const PresentedRing g = grassmannian_g24_ring();
  CHECK(evaluate_top(g, g.parse("c1^2*c2")) == 1);
  CHECK(evaluate_top(g, g.parse("c1^4")) == 2);
  CHECK(lattice_evaluate(g, g.parse("c2^2")) == 1);
  CHECK(lattice_evaluate(g, g.parse("c1^4")) == 2);
  const std::vector<int> expected{1, 1, 2, 1, 1};
  int total = 0;
  for (int d = 0; d <= 8; d += 2) {
    CHECK(graded_rank(g, d) == expected[static_cast<std::size_t>(d / 2)]);
    total += graded_rank(g, d);
  }
  CHECK(total == 6);
}

TEST_CASE("Ntilde rewriting identities") {
  const PresentedRing r = presentation(build_ntilde(2, 3));
  const auto u = r.gen("u"), v = r.gen("v"), w = r.gen("w");
  const GradedPoly w4 = w * w * w * w;
  const GradedPoly rhs = u * w * w * w * Integer(2) - v * w * w * w + u * v * w * w * Integer(2);
  CHECK(normal_form(r, w4) == normal_form(r, rhs));
  GradedPoly uw5 = u;
  for (int i = 0; i < 5; ++i) uw5 = uw5 * w;
  CHECK(evaluate_top(r, uw5) == evaluate_top(r, u * v * v * w * w * w));
  CHECK(evaluate_top(r, u * v * v * w * w * w) == 1);
}

TEST_CASE("normal_form is idempotent and kills relations") {
  Gen gen(8);
  for (const auto& ring : family_rings()) {
    if (!is_triangular(ring)) continue;
    for (int trial = 0; trial < 5; ++trial) {
      const int d = 2 * static_cast<int>(gen.uniform(0, ring.top_degree() / 2));
      const GradedPoly x = gen.homogeneous(ring.degrees(), d, 4);
      const GradedPoly nf = normal_form(ring, x);
      CHECK(normal_form(ring, nf) == nf);
      for (const auto& rel : ring.relations()) {
        const int rd = *rel.degree();
        if (rd > ring.top_degree()) continue;
        const GradedPoly m = gen.homogeneous(ring.degrees(), ring.top_degree() - rd, 2);
        CHECK(evaluate_top(ring, rel * m) == 0);
        CHECK(lattice_evaluate(ring, rel * m) == 0);
      }
    }
  }
}

TEST_CASE("backends agree and are linear on random top-degree classes") {
  Gen gen(2718);
  for (const auto& ring : family_rings()) {
    const LatticeEvaluator lattice(ring);
    const TriangularReducer tri(ring);
    for (int trial = 0; trial < 8; ++trial) {
      const GradedPoly a = gen.homogeneous(ring.degrees(), ring.top_degree(), 5);
      const GradedPoly b = gen.homogeneous(ring.degrees(), ring.top_degree(), 5);
      CHECK(tri.evaluate(a) == lattice(a));
      CHECK(tri.evaluate(a + b * Integer(3)) == tri.evaluate(a) + 3 * tri.evaluate(b));
    }
  }
}

TEST_CASE("Poincare duality of graded ranks") {
  for (const auto& ring : family_rings()) {
    for (int d = 0; d <= ring.top_degree(); d += 2) CHECK(graded_rank(ring, d) == graded_rank(ring, ring.top_degree() - d));
    CHECK(graded_rank(ring, ring.top_degree()) == 1);
  }
}

TEST_CASE("structural errors") {
  const std::vector<int> deg{2, 2};
  // x*y has no monic pure power term.
  const PresentedRing non_tri({{"x", 2}, {"y", 2}},
                              {GradedPoly::monomial(deg, {1, 1}), GradedPoly::monomial(deg, {2, 0}),
                               GradedPoly::monomial(deg, {0, 2}) - GradedPoly::monomial(deg, {1, 1})},
                              4, {1, 1});
  CHECK_FALSE(is_triangular(non_tri));
  CHECK_THROWS_AS(normal_form(non_tri, non_tri.gen("x")), StructureError);
  // Top degree quotient Z but c1^4 is twice the generator.
  const PresentedRing g = grassmannian_g24_ring();
  const PresentedRing bad({{"c1", 2}, {"c2", 4}}, g.relations(), 8, {4, 0}, Backend::lattice);
  CHECK_THROWS_AS(lattice_evaluate(bad, bad.parse("c1^2*c2")), StructureError);
  // Quotient of rank two in the top degree.
  const PresentedRing rank2({{"x", 2}, {"y", 2}}, {GradedPoly::monomial(deg, {2, 0}), GradedPoly::monomial(deg, {0, 2})},
                            2, {1, 0}, Backend::lattice);
  CHECK_THROWS_AS(lattice_evaluate(rank2, rank2.gen("x")), StructureError);
  CHECK_THROWS(PresentedRing({{"x", 2}}, {GradedPoly::monomial(std::vector<int>{2}, {2}) + GradedPoly::constant(std::vector<int>{2}, 1)},
                             2, {1}));
}

TEST_CASE("presented ring JSON round trip") {
  for (const auto& ring : family_rings()) {
    const auto j = io::to_json(ring);
    const PresentedRing back = io::presented_ring_from_json(j);
    CHECK(back.relations() == ring.relations());
    CHECK(back.fundamental_monomial() == ring.fundamental_monomial());
    CHECK(back.top_degree() == ring.top_degree());
    CHECK(back.names() == ring.names());
  }
  const auto j = io::json::parse(
      R"({"generators":[{"name":"c1","degree":2},{"name":"c2","degree":4}],
          "relations":["c1^3 - 2*c1*c2","c2^2 - c1^2*c2"],"top_degree":8,"fundamental_monomial":[2,1]})");
  const PresentedRing g = io::presented_ring_from_json(j);
  CHECK(evaluate_top(g, g.parse("c1^4")) == 2);
}

}  // TEST_SUITE
