#include <doctest.h>

#include <string>

#include "bordx/bordclass.hpp"
#include "bordx/io.hpp"
#include "generators.hpp"

using namespace bordx;
using bordx::testing::Gen;

TEST_SUITE("io") {

TEST_CASE("integers") {
  CHECK(io::integer_to_json(Integer(-48)) == io::json(-48));
  const Integer big("123456789012345678901234567890");
  CHECK(io::integer_to_json(big) == io::json("123456789012345678901234567890"));
  CHECK(io::integer_from_json(io::integer_to_json(big)) == big);
  CHECK(io::integer_from_json(io::json(7)) == 7);
  CHECK_THROWS(io::integer_from_json(io::json("12a")));
  CHECK_THROWS(io::integer_from_json(io::json(1.5)));
}

TEST_CASE("Chern vectors") {
  const io::json j = io::to_json(cp(2));
  CHECK(j["dim"] == 2);
  CHECK(j["numbers"]["1,1"] == 9);
  CHECK(j["numbers"]["2"] == 3);
  Gen g(21);
  for (int trial = 0; trial < 20; ++trial) {
    ChernVector a = g.chern_vector(static_cast<int>(g.uniform(0, 6)));
    a *= ipow(Integer(10), static_cast<unsigned long>(g.uniform(0, 30)));
    CHECK(io::chern_vector_from_json(io::to_json(a)) == a);
  }
  CHECK_THROWS(io::chern_vector_from_json(io::json::parse(R"({"dim":2,"numbers":{"3":1}})")));
}

TEST_CASE("rank table") {
  const auto table = rank_table(4);
  const io::json j = io::to_json(table);
  REQUIRE(j.size() == 5);
  CHECK(j[4]["rank_omega_su"] == 2);
  const std::string tsv = io::rank_table_tsv(table);
  CHECK(tsv.rfind("dimension\trank_omega_u\trank_w\trank_omega_su\ttors_rank\ttors_rank_odd\thw_rank\n", 0) == 0);
  CHECK(tsv.find("\n8\t5\t3\t2\t") != std::string::npos);
}

TEST_CASE("certificates and Calabi-Yau results") {
  const io::json c = io::to_json(cy_generator_combo(4));
  CHECK(c["s_value"] == 6);
  CHECK(c["valid"] == true);
  const io::json y = io::to_json(cy4_invariants(16, 30, 53));
  CHECK(y["s4"] == 20);
  CHECK(y["tag"] == "y4");
}

}  // TEST_SUITE
