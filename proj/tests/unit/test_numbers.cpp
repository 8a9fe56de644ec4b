#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "bordx/numbers.hpp"
#include "oracles.hpp"

using namespace bordx;

namespace {

int distinct_prime_factors(int n) {
  int count = 0;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    ++count;
    while (n % p == 0) n /= p;
  }
  return count + (n > 1 ? 1 : 0);
}

Integer partitions_with_parts_at_least_two(int n) {
  Integer count = 0;
  for (const auto& p : testing::all_partitions(n))
    if (p.empty() || p.back() >= 2) ++count;
  return count;
}

}  // namespace

TEST_SUITE("numbers") {

TEST_CASE("m numbers") {
  CHECK(m_number(1) == 2);
  CHECK(m_number(2) == 3);
  CHECK(m_number(3) == 2);
  CHECK(m_number(4) == 5);
  CHECK(m_number(5) == 1);
  CHECK(m_number(8) == 3);
  for (int i = 1; i <= 500; ++i) {
    CAPTURE(i);
    CHECK((m_number(i) == 1) == (distinct_prime_factors(i + 1) >= 2));
    if (m_number(i) != 1) CHECK((i + 1) % m_number(i).get_si() == 0);
  }
  CHECK_THROWS_AS(m_number(0), std::invalid_argument);
}

TEST_CASE("g numbers") {
  CHECK(g_number(3) == -48);
  CHECK(g_number(4) == 6);
  CHECK(g_number(5) == 20);
  CHECK(g_number(6) == 5);
  for (int n = 4; n <= 40; ++n) {
    const Integer mm = m_number(n - 1) * m_number(n - 2);
    CHECK(g_number(n) == (n % 2 == 1 ? 2 * mm : mm));
  }
  CHECK_THROWS_AS(g_number(2), std::invalid_argument);
}

TEST_CASE("alpha") {
  CHECK(alpha(Partition{1, 1, 1}) == 48);
  CHECK(alpha(Partition{2, 2}) == 486);
  CHECK(alpha(Partition{2, 2, 1}) == 4860);
  for (int n = 1; n <= 10; ++n)
    for (const auto& p : testing::all_partitions(n)) CHECK(alpha(Partition(p)) == testing::alpha_direct(p));
}

TEST_CASE("phat") {
  CHECK(phat(3) == std::vector<Partition>{Partition{1, 1, 1}});
  CHECK(phat(4) == std::vector<Partition>{Partition{2, 2}, Partition{2, 1, 1}, Partition{1, 1, 1, 1}});
  for (int n = 3; n <= 14; ++n) {
    Integer count = 0;
    for (const auto& p : testing::all_partitions(n))
      if (p.front() <= n - 2) ++count;
    CHECK(Integer(static_cast<long>(phat(n).size())) == count);
  }
  CHECK_THROWS_AS(phat(2), std::invalid_argument);
}

TEST_CASE("partition counts") {
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(4) == 5);
  CHECK(partition_count(100) == Integer("190569292"));
  for (int n = 0; n <= 120; ++n) CHECK(partition_count(n) == testing::partition_count_dp(n));
}

TEST_CASE("alpha gcd") {
  CHECK(verify_alpha_gcd(3).gcd == 48);
  CHECK(verify_alpha_gcd(4).gcd == 6);
  CHECK(verify_alpha_gcd(5).gcd == 20);
  for (int n = 3; n <= 16; ++n) {
    CAPTURE(n);
    const GcdCheck c = verify_alpha_gcd(n);
    CHECK(c.matches);
    Integer g = 0;
    for (const auto& p : testing::all_partitions(n))
      if (p.front() <= n - 2) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), testing::alpha_direct(p).get_mpz_t());
    CHECK(c.gcd == g);
  }
}

TEST_CASE("gcd of binomial differences") {
  CHECK(verify_gcddif(2).gcd == 5);
  CHECK(verify_gcddif(3).gcd == 14);
  for (int k = 2; k <= 50; ++k) {
    CAPTURE(k);
    CHECK(verify_gcddif(k).matches);
  }
  CHECK_THROWS_AS(verify_gcddif(1), std::invalid_argument);
}

TEST_CASE("prime powers dividing the a_i") {
  CHECK(verify_nmod(4, 2).largest_power == 2);
  CHECK(verify_nmod(4, 2).matches);
  CHECK(verify_nmod(4, 3).largest_power == 3);
  CHECK(verify_nmod(4, 3).matches);
  CHECK(verify_nmod(5, 7).largest_power == 1);
  CHECK(verify_nmod(5, 7).matches);
  CHECK(nmod_term(3, 1) == Integer(-6 + 15 - 2));
  for (int k = 3; k <= 30; ++k)
    for (unsigned long p = 2; p <= static_cast<unsigned long>(2 * k + 1); ++p) {
      if (!is_prime(p)) continue;
      CAPTURE(k);
      CAPTURE(p);
      CHECK(verify_nmod(k, p).matches);
    }
}

TEST_CASE("closed forms") {
  CHECK(ltilde_s_closed_form(2, 1) == 0);
  CHECK(ltilde_s_closed_form(2, 3) == 5);
  CHECK(ntilde_s_closed_form(2, 1) == 0);
  CHECK(ntilde_s_closed_form(2, 3) == 14);
  for (int n1 = 2; n1 <= 12; n1 += 2)
    for (int n2 = 1; n2 <= 11; n2 += 2) {
      CHECK(ltilde_s_closed_form(n1, n2) == testing::ltilde_closed(n1, n2));
      CHECK(ntilde_s_closed_form(n1, n2) == testing::ntilde_closed(n1, n2));
    }
  CHECK_THROWS_AS(ltilde_s_closed_form(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(ntilde_s_closed_form(2, 2), std::invalid_argument);
}

TEST_CASE("rank table") {
  const auto table = rank_table(16);
  REQUIRE(table.size() == 17);
  CHECK(table[4].rank_omega_u == 5);
  CHECK(table[2].rank_w == 1);
  CHECK(table[4].rank_omega_su == 2);
  for (int n = 0; n <= 16; ++n) {
    const RankRow& r = table[static_cast<std::size_t>(n)];
    CAPTURE(n);
    CHECK(r.dimension == 2 * n);
    CHECK(r.rank_omega_u == testing::partition_count_dp(n));
    CHECK(r.rank_omega_su == partitions_with_parts_at_least_two(n));
    CHECK(r.rank_w >= r.rank_omega_su);
    CHECK(r.rank_omega_su >= 0);
    if (n >= 2) CHECK(r.rank_w == testing::partition_count_dp(n) - testing::partition_count_dp(n - 2));
    // Torsion sits in real dimensions 8k + 1 and 8k + 2.
    const int d = 2 * n;
    CHECK(r.tors_rank == (d % 8 == 2 ? testing::partition_count_dp((d - 2) / 8) : Integer(0)));
    CHECK(r.tors_rank_odd == ((d + 1) % 8 == 1 ? testing::partition_count_dp(d / 8) : Integer(0)));
  }
  CHECK(table[0].hw_rank == 1);
  CHECK(table[1].hw_rank == 0);
  CHECK(table[2].hw_rank == 1);
  CHECK(table[4].hw_rank == 1);
  CHECK(table[8].hw_rank == 2);
  CHECK(table[12].hw_rank == 3);
}

}  // TEST_SUITE
