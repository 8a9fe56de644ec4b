#include "bordx/numbers.hpp"

#include <algorithm>
#include <stdexcept>

namespace bordx {

Integer m_number(int i) {
  if (i < 1) throw std::invalid_argument("m_i needs i >= 1");
  auto p = prime_power_base(static_cast<unsigned long>(i) + 1);
  return p ? Integer(*p) : Integer(1);
}

Integer g_number(int n) {
  if (n < 3) throw std::invalid_argument("g(n) needs n >= 3");
  if (n == 3) return -48;
  Integer v = m_number(n - 1) * m_number(n - 2);
  return n % 2 ? Integer(2 * v) : v;
}

Integer alpha(const Partition& w) {
  if (w.empty()) throw std::invalid_argument("alpha of the empty partition");
  Integer v = multinomial(w.weight(), w);
  for (int part : w.parts()) v *= ipow(Integer(part + 1), static_cast<unsigned long>(part));
  return v;
}

std::vector<Partition> phat(int n) {
  if (n < 3) throw std::invalid_argument("phat(n) needs n >= 3");
  return partitions(n, n - 2);
}

Integer partition_count(int n) {
  if (n < 0) return 0;
  std::vector<Integer> p(static_cast<std::size_t>(n) + 1, Integer(0));
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Integer total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const bool plus = k % 2 == 1;
      const Integer& a = p[static_cast<std::size_t>(m - g1)];
      total += plus ? a : Integer(-a);
      if (g2 <= m) {
        const Integer& b = p[static_cast<std::size_t>(m - g2)];
        total += plus ? b : Integer(-b);
      }
    }
    p[static_cast<std::size_t>(m)] = total;
  }
  return p[static_cast<std::size_t>(n)];
}

GcdCheck verify_alpha_gcd(int n) {
  GcdCheck out;
  out.gcd = 0;
  for (const auto& w : phat(n)) out.gcd = gcd(out.gcd, alpha(w));
  out.target = abs(g_number(n));
  out.matches = out.gcd == out.target;
  return out;
}

GcdCheck verify_gcddif(int k) {
  if (k <= 1) throw std::invalid_argument("verify_gcddif needs k > 1");
  GcdCheck out;
  out.gcd = 0;
  for (int i = 1; i <= k; ++i) out.gcd = gcd(out.gcd, binomial(2 * k + 1, 2 * i) - binomial(2 * k + 1, 2 * i - 1));
  out.target = m_number(2 * k + 1) * m_number(2 * k);
  out.matches = out.gcd == out.target;
  return out;
}

Integer nmod_term(int k, int i) {
  Integer a = -2 * i;
  for (int j = 1; j <= 2 * i; ++j) a += (j % 2 ? Integer(-binomial(2 * k, j)) : binomial(2 * k, j));
  return a;
}

namespace {

Integer alternating_binomial_sum(int n, int top) {
  Integer total = 0;
  for (int j = 1; j <= top; ++j) total += (j % 2 ? -1 : 1) * binomial(n, j);
  return total;
}

void check_family_params(int n1, int n2) {
  if (n1 <= 0 || n1 % 2 != 0 || n2 <= 0 || n2 % 2 != 1)
    throw std::invalid_argument("family closed forms need n1 even positive and n2 odd positive");
}

}  // namespace

Integer ltilde_s_closed_form(int n1, int n2) {
  check_family_params(n1, n2);
  return alternating_binomial_sum(n1 + n2, n1);
}

Integer ntilde_s_closed_form(int n1, int n2) {
  check_family_params(n1, n2);
  return 2 * (alternating_binomial_sum(n1 + n2 + 1, n1) - n1);
}

PowerCheck verify_nmod(int k, unsigned long p) {
  if (k <= 2) throw std::invalid_argument("verify_nmod needs k > 2");
  if (!is_prime(p)) throw std::invalid_argument("verify_nmod needs a prime p");
  Integer g = 0;
  for (int i = 1; i < k; ++i) g = gcd(g, nmod_term(k, i));
  if (g == 0) throw std::logic_error("all a_i vanish");
  PowerCheck out;
  out.largest_power = 1;
  while (g % p == 0) {
    g /= p;
    out.largest_power *= p;
  }
  const unsigned long target = p == 2 ? 2ul * static_cast<unsigned long>(k) : 2ul * static_cast<unsigned long>(k) + 1;
  auto base = prime_power_base(target);
  out.expected = (base && *base == p) ? Integer(p) : Integer(1);
  out.matches = out.largest_power == out.expected;
  return out;
}

namespace {

// Partitions of n into parts >= 2.
Integer partitions_without_ones(int n) {
  if (n < 0) return 0;
  return partition_count(n) - partition_count(n - 1);
}

// Multisets of generators of complex degrees 2 and 4k (k >= 2) with total n.
Integer hw_count(int n) {
  std::vector<int> sizes;
  for (int d = 2; d <= n; d += (d == 2 ? 6 : 4)) sizes.push_back(d);
  std::vector<Integer> ways(static_cast<std::size_t>(std::max(n, 0)) + 1, Integer(0));
  ways[0] = 1;
  for (int s : sizes)
    for (int t = s; t <= n; ++t) ways[static_cast<std::size_t>(t)] += ways[static_cast<std::size_t>(t - s)];
  return n < 0 ? Integer(0) : ways[static_cast<std::size_t>(n)];
}

}  // namespace

std::vector<RankRow> rank_table(int max_n) {
  if (max_n < 0) throw std::invalid_argument("rank_table needs max_n >= 0");
  std::vector<RankRow> rows;
  for (int n = 0; n <= max_n; ++n) {
    RankRow r;
    r.dimension = 2 * n;
    r.rank_omega_u = partition_count(n);
    r.rank_w = partition_count(n) - partition_count(n - 2);
    r.rank_omega_su = partitions_without_ones(n);
    r.tors_rank = (2 * n) % 8 == 2 ? partition_count((2 * n - 2) / 8) : Integer(0);
    r.tors_rank_odd = (2 * n) % 8 == 0 ? partition_count(2 * n / 8) : Integer(0);
    r.hw_rank = hw_count(n);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace bordx
