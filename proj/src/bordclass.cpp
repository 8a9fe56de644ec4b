#include "bordx/bordclass.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "chern_calculus.hpp"

namespace bordx {
namespace detail {

std::vector<int> chern_degrees(int n) {
  std::vector<int> d;
  for (int i = 1; i <= n; ++i) d.push_back(2 * i);
  return d;
}

GradedPoly universal_total_chern(int n) {
  GradedPoly c = GradedPoly::constant(chern_degrees(n), 1);
  for (int i = 0; i < n; ++i) c += GradedPoly::generator(chern_degrees(n), static_cast<std::size_t>(i));
  return c;
}

Exponent multiplicities(const Partition& w) {
  Exponent e(static_cast<std::size_t>(w.weight()), 0);
  for (int part : w.parts()) ++e[static_cast<std::size_t>(part - 1)];
  return e;
}

const std::map<Exponent, std::size_t>& multiplicity_index(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::map<Exponent, std::size_t>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<std::map<Exponent, std::size_t>>();
    const auto& list = partition_list(n);
    for (std::size_t i = 0; i < list.size(); ++i) slot->emplace(multiplicities(list[i]), i);
  }
  return *slot;
}

Integer pair_with(const GradedPoly& p, const ChernVector& a) {
  const int n = a.dimension();
  if (p.num_generators() != static_cast<std::size_t>(n))
    throw std::invalid_argument("pairing a polynomial over the wrong Chern generators");
  const auto& index = multiplicity_index(n);
  Integer total = 0;
  for (const auto& [e, c] : p.terms()) {
    if (p.degree_of(e) != 2 * n) continue;
    mpz_addmul(total.get_mpz_t(), c.get_mpz_t(), a.at(index.at(e)).get_mpz_t());
  }
  return total;
}

namespace {

void product_dfs(const std::vector<GradedPoly>& parts, int remaining, int max_part, const GradedPoly& acc,
                 const PolyMul& mul, std::size_t& counter,
                 const std::function<void(std::size_t, const GradedPoly&)>& fn) {
  if (remaining == 0) {
    fn(counter++, acc);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part)
    product_dfs(parts, remaining - part, part, mul(acc, parts[static_cast<std::size_t>(part)]), mul, counter, fn);
}

}  // namespace

void for_each_partition_product(const std::vector<GradedPoly>& parts, int n, const GradedPoly& one,
                                const PolyMul& mul,
                                const std::function<void(std::size_t, const GradedPoly&)>& fn) {
  if (static_cast<int>(parts.size()) <= n && n > 0) throw std::invalid_argument("not enough graded parts");
  std::size_t counter = 0;
  product_dfs(parts, n, n, one, mul, counter, fn);
}

// Newton's identity for x_1^n + x_2^n + ... in terms of elementary symmetric c_i.
GradedPoly newton_power_sum(int n) {
  const auto deg = chern_degrees(n);
  std::vector<GradedPoly> p(static_cast<std::size_t>(n) + 1, GradedPoly(deg));
  for (int k = 1; k <= n; ++k) {
    GradedPoly acc(deg);
    for (int i = 1; i < k; ++i) {
      GradedPoly term = GradedPoly::generator(deg, static_cast<std::size_t>(i - 1)) * p[static_cast<std::size_t>(k - i)];
      acc += (i % 2 == 1) ? term : -term;
    }
    GradedPoly last = GradedPoly::generator(deg, static_cast<std::size_t>(k - 1)) * Integer(k);
    acc += (k % 2 == 1) ? last : -last;
    p[static_cast<std::size_t>(k)] = acc;
  }
  return p[static_cast<std::size_t>(n)];
}

}  // namespace detail

using detail::chern_degrees;
using detail::newton_power_sum;
using detail::for_each_partition_product;
using detail::pair_with;
using detail::universal_total_chern;

namespace {

GradedPoly c1_power(int n, int k) { return GradedPoly::generator(chern_degrees(n), 0, k); }

// c_w[result] = < dual * q_w, a >, q = c(a) * factor, result of dimension n - codim.
ChernVector dual_transform(const ChernVector& a, int codim, const GradedPoly& factor, const GradedPoly& dual) {
  const int n = a.dimension();
  const int m = n - codim;
  const int cap = 2 * n;
  GradedPoly q = graded_mul(universal_total_chern(n), factor, cap);
  auto parts = graded_parts(q, m);
  ChernVector out(m);
  std::vector<Integer> values(out.values().size());
  for_each_partition_product(
      parts, m, GradedPoly::constant(chern_degrees(n), 1),
      [cap](const GradedPoly& x, const GradedPoly& y) { return graded_mul(x, y, cap); },
      [&](std::size_t i, const GradedPoly& qw) { values[i] = pair_with(graded_mul(dual, qw, cap), a); });
  const auto& keys = out.keys();
  for (std::size_t i = 0; i < keys.size(); ++i) out.set(keys[i], values[i]);
  return out;
}

// Number of 0-1 matrices with the given row and column sums.
Integer count_01_matrices(const std::vector<int>& rows, std::vector<int> cols) {
  std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo;
  std::function<Integer(std::size_t, std::vector<int>&)> go = [&](std::size_t r, std::vector<int>& rem) -> Integer {
    if (r == rows.size()) {
      for (int x : rem)
        if (x) return 0;
      return 1;
    }
    auto key = std::make_pair(r, rem);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer total = 0;
    std::function<void(std::size_t, int)> choose = [&](std::size_t j, int need) {
      if (need == 0) {
        total += go(r + 1, rem);
        return;
      }
      if (rem.size() - j < static_cast<std::size_t>(need)) return;
      if (rem[j] > 0) {
        --rem[j];
        choose(j + 1, need - 1);
        ++rem[j];
      }
      choose(j + 1, need);
    };
    choose(0, rows[r]);
    memo.emplace(std::move(key), total);
    return total;
  };
  return go(0, cols);
}

struct SymmetricBasis {
  // e_lambda = sum_mu to_monomial[lambda][mu] m_mu
  std::vector<std::vector<Integer>> to_monomial;
  // m_w = sum_lambda to_elementary[w][lambda] e_lambda
  std::vector<std::vector<Integer>> to_elementary;
};

const SymmetricBasis& symmetric_basis(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<SymmetricBasis>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (slot) return *slot;
  const auto& parts = partition_list(n);
  const std::size_t N = parts.size();
  auto basis = std::make_unique<SymmetricBasis>();
  basis->to_monomial.assign(N, std::vector<Integer>(N));
  std::vector<std::vector<Rational>> a(N, std::vector<Rational>(2 * N, Rational(0)));
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      basis->to_monomial[i][j] = count_01_matrices(parts[i].parts(), parts[j].parts());
      a[i][j] = Rational(basis->to_monomial[i][j]);
    }
    a[i][N + i] = 1;
  }
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < N; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < 2 * N; ++j) a[r][j] -= f * a[col][j];
    }
  }
  // A^{-1} maps e-coordinates to m-coordinates, so m_w has coefficients (A^{-1})^T[w].
  basis->to_elementary.assign(N, std::vector<Integer>(N));
  for (std::size_t w = 0; w < N; ++w) {
    for (std::size_t l = 0; l < N; ++l) {
      const Rational& x = a[l][N + w];
      if (x.get_den() != 1) throw std::logic_error("monomial symmetric expansion is not integral");
      basis->to_elementary[w][l] = x.get_num();
    }
  }
  slot = std::move(basis);
  return *slot;
}

// All s_w numbers of a, in partition_list order.
std::vector<Integer> monomial_numbers(const ChernVector& a) {
  const auto& m = symmetric_basis(a.dimension()).to_elementary;
  std::vector<Integer> out(m.size());
  for (std::size_t w = 0; w < m.size(); ++w)
    for (std::size_t l = 0; l < m.size(); ++l)
      if (m[w][l] != 0) out[w] += m[w][l] * a.at(l);
  return out;
}

ChernVector from_monomial_numbers(int n, const std::vector<Integer>& s) {
  const auto& e = symmetric_basis(n).to_monomial;
  ChernVector out(n);
  const auto& keys = out.keys();
  for (std::size_t l = 0; l < keys.size(); ++l) {
    Integer v = 0;
    for (std::size_t w = 0; w < keys.size(); ++w)
      if (e[l][w] != 0) v += e[l][w] * s[w];
    out.set(keys[l], v);
  }
  return out;
}

}  // namespace

ChernVector cp(int n) {
  if (n < 0) throw std::invalid_argument("cp: negative dimension");
  ChernVector out(n);
  for (const auto& w : partition_list(n)) {
    Integer v = 1;
    for (int part : w.parts()) v *= binomial(n + 1, part);
    out.set(w, v);
  }
  return out;
}

ChernVector detail::product_expanded(const ChernVector& a, const ChernVector& b) {
  const int p = a.dimension(), q = b.dimension();
  if (p == 0) return b * a.at(0);
  if (q == 0) return a * b.at(0);
  std::vector<int> degrees = chern_degrees(p);
  for (int d : chern_degrees(q)) degrees.push_back(d);
  const int n = p + q;
  const int cap = 2 * n;
  auto split_degree = [&](const Exponent& e) {
    int dc = 0;
    for (int i = 0; i < p; ++i) dc += e[static_cast<std::size_t>(i)] * 2 * (i + 1);
    return dc;
  };
  // Graded parts of c(a) c(b) over the combined generator list.
  std::vector<GradedPoly> parts(static_cast<std::size_t>(n) + 1, GradedPoly(degrees));
  for (int i = 0; i <= p; ++i) {
    for (int j = 0; j <= q; ++j) {
      Exponent e(static_cast<std::size_t>(n), 0);
      if (i) e[static_cast<std::size_t>(i - 1)] = 1;
      if (j) e[static_cast<std::size_t>(p + j - 1)] = 1;
      parts[static_cast<std::size_t>(i + j)].add_term(e, 1);
    }
  }
  auto mul = [&](const GradedPoly& x, const GradedPoly& y) {
    GradedPoly z = graded_mul(x, y, cap);
    GradedPoly kept(degrees);
    for (const auto& [e, c] : z.terms()) {
      int dc = split_degree(e);
      if (dc <= 2 * p && z.degree_of(e) - dc <= 2 * q) kept.add_term(e, c);
    }
    return kept;
  };
  const auto& ia = detail::multiplicity_index(p);
  const auto& ib = detail::multiplicity_index(q);
  ChernVector out(n);
  std::vector<Integer> values(out.values().size());
  for_each_partition_product(parts, n, GradedPoly::constant(degrees, 1), mul, [&](std::size_t idx, const GradedPoly& P) {
    Integer total = 0;
    for (const auto& [e, c] : P.terms()) {
      if (split_degree(e) != 2 * p) continue;
      Exponent ea(e.begin(), e.begin() + p), eb(e.begin() + p, e.end());
      total += c * a.at(ia.at(ea)) * b.at(ib.at(eb));
    }
    values[idx] = total;
  });
  const auto& keys = out.keys();
  for (std::size_t i = 0; i < keys.size(); ++i) out.set(keys[i], values[i]);
  return out;
}

Integer s_num(const ChernVector& a) {
  if (a.dimension() == 0) return 0;
  return pair_with(newton_power_sum(a.dimension()), a);
}

Integer s_omega(const ChernVector& a, const Partition& w) {
  const int n = a.dimension();
  if (w.weight() != n) throw std::invalid_argument("s_omega: partition weight differs from dimension");
  if (n == 0) return a.at(0);
  const auto& row = symmetric_basis(n).to_elementary[partition_index(w)];
  Integer total = 0;
  for (std::size_t l = 0; l < row.size(); ++l) total += row[l] * a.at(l);
  return total;
}

// m_w(x, y) = sum over splittings w = u + v of m_u(x) m_v(y).
ChernVector product(const ChernVector& a, const ChernVector& b) {
  const int p = a.dimension(), q = b.dimension();
  if (p == 0) return b * a.at(0);
  if (q == 0) return a * b.at(0);
  const int n = p + q;
  const auto sa = monomial_numbers(a);
  const auto sb = monomial_numbers(b);
  const auto& list = partition_list(n);
  std::vector<Integer> s(list.size());
  for (std::size_t idx = 0; idx < list.size(); ++idx) {
    std::vector<std::pair<int, int>> groups;  // (part, multiplicity)
    for (int part : list[idx].parts()) {
      if (!groups.empty() && groups.back().first == part)
        ++groups.back().second;
      else
        groups.emplace_back(part, 1);
    }
    std::vector<int> left, right;
    std::function<void(std::size_t, int)> split = [&](std::size_t g, int need) {
      if (g == groups.size()) {
        if (need != 0) return;
        s[idx] += sa[partition_index(Partition(left))] * sb[partition_index(Partition(right))];
        return;
      }
      const auto [part, mult] = groups[g];
      for (int k = 0; k <= mult && k * part <= need; ++k) {
        left.insert(left.end(), static_cast<std::size_t>(k), part);
        right.insert(right.end(), static_cast<std::size_t>(mult - k), part);
        split(g + 1, need - k * part);
        left.resize(left.size() - static_cast<std::size_t>(k));
        right.resize(right.size() - static_cast<std::size_t>(mult - k));
      }
    };
    split(0, p);
  }
  return from_monomial_numbers(n, s);
}

Rational todd(const ChernVector& a) {
  const int n = a.dimension();
  if (n > 4) throw std::domain_error("todd: only implemented through complex dimension 4");
  if (n == 0) return Rational(a.at(0));
  const auto deg = chern_degrees(n);
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("c" + std::to_string(i));
  static const char* numerators[] = {"", "c1", "c1^2 + c2", "c1*c2", "-c1^4 + 4*c1^2*c2 + 3*c2^2 + c1*c3 - c4"};
  static const long denominators[] = {1, 2, 12, 24, 720};
  GradedPoly num = parse_graded_poly(numerators[n], names, deg);
  Rational r(pair_with(num, a), Integer(denominators[n]));
  r.canonicalize();
  return r;
}

ChernVector boundary(const ChernVector& a) { return boundary_k(a, 1); }

ChernVector boundary_k(const ChernVector& a, int k) {
  const int n = a.dimension();
  if (k < 1) throw std::invalid_argument("boundary_k: k must be positive");
  if (n < k) throw std::invalid_argument("boundary_k: dimension smaller than k");
  const int cap = 2 * n;
  const auto deg = chern_degrees(n);
  GradedPoly one_plus_c1 = GradedPoly::constant(deg, 1) + c1_power(n, 1);
  GradedPoly factor = inverse_series(graded_pow(one_plus_c1, static_cast<unsigned>(k), cap), cap);
  return dual_transform(a, k, factor, c1_power(n, k));
}

ChernVector delta(const ChernVector& a) {
  const int n = a.dimension();
  if (n < 2) throw std::invalid_argument("delta: dimension must be at least 2");
  const int cap = 2 * n;
  const auto deg = chern_degrees(n);
  GradedPoly factor = inverse_series(GradedPoly::constant(deg, 1) - c1_power(n, 2), cap);
  return dual_transform(a, 2, factor, -c1_power(n, 2));
}

ChernVector psi_k1k2(const ChernVector& a, int k1, int k2) {
  if (k1 < 0 || k2 < 0 || k1 + k2 < 1) throw std::invalid_argument("psi: need k1, k2 >= 0 and k1 + k2 >= 1");
  const int n = a.dimension();
  const int k = k1 + k2;
  const int total_dim = n + k;
  const int cap = 2 * total_dim;
  std::vector<int> degrees = chern_degrees(n);
  degrees.push_back(2);
  const std::size_t vi = static_cast<std::size_t>(n);
  const GradedPoly one = GradedPoly::constant(degrees, 1);
  const GradedPoly v = GradedPoly::generator(degrees, vi);
  GradedPoly c = one;
  for (int i = 0; i < n; ++i) c += GradedPoly::generator(degrees, static_cast<std::size_t>(i));
  const GradedPoly c1 = n ? GradedPoly::generator(degrees, 0) : GradedPoly(degrees);

  // v^(k+1) = c1 v^k, so v^e = c1^(e-k) v^k for e > k.
  auto reduce = [&](const GradedPoly& x) {
    GradedPoly out(degrees);
    for (const auto& [e, coef] : x.terms()) {
      if (e[vi] <= k) {
        out.add_term(e, coef);
      } else if (n > 0) {
        Exponent f = e;
        f[0] += f[vi] - k;
        f[vi] = k;
        out.add_term(f, coef);
      }
    }
    return out;
  };
  auto mul = [&](const GradedPoly& x, const GradedPoly& y) { return reduce(graded_mul(x, y, cap)); };

  GradedPoly total = mul(c, one + v - c1);
  for (int i = 0; i < k1; ++i) total = mul(total, one + v);
  for (int i = 0; i < k2; ++i) total = mul(total, one - v);
  auto parts = graded_parts(total, total_dim);

  const auto& index = detail::multiplicity_index(n);
  ChernVector out(total_dim);
  std::vector<Integer> values(out.values().size());
  for_each_partition_product(parts, total_dim, one, mul, [&](std::size_t idx, const GradedPoly& P) {
    Integer sum = 0;
    for (const auto& [e, coef] : P.terms()) {
      if (e[vi] != k) continue;
      Exponent ec(e.begin(), e.begin() + n);
      sum += coef * a.at(index.at(ec));
    }
    values[idx] = (k2 % 2) ? Integer(-sum) : sum;
  });
  const auto& keys = out.keys();
  for (std::size_t i = 0; i < keys.size(); ++i) out.set(keys[i], values[i]);
  return out;
}

ChernVector stong_pi(const ChernVector& a) {
  const int n = a.dimension();
  const int cap = 2 * (n + 1);
  std::vector<int> degrees = chern_degrees(n);
  degrees.push_back(2);
  const std::size_t ti = static_cast<std::size_t>(n);
  const GradedPoly one = GradedPoly::constant(degrees, 1);
  const GradedPoly t = GradedPoly::generator(degrees, ti);
  GradedPoly c = one;
  for (int i = 0; i < n; ++i) c += GradedPoly::generator(degrees, static_cast<std::size_t>(i));
  const GradedPoly c1 = n ? GradedPoly::generator(degrees, 0) : GradedPoly(degrees);

  auto drop_t2 = [&](const GradedPoly& x) {
    GradedPoly out(degrees);
    for (const auto& [e, coef] : x.terms())
      if (e[ti] <= 1) out.add_term(e, coef);
    return out;
  };
  auto mul = [&](const GradedPoly& x, const GradedPoly& y) { return drop_t2(graded_mul(x, y, cap)); };

  GradedPoly ambient = mul(one + t * Integer(2), c);
  GradedPoly p = mul(ambient, drop_t2(inverse_series(one + t + c1, cap)));
  auto parts = graded_parts(p, n);
  const GradedPoly dual = t + c1;

  const auto& index = detail::multiplicity_index(n);
  ChernVector out(n);
  std::vector<Integer> values(out.values().size());
  for_each_partition_product(parts, n, one, mul, [&](std::size_t idx, const GradedPoly& P) {
    GradedPoly Q = mul(dual, P);
    Integer sum = 0;
    for (const auto& [e, coef] : Q.terms()) {
      if (e[ti] != 1) continue;
      Exponent ec(e.begin(), e.begin() + n);
      sum += coef * a.at(index.at(ec));
    }
    values[idx] = sum;
  });
  const auto& keys = out.keys();
  for (std::size_t i = 0; i < keys.size(); ++i) out.set(keys[i], values[i]);
  return out;
}

bool in_W(const ChernVector& a) {
  bool by_numbers = true;
  for (std::size_t i = 0; i < a.keys().size(); ++i)
    if (a.keys()[i].multiplicity(1) >= 2 && a.at(i) != 0) by_numbers = false;
  if (a.dimension() >= 2 && by_numbers != delta(a).is_zero())
    throw std::logic_error("W-membership criteria disagree");
  return by_numbers;
}

bool in_ker_boundary(const ChernVector& a) { return a.dimension() == 0 || boundary(a).is_zero(); }

bool c1_numbers_vanish(const ChernVector& a) {
  for (std::size_t i = 0; i < a.keys().size(); ++i)
    if (a.keys()[i].multiplicity(1) >= 1 && a.at(i) != 0) return false;
  return true;
}

ChernVector twisted_mul(const ChernVector& a, const ChernVector& b) {
  if (!in_W(a) || !in_W(b)) throw std::invalid_argument("twisted product: operand outside W");
  ChernVector out = product(a, b);
  if (a.dimension() >= 1 && b.dimension() >= 1)
    out += product(v4_class(), product(boundary(a), boundary(b))) * Integer(2);
  return out;
}

ChernVector rho(const ChernVector& a) {
  if (a.dimension() < 2) return a;
  return a - psi(delta(a));
}

ChernVector v4_class() { return psi(ChernVector::point()); }

ChernVector k_class() { return product(cp(1), cp(1)) * Integer(9) - cp(2) * Integer(8); }

}  // namespace bordx
