#include "oracles.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "bordx/cohomring.hpp"
#include "bordx/graded_poly.hpp"

namespace bordx::testing {
namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

Integer fact(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  return fact(n) / (fact(k) * fact(n - k));
}

// Dense polynomials in Z[u_1..u_k]/(u_j^{d_j+1}), indexed in mixed radix.
struct Dense {
  std::vector<int> dims;
  std::vector<Integer> coef;

  explicit Dense(std::vector<int> d) : dims(std::move(d)) {
    std::size_t size = 1;
    for (int x : dims) size *= static_cast<std::size_t>(x + 1);
    coef.assign(size, 0);
  }
  std::vector<int> exps(std::size_t idx) const {
    std::vector<int> e(dims.size());
    for (std::size_t j = 0; j < dims.size(); ++j) {
      e[j] = static_cast<int>(idx % static_cast<std::size_t>(dims[j] + 1));
      idx /= static_cast<std::size_t>(dims[j] + 1);
    }
    return e;
  }
  std::size_t index(const std::vector<int>& e) const {
    std::size_t idx = 0, stride = 1;
    for (std::size_t j = 0; j < dims.size(); ++j) {
      idx += static_cast<std::size_t>(e[j]) * stride;
      stride *= static_cast<std::size_t>(dims[j] + 1);
    }
    return idx;
  }
  int total(std::size_t idx) const {
    int t = 0;
    for (int x : exps(idx)) t += x;
    return t;
  }
  Dense operator*(const Dense& o) const {
    Dense r(dims);
    for (std::size_t i = 0; i < coef.size(); ++i) {
      if (coef[i] == 0) continue;
      const auto ei = exps(i);
      for (std::size_t j = 0; j < o.coef.size(); ++j) {
        if (o.coef[j] == 0) continue;
        auto ej = o.exps(j);
        bool keep = true;
        for (std::size_t t = 0; t < dims.size(); ++t) {
          ej[t] += ei[t];
          if (ej[t] > dims[t]) keep = false;
        }
        if (keep) r.coef[r.index(ej)] += coef[i] * o.coef[j];
      }
    }
    return r;
  }
  Dense part(int degree) const {
    Dense r(dims);
    for (std::size_t i = 0; i < coef.size(); ++i)
      if (total(i) == degree) r.coef[i] = coef[i];
    return r;
  }
};

int orientation(const TowerSpec& spec) {
  return spec.convention == Orientation::bordism && spec.conjugations.size() % 2 ? -1 : 1;
}

// Chern numbers of the submanifold Poincare dual to `dual` (of degree 2 codim)
// whose total Chern class is c(V) * factor.
ChernVector dual_submanifold(const TowerSpec& spec, int codim, const GradedPoly& dual, const GradedPoly& factor) {
  const PresentedRing ring = presentation(spec);
  const TriangularReducer red(ring);
  const int n = spec.complex_dimension();
  const int cap = 2 * n;
  const GradedPoly q = red.reduce(graded_mul(total_chern(spec), factor, cap));
  std::map<Partition, Integer> numbers;
  for (const auto& parts : all_partitions(n - codim)) {
    GradedPoly x = dual;
    for (int p : parts) x = red.reduce(graded_mul(x, q.homogeneous_part(2 * p), cap));
    numbers[Partition(parts)] = red.evaluate(x) * orientation(spec);
  }
  return ChernVector::from_map(n - codim, numbers);
}

GradedPoly geometric_series(const TowerSpec& spec, const GradedPoly& ratio) {
  const PresentedRing ring = presentation(spec);
  const TriangularReducer red(ring);
  const int cap = 2 * spec.complex_dimension();
  GradedPoly sum = ring.one(), power = ring.one();
  for (int j = 1; j <= spec.complex_dimension(); ++j) {
    power = red.reduce(graded_mul(power, ratio, cap));
    sum += power;
  }
  return sum;
}

std::vector<int> remap(const std::vector<int>& w, std::size_t size, const std::function<std::size_t(std::size_t)>& to) {
  std::vector<int> out(size, 0);
  for (std::size_t i = 0; i < w.size(); ++i) out[to(i)] = w[i];
  return out;
}

std::size_t base_roster_size(const TowerSpec& s) {
  std::size_t n = 0;
  for (int b : s.base) n += static_cast<std::size_t>(b) + 1;
  return n;
}

std::size_t stage_roster_size(const TowerSpec& s) {
  std::size_t n = 0;
  for (const auto& st : s.stages) n += st.lines.size();
  return n;
}

}  // namespace

std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

Integer partition_count_dp(int n) {
  if (n < 0) return 0;
  // ways[k][m]: partitions of m into parts <= k
  std::vector<Integer> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int m = k; m <= n; ++m) ways[static_cast<std::size_t>(m)] += ways[static_cast<std::size_t>(m - k)];
  return ways[static_cast<std::size_t>(n)];
}

ChernVector cp_product_dense(const std::vector<int>& dims) {
  int n = 0;
  for (int d : dims) n += d;
  Dense c(dims);
  c.coef[0] = 1;
  for (std::size_t j = 0; j < dims.size(); ++j) {
    Dense lin(dims);
    lin.coef[0] = 1;
    std::vector<int> e(dims.size(), 0);
    e[j] = 1;
    if (dims[j] >= 1) lin.coef[lin.index(e)] = 1;
    for (int copy = 0; copy <= dims[j]; ++copy) c = c * lin;
  }
  std::vector<Dense> parts;
  for (int r = 0; r <= n; ++r) parts.push_back(c.part(r));
  std::map<Partition, Integer> numbers;
  for (const auto& w : all_partitions(n)) {
    Dense x(dims);
    x.coef[0] = 1;
    for (int p : w) x = x * parts[static_cast<std::size_t>(p)];
    numbers[Partition(w)] = x.coef[x.index(dims)];
  }
  return ChernVector::from_map(n, numbers);
}

ChernVector tower_boundary(const TowerSpec& spec) {
  const PresentedRing ring = presentation(spec);
  const GradedPoly c1 = total_chern(spec).homogeneous_part(2);
  return dual_submanifold(spec, 1, c1, geometric_series(spec, -c1));
}

ChernVector tower_delta(const TowerSpec& spec) {
  const int cap = 2 * spec.complex_dimension();
  const GradedPoly c1 = total_chern(spec).homogeneous_part(2);
  const GradedPoly c1sq = graded_mul(c1, c1, cap);
  return dual_submanifold(spec, 2, -c1sq, geometric_series(spec, c1sq));
}

TowerSpec tower_psi(const TowerSpec& spec, int k1, int k2) {
  const std::size_t g = spec.num_generators();
  std::vector<int> c1(g, 0);
  const auto roster = spec.roster();
  for (std::size_t r = 0; r < roster.size(); ++r) {
    const int sign = spec.conjugations.count(r) ? -1 : 1;
    for (std::size_t j = 0; j < g; ++j) c1[j] += sign * roster[r][j];
  }
  TowerStage stage;
  std::vector<int> det_bar(g);
  for (std::size_t j = 0; j < g; ++j) det_bar[j] = -c1[j];
  stage.lines.push_back(det_bar);
  for (int i = 0; i < k1 + k2; ++i) stage.lines.push_back(std::vector<int>(g, 0));
  TowerSpec out = spec;
  out.generator_names.clear();
  const std::size_t offset = roster.size();
  for (int i = 0; i < k2; ++i) out.conjugations.insert(offset + 1 + static_cast<std::size_t>(k1 + i));
  out.stages.push_back(std::move(stage));
  return out;
}

TowerSpec tower_product(const TowerSpec& a, const TowerSpec& b) {
  if (a.convention != b.convention) throw std::invalid_argument("tower_product: conventions differ");
  const std::size_t ba = a.base.size(), bb = b.base.size(), sa = a.stages.size();
  TowerSpec out;
  out.convention = a.convention;
  out.base = a.base;
  out.base.insert(out.base.end(), b.base.begin(), b.base.end());
  auto map_a = [&](std::size_t i) { return i < ba ? i : ba + bb + (i - ba); };
  auto map_b = [&](std::size_t i) { return i < bb ? ba + i : ba + bb + sa + (i - bb); };
  for (std::size_t s = 0; s < a.stages.size(); ++s) {
    TowerStage st;
    for (const auto& w : a.stages[s].lines) st.lines.push_back(remap(w, ba + bb + s, map_a));
    out.stages.push_back(std::move(st));
  }
  for (std::size_t s = 0; s < b.stages.size(); ++s) {
    TowerStage st;
    for (const auto& w : b.stages[s].lines) st.lines.push_back(remap(w, ba + bb + sa + s, map_b));
    out.stages.push_back(std::move(st));
  }
  const std::size_t rba = base_roster_size(a), rbb = base_roster_size(b), rsa = stage_roster_size(a);
  for (std::size_t r : a.conjugations) out.conjugations.insert(r < rba ? r : rba + rbb + (r - rba));
  for (std::size_t r : b.conjugations) out.conjugations.insert(r < rbb ? rba + r : rba + rbb + rsa + (r - rbb));
  return out;
}

Integer ltilde_closed(int n1, int n2) {
  const int n = n1 + n2;
  Integer s = 0;
  for (int j = 1; j <= n1; ++j) s += (j % 2 ? -1 : 1) * choose(n, j);
  return s;
}

Integer ntilde_closed(int n1, int n2) {
  const int n = n1 + n2 + 1;
  Integer s = -n1;
  for (int j = 1; j <= n1; ++j) s += (j % 2 ? -1 : 1) * choose(n, j);
  return 2 * s;
}

Integer alpha_direct(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) n += p;
  Integer value = fact(n);
  for (int p : parts) value /= fact(p);
  for (int p : parts) {
    Integer base = p + 1, power = 1;
    for (int i = 0; i < p; ++i) power *= base;
    value *= power;
  }
  return value;
}

}  // namespace bordx::testing
