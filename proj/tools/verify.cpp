#include "verify.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "bordx/bordclass.hpp"
#include "bordx/genfactory.hpp"
#include "bordx/numbers.hpp"
#include "bordx/tower.hpp"
#include "parallel.hpp"

namespace bordx::cli {
namespace {

using Task = std::function<VerifyResult()>;

struct Sample {
  std::string name;
  ChernVector cls;
};

ChernVector exported(const TowerSpec& spec) { return chern_numbers(with_convention(spec, Orientation::bordism)); }

std::vector<Sample> operator_samples() {
  std::vector<Sample> out;
  for (int k = 1; k <= 5; ++k) out.push_back({"CP" + std::to_string(k), cp(k)});
  out.push_back({"K", k_class()});
  out.push_back({"V4", v4_class()});
  out.push_back({"Ltilde(2,1)", exported(build_ltilde(2, 1))});
  out.push_back({"Ltilde(2,3)", exported(build_ltilde(2, 3))});
  out.push_back({"Ntilde(2,1)", exported(build_ntilde(2, 1))});
  out.push_back({"Ntilde(2,3)", exported(build_ntilde(2, 3))});
  return out;
}

std::vector<Sample> w_samples() {
  return {{"CP1", cp(1)},
          {"K", k_class()},
          {"b3", construct_b(3)},
          {"b4", construct_b(4)},
          {"S6", s6_class()},
          {"Ltilde(2,3)", exported(build_ltilde(2, 3))}};
}

VerifyResult equality(std::string instance, const ChernVector& lhs, const ChernVector& rhs) {
  const bool ok = lhs == rhs;
  return {std::move(instance), ok, ok ? "equal" : "Chern numbers differ"};
}

std::vector<Task> algrel_tasks() {
  std::vector<Task> tasks;
  for (const auto& s : operator_samples()) {
    const int n = s.cls.dimension();
    if (n >= 2)
      tasks.push_back([s] {
        const ChernVector d = boundary(s.cls);
        return equality("d^2=0 " + s.name, boundary(d), ChernVector(d.dimension() - 1));
      });
    if (n >= 3)
      tasks.push_back([s] {
        const ChernVector d = boundary(s.cls);
        return equality("Delta d=0 " + s.name, delta(d), ChernVector(d.dimension() - 2));
      });
    tasks.push_back([s] { return equality("Delta Psi=id " + s.name, delta(psi(s.cls)), s.cls); });
    tasks.push_back([s] { return equality("d Psi=0 " + s.name, boundary(psi(s.cls)), ChernVector(s.cls.dimension() + 1)); });
    if (n >= 1) {
      tasks.push_back([s] {
        const ChernVector d = boundary(s.cls);
        return equality("chi d=CP1 d " + s.name, chi(d), product(cp(1), d));
      });
      tasks.push_back([s] {
        const ChernVector d = boundary(s.cls);
        return equality("d chi d=2d " + s.name, boundary(chi(d)), d * Integer(2));
      });
    }
  }
  return tasks;
}

std::vector<Task> deltaab_tasks() {
  std::vector<Task> tasks;
  const auto samples = w_samples();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i; j < samples.size(); ++j) {
      const Sample a = samples[i], b = samples[j];
      if (a.cls.dimension() + b.cls.dimension() > 10) continue;
      const std::string pair = a.name + "," + b.name;
      tasks.push_back([a, b, pair] {
        const ChernVector da = boundary(a.cls), db = boundary(b.cls);
        const ChernVector rhs = product(a.cls, db) + product(da, b.cls) - product(cp(1), product(da, db));
        return equality("d(ab) " + pair, boundary(product(a.cls, b.cls)), rhs);
      });
      tasks.push_back([a, b, pair] {
        const ChernVector da = boundary(a.cls), db = boundary(b.cls);
        return equality("Delta(ab) " + pair, delta(product(a.cls, b.cls)), product(da, db) * Integer(-2));
      });
    }
  }
  return tasks;
}

std::vector<Task> gcddif_tasks(int kmax) {
  std::vector<Task> tasks;
  for (int k = 2; k <= kmax; ++k)
    tasks.push_back([k] {
      const GcdCheck c = verify_gcddif(k);
      return VerifyResult{"k=" + std::to_string(k), c.matches, "gcd=" + c.gcd.get_str() + " target=" + c.target.get_str()};
    });
  return tasks;
}

std::vector<Task> nmod_tasks(int kmax, bool odd_primes) {
  std::vector<Task> tasks;
  for (int k = 3; k <= kmax; ++k) {
    if (!odd_primes) {
      tasks.push_back([k] {
        const PowerCheck c = verify_nmod(k, 2);
        return VerifyResult{"k=" + std::to_string(k) + " p=2", c.matches,
                            "power=" + c.largest_power.get_str() + " expected=" + c.expected.get_str()};
      });
      continue;
    }
    for (unsigned long p = 3; p <= 2ul * static_cast<unsigned long>(k) + 1; p += 2) {
      if (!is_prime(p)) continue;
      tasks.push_back([k, p] {
        const PowerCheck c = verify_nmod(k, p);
        return VerifyResult{"k=" + std::to_string(k) + " p=" + std::to_string(p), c.matches,
                            "power=" + c.largest_power.get_str() + " expected=" + c.expected.get_str()};
      });
    }
  }
  return tasks;
}

std::vector<Task> alphagcd_tasks(int nmax) {
  std::vector<Task> tasks;
  for (int n = 3; n <= nmax; ++n)
    tasks.push_back([n] {
      const GcdCheck c = verify_alpha_gcd(n);
      return VerifyResult{"n=" + std::to_string(n), c.matches, "gcd=" + c.gcd.get_str() + " target=" + c.target.get_str()};
    });
  return tasks;
}

std::vector<Task> family_tasks(bool ntilde, int nmax) {
  std::vector<Task> tasks;
  for (int n1 = 2; n1 <= nmax; n1 += 2) {
    for (int n2 = 1; n2 <= nmax; n2 += 2) {
      tasks.push_back([=] {
        const TowerSpec spec = ntilde ? build_ntilde(n1, n2) : build_ltilde(n1, n2);
        const Integer tower = s_number(spec);
        const Integer closed = ntilde ? ntilde_s_closed_form(n1, n2) : ltilde_s_closed_form(n1, n2);
        const std::string name = std::string(ntilde ? "Ntilde(" : "Ltilde(") + std::to_string(n1) + "," +
                                 std::to_string(n2) + ")";
        return VerifyResult{name, abs(tower) == abs(closed), "tower=" + tower.get_str() + " closed=" + closed.get_str()};
      });
    }
  }
  return tasks;
}

bool is_power_of_two(int i) { return i > 0 && (i & (i - 1)) == 0; }

std::vector<Task> wring_tasks(int imax) {
  std::vector<Task> tasks;
  for (int i = 1; i <= imax; ++i) {
    if (i == 2) continue;
    tasks.push_back([i] {
      const ChernVector b = construct_b(i);
      const Integer s = s_num(b);
      const bool special = is_power_of_two(i + 1) || is_power_of_two(i);
      const Integer r = special ? Integer(((s % 4) + 4) % 4) : Integer(((s % 2) + 2) % 2);
      const bool ok = in_W(b) && r == (special ? 2 : 1);
      return VerifyResult{"s_" + std::to_string(i) + "(b_" + std::to_string(i) + ")", ok,
                          "s=" + s.get_str() + (special ? " mod 4=" : " mod 2=") + r.get_str()};
    });
  }
  for (int i = 4; i <= imax; i *= 2) {
    tasks.push_back([i] {
      const Integer s = s_omega(construct_b(i), Partition{i / 2, i / 2});
      const bool ok = s % 2 != 0;
      return VerifyResult{"s_(" + std::to_string(i / 2) + "," + std::to_string(i / 2) + ")(b_" + std::to_string(i) + ")",
                          ok, "s=" + s.get_str()};
    });
  }
  const std::vector<int> indices{1, 3, 4, 5};
  for (int i : indices) {
    for (int j : indices) {
      if (j < i || i + j > 9) continue;
      tasks.push_back([i, j] {
        const ChernVector a = construct_b(i), b = construct_b(j);
        const ChernVector da = boundary(a), db = boundary(b);
        const ChernVector rhs =
            twisted_mul(a, db) + twisted_mul(da, b) - twisted_mul(cp(1), twisted_mul(da, db));
        return equality("d(b" + std::to_string(i) + "*b" + std::to_string(j) + ")", boundary(twisted_mul(a, b)), rhs);
      });
    }
  }
  return tasks;
}

}  // namespace

const std::vector<std::string>& lemma_names() {
  static const std::vector<std::string> names{"algrel", "deltaab", "gcddif", "nmod2", "nmodp",
                                              "alphagcd", "snl", "snn", "wring"};
  return names;
}

std::vector<VerifyResult> run_verification(const std::string& lemma, const VerifyRange& range, unsigned threads) {
  auto pick = [](int value, int fallback) { return value > 0 ? value : fallback; };
  std::vector<Task> tasks;
  if (lemma == "algrel")
    tasks = algrel_tasks();
  else if (lemma == "deltaab")
    tasks = deltaab_tasks();
  else if (lemma == "gcddif")
    tasks = gcddif_tasks(pick(range.kmax, 50));
  else if (lemma == "nmod2")
    tasks = nmod_tasks(pick(range.kmax, 30), false);
  else if (lemma == "nmodp")
    tasks = nmod_tasks(pick(range.kmax, 30), true);
  else if (lemma == "alphagcd")
    tasks = alphagcd_tasks(pick(range.nmax, 16));
  else if (lemma == "snl")
    tasks = family_tasks(false, pick(range.nmax, 10));
  else if (lemma == "snn")
    tasks = family_tasks(true, pick(range.nmax, 10));
  else if (lemma == "wring")
    tasks = wring_tasks(pick(range.imax, 12));
  else
    throw std::invalid_argument("unknown lemma '" + lemma + "'");
  return parallel_map<VerifyResult>(tasks.size(), threads, [&](std::size_t i) { return tasks[i](); });
}

}  // namespace bordx::cli
