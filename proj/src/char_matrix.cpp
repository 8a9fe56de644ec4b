#include <stdexcept>

#include "bordx/error.hpp"
#include "bordx/tower.hpp"
#include "chern_calculus.hpp"

namespace bordx {

std::vector<std::vector<std::size_t>> CharMatrix::vertices() const {
  std::vector<std::size_t> offsets;
  std::size_t offset = 0;
  for (int d : simplex_dims) {
    offsets.push_back(offset);
    offset += static_cast<std::size_t>(d) + 1;
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> omitted(simplex_dims.size(), 0);
  while (true) {
    std::vector<std::size_t> cols;
    for (std::size_t f = 0; f < simplex_dims.size(); ++f)
      for (std::size_t j = 0; j <= static_cast<std::size_t>(simplex_dims[f]); ++j)
        if (j != omitted[f]) cols.push_back(offsets[f] + j);
    out.push_back(std::move(cols));
    std::size_t f = simplex_dims.size();
    while (f > 0) {
      --f;
      if (++omitted[f] <= static_cast<std::size_t>(simplex_dims[f])) break;
      omitted[f] = 0;
      if (f == 0) return out;
    }
    if (simplex_dims.empty()) return out;
  }
}

void CharMatrix::validate() const {
  std::size_t n = 0, m = 0;
  for (int d : simplex_dims) {
    if (d < 1) throw std::invalid_argument("simplex dimensions must be positive");
    n += static_cast<std::size_t>(d);
    m += static_cast<std::size_t>(d) + 1;
  }
  if (lambda.rows() != n || lambda.cols() != m)
    throw std::invalid_argument("characteristic matrix must be " + std::to_string(n) + " x " + std::to_string(m));
  for (const auto& v : vertices()) {
    Integer d = determinant(lambda.select_columns(v));
    if (d != 1 && d != -1) throw StructureError("vertex cone with determinant " + d.get_str());
  }
}

namespace {

IntMatrix simplex_block_matrix(const std::vector<int>& dims) {
  std::size_t n = 0, m = 0;
  for (int d : dims) {
    n += static_cast<std::size_t>(d);
    m += static_cast<std::size_t>(d) + 1;
  }
  IntMatrix a(n, m);
  std::size_t row = 0, col = 0;
  for (int d : dims) {
    for (int i = 0; i < d; ++i) {
      a(row + static_cast<std::size_t>(i), col + static_cast<std::size_t>(i)) = 1;
      a(row + static_cast<std::size_t>(i), col + static_cast<std::size_t>(d)) = -1;
    }
    row += static_cast<std::size_t>(d);
    col += static_cast<std::size_t>(d) + 1;
  }
  return a;
}

// Identity block plus a last column alternating +1, -1, +1, ...
void alternating_block(IntMatrix& a, std::size_t row, std::size_t col, int d) {
  for (int i = 0; i < d; ++i) {
    a(row + static_cast<std::size_t>(i), col + static_cast<std::size_t>(i)) = 1;
    a(row + static_cast<std::size_t>(i), col + static_cast<std::size_t>(d)) = (i % 2 == 0) ? 1 : -1;
  }
}

void check_parity(const char* family, int n1, int n2) {
  if (n1 <= 0 || n1 % 2 != 0 || n2 <= 0 || n2 % 2 != 1)
    throw std::invalid_argument(std::string(family) + "(n1, n2) needs n1 positive even and n2 positive odd");
}

}  // namespace

CharMatrix char_matrix(Family family, const FamilyParams& params) {
  const int n1 = params.n1, n2 = params.n2;
  switch (family) {
    case Family::CPprod:
      return {params.omega.parts(), simplex_block_matrix(params.omega.parts())};
    case Family::L: {
      if (n1 < 0 || n2 < 0) throw std::invalid_argument("L(n1, n2) needs n1, n2 >= 0");
      if (n1 == 0 && n2 == 0) throw std::invalid_argument("L(0, 0) is a point and has no characteristic matrix");
      if (n1 == 0 || n2 == 0) return {{n1 + n2}, simplex_block_matrix({n1 + n2})};
      CharMatrix m{{n1, n2}, simplex_block_matrix({n1, n2})};
      m.lambda(static_cast<std::size_t>(n1), static_cast<std::size_t>(n1)) = 1;
      return m;
    }
    case Family::Ltilde: {
      check_parity("Ltilde", n1, n2);
      const std::size_t a = static_cast<std::size_t>(n1), b = static_cast<std::size_t>(n2);
      IntMatrix lam(a + b, a + b + 2);
      alternating_block(lam, 0, 0, n1);
      lam(a, a) = 1;
      alternating_block(lam, a, a + 1, n2);
      return {{n1, n2}, lam};
    }
    case Family::Ntilde: {
      check_parity("Ntilde", n1, n2);
      const std::size_t a = static_cast<std::size_t>(n1), b = static_cast<std::size_t>(n2);
      IntMatrix lam(1 + a + b, a + b + 4);
      lam(0, 0) = 1;
      lam(0, 1) = 1;
      alternating_block(lam, 1, 2, n1);
      const std::size_t row = 1 + a, col = a + 3, last_n1 = 2 + a;
      alternating_block(lam, row, col, n2);
      if (n2 >= 3) {
        lam(row, 1) = -1;
        lam(row + 1, 1) = 1;
        lam(row + 2, last_n1) = 1;
      } else {
        lam(row, last_n1) = 1;
      }
      return {{1, n1, n2}, lam};
    }
  }
  throw std::invalid_argument("unknown family");
}

bool su_check(const CharMatrix& m) {
  IntVector ones(m.lambda.cols(), Integer(1));
  return solve_integer(m.lambda.transpose(), ones).has_value();
}

namespace {

struct QuasitoricData {
  std::vector<int> degrees;
  std::vector<GradedPoly> facet_classes;  // v_1..v_m as linear forms in x1..xk
};

QuasitoricData quasitoric_data(const CharMatrix& m) {
  m.validate();
  const std::size_t k = m.simplex_dims.size();
  QuasitoricData q;
  q.degrees.assign(k, 2);
  std::vector<std::size_t> vertex, omitted;
  std::size_t offset = 0;
  for (int d : m.simplex_dims) {
    for (int j = 0; j < d; ++j) vertex.push_back(offset + static_cast<std::size_t>(j));
    omitted.push_back(offset + static_cast<std::size_t>(d));
    offset += static_cast<std::size_t>(d) + 1;
  }
  // lambda_V v_V + lambda_N x = 0.
  IntMatrix lv = m.lambda.select_columns(vertex);
  q.facet_classes.assign(m.lambda.cols(), GradedPoly(q.degrees));
  for (std::size_t i = 0; i < k; ++i) {
    q.facet_classes[omitted[i]] = GradedPoly::generator(q.degrees, i);
    IntVector rhs = m.lambda.column(omitted[i]);
    for (auto& x : rhs) x = -x;
    auto sol = solve_integer(lv, rhs);
    if (!sol) throw StructureError("vertex cone is not unimodular");
    for (std::size_t r = 0; r < vertex.size(); ++r) {
      Exponent e(k, 0);
      e[i] = 1;
      q.facet_classes[vertex[r]].add_term(e, (*sol)[r]);
    }
  }
  return q;
}

}  // namespace

PresentedRing quasitoric_presentation(const CharMatrix& m) {
  QuasitoricData q = quasitoric_data(m);
  const std::size_t k = m.simplex_dims.size();
  std::vector<RingGenerator> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back({"x" + std::to_string(i + 1), 2});
  std::vector<GradedPoly> relations;
  std::size_t offset = 0;
  for (int d : m.simplex_dims) {
    GradedPoly rel = GradedPoly::constant(q.degrees, 1);
    for (int j = 0; j <= d; ++j) rel = rel * q.facet_classes[offset + static_cast<std::size_t>(j)];
    if (!rel.is_zero()) relations.push_back(rel);
    offset += static_cast<std::size_t>(d) + 1;
  }
  const int top = 2 * static_cast<int>(m.lambda.rows());
  std::vector<Exponent> monomials;
  IntVector phi = top_degree_functional(q.degrees, relations, top, &monomials);
  for (std::size_t i = 0; i < monomials.size(); ++i)
    if (phi[i] == 1 || phi[i] == -1) return PresentedRing(gens, relations, top, monomials[i], Backend::lattice);
  throw StructureError("no top-degree monomial generates the quasitoric cohomology");
}

GradedPoly quasitoric_total_chern(const CharMatrix& m) {
  QuasitoricData q = quasitoric_data(m);
  const int cap = 2 * static_cast<int>(m.lambda.rows());
  GradedPoly c = GradedPoly::constant(q.degrees, 1);
  for (const auto& v : q.facet_classes) c = graded_mul(c, GradedPoly::constant(q.degrees, 1) + v, cap);
  return c;
}

ChernVector quasitoric_chern_numbers(const CharMatrix& m) {
  return detail::chern_numbers_in_ring(quasitoric_presentation(m), quasitoric_total_chern(m), Backend::lattice);
}

}  // namespace bordx
