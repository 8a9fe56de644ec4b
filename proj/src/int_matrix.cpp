#include "bordx/int_matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bordx {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> cols) const {
  IntMatrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, cols[j]);
  return out;
}

IntVector operator*(const IntMatrix& m, const IntVector& x) {
  if (x.size() != m.cols()) throw std::invalid_argument("IntMatrix * vector: size mismatch");
  IntVector y(m.rows(), Integer(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) y[r] += m(r, c) * x[c];
  return y;
}

void make_primitive(IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return;
  auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
  if (*first < 0) g = -g;
  for (auto& x : v) x /= g;
}

namespace {

struct BareissEchelon {
  IntMatrix a;
  std::vector<std::size_t> pivots;
  int swaps = 0;
};

BareissEchelon bareiss(IntMatrix a) {
  BareissEchelon out;
  const std::size_t rows = a.rows(), cols = a.cols();
  Integer prev = 1;
  std::size_t k = 0;
  for (std::size_t col = 0; col < cols && k < rows; ++col) {
    std::size_t piv = k;
    while (piv < rows && a(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != k) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(k, j));
      ++out.swaps;
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a(i, j) = a(k, col) * a(i, j) - a(i, col) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, col) = 0;
    }
    prev = a(k, col);
    out.pivots.push_back(col);
    ++k;
  }
  out.a = std::move(a);
  return out;
}

// Echelon basis of a lattice built by successive insertion with gcd row operations.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t width) : width_(width) {}

  void insert(IntVector v) {
    while (true) {
      auto p = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
      if (p == v.end()) return;
      std::size_t col = static_cast<std::size_t>(p - v.begin());
      auto it = rows_.find(col);
      if (it == rows_.end()) {
        if (v[col] < 0)
          for (auto& x : v) x = -x;
        rows_.emplace(col, std::move(v));
        return;
      }
      IntVector& r = it->second;
      const Integer a = r[col], b = v[col];
      if (b % a == 0) {
        const Integer q = b / a;
        for (std::size_t j = col; j < width_; ++j) v[j] -= q * r[j];
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const Integer ag = a / g, bg = b / g;
      for (std::size_t j = col; j < width_; ++j) {
        Integer nr = s * r[j] + t * v[j];
        v[j] = ag * v[j] - bg * r[j];
        r[j] = std::move(nr);
      }
      if (r[col] < 0)
        for (auto& x : r) x = -x;
    }
  }

  // Reduces entries above pivots in columns < limit into [0, pivot).
  void reduce_above(std::size_t limit) {
    for (auto it = rows_.begin(); it != rows_.end() && it->first < limit; ++it) {
      const std::size_t col = it->first;
      const IntVector& piv = it->second;
      for (auto jt = rows_.begin(); jt != it; ++jt) {
        IntVector& r = jt->second;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), r[col].get_mpz_t(), piv[col].get_mpz_t());
        if (q == 0) continue;
        for (std::size_t j = col; j < width_; ++j) r[j] -= q * piv[j];
      }
    }
  }

  const std::map<std::size_t, IntVector>& rows() const { return rows_; }

 private:
  std::size_t width_;
  std::map<std::size_t, IntVector> rows_;
};

}  // namespace

RankKernel lattice_rank_kernel(const IntMatrix& m) {
  BareissEchelon e = bareiss(m);
  RankKernel out;
  out.rank = e.pivots.size();
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[f] = 1;
    for (std::size_t i = out.rank; i-- > 0;) {
      const std::size_t p = e.pivots[i];
      Rational acc = 0;
      for (std::size_t j = p + 1; j < cols; ++j)
        if (x[j] != 0 && e.a(i, j) != 0) acc += Rational(e.a(i, j)) * x[j];
      x[p] = -acc / Rational(e.a(i, p));
    }
    Integer den = 1;
    for (const auto& q : x) den = lcm(den, Integer(q.get_den()));
    IntVector v(cols);
    for (std::size_t j = 0; j < cols; ++j) v[j] = Integer(x[j] * den);
    make_primitive(v);
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

std::size_t matrix_rank(const IntMatrix& m) { return bareiss(m).pivots.size(); }

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  BareissEchelon e = bareiss(m);
  if (e.pivots.size() < m.rows()) return 0;
  Integer d = e.a(m.rows() - 1, m.cols() - 1);
  return (e.swaps % 2) ? Integer(-d) : d;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  EchelonBuilder b(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) b.insert(m.row(r));
  b.reduce_above(m.cols());
  IntMatrix h(b.rows().size(), m.cols());
  std::size_t i = 0;
  for (const auto& [col, row] : b.rows()) {
    for (std::size_t j = 0; j < m.cols(); ++j) h(i, j) = row[j];
    ++i;
  }
  return h;
}

HermiteTransform hermite_with_transform(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  EchelonBuilder b(cols + rows);
  for (std::size_t r = 0; r < rows; ++r) {
    IntVector v(cols + rows, Integer(0));
    for (std::size_t j = 0; j < cols; ++j) v[j] = m(r, j);
    v[cols + r] = 1;
    b.insert(std::move(v));
  }
  b.reduce_above(cols);
  HermiteTransform out{IntMatrix(rows, cols), IntMatrix(rows, rows), 0};
  std::size_t i = 0;
  for (const auto& [col, row] : b.rows()) {
    if (col < cols) ++out.rank;
    for (std::size_t j = 0; j < cols; ++j) out.h(i, j) = row[j];
    for (std::size_t j = 0; j < rows; ++j) out.u(i, j) = row[cols + j];
    ++i;
  }
  return out;
}

std::optional<IntVector> solve_integer(const IntMatrix& a, std::span<const Integer> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_integer: size mismatch");
  const std::size_t n = a.cols(), m = a.rows();
  HermiteTransform ht = hermite_with_transform(a.transpose());
  IntVector resid(b.begin(), b.end());
  IntVector y(n, Integer(0));
  for (std::size_t i = 0; i < ht.rank; ++i) {
    std::size_t p = 0;
    while (ht.h(i, p) == 0) ++p;
    if (resid[p] % ht.h(i, p) != 0) return std::nullopt;
    y[i] = resid[p] / ht.h(i, p);
    for (std::size_t j = 0; j < m; ++j) resid[j] -= y[i] * ht.h(i, j);
  }
  for (const auto& r : resid)
    if (r != 0) return std::nullopt;
  IntVector x(n, Integer(0));
  for (std::size_t i = 0; i < ht.rank; ++i)
    for (std::size_t j = 0; j < n; ++j) x[j] += ht.u(i, j) * y[i];
  return x;
}

}  // namespace bordx
