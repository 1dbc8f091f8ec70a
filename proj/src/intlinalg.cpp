#include "mendo/intlinalg.hpp"

#include <algorithm>
#include <utility>

#include "mendo/error.hpp"

namespace mendo {

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int gcd_of(const IntVector& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw Error(ErrorKind::DimensionMismatch, "row length differs from column count");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero_row(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j)
    if (sgn((*this)(i, j)) != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVector operator*(const IntVector& x, const IntMatrix& a) {
  if (x.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "vector-matrix product");
  IntVector y(a.cols(), Int(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) y[j] += x[i] * a(i, j);
  }
  return y;
}

// ---------------------------------------------------------------------------

namespace {

/* Replace rows (i, k) of m and u by the unimodular combination that puts
 * gcd(m(i,col), m(k,col)) at (i,col) and zero at (k,col). */
void gcd_combine_rows(IntMatrix& m, IntMatrix& u, std::size_t i, std::size_t k, std::size_t col) {
  const Int a = m(i, col);
  const Int b = m(k, col);
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  const Int bg = b / g;
  const Int ag = a / g;
  auto combine = [&](IntMatrix& x) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      Int xi = x(i, j);
      Int xk = x(k, j);
      x(i, j) = s * xi + t * xk;
      x(k, j) = ag * xk - bg * xi;
    }
  };
  combine(m);
  combine(u);
}

}  // namespace

HnfResult hnf(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  std::size_t row = 0;
  for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
    for (std::size_t k = row + 1; k < h.rows(); ++k)
      if (sgn(h(k, col)) != 0) gcd_combine_rows(h, u, row, k, col);
    if (sgn(h(row, col)) == 0) continue;
    if (sgn(h(row, col)) < 0) {
      h.negate_row(row);
      u.negate_row(row);
    }
    const Int pivot = h(row, col);
    for (std::size_t i = 0; i < row; ++i) {
      Int q = floor_div(h(i, col), pivot);
      if (sgn(q) != 0) {
        h.add_row_multiple(i, row, -q);
        u.add_row_multiple(i, row, -q);
      }
    }
    ++row;
  }
  return {std::move(h), std::move(u)};
}

SnfResult snf(const IntMatrix& a) {
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t m = d.rows();
  const std::size_t n = d.cols();

  auto col_swap = [&](std::size_t x, std::size_t y) {
    d.swap_cols(x, y);
    v.swap_cols(x, y);
  };
  auto row_swap = [&](std::size_t x, std::size_t y) {
    d.swap_rows(x, y);
    u.swap_rows(x, y);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      bool found = false;
      std::size_t pi = t, pj = t;
      Int best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (sgn(d(i, j)) == 0) continue;
          Int av = abs(d(i, j));
          if (!found || av < best) {
            best = av;
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) return {std::move(d), std::move(u), std::move(v)};
      row_swap(t, pi);
      col_swap(t, pj);

      bool clean = true;
      const Int pivot = d(t, t);
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        Int q = d(i, t) / pivot;  // truncation keeps |remainder| < |pivot|
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (sgn(d(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        Int q = d(t, j) / pivot;
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (sgn(d(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility d_t | d_{t+1}: fold an offending row into row t
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(d(i, j) % pivot) != 0) {
            d.add_row_multiple(t, i, Int(1));
            u.add_row_multiple(t, i, Int(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (sgn(d(t, t)) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

std::vector<Int> invariant_factors(const IntMatrix& a) {
  const auto r = snf(a);
  std::vector<Int> out;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) out.push_back(r.d(i, i));
  return out;
}

std::optional<IntVector> solve_integral(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.cols())
    throw Error(ErrorKind::DimensionMismatch, "target length " + std::to_string(b.size()) +
                                                  " vs " + std::to_string(a.cols()) + " columns");
  const auto [h, u] = hnf(a);
  IntVector residual = b;
  IntVector y(a.rows(), Int(0));
  std::size_t col = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    while (col < h.cols() && sgn(h(i, col)) == 0) ++col;
    if (col == h.cols()) break;
    if (!mpz_divisible_p(residual[col].get_mpz_t(), h(i, col).get_mpz_t())) return std::nullopt;
    y[i] = residual[col] / h(i, col);
    for (std::size_t j = col; j < h.cols(); ++j) residual[j] -= y[i] * h(i, j);
  }
  for (const auto& r : residual)
    if (sgn(r) != 0) return std::nullopt;
  return y * u;
}

std::vector<IntVector> left_kernel(const IntMatrix& a) {
  const auto [h, u] = hnf(a);
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < h.rows(); ++i)
    if (h.is_zero_row(i)) out.push_back(u.row(i));
  return out;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  IntMatrix m = a;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t s = k + 1;
      while (s < n && sgn(m(s, k)) == 0) ++s;
      if (s == n) return 0;
      m.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// ---------------------------------------------------------------------------

Lattice::Lattice(std::size_t ambient_rank) : ambient_(ambient_rank), basis_(0, ambient_rank) {}

Lattice Lattice::from_generators(std::size_t ambient_rank, const std::vector<IntVector>& gens) {
  Lattice l(ambient_rank);
  if (gens.empty()) return l;
  const auto h = hnf(IntMatrix::from_rows(gens, ambient_rank)).h;
  std::size_t nonzero = 0;
  while (nonzero < h.rows() && !h.is_zero_row(nonzero)) ++nonzero;
  IntMatrix b(nonzero, ambient_rank);
  for (std::size_t i = 0; i < nonzero; ++i)
    for (std::size_t j = 0; j < ambient_rank; ++j) b(i, j) = h(i, j);
  l.basis_ = std::move(b);
  return l;
}

Lattice Lattice::full(std::size_t ambient_rank) {
  Lattice l(ambient_rank);
  l.basis_ = IntMatrix::identity(ambient_rank);
  return l;
}

bool Lattice::contains(const IntVector& v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "lattice membership");
  return solve_integral(basis_, v).has_value();
}

bool Lattice::contains(const Lattice& other) const {
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Int Lattice::index() const {
  if (rank() < ambient_) return 0;
  Int idx = 1;
  for (std::size_t i = 0; i < ambient_; ++i) idx *= basis_(i, i);
  return idx;
}

Lattice saturate(const Lattice& l) {
  const std::size_t n = l.ambient_rank();
  // Z^n cut out by the integer kernel of the basis is the saturation.
  const auto kernel = left_kernel(l.basis().transpose());
  IntMatrix k(kernel.size(), n);
  for (std::size_t i = 0; i < kernel.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) k(i, j) = kernel[i][j];
  return Lattice::from_generators(n, left_kernel(k.transpose()));
}

// ---------------------------------------------------------------------------

RatEchelon rref(const std::vector<RatVector>& rows, std::size_t cols) {
  std::vector<RatVector> m = rows;
  for (const auto& r : m)
    if (r.size() != cols) throw Error(ErrorKind::DimensionMismatch, "rref row length");
  RatEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && sgn(m[sel][col]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rat inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || sgn(m[i][col]) == 0) continue;
      const Rat f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

std::size_t rational_rank(const std::vector<RatVector>& rows, std::size_t cols) {
  return rref(rows, cols).rows.size();
}

std::optional<RatVector> rational_combination(const std::vector<RatVector>& rows,
                                              const RatVector& target) {
  const std::size_t k = rows.size();
  const std::size_t dim = target.size();
  // augmented system: dim equations in k unknowns
  std::vector<RatVector> aug(dim, RatVector(k + 1));
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      if (rows[i].size() != dim) throw Error(ErrorKind::DimensionMismatch, "combination row length");
      aug[j][i] = rows[i][j];
    }
    aug[j][k] = target[j];
  }
  const auto e = rref(aug, k + 1);
  RatVector c(k);
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] == k) return std::nullopt;  // 0 = nonzero
    c[e.pivots[r]] = e.rows[r][k];
  }
  return c;
}

std::vector<IntVector> clear_denominators(const std::vector<RatVector>& rows, Int* scale) {
  Int l = 1;
  for (const auto& r : rows)
    for (const auto& x : r) l = lcm(l, x.get_den());
  std::vector<IntVector> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    IntVector v;
    v.reserve(r.size());
    for (const auto& x : r) v.push_back(x.get_num() * (l / x.get_den()));
    out.push_back(std::move(v));
  }
  if (scale) *scale = l;
  return out;
}

}  // namespace mendo
