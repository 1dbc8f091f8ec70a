#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace mendo {

using Int = mpz_class;
using Rat = mpq_class;

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
Int gcd_of(const IntVector& v);
/* floor(a / b) for b != 0 */
Int floor_div(const Int& a, const Int& b);
/* a mod m in [0, |m|) */
Int mod_floor(const Int& a, const Int& m);
Rat make_rat(const Int& num, const Int& den);

/* Dense integer matrix, row-major. */
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  std::vector<IntVector> row_list() const;
  IntMatrix transpose() const;
  bool is_zero_row(std::size_t i) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /* row[dst] += factor * row[src] */
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t i);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntVector& x, const IntMatrix& a);  // row vector times matrix

struct HnfResult {
  IntMatrix h;  // row Hermite normal form of a
  IntMatrix u;  // unimodular, u * a == h
};

struct SnfResult {
  IntMatrix d;  // diagonal, d_1 | d_2 | ..., d_i >= 0
  IntMatrix u;
  IntMatrix v;  // u * a * v == d
};

/* Row-style HNF: nonzero rows first, positive pivots, entries above each pivot
 * reduced into [0, pivot). */
HnfResult hnf(const IntMatrix& a);
SnfResult snf(const IntMatrix& a);
std::vector<Int> invariant_factors(const IntMatrix& a);

/* x with x * a == b, or nullopt when b is outside the row lattice of a.
 * Throws DimensionMismatch when b.size() != a.cols(). */
std::optional<IntVector> solve_integral(const IntMatrix& a, const IntVector& b);

/* Basis (rows) of {x : x * a == 0}. */
std::vector<IntVector> left_kernel(const IntMatrix& a);

Int determinant(const IntMatrix& a);

/* Sublattice of Z^n kept with an HNF basis of linearly independent rows. */
class Lattice {
 public:
  explicit Lattice(std::size_t ambient_rank = 0);
  static Lattice from_generators(std::size_t ambient_rank, const std::vector<IntVector>& gens);
  static Lattice full(std::size_t ambient_rank);

  std::size_t ambient_rank() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return basis_.rows(); }
  const IntMatrix& basis() const noexcept { return basis_; }

  bool contains(const IntVector& v) const;
  bool contains(const Lattice& other) const;
  /* Index in Z^n; zero when the lattice is not of full rank. */
  Int index() const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  IntMatrix basis_;
};

/* {v : n v in l for some n >= 1} */
Lattice saturate(const Lattice& l);

/* Reduced row echelon form over Q; zero rows dropped. */
struct RatEchelon {
  std::vector<RatVector> rows;
  std::vector<std::size_t> pivots;
};
RatEchelon rref(const std::vector<RatVector>& rows, std::size_t cols);
std::size_t rational_rank(const std::vector<RatVector>& rows, std::size_t cols);

/* Some c with sum_i c_i rows[i] == target (free coordinates set to zero). */
std::optional<RatVector> rational_combination(const std::vector<RatVector>& rows,
                                              const RatVector& target);

/* Clears denominators of a list of rational vectors with one common multiplier. */
std::vector<IntVector> clear_denominators(const std::vector<RatVector>& rows, Int* scale = nullptr);

}  // namespace mendo
