#pragma once

#include <string>

#include "mendo/intlinalg.hpp"

namespace mendo {

/* Integer polynomial in X; coeffs[j] is the coefficient of X^j, no trailing zeros. */
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(IntVector coeffs);
  static IntPoly monomial(const Int& c, std::size_t degree);

  /* "3X^2 - X + 1", "X^4-1", "0".  Throws SyntaxError. */
  static IntPoly parse(const std::string& src);

  const IntVector& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /* -1 for the zero polynomial */
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Int coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Int(0); }
  Int leading() const { return coeffs_.empty() ? Int(0) : coeffs_.back(); }
  /* gcd of the coefficients, positive; 0 for the zero polynomial */
  Int content() const;

  Int eval(const Int& x) const;
  /* value in [0, m) */
  Int eval_mod(const Int& x, const Int& m) const;

  std::string str() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a);

 private:
  void trim();
  IntVector coeffs_;
};

}  // namespace mendo
