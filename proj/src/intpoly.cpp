#include "mendo/intpoly.hpp"

#include <cctype>

#include "mendo/error.hpp"

namespace mendo {

IntPoly::IntPoly(IntVector coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const Int& c, std::size_t degree) {
  IntVector v(degree + 1);
  v[degree] = c;
  return IntPoly(v);
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int IntPoly::content() const {
  Int g = 0;
  for (const auto& c : coeffs_) g = gcd(g, c);
  return g;
}

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Int IntPoly::eval_mod(const Int& x, const Int& m) const {
  Int acc = 0;
  const Int xr = mod_floor(x, m);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = mod_floor(acc * xr + *it, m);
  return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntVector v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = a.coeff(j) + b.coeff(j);
  return IntPoly(v);
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntVector v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(v);
}

IntPoly operator-(const IntPoly& a) {
  IntVector v = a.coeffs_;
  for (auto& c : v) c = -c;
  return IntPoly(v);
}

std::string IntPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t jj = coeffs_.size(); jj-- > 0;) {
    const Int& c = coeffs_[jj];
    if (c == 0) continue;
    Int a = abs(c);
    if (out.empty())
      out += (c < 0) ? "-" : "";
    else
      out += (c < 0) ? " - " : " + ";
    if (jj == 0 || a != 1) out += a.get_str();
    if (jj >= 1) out += "X";
    if (jj >= 2) out += "^" + std::to_string(jj);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& s) : s_(s) {}

  IntPoly run() {
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    IntPoly acc;
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = (s_[pos_] == '-') ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      acc = acc + term(sign);
      first = false;
    }
    return acc;
  }

 private:
  IntPoly term(int sign) {
    Int coeff = sign;
    bool have_number = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      coeff *= number();
      have_number = true;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip();
        if (pos_ == s_.size() || !is_x()) fail("expected X after '*'");
      }
    }
    if (pos_ < s_.size() && is_x()) {
      ++pos_;
      skip();
      std::size_t degree = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        skip();
        if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
          fail("expected exponent");
        Int e = number();
        if (e > 100000) fail("exponent too large");
        degree = e.get_ui();
      }
      return IntPoly::monomial(coeff, degree);
    }
    if (!have_number) fail("expected term");
    return IntPoly::monomial(coeff, 0);
  }

  bool is_x() const { return s_[pos_] == 'X' || s_[pos_] == 'x'; }

  Int number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Int(s_.substr(start, pos_ - start));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPoly IntPoly::parse(const std::string& src) { return PolyParser(src).run(); }

}  // namespace mendo
