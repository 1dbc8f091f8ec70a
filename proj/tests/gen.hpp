// Random instance generators for the symbolic model.
#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mendo/symgroup.hpp"

namespace gen {

using mendo::Characteristic;
using mendo::FreePart;
using mendo::Int;
using mendo::Rat;
using mendo::SymElement;

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Denominator in [1, max_den] prime to p (when p != 0).
inline long denominator(std::mt19937_64& rng, long max_den, Characteristic p) {
  while (true) {
    long d = uniform(rng, 1, max_den);
    if (p == 0 || d % static_cast<long>(p) != 0) return d;
  }
}

inline Rat rational(std::mt19937_64& rng, long max_num, long max_den) {
  Rat r(uniform(rng, -max_num, max_num), uniform(rng, 1, max_den));
  r.canonicalize();
  return r;
}

inline Rat torsion(std::mt19937_64& rng, long max_den, Characteristic p) {
  long d = denominator(rng, max_den, p);
  Rat r(uniform(rng, 0, d - 1), d);
  r.canonicalize();
  return r;
}

inline std::string sym(const char* stem, std::size_t i) { return stem + std::to_string(i + 1); }

// A symbolic instance: C spanned by u-symbols, a with free parts supported on
// x-symbols (plus u noise), b in the divisible hull of <C a>.
struct Instance {
  Characteristic p = 0;
  mendo::DivSubgroup c;
  std::vector<SymElement> a;
  std::vector<SymElement> b;
  std::vector<Int> order_bound;  // per b_i, see with_hull_element
  // x-coefficient matrix of a, row j = a_j
  std::vector<std::vector<Rat>> ax;
  std::size_t cdim = 0;
};

inline Rat det_q(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      Rat f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return det;
}

// order_bound receives the lcm of the denominators of the a-coordinates used,
// a multiple of the order of the result over <C a>.
inline SymElement with_hull_element(std::mt19937_64& rng, const Instance& in, long max_den,
                                    Int* order_bound = nullptr) {
  FreePart f;
  Int bound = 1;
  for (std::size_t j = 0; j < in.a.size(); ++j) {
    Rat q = rational(rng, 2 * max_den, max_den);
    mpz_lcm(bound.get_mpz_t(), bound.get_mpz_t(), q.get_den_mpz_t());
    f = mendo::free_axpy(f, q, in.a[j].free());
  }
  if (order_bound) *order_bound = bound;
  for (std::size_t i = 0; i < in.cdim; ++i)
    if (uniform(rng, 0, 1)) f = mendo::free_axpy(f, rational(rng, 4, max_den), {{sym("u", i), Rat(1)}});
  return SymElement(torsion(rng, max_den, in.p), f, in.p);
}

inline Instance instance(std::mt19937_64& rng, std::size_t r, std::size_t t, long max_den,
                         Characteristic p = 0) {
  Instance in;
  in.p = p;
  in.cdim = static_cast<std::size_t>(uniform(rng, 0, 2));
  std::vector<FreePart> cgens;
  for (std::size_t i = 0; i < in.cdim; ++i) cgens.push_back({{sym("u", i), Rat(1)}});
  in.c = mendo::DivSubgroup::span(p, cgens);
  do {
    in.ax.assign(r, std::vector<Rat>(r));
    for (auto& row : in.ax)
      for (auto& x : row) x = uniform(rng, 0, 2) ? rational(rng, 3, max_den) : Rat(0);
  } while (r > 0 && det_q(in.ax) == 0);
  for (std::size_t j = 0; j < r; ++j) {
    FreePart f;
    for (std::size_t i = 0; i < r; ++i)
      if (in.ax[j][i] != 0) f[sym("x", i)] = in.ax[j][i];
    for (std::size_t i = 0; i < in.cdim; ++i)
      if (uniform(rng, 0, 2) == 0) f[sym("u", i)] = rational(rng, 3, max_den);
    for (auto it = f.begin(); it != f.end();) it = (it->second == 0) ? f.erase(it) : std::next(it);
    in.a.emplace_back(torsion(rng, max_den, p), f, p);
  }
  for (std::size_t i = 0; i < t; ++i) {
    Int bound;
    in.b.push_back(with_hull_element(rng, in, max_den, &bound));
    in.order_bound.push_back(bound);
  }
  return in;
}

}  // namespace gen

namespace gen {

// Integer z with y = c * prod a_j^{z_j} for some c in C, by Cramer's rule on
// the x-coordinates; nullopt when y is outside <C a>.
inline std::optional<std::vector<Int>> member_generated(const Instance& in, const SymElement& y) {
  const std::size_t r = in.a.size();
  std::vector<Rat> yx(r);
  for (const auto& [name, coeff] : y.free()) {
    if (name[0] != 'x') continue;
    yx[std::stoul(name.substr(1)) - 1] = coeff;
  }
  const Rat d = det_q(in.ax);
  std::vector<Int> z(r);
  for (std::size_t j = 0; j < r; ++j) {
    auto m = in.ax;
    m[j] = yx;
    Rat zj = det_q(m) / d;
    if (zj.get_den() != 1) return std::nullopt;
    z[j] = zj.get_num();
  }
  return z;
}

}  // namespace gen

#include "mendo/homext.hpp"

namespace gen {

inline SymElement element(std::mt19937_64& rng, const std::vector<std::string>& symbols, long max_den,
                          Characteristic p) {
  FreePart f;
  for (const auto& s : symbols)
    if (uniform(rng, 0, 2) != 0) f[s] = rational(rng, 4, max_den);
  return SymElement(torsion(rng, max_den, p), f, p);
}

// Random hom on c with images over the w-symbols.
inline mendo::GroupHom hom_on(std::mt19937_64& rng, const mendo::DivSubgroup& c, long max_den) {
  const Characteristic p = c.characteristic();
  std::vector<SymElement> images;
  for (std::size_t i = 0; i < c.dimension(); ++i) images.push_back(element(rng, {"w1", "w2"}, max_den, p));
  return mendo::GroupHom::on_base(c, mendo::TorsionAction::exponent(uniform(rng, -3, 5)), images);
}

}  // namespace gen
