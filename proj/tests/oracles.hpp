// Brute-force reference implementations shared by the unit and acceptance tests.
// Nothing here calls the normal-form code it is used to check.
#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "mendo/intlinalg.hpp"

namespace oracle {

using mendo::Int;
using mendo::IntMatrix;
using mendo::IntVector;

// Determinant by cofactor expansion along the first row.
inline Int cofactor_det(const std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Int>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(row);
    }
    Int term = m[0][j] * cofactor_det(minor);
    total += (j % 2 == 0) ? term : Int(-term);
  }
  return total;
}

inline void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                   const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (cur.size() == k) {
    f(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, f);
    cur.pop_back();
  }
}

// gcd of all k x k minors.
inline Int minor_gcd(const IntMatrix& a, std::size_t k) {
  Int g = 0;
  std::vector<std::size_t> rs, cs;
  choose(a.rows(), k, 0, rs, [&](const std::vector<std::size_t>& rows) {
    choose(a.cols(), k, 0, cs, [&](const std::vector<std::size_t>& cols) {
      std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = a(rows[i], cols[j]);
      Int d = cofactor_det(m);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    });
  });
  return g;
}

// Invariant factors d_k = g_k / g_{k-1}; zero once the minors vanish.
inline std::vector<Int> invariant_factors_by_minors(const IntMatrix& a) {
  const std::size_t r = std::min(a.rows(), a.cols());
  std::vector<Int> out;
  Int prev = 1;
  for (std::size_t k = 1; k <= r; ++k) {
    Int g = minor_gcd(a, k);
    if (g == 0) {
      out.push_back(0);
      prev = 0;
      continue;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Exists c with |c_i| <= bound and c * a == b.
inline bool in_row_lattice_bounded(const IntMatrix& a, const IntVector& b, long bound) {
  const std::size_t r = a.rows();
  std::vector<long> c(r, -bound);
  while (true) {
    bool ok = true;
    for (std::size_t j = 0; j < a.cols() && ok; ++j) {
      Int s = 0;
      for (std::size_t i = 0; i < r; ++i) s += a(i, j) * c[i];
      ok = (s == b[j]);
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < r && c[i] == bound) c[i++] = -bound;
    if (i == r) return false;
    ++c[i];
  }
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace oracle
