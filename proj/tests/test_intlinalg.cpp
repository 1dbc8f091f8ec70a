#include <doctest.h>

#include <random>

#include "mendo/error.hpp"
#include "mendo/intlinalg.hpp"
#include "oracles.hpp"

using namespace mendo;

namespace {

IntMatrix m(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> rs;
  std::size_t cols = 0;
  for (auto r : rows) {
    IntVector v;
    for (long x : r) v.emplace_back(x);
    cols = v.size();
    rs.push_back(v);
  }
  return IntMatrix::from_rows(rs, cols);
}

bool is_row_hnf(const IntMatrix& h) {
  std::size_t last_pivot = 0;
  bool seen_zero = false;
  bool first = true;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (h.is_zero_row(i)) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) return false;
    std::size_t p = 0;
    while (h(i, p) == 0) ++p;
    if (!first && p <= last_pivot) return false;
    if (h(i, p) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (h(k, p) < 0 || h(k, p) >= h(i, p)) return false;
    last_pivot = p;
    first = false;
  }
  return true;
}

}  // namespace

TEST_CASE("hnf examples") {
  auto a = m({{2, 4}, {6, 8}});
  auto r = hnf(a);
  CHECK(r.h == m({{2, 0}, {0, 4}}));
  CHECK(r.u * a == r.h);
  CHECK(abs(determinant(r.u)) == 1);

  auto id = IntMatrix::identity(3);
  auto ri = hnf(id);
  CHECK(ri.h == id);
  CHECK(ri.u == id);

  IntMatrix z(2, 3);
  CHECK(hnf(z).h == z);
}

TEST_CASE("hnf properties on random matrices") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 300; ++it) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    auto a = oracle::random_matrix(rng, rows, cols, 9);
    auto r = hnf(a);
    CHECK(r.u * a == r.h);
    CHECK(abs(determinant(r.u)) == 1);
    CHECK(is_row_hnf(r.h));
    CHECK(hnf(r.h).h == r.h);
  }
}

TEST_CASE("snf examples") {
  auto a = m({{2, 4}, {6, 8}});
  auto r = snf(a);
  CHECK(r.d == m({{2, 0}, {0, 4}}));
  CHECK(r.u * a * r.v == r.d);
  CHECK(snf(m({{6, 0}, {0, 10}})).d == m({{2, 0}, {0, 30}}));
  CHECK(snf(m({{0}})).d == m({{0}}));
}

TEST_CASE("snf agrees with minor gcds") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 200; ++it) {
    std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    auto a = oracle::random_matrix(rng, rows, cols, 10);
    auto r = snf(a);
    CHECK(r.u * a * r.v == r.d);
    CHECK(abs(determinant(r.u)) == 1);
    CHECK(abs(determinant(r.v)) == 1);
    CHECK(invariant_factors(a) == oracle::invariant_factors_by_minors(a));
  }
}

TEST_CASE("solve_integral") {
  auto s = solve_integral(m({{2, 0}, {0, 3}}), {Int(4), Int(9)});
  REQUIRE(s);
  CHECK(*s == IntVector{Int(2), Int(3)});
  CHECK_FALSE(solve_integral(m({{2}}), {Int(3)}));
  auto s2 = solve_integral(m({{1, 3}, {0, 4}}), {Int(1), Int(7)});
  REQUIRE(s2);
  CHECK(*s2 == IntVector{Int(1), Int(1)});
  CHECK_THROWS_AS(solve_integral(m({{1, 2}}), {Int(1)}), Error);
}

TEST_CASE("solve_integral agrees with bounded enumeration") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 150; ++it) {
    std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
    auto a = oracle::random_matrix(rng, rows, cols, 4);
    IntVector b(cols);
    if (it % 2 == 0) {
      std::uniform_int_distribution<long> c(-5, 5);
      for (std::size_t i = 0; i < rows; ++i) {
        long ci = c(rng);
        for (std::size_t j = 0; j < cols; ++j) b[j] += a(i, j) * ci;
      }
    } else {
      std::uniform_int_distribution<long> c(-12, 12);
      for (auto& x : b) x = c(rng);
    }
    auto x = solve_integral(a, b);
    bool brute = oracle::in_row_lattice_bounded(a, b, 20);
    if (x) CHECK(*x * a == b);
    if (brute) CHECK(x.has_value());
    if (!x) CHECK_FALSE(brute);
  }
}

TEST_CASE("left kernel") {
  auto a = m({{1, 2}, {2, 4}, {3, 6}});
  auto k = left_kernel(a);
  CHECK(k.size() == 2);
  for (const auto& v : k) CHECK(v * a == IntVector(2));
}

TEST_CASE("saturation") {
  auto l = Lattice::from_generators(2, {{Int(2), Int(0)}, {Int(0), Int(3)}});
  CHECK(saturate(l) == Lattice::full(2));
  CHECK(saturate(Lattice::full(3)) == Lattice::full(3));
  auto one = Lattice::from_generators(2, {{Int(2), Int(4)}});
  CHECK(saturate(one) == Lattice::from_generators(2, {{Int(1), Int(2)}}));
  CHECK(l.index() == 6);
}

TEST_CASE("saturation is a closure operator") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 100; ++it) {
    std::size_t n = 1 + rng() % 4, g = 1 + rng() % 4;
    auto a = oracle::random_matrix(rng, g, n, 6);
    auto l = Lattice::from_generators(n, a.row_list());
    auto s = saturate(l);
    CHECK(s.contains(l));
    CHECK(saturate(s) == s);
    CHECK(s.rank() == l.rank());
    // monotone: adding a generator can only enlarge the saturation
    auto extra = oracle::random_matrix(rng, 1, n, 6).row(0);
    auto gens = a.row_list();
    gens.push_back(extra);
    CHECK(saturate(Lattice::from_generators(n, gens)).contains(s));
  }
}

TEST_CASE("rational helpers") {
  std::vector<RatVector> rows{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  CHECK(rational_rank(rows, 2) == 1);
  auto c = rational_combination(rows, {Rat(1, 2), Rat(1)});
  REQUIRE(c);
  CHECK((*c)[0] + 2 * (*c)[1] == Rat(1, 2));
  CHECK_FALSE(rational_combination(rows, {Rat(1), Rat(0)}));
}
