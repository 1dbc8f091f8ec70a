#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gen.hpp"
#include "mendo/error.hpp"
#include "mendo/msystems.hpp"

using namespace mendo;

namespace {

SymElement el(Rat t, FreePart f = {}, Characteristic p = 0) { return SymElement(t, f, p); }

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Instance whose exponent set stays small enough for exhaustive use.
gen::Instance small_instance(std::mt19937_64& rng, std::size_t r, std::size_t t, Characteristic p = 0) {
  while (true) {
    auto in = gen::instance(rng, r, t, 12, p);
    Int size = 1;
    for (const auto& n : in.order_bound) size *= n + 1;
    if (size <= 3000) return in;
  }
}

}  // namespace

TEST_CASE("exponent set") {
  auto s = exponent_set(iv({2, 1}));
  std::vector<IntVector> want{iv({0, 1}), iv({1, 0}), iv({1, 1}), iv({2, 1})};
  CHECK(s == want);
  CHECK(exponent_set({}).empty());
  CHECK_THROWS_AS(exponent_set(iv({1000, 1000})), Error);
}

TEST_CASE("compute_system examples") {
  DivSubgroup triv;
  auto x = SymElement::symbol("x");
  auto tau = compute_system(triv, {x}, {el(Rat(1, 3), {{"x", Rat(1, 2)}})});
  CHECK(tau.orders == iv({2}));
  REQUIRE(tau.equations.size() == 1);
  const auto& e = tau.at(iv({1}));
  CHECK(e.N == 2);
  CHECK(e.l == iv({1}));
  CHECK(e.c == el(Rat(2, 3)));

  auto tau2 = compute_system(triv, {x}, {el(Rat(0), {{"x", Rat(1, 2)}}), el(Rat(0), {{"x", Rat(1, 3)}})});
  CHECK(tau2.orders == iv({2, 3}));
  const auto& e11 = tau2.at(iv({1, 1}));
  CHECK(e11.N == 6);
  CHECK(e11.l == iv({5}));
  CHECK(e11.c.is_identity());

  auto triv_sys = compute_system(triv, {x}, {el(Rat(0), {{"x", Rat(2)}})});
  CHECK(triv_sys.is_trivial());
  CHECK(triv_sys.at(iv({1})).l == iv({2}));
  CHECK(triv_sys.at(iv({1})).N == 1);
}

TEST_CASE("verify_system") {
  DivSubgroup triv;
  std::vector<SymElement> a{SymElement::symbol("x")};
  std::vector<SymElement> b{el(Rat(0), {{"x", Rat(1, 2)}}), el(Rat(0), {{"x", Rat(1, 3)}})};
  auto tau = compute_system(triv, a, b);
  CHECK(verify_system(tau, triv, a, b));

  auto bad = tau;
  bad.equations.at(iv({1, 1})).c = mul(bad.equations.at(iv({1, 1})).c, el(Rat(1, 3)));
  CHECK_FALSE(verify_system(bad, triv, a, b));

  auto missing = tau;
  missing.equations.erase(iv({1, 1}));
  try {
    verify_system(missing, triv, a, b);
    FAIL("expected MalformedSystem");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedSystem);
  }

  auto nongcd = tau;
  nongcd.equations.at(iv({1, 1})).N = 12;
  nongcd.equations.at(iv({1, 1})).l = iv({10});
  CHECK_THROWS_AS(verify_system(nongcd, triv, a, b), Error);

  auto outside = tau;
  outside.equations.at(iv({1, 1})).c = SymElement::symbol("w");
  CHECK_FALSE(verify_system(outside, triv, a, b));
}

TEST_CASE("transport") {
  DivSubgroup triv;
  auto tau = compute_system(triv, {SymElement::symbol("x")}, {el(Rat(1, 3), {{"x", Rat(1, 2)}})});
  auto scale = [](long s) {
    return [s](const SymElement& v) { return pow(v, Int(s)); };
  };
  CHECK(transport(tau, scale(2)).at(iv({1})).c == el(Rat(1, 3)));
  CHECK(transport(tau, scale(3)).at(iv({1})).c.is_identity());
  CHECK(transport(tau, [](const SymElement& v) { return v; }) == tau);
}

TEST_CASE("minimal presentation examples") {
  DivSubgroup triv;
  std::vector<SymElement> a{SymElement::symbol("x")};
  std::vector<SymElement> b1{el(Rat(1, 3), {{"x", Rat(1, 2)}})};
  auto p1 = minimal_presentation(compute_system(triv, a, b1), triv, a, b1);
  REQUIRE(p1.size() == 1);
  CHECK(p1[0].n == 2);
  CHECK(p1[0].l == iv({1}));
  CHECK(p1[0].c == el(Rat(2, 3)));

  std::vector<SymElement> b2{el(Rat(0), {{"x", Rat(1, 2)}}), el(Rat(0), {{"x", Rat(1, 3)}})};
  auto p2 = minimal_presentation(compute_system(triv, a, b2), triv, a, b2);
  REQUIRE(p2.size() == 2);
  CHECK(p2[0].n == 2);
  CHECK(p2[0].l == iv({1}));
  CHECK(p2[1].n == 3);
  CHECK(p2[1].l == iv({1}));
  CHECK(p2[1].m == iv({0}));

  CompleteSystem empty;
  empty.r = 1;
  CHECK(minimal_presentation(empty, triv, a, {}).empty());
}

TEST_CASE("computed systems verify and are canonical") {
  std::mt19937_64 rng(101);
  for (int it = 0; it < 120; ++it) {
    Characteristic p = (it % 5 == 0) ? 5 : 0;
    auto in = small_instance(rng, gen::uniform(rng, 0, 3), gen::uniform(rng, 0, 3), p);
    auto tau = compute_system(in.c, in.a, in.b);
    CHECK(verify_system(tau, in.c, in.a, in.b));
    for (std::size_t i = 0; i < in.b.size(); ++i) CHECK(tau.orders[i] == order_over(in.c, in.a, in.b[i]).n);
    for (const auto& [k, eq] : tau.equations) {
      Int g = eq.N;
      for (const auto& x : eq.l) g = gcd(g, x);
      CHECK(g == 1);
    }
    auto pres = minimal_presentation(tau, in.c, in.a, in.b);
    for (std::size_t i = 0; i < pres.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        CHECK(pres[i].m[j] >= 0);
        CHECK(pres[i].m[j] < pres[j].n);
      }
    auto regenerated = realise_presentation(pres, in.a, p);
    CHECK(verify_system(tau, in.c, in.a, regenerated));
    CHECK(compute_system(in.c, in.a, regenerated) == tau);
  }
}

TEST_CASE("uniqueness under permutation of b") {
  std::mt19937_64 rng(55);
  for (int it = 0; it < 60; ++it) {
    auto in = small_instance(rng, gen::uniform(rng, 1, 3), gen::uniform(rng, 2, 3));
    auto tau = compute_system(in.c, in.a, in.b);
    std::vector<std::size_t> perm(in.b.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<SymElement> pb;
    for (auto i : perm) pb.push_back(in.b[i]);
    auto ptau = compute_system(in.c, in.a, pb);
    CHECK(ptau.equations.size() == tau.equations.size());
    for (const auto& [k, eq] : tau.equations) {
      IntVector pk;
      for (auto i : perm) pk.push_back(k[i]);
      const auto& peq = ptau.at(pk);
      CHECK(peq.N == eq.N);
      CHECK(peq.l == eq.l);
      CHECK(peq.c == eq.c);
    }
  }
}

TEST_CASE("compute_NM") {
  auto a = compute_NM(iv({2, 3}), iv({1, 1}));
  CHECK(a.N == 6);
  CHECK(a.M == iv({3, 2}));
  auto b = compute_NM(iv({2, 3}), iv({3, 2}));
  CHECK(b.N == 6);
  CHECK(b.M == iv({9, 4}));
  auto c = compute_NM(iv({1}), iv({5}));
  CHECK(c.N == 1);
  CHECK(c.M == iv({5}));
  CHECK_THROWS_AS(compute_NM({}, {}), Error);

  std::mt19937_64 rng(8);
  for (int it = 0; it < 300; ++it) {
    std::size_t n = gen::uniform(rng, 1, 4);
    IntVector k(n), l(n);
    long prod = 1;
    for (std::size_t i = 0; i < n; ++i) {
      k[i] = gen::uniform(rng, 1, 8);
      l[i] = gen::uniform(rng, -8, 8);
      prod *= k[i].get_si();
    }
    long brute = 0;
    for (long x = 1; x <= prod && brute == 0; ++x) {
      bool ok = true;
      for (std::size_t i = 0; i < n; ++i) ok = ok && (x * l[i].get_si()) % k[i].get_si() == 0;
      if (ok) brute = x;
    }
    auto res = compute_NM(k, l);
    CHECK(res.N == brute);
    for (std::size_t i = 0; i < n; ++i) CHECK(res.N * l[i] == k[i] * res.M[i]);
  }
}

TEST_CASE("assemble_alpha_system examples") {
  auto d = SymElement::symbol("d");
  auto s1 = assemble_alpha_system({IntPoly(iv({2, 3}))}, {d});
  CHECK(s1.system.orders == iv({3}));
  CHECK(s1.system.r == 1);
  const auto& e = s1.system.at(iv({1}));
  CHECK(e.N == 3);
  CHECK(e.l == iv({-2}));
  CHECK(e.c == d);

  auto s2 = assemble_alpha_system({IntPoly(iv({2, 2}))}, {d});
  CHECK(s2.polys[0] == IntPoly(iv({1, 1})));
  CHECK(s2.deltas[0] == SymElement::symbol("d", Rat(1, 2)));
  CHECK(s2.system.is_trivial());
  CHECK(s2.system.at(iv({1})).l == iv({-1}));

  auto s3 = assemble_alpha_system({IntPoly(iv({1, 2})), IntPoly(iv({1, 3}))},
                                  {SymElement::symbol("d"), SymElement::symbol("e")});
  const auto& x = s3.system.at(iv({1, 1}));
  CHECK(x.N == 6);
  CHECK(x.l == iv({-3, -2}));
  CHECK(x.c == el(Rat(0), {{"d", Rat(3)}, {"e", Rat(2)}}));

  CHECK_THROWS_AS(assemble_alpha_system({IntPoly(iv({5}))}, {d}), Error);
  try {
    assemble_alpha_system({IntPoly(iv({2, 2}))}, {el(Rat(0), {{"d", Rat(1)}}, 2)});
    FAIL("expected RootObstruction");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::RootObstruction);
  }
}

TEST_CASE("alpha systems are the systems of their symbolic realisations") {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 80; ++it) {
    std::size_t n = gen::uniform(rng, 1, 2);
    std::vector<IntPoly> polys;
    std::vector<SymElement> deltas;
    std::vector<FreePart> dfree;
    Int size = 1;
    for (std::size_t i = 0; i < n; ++i) {
      IntVector co(gen::uniform(rng, 2, 3));
      for (auto& c : co) c = gen::uniform(rng, -4, 4);
      if (co.back() == 0) co.back() = 1;
      polys.emplace_back(co);
      size *= abs(co.back()) + 1;
      FreePart f{{"d" + std::to_string(i), Rat(1)}};
      deltas.emplace_back(gen::torsion(rng, 12, 0), f);
      dfree.push_back(f);
    }
    auto alpha = assemble_alpha_system(polys, deltas);
    // x = z_{i,j} independent symbols, y_i solved from its (alpha) equation
    std::vector<SymElement> x, y;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& P = alpha.polys[i];
      SymElement rhs = alpha.deltas[i];
      for (long j = 0; j < P.degree(); ++j) {
        auto zij = SymElement::symbol("z" + std::to_string(i) + "_" + std::to_string(j));
        x.push_back(zij);
        rhs = mul(rhs, pow(zij, -P.coeff(j)));
      }
      y.push_back(branch_root(rhs, P.leading()));
    }
    auto c = DivSubgroup::span(0, dfree);
    CHECK(verify_system(alpha.system, c, x, y));
    CHECK(compute_system(c, x, y) == alpha.system);
  }
}
