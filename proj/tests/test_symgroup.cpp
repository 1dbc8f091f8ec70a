#include <doctest.h>

#include <random>

#include "gen.hpp"
#include "mendo/error.hpp"
#include "mendo/symgroup.hpp"

using namespace mendo;

namespace {

SymElement el(Rat t, FreePart f = {}, Characteristic p = 0) { return SymElement(t, f, p); }

}  // namespace

TEST_CASE("arithmetic") {
  auto z3 = el(Rat(1, 3));
  auto x = SymElement::symbol("x");
  CHECK(z3 * x == el(Rat(1, 3), {{"x", Rat(1)}}));
  CHECK(inv(el(Rat(1, 3), {{"x", Rat(1)}})) == el(Rat(2, 3), {{"x", Rat(-1)}}));
  CHECK(pow(el(Rat(1, 3), {{"x", Rat(1)}}), Int(3)) == el(Rat(0), {{"x", Rat(3)}}));
  CHECK_THROWS_AS(mul(el(Rat(0), {}, 0), el(Rat(0), {}, 3)), Error);
  CHECK_THROWS_AS(el(Rat(1, 2), {}, 2), Error);
  CHECK(el(Rat(0), {{"x", Rat(0)}}).is_identity());
}

TEST_CASE("canonical roots") {
  auto r = canonical_nth_root(el(Rat(0), {{"u", Rat(1)}}), Int(2));
  CHECK(r.root == el(Rat(0), {{"u", Rat(1, 2)}}));
  auto r2 = canonical_nth_root(el(Rat(1, 3)), Int(2));
  CHECK(r2.root == el(Rat(1, 6)));
  CHECK(r2.count == 2);
  try {
    canonical_nth_root(el(Rat(0), {}, 2), Int(2));
    FAIL("expected obstruction");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RootObstruction);
  }
}

TEST_CASE("root then power is the identity") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 300; ++it) {
    Characteristic p = (it % 3 == 0) ? 5 : 0;
    FreePart f{{"x", gen::rational(rng, 5, 12)}, {"y", gen::rational(rng, 5, 12)}};
    auto x = el(gen::torsion(rng, 12, p), f, p);
    Int n = gen::denominator(rng, 12, p);
    CHECK(pow(canonical_nth_root(x, n).root, n) == x);
  }
}

TEST_CASE("scale_torsion is additive along the canonical branch") {
  std::mt19937_64 rng(17);
  for (Characteristic p : {0ul, 2ul, 3ul, 5ul}) {
    for (int it = 0; it < 200; ++it) {
      Rat t = gen::torsion(rng, 30, p);
      Rat q1 = gen::rational(rng, 20, 16), q2 = gen::rational(rng, 20, 16);
      Rat s = reduce_torsion(scale_torsion(q1, t, p) + scale_torsion(q2, t, p));
      CHECK(scale_torsion(q1 + q2, t, p) == s);
      CHECK(scale_torsion(Rat(1), t, p) == t);
      if (p != 0) CHECK(mpz_divisible_ui_p(scale_torsion(q1, t, p).get_den_mpz_t(), p) == 0);
      // integer multiples act as ordinary scaling
      Int k = gen::uniform(rng, -6, 6);
      CHECK(scale_torsion(Rat(k), t, p) == reduce_torsion(Rat(k) * t));
    }
  }
}

TEST_CASE("membership and independence") {
  auto c = DivSubgroup::span(0, {{{"u", Rat(1)}}});
  CHECK(is_member_div(c, el(Rat(1, 3), {{"u", Rat(5, 7)}})));
  CHECK_FALSE(is_member_div(c, el(Rat(0), {{"v", Rat(1)}})));
  CHECK(is_member_div(c, SymElement()));
  CHECK(is_member_div(DivSubgroup(), el(Rat(2, 5))));

  CHECK(is_independent(c, {SymElement::symbol("x")}));
  CHECK_FALSE(is_independent(c, {SymElement::symbol("u", Rat(1, 2))}));
  CHECK_FALSE(is_independent(c, {SymElement::symbol("x"), SymElement::symbol("x", Rat(2))}));
  CHECK(is_independent(c, {}));
}

TEST_CASE("membership is invariant under multiplication by C") {
  std::mt19937_64 rng(9);
  for (int it = 0; it < 200; ++it) {
    Rat v = Rat(gen::uniform(rng, 1, 3), gen::uniform(rng, 1, 5));
    auto c = DivSubgroup::span(0, {{{"u", Rat(1)}, {"v", v}}, {{"w", Rat(1)}}});
    FreePart cf{{"u", gen::rational(rng, 4, 6)}, {"v", Rat(0)}, {"w", gen::rational(rng, 4, 6)}};
    cf["v"] = cf["u"] * v;
    auto cm = el(gen::torsion(rng, 10, 0), cf);
    REQUIRE(is_member_div(c, cm));
    FreePart xf{{"u", gen::rational(rng, 4, 6)}, {"v", gen::rational(rng, 4, 6)}, {"z", gen::rational(rng, 2, 3)}};
    auto x = el(gen::torsion(rng, 10, 0), xf);
    CHECK(is_member_div(c, x) == is_member_div(c, x * cm));
  }
}

TEST_CASE("subgroup spans") {
  auto a = DivSubgroup::span(0, {{{"x", Rat(2)}, {"y", Rat(4)}}, {{"x", Rat(1)}, {"y", Rat(2)}}});
  CHECK(a.dimension() == 1);
  CHECK(a.basis()[0] == FreePart{{"x", Rat(1)}, {"y", Rat(2)}});
  auto b = DivSubgroup::span(0, {{{"y", Rat(1)}}});
  CHECK(intersection_dimension(a, b) == 0);
  CHECK(intersection_dimension(a, a.join({{{"z", Rat(1)}}})) == 1);
  CHECK(a.join(b.basis()).contains(a));
}

TEST_CASE("order_over examples") {
  DivSubgroup triv;
  auto x = SymElement::symbol("x");
  auto r1 = order_over(triv, {x}, el(Rat(0), {{"x", Rat(3, 4)}}));
  CHECK(r1.n == 4);
  CHECK(r1.l == IntVector{Int(3)});
  CHECK(r1.cpart.is_identity());

  auto r2 = order_over(triv, {x}, el(Rat(1, 3), {{"x", Rat(1, 2)}}));
  CHECK(r2.n == 2);
  CHECK(r2.l == IntVector{Int(1)});
  CHECK(r2.cpart == el(Rat(2, 3)));

  auto c = DivSubgroup::span(0, {{{"u", Rat(1)}}});
  auto r3 = order_over(c, {x}, el(Rat(0), {{"u", Rat(1)}, {"x", Rat(1)}}));
  CHECK(r3.n == 1);
  CHECK(r3.l == IntVector{Int(1)});
  CHECK(r3.cpart == el(Rat(0), {{"u", Rat(1)}}));

  CHECK_THROWS_AS(order_over(c, {x}, SymElement::symbol("v")), Error);
  CHECK_THROWS_AS(order_over(c, {SymElement::symbol("u", Rat(1, 2))}, x), Error);
}

TEST_CASE("order_over is the minimal power (brute force)") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 150; ++it) {
    std::size_t r = gen::uniform(rng, 0, 3);
    Characteristic p = (it % 4 == 0) ? 7 : 0;
    auto in = gen::instance(rng, r, 1, 12, p);
    if (in.order_bound[0] > 200) {
      --it;
      continue;
    }
    const auto& b = in.b[0];
    auto res = order_over(in.c, in.a, b);
    Int g = res.n;
    for (const auto& x : res.l) g = gcd(g, x);
    CHECK(g == 1);
    CHECK(is_member_div(in.c, res.cpart));
    SymElement rhs = res.cpart;
    for (std::size_t j = 0; j < r; ++j) rhs = rhs * pow(in.a[j], res.l[j]);
    CHECK(pow(b, res.n) == rhs);
    long n = 0;
    for (long m = 1; m <= 200 && n == 0; ++m)
      if (gen::member_generated(in, pow(b, Int(m)))) n = m;
    CHECK(Int(n) == res.n);
    for (long m = 1; m <= 4 * n; ++m)
      if (gen::member_generated(in, pow(b, Int(m)))) CHECK(m % n == 0);
  }
}
