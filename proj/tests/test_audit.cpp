#include <doctest.h>

#include "mendo/audit.hpp"
#include "mendo/error.hpp"

using namespace mendo;

namespace {

IntPoly P(const std::string& s) { return IntPoly::parse(s); }

}  // namespace

TEST_CASE("audit examples") {
  const auto f16 = FiniteFieldCtx::build(2, 4);
  const auto id = ExponentFamily::power_map(2, {1, 2, 4}, Int(1));
  AuditConfig pairs;
  pairs.pairs = std::vector<std::pair<IntPoly, IntPoly>>{{P("X - 1"), P("X - 1")}};
  const auto r1 = genericity_audit(id, f16, pairs);
  REQUIRE(r1.b2);
  CHECK((*r1.b2)[0].coverage.covered == 16);
  CHECK_FALSE(r1.b1);
  CHECK_FALSE(r1.b3);

  const ExponentFamily s3(2, {{1, Int(0)}, {2, Int(0)}, {4, Int(3)}});
  pairs.pairs = std::vector<std::pair<IntPoly, IntPoly>>{{P("X"), P("X")}};
  const auto r2 = genericity_audit(s3, f16, pairs);
  CHECK((*r2.b2)[0].coverage.covered < 16);

  const auto empty = genericity_audit(s3, f16, AuditConfig{});
  CHECK_FALSE(empty.b1);
  CHECK_FALSE(empty.b2);
  CHECK_FALSE(empty.b3);
  CHECK(empty.q == 16);
}

TEST_CASE("audit battery and curves") {
  const auto f16 = FiniteFieldCtx::build(2, 4);
  const ExponentFamily s3(2, {{1, Int(0)}, {2, Int(0)}, {4, Int(3)}});
  AuditConfig cfg;
  cfg.battery = std::vector<IntPoly>{P("X"), P("X - 1"), P("X^4 - 1"), P("X + 1")};
  cfg.curves = std::vector<Term>{parse_term("y - x^3"), parse_term("y - x^2"), parse_term("x - 1"),
                                 parse_term("y - x - 1"), parse_term("y*y - x*x*x - x")};
  const auto r = genericity_audit(s3, f16, cfg);
  REQUIRE(r.b1);
  // X + 1: exponent 4, gcd(4, 15) = 1
  CHECK(r.surjective_count() == 2);
  CHECK((*r.b1)[2].order == 5);
  REQUIRE(r.b3);
  const auto& c = *r.b3;
  CHECK(c[0].eligible);
  CHECK(c[0].hit == f16.one());
  CHECK(c[1].hit == f16.one());
  CHECK_FALSE(c[2].eligible);
  CHECK(c[2].projection_size == 1);
  // x^3 = x + 1 brute force
  std::optional<Elem> want;
  for (std::uint64_t i = 0; i < 15 && !want; ++i) {
    const Elem x = f16.gpow(Int(i));
    if (f16.pow(x, Int(3)) == f16.add(x, 1)) want = x;
  }
  CHECK(c[3].hit == want);
  CHECK(r.hit_count() <= r.eligible_count());

  AuditConfig bad;
  bad.curves = std::vector<Term>{parse_term("theta(x) - y")};
  CHECK_THROWS_AS(genericity_audit(s3, f16, bad), Error);
  bad.curves = std::vector<Term>{parse_term("z - y")};
  CHECK_THROWS_AS(genericity_audit(s3, f16, bad), Error);
}
