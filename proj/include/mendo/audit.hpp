#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mendo/ffworld.hpp"
#include "mendo/intpoly.hpp"
#include "mendo/termlang.hpp"

namespace mendo {

/* Absent sections are skipped; curves are theta-free terms f(x, y). */
struct AuditConfig {
  std::optional<std::vector<IntPoly>> battery;
  std::optional<std::vector<std::pair<IntPoly, IntPoly>>> pairs;
  std::optional<std::vector<Term>> curves;
};

struct BatteryEntry {
  IntPoly poly;
  Int order;
  bool surjective;
};

struct PairEntry {
  IntPoly p;
  IntPoly q;
  Coverage coverage;
};

struct CurveEntry {
  Term curve;
  std::size_t projection_size;  // x != 0 with some f(x, y) = 0
  bool eligible;                // projection nonempty and free
  std::optional<Elem> hit;      // least-dlog x != 0 with f(x, theta(x)) = 0
};

struct AuditReport {
  unsigned level = 0;
  std::uint64_t q = 0;
  std::optional<std::vector<BatteryEntry>> b1;
  std::optional<std::vector<PairEntry>> b2;
  std::optional<std::vector<CurveEntry>> b3;

  std::size_t surjective_count() const;
  std::size_t eligible_count() const;
  std::size_t hit_count() const;
};

/* Throws InvalidArgument for zero polynomials or curves that use theta or
 * variables other than x, y, g. */
AuditReport genericity_audit(const ExponentFamily& e, const FiniteFieldCtx& ctx, const AuditConfig& config);

}  // namespace mendo
