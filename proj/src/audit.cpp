#include "mendo/audit.hpp"

#include "mendo/error.hpp"

namespace mendo {

std::size_t AuditReport::surjective_count() const {
  std::size_t n = 0;
  if (b1)
    for (const auto& b : *b1) n += b.surjective;
  return n;
}

std::size_t AuditReport::eligible_count() const {
  std::size_t n = 0;
  if (b3)
    for (const auto& c : *b3) n += c.eligible;
  return n;
}

std::size_t AuditReport::hit_count() const {
  std::size_t n = 0;
  if (b3)
    for (const auto& c : *b3) n += c.eligible && c.hit.has_value();
  return n;
}

namespace {

void check_curve(const Term& f) {
  if (has_theta(f)) throw Error(ErrorKind::InvalidArgument, "curve " + to_string(f) + " uses theta");
  for (const auto& v : variables(f))
    if (v != "x" && v != "y" && v != "g")
      throw Error(ErrorKind::InvalidArgument, "curve " + to_string(f) + " uses variable '" + v + "'");
}

void check_nonzero(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero polynomial in the audit config");
}

CurveEntry audit_curve(const ExponentFamily& e, const FiniteFieldCtx& ctx, const Term& f) {
  CurveEntry out{f, 0, false, std::nullopt};
  std::vector<Point> projection;
  std::map<std::string, Elem> a;
  for (std::uint64_t i = 0; i < ctx.group_order(); ++i) {
    const Elem x = ctx.gpow(Int(i));
    a["x"] = x;
    for (Elem y = 0; y < ctx.q(); ++y) {
      a["y"] = y;
      if (eval_term(f, a, ctx, e) == 0) {
        projection.push_back({x});
        break;
      }
    }
    if (!out.hit) {
      a["y"] = endo_eval(e, ctx, x);
      if (eval_term(f, a, ctx, e) == 0) out.hit = x;
    }
  }
  out.projection_size = projection.size();
  out.eligible = !projection.empty() && freeness_at_level(ctx, projection).free;
  return out;
}

}  // namespace

AuditReport genericity_audit(const ExponentFamily& e, const FiniteFieldCtx& ctx, const AuditConfig& config) {
  AuditReport r;
  r.level = ctx.k();
  r.q = ctx.q();
  if (config.battery) {
    r.b1.emplace();
    for (const auto& poly : *config.battery) {
      check_nonzero(poly);
      const auto kd = kernel_order(e, poly, ctx.k());
      r.b1->push_back({poly, kd.order, kd.order == 1});
    }
  }
  if (config.pairs) {
    r.b2.emplace();
    for (const auto& [p, q] : *config.pairs) {
      check_nonzero(p);
      check_nonzero(q);
      r.b2->push_back({p, q, kernel_sum_coverage(ctx, e, p, q)});
    }
  }
  if (config.curves) {
    r.b3.emplace();
    for (const auto& f : *config.curves) {
      check_curve(f);
      r.b3->push_back(audit_curve(e, ctx, f));
    }
  }
  return r;
}

}  // namespace mendo
