#include "mendo/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "mendo/error.hpp"
#include "mendo/json_io.hpp"

namespace mendo::cli {

namespace {

using json_io::Json;
namespace jio = json_io;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

/* Errors that answer the question negatively rather than reject the input. */
bool is_verdict(ErrorKind k) {
  switch (k) {
    case ErrorKind::SystemViolated:
    case ErrorKind::RootObstruction:
    case ErrorKind::NotInDivisibleHull:
    case ErrorKind::NotIndependent:
    case ErrorKind::CriterionFails:
    case ErrorKind::IntersectionTooLarge:
    case ErrorKind::DisagreeOnBase:
    case ErrorKind::OutsideDomain:
      return true;
    default:
      return false;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) bad("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("input lacks '") + key + "'");
  return j.at(key);
}

const Json* maybe(const Json& j, const char* key) {
  return j.is_object() && j.contains(key) && !j.at(key).is_null() ? &j.at(key) : nullptr;
}

Characteristic char_of(const Json& j) {
  const Json* c = maybe(j, "char");
  return c ? static_cast<Characteristic>(jio::to_u64(*c)) : 0;
}

DivSubgroup div_of(const Json& j, Characteristic p) {
  const Json* c = maybe(j, "C");
  return c ? jio::to_div(*c, p) : DivSubgroup(p);
}

std::vector<Elem> elems_of(const Json& j, const FiniteFieldCtx& ctx) {
  if (!j.is_array()) bad("expected a list of field elements");
  std::vector<Elem> out;
  for (const auto& x : j) out.push_back(jio::to_elem(x, ctx));
  return out;
}

Json elems_json(const std::vector<Elem>& xs, const FiniteFieldCtx& ctx) {
  Json a = Json::array();
  for (auto x : xs) a.push_back(jio::from_elem(x, ctx));
  return a;
}

std::vector<Point> points_of(const Json& j, const FiniteFieldCtx& ctx) {
  if (!j.is_array()) bad("expected a list of points");
  std::vector<Point> out;
  for (const auto& p : j) out.push_back(elems_of(p, ctx));
  return out;
}

std::vector<IntPoly> polys_of(const Json& j) {
  if (!j.is_array()) bad("expected a list of polynomials");
  std::vector<IntPoly> out;
  for (const auto& p : j) out.push_back(jio::to_poly(p));
  return out;
}

std::vector<IntVector> vectors_of(const Json& j) {
  if (!j.is_array()) bad("expected a list of integer vectors");
  std::vector<IntVector> out;
  for (const auto& v : j) out.push_back(jio::to_int_vector(v));
  return out;
}

Json vectors_json(const std::vector<IntVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(jio::from_int_vector(v));
  return a;
}

std::uint64_t dlog_limit() {
  const char* env = std::getenv("MENDO_DLOG_LIMIT");
  if (!env || !*env) return kDefaultDlogLimit;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size() || v == 0) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    bad(std::string("MENDO_DLOG_LIMIT must be a positive integer, got '") + env + "'");
  }
}

struct Options {
  std::string in_path;
  std::string src;
  std::string assign;
  std::uint64_t p = 0;
  unsigned k = 0;
  std::string endo_path;
  std::string poly, poly_p, poly_q;
  std::string config_path, report_path;
  std::vector<unsigned> levels, degrees;
  std::uint64_t seed = 0;
  std::string power;
  std::string n;
  std::size_t m = 0;
  bool elements = false;
};

class Runner {
 public:
  Runner(Options& o, std::istream& in, std::ostream& out) : o_(o), in_(in), out_(out) {}

  Json input() const {
    if (o_.in_path.empty() || o_.in_path == "-")
      return jio::parse({std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()});
    return jio::parse(read_file(o_.in_path));
  }

  int emit(const Json& j, int code = 0) const {
    out_ << jio::dump(j);
    return code;
  }

  ExponentFamily endo() const {
    if (o_.endo_path.empty()) bad("--endo is required");
    const ExponentFamily e = jio::to_endo(jio::parse(read_file(o_.endo_path)));
    if (o_.p != 0 && o_.p != e.p()) bad("--p disagrees with the endomorphism's characteristic");
    return e;
  }

  std::optional<ExponentFamily> maybe_endo() const {
    if (o_.endo_path.empty()) return std::nullopt;
    return endo();
  }

  std::uint64_t prime(const std::optional<ExponentFamily>& e) const {
    if (e) return e->p();
    if (o_.p == 0) bad("--p is required");
    return o_.p;
  }

  unsigned level() const {
    if (o_.k == 0) bad("--k (or --level) is required");
    return o_.k;
  }

  FiniteFieldCtx field(const std::optional<ExponentFamily>& e) const {
    return FiniteFieldCtx::build(prime(e), level(), dlog_limit());
  }

  Int n_value() const {
    if (o_.n.empty()) bad("--n is required");
    try {
      return Int(o_.n);
    } catch (const std::invalid_argument&) {
      bad("--n must be an integer");
    }
  }

  // lin

  int lin_hnf() const {
    const auto r = hnf(jio::to_matrix(need(input(), "matrix")));
    return emit({{"h", jio::from_matrix(r.h)}, {"u", jio::from_matrix(r.u)}});
  }

  int lin_snf() const {
    const IntMatrix a = jio::to_matrix(need(input(), "matrix"));
    const auto r = snf(a);
    return emit({{"d", jio::from_matrix(r.d)},
                 {"u", jio::from_matrix(r.u)},
                 {"v", jio::from_matrix(r.v)},
                 {"invariant_factors", jio::from_int_vector(invariant_factors(a))}});
  }

  int lin_solve() const {
    const Json j = input();
    const auto x = solve_integral(jio::to_matrix(need(j, "matrix")), jio::to_int_vector(need(j, "rhs")));
    return emit({{"solution", x ? jio::from_int_vector(*x) : Json(nullptr)}}, x ? 0 : 1);
  }

  int lin_kernel() const { return emit({{"basis", vectors_json(left_kernel(jio::to_matrix(need(input(), "matrix"))))}}); }

  // grp

  int grp_order() const {
    const Json j = input();
    const auto p = char_of(j);
    const auto r = order_over(div_of(j, p), jio::to_sym_list(need(j, "a"), p), jio::to_sym(need(j, "b"), p));
    return emit({{"n", jio::from_int(r.n)}, {"l", jio::from_int_vector(r.l)}, {"c", jio::from_sym(r.cpart)}});
  }

  int grp_independent() const {
    const Json j = input();
    const auto p = char_of(j);
    const bool ok = is_independent(div_of(j, p), jio::to_sym_list(need(j, "a"), p));
    return emit({{"independent", ok}}, ok ? 0 : 1);
  }

  int grp_member() const {
    const Json j = input();
    const auto p = char_of(j);
    const bool ok = is_member_div(div_of(j, p), jio::to_sym(need(j, "x"), p));
    return emit({{"member", ok}}, ok ? 0 : 1);
  }

  int grp_root() const {
    const Json j = input();
    const auto r = canonical_nth_root(jio::to_sym(need(j, "x"), char_of(j)), jio::to_int(need(j, "n")));
    return emit({{"root", jio::from_sym(r.root)}, {"count", jio::from_int(r.count)}});
  }

  // msystem

  struct Tuple {
    Characteristic p;
    DivSubgroup c;
    std::vector<SymElement> a, b;
  };

  static Tuple tuple_of(const Json& j) {
    const auto p = char_of(j);
    const Json* a = maybe(j, "a");
    return {p, div_of(j, p), a ? jio::to_sym_list(*a, p) : std::vector<SymElement>{}, jio::to_sym_list(need(j, "b"), p)};
  }

  int ms_compute() const {
    const Tuple t = tuple_of(input());
    return emit(jio::from_system(compute_system(t.c, t.a, t.b)));
  }

  int ms_verify() const {
    const Json j = input();
    const Tuple t = tuple_of(j);
    const bool ok = verify_system(jio::to_system(need(j, "system"), t.p), t.c, t.a, t.b);
    return emit({{"holds", ok}}, ok ? 0 : 1);
  }

  int ms_present() const {
    const Json j = input();
    const Tuple t = tuple_of(j);
    const Json* s = maybe(j, "system");
    const CompleteSystem tau = s ? jio::to_system(*s, t.p) : compute_system(t.c, t.a, t.b);
    return emit({{"presentation", jio::from_presentation(minimal_presentation(tau, t.c, t.a, t.b))}});
  }

  int ms_alpha() const {
    const Json j = input();
    const auto r = assemble_alpha_system(polys_of(need(j, "polys")), jio::to_sym_list(need(j, "deltas"), char_of(j)));
    Json polys = Json::array();
    for (const auto& q : r.polys) polys.push_back(q.str());
    return emit({{"system", jio::from_system(r.system)}, {"polys", polys}, {"deltas", jio::from_sym_list(r.deltas)}});
  }

  int ms_nm() const {
    const Json j = input();
    const auto r = compute_NM(jio::to_int_vector(need(j, "k")), jio::to_int_vector(need(j, "l")));
    return emit({{"N", jio::from_int(r.N)}, {"M", jio::from_int_vector(r.M)}});
  }

  // hom

  int hom_apply() const {
    const Json j = input();
    const GroupHom h = jio::to_hom(need(j, "hom"));
    return emit({{"image", jio::from_sym(h.apply(jio::to_sym(need(j, "x"), h.characteristic())))}});
  }

  int hom_extend() const {
    const Json j = input();
    const GroupHom h = jio::to_hom(need(j, "hom"));
    const auto p = h.characteristic();
    const Json* a = maybe(j, "a");
    const auto av = a ? jio::to_sym_list(*a, p) : std::vector<SymElement>{};
    const Json* ai = maybe(j, "a_img");
    const auto aiv = ai ? jio::to_sym_list(*ai, p) : std::vector<SymElement>{};
    const Json* b = maybe(j, "b");
    if (!b) return emit(jio::from_hom(extend_over_independent(h, av, aiv)));
    const auto bv = jio::to_sym_list(*b, p);
    const auto biv = jio::to_sym_list(need(j, "b_img"), p);
    const Json* s = maybe(j, "system");
    const CompleteSystem tau = s ? jio::to_system(*s, p) : compute_system(h.base(), av, bv);
    return emit(jio::from_hom(extend_by_system(h, tau, av, bv, aiv, biv)));
  }

  int hom_product() const {
    const Json j = input();
    const GroupHom ta = jio::to_hom(need(j, "theta_a"));
    const GroupHom tb = jio::to_hom(need(j, "theta_b"));
    const Json* d = maybe(j, "D");
    const DivSubgroup dd = d ? jio::to_div(*d, ta.characteristic()) : DivSubgroup(ta.characteristic());
    return emit(jio::from_hom(product_extension(ta, tb, dd)));
  }

  int hom_relations() const {
    const Json j = input();
    const auto p = char_of(j);
    Json rels = Json::array();
    for (const auto& r : relation_lattice(div_of(j, p), jio::to_sym_list(need(j, "gens"), p)))
      rels.push_back({{"constant", jio::from_sym(r.constant)}, {"exponents", jio::from_int_vector(r.exponents)}});
    return emit({{"relations", rels}});
  }

  int hom_trivial() const {
    const Json j = input();
    const Json& s = need(j, "symbols");
    if (!s.is_array()) bad("symbols must be a list of names");
    std::vector<std::string> names;
    for (const auto& x : s) {
      if (!x.is_string()) bad("symbols must be a list of names");
      names.push_back(x.get<std::string>());
    }
    return emit(jio::from_hom(extend_trivial(jio::to_hom(need(j, "hom")), names)));
  }

  // term

  int term_parse() const {
    const Term t = parse_term(o_.src);
    return emit({{"term", to_string(t)}, {"variables", variables(t)}, {"theta_count", theta_count(t)}});
  }

  int term_linearise() const { return emit(jio::from_linear_system(linearise(parse_term(o_.src)))); }

  int term_eval() const {
    const Term t = parse_term(o_.src);
    const auto e = maybe_endo();
    const FiniteFieldCtx ctx = field(e);
    const Json j = o_.assign.empty() ? input() : jio::parse(o_.assign);
    if (!j.is_object()) bad("the assignment must be an object");
    std::map<std::string, Elem> a;
    for (const auto& [name, v] : j.items()) a[name] = jio::to_elem(v, ctx);
    if (!e && has_theta(t)) bad("--endo is required for terms with theta");
    std::set<unsigned> levels;
    for (unsigned d = 1; d <= ctx.k(); ++d)
      if (ctx.k() % d == 0) levels.insert(d);
    // never consulted without theta
    const ExponentFamily fam = e ? *e : ExponentFamily::power_map(ctx.p(), levels, Int(1));
    const Elem v = eval_term(t, a, ctx, fam);
    return emit({{"value", jio::from_elem(v, ctx)}});
  }

  // ff

  int ff_build() const { return emit(jio::from_ctx(field(std::nullopt))); }

  int ff_endo() const {
    if (o_.p == 0) bad("--p is required");
    if (o_.levels.empty()) bad("--levels is required");
    const std::set<unsigned> levels(o_.levels.begin(), o_.levels.end());
    if (!o_.power.empty()) {
      Int n;
      try {
        n = Int(o_.power);
      } catch (const std::invalid_argument&) {
        bad("--power must be an integer");
      }
      return emit(jio::from_endo(ExponentFamily::power_map(o_.p, levels, n)));
    }
    return emit(jio::from_endo(random_endo(o_.p, levels, o_.seed)));
  }

  int ff_kernel() const {
    const ExponentFamily e = endo();
    const IntPoly poly = IntPoly::parse(o_.poly);
    const auto kd = kernel_order(e, poly, level());
    Json out = {{"level", kd.level}, {"poly", kd.poly.str()}, {"order", jio::from_int(kd.order)}};
    if (o_.elements) {
      const FiniteFieldCtx ctx = field(e);
      out["elements"] = elems_json(kernel_elements(ctx, kd.order), ctx);
    }
    return emit(out);
  }

  int ff_coverage() const {
    const ExponentFamily e = endo();
    const FiniteFieldCtx ctx = field(e);
    const auto c = kernel_sum_coverage(ctx, e, IntPoly::parse(o_.poly_p), IntPoly::parse(o_.poly_q));
    return emit({{"covered", c.covered}, {"total", c.total}, {"fraction", c.fraction()}, {"full", c.covered == c.total}});
  }

  int ff_witness() const {
    const ExponentFamily e = endo();
    const FiniteFieldCtx ctx = field(e);
    const Int n = n_value();
    const auto w = torsion_witness(ctx, e, n);
    Json wj = nullptr;
    if (w) wj = {{"zeta", jio::from_elem(w->zeta, ctx)}, {"b", jio::from_elem(w->b, ctx)}, {"a", jio::from_elem(w->a, ctx)}};
    return emit({{"n", jio::from_int(n)}, {"witness", wj}}, w ? 0 : 1);
  }

  int ff_degree() const {
    if (o_.degrees.empty()) bad("--degrees is required");
    return emit({{"degree", cl_theta_degree(o_.degrees)}});
  }

  int ff_freeness() const {
    const FiniteFieldCtx ctx = field(std::nullopt);
    const auto f = freeness_at_level(ctx, points_of(need(input(), "points"), ctx));
    return emit({{"free", f.free}, {"witness", f.witness ? jio::from_int_vector(*f.witness) : Json(nullptr)}},
                f.free ? 0 : 1);
  }

  int ff_characters() const {
    const Json j = input();
    const Int m = jio::to_int(need(j, "m"));
    const auto gens = vectors_of(need(j, "lattice"));
    std::size_t n = gens.empty() ? 0 : gens.front().size();
    if (const Json* r = maybe(j, "rank")) n = jio::to_u64(*r);
    for (const auto& g : gens)
      if (g.size() != n) throw Error(ErrorKind::DimensionMismatch, "lattice generators of different lengths");
    return emit({{"characters", vectors_json(subgroup_characters(Lattice::from_generators(n, gens), m))}});
  }

  int ff_closure() const {
    const FiniteFieldCtx ctx = field(std::nullopt);
    if (o_.m == 0) bad("--m must be at least 1");
    const auto c = pi_m_closure(ctx, elems_of(need(input(), "set"), ctx), o_.m);
    return emit({{"closure", elems_json(c, ctx)}, {"size", c.size()}});
  }

  int ff_probe() const {
    const ExponentFamily e = endo();
    const FiniteFieldCtx ctx = field(e);
    const Json j = input();
    const auto hit = generic_kernel_probe(ctx, e, points_of(need(j, "points"), ctx), polys_of(need(j, "polys")),
                                          elems_of(need(j, "deltas"), ctx));
    return emit({{"point", hit ? elems_json(*hit, ctx) : Json(nullptr)}}, hit ? 0 : 1);
  }

  int ff_audit() const {
    const ExponentFamily e = endo();
    const FiniteFieldCtx ctx = field(e);
    const Json cfg = o_.config_path.empty() ? input() : jio::parse(read_file(o_.config_path));
    const Json report = jio::from_audit_report(genericity_audit(e, ctx, jio::to_audit_config(cfg)), ctx);
    if (!o_.report_path.empty()) {
      std::ofstream f(o_.report_path, std::ios::binary);
      if (!(f << jio::dump(report))) bad("cannot write '" + o_.report_path + "'");
    }
    return emit(report);
  }

  // psfc

  int psfc_check() const {
    const auto v = mendo::psfc_check(jio::to_szmielew(input()));
    return emit(jio::from_verdict(v), v.passes ? 0 : 1);
  }

  int psfc_classify() const { return emit(jio::from_classification(classify(jio::to_szmielew(input())))); }

  int psfc_witness() const {
    const Int n = n_value();
    if (n < 1 || !n.fits_ulong_p()) bad("--n must be a positive integer");
    const auto w = witness_factors(jio::to_szmielew(input()), n.get_ui());
    return emit({{"n", jio::from_int(n)}, {"order", jio::from_int(w.order)}, {"summands", jio::from_int_vector(w.summands)}});
  }

 private:
  Options& o_;
  std::istream& in_;
  std::ostream& out_;
};

using Action = int (Runner::*)() const;

struct Builder {
  Options& o;
  Action* chosen;

  CLI::App* leaf(CLI::App* group, const std::string& name, const std::string& desc, Action act) const {
    CLI::App* sub = group->add_subcommand(name, desc);
    Action* slot = chosen;
    sub->callback([slot, act] { *slot = act; });
    return sub;
  }
  void in(CLI::App* s) const { s->add_option("--in", o.in_path, "input JSON file (default stdin)"); }
  void field(CLI::App* s, bool with_endo) const {
    s->add_option("--p", o.p, "characteristic");
    s->add_option("--k,--level", o.k, "field level k (q = p^k)");
    if (with_endo) s->add_option("--endo", o.endo_path, "endomorphism JSON file");
  }
};

void build(CLI::App& app, Options& o, Action* chosen) {
  const Builder b{o, chosen};
  app.require_subcommand(1);

  CLI::App* lin = app.add_subcommand("lin", "integer linear algebra")->require_subcommand(1);
  for (auto [name, desc, act] : std::initializer_list<std::tuple<const char*, const char*, Action>>{
           {"hnf", "Hermite normal form of {matrix}", &Runner::lin_hnf},
           {"snf", "Smith normal form of {matrix}", &Runner::lin_snf},
           {"solve", "integral x with x * matrix = rhs", &Runner::lin_solve},
           {"kernel", "left kernel basis of {matrix}", &Runner::lin_kernel}})
    b.in(b.leaf(lin, name, desc, act));

  CLI::App* grp = app.add_subcommand("grp", "symbolic multiplicative group")->require_subcommand(1);
  for (auto [name, desc, act] : std::initializer_list<std::tuple<const char*, const char*, Action>>{
           {"order", "order of b over <C a>", &Runner::grp_order},
           {"independent", "is a independent over C", &Runner::grp_independent},
           {"member", "is x in the divisible subgroup C", &Runner::grp_member},
           {"root", "canonical n-th root of x", &Runner::grp_root}})
    b.in(b.leaf(grp, name, desc, act));

  CLI::App* ms = app.add_subcommand("msystem", "complete systems of minimal equations")->require_subcommand(1);
  for (auto [name, desc, act] : std::initializer_list<std::tuple<const char*, const char*, Action>>{
           {"compute", "system of b over <C a>", &Runner::ms_compute},
           {"verify", "does the system hold at (a; b)", &Runner::ms_verify},
           {"present", "minimal presentation", &Runner::ms_present},
           {"alpha", "system of polynomial exponent equations", &Runner::ms_alpha},
           {"nm", "N and M for exponent rows k, l", &Runner::ms_nm}})
    b.in(b.leaf(ms, name, desc, act));

  CLI::App* hom = app.add_subcommand("hom", "homomorphisms and their extensions")->require_subcommand(1);
  for (auto [name, desc, act] : std::initializer_list<std::tuple<const char*, const char*, Action>>{
           {"apply", "image of x", &Runner::hom_apply},
           {"extend", "extend to independent a, or to (a; b) by a system", &Runner::hom_extend},
           {"product", "common extension over D", &Runner::hom_product},
           {"relations", "relation lattice of gens over C", &Runner::hom_relations},
           {"trivial", "extend by the identity on further symbols", &Runner::hom_trivial}})
    b.in(b.leaf(hom, name, desc, act));

  CLI::App* term = app.add_subcommand("term", "terms with theta")->require_subcommand(1);
  CLI::App* tp = b.leaf(term, "parse", "canonical form of a term", &Runner::term_parse);
  tp->add_option("src", o.src, "term")->required();
  CLI::App* tl = b.leaf(term, "linearise", "theta-linear system for t = 0", &Runner::term_linearise);
  tl->add_option("src", o.src, "term")->required();
  CLI::App* te = b.leaf(term, "eval", "value of a term under an assignment", &Runner::term_eval);
  te->add_option("src", o.src, "term")->required();
  te->add_option("--assign", o.assign, "assignment JSON (default: --in or stdin)");
  b.field(te, true);
  b.in(te);

  CLI::App* ff = app.add_subcommand("ff", "finite field world")->require_subcommand(1);
  b.field(b.leaf(ff, "build", "field context", &Runner::ff_build), false);
  CLI::App* fe = b.leaf(ff, "endo", "endomorphism family", &Runner::ff_endo);
  fe->add_option("--p", o.p, "characteristic")->required();
  fe->add_option("--levels", o.levels, "divisor-closed levels")->delimiter(',')->required();
  fe->add_option("--seed", o.seed, "seed for a random family");
  fe->add_option("--power", o.power, "x -> x^n at every level instead");
  CLI::App* fk = b.leaf(ff, "kernel", "order of ker P(theta)", &Runner::ff_kernel);
  b.field(fk, true);
  fk->add_option("--poly", o.poly, "P over X")->required();
  fk->add_flag("--elements", o.elements, "list the kernel");
  CLI::App* fc = b.leaf(ff, "coverage", "coverage of ker P + ker Q", &Runner::ff_coverage);
  b.field(fc, true);
  fc->add_option("--P", o.poly_p, "P over X")->required();
  fc->add_option("--Q", o.poly_q, "Q over X")->required();
  CLI::App* fw = b.leaf(ff, "witness", "torsion witness of order n", &Runner::ff_witness);
  b.field(fw, true);
  fw->add_option("--n", o.n, "order")->required();
  CLI::App* fd = b.leaf(ff, "degree", "degree of the theta-closure", &Runner::ff_degree);
  fd->add_option("--degrees", o.degrees, "degrees of the generators")->delimiter(',')->required();
  CLI::App* fr = b.leaf(ff, "freeness", "multiplicative freeness of {points}", &Runner::ff_freeness);
  b.field(fr, false);
  b.in(fr);
  b.in(b.leaf(ff, "characters", "characters vanishing on {lattice} mod m", &Runner::ff_characters));
  CLI::App* fl = b.leaf(ff, "closure", "products of m elements of {set}", &Runner::ff_closure);
  b.field(fl, false);
  fl->add_option("--m", o.m, "number of factors")->required();
  b.in(fl);
  CLI::App* fp = b.leaf(ff, "probe", "first point with P_i(theta)(a_i) = delta_i", &Runner::ff_probe);
  b.field(fp, true);
  b.in(fp);
  CLI::App* fa = b.leaf(ff, "audit", "genericity audit", &Runner::ff_audit);
  b.field(fa, true);
  fa->add_option("--config", o.config_path, "audit config JSON (default: --in or stdin)");
  fa->add_option("--report", o.report_path, "also write the report here");
  b.in(fa);

  CLI::App* ps = app.add_subcommand("psfc", "pseudofinite-cyclic criterion")->require_subcommand(1);
  b.in(b.leaf(ps, "check", "criterion with local sizes", &Runner::psfc_check));
  b.in(b.leaf(ps, "classify", "P, Q and epsilon", &Runner::psfc_classify));
  CLI::App* pw = b.leaf(ps, "witness", "order of the n-th cyclic factor", &Runner::psfc_witness);
  pw->add_option("--n", o.n, "index, n >= 1")->required();
  b.in(pw);
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app("Exact computations with multiplicative endomorphisms of fields", "mendo");
  Options opts;
  Action chosen = nullptr;
  build(app, opts, &chosen);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "mendo: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  if (!chosen) {
    err << app.help();
    return 2;
  }

  try {
    return (Runner(opts, in, out).*chosen)();
  } catch (const Error& e) {
    err << "mendo: " << e.what() << "\n";
    if (is_verdict(e.kind())) {
      out << jio::dump({{"ok", false}, {"error", to_string(e.kind())}});
      return 1;
    }
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "mendo: InvalidArgument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "mendo: Internal: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace mendo::cli
