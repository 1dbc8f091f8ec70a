#include "mendo/json_io.hpp"

#include "mendo/error.hpp"

namespace mendo::json_io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

const Json* optional_field(const Json& j, const char* key) {
  if (!j.is_object()) return nullptr;
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string("expected an array for ") + what);
  return j;
}

Characteristic to_char(const Json& j) { return static_cast<Characteristic>(to_u64(j)); }

Characteristic char_or(const Json& j, Characteristic fallback) {
  const Json* c = optional_field(j, "char");
  return c ? to_char(*c) : fallback;
}

Cardinal to_cardinal(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "omega") return Cardinal::countable();
  const Int v = to_int(j);
  if (sgn(v) < 0) bad("negative cardinal");
  return Cardinal::finite(v);
}

Json from_cardinal(const Cardinal& c) {
  if (c.omega) return "omega";
  return from_int(c.value);
}

Json from_size(const GroupSize& s) { return s ? from_int(*s) : Json("infinite"); }

std::string fraction(std::size_t a, std::size_t b) {
  const Rat r = make_rat(Int(static_cast<unsigned long>(a)), Int(static_cast<unsigned long>(b)));
  return Int(r.get_num()).get_str() + "/" + Int(r.get_den()).get_str();
}

}  // namespace

Int to_int(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Int(j.get<unsigned long>()) : Int(j.get<long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      bad("not an integer: '" + j.get<std::string>() + "'");
    }
  }
  bad("expected an integer, got " + j.dump());
}

Json from_int(const Int& v) {
  static const Int kSafe = Int(1) << 53;
  if (abs(v) < kSafe) return v.get_si();
  return v.get_str();
}

std::uint64_t to_u64(const Json& j) {
  const Int v = to_int(j);
  if (sgn(v) < 0 || !v.fits_ulong_p()) bad("expected a small nonnegative integer, got " + j.dump());
  return v.get_ui();
}

Rat to_rat(const Json& j) {
  if (j.is_number_integer()) return Rat(to_int(j));
  if (!j.is_string()) bad("expected a rational, got " + j.dump());
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(to_int(j));
  const Int num = to_int(Json(s.substr(0, slash)));
  const Int den = to_int(Json(s.substr(slash + 1)));
  if (den == 0) bad("zero denominator in '" + s + "'");
  return make_rat(num, den);
}

Json from_rat(const Rat& v) {
  Rat r = v;
  r.canonicalize();
  if (r.get_den() == 1) return Int(r.get_num()).get_str();
  return Int(r.get_num()).get_str() + "/" + Int(r.get_den()).get_str();
}

IntVector to_int_vector(const Json& j) {
  IntVector v;
  for (const auto& x : array(j, "integer vector")) v.push_back(to_int(x));
  return v;
}

Json from_int_vector(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(from_int(x));
  return a;
}

IntMatrix to_matrix(const Json& j) {
  const std::size_t rows = to_u64(field(j, "rows"));
  const std::size_t cols = to_u64(field(j, "cols"));
  const Json& entries = array(field(j, "entries"), "entries");
  if (entries.size() != rows) bad("entries has " + std::to_string(entries.size()) + " rows, expected " + std::to_string(rows));
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = array(entries[i], "matrix row");
    if (row.size() != cols) bad("row " + std::to_string(i) + " has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = to_int(row[c]);
  }
  return m;
}

Json from_matrix(const IntMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) entries.push_back(from_int_vector(m.row(i)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

FreePart to_free(const Json& j) {
  if (!j.is_object()) bad("expected a free part object");
  FreePart f;
  for (const auto& [name, v] : j.items()) {
    if (!is_valid_symbol(name)) bad("bad symbol name '" + name + "'");
    const Rat q = to_rat(v);
    if (sgn(q) != 0) f[name] = q;
  }
  return f;
}

Json from_free(const FreePart& f) {
  Json o = Json::object();
  for (const auto& [name, q] : f) o[name] = from_rat(q);
  return o;
}

SymElement to_sym(const Json& j, Characteristic fallback) {
  if (!j.is_object()) bad("expected an element object");
  const Json* t = optional_field(j, "torsion");
  const Json* f = optional_field(j, "free");
  return SymElement(t ? to_rat(*t) : Rat(0), f ? to_free(*f) : FreePart{}, char_or(j, fallback));
}

Json from_sym(const SymElement& x) {
  return {{"torsion", from_rat(x.torsion())}, {"free", from_free(x.free())}, {"char", x.characteristic()}};
}

std::vector<SymElement> to_sym_list(const Json& j, Characteristic fallback) {
  std::vector<SymElement> out;
  for (const auto& x : array(j, "element list")) out.push_back(to_sym(x, fallback));
  return out;
}

Json from_sym_list(const std::vector<SymElement>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(from_sym(x));
  return a;
}

DivSubgroup to_div(const Json& j, Characteristic p) {
  std::vector<FreePart> gens;
  for (const auto& g : array(j, "subgroup generators")) gens.push_back(to_free(g));
  return DivSubgroup::span(p, gens);
}

Json from_div(const DivSubgroup& c) {
  Json a = Json::array();
  for (const auto& b : c.basis()) a.push_back(from_free(b));
  return a;
}

CompleteSystem to_system(const Json& j, Characteristic fallback) {
  const Characteristic p = char_or(j, fallback);
  CompleteSystem s;
  s.r = to_u64(field(j, "r"));
  s.t = to_u64(field(j, "t"));
  s.orders = to_int_vector(field(j, "orders"));
  for (const auto& e : array(field(j, "equations"), "equations")) {
    MinimalEquation eq{to_int_vector(field(e, "k")), to_int(field(e, "N")), to_int_vector(field(e, "l")),
                       to_sym(field(e, "c"), p)};
    if (!s.equations.emplace(eq.k, eq).second) bad("duplicate equation for one exponent tuple");
  }
  return s;
}

Json from_system(const CompleteSystem& s) {
  Json eqs = Json::array();
  for (const auto& [k, eq] : s.equations)
    eqs.push_back({{"k", from_int_vector(eq.k)}, {"N", from_int(eq.N)}, {"l", from_int_vector(eq.l)}, {"c", from_sym(eq.c)}});
  return {{"r", s.r}, {"t", s.t}, {"orders", from_int_vector(s.orders)}, {"equations", eqs}};
}

Json from_presentation(const std::vector<PresentationEquation>& pres) {
  Json a = Json::array();
  for (const auto& e : pres)
    a.push_back({{"n", from_int(e.n)}, {"l", from_int_vector(e.l)}, {"m", from_int_vector(e.m)}, {"c", from_sym(e.c)}});
  return a;
}

std::vector<PresentationEquation> to_presentation(const Json& j, Characteristic fallback) {
  std::vector<PresentationEquation> out;
  for (const auto& e : array(j, "presentation"))
    out.push_back({to_int(field(e, "n")), to_int_vector(field(e, "l")), to_int_vector(field(e, "m")),
                   to_sym(field(e, "c"), fallback)});
  return out;
}

GroupHom to_hom(const Json& j) {
  const Characteristic p = char_or(j, 0);
  const DivSubgroup c = to_div(field(j, "domain"), p);
  TorsionAction action;
  if (const Json* s = optional_field(j, "torsion_exponent")) action.s = to_int(*s);
  if (const Json* fam = optional_field(j, "torsion_family")) {
    if (!fam->is_object()) bad("torsion_family must be an object");
    for (const auto& [d, s] : fam->items()) action.family[to_int(Json(d))] = to_int(s);
    action.validate();
  }
  const Json* images = optional_field(j, "free_images");
  const Json* lifts = optional_field(j, "lifts");
  std::vector<Rat> ls;
  std::vector<FreePart> fs;
  for (const auto& pivot : c.pivots()) {
    if (!images || !images->contains(pivot)) bad("free_images lacks the basis vector with pivot '" + pivot + "'");
    const SymElement img = to_sym(images->at(pivot), p);
    fs.push_back(img.free());
    ls.push_back(lifts && lifts->contains(pivot) ? to_rat(lifts->at(pivot)) : img.torsion());
  }
  if (images)
    for (const auto& [key, v] : images->items())
      if (std::find(c.pivots().begin(), c.pivots().end(), key) == c.pivots().end())
        bad("free_images key '" + key + "' is not a pivot of the domain basis");
  GroupHom h = GroupHom::with_lifts(c, action, ls, fs);
  const Json* gens = optional_field(j, "generators");
  const Json* gimgs = optional_field(j, "generator_images");
  if (gens || gimgs) {
    if (!gens || !gimgs) bad("generators and generator_images go together");
    h = h.adjoin(to_sym_list(*gens, p), to_sym_list(*gimgs, p));
  }
  return h;
}

Json from_hom(const GroupHom& h) {
  Json images = Json::object(), lifts = Json::object();
  const auto base = h.base_images();
  for (std::size_t i = 0; i < base.size(); ++i) {
    images[h.base().pivots()[i]] = from_sym(base[i]);
    lifts[h.base().pivots()[i]] = from_rat(h.lifts()[i]);
  }
  Json out = {{"char", h.characteristic()},
              {"domain", from_div(h.base())},
              {"torsion_exponent", from_int(h.torsion().s)},
              {"free_images", images},
              {"lifts", lifts}};
  if (!h.torsion().family.empty()) {
    Json fam = Json::object();
    for (const auto& [d, s] : h.torsion().family) fam[d.get_str()] = from_int(s);
    out["torsion_family"] = fam;
  }
  if (!h.generators().empty()) {
    out["generators"] = from_sym_list(h.generators());
    out["generator_images"] = from_sym_list(h.generator_images());
  }
  return out;
}

Json from_linear_system(const LinearSystem& s) {
  Json eqs = Json::array();
  for (const auto& e : s.equations) eqs.push_back({{"lhs", to_string(e.lhs)}, {"rhs", to_string(e.rhs)}});
  return {{"zvars", s.zvars}, {"zprimes", s.zprimes}, {"equations", eqs}};
}

ExponentFamily to_endo(const Json& j) {
  const std::uint64_t p = to_u64(field(j, "p"));
  std::map<unsigned, Int> res;
  const Json& r = field(j, "residues");
  if (!r.is_object()) bad("residues must be an object keyed by level");
  for (const auto& [k, s] : r.items()) res[static_cast<unsigned>(to_u64(Json(k)))] = to_int(s);
  if (const Json* levels = optional_field(j, "levels")) {
    std::set<unsigned> ls;
    for (const auto& k : array(*levels, "levels")) ls.insert(static_cast<unsigned>(to_u64(k)));
    std::set<unsigned> keys;
    for (const auto& [k, s] : res) keys.insert(k);
    if (ls != keys) bad("levels and residue keys differ");
  }
  return ExponentFamily(p, std::move(res));
}

Json from_endo(const ExponentFamily& e) {
  Json res = Json::object();
  Json levels = Json::array();
  for (const auto& [k, s] : e.residues()) {
    res[std::to_string(k)] = from_int(s);
    levels.push_back(k);
  }
  return {{"p", e.p()}, {"levels", levels}, {"residues", res}};
}

Elem to_elem(const Json& j, const FiniteFieldCtx& ctx) {
  if (j.is_number_integer()) return ctx.from_int(to_int(j));
  if (!j.is_string()) bad("expected a field element, got " + j.dump());
  return ctx.parse(j.get<std::string>());
}

Json from_elem(Elem a, const FiniteFieldCtx& ctx) { return ctx.format(a); }

Json from_ctx(const FiniteFieldCtx& ctx) {
  Json modulus = Json::array();
  for (auto c : ctx.modulus()) modulus.push_back(c);
  return {{"p", ctx.p()},
          {"k", ctx.k()},
          {"q", ctx.q()},
          {"group_order", ctx.group_order()},
          {"modulus", modulus},
          {"generator", ctx.generator()}};
}

IntPoly to_poly(const Json& j) {
  if (!j.is_string()) bad("expected a polynomial string, got " + j.dump());
  return IntPoly::parse(j.get<std::string>());
}

SzmielewInvariants to_szmielew(const Json& j) {
  SzmielewInvariants g;
  if (const Json* eps = optional_field(j, "epsilon")) g.epsilon = to_cardinal(*eps);
  if (const Json* primes = optional_field(j, "primes")) {
    if (!primes->is_object()) bad("primes must be an object keyed by prime");
    for (const auto& [key, d] : primes->items()) {
      PrimeData pd;
      if (const Json* fin = optional_field(d, "finite"))
        for (const auto& pair : array(*fin, "finite")) {
          if (!pair.is_array() || pair.size() != 2) bad("finite entries are [n, kappa] pairs");
          const auto n = static_cast<unsigned long>(to_u64(pair[0]));
          pd.kappa[n] = pd.kappa[n] + to_cardinal(pair[1]);
        }
      if (const Json* l = optional_field(d, "lambda")) pd.lambda = to_cardinal(*l);
      if (const Json* n = optional_field(d, "nu")) pd.nu = to_cardinal(*n);
      g.primes[to_u64(Json(key))] = pd;
    }
  }
  g.validate();
  return g;
}

Json from_szmielew(const SzmielewInvariants& g) {
  Json primes = Json::object();
  for (const auto& [p, d] : g.primes) {
    Json fin = Json::array();
    for (const auto& [n, k] : d.kappa) fin.push_back({n, from_cardinal(k)});
    primes[std::to_string(p)] = {{"finite", fin}, {"lambda", from_cardinal(d.lambda)}, {"nu", from_cardinal(d.nu)}};
  }
  return {{"primes", primes}, {"epsilon", from_cardinal(g.epsilon)}};
}

Json from_verdict(const PsfcVerdict& v) {
  Json sizes = Json::object();
  for (const auto& [p, s] : v.sizes)
    sizes[std::to_string(p)] = {{"torsion", from_size(s.torsion)}, {"quotient", from_size(s.quotient)}};
  Json out = {{"passes", v.passes}, {"sizes", sizes}};
  if (v.failing_prime) out["failing_prime"] = *v.failing_prime;
  return out;
}

Json from_classification(const Classification& c) {
  Json P = Json::object();
  for (const auto& [p, a] : c.alpha) P[std::to_string(p)] = a;
  Json Q = Json::array();
  for (auto q : c.q) Q.push_back(q);
  return {{"P", P}, {"Q", Q}, {"epsilon", from_cardinal(c.epsilon)}, {"epsilon0", from_cardinal(c.epsilon0)}};
}

AuditConfig to_audit_config(const Json& j) {
  if (!j.is_object()) bad("audit config must be an object");
  AuditConfig cfg;
  if (const Json* b = optional_field(j, "battery")) {
    cfg.battery.emplace();
    for (const auto& p : array(*b, "battery")) cfg.battery->push_back(to_poly(p));
  }
  if (const Json* pr = optional_field(j, "pairs")) {
    cfg.pairs.emplace();
    for (const auto& pq : array(*pr, "pairs")) {
      if (!pq.is_array() || pq.size() != 2) bad("pairs entries are [P, Q]");
      cfg.pairs->push_back({to_poly(pq[0]), to_poly(pq[1])});
    }
  }
  if (const Json* cv = optional_field(j, "curves")) {
    cfg.curves.emplace();
    for (const auto& c : array(*cv, "curves")) {
      if (!c.is_string()) bad("curves are term strings");
      cfg.curves->push_back(parse_term(c.get<std::string>()));
    }
  }
  return cfg;
}

Json from_audit_report(const AuditReport& r, const FiniteFieldCtx& ctx) {
  Json out = {{"level", r.level}, {"q", r.q}};
  if (r.b1) {
    Json entries = Json::array();
    for (const auto& b : *r.b1)
      entries.push_back({{"poly", b.poly.str()}, {"order", from_int(b.order)}, {"surjective", b.surjective}});
    out["B1"] = {{"entries", entries}, {"surjective", r.surjective_count()}, {"total", r.b1->size()}};
    if (!r.b1->empty()) out["B1"]["fraction"] = fraction(r.surjective_count(), r.b1->size());
  }
  if (r.b2) {
    Json entries = Json::array();
    for (const auto& e : *r.b2)
      entries.push_back({{"P", e.p.str()},
                         {"Q", e.q.str()},
                         {"covered", e.coverage.covered},
                         {"total", e.coverage.total},
                         {"fraction", e.coverage.fraction()},
                         {"full", e.coverage.covered == e.coverage.total}});
    out["B2"] = entries;
  }
  if (r.b3) {
    Json entries = Json::array();
    for (const auto& c : *r.b3)
      entries.push_back({{"curve", to_string(c.curve)},
                         {"projection_size", c.projection_size},
                         {"eligible", c.eligible},
                         {"hit", c.hit ? from_elem(*c.hit, ctx) : Json(nullptr)}});
    out["B3"] = {{"entries", entries}, {"eligible", r.eligible_count()}, {"hits", r.hit_count()}};
    if (r.eligible_count() > 0) out["B3"]["fraction"] = fraction(r.hit_count(), r.eligible_count());
  }
  return out;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace mendo::json_io
