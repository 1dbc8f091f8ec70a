#include "mendo/symgroup.hpp"

#include <cctype>
#include <set>

#include "mendo/error.hpp"

namespace mendo {

bool is_valid_symbol(const std::string& name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char ch : name)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  return true;
}

FreePart free_axpy(const FreePart& x, const Rat& s, const FreePart& y) {
  FreePart out = x;
  if (sgn(s) == 0) return out;
  for (const auto& [name, coeff] : y) {
    Rat v = out[name] + s * coeff;
    if (sgn(v) == 0)
      out.erase(name);
    else
      out[name] = v;
  }
  return out;
}

FreePart free_add(const FreePart& x, const FreePart& y) { return free_axpy(x, Rat(1), y); }

FreePart free_scale(const FreePart& x, const Rat& s) {
  if (sgn(s) == 0) return {};
  FreePart out;
  for (const auto& [name, coeff] : x) out.emplace(name, coeff * s);
  return out;
}

Rat reduce_torsion(const Rat& t) {
  const Int fl = floor_div(t.get_num(), t.get_den());
  Rat r = t - Rat(fl);
  r.canonicalize();
  return r;
}

namespace {

void check_same_char(Characteristic a, Characteristic b) {
  if (a != b)
    throw Error(ErrorKind::CharacteristicMismatch,
                "characteristic " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

SymElement::SymElement(Characteristic characteristic) : torsion_(0), char_(characteristic) {}

SymElement::SymElement(Rat torsion, FreePart free, Characteristic characteristic)
    : torsion_(reduce_torsion(torsion)), char_(characteristic) {
  if (char_ != 0 && mpz_divisible_ui_p(torsion_.get_den_mpz_t(), char_))
    throw Error(ErrorKind::InvalidArgument,
                "torsion denominator divisible by the characteristic " + std::to_string(char_));
  for (auto& [name, coeff] : free) {
    if (!is_valid_symbol(name)) throw Error(ErrorKind::InvalidArgument, "bad symbol name '" + name + "'");
    if (sgn(coeff) != 0) free_.emplace(name, coeff);
  }
}

SymElement SymElement::root_of_unity(const Rat& torsion, Characteristic characteristic) {
  return SymElement(torsion, {}, characteristic);
}

SymElement SymElement::symbol(const std::string& name, const Rat& exponent,
                              Characteristic characteristic) {
  return SymElement(Rat(0), FreePart{{name, exponent}}, characteristic);
}

SymElement mul(const SymElement& x, const SymElement& y) {
  check_same_char(x.characteristic(), y.characteristic());
  return SymElement(x.torsion() + y.torsion(), free_add(x.free(), y.free()), x.characteristic());
}

SymElement inv(const SymElement& x) {
  return SymElement(-x.torsion(), free_scale(x.free(), Rat(-1)), x.characteristic());
}

SymElement pow(const SymElement& x, const Int& n) {
  const Rat q(n);
  return SymElement(x.torsion() * q, free_scale(x.free(), q), x.characteristic());
}

NthRoot canonical_nth_root(const SymElement& x, const Int& n) {
  if (sgn(n) <= 0) throw Error(ErrorKind::InvalidArgument, "root index must be positive");
  const Characteristic p = x.characteristic();
  if (p != 0 && mpz_divisible_ui_p(n.get_mpz_t(), p))
    throw Error(ErrorKind::RootObstruction,
                "no canonical " + n.get_str() + "-th root in characteristic " + std::to_string(p));
  const Rat inv_n = make_rat(Int(1), n);
  return {SymElement(x.torsion() * inv_n, free_scale(x.free(), inv_n), p), n};
}

Rat prime_to_p_part(const Rat& r, Characteristic characteristic) {
  if (characteristic == 0) return reduce_torsion(r);
  const Int p(characteristic);
  Int d = r.get_den();
  Int pe = 1;
  while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) {
    d /= p;
    pe *= p;
  }
  if (pe == 1) return reduce_torsion(r);
  // num(r) = x d + y p^e, and r = x / p^e + y / d
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t(), pe.get_mpz_t());
  return reduce_torsion(make_rat(r.get_num() * t, d));
}

Rat scale_torsion(const Rat& q, const Rat& t, Characteristic characteristic) {
  return prime_to_p_part(q * t, characteristic);
}

// ---------------------------------------------------------------------------

std::vector<std::string> symbols_of(const std::vector<FreePart>& parts) {
  std::set<std::string> names;
  for (const auto& f : parts)
    for (const auto& [name, coeff] : f) names.insert(name);
  return {names.begin(), names.end()};
}

RatVector densify(const FreePart& f, const std::vector<std::string>& symbols) {
  RatVector v(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    auto it = f.find(symbols[i]);
    if (it != f.end()) v[i] = it->second;
  }
  return v;
}

FreePart sparsify(const RatVector& v, const std::vector<std::string>& symbols) {
  FreePart f;
  for (std::size_t i = 0; i < symbols.size(); ++i)
    if (sgn(v[i]) != 0) f.emplace(symbols[i], v[i]);
  return f;
}


DivSubgroup::DivSubgroup(Characteristic characteristic) : char_(characteristic) {}

DivSubgroup DivSubgroup::span(Characteristic characteristic, const std::vector<FreePart>& generators) {
  DivSubgroup c(characteristic);
  const auto symbols = symbols_of(generators);
  std::vector<RatVector> rows;
  rows.reserve(generators.size());
  for (const auto& g : generators) rows.push_back(densify(g, symbols));
  const auto e = rref(rows, symbols.size());
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    c.basis_.push_back(sparsify(e.rows[i], symbols));
    c.pivots_.push_back(symbols[e.pivots[i]]);
  }
  return c;
}

DivSubgroup DivSubgroup::hull_of(Characteristic characteristic, const std::vector<SymElement>& elements) {
  std::vector<FreePart> gens;
  for (const auto& x : elements) {
    check_same_char(characteristic, x.characteristic());
    gens.push_back(x.free());
  }
  return span(characteristic, gens);
}

FreePart DivSubgroup::reduce(const FreePart& v) const {
  FreePart r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    auto it = r.find(pivots_[i]);
    if (it == r.end()) continue;
    const Rat coeff = it->second;
    r = free_axpy(r, -coeff, basis_[i]);
  }
  return r;
}

RatVector DivSubgroup::coordinates(const FreePart& v) const {
  RatVector out(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    auto it = v.find(pivots_[i]);
    if (it != v.end()) out[i] = it->second;
  }
  return out;
}

DivSubgroup DivSubgroup::join(const std::vector<FreePart>& more) const {
  std::vector<FreePart> gens = basis_;
  gens.insert(gens.end(), more.begin(), more.end());
  return span(char_, gens);
}

bool DivSubgroup::contains(const DivSubgroup& other) const {
  for (const auto& b : other.basis_)
    if (!contains_free(b)) return false;
  return true;
}

std::size_t intersection_dimension(const DivSubgroup& a, const DivSubgroup& b) {
  return a.dimension() + b.dimension() - a.join(b.basis()).dimension();
}

bool is_member_div(const DivSubgroup& c, const SymElement& x) {
  check_same_char(c.characteristic(), x.characteristic());
  return c.contains_free(x.free());
}

bool is_independent(const DivSubgroup& c, const std::vector<SymElement>& a) {
  std::vector<FreePart> reduced;
  for (const auto& x : a) {
    check_same_char(c.characteristic(), x.characteristic());
    reduced.push_back(c.reduce(x.free()));
  }
  const auto symbols = symbols_of(reduced);
  std::vector<RatVector> rows;
  for (const auto& f : reduced) rows.push_back(densify(f, symbols));
  return rational_rank(rows, symbols.size()) == a.size();
}

std::optional<RatVector> hull_coordinates(const DivSubgroup& c, const std::vector<FreePart>& gens,
                                          const FreePart& target) {
  std::vector<FreePart> reduced;
  reduced.reserve(gens.size() + 1);
  for (const auto& g : gens) reduced.push_back(c.reduce(g));
  const FreePart t = c.reduce(target);
  reduced.push_back(t);
  const auto symbols = symbols_of(reduced);
  reduced.pop_back();
  std::vector<RatVector> rows;
  for (const auto& f : reduced) rows.push_back(densify(f, symbols));
  return rational_combination(rows, densify(t, symbols));
}

OrderOver order_over(const DivSubgroup& c, const std::vector<SymElement>& a, const SymElement& b) {
  check_same_char(c.characteristic(), b.characteristic());
  if (!is_independent(c, a)) throw Error(ErrorKind::NotIndependent, "tuple is not independent over C");
  std::vector<FreePart> gens;
  for (const auto& x : a) gens.push_back(x.free());
  const auto q = hull_coordinates(c, gens, b.free());
  if (!q) throw Error(ErrorKind::NotInDivisibleHull, "element outside the divisible hull of <C a>");

  Int n = 1;
  for (const auto& x : *q) n = lcm(n, x.get_den());
  OrderOver out{n, IntVector(a.size()), pow(b, n)};
  for (std::size_t j = 0; j < a.size(); ++j) {
    Rat lj = (*q)[j] * Rat(n);
    out.l[j] = lj.get_num();
    out.cpart = mul(out.cpart, pow(a[j], -out.l[j]));
  }
  if (!is_member_div(c, out.cpart))
    throw Error(ErrorKind::Internal, "order_over produced a constant outside C");
  return out;
}

}  // namespace mendo
