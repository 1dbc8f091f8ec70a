#include "mendo/homext.hpp"

#include <set>

#include "mendo/error.hpp"

namespace mendo {

void TorsionAction::validate() const {
  for (auto it = family.begin(); it != family.end(); ++it) {
    if (it->first < 1) throw Error(ErrorKind::InvalidArgument, "family keys must be positive");
    for (auto jt = std::next(it); jt != family.end(); ++jt) {
      const Int g = gcd(it->first, jt->first);
      if (mod_floor(it->second - jt->second, g) != 0)
        throw Error(ErrorKind::InvalidArgument,
                    "residues for " + it->first.get_str() + " and " + jt->first.get_str() + " are incompatible");
    }
  }
}

Rat TorsionAction::apply(const Rat& t) const {
  if (family.empty()) return reduce_torsion(t * Rat(s));
  const Int b = t.get_den();
  for (const auto& [d, sd] : family)
    if (mpz_divisible_p(d.get_mpz_t(), b.get_mpz_t())) return reduce_torsion(t * Rat(sd));
  throw Error(ErrorKind::OutsideDomain, "no residue covers torsion of order " + b.get_str());
}

namespace {

void check_char(Characteristic p, const std::vector<SymElement>& xs) {
  for (const auto& x : xs)
    if (x.characteristic() != p) throw Error(ErrorKind::CharacteristicMismatch, "image characteristic");
}

// Hom on span(vectors) from (possibly dependent, but consistent) values on a
// spanning family.
GroupHom from_spanning(Characteristic p, const TorsionAction& torsion, const std::vector<FreePart>& vectors,
                       const std::vector<Rat>& lifts, const std::vector<FreePart>& frees) {
  const auto c = DivSubgroup::span(p, vectors);
  const auto symbols = symbols_of(vectors);
  std::vector<RatVector> rows;
  for (const auto& v : vectors) rows.push_back(densify(v, symbols));
  std::vector<Rat> out_lifts;
  std::vector<FreePart> out_frees;
  for (const auto& w : c.basis()) {
    const auto co = rational_combination(rows, densify(w, symbols));
    if (!co) throw Error(ErrorKind::Internal, "basis vector outside its own span");
    Rat t(0);
    FreePart f;
    for (std::size_t j = 0; j < vectors.size(); ++j) {
      if (sgn((*co)[j]) == 0) continue;
      t += (*co)[j] * lifts[j];
      f = free_axpy(f, (*co)[j], frees[j]);
    }
    out_lifts.push_back(t);
    out_frees.push_back(f);
  }
  return GroupHom::with_lifts(c, torsion, out_lifts, out_frees);
}

// Integer e with free(x) - sum e_j free(g_j) in span(c).
std::optional<IntVector> decompose(const DivSubgroup& c, const std::vector<SymElement>& gens,
                                   const SymElement& x) {
  std::vector<FreePart> reduced;
  for (const auto& g : gens) reduced.push_back(c.reduce(g.free()));
  const FreePart xr = c.reduce(x.free());
  if (gens.empty()) {
    if (!xr.empty()) return std::nullopt;
    return IntVector{};
  }
  reduced.push_back(xr);
  const auto symbols = symbols_of(reduced);
  reduced.pop_back();
  if (symbols.empty()) return IntVector(gens.size());
  std::vector<RatVector> rows;
  for (const auto& f : reduced) rows.push_back(densify(f, symbols));
  rows.push_back(densify(xr, symbols));
  auto ints = clear_denominators(rows);
  const IntVector target = ints.back();
  ints.pop_back();
  return solve_integral(IntMatrix::from_rows(ints, symbols.size()), target);
}

}  // namespace

GroupHom GroupHom::on_base(const DivSubgroup& c, TorsionAction torsion, const std::vector<SymElement>& base_images) {
  if (base_images.size() != c.dimension())
    throw Error(ErrorKind::DimensionMismatch, "one image per basis vector of C");
  check_char(c.characteristic(), base_images);
  std::vector<Rat> lifts;
  std::vector<FreePart> frees;
  for (const auto& img : base_images) {
    lifts.push_back(img.torsion());
    frees.push_back(img.free());
  }
  return with_lifts(c, std::move(torsion), std::move(lifts), std::move(frees));
}

GroupHom GroupHom::with_lifts(const DivSubgroup& c, TorsionAction torsion, std::vector<Rat> lifts,
                              std::vector<FreePart> frees) {
  if (lifts.size() != c.dimension() || frees.size() != c.dimension())
    throw Error(ErrorKind::DimensionMismatch, "one image per basis vector of C");
  torsion.validate();
  GroupHom h;
  h.base_ = c;
  h.torsion_ = std::move(torsion);
  h.lifts_ = std::move(lifts);
  for (auto& f : frees) {
    // drops zero coefficients and validates names
    h.frees_.push_back(SymElement(Rat(0), f, c.characteristic()).free());
  }
  return h;
}

GroupHom GroupHom::identity(const DivSubgroup& c) {
  std::vector<SymElement> images;
  for (const auto& v : c.basis()) images.emplace_back(Rat(0), v, c.characteristic());
  return on_base(c, TorsionAction{}, images);
}

GroupHom GroupHom::adjoin(const std::vector<SymElement>& gens, const std::vector<SymElement>& images) const {
  if (gens.size() != images.size()) throw Error(ErrorKind::DimensionMismatch, "one image per generator");
  check_char(characteristic(), gens);
  check_char(characteristic(), images);
  GroupHom h = *this;
  h.gens_.insert(h.gens_.end(), gens.begin(), gens.end());
  h.images_.insert(h.images_.end(), images.begin(), images.end());
  return h;
}

std::vector<SymElement> GroupHom::base_images() const {
  std::vector<SymElement> out;
  for (std::size_t i = 0; i < lifts_.size(); ++i)
    out.emplace_back(prime_to_p_part(lifts_[i], characteristic()), frees_[i], characteristic());
  return out;
}

Rat GroupHom::lift_of(const FreePart& v) const {
  const auto co = base_.coordinates(v);
  Rat t(0);
  for (std::size_t i = 0; i < co.size(); ++i) t += co[i] * lifts_[i];
  return t;
}

FreePart GroupHom::free_of(const FreePart& v) const {
  const auto co = base_.coordinates(v);
  FreePart f;
  for (std::size_t i = 0; i < co.size(); ++i) f = free_axpy(f, co[i], frees_[i]);
  return f;
}

SymElement GroupHom::apply_base(const SymElement& x) const {
  if (x.characteristic() != characteristic())
    throw Error(ErrorKind::CharacteristicMismatch, "element and hom characteristics differ");
  if (!base_.contains_free(x.free())) throw Error(ErrorKind::OutsideDomain, "element outside C");
  const Rat t = torsion_.apply(x.torsion()) + prime_to_p_part(lift_of(x.free()), characteristic());
  return SymElement(t, free_of(x.free()), characteristic());
}

bool GroupHom::in_domain(const SymElement& x) const {
  return x.characteristic() == characteristic() && decompose(base_, gens_, x).has_value();
}

SymElement GroupHom::apply(const SymElement& x) const {
  if (x.characteristic() != characteristic())
    throw Error(ErrorKind::CharacteristicMismatch, "element and hom characteristics differ");
  const auto e = decompose(base_, gens_, x);
  if (!e) throw Error(ErrorKind::OutsideDomain, "element outside the domain");
  const SymElement c = mul(x, inv(power_product(gens_, *e, characteristic())));
  return mul(apply_base(c), power_product(images_, *e, characteristic()));
}

GroupHom GroupHom::restrict(const DivSubgroup& sub, const std::vector<SymElement>& gens) const {
  if (!base_.contains(sub)) throw Error(ErrorKind::InvalidArgument, "subgroup not contained in the base");
  std::vector<Rat> lifts;
  std::vector<FreePart> frees;
  for (const auto& w : sub.basis()) {
    lifts.push_back(lift_of(w));
    frees.push_back(free_of(w));
  }
  GroupHom h = with_lifts(sub, torsion_, lifts, frees);
  std::vector<SymElement> images;
  for (const auto& g : gens) images.push_back(apply(g));
  return h.adjoin(gens, images);
}

std::vector<Relation> relation_lattice(const DivSubgroup& c, const std::vector<SymElement>& gens) {
  const Characteristic p = c.characteristic();
  check_char(p, gens);
  std::vector<FreePart> reduced;
  for (const auto& g : gens) reduced.push_back(c.reduce(g.free()));
  const auto symbols = symbols_of(reduced);
  std::vector<IntVector> kernel;
  if (symbols.empty()) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      IntVector e(gens.size());
      e[j] = 1;
      kernel.push_back(e);
    }
  } else if (!gens.empty()) {
    std::vector<RatVector> rows;
    for (const auto& f : reduced) rows.push_back(densify(f, symbols));
    kernel = left_kernel(IntMatrix::from_rows(clear_denominators(rows), symbols.size()));
  }
  std::vector<Relation> out;
  for (auto& e : kernel) out.push_back({inv(power_product(gens, e, p)), std::move(e)});
  return out;
}

bool verify_hom(const GroupHom& h, const std::vector<Relation>& relations) {
  for (const auto& rel : relations) {
    if (rel.exponents.size() != h.generators().size())
      throw Error(ErrorKind::DimensionMismatch, "relation length differs from the generator count");
    const SymElement v = mul(h.apply_base(rel.constant),
                             power_product(h.generator_images(), rel.exponents, h.characteristic()));
    if (!v.is_identity()) return false;
  }
  return true;
}

DivSubgroup image_subgroup(const GroupHom& h) { return DivSubgroup::span(h.characteristic(), h.frees()); }

CompleteSystem transport(const CompleteSystem& tau, const GroupHom& theta) {
  return transport(tau, [&theta](const SymElement& c) { return theta.apply_base(c); });
}

namespace {

void require_base_only(const GroupHom& theta) {
  if (!theta.generators().empty())
    throw Error(ErrorKind::InvalidArgument, "expected a homomorphism on a divisible subgroup");
}

}  // namespace

GroupHom extend_over_independent(const GroupHom& theta, const std::vector<SymElement>& a,
                                 const std::vector<SymElement>& a_img) {
  require_base_only(theta);
  if (a.size() != a_img.size()) throw Error(ErrorKind::DimensionMismatch, "one image per generator");
  if (!is_independent(theta.base(), a)) throw Error(ErrorKind::NotIndependent, "tuple is not independent over C");
  return theta.adjoin(a, a_img);
}

GroupHom extend_by_system(const GroupHom& theta, const CompleteSystem& tau, const std::vector<SymElement>& a,
                          const std::vector<SymElement>& b, const std::vector<SymElement>& a_img,
                          const std::vector<SymElement>& b_img) {
  require_base_only(theta);
  if (a.size() != a_img.size() || b.size() != b_img.size())
    throw Error(ErrorKind::DimensionMismatch, "one image per generator");
  const DivSubgroup& c = theta.base();
  if (!is_independent(c, a)) throw Error(ErrorKind::NotIndependent, "tuple is not independent over C");
  if (!verify_system(tau, c, a, b)) throw Error(ErrorKind::InvalidArgument, "system does not hold at (a; b)");
  if (!verify_system(transport(tau, theta), image_subgroup(theta), a_img, b_img))
    throw Error(ErrorKind::SystemViolated, "transported system fails at the images");
  std::vector<SymElement> gens = a, images = a_img;
  gens.insert(gens.end(), b.begin(), b.end());
  images.insert(images.end(), b_img.begin(), b_img.end());
  GroupHom h = theta.adjoin(gens, images);
  if (!verify_hom(h, relation_lattice(c, gens)))
    throw Error(ErrorKind::Internal, "extension violates a relation although the system holds");
  return h;
}

GroupHom product_extension(const GroupHom& theta_a, const GroupHom& theta_b, const DivSubgroup& d) {
  const Characteristic p = d.characteristic();
  if (theta_a.characteristic() != p || theta_b.characteristic() != p)
    throw Error(ErrorKind::CharacteristicMismatch, "homomorphisms and D differ in characteristic");
  if (!theta_a.base().contains(d) || !theta_b.base().contains(d))
    throw Error(ErrorKind::InvalidArgument, "D must lie in the divisible part of both domains");
  auto hull = [](const GroupHom& h) {
    std::vector<FreePart> more;
    for (const auto& g : h.generators()) more.push_back(g.free());
    return h.base().join(more);
  };
  if (intersection_dimension(hull(theta_a), hull(theta_b)) > d.dimension())
    throw Error(ErrorKind::IntersectionTooLarge, "the domains meet outside D");
  if (!(theta_a.torsion() == theta_b.torsion()))
    throw Error(ErrorKind::DisagreeOnBase, "different actions on roots of unity");
  for (const auto& w : d.basis())
    if (theta_a.lift_of(w) != theta_b.lift_of(w) || theta_a.free_of(w) != theta_b.free_of(w))
      throw Error(ErrorKind::DisagreeOnBase, "the homomorphisms differ on D");

  std::vector<FreePart> vectors = theta_a.base().basis();
  std::vector<Rat> lifts = theta_a.lifts();
  std::vector<FreePart> frees = theta_a.frees();
  vectors.insert(vectors.end(), theta_b.base().basis().begin(), theta_b.base().basis().end());
  lifts.insert(lifts.end(), theta_b.lifts().begin(), theta_b.lifts().end());
  frees.insert(frees.end(), theta_b.frees().begin(), theta_b.frees().end());
  GroupHom h = from_spanning(p, theta_a.torsion(), vectors, lifts, frees);

  std::vector<SymElement> gens = theta_a.generators(), images = theta_a.generator_images();
  gens.insert(gens.end(), theta_b.generators().begin(), theta_b.generators().end());
  images.insert(images.end(), theta_b.generator_images().begin(), theta_b.generator_images().end());
  h = h.adjoin(gens, images);
  if (!verify_hom(h, relation_lattice(h.base(), gens)))
    throw Error(ErrorKind::Internal, "product extension is not well defined");
  return h;
}

GroupHom extend_trivial(const GroupHom& theta, const std::vector<std::string>& ambient_symbols) {
  require_base_only(theta);
  std::set<std::string> ambient(ambient_symbols.begin(), ambient_symbols.end());
  for (const auto& s : symbols_of(theta.base().basis()))
    if (!ambient.count(s)) throw Error(ErrorKind::InvalidArgument, "ambient symbols must contain '" + s + "'");
  std::set<std::string> pivots(theta.base().pivots().begin(), theta.base().pivots().end());
  std::vector<FreePart> vectors = theta.base().basis();
  std::vector<Rat> lifts = theta.lifts();
  std::vector<FreePart> frees = theta.frees();
  for (const auto& s : ambient) {
    if (pivots.count(s)) continue;
    if (!is_valid_symbol(s)) throw Error(ErrorKind::InvalidArgument, "bad symbol name '" + s + "'");
    vectors.push_back({{s, Rat(1)}});
    lifts.emplace_back(0);
    frees.emplace_back();
  }
  return from_spanning(theta.characteristic(), theta.torsion(), vectors, lifts, frees);
}

}  // namespace mendo
