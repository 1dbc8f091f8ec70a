#pragma once

#include <map>
#include <vector>

#include "mendo/msystems.hpp"
#include "mendo/symgroup.hpp"

namespace mendo {

/*
 * Endomorphism of mu_inf.  Without a family it is t -> s t.  A family maps
 * denominators d to residues s_d (pairwise CRT compatible); t with
 * denominator b uses the first key d with b | d, and is outside the domain
 * when there is none.
 */
struct TorsionAction {
  Int s = 1;
  std::map<Int, Int> family;

  static TorsionAction exponent(const Int& s) { return {s, {}}; }
  /* Throws InvalidArgument when the residues are not compatible. */
  void validate() const;
  /* Throws OutsideDomain. */
  Rat apply(const Rat& t) const;

  friend bool operator==(const TorsionAction& a, const TorsionAction& b) {
    return a.s == b.s && a.family == b.family;
  }
};

/*
 * Homomorphism on <C g_1 ... g_m> for a divisible C.  On C it is
 *   (t, sum q_i v_i) -> (sigma(t) + [sum q_i T_i], sum q_i F_i)
 * where v_i = C.basis()[i], T_i is a rational lift of the torsion image of
 * v_i and [.] is the prime-to-p part mod 1.  The lifts make the map a
 * homomorphism on all of C (not just on Z v_i); by default T_i is the
 * torsion of the image, in [0,1).
 */
class GroupHom {
 public:
  GroupHom() = default;
  static GroupHom on_base(const DivSubgroup& c, TorsionAction torsion,
                          const std::vector<SymElement>& base_images);
  static GroupHom with_lifts(const DivSubgroup& c, TorsionAction torsion, std::vector<Rat> lifts,
                             std::vector<FreePart> frees);
  static GroupHom identity(const DivSubgroup& c);

  /* Adds generators with the given images without checking relations. */
  GroupHom adjoin(const std::vector<SymElement>& gens, const std::vector<SymElement>& images) const;

  Characteristic characteristic() const noexcept { return base_.characteristic(); }
  const DivSubgroup& base() const noexcept { return base_; }
  const TorsionAction& torsion() const noexcept { return torsion_; }
  const std::vector<Rat>& lifts() const noexcept { return lifts_; }
  const std::vector<FreePart>& frees() const noexcept { return frees_; }
  /* images of base().basis() */
  std::vector<SymElement> base_images() const;
  const std::vector<SymElement>& generators() const noexcept { return gens_; }
  const std::vector<SymElement>& generator_images() const noexcept { return images_; }

  /* lift and free image of an arbitrary vector of span(C) */
  Rat lift_of(const FreePart& v) const;
  FreePart free_of(const FreePart& v) const;

  bool in_domain(const SymElement& x) const;
  /* Throws OutsideDomain. */
  SymElement apply(const SymElement& x) const;
  /* Restriction to the base C; throws OutsideDomain. */
  SymElement apply_base(const SymElement& x) const;

  /* Same map on a smaller divisible subgroup with a subset of generators. */
  GroupHom restrict(const DivSubgroup& sub, const std::vector<SymElement>& gens = {}) const;

 private:
  DivSubgroup base_;
  TorsionAction torsion_;
  std::vector<Rat> lifts_;
  std::vector<FreePart> frees_;
  std::vector<SymElement> gens_;
  std::vector<SymElement> images_;
};

/* constant * prod g_j^{exponents_j} == 1 with constant in C */
struct Relation {
  SymElement constant;
  IntVector exponents;
};

/* Generators of all relations among gens over C. */
std::vector<Relation> relation_lattice(const DivSubgroup& c, const std::vector<SymElement>& gens);

bool verify_hom(const GroupHom& h, const std::vector<Relation>& relations);

/* Subgroup generated (divisibly) by the free images of the base. */
DivSubgroup image_subgroup(const GroupHom& h);

CompleteSystem transport(const CompleteSystem& tau, const GroupHom& theta);

GroupHom extend_over_independent(const GroupHom& theta, const std::vector<SymElement>& a,
                                 const std::vector<SymElement>& a_img);

GroupHom extend_by_system(const GroupHom& theta, const CompleteSystem& tau, const std::vector<SymElement>& a,
                          const std::vector<SymElement>& b, const std::vector<SymElement>& a_img,
                          const std::vector<SymElement>& b_img);

GroupHom product_extension(const GroupHom& theta_a, const GroupHom& theta_b, const DivSubgroup& d);

/* Extends theta by the identity-valued map on the symbols outside C. */
GroupHom extend_trivial(const GroupHom& theta, const std::vector<std::string>& ambient_symbols);

}  // namespace mendo
