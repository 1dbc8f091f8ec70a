#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mendo/intlinalg.hpp"

namespace mendo {

/* Coordinates of the torsion-free part: symbol name -> rational exponent.
 * Zero coefficients are never stored. */
using FreePart = std::map<std::string, Rat>;

using Characteristic = unsigned long;

bool is_valid_symbol(const std::string& name);

FreePart free_add(const FreePart& x, const FreePart& y);
/* x + s * y */
FreePart free_axpy(const FreePart& x, const Rat& s, const FreePart& y);
FreePart free_scale(const FreePart& x, const Rat& s);

/* Sorted union of the symbols occurring in parts. */
std::vector<std::string> symbols_of(const std::vector<FreePart>& parts);
RatVector densify(const FreePart& f, const std::vector<std::string>& symbols);
FreePart sparsify(const RatVector& v, const std::vector<std::string>& symbols);

/*
 * Element of the symbolic model mu_inf (+) V of a multiplicative group.
 *
 * The root of unity is stored additively as a rational in [0,1): torsion a/b
 * stands for the a-th power of a fixed primitive b-th root of unity.  The free
 * part is a finite Q-combination of named symbols.  In characteristic p the
 * torsion denominator is prime to p.
 */
class SymElement {
 public:
  explicit SymElement(Characteristic characteristic = 0);
  SymElement(Rat torsion, FreePart free, Characteristic characteristic = 0);

  static SymElement root_of_unity(const Rat& torsion, Characteristic characteristic = 0);
  static SymElement symbol(const std::string& name, const Rat& exponent = Rat(1),
                           Characteristic characteristic = 0);

  const Rat& torsion() const noexcept { return torsion_; }
  const FreePart& free() const noexcept { return free_; }
  Characteristic characteristic() const noexcept { return char_; }
  bool is_identity() const noexcept { return sgn(torsion_) == 0 && free_.empty(); }

  friend bool operator==(const SymElement& a, const SymElement& b) {
    return a.char_ == b.char_ && a.torsion_ == b.torsion_ && a.free_ == b.free_;
  }
  friend bool operator!=(const SymElement& a, const SymElement& b) { return !(a == b); }

 private:
  Rat torsion_;
  FreePart free_;
  Characteristic char_;
};

/* Reduces a rational into [0,1). */
Rat reduce_torsion(const Rat& t);

SymElement mul(const SymElement& x, const SymElement& y);
SymElement inv(const SymElement& x);
SymElement pow(const SymElement& x, const Int& n);
inline SymElement operator*(const SymElement& x, const SymElement& y) { return mul(x, y); }

struct NthRoot {
  SymElement root;
  Int count;  // number of n-th roots of x in the model
};

/* Root with torsion(x)/n and free(x)/n, i.e. shift j = 0 among the n roots.
 * Throws RootObstruction when p | n in characteristic p. */
NthRoot canonical_nth_root(const SymElement& x, const Int& n);

/* Image of r in the prime-to-p part of Q/Z (all of Q/Z in characteristic 0).
 * Additive in r. */
Rat prime_to_p_part(const Rat& r, Characteristic characteristic);

/*
 * q * t along the canonical branch of the homomorphism Q -> mu_inf sending 1
 * to t: the prime-to-p part of q t mod 1.  Any rational t is accepted; only
 * its value matters, not its class mod 1.
 */
Rat scale_torsion(const Rat& q, const Rat& t, Characteristic characteristic);

/* Divisible subgroup mu_inf (+) Q-span(basis).  The basis is kept in reduced
 * row echelon form over the sorted symbol list, so equality is structural. */
class DivSubgroup {
 public:
  explicit DivSubgroup(Characteristic characteristic = 0);
  static DivSubgroup span(Characteristic characteristic, const std::vector<FreePart>& generators);
  static DivSubgroup hull_of(Characteristic characteristic, const std::vector<SymElement>& elements);

  Characteristic characteristic() const noexcept { return char_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<FreePart>& basis() const noexcept { return basis_; }
  /* pivots()[i] is the leading symbol of basis()[i] */
  const std::vector<std::string>& pivots() const noexcept { return pivots_; }

  /* v minus its projection on the span; zero exactly on members. */
  FreePart reduce(const FreePart& v) const;
  bool contains_free(const FreePart& v) const { return reduce(v).empty(); }
  /* Coordinates of v in basis(); meaningful when contains_free(v). */
  RatVector coordinates(const FreePart& v) const;

  DivSubgroup join(const std::vector<FreePart>& more) const;
  bool contains(const DivSubgroup& other) const;

  friend bool operator==(const DivSubgroup& a, const DivSubgroup& b) {
    return a.char_ == b.char_ && a.basis_ == b.basis_;
  }

 private:
  Characteristic char_;
  std::vector<FreePart> basis_;
  std::vector<std::string> pivots_;
};

/* dim(A cap B) for the Q-spans of two subgroups. */
std::size_t intersection_dimension(const DivSubgroup& a, const DivSubgroup& b);

bool is_member_div(const DivSubgroup& c, const SymElement& x);
bool is_independent(const DivSubgroup& c, const std::vector<SymElement>& a);

/* Rational q with free(target) - sum q_j free(gens_j) in span(c); unique when
 * gens are independent over c. */
std::optional<RatVector> hull_coordinates(const DivSubgroup& c, const std::vector<FreePart>& gens,
                                          const FreePart& target);

struct OrderOver {
  Int n;            // order of b over <C a>
  IntVector l;      // b^n = cpart * prod a_j^{l_j}
  SymElement cpart;
};

/* Order of b over the (non-divisible) group <C a>, with the witnessing
 * minimal equation.  gcd(n, l) == 1 always holds. */
OrderOver order_over(const DivSubgroup& c, const std::vector<SymElement>& a, const SymElement& b);

}  // namespace mendo
