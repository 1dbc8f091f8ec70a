#pragma once

#include <functional>
#include <map>
#include <vector>

#include "mendo/intpoly.hpp"
#include "mendo/symgroup.hpp"

namespace mendo {

/* (y^k)^N = c * x^l */
struct MinimalEquation {
  IntVector k;
  Int N;
  IntVector l;
  SymElement c;

  friend bool operator==(const MinimalEquation& a, const MinimalEquation& b) {
    return a.k == b.k && a.N == b.N && a.l == b.l && a.c == b.c;
  }
};

struct CompleteSystem {
  std::size_t r = 0;
  std::size_t t = 0;
  IntVector orders;
  /* keyed by k, lexicographic */
  std::map<IntVector, MinimalEquation> equations;

  bool is_trivial() const;
  const MinimalEquation& at(const IntVector& k) const;

  friend bool operator==(const CompleteSystem& a, const CompleteSystem& b) {
    return a.r == b.r && a.t == b.t && a.orders == b.orders && a.equations == b.equations;
  }
};

/* A system together with an arrangement of its r + t variables:
 * variable i of the ambient tuple is perm[i] of (x; y). */
struct MVariety {
  CompleteSystem system;
  std::vector<std::size_t> permutation;
};
MVariety make_mvariety(CompleteSystem system, std::vector<std::size_t> permutation);
/* (x; y) -> ambient order */
std::vector<SymElement> arrange(const MVariety& v, const std::vector<SymElement>& a,
                                const std::vector<SymElement>& b);

constexpr std::size_t kMaxExponentSet = 1000000;

/* {k : 0 <= k_i <= n_i, gcd(k) = 1} in lexicographic order.
 * Throws ResourceLimit when prod (n_i + 1) exceeds kMaxExponentSet. */
std::vector<IntVector> exponent_set(const IntVector& orders);

/* prod b_i^{k_i} */
SymElement power_product(const std::vector<SymElement>& b, const IntVector& k, Characteristic p);

CompleteSystem compute_system(const DivSubgroup& c, const std::vector<SymElement>& a,
                              const std::vector<SymElement>& b);

/* Structural problems throw MalformedSystem; false means some equation does
 * not hold at (a; b) or a constant lies outside C. */
bool verify_system(const CompleteSystem& tau, const DivSubgroup& c, const std::vector<SymElement>& a,
                   const std::vector<SymElement>& b);

/* Replaces every constant by f(constant). */
CompleteSystem transport(const CompleteSystem& tau, const std::function<SymElement(const SymElement&)>& f);

/* b_i^n = c * x^l * prod_{j<i} b_j^{m_j}, with 0 <= m_j < n_j */
struct PresentationEquation {
  Int n;
  IntVector l;
  IntVector m;
  SymElement c;

  friend bool operator==(const PresentationEquation& a, const PresentationEquation& b) {
    return a.n == b.n && a.l == b.l && a.m == b.m && a.c == b.c;
  }
};

std::vector<PresentationEquation> minimal_presentation(const CompleteSystem& tau, const DivSubgroup& c,
                                                       const std::vector<SymElement>& a,
                                                       const std::vector<SymElement>& b);

/* A realisation of the presentation, solving each equation for b_i along the
 * canonical branch.  It has the same type as the original b over <C a>. */
std::vector<SymElement> realise_presentation(const std::vector<PresentationEquation>& pres,
                                             const std::vector<SymElement>& a, Characteristic p);

/* The n-th root of x whose torsion is scale_torsion(1/n, torsion(x)).  Unlike
 * canonical_nth_root this is defined for every n >= 1 in every
 * characteristic, since mu_inf has no p-torsion in characteristic p. */
SymElement branch_root(const SymElement& x, const Int& n);

struct NM {
  Int N;
  IntVector M;
};
/* N = min{x >= 1 : k_i | x l_i for all i}, M_i = N l_i / k_i. */
NM compute_NM(const IntVector& k, const IntVector& l);

struct AlphaSystem {
  CompleteSystem system;
  std::vector<IntPoly> polys;      // content removed, positive leading coefficient
  std::vector<SymElement> deltas;  // adjusted to match
};

/*
 * The system generated by the equations
 *   z_{i,d_i}^{k_{i,d_i}} = delta_i * prod_{j<d_i} z_{i,j}^{-k_{i,j}}
 * for P_i = sum_j k_{i,j} X^j.  Variables: y_i = z_{i,d_i}; x = (z_{i,j})_{j<d_i},
 * ordered by i then j.
 */
AlphaSystem assemble_alpha_system(const std::vector<IntPoly>& polys, const std::vector<SymElement>& deltas);

}  // namespace mendo
