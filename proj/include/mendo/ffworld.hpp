#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mendo/intlinalg.hpp"
#include "mendo/intpoly.hpp"

namespace mendo {

/* Field element encoded as sum c_j p^j over the coefficients of its
 * representative modulo the defining polynomial. */
using Elem = std::uint32_t;

constexpr std::uint64_t kDefaultDlogLimit = std::uint64_t(1) << 20;

class FiniteFieldCtx {
 public:
  /* Throws NotPrime, InvalidArgument (k == 0), LimitExceeded (p^k - 1 > dlog_limit). */
  static FiniteFieldCtx build(std::uint64_t p, unsigned k, std::uint64_t dlog_limit = kDefaultDlogLimit);

  std::uint64_t p() const noexcept { return p_; }
  unsigned k() const noexcept { return k_; }
  std::uint64_t q() const noexcept { return q_; }
  /* q - 1 */
  std::uint64_t group_order() const noexcept { return q_ - 1; }
  /* monic, modulus()[j] is the coefficient of X^j */
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
  Elem generator() const noexcept { return exp_[q_ > 2 ? 1 : 0]; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  /* a^e; 0^0 = 1, 0^e = 0 for e > 0; throws for 0^e with e < 0 */
  Elem pow(Elem a, const Int& e) const;
  Elem from_int(const Int& n) const;
  /* g^i, i taken mod q - 1 */
  Elem gpow(const Int& i) const;
  /* throws InvalidArgument on 0 */
  std::uint64_t dlog(Elem a) const;
  bool contains(Elem a) const noexcept { return a < q_; }

  /* "0" or "g^i" */
  std::string format(Elem a) const;
  /* accepts "0", "g", "g^i" (i may be negative) or a decimal integer, read in the prime field */
  Elem parse(const std::string& s) const;

 private:
  std::uint64_t p_ = 0;
  unsigned k_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint64_t> modulus_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

bool is_prime(std::uint64_t n);

/* Endomorphism of the multiplicative group of the algebraic closure of F_p,
 * given at finitely many levels k by x -> x^{s_k} on F_{p^k}^x. */
class ExponentFamily {
 public:
  ExponentFamily() = default;
  /* Throws InvalidArgument when not divisor-closed, out of range or incompatible. */
  ExponentFamily(std::uint64_t p, std::map<unsigned, Int> residues);
  static ExponentFamily power_map(std::uint64_t p, const std::set<unsigned>& levels, const Int& n);

  std::uint64_t p() const noexcept { return p_; }
  const std::map<unsigned, Int>& residues() const noexcept { return residues_; }
  std::set<unsigned> levels() const;
  bool has_level(unsigned k) const { return residues_.count(k) != 0; }
  /* throws LevelMissing */
  const Int& residue(unsigned k) const;

  friend bool operator==(const ExponentFamily& a, const ExponentFamily& b) {
    return a.p_ == b.p_ && a.residues_ == b.residues_;
  }

 private:
  std::uint64_t p_ = 0;
  std::map<unsigned, Int> residues_;
};

/* p^k - 1 */
Int level_order(std::uint64_t p, unsigned k);

/* Residues lifted uniformly along divisibility, deterministic in seed. */
ExponentFamily random_endo(std::uint64_t p, const std::set<unsigned>& levels, std::uint64_t seed);

Elem endo_eval(const ExponentFamily& e, const FiniteFieldCtx& ctx, Elem x);

/* P(s_k) mod (p^k - 1) */
Int poly_exponent(const ExponentFamily& e, const IntPoly& poly, unsigned k);

struct KernelDesc {
  unsigned level;
  IntPoly poly;
  Int order;  // ker P(theta) at level k is mu_order
};
KernelDesc kernel_order(const ExponentFamily& e, const IntPoly& poly, unsigned k);

/* Nonzero elements of ker P(theta) at the level of ctx, by increasing dlog. */
std::vector<Elem> kernel_elements(const FiniteFieldCtx& ctx, const Int& order);

struct Coverage {
  std::uint64_t covered;
  std::uint64_t total;
  /* covered / total, reduced, as "a/b" */
  std::string fraction() const;
};
/* Throws ResourceLimit when |ker P| |ker Q| exceeds kMaxSumPairs. */
constexpr std::uint64_t kMaxSumPairs = 400000000;
Coverage kernel_sum_coverage(const FiniteFieldCtx& ctx, const ExponentFamily& e, const IntPoly& P, const IntPoly& Q);

struct TorsionWitness {
  Elem zeta;
  Elem b;
  Elem a;
};
/* Throws InvalidArgument unless n | q - 1. */
std::optional<TorsionWitness> torsion_witness(const FiniteFieldCtx& ctx, const ExponentFamily& e, const Int& n);

unsigned cl_theta_degree(const std::vector<unsigned>& degrees);

using Point = std::vector<Elem>;

struct Freeness {
  bool free;
  std::optional<IntVector> witness;
};
Freeness freeness_at_level(const FiniteFieldCtx& ctx, const std::vector<Point>& points);

/* Generators of {k : k.v = 0 mod m for all v in l}; l must contain m Z^n.
 * Entries are reduced into (-m/2, m/2] except for rows that vanish mod m. */
std::vector<IntVector> subgroup_characters(const Lattice& l, const Int& m);

/* Pi_m(X) = {x_1 ... x_m : x_i in X}, sorted by dlog; 1 must be in X. */
std::vector<Elem> pi_m_closure(const FiniteFieldCtx& ctx, const std::vector<Elem>& x_set, std::size_t m);

/*
 * First (a_1..a_n) in member with P_i(theta)(a_i) = delta_i, searching each
 * coordinate in the order g^0, g^1, ... (0 never qualifies).
 */
std::optional<Point> generic_kernel_probe(const FiniteFieldCtx& ctx, const ExponentFamily& e,
                                          const std::function<bool(const Point&)>& member,
                                          const std::vector<IntPoly>& polys, const std::vector<Elem>& deltas);
std::optional<Point> generic_kernel_probe(const FiniteFieldCtx& ctx, const ExponentFamily& e,
                                          const std::vector<Point>& y_set, const std::vector<IntPoly>& polys,
                                          const std::vector<Elem>& deltas);

}  // namespace mendo
