#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mendo/intlinalg.hpp"

namespace mendo {

/* 0, 1, 2, ... or omega; omega + n = omega. */
struct Cardinal {
  bool omega = false;
  Int value = 0;

  static Cardinal finite(const Int& n) { return {false, n}; }
  static Cardinal countable() { return {true, 0}; }
  bool is_zero() const { return !omega && value == 0; }
  std::string str() const { return omega ? "omega" : value.get_str(); }

  friend Cardinal operator+(const Cardinal& a, const Cardinal& b) {
    if (a.omega || b.omega) return countable();
    return finite(a.value + b.value);
  }
  friend bool operator==(const Cardinal& a, const Cardinal& b) {
    return a.omega == b.omega && (a.omega || a.value == b.value);
  }
};

/* p-part  (+)_n Z(p^n)^{kappa_n} (+) Z(p^inf)^lambda (+) Z_p^nu */
struct PrimeData {
  std::map<unsigned long, Cardinal> kappa;  // n >= 1
  Cardinal lambda;
  Cardinal nu;
};

/* Unlisted primes have all invariants zero; Q^epsilon with epsilon in {0, omega}. */
struct SzmielewInvariants {
  std::map<std::uint64_t, PrimeData> primes;
  Cardinal epsilon;

  /* Throws NotPrime, InvalidArgument. */
  void validate() const;
  /* Z(m) for m >= 1 */
  static SzmielewInvariants cyclic(std::uint64_t m);
};

/* nullopt = infinite */
using GroupSize = std::optional<Int>;

struct LocalSizes {
  GroupSize torsion;   // |G[p]|
  GroupSize quotient;  // |G/pG|
};
LocalSizes p_local_sizes(const SzmielewInvariants& g, std::uint64_t p);

struct PsfcVerdict {
  bool passes;
  std::optional<std::uint64_t> failing_prime;
  std::map<std::uint64_t, LocalSizes> sizes;  // listed primes
};
PsfcVerdict psfc_check(const SzmielewInvariants& g);

struct Classification {
  std::map<std::uint64_t, unsigned long> alpha;  // P: H_p = Z(p^alpha), alpha >= 1
  std::set<std::uint64_t> q;                      // Q: H_p = Z(p^inf) (+) Z_p
  Cardinal epsilon;                               // as given
  Cardinal epsilon0;                              // omega iff Q empty
};
/* Throws CriterionFails. */
Classification classify(const SzmielewInvariants& g);

struct WitnessFactors {
  Int order;
  std::vector<Int> summands;  // pairwise coprime cyclic orders
};
/* Order of F_n (+) K_n; n >= 1. */
WitnessFactors witness_factors(const SzmielewInvariants& g, unsigned long n);

}  // namespace mendo
