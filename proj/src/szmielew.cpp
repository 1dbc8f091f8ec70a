#include "mendo/szmielew.hpp"

#include "mendo/error.hpp"
#include "mendo/ffworld.hpp"

namespace mendo {

namespace {

GroupSize prime_power(std::uint64_t p, const Cardinal& e) {
  if (e.omega) return std::nullopt;
  Int r;
  mpz_pow_ui(r.get_mpz_t(), Int(p).get_mpz_t(), e.value.get_ui());
  return r;
}

Cardinal kappa_sum(const PrimeData& d) {
  Cardinal s;
  for (const auto& [n, k] : d.kappa) s = s + k;
  return s;
}

/* least prime > cursor not in avoid; advances cursor */
std::uint64_t next_prime_outside(const std::set<std::uint64_t>& avoid, std::uint64_t& cursor) {
  std::uint64_t c = cursor + 1;
  while (!is_prime(c) || avoid.count(c)) ++c;
  cursor = c;
  return c;
}

Int ipow(std::uint64_t p, unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

}  // namespace

void SzmielewInvariants::validate() const {
  if (!(epsilon.omega || epsilon.value == 0))
    throw Error(ErrorKind::InvalidArgument, "epsilon must be 0 or omega");
  for (const auto& [p, d] : primes) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    for (const auto& [n, k] : d.kappa) {
      if (n == 0) throw Error(ErrorKind::InvalidArgument, "Z(p^0) summand");
      if (!k.omega && sgn(k.value) < 0) throw Error(ErrorKind::InvalidArgument, "negative multiplicity");
    }
    for (const Cardinal* c : {&d.lambda, &d.nu})
      if (!c->omega && sgn(c->value) < 0) throw Error(ErrorKind::InvalidArgument, "negative multiplicity");
  }
}

SzmielewInvariants SzmielewInvariants::cyclic(std::uint64_t m) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "cyclic order must be positive");
  SzmielewInvariants g;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    unsigned long e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) g.primes[p].kappa[e] = Cardinal::finite(1);
  }
  if (m > 1) g.primes[m].kappa[1] = Cardinal::finite(1);
  return g;
}

LocalSizes p_local_sizes(const SzmielewInvariants& g, std::uint64_t p) {
  auto it = g.primes.find(p);
  if (it == g.primes.end()) return {Int(1), Int(1)};
  const Cardinal k = kappa_sum(it->second);
  return {prime_power(p, k + it->second.lambda), prime_power(p, k + it->second.nu)};
}

PsfcVerdict psfc_check(const SzmielewInvariants& g) {
  g.validate();
  PsfcVerdict v{true, std::nullopt, {}};
  for (const auto& [p, d] : g.primes) {
    const auto s = p_local_sizes(g, p);
    v.sizes[p] = s;
    const bool ok = s.torsion && s.quotient && *s.torsion == *s.quotient && *s.torsion <= Int(p);
    if (!ok && v.passes) {
      v.passes = false;
      v.failing_prime = p;
    }
  }
  return v;
}

Classification classify(const SzmielewInvariants& g) {
  const auto v = psfc_check(g);
  if (!v.passes)
    throw Error(ErrorKind::CriterionFails, "criterion fails at p = " + std::to_string(*v.failing_prime));
  Classification c;
  c.epsilon = g.epsilon;
  for (const auto& [p, d] : g.primes) {
    if (!d.lambda.is_zero()) {
      c.q.insert(p);
      continue;
    }
    for (const auto& [n, k] : d.kappa)
      if (!k.is_zero()) c.alpha[p] = n;
  }
  // only finitely many primes can be listed, so P is finite here
  c.epsilon0 = c.q.empty() ? Cardinal::countable() : Cardinal::finite(0);
  return c;
}

WitnessFactors witness_factors(const SzmielewInvariants& g, unsigned long n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "index must be positive");
  const auto c = classify(g);
  WitnessFactors w{Int(1), {}};
  std::set<std::uint64_t> used;
  auto push = [&](std::uint64_t p, unsigned long e) {
    if (!used.insert(p).second) throw Error(ErrorKind::Internal, "witness summands share a prime");
    const Int s = ipow(p, e);
    w.summands.push_back(s);
    w.order *= s;
  };
  if (c.alpha.empty() && c.q.empty()) {
    // G is elementarily equivalent to Q^epsilon: Z(s_n) for epsilon = omega, 0 otherwise
    if (c.epsilon.omega) {
      std::uint64_t cursor = 1, s = 0;
      for (unsigned long i = 0; i < n; ++i) s = next_prime_outside({}, cursor);
      push(s, 1);
    }
    return w;
  }
  for (const auto& [p, a] : c.alpha) push(p, a);
  if (c.q.empty()) {
    std::set<std::uint64_t> avoid;
    for (const auto& [p, a] : c.alpha) avoid.insert(p);
    std::uint64_t cursor = 1;
    for (unsigned long i = 0; i < n; ++i) push(next_prime_outside(avoid, cursor), n);
  }
  for (std::uint64_t q : c.q) push(q, n);
  for (std::size_t i = 0; i < w.summands.size(); ++i)
    for (std::size_t j = i + 1; j < w.summands.size(); ++j)
      if (gcd(w.summands[i], w.summands[j]) != 1) throw Error(ErrorKind::Internal, "witness summands not coprime");
  return w;
}

}  // namespace mendo
