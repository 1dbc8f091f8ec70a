#include "mendo/ffworld.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "mendo/error.hpp"

namespace mendo {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Poly = std::vector<u64>;  // over F_p, little-endian, trimmed

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 inv_mod(u64 a, u64 p) { return powmod(a, p - 2, p); }

/* a mod f for monic f */
void reduce(Poly& a, const Poly& f, u64 p) {
  const std::size_t d = f.size() - 1;
  trim(a);
  while (a.size() > d) {
    const u64 c = a.back();
    const std::size_t shift = a.size() - 1 - d;
    for (std::size_t j = 0; j < d; ++j) a[shift + j] = (a[shift + j] + p - mulmod(c, f[j], p)) % p;
    a.pop_back();
    trim(a);
  }
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  reduce(r, f, p);
  return r;
}

Poly pow_mod(Poly a, u64 e, const Poly& f, u64 p) {
  Poly r{1};
  reduce(r, f, p);
  reduce(a, f, p);
  while (e) {
    if (e & 1) r = mul_mod(r, a, f, p);
    a = mul_mod(a, a, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b, b made monic first
    const u64 li = inv_mod(b.back(), p);
    for (auto& c : b) c = mulmod(c, li, p);
    reduce(a, b, p);
    std::swap(a, b);
  }
  return a;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/* Rabin: f irreducible iff X^{p^k} = X mod f and gcd(X^{p^{k/r}} - X, f) = 1 for primes r | k */
bool irreducible(const Poly& f, u64 p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  const Poly x{0, 1};
  auto frob_iter = [&](unsigned times) {
    Poly y = x;
    reduce(y, f, p);
    for (unsigned i = 0; i < times; ++i) y = pow_mod(y, p, f, p);
    return y;
  };
  Poly xr = x;
  reduce(xr, f, p);
  auto minus_x = [&](Poly y) {
    if (y.size() < xr.size()) y.resize(xr.size(), 0);
    for (std::size_t i = 0; i < xr.size(); ++i) y[i] = (y[i] + p - xr[i]) % p;
    trim(y);
    return y;
  };
  if (!minus_x(frob_iter(k)).empty()) return false;
  for (u64 r : prime_factors(k)) {
    const Poly g = poly_gcd(f, minus_x(frob_iter(static_cast<unsigned>(k / r))), p);
    if (g.size() != 1) return false;
  }
  return true;
}

Poly decode(Elem a, u64 p) {
  Poly out;
  u64 v = a;
  while (v) {
    out.push_back(v % p);
    v /= p;
  }
  return out;
}

Elem encode(const Poly& a, u64 p) {
  u64 v = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * p + *it;
  return static_cast<Elem>(v);
}

u64 to_u64(const Int& x) {
  if (sgn(x) < 0 || !x.fits_ulong_p()) throw Error(ErrorKind::Internal, "value out of range");
  return x.get_ui();
}

void check_poly(const IntPoly& poly) {
  if (poly.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "P(theta) needs a nonzero polynomial");
}

Int reduce_signed(const Int& x, const Int& m) {
  Int r = mod_floor(x, m);
  if (2 * r > m) r -= m;
  return r;
}

bool vanishes_mod(const IntVector& v, const Int& m) {
  for (const auto& x : v)
    if (mod_floor(x, m) != 0) return false;
  return true;
}

/* {k : k.v = 0 mod m for v in rows of h} via the left kernel of [h^T ; -m I]. */
std::vector<IntVector> dual_rows(const IntMatrix& h, std::size_t n, const Int& m) {
  IntMatrix stacked(n + n, h.rows());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) stacked(j, i) = h(i, j);
  std::vector<IntVector> gens;
  if (h.rows() == 0) {
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n);
      e[i] = 1;
      gens.push_back(e);
    }
  } else {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < h.rows(); ++i) stacked(n + j, i) = (i == j ? Int(-m) : Int(0));
    // only the first n coordinates of each kernel vector matter
    for (const auto& v : left_kernel(stacked)) gens.emplace_back(v.begin(), v.begin() + n);
  }
  const auto dual = Lattice::from_generators(n, gens);
  return dual.basis().row_list();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % d == 0) return n == d;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FiniteFieldCtx FiniteFieldCtx::build(std::uint64_t p, unsigned k, std::uint64_t dlog_limit) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
  const u64 cap = std::min<u64>(dlog_limit, std::numeric_limits<Elem>::max() - 1);
  u64 q = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q > (cap + 1) / p) throw Error(ErrorKind::LimitExceeded, "p^k - 1 exceeds the dlog table limit");
    q *= p;
  }
  if (q - 1 > cap) throw Error(ErrorKind::LimitExceeded, "p^k - 1 exceeds the dlog table limit");

  FiniteFieldCtx ctx;
  ctx.p_ = p;
  ctx.k_ = k;
  ctx.q_ = q;
  // lower coefficients enumerated with c_{k-1} most significant
  for (u64 low = 0; low < q; ++low) {
    Poly f = decode(static_cast<Elem>(low), p);
    f.resize(k, 0);
    f.push_back(1);
    if (irreducible(f, p)) {
      ctx.modulus_ = f;
      break;
    }
  }
  if (ctx.modulus_.empty()) throw Error(ErrorKind::Internal, "no irreducible polynomial found");

  const u64 order = q - 1;
  const auto primes = prime_factors(order);
  Elem g = 0;
  for (u64 cand = 1; cand < q; ++cand) {
    const Poly c = decode(static_cast<Elem>(cand), p);
    bool primitive = true;
    for (u64 r : primes) {
      if (pow_mod(c, order / r, ctx.modulus_, p) == Poly{1}) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = static_cast<Elem>(cand);
      break;
    }
  }
  if (g == 0) throw Error(ErrorKind::Internal, "no primitive element found");

  ctx.exp_.resize(order);
  ctx.log_.assign(q, 0);
  const Poly gp = decode(g, p);
  Poly cur{1};
  for (u64 i = 0; i < order; ++i) {
    const Elem e = encode(cur, p);
    ctx.exp_[i] = e;
    ctx.log_[e] = static_cast<std::uint32_t>(i);
    cur = mul_mod(cur, gp, ctx.modulus_, p);
  }
  if (encode(cur, p) != 1) throw Error(ErrorKind::Internal, "generator order check failed");
  return ctx;
}

Elem FiniteFieldCtx::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  u64 x = a, y = b, out = 0, place = 1;
  while (x || y) {
    out += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return static_cast<Elem>(out);
}

Elem FiniteFieldCtx::neg(Elem a) const {
  if (p_ == 2) return a;
  u64 x = a, out = 0, place = 1;
  while (x) {
    out += ((p_ - x % p_) % p_) * place;
    x /= p_;
    place *= p_;
  }
  return static_cast<Elem>(out);
}

Elem FiniteFieldCtx::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  const u64 m = q_ - 1;
  return exp_[(static_cast<u64>(log_[a]) + log_[b]) % m];
}

Elem FiniteFieldCtx::pow(Elem a, const Int& e) const {
  if (a == 0) {
    if (sgn(e) < 0) throw Error(ErrorKind::InvalidArgument, "0 has no inverse");
    return sgn(e) == 0 ? 1 : 0;
  }
  return gpow(Int(log_[a]) * e);
}

Elem FiniteFieldCtx::from_int(const Int& n) const { return static_cast<Elem>(to_u64(mod_floor(n, Int(p_)))); }

Elem FiniteFieldCtx::gpow(const Int& i) const { return exp_[to_u64(mod_floor(i, Int(q_ - 1)))]; }

std::uint64_t FiniteFieldCtx::dlog(Elem a) const {
  if (a == 0 || a >= q_) throw Error(ErrorKind::InvalidArgument, "dlog of zero or non-element");
  return log_[a];
}

std::string FiniteFieldCtx::format(Elem a) const {
  if (a == 0) return "0";
  return "g^" + std::to_string(dlog(a));
}

Elem FiniteFieldCtx::parse(const std::string& s) const {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw Error(ErrorKind::InvalidArgument, "empty field element");
  try {
    if (t == "g") return gpow(Int(1));
    if (t.rfind("g^", 0) == 0) return gpow(Int(t.substr(2)));
    return from_int(Int(t));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::InvalidArgument, "bad field element '" + s + "'");
  }
}

// ---------------------------------------------------------------------------

Int level_order(std::uint64_t p, unsigned k) {
  Int q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, k);
  return q - 1;
}

namespace {

void check_levels(const std::set<unsigned>& levels) {
  for (unsigned k : levels) {
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "level 0");
    for (unsigned d = 1; d < k; ++d)
      if (k % d == 0 && !levels.count(d))
        throw Error(ErrorKind::InvalidArgument,
                    "levels not divisor-closed: " + std::to_string(d) + " | " + std::to_string(k) + " missing");
  }
}

}  // namespace

ExponentFamily::ExponentFamily(std::uint64_t p, std::map<unsigned, Int> residues)
    : p_(p), residues_(std::move(residues)) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  check_levels(levels());
  for (const auto& [k, s] : residues_) {
    const Int m = level_order(p, k);
    if (sgn(s) < 0 || s >= m)
      throw Error(ErrorKind::InvalidArgument, "residue at level " + std::to_string(k) + " out of range");
    for (unsigned j = 1; j < k; ++j) {
      if (k % j) continue;
      if (mod_floor(s - residues_.at(j), level_order(p, j)) != 0)
        throw Error(ErrorKind::InvalidArgument,
                    "residues at levels " + std::to_string(j) + " and " + std::to_string(k) + " incompatible");
    }
  }
}

ExponentFamily ExponentFamily::power_map(std::uint64_t p, const std::set<unsigned>& levels, const Int& n) {
  check_levels(levels);
  std::map<unsigned, Int> r;
  for (unsigned k : levels) r[k] = mod_floor(n, level_order(p, k));
  return ExponentFamily(p, std::move(r));
}

std::set<unsigned> ExponentFamily::levels() const {
  std::set<unsigned> out;
  for (const auto& [k, s] : residues_) out.insert(k);
  return out;
}

const Int& ExponentFamily::residue(unsigned k) const {
  auto it = residues_.find(k);
  if (it == residues_.end()) throw Error(ErrorKind::LevelMissing, "level " + std::to_string(k) + " not in the family");
  return it->second;
}

ExponentFamily random_endo(std::uint64_t p, const std::set<unsigned>& levels, std::uint64_t seed) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  check_levels(levels);
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(seed);
  std::map<unsigned, Int> res;
  for (unsigned k : levels) {
    const Int m = level_order(p, k);
    Int r = 0, l = 1;
    for (unsigned j = 1; j < k; ++j) {
      if (k % j) continue;
      const Int mj = level_order(p, j);
      const Int g = gcd(l, mj);
      const Int diff = res.at(j) - r;
      if (mod_floor(diff, g) != 0) throw Error(ErrorKind::Internal, "incompatible lower residues");
      const Int mg = mj / g;
      Int inv;
      if (mg == 1) {
        inv = 0;
      } else {
        const Int lg = mod_floor(l / g, mg);
        mpz_invert(inv.get_mpz_t(), lg.get_mpz_t(), mg.get_mpz_t());
      }
      r = mod_floor(r + l * mod_floor((diff / g) * inv, mg), l * mg);
      l *= mg;
    }
    if (mod_floor(m, l) != 0) throw Error(ErrorKind::Internal, "lift modulus does not divide p^k - 1");
    Int u = rng.get_z_range(Int(m / l));
    res[k] = r + l * u;
  }
  return ExponentFamily(p, std::move(res));
}

Elem endo_eval(const ExponentFamily& e, const FiniteFieldCtx& ctx, Elem x) {
  if (e.p() != ctx.p()) throw Error(ErrorKind::CharacteristicMismatch, "family and field differ in p");
  const Int& s = e.residue(ctx.k());
  if (!ctx.contains(x)) throw Error(ErrorKind::InvalidArgument, "not a field element");
  if (x == 0) return 0;
  return ctx.pow(x, s);
}

Int poly_exponent(const ExponentFamily& e, const IntPoly& poly, unsigned k) {
  const Int& s = e.residue(k);
  return poly.eval_mod(s, level_order(e.p(), k));
}

KernelDesc kernel_order(const ExponentFamily& e, const IntPoly& poly, unsigned k) {
  check_poly(poly);
  const Int v = poly_exponent(e, poly, k);
  return {k, poly, gcd(v, level_order(e.p(), k))};
}

std::vector<Elem> kernel_elements(const FiniteFieldCtx& ctx, const Int& order) {
  const u64 m = ctx.group_order();
  const u64 d = to_u64(order);
  if (d == 0 || m % d) throw Error(ErrorKind::InvalidArgument, "kernel order must divide q - 1");
  std::vector<Elem> out;
  out.reserve(d);
  for (u64 j = 0; j < d; ++j) out.push_back(ctx.gpow(Int(j * (m / d))));
  return out;
}

std::string Coverage::fraction() const {
  const Rat r = make_rat(Int(covered), Int(total));
  return Int(r.get_num()).get_str() + "/" + Int(r.get_den()).get_str();
}

Coverage kernel_sum_coverage(const FiniteFieldCtx& ctx, const ExponentFamily& e, const IntPoly& P,
                             const IntPoly& Q) {
  check_poly(P);
  check_poly(Q);
  const u64 m = ctx.group_order();
  const u64 dp = to_u64(kernel_order(e, P, ctx.k()).order);
  const u64 dq = to_u64(kernel_order(e, Q, ctx.k()).order);
  const u64 q = ctx.q();
  // a whole-group kernel plus K misses x only when K = {x}
  if (dp == m || dq == m) {
    const u64 other = dp == m ? dq : dp;
    return {other >= 2 ? q : q - 1, q};
  }
  if (static_cast<u128>(dp) * dq > kMaxSumPairs)
    throw Error(ErrorKind::ResourceLimit, "kernel sum enumeration too large");
  const auto kp = kernel_elements(ctx, Int(dp));
  const auto kq = kernel_elements(ctx, Int(dq));
  std::vector<char> hit(q, 0);
  u64 covered = 0;
  for (Elem a : kp)
    for (Elem b : kq) {
      const Elem s = ctx.add(a, b);
      if (!hit[s]) {
        hit[s] = 1;
        ++covered;
      }
    }
  return {covered, q};
}

std::optional<TorsionWitness> torsion_witness(const FiniteFieldCtx& ctx, const ExponentFamily& e, const Int& n) {
  const Int m(ctx.group_order());
  if (sgn(n) <= 0 || mod_floor(m, n) != 0)
    throw Error(ErrorKind::InvalidArgument, "n must divide q - 1");
  if (n == 1) return TorsionWitness{1, 1, 1};
  const Int s = e.residue(ctx.k());
  const Int g = gcd(s, m);
  const Int step = m / n;
  for (Int j = 1; j < n; ++j) {
    if (gcd(j, n) != 1) continue;
    const Int target = step * j;
    if (mod_floor(target, g) != 0) continue;
    // s x = target mod m, smallest x >= 0
    const Int mg = m / g;
    Int x = 0;
    if (mg != 1) {
      Int inv;
      const Int sg = mod_floor(s / g, mg);
      mpz_invert(inv.get_mpz_t(), sg.get_mpz_t(), mg.get_mpz_t());
      x = mod_floor((target / g) * inv, mg);
    }
    const Elem b = ctx.gpow(x);
    TorsionWitness w{ctx.gpow(target), b, ctx.pow(b, n)};
    if (endo_eval(e, ctx, w.b) != w.zeta || endo_eval(e, ctx, w.a) != 1)
      throw Error(ErrorKind::Internal, "torsion witness self-check failed");
    return w;
  }
  return std::nullopt;
}

unsigned cl_theta_degree(const std::vector<unsigned>& degrees) {
  Int l = 1;
  for (unsigned d : degrees) {
    if (d == 0) throw Error(ErrorKind::InvalidArgument, "degree 0");
    l = lcm(l, Int(d));
  }
  if (!l.fits_uint_p()) throw Error(ErrorKind::ResourceLimit, "degree overflow");
  return static_cast<unsigned>(l.get_ui());
}

Freeness freeness_at_level(const FiniteFieldCtx& ctx, const std::vector<Point>& points) {
  if (points.empty()) throw Error(ErrorKind::InvalidArgument, "empty point set");
  const std::size_t n = points.front().size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "points of length 0");
  const Int m(ctx.group_order());
  std::vector<IntVector> gens;
  std::vector<u64> base;
  for (Elem c : points.front()) {
    if (c == 0) throw Error(ErrorKind::InvalidArgument, "point with zero coordinate");
    base.push_back(ctx.dlog(c));
  }
  for (const auto& x : points) {
    if (x.size() != n) throw Error(ErrorKind::DimensionMismatch, "points of different length");
    IntVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) throw Error(ErrorKind::InvalidArgument, "point with zero coordinate");
      v[i] = mod_floor(Int(ctx.dlog(x[i])) - Int(base[i]), m);
    }
    gens.push_back(v);
  }
  for (std::size_t i = 0; i < n; ++i) {
    IntVector v(n);
    v[i] = m;
    gens.push_back(v);
  }
  const auto l = Lattice::from_generators(n, gens);
  if (l.index() == 1) return {true, std::nullopt};
  for (const auto& row : dual_rows(l.basis(), n, m)) {
    if (vanishes_mod(row, m)) continue;
    IntVector w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = reduce_signed(row[i], m);
    return {false, w};
  }
  throw Error(ErrorKind::Internal, "proper lattice without a dual witness");
}

std::vector<IntVector> subgroup_characters(const Lattice& l, const Int& m) {
  const std::size_t n = l.ambient_rank();
  if (sgn(m) <= 0) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
  for (std::size_t i = 0; i < n; ++i) {
    IntVector v(n);
    v[i] = m;
    if (!l.contains(v)) throw Error(ErrorKind::InvalidArgument, "lattice does not contain (q-1)Z^n");
  }
  std::vector<IntVector> out;
  for (const auto& row : dual_rows(l.basis(), n, m)) {
    if (vanishes_mod(row, m)) {
      out.push_back(row);
      continue;
    }
    IntVector w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = reduce_signed(row[i], m);
    out.push_back(w);
  }
  return out;
}

std::vector<Elem> pi_m_closure(const FiniteFieldCtx& ctx, const std::vector<Elem>& x_set, std::size_t m) {
  if (std::find(x_set.begin(), x_set.end(), Elem(1)) == x_set.end())
    throw Error(ErrorKind::InvalidArgument, "identity missing from the set");
  const u64 order = ctx.group_order();
  std::vector<u64> logs;
  for (Elem x : x_set) logs.push_back(ctx.dlog(x));
  std::sort(logs.begin(), logs.end());
  logs.erase(std::unique(logs.begin(), logs.end()), logs.end());
  std::vector<char> cur(order, 0);
  cur[0] = 1;
  for (std::size_t step = 0; step < m; ++step) {
    std::vector<char> next(order, 0);
    for (u64 a = 0; a < order; ++a) {
      if (!cur[a]) continue;
      for (u64 b : logs) next[(a + b) % order] = 1;
    }
    if (next == cur) break;
    cur.swap(next);
  }
  std::vector<Elem> out;
  for (u64 a = 0; a < order; ++a)
    if (cur[a]) out.push_back(ctx.gpow(Int(a)));
  return out;
}

namespace {

std::vector<std::vector<Elem>> probe_fibers(const FiniteFieldCtx& ctx, const ExponentFamily& e,
                                            const std::vector<IntPoly>& polys, const std::vector<Elem>& deltas) {
  if (polys.size() != deltas.size()) throw Error(ErrorKind::DimensionMismatch, "polys and deltas differ in length");
  const Int m(ctx.group_order());
  std::vector<std::vector<Elem>> fibers;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    check_poly(polys[i]);
    std::vector<Elem> fiber;
    if (deltas[i] != 0) {
      const Int v = poly_exponent(e, polys[i], ctx.k());
      const Int d(ctx.dlog(deltas[i]));
      for (Int j = 0; j < m; ++j)
        if (mod_floor(v * j - d, m) == 0) fiber.push_back(ctx.gpow(j));
    }
    fibers.push_back(std::move(fiber));
  }
  return fibers;
}

}  // namespace

std::optional<Point> generic_kernel_probe(const FiniteFieldCtx& ctx, const ExponentFamily& e,
                                          const std::function<bool(const Point&)>& member,
                                          const std::vector<IntPoly>& polys, const std::vector<Elem>& deltas) {
  const auto fibers = probe_fibers(ctx, e, polys, deltas);
  for (const auto& f : fibers)
    if (f.empty()) return std::nullopt;
  const std::size_t n = fibers.size();
  std::vector<std::size_t> idx(n, 0);
  Point pt(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) pt[i] = fibers[i][idx[i]];
    if (member(pt)) return pt;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++idx[i] < fibers[i].size()) break;
      idx[i] = 0;
      if (i == 0) return std::nullopt;
    }
    if (n == 0) return std::nullopt;
  }
}

std::optional<Point> generic_kernel_probe(const FiniteFieldCtx& ctx, const ExponentFamily& e,
                                          const std::vector<Point>& y_set, const std::vector<IntPoly>& polys,
                                          const std::vector<Elem>& deltas) {
  const auto fibers = probe_fibers(ctx, e, polys, deltas);
  const std::size_t n = fibers.size();
  std::optional<Point> best;
  auto key = [&](const Point& pt) {
    std::vector<u64> k;
    for (Elem a : pt) k.push_back(ctx.dlog(a));
    return k;
  };
  for (const auto& pt : y_set) {
    if (pt.size() != n) throw Error(ErrorKind::DimensionMismatch, "point arity differs from the polynomial list");
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      ok = pt[i] != 0 && std::binary_search(fibers[i].begin(), fibers[i].end(), pt[i], [&](Elem a, Elem b) {
        return ctx.dlog(a) < ctx.dlog(b);
      });
    if (ok && (!best || key(pt) < key(*best))) best = pt;
  }
  return best;
}

}  // namespace mendo
