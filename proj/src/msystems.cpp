#include "mendo/msystems.hpp"

#include <algorithm>

#include "mendo/error.hpp"

namespace mendo {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedSystem, what); }

bool is_unit_vector(const IntVector& k, std::size_t* index) {
  std::size_t ones = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 1) {
      ++ones;
      *index = i;
    } else if (k[i] != 0) {
      return false;
    }
  }
  return ones == 1;
}

Characteristic common_char(const DivSubgroup& c, const std::vector<SymElement>& a,
                           const std::vector<SymElement>& b) {
  const Characteristic p = c.characteristic();
  for (const auto* v : {&a, &b})
    for (const auto& x : *v)
      if (x.characteristic() != p)
        throw Error(ErrorKind::CharacteristicMismatch, "element and subgroup characteristics differ");
  return p;
}

}  // namespace

bool CompleteSystem::is_trivial() const {
  return std::all_of(orders.begin(), orders.end(), [](const Int& n) { return n == 1; });
}

const MinimalEquation& CompleteSystem::at(const IntVector& k) const {
  auto it = equations.find(k);
  if (it == equations.end()) throw Error(ErrorKind::InvalidArgument, "exponent tuple not in the system");
  return it->second;
}

MVariety make_mvariety(CompleteSystem system, std::vector<std::size_t> permutation) {
  const std::size_t n = system.r + system.t;
  if (permutation.size() != n) throw Error(ErrorKind::InvalidArgument, "permutation has wrong length");
  std::vector<bool> seen(n);
  for (std::size_t v : permutation) {
    if (v >= n || seen[v]) throw Error(ErrorKind::InvalidArgument, "not a permutation");
    seen[v] = true;
  }
  return {std::move(system), std::move(permutation)};
}

std::vector<SymElement> arrange(const MVariety& v, const std::vector<SymElement>& a,
                                const std::vector<SymElement>& b) {
  if (a.size() != v.system.r || b.size() != v.system.t)
    throw Error(ErrorKind::DimensionMismatch, "tuple sizes do not match the system");
  std::vector<SymElement> xy = a;
  xy.insert(xy.end(), b.begin(), b.end());
  std::vector<SymElement> out;
  out.reserve(xy.size());
  for (std::size_t i : v.permutation) out.push_back(xy[i]);
  return out;
}

std::vector<IntVector> exponent_set(const IntVector& orders) {
  const std::size_t t = orders.size();
  if (t == 0) return {};
  Int size = 1;
  for (const auto& n : orders) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "orders must be positive");
    size *= n + 1;
    if (size > kMaxExponentSet)
      throw Error(ErrorKind::ResourceLimit,
                  "exponent set has more than " + std::to_string(kMaxExponentSet) + " tuples");
  }
  std::vector<IntVector> out;
  IntVector k(t, Int(0));
  while (true) {
    if (gcd_of(k) == 1) out.push_back(k);
    std::size_t i = t;
    while (i > 0 && k[i - 1] == orders[i - 1]) k[--i] = 0;
    if (i == 0) break;
    ++k[i - 1];
  }
  return out;
}

SymElement power_product(const std::vector<SymElement>& b, const IntVector& k, Characteristic p) {
  if (b.size() != k.size()) throw Error(ErrorKind::DimensionMismatch, "exponent vector length");
  SymElement acc(p);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (k[i] != 0) acc = mul(acc, pow(b[i], k[i]));
  return acc;
}

CompleteSystem compute_system(const DivSubgroup& c, const std::vector<SymElement>& a,
                              const std::vector<SymElement>& b) {
  const Characteristic p = common_char(c, a, b);
  if (!is_independent(c, a)) throw Error(ErrorKind::NotIndependent, "tuple is not independent over C");
  CompleteSystem tau;
  tau.r = a.size();
  tau.t = b.size();
  for (const auto& bi : b) tau.orders.push_back(order_over(c, a, bi).n);
  for (const auto& k : exponent_set(tau.orders)) {
    auto res = order_over(c, a, power_product(b, k, p));
    tau.equations.emplace(k, MinimalEquation{k, res.n, res.l, res.cpart});
  }
  return tau;
}

bool verify_system(const CompleteSystem& tau, const DivSubgroup& c, const std::vector<SymElement>& a,
                   const std::vector<SymElement>& b) {
  if (tau.r != a.size() || tau.t != b.size())
    throw Error(ErrorKind::DimensionMismatch, "tuple sizes do not match the system");
  const Characteristic p = common_char(c, a, b);
  if (tau.orders.size() != tau.t) malformed("orders has wrong length");
  for (const auto& n : tau.orders)
    if (n < 1) malformed("orders must be positive");
  const auto expected = exponent_set(tau.orders);
  if (expected.size() != tau.equations.size()) malformed("equations do not cover the exponent set");
  for (const auto& k : expected)
    if (!tau.equations.count(k)) malformed("missing equation for an exponent tuple");

  bool holds = true;
  for (const auto& [key, eq] : tau.equations) {
    if (eq.k != key) malformed("equation key and exponent differ");
    if (eq.N < 1) malformed("N must be positive");
    if (eq.l.size() != tau.r) malformed("l has wrong length");
    Int g = eq.N;
    for (const auto& x : eq.l) g = gcd(g, x);
    if (g != 1) malformed("gcd(N, l) != 1");
    std::size_t unit;
    if (is_unit_vector(key, &unit) && eq.N != tau.orders[unit]) malformed("unit equation with N != n_i");
    if (eq.c.characteristic() != p) malformed("constant has the wrong characteristic");
    if (!holds) continue;
    if (!is_member_div(c, eq.c)) {
      holds = false;
      continue;
    }
    holds = pow(power_product(b, key, p), eq.N) == mul(eq.c, power_product(a, eq.l, p));
  }
  return holds;
}

CompleteSystem transport(const CompleteSystem& tau, const std::function<SymElement(const SymElement&)>& f) {
  CompleteSystem out = tau;
  for (auto& [key, eq] : out.equations) eq.c = f(eq.c);
  return out;
}

SymElement branch_root(const SymElement& x, const Int& n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "root index must be positive");
  const Rat inv_n = make_rat(Int(1), n);
  return SymElement(scale_torsion(inv_n, x.torsion(), x.characteristic()), free_scale(x.free(), inv_n),
                    x.characteristic());
}

std::vector<PresentationEquation> minimal_presentation(const CompleteSystem& tau, const DivSubgroup& c,
                                                       const std::vector<SymElement>& a,
                                                       const std::vector<SymElement>& b) {
  if (!verify_system(tau, c, a, b))
    throw Error(ErrorKind::InvalidArgument, "system does not hold at the given tuples");
  const Characteristic p = c.characteristic();
  const std::size_t r = a.size();
  const std::size_t t = b.size();

  std::vector<FreePart> gens;
  for (const auto& x : a) gens.push_back(x.free());
  std::vector<RatVector> q;
  for (const auto& bi : b) {
    auto qi = hull_coordinates(c, gens, bi.free());
    if (!qi) throw Error(ErrorKind::NotInDivisibleHull, "element outside the divisible hull of <C a>");
    q.push_back(*qi);
  }
  // everything is scaled by a common denominator so the lattice is integral
  Int scale = 1;
  for (const auto& qi : q)
    for (const auto& x : qi) scale = lcm(scale, x.get_den());
  std::vector<IntVector> qint;
  for (const auto& qi : q) {
    IntVector v(r);
    for (std::size_t j = 0; j < r; ++j) v[j] = Rat(qi[j] * scale).get_num();
    qint.push_back(v);
  }

  std::vector<PresentationEquation> out;
  for (std::size_t i = 0; i < t; ++i) {
    PresentationEquation eq{Int(1), IntVector(r), IntVector(i), SymElement(p)};
    if (r > 0) {
      std::vector<IntVector> rows;
      for (std::size_t j = 0; j < r; ++j) {
        IntVector e(r);
        e[j] = scale;
        rows.push_back(e);
      }
      for (std::size_t j = 0; j < i; ++j) rows.push_back(qint[j]);
      const auto h = hnf(IntMatrix::from_rows(rows, r));
      std::vector<RatVector> hrows;
      for (std::size_t j = 0; j < r; ++j) {
        RatVector v(r);
        for (std::size_t col = 0; col < r; ++col) v[col] = h.h(j, col);
        hrows.push_back(v);
      }
      RatVector w(r);
      for (std::size_t col = 0; col < r; ++col) w[col] = qint[i][col];
      const auto z = rational_combination(hrows, w);
      if (!z) throw Error(ErrorKind::Internal, "presentation lattice is not of full rank");
      for (const auto& x : *z) eq.n = lcm(eq.n, x.get_den());
      IntVector zi(r);
      for (std::size_t j = 0; j < r; ++j) zi[j] = Rat((*z)[j] * eq.n).get_num();
      // coefficients over the generators: zi * (top r rows of u)
      for (std::size_t g = 0; g < r + i; ++g) {
        Int s = 0;
        for (std::size_t j = 0; j < r; ++j) s += zi[j] * h.u(j, g);
        if (g < r)
          eq.l[g] = s;
        else
          eq.m[g - r] = s;
      }
      // reduce m_j into [0, n_j) using the earlier equations, top down
      for (std::size_t j = i; j-- > 0;) {
        const auto& prev = out[j];
        const Int quot = floor_div(eq.m[j], prev.n);
        if (quot == 0) continue;
        eq.m[j] -= quot * prev.n;
        for (std::size_t g = 0; g < r; ++g) eq.l[g] += quot * prev.l[g];
        for (std::size_t g = 0; g < j; ++g) eq.m[g] += quot * prev.m[g];
      }
    }
    SymElement cval = pow(b[i], eq.n);
    cval = mul(cval, inv(power_product(a, eq.l, p)));
    std::vector<SymElement> earlier(b.begin(), b.begin() + static_cast<long>(i));
    cval = mul(cval, inv(power_product(earlier, eq.m, p)));
    if (!is_member_div(c, cval)) throw Error(ErrorKind::Internal, "presentation constant outside C");
    eq.c = cval;
    out.push_back(eq);
  }
  return out;
}

std::vector<SymElement> realise_presentation(const std::vector<PresentationEquation>& pres,
                                             const std::vector<SymElement>& a, Characteristic p) {
  std::vector<SymElement> b;
  for (const auto& eq : pres) {
    if (eq.m.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "presentation shape");
    SymElement rhs = mul(eq.c, mul(power_product(a, eq.l, p), power_product(b, eq.m, p)));
    b.push_back(branch_root(rhs, eq.n));
  }
  return b;
}

NM compute_NM(const IntVector& k, const IntVector& l) {
  if (k.empty()) throw Error(ErrorKind::InvalidArgument, "empty exponent vector");
  if (k.size() != l.size()) throw Error(ErrorKind::DimensionMismatch, "k and l differ in length");
  NM out{Int(1), IntVector(k.size())};
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 1) throw Error(ErrorKind::InvalidArgument, "k_i must be positive");
    out.N = lcm(out.N, Int(k[i] / gcd(k[i], l[i])));
  }
  for (std::size_t i = 0; i < k.size(); ++i) out.M[i] = out.N * l[i] / k[i];
  return out;
}

AlphaSystem assemble_alpha_system(const std::vector<IntPoly>& polys, const std::vector<SymElement>& deltas) {
  if (polys.size() != deltas.size()) throw Error(ErrorKind::DimensionMismatch, "one delta per polynomial");
  AlphaSystem out;
  const Characteristic p = deltas.empty() ? 0 : deltas[0].characteristic();
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].degree() < 1) throw Error(ErrorKind::InvalidArgument, "constant polynomial");
    if (deltas[i].characteristic() != p)
      throw Error(ErrorKind::CharacteristicMismatch, "deltas differ in characteristic");
    const Int g = polys[i].content();
    IntVector co = polys[i].coeffs();
    for (auto& x : co) x /= g;
    SymElement d = canonical_nth_root(deltas[i], g).root;
    if (co.back() < 0) {
      for (auto& x : co) x = -x;
      d = inv(d);
    }
    out.polys.emplace_back(co);
    out.deltas.push_back(d);
  }

  CompleteSystem& tau = out.system;
  tau.t = out.polys.size();
  for (const auto& P : out.polys) {
    tau.r += static_cast<std::size_t>(P.degree());
    tau.orders.push_back(P.leading());
  }
  for (const auto& key : exponent_set(tau.orders)) {
    const NM nm = compute_NM(tau.orders, key);
    MinimalEquation eq{key, nm.N, {}, SymElement(p)};
    Int rgcd = nm.N;
    for (std::size_t i = 0; i < tau.t; ++i) {
      const auto& P = out.polys[i];
      for (long j = 0; j < P.degree(); ++j) {
        eq.l.push_back(-P.coeff(static_cast<std::size_t>(j)) * nm.M[i]);
        rgcd = gcd(rgcd, eq.l.back());
      }
      eq.c = mul(eq.c, pow(out.deltas[i], nm.M[i]));
    }
    if (rgcd != 1) throw Error(ErrorKind::Internal, "cross equation with gcd(N, exponents) != 1");
    tau.equations.emplace(key, std::move(eq));
  }
  return out;
}

}  // namespace mendo
