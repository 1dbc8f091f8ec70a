#include "mendo/termlang.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "mendo/error.hpp"

namespace mendo {

Term Term::var(std::string name) {
  Term t;
  t.kind = TermKind::Var;
  t.name = std::move(name);
  return t;
}

Term Term::num(const Int& v) {
  Term t;
  t.kind = TermKind::Num;
  t.value = v;
  return t;
}

namespace {

Term node(TermKind kind, std::vector<Term> args) {
  Term t;
  t.kind = kind;
  t.args = std::move(args);
  return t;
}

}  // namespace

Term Term::add(Term a, Term b) { return node(TermKind::Add, {std::move(a), std::move(b)}); }
Term Term::sub(Term a, Term b) { return node(TermKind::Sub, {std::move(a), std::move(b)}); }
Term Term::mul(Term a, Term b) { return node(TermKind::Mul, {std::move(a), std::move(b)}); }
Term Term::neg(Term a) { return node(TermKind::Neg, {std::move(a)}); }
Term Term::theta(Term a) { return node(TermKind::Theta, {std::move(a)}); }

Term Term::pow(Term a, const Int& e) {
  if (sgn(e) < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent in a term");
  Term t = node(TermKind::Pow, {std::move(a)});
  t.value = e;
  return t;
}

// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(const std::string& src) : s_(src) {}

  Term parse() {
    Term t = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

  Term expr() {
    Term t = prod();
    while (true) {
      if (eat('+'))
        t = Term::add(std::move(t), prod());
      else if (eat('-'))
        t = Term::sub(std::move(t), prod());
      else
        return t;
    }
  }

  Term prod() {
    Term t = unary();
    while (eat('*')) t = Term::mul(std::move(t), unary());
    return t;
  }

  Term unary() {
    if (eat('-')) return Term::neg(unary());
    return power();
  }

  Term power() {
    Term t = atom();
    if (eat('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      t = Term::pow(std::move(t), Int(s_.substr(start, pos_ - start)));
    }
    return t;
  }

  Term atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Term::num(Int(s_.substr(start, pos_ - start)));
    }
    if (ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (name == "theta") {
        if (!eat('(')) fail("expected '(' after theta");
        Term inner = expr();
        if (!eat(')')) fail("expected ')'");
        return Term::theta(std::move(inner));
      }
      return Term::var(std::move(name));
    }
    if (eat('(')) {
      Term inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

int precedence(const Term& t) {
  switch (t.kind) {
    case TermKind::Add:
    case TermKind::Sub:
      return 1;
    case TermKind::Mul:
      return 2;
    case TermKind::Neg:
      return 3;
    case TermKind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string wrap(const Term& t, int min_prec) {
  const std::string s = to_string(t);
  return precedence(t) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

Term parse_term(const std::string& src) { return Parser(src).parse(); }

std::string to_string(const Term& t) {
  switch (t.kind) {
    case TermKind::Var:
      return t.name;
    case TermKind::Num:
      return t.value.get_str();
    case TermKind::Add:
      return wrap(t.args[0], 1) + " + " + wrap(t.args[1], 2);
    case TermKind::Sub:
      return wrap(t.args[0], 1) + " - " + wrap(t.args[1], 2);
    case TermKind::Mul:
      return wrap(t.args[0], 2) + " * " + wrap(t.args[1], 3);
    case TermKind::Neg:
      return "-" + wrap(t.args[0], 3);
    case TermKind::Pow:
      return wrap(t.args[0], 5) + "^" + t.value.get_str();
    case TermKind::Theta:
      return "theta(" + to_string(t.args[0]) + ")";
  }
  throw Error(ErrorKind::Internal, "unknown term kind");
}

std::size_t theta_count(const Term& t) {
  std::size_t n = t.kind == TermKind::Theta ? 1 : 0;
  for (const auto& a : t.args) n += theta_count(a);
  return n;
}

bool has_theta(const Term& t) { return theta_count(t) != 0; }

namespace {

void collect_vars(const Term& t, std::vector<std::string>& out) {
  if (t.kind == TermKind::Var && std::find(out.begin(), out.end(), t.name) == out.end()) out.push_back(t.name);
  for (const auto& a : t.args) collect_vars(a, out);
}

/* "z" unless some variable already looks like z<digits>, then "z_", ... */
std::string fresh_prefix(const std::vector<std::string>& vars) {
  std::string prefix = "z";
  auto clashes = [&](const std::string& pre) {
    for (const auto& v : vars) {
      if (v.size() <= pre.size() || v.compare(0, pre.size(), pre) != 0) continue;
      if (std::isdigit(static_cast<unsigned char>(v[pre.size()]))) return true;
    }
    return false;
  };
  while (clashes(prefix)) prefix += "_";
  return prefix;
}

/* Post-order rewriting visits theta nodes in leftmost-innermost order. */
Term rewrite(const Term& t, const std::string& prefix, LinearSystem& sys) {
  Term out = t;
  for (auto& a : out.args) a = rewrite(a, prefix, sys);
  if (out.kind != TermKind::Theta) return out;
  const std::string z = prefix + std::to_string(sys.zvars.size() + 1);
  sys.zvars.push_back(z);
  sys.zprimes.push_back(z + "'");
  sys.equations.push_back({Term::var(z), out.args[0]});
  return Term::var(z + "'");
}

}  // namespace

std::vector<std::string> variables(const Term& t) {
  std::vector<std::string> out;
  collect_vars(t, out);
  return out;
}

LinearSystem linearise(const Term& t) {
  LinearSystem sys;
  const std::string prefix = fresh_prefix(variables(t));
  Term rest = rewrite(t, prefix, sys);
  sys.equations.push_back({std::move(rest), Term::num(Int(0))});
  return sys;
}

Elem eval_term(const Term& t, const std::map<std::string, Elem>& assignment, const FiniteFieldCtx& ctx,
               const ExponentFamily& e) {
  switch (t.kind) {
    case TermKind::Var: {
      auto it = assignment.find(t.name);
      if (it != assignment.end()) {
        if (!ctx.contains(it->second)) throw Error(ErrorKind::InvalidArgument, "value of " + t.name + " not in the field");
        return it->second;
      }
      if (t.name == "g") return ctx.generator();
      throw Error(ErrorKind::UnassignedVariable, "variable '" + t.name + "' has no value");
    }
    case TermKind::Num:
      return ctx.from_int(t.value);
    case TermKind::Add:
      return ctx.add(eval_term(t.args[0], assignment, ctx, e), eval_term(t.args[1], assignment, ctx, e));
    case TermKind::Sub:
      return ctx.sub(eval_term(t.args[0], assignment, ctx, e), eval_term(t.args[1], assignment, ctx, e));
    case TermKind::Mul:
      return ctx.mul(eval_term(t.args[0], assignment, ctx, e), eval_term(t.args[1], assignment, ctx, e));
    case TermKind::Neg:
      return ctx.neg(eval_term(t.args[0], assignment, ctx, e));
    case TermKind::Pow:
      return ctx.pow(eval_term(t.args[0], assignment, ctx, e), t.value);
    case TermKind::Theta:
      return endo_eval(e, ctx, eval_term(t.args[0], assignment, ctx, e));
  }
  throw Error(ErrorKind::Internal, "unknown term kind");
}

}  // namespace mendo
