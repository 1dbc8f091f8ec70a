#pragma once

#include <map>
#include <string>
#include <vector>

#include "mendo/ffworld.hpp"
#include "mendo/intlinalg.hpp"

namespace mendo {

enum class TermKind { Var, Num, Add, Sub, Mul, Neg, Pow, Theta };

/* Terms in + - * and a unary theta; Pow carries a nonnegative integer exponent in value. */
struct Term {
  TermKind kind = TermKind::Num;
  std::string name;  // Var
  Int value;         // Num literal (>= 0), Pow exponent
  std::vector<Term> args;

  static Term var(std::string name);
  static Term num(const Int& v);
  static Term add(Term a, Term b);
  static Term sub(Term a, Term b);
  static Term mul(Term a, Term b);
  static Term neg(Term a);
  static Term pow(Term a, const Int& e);
  static Term theta(Term a);

  friend bool operator==(const Term& a, const Term& b) {
    return a.kind == b.kind && a.name == b.name && a.value == b.value && a.args == b.args;
  }
};

/*
 * expr  := prod (('+' | '-') prod)*
 * prod  := unary ('*' unary)*
 * unary := '-' unary | power
 * power := atom ('^' digits)?
 * atom  := digits | ident | 'theta' '(' expr ')' | '(' expr ')'
 * Identifiers are [A-Za-z_][A-Za-z0-9_']*.  Throws SyntaxError with a byte offset.
 */
Term parse_term(const std::string& src);

/* Minimal parentheses; parse_term(to_string(t)) == t. */
std::string to_string(const Term& t);

std::size_t theta_count(const Term& t);
bool has_theta(const Term& t);
/* variable names in order of first occurrence */
std::vector<std::string> variables(const Term& t);

struct TermEquation {
  Term lhs;
  Term rhs;
};

struct LinearSystem {
  std::vector<std::string> zvars;
  std::vector<std::string> zprimes;  // zprimes[i] stands for theta(zvars[i])
  std::vector<TermEquation> equations;
};

/* Leftmost-innermost: z_i = t' for each theta(t') with t' theta-free, ending with t~ = 0. */
LinearSystem linearise(const Term& t);

/* Unassigned "g" is the context generator; other unassigned names throw UnassignedVariable. */
Elem eval_term(const Term& t, const std::map<std::string, Elem>& assignment, const FiniteFieldCtx& ctx,
               const ExponentFamily& e);

}  // namespace mendo
