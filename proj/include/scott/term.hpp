#pragma once

// Untyped lambda terms over the applicative structure: variables, named
// constants, abstraction, application, numeral/set/tuple literals.

#include "scott/nat.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace scott {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { var, constant, lam, app, num, set, tuple };

  Kind kind;
  std::string name;            // var, constant, lam (binder)
  TermPtr body;                // lam
  TermPtr fn, arg;             // app
  Nat number;                  // num
  FinSet lits;                 // set
  std::vector<TermPtr> parts;  // tuple

  static TermPtr var(std::string n);
  static TermPtr constant(std::string n);
  static TermPtr lam(std::string binder, TermPtr body);
  static TermPtr app(TermPtr fn, TermPtr arg);
  static TermPtr num(Nat n);
  static TermPtr set(FinSet s);
  static TermPtr tuple(std::vector<TermPtr> parts);
};

struct SyntaxError : std::runtime_error {
  SyntaxError(std::size_t pos, const std::string& expected, const std::string& found)
      : std::runtime_error("syntax error at position " + std::to_string(pos) + ": expected " +
                           expected + ", found " + found),
        position(pos),
        expected(expected) {}
  std::size_t position;
  std::string expected;
};

// Grammar: `\x y. M` abstraction (body extends right), juxtaposition
// application (left associative), `#n` numerals, `{a,b,c}` finite sets,
// `[M0,...,Mn]` tuples, identifiers, parentheses. Identifiers naming standard
// combinators parse as constants.
TermPtr parse_term(const std::string& src);

std::string print_term(const Term& t);

// Capture-avoiding substitution of `replacement` for free `var` occurrences.
TermPtr substitute(const TermPtr& t, const std::string& var, const TermPtr& replacement);

std::vector<std::string> free_vars(const TermPtr& t);

bool is_std_combinator_name(const std::string& name);

}  // namespace scott
