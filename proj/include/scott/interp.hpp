#pragma once

// Interpretation of lambda terms into the applicative structure, the standard
// combinator environment (pairing, projections, booleans/definition-by-cases,
// tuple operators) and stage-level beta agreement checking.

#include "scott/enumset.hpp"
#include "scott/term.hpp"

#include <map>
#include <string>

namespace scott {

using Env = std::map<std::string, EnumSet>;

struct UnboundVariable : std::runtime_error {
  explicit UnboundVariable(const std::string& n)
      : std::runtime_error("unbound variable: " + n), name(n) {}
  std::string name;
};

struct InterpretOptions {
  unsigned jmax = 12;  // enumeration cap for abstraction graphs
};

// Abstractions become graphs of the body's interpretation over literal
// bindings of the binder; the graphs carry a monotonicity promise, which holds
// for every interpreted body.
EnumSet interpret(const TermPtr& term, const Env& env, const InterpretOptions& opts = {});

// The standard environment. All combinator graphs use a large enumeration cap
// and are monotone by construction.
//   p      pairing: p U V = {2n | n in U} + {2n+1 | n in V}   (stage family)
//   p0/p1  projections (unary graphs)
//   t/f    {1} / {0}
//   q      definition by cases on t/f (ternary graph)
//   k/i    interpreted \x y. x and \x. x
//   len/proj/concat   tuple operators on the declared coding
struct StdEnv {
  Env bindings;
  const EnumSet& get(const std::string& name) const;
};

const StdEnv& std_env();

EnumSet numeral(const Nat& n);

// Declared tuple coding: [U0,...,Un] = {<0,n>} + {<i+1,m> | m in Ui}.
EnumSet tuple_code(const std::vector<EnumSet>& parts);
// Component i of a coded tuple (derived set; decodes <i+1, m> codes).
EnumSet tuple_component(const EnumSet& tup, std::size_t i);
// Length markers {n | <0,n> in tup} present at the given fuel.
FinSet tuple_length_markers(const EnumSet& tup, Fuel k);

// Interprets both terms in the standard environment (extended by extra) and
// compares stages. Never claims semantic equality.
EqVerdict beta_equiv_check(const TermPtr& lhs, const TermPtr& rhs, Fuel probe, Fuel budget,
                           const Env& extra = {}, const InterpretOptions& opts = {});

// Large enumeration cap used for internal/monotone graphs.
inline constexpr unsigned kWideJmax = 1u << 20;

}  // namespace scott
