#include "scott/interp.hpp"

#include <stdexcept>
#include <utility>

namespace scott {

namespace {

GraphOptions wide_graph(std::string name) {
  GraphOptions o;
  o.jmax = kWideJmax;
  o.monotone = true;
  o.name = std::move(name);
  return o;
}

// p U V = {2n | n in U} + {2n+1 | n in V} as its explicit code set: emitting
// 2n needs {n} below the first argument, emitting 2n+1 needs {n} below the
// second; encode_finite({n}) = 2^n and encode_finite({}) = 0.
EnumSet make_pairing() {
  return EnumSet::family("p", [](Fuel k) {
    std::vector<Nat> codes;
    codes.reserve(2 * (static_cast<std::size_t>(k) + 1));
    Nat pow = 1;
    for (Fuel n = 0; n <= k; ++n) {
      Nat two_n = Nat(2) * n;
      codes.push_back(pair_nat(pow, pair_nat(0, two_n)));
      codes.push_back(pair_nat(0, pair_nat(pow, two_n + 1)));
      pow <<= 1;
    }
    return FinSet::from_any(std::move(codes));
  });
}

EnumSet make_left_proj() {
  GraphFn fn = [](const std::vector<FinSet>& args) {
    std::vector<Nat> out;
    for (const Nat& e : args.at(0))
      if (e % 2 == 0) out.push_back(e / 2);
    return EnumSet::literal(FinSet(std::move(out)));
  };
  return graph_of(std::move(fn), 1, wide_graph("p0"));
}

EnumSet make_right_proj() {
  GraphFn fn = [](const std::vector<FinSet>& args) {
    std::vector<Nat> out;
    for (const Nat& e : args.at(0))
      if (e % 2 == 1) out.push_back((e - 1) / 2);
    return EnumSet::literal(FinSet(std::move(out)));
  };
  return graph_of(std::move(fn), 1, wide_graph("p1"));
}

EnumSet make_cases() {
  GraphFn fn = [](const std::vector<FinSet>& args) {
    const FinSet& b = args.at(0);
    FinSet out;
    if (b.contains(1)) out = out.union_with(args.at(1));
    if (b.contains(0)) out = out.union_with(args.at(2));
    return EnumSet::literal(std::move(out));
  };
  return graph_of(std::move(fn), 3, wide_graph("q"));
}

EnumSet make_tuple_len() {
  GraphFn fn = [](const std::vector<FinSet>& args) {
    std::vector<Nat> out;
    for (const Nat& e : args.at(0)) {
      PairCode pc = unpair_nat(e);
      if (pc.m == 0) out.push_back(pc.n);
    }
    return EnumSet::literal(FinSet::from_any(std::move(out)));
  };
  return graph_of(std::move(fn), 1, wide_graph("len"));
}

EnumSet make_tuple_proj() {
  GraphFn fn = [](const std::vector<FinSet>& args) {
    const FinSet& tup = args.at(0);
    const FinSet& idx = args.at(1);
    std::vector<Nat> out;
    for (const Nat& e : tup) {
      PairCode pc = unpair_nat(e);
      if (pc.m >= 1 && idx.contains(pc.m - 1)) out.push_back(pc.n);
    }
    return EnumSet::literal(FinSet::from_any(std::move(out)));
  };
  return graph_of(std::move(fn), 2, wide_graph("proj"));
}

// Concatenation reindexes the second tuple behind every length marker of the
// first (union over markers keeps the function monotone): markers combine to
// <0, n1+n2+1>, first-tuple parts pass through, part j of the second becomes
// index n1+1+j.
EnumSet make_tuple_concat() {
  GraphFn fn = [](const std::vector<FinSet>& args) {
    std::vector<Nat> markers1, markers2;
    std::vector<Nat> out;
    std::vector<PairCode> parts2;
    for (const Nat& e : args.at(0)) {
      PairCode pc = unpair_nat(e);
      if (pc.m == 0)
        markers1.push_back(pc.n);
      else
        out.push_back(e);
    }
    for (const Nat& e : args.at(1)) {
      PairCode pc = unpair_nat(e);
      if (pc.m == 0)
        markers2.push_back(pc.n);
      else
        parts2.push_back(pc);
    }
    for (const Nat& n1 : markers1) {
      for (const Nat& n2 : markers2) out.push_back(pair_nat(0, n1 + n2 + 1));
      for (const PairCode& pc : parts2) out.push_back(pair_nat(n1 + 1 + pc.m, pc.n));
    }
    return EnumSet::literal(FinSet::from_any(std::move(out)));
  };
  return graph_of(std::move(fn), 2, wide_graph("concat"));
}

}  // namespace

EnumSet numeral(const Nat& n) { return EnumSet::literal(FinSet({n})); }

EnumSet interpret(const TermPtr& term, const Env& env, const InterpretOptions& opts) {
  switch (term->kind) {
    case Term::Kind::var: {
      auto it = env.find(term->name);
      if (it == env.end()) throw UnboundVariable(term->name);
      return it->second;
    }
    case Term::Kind::constant: {
      auto it = env.find(term->name);
      if (it != env.end()) return it->second;
      return std_env().get(term->name);
    }
    case Term::Kind::num:
      return numeral(term->number);
    case Term::Kind::set:
      return EnumSet::literal(term->lits);
    case Term::Kind::tuple: {
      std::vector<EnumSet> parts;
      parts.reserve(term->parts.size());
      for (const TermPtr& p : term->parts) parts.push_back(interpret(p, env, opts));
      return tuple_code(parts);
    }
    case Term::Kind::lam: {
      const std::string binder = term->name;
      const TermPtr body = term->body;
      const Env captured = env;
      const InterpretOptions inner = opts;
      GraphFn fn = [binder, body, captured, inner](const std::vector<FinSet>& args) {
        Env extended = captured;
        extended.insert_or_assign(binder, EnumSet::literal(args.at(0)));
        return interpret(body, extended, inner);
      };
      GraphOptions gopts;
      gopts.jmax = opts.jmax;
      gopts.monotone = true;  // interpreted bodies are monotone in the binder
      gopts.name = print_term(*term);
      return detail::make_graph_node(std::move(fn), 1, gopts, Provenance::term);
    }
    case Term::Kind::app:
      return apply(interpret(term->fn, env, opts), interpret(term->arg, env, opts));
  }
  throw std::logic_error("unhandled term kind");
}

const EnumSet& StdEnv::get(const std::string& name) const {
  auto it = bindings.find(name);
  if (it == bindings.end()) throw UnboundVariable(name);
  return it->second;
}

const StdEnv& std_env() {
  static const StdEnv env = [] {
    StdEnv e;
    e.bindings.emplace("p", make_pairing());
    e.bindings.emplace("p0", make_left_proj());
    e.bindings.emplace("p1", make_right_proj());
    e.bindings.emplace("t", EnumSet::literal(FinSet{1}));
    e.bindings.emplace("f", EnumSet::literal(FinSet{0}));
    e.bindings.emplace("q", make_cases());
    InterpretOptions wide;
    wide.jmax = kWideJmax;
    e.bindings.emplace("k", interpret(parse_term("\\x y. x"), {}, wide));
    e.bindings.emplace("i", interpret(parse_term("\\x. x"), {}, wide));
    e.bindings.emplace("len", make_tuple_len());
    e.bindings.emplace("proj", make_tuple_proj());
    e.bindings.emplace("concat", make_tuple_concat());
    return e;
  }();
  return env;
}

EnumSet tuple_code(const std::vector<EnumSet>& parts) {
  if (parts.empty()) throw std::invalid_argument("tuple_code: parts must be nonempty");
  return detail::make_tuple_node(parts);
}

EnumSet tuple_component(const EnumSet& tup, std::size_t i) {
  const Nat idx = Nat(i) + 1;
  return EnumSet::family("component-" + std::to_string(i), [tup, idx](Fuel k) {
    std::vector<Nat> out;
    for (const Nat& e : tup.approx(k)) {
      PairCode pc = unpair_nat(e);
      if (pc.m == idx) out.push_back(pc.n);
    }
    return FinSet::from_any(std::move(out));
  });
}

FinSet tuple_length_markers(const EnumSet& tup, Fuel k) {
  std::vector<Nat> out;
  for (const Nat& e : tup.approx(k)) {
    PairCode pc = unpair_nat(e);
    if (pc.m == 0) out.push_back(pc.n);
  }
  return FinSet::from_any(std::move(out));
}

EqVerdict beta_equiv_check(const TermPtr& lhs, const TermPtr& rhs, Fuel probe, Fuel budget,
                           const Env& extra, const InterpretOptions& opts) {
  EnumSet l = interpret(lhs, extra, opts);
  EnumSet r = interpret(rhs, extra, opts);
  return set_eq_upto(l, r, probe, budget);
}

}  // namespace scott
