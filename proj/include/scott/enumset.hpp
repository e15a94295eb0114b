#pragma once

// Fuel-bounded enumerable subsets of N and the applicative structure on them:
// application U·V decodes pair codes in U against finite approximations of V,
// and graph_of turns a finite-set function into its coded graph. Every value
// is a monotone stage function k |-> finite set; the denotation is the union
// over all k.

#include "scott/nat.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace scott {

namespace detail {
class SetNode;
}

enum class Provenance { literal, family, apply, graph, term, tuple };

// Raised when a raw graph stage would need 2^(min(fuel,jmax)+1) enumeration
// beyond any reasonable size. Applying the graph instead stays cheap.
struct InfeasibleEnumeration : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphOptions {
  // Cap on the elements allowed inside enumerated argument sets: FinEnum(k)
  // ranges over subsets of {0..min(k, jmax)}.
  unsigned jmax = 12;
  // Promise that fn is monotone (bigger argument sets give stage-wise bigger
  // results). Lets application evaluate fn once at the maximal admissible
  // argument instead of unioning over every subset; exact only when the
  // promise holds, which is why it defaults to off.
  bool monotone = false;
  std::string name;  // used in provenance notes / serialization
};

class EnumSet {
 public:
  EnumSet();  // empty literal

  // Finite stage at fuel k (the full approximation).
  FinSet approx(Fuel k) const;
  // Elements of approx(k) that are <= bound; never materializes more.
  FinSet approx_bounded(Fuel k, const Nat& bound) const;
  bool contains_at(Fuel k, const Nat& x) const;

  Provenance provenance() const;
  const std::string& note() const;

  // Structural views used by serialization; null when the node is not of the
  // corresponding shape.
  const FinSet* literal_value() const;
  const EnumSet* apply_fn() const;
  const EnumSet* apply_arg() const;
  const std::vector<EnumSet>* tuple_parts() const;
  const std::vector<EnumSet>* applied_args() const;  // graph-headed application
  const std::vector<EnumSet>* applied_post() const;  // applications past saturation
  EnumSet applied_head() const;                      // valid when applied_args() != nullptr

  static EnumSet literal(FinSet s);
  // Stage-enumerated set; gen must be monotone in k and deterministic.
  static EnumSet family(std::string name, std::function<FinSet(Fuel)> gen);

  std::shared_ptr<const detail::SetNode> node() const { return node_; }
  explicit EnumSet(std::shared_ptr<const detail::SetNode> node);

 private:
  std::shared_ptr<const detail::SetNode> node_;
};

using GraphFn = std::function<EnumSet(const std::vector<FinSet>&)>;

// U·V per the application stage equation. Constant-time construction.
EnumSet apply(const EnumSet& fn, const EnumSet& arg);
EnumSet apply_all(EnumSet fn, const std::vector<EnumSet>& args);

// Coded graph of an arity-ary finite-set function.
EnumSet graph_of(GraphFn fn, unsigned arity, GraphOptions opts = {});

inline FinSet approx(const EnumSet& u, Fuel k) { return u.approx(k); }

namespace detail {
// Graph constructor with an explicit provenance tag (interpreter use) and the
// declared-coding tuple constructor. GraphFn bodies must build sets, never
// force stages; tuple parts must be nonempty.
EnumSet make_graph_node(GraphFn fn, unsigned arity, GraphOptions opts, Provenance tag);
EnumSet make_tuple_node(std::vector<EnumSet> parts);
}  // namespace detail

// --- stage-level comparison --------------------------------------------------

enum class EqKind { AgreeThrough, MissingWitness };
enum class Side { left, right };

struct EqVerdict {
  EqKind kind;
  Fuel probe;        // the fuel both sides were enumerated at
  Side side;         // side whose element went missing (MissingWitness only)
  Nat missing;       // the unmatched element
  bool agreed() const { return kind == EqKind::AgreeThrough; }
  std::string to_string() const;
};

// Both approximations at `probe` are searched for in the other side up to
// `budget`. Never a claim of semantic equality; pre: probe <= budget.
EqVerdict set_eq_upto(const EnumSet& u, const EnumSet& v, Fuel probe, Fuel budget);
bool agree_through(const EnumSet& u, const EnumSet& v, Fuel probe, Fuel budget);

// --- opens -------------------------------------------------------------------

// Union of up-closures of finitely many basic finite sets.
struct OpenSet {
  std::vector<FinSet> basics;
};

struct OpenVerdict {
  bool found;
  FinSet basic;  // witnessing basic (found only)
  Fuel at;       // least fuel at which it fit
  Fuel budget;   // searched bound (not-found only)
};

// Semi-decides membership of the denotation of u in the open: looks for a
// basic p with p included in approx(u, k), k <= budget, reporting the least k.
OpenVerdict open_member(const OpenSet& open, const EnumSet& u, Fuel budget);

// Exact membership for explicit finite sets (no fuel involved).
bool open_contains(const OpenSet& open, const FinSet& v);

}  // namespace scott
