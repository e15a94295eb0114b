#pragma once

// The classifier-side toolkit: trackers for the characteristic-function
// isomorphism between the realizer object and the function space over the
// naturals, order-discreteness (test, witness, reflection), subobjects
// classified by the two-point classifier via opens, the partiality monad
// (lift), the independence-of-premise realizer, and the finite falsifier
// showing the classifier is not closed under unions.

#include "scott/assembly.hpp"
#include "scott/enumset.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scott {

struct NotOrderDiscrete : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotCrisp : std::runtime_error {
  explicit NotCrisp(const std::string& l)
      : std::runtime_error("realizers of label straddle the open: " + l), label(l) {}
  std::string label;
};

struct TrackerNotVerified : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Trackers of the characteristic-function isomorphism: first the graph of
// U |-> {<2^n,1> | n in U} (membership queries answered by application to a
// numeral), then the graph of U |-> {n | 1 in U n-bar} (the inverse,
// enumerated fuel-by-fuel).
std::pair<EnumSet, EnumSet> chi_iso_trackers();

// Semi-decidable elementhood: search n in the stages of u up to the budget;
// a hit is certified by the pairing value p n-bar u.
struct ElementhoodVerdict {
  bool found = false;
  Fuel at = 0;           // least fuel at which n appeared (found only)
  Fuel budget = 0;       // search bound (not-found only)
  std::optional<EnumSet> realizer;
  std::string to_string() const;
};
ElementhoodVerdict elementhood_realizer(const Nat& n, const EnumSet& u, Fuel budget);

// Order-discreteness of an assembly: no realizer of one point may sit inside
// a realizer of a different point.
struct ODViolation {
  std::string x, y;
  FinSet u, v;  // u in E(x), v in E(y), u subset of v
};
struct ODReport {
  bool order_discrete = false;
  std::optional<ODViolation> violation;
};
ODReport is_order_discrete(const FiniteAssembly& x);

// Witness element for order-discreteness: a value A with A U V in E(x)
// whenever U in E(x), V in E(x'), U subset of V (which forces x = x').  Also
// carries the section construction of the diagonal-epi direction: given a
// witness F for a two-point function (F applied to the empty set and to
// 1-bar yield the two point realizers), the graph of
//   empty |-> A(F empty)(F empty),   W nonempty |-> A(F empty)(F 1-bar)
// recovers a point realizer continuously.
struct ODWitness {
  EnumSet a;
  std::string note;
  EnumSet section_tracker(const EnumSet& f) const;
};
ODWitness od_witness(const FiniteAssembly& x);  // throws NotOrderDiscrete
// Checks the defining property of the witness over all realizer pairs.
MorphismVerdict check_od_witness(const FiniteAssembly& x, const ODWitness& w, Fuel probe,
                                 Fuel budget);

// Order-discrete reflection: quotient by the comparability closure.  Each
// merge records the comparable realizer pair; chains through a block are
// zigzag sequences of such merges.
struct MergeWitness {
  std::string x, y;
  FinSet u, v;  // u in E(x), v in E(y), comparable either way
};
struct Partition {
  std::vector<std::vector<std::string>> blocks;  // disjoint cover, carrier order
  std::vector<MergeWitness> edges;               // spanning comparability edges
  std::size_t block_of(const std::string& label) const;        // throws UnknownLabel
  std::vector<MergeWitness> chain(const std::string& a,
                                  const std::string& b) const;  // zigzag a -> b
};
struct ODReflection {
  Partition partition;
  FiniteAssembly quotient;  // blocks as points, unions of realizer families
};
ODReflection od_reflection(const FiniteAssembly& x);

// Crisp subobject from an open: points whose realizers all lie in the open
// form the subobject; the classifying map to the two-point classifier is
// tracked by the graph of p |-> {1 | p in the open}.
struct SigmaSub {
  FiniteAssembly sub;
  Morphism classifier;
};
SigmaSub sigma_sub_from_open(const FiniteAssembly& x, const OpenSet& u, Fuel probe,
                             Fuel budget);  // throws NotCrisp

// Trace of the open induced by a verified map to the classifier: for each
// explicit realizer, whether the tracker sends it to a set containing 1 by
// the budget.  The open itself is never materialized.
struct OpenTraceRow {
  std::string label;
  FinSet realizer;
  bool in_open = false;
};
struct OpenTrace {
  std::vector<OpenTraceRow> rows;
  std::vector<std::string> inside;  // labels the map sends to 1
};
OpenTrace sigma_sub_classify(const Morphism& f, Fuel budget);  // throws TrackerNotVerified

// The lift (partiality) monad on assemblies.
struct LiftAssembly {
  FiniteAssembly assembly;
  std::string bottom;  // the fresh added point
};
// The coded two-part tuple [u, 1-bar] as an explicit set.
FinSet lift_realizer(const FinSet& u);
LiftAssembly lift_object(const FiniteAssembly& x);
// Functor action: the unique extension with bottom |-> bottom, tracked by
// [V0,V1] |-> [T V0, 1-bar] when 1 in V1 (T the tracker of f), empty else.
Morphism lift_morphism(const Morphism& f, Fuel probe, Fuel budget);
// Unit x |-> x, tracked by u |-> [u, 1-bar].
Morphism eta(const FiniteAssembly& x, Fuel probe, Fuel budget);
// Multiplication: collapse both bottoms, tracked by first-component decoding.
Morphism mu(const FiniteAssembly& x, Fuel probe, Fuel budget);
// Classifier of the unit inclusion: points to 1, bottom to 0.
Morphism chi_classifier(const FiniteAssembly& x, Fuel probe, Fuel budget);
// Partial-map extension: f on a crisp subobject of the ambient assembly
// extends to ambient -> L(target), bottom outside the open.
Morphism tilde_morphism(const Morphism& f, const FiniteAssembly& ambient, const OpenSet& u,
                        Fuel probe, Fuel budget);

// The independence-of-premise realizer \u. p (p0 (u k)) (\v. p1 (u k)).
EnumSet ip_realizer();

// Finite falsifier for closure of the classifier under binary unions.  The
// two conditions a union witness pair (F, G) would have to satisfy are
// checked on the four flag pairs; for continuous candidates one must fail,
// but a fixed budget may leave the search inconclusive.
struct FalsifierPairTrace {
  FinSet u, v;
  std::string note;
};
struct FalsifierReport {
  bool violation = false;  // false: inconclusive at this budget
  unsigned condition = 0;  // 1 = "1 must enter F(U,V)", 2 = "G must name a true side"
  FinSet u, v;             // instance (violation only)
  std::string detail;
  Fuel budget = 0;
  std::vector<FalsifierPairTrace> traces;
  std::string to_string() const;
};
FalsifierReport union_failure_falsifier(const EnumSet& f_cand, const EnumSet& g_cand,
                                        Fuel budget);

// Named candidate graphs for the falsifier demo.
const std::map<std::string, EnumSet>& falsifier_f_candidates();  // binary
const std::map<std::string, EnumSet>& falsifier_g_candidates();  // unary

}  // namespace scott
