#pragma once

// Finite assemblies: carriers with realizer specifications, morphism tracker
// verification, classification flags, binary products, the exponential over a
// partitioned base, and the coded-triple equality witness check for
// exponentials out of an assembly.

#include "scott/enumset.hpp"

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace scott {

struct EmptyRealizerSet : std::runtime_error {
  explicit EmptyRealizerSet(const std::string& l)
      : std::runtime_error("empty realizer set for label: " + l), label(l) {}
  std::string label;
};

struct DuplicateRealizer : std::runtime_error {
  explicit DuplicateRealizer(const std::string& l)
      : std::runtime_error("duplicate realizer in spec for label: " + l), label(l) {}
  std::string label;
};

struct UnknownLabel : std::runtime_error {
  explicit UnknownLabel(const std::string& l)
      : std::runtime_error("label not in carrier: " + l), label(l) {}
  std::string label;
};

struct PredicateSpecUnsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPartitioned : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedTuple : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Semi-decidable membership test on candidate realizers.
using PredicateFn = std::function<bool(const EnumSet& candidate, Fuel probe, Fuel budget)>;

// Either an explicit nonempty list of finite realizers or a predicate.
class RealizerSpec {
 public:
  static RealizerSpec explicit_finite(std::vector<FinSet> sets);
  static RealizerSpec predicate(std::string description, PredicateFn test);

  bool is_explicit() const { return sets_ != nullptr; }
  const std::vector<FinSet>& sets() const;
  const std::string& description() const;
  bool run_predicate(const EnumSet& candidate, Fuel probe, Fuel budget) const;

 private:
  std::shared_ptr<const std::vector<FinSet>> sets_;
  struct Pred {
    std::string description;
    PredicateFn test;
  };
  std::shared_ptr<const Pred> pred_;
};

class FiniteAssembly {
 public:
  const std::string& name() const { return name_; }
  const std::vector<std::string>& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }
  bool has(const std::string& label) const;
  std::size_t index_of(const std::string& label) const;  // throws UnknownLabel
  const RealizerSpec& spec_of(const std::string& label) const;
  const RealizerSpec& spec_at(std::size_t i) const { return specs_[i]; }

  friend FiniteAssembly make_finite_assembly(std::string name, std::vector<std::string> carrier,
                                             std::vector<RealizerSpec> specs);

 private:
  std::string name_;
  std::vector<std::string> carrier_;
  std::vector<RealizerSpec> specs_;
};

// Validates: specs parallel to carrier, explicit specs nonempty and free of
// duplicate sets, labels distinct.
FiniteAssembly make_finite_assembly(std::string name, std::vector<std::string> carrier,
                                    std::vector<RealizerSpec> specs);

// Canonical instances.
FiniteAssembly sigma_assembly();                 // 0 |-> {{}}, 1 |-> {{1}}
FiniteAssembly nabla_assembly(std::string name, std::vector<std::string> labels);  // all {{}}
FiniteAssembly nat_upto_assembly(unsigned k);    // n |-> {{n}}, n <= k
FiniteAssembly one_assembly();                   // single point, {{}}
FiniteAssembly integral_assembly(const FiniteAssembly& x);         // points (x,U)
FiniteAssembly double_integral_assembly(const FiniteAssembly& x);  // points (x,U,V)

// Label of the point (x,U) / (x,U,V) inside the integral assemblies.
std::string integral_label(const std::string& x, const FinSet& u);
std::string double_integral_label(const std::string& x, const FinSet& u, const FinSet& v);

struct ClassifyFlags {
  bool partitioned = false;
  bool modest = false;
  bool discrete = false;
  bool join_property = false;
};

// Flags from explicit realizer data; throws PredicateSpecUnsupported.
ClassifyFlags classify_assembly(const FiniteAssembly& x);

// Fuel-checked membership of a computed value in a realizer spec: agreement
// with some explicit candidate, or the predicate's answer.
bool member_of_spec(const EnumSet& value, const RealizerSpec& spec, Fuel probe, Fuel budget);

enum class VerdictKind { unverified, verified, refuted };

struct TrackerEvidence {
  std::string label;   // source point at which verification failed
  FinSet realizer;     // its realizer
  std::string detail;  // what went wrong
};

struct MorphismVerdict {
  VerdictKind kind = VerdictKind::unverified;
  Fuel probe = 0;
  TrackerEvidence evidence;  // refuted only
  std::string to_string() const;
};

struct Morphism {
  FiniteAssembly source;
  FiniteAssembly target;
  std::map<std::string, std::string> map;
  EnumSet tracker;
  MorphismVerdict verdict;
};

// Validates totality of the label map and membership of its values.
Morphism make_morphism(FiniteAssembly source, FiniteAssembly target,
                       std::map<std::string, std::string> map, EnumSet tracker);

// Checks apply(tracker, V) against the target spec of f(x) for every source
// point x and explicit realizer V; fills in the verdict.
Morphism check_tracker(Morphism f, Fuel probe, Fuel budget);

// Product assembly: labels "(x,y)", realizers the explicit pairing values.
FiniteAssembly binary_product(const FiniteAssembly& x, const FiniteAssembly& y);
std::string product_label(const std::string& x, const std::string& y);
// The explicit pairing value {2n | n in U} + {2n+1 | n in V}.
FinSet pair_realizer(const FinSet& u, const FinSet& v);

// Exponential X^P for partitioned P: carrier = all functions |P| -> |X| (as
// assignment labels), realizers given by predicate specs that test candidate
// trackers pointwise. Throws NotPartitioned / PredicateSpecUnsupported.
FiniteAssembly exp_over_partitioned(const FiniteAssembly& p, const FiniteAssembly& x);
// Label of the function point {p |-> value}; assignment must be total on |P|.
std::string exp_label(const FiniteAssembly& p,
                      const std::map<std::string, std::string>& assignment);

struct RtExpVerdict {
  bool accepted = false;
  unsigned condition = 0;  // failing condition 1..3 when rejected
  std::string instance;    // point(s) at which it failed
  std::string detail;
  std::string to_string() const;
};

// Equality-witness check for the exponential presentation over an assembly
// base: `triple` must code [P,Q,R]; the three conditions are checked over the
// points (x,U) of the integral of X, with f, g given as maps from integral
// labels to labels of Y. Throws MalformedTuple when `triple` shows no
// three-part marker by the budget fuel.
RtExpVerdict rt_exp_eq_witness_check(const FiniteAssembly& x, const FiniteAssembly& y,
                                     const std::map<std::string, std::string>& f,
                                     const std::map<std::string, std::string>& g,
                                     const EnumSet& triple, Fuel probe, Fuel budget);

}  // namespace scott
