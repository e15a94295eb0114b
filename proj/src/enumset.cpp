#include "scott/enumset.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace scott {
namespace detail {

namespace {

struct StageKey {
  Fuel k;
  bool has_bound;
  Nat bound;
  bool operator<(const StageKey& o) const {
    if (k != o.k) return k < o.k;
    if (has_bound != o.has_bound) return has_bound < o.has_bound;
    return bound < o.bound;
  }
};

Nat cap_nat(Fuel k, unsigned jmax) { return Nat(std::min<std::uint64_t>(k, jmax)); }

}  // namespace

class SetNode {
 public:
  virtual ~SetNode() = default;

  FinSet stage(Fuel k, const Nat* bound) const {
    StageKey key{k, bound != nullptr, bound ? *bound : Nat(0)};
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (bound) {
      // A cached full stage answers any bounded query by filtering.
      StageKey full{k, false, Nat(0)};
      if (auto it = memo_.find(full); it != memo_.end()) {
        FinSet cut = it->second.up_to(*bound);
        memo_.emplace(std::move(key), cut);
        return cut;
      }
    }
    FinSet out = compute(k, bound);
    memo_.emplace(std::move(key), out);
    return out;
  }

  virtual Provenance provenance() const = 0;
  virtual const std::string& note() const {
    static const std::string empty;
    return empty;
  }

  // Structural accessors for serialization; null when not applicable.
  virtual const FinSet* literal_value() const { return nullptr; }
  virtual const EnumSet* apply_fn() const { return nullptr; }
  virtual const EnumSet* apply_arg() const { return nullptr; }
  virtual const std::vector<EnumSet>* tuple_parts() const { return nullptr; }
  virtual const std::vector<EnumSet>* applied_args() const { return nullptr; }
  virtual const std::vector<EnumSet>* applied_post() const { return nullptr; }
  virtual bool has_applied_head() const { return false; }
  virtual EnumSet applied_head() const;

 protected:
  virtual FinSet compute(Fuel k, const Nat* bound) const = 0;

 private:
  mutable std::mutex mu_;
  mutable std::map<StageKey, FinSet> memo_;
};

EnumSet SetNode::applied_head() const { return EnumSet(); }

namespace {

class LiteralNode final : public SetNode {
 public:
  explicit LiteralNode(FinSet s) : value_(std::move(s)) {}
  Provenance provenance() const override { return Provenance::literal; }
  const FinSet* literal_value() const override { return &value_; }

 protected:
  FinSet compute(Fuel, const Nat* bound) const override {
    return bound ? value_.up_to(*bound) : value_;
  }

 private:
  FinSet value_;
};

class FamilyNode final : public SetNode {
 public:
  FamilyNode(std::string name, std::function<FinSet(Fuel)> gen)
      : name_(std::move(name)), gen_(std::move(gen)) {}
  Provenance provenance() const override { return Provenance::family; }
  const std::string& note() const override { return name_; }

 protected:
  FinSet compute(Fuel k, const Nat* bound) const override {
    FinSet full = gen_(k);
    return bound ? full.up_to(*bound) : full;
  }

 private:
  std::string name_;
  std::function<FinSet(Fuel)> gen_;
};

// Generic application: decode the pair codes of the function part's stage
// and keep tails whose coded finite set sits inside the argument's stage.
// Membership probes on the argument are bounded, so graph-valued arguments
// never get materialized here.
class ApplyNode final : public SetNode {
 public:
  ApplyNode(EnumSet fn, EnumSet arg) : fn_(std::move(fn)), arg_(std::move(arg)) {}
  Provenance provenance() const override { return Provenance::apply; }
  const EnumSet* apply_fn() const override { return &fn_; }
  const EnumSet* apply_arg() const override { return &arg_; }

 protected:
  FinSet compute(Fuel k, const Nat* bound) const override {
    const FinSet codes = fn_.approx(k);
    std::map<Nat, bool> fits;  // m |-> decode_finite(m) included in arg stage
    std::vector<Nat> out;
    for (const Nat& c : codes) {
      const PairCode pc = unpair_nat(c);
      if (bound && pc.n > *bound) continue;
      auto it = fits.find(pc.m);
      if (it == fits.end()) {
        bool ok = true;
        for (const Nat& x : decode_finite(pc.m)) {
          if (!arg_.contains_at(k, x)) {
            ok = false;
            break;
          }
        }
        it = fits.emplace(pc.m, ok).first;
      }
      if (it->second) out.push_back(pc.n);
    }
    return FinSet::from_any(std::move(out));
  }

 private:
  EnumSet fn_;
  EnumSet arg_;
};

class GraphNode;
class AppliedGraphNode;

FinSet graph_stage(const std::shared_ptr<const GraphNode>& graph,
                   const std::vector<EnumSet>& fixed, const AppliedGraphNode* owner, Fuel k,
                   const Nat* bound);

// Coded graph of a finite-set function. Also the shared home of the
// function-value memo reused by every partial application of the graph.
class GraphNode final : public SetNode, public std::enable_shared_from_this<GraphNode> {
 public:
  GraphNode(GraphFn fn, unsigned arity, GraphOptions opts, Provenance tag)
      : fn_(std::move(fn)), arity_(arity), opts_(std::move(opts)), tag_(tag) {}

  Provenance provenance() const override { return tag_; }
  const std::string& note() const override { return opts_.name; }
  unsigned arity() const { return arity_; }
  const GraphOptions& options() const { return opts_; }

  EnumSet eval(const std::vector<FinSet>& args) const {
    std::lock_guard<std::mutex> lock(fn_mu_);
    if (auto it = fn_memo_.find(args); it != fn_memo_.end()) return it->second;
    EnumSet value = fn_(args);
    fn_memo_.emplace(args, value);
    return value;
  }

 protected:
  FinSet compute(Fuel k, const Nat* bound) const override {
    return graph_stage(shared_from_this(), {}, nullptr, k, bound);
  }

 private:
  GraphFn fn_;
  unsigned arity_;
  GraphOptions opts_;
  Provenance tag_;
  mutable std::mutex fn_mu_;
  mutable std::map<std::vector<FinSet>, EnumSet> fn_memo_;
};

// A graph with some arguments attached. While arguments are still missing the
// stage is the coded graph of the residual function; once saturated it is the
// union of the function values over all admissible argument approximations,
// with any further ("post") applications folded on top.
class AppliedGraphNode final : public SetNode {
 public:
  AppliedGraphNode(std::shared_ptr<const GraphNode> graph, std::vector<EnumSet> fixed,
                   std::vector<EnumSet> post)
      : graph_(std::move(graph)), fixed_(std::move(fixed)), post_(std::move(post)) {}

  Provenance provenance() const override { return Provenance::apply; }
  const std::string& note() const override { return graph_->note(); }
  const std::shared_ptr<const GraphNode>& graph() const { return graph_; }
  const std::vector<EnumSet>& fixed() const { return fixed_; }
  const std::vector<EnumSet>& post() const { return post_; }
  const std::vector<EnumSet>* applied_args() const override { return &fixed_; }
  const std::vector<EnumSet>* applied_post() const override { return &post_; }
  bool has_applied_head() const override { return true; }
  EnumSet applied_head() const override {
    return EnumSet(std::static_pointer_cast<const SetNode>(graph_));
  }

  // Function value at one argument tuple with this node's post applications
  // folded on top. The memo lives here (not on the shared graph) so its
  // entries die with the node that owns them.
  EnumSet chained(const std::vector<FinSet>& args) const {
    std::lock_guard<std::mutex> lock(chain_mu_);
    if (auto it = chain_memo_.find(args); it != chain_memo_.end()) return it->second;
    EnumSet value = graph_->eval(args);
    for (const EnumSet& p : post_) value = apply(value, p);
    chain_memo_.emplace(args, value);
    return value;
  }

 protected:
  FinSet compute(Fuel k, const Nat* bound) const override {
    return graph_stage(graph_, fixed_, this, k, bound);
  }

 private:
  std::shared_ptr<const GraphNode> graph_;
  std::vector<EnumSet> fixed_;
  std::vector<EnumSet> post_;
  mutable std::mutex chain_mu_;
  mutable std::map<std::vector<FinSet>, EnumSet> chain_memo_;
};

class TupleNode final : public SetNode {
 public:
  explicit TupleNode(std::vector<EnumSet> parts) : parts_(std::move(parts)) {}
  Provenance provenance() const override { return Provenance::tuple; }
  const std::vector<EnumSet>* tuple_parts() const override { return &parts_; }

 protected:
  FinSet compute(Fuel k, const Nat* bound) const override {
    std::vector<Nat> out;
    const Nat marker = pair_nat(0, Nat(parts_.size() - 1));
    if (!bound || marker <= *bound) out.push_back(marker);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      const Nat slot = Nat(i + 1);
      FinSet elems;
      if (bound) {
        auto mmax = max_second_under(slot, *bound);
        if (!mmax) continue;
        elems = parts_[i].approx_bounded(k, *mmax);
      } else {
        elems = parts_[i].approx(k);
      }
      for (const Nat& m : elems) out.push_back(pair_nat(slot, m));
    }
    return FinSet::from_any(std::move(out));
  }

 private:
  std::vector<EnumSet> parts_;
};

// Enumerate the m-codes of admissible argument sets at one nesting level.
// Unbounded: all subsets of {0..cap} (guarded). Bounded: walk codes directly,
// which stays linear in sqrt(bound) however large cap is.
void admissible_codes(unsigned cap, const Nat* bound, std::vector<Nat>& out) {
  out.clear();
  if (bound) {
    Nat limit = 0;
    {
      // pair(m, 0) = m(m+1)/2 <= bound  =>  m bounded by ~sqrt(2 bound).
      const Nat doubled = 2 * *bound + 1;
      Nat lo = 0, hi = 2 * boost::multiprecision::sqrt(doubled) + 2;
      while (lo < hi) {
        const Nat mid = (lo + hi + 1) / 2;
        if (pair_nat(mid, 0) <= *bound)
          lo = mid;
        else
          hi = mid - 1;
      }
      limit = lo;
    }
    if (limit < (Nat(1) << std::min(cap + 1, 40u))) {
      for (Nat m = 0; m <= limit; ++m) {
        const FinSet s = decode_finite(m);
        if (!s.empty() && s[s.size() - 1] > cap) continue;
        out.push_back(m);
      }
      return;
    }
  }
  if (cap + 1 > 24)
    throw InfeasibleEnumeration(
        "graph stage enumeration over subsets of {0.." + std::to_string(cap) +
        "} is not materializable; lower the fuel or apply the graph to arguments");
  const std::uint64_t total = std::uint64_t(1) << (cap + 1);
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) out.emplace_back(mask);
}

// All subsets of `base` (by element index). Guarded against blowup; only the
// non-monotone regime ever takes this path.
std::vector<FinSet> all_subsets(const FinSet& base) {
  if (base.size() > 22)
    throw InfeasibleEnumeration("argument approximation too large for subset enumeration (" +
                                std::to_string(base.size()) + " elements)");
  const std::uint64_t total = std::uint64_t(1) << base.size();
  std::vector<FinSet> out;
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Nat> elems;
    for (std::size_t i = 0; i < base.size(); ++i)
      if (mask & (std::uint64_t(1) << i)) elems.push_back(base[i]);
    out.emplace_back(std::move(elems));
  }
  return out;
}

FinSet graph_stage(const std::shared_ptr<const GraphNode>& graph,
                   const std::vector<EnumSet>& fixed, const AppliedGraphNode* owner, Fuel k,
                   const Nat* bound) {
  const GraphOptions& opts = graph->options();
  const Nat cap = cap_nat(k, opts.jmax);
  const unsigned cap_u = static_cast<unsigned>(cap);

  // Admissible approximations of the already-supplied arguments.
  std::vector<FinSet> arg_caps;
  arg_caps.reserve(fixed.size());
  for (const EnumSet& a : fixed) arg_caps.push_back(a.approx_bounded(k, cap));

  const unsigned rem = graph->arity() - static_cast<unsigned>(fixed.size());

  // Value sets of the residual function for one trailing-argument choice.
  auto values_at = [&](const std::vector<FinSet>& trailing, const Nat* value_bound) {
    std::vector<Nat> acc;
    auto add = [&](const std::vector<FinSet>& args) {
      EnumSet v = (rem == 0 && owner) ? owner->chained(args) : graph->eval(args);
      const FinSet vs = value_bound ? v.approx_bounded(k, *value_bound) : v.approx(k);
      acc.insert(acc.end(), vs.begin(), vs.end());
    };
    if (opts.monotone) {
      std::vector<FinSet> args = arg_caps;
      args.insert(args.end(), trailing.begin(), trailing.end());
      add(args);
    } else {
      std::vector<std::vector<FinSet>> pools;
      pools.reserve(arg_caps.size());
      std::size_t bits = 0;
      for (const FinSet& c : arg_caps) bits += c.size();
      if (bits > 22)
        throw InfeasibleEnumeration("subset enumeration over applied arguments too large");
      for (const FinSet& c : arg_caps) pools.push_back(all_subsets(c));
      std::vector<FinSet> args(arg_caps.size());
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == pools.size()) {
          std::vector<FinSet> full = args;
          full.insert(full.end(), trailing.begin(), trailing.end());
          add(full);
          return;
        }
        for (const FinSet& q : pools[i]) {
          args[i] = q;
          rec(i + 1);
        }
      };
      rec(0);
    }
    return FinSet::from_any(std::move(acc));
  };

  if (rem == 0) return values_at({}, bound);

  // Residual graph: nested codes <m_1, <m_2, ... <m_rem, n>...>> with each
  // m_i the code of an enumerated set and n a function value, all under the
  // propagated element bound.
  if (!bound) {
    const unsigned per_level = cap_u + 1;
    if (per_level * rem > 24)
      throw InfeasibleEnumeration(
          "raw graph stage at fuel " + std::to_string(k) + " with arity " +
          std::to_string(graph->arity()) + " is not materializable; apply it to arguments");
  }

  std::vector<Nat> codes;
  std::vector<Nat> out;
  std::vector<FinSet> trailing(rem);
  std::vector<Nat> prefix(rem);
  std::function<void(unsigned, const Nat*)> walk = [&](unsigned level, const Nat* rb) {
    std::vector<Nat> level_codes;
    admissible_codes(cap_u, rb, level_codes);
    for (const Nat& m : level_codes) {
      std::optional<Nat> next_bound;
      if (rb) {
        next_bound = max_second_under(m, *rb);
        if (!next_bound) continue;
      }
      trailing[level] = decode_finite(m);
      prefix[level] = m;
      if (level + 1 == rem) {
        const FinSet vals = values_at(trailing, next_bound ? &*next_bound : nullptr);
        for (const Nat& n : vals) {
          Nat code = n;
          for (unsigned i = rem; i-- > 0;) code = pair_nat(prefix[i], code);
          out.push_back(std::move(code));
        }
      } else {
        walk(level + 1, next_bound ? &*next_bound : nullptr);
      }
    }
  };
  walk(0, bound);
  return FinSet::from_any(std::move(out));
}

}  // namespace
}  // namespace detail

// --- EnumSet public surface --------------------------------------------------

EnumSet::EnumSet() : node_(std::make_shared<detail::LiteralNode>(FinSet{})) {}
EnumSet::EnumSet(std::shared_ptr<const detail::SetNode> node) : node_(std::move(node)) {}

FinSet EnumSet::approx(Fuel k) const { return node_->stage(k, nullptr); }

FinSet EnumSet::approx_bounded(Fuel k, const Nat& bound) const {
  return node_->stage(k, &bound);
}

bool EnumSet::contains_at(Fuel k, const Nat& x) const {
  return node_->stage(k, &x).contains(x);
}

Provenance EnumSet::provenance() const { return node_->provenance(); }
const std::string& EnumSet::note() const { return node_->note(); }

const FinSet* EnumSet::literal_value() const { return node_->literal_value(); }
const EnumSet* EnumSet::apply_fn() const { return node_->apply_fn(); }
const EnumSet* EnumSet::apply_arg() const { return node_->apply_arg(); }
const std::vector<EnumSet>* EnumSet::tuple_parts() const { return node_->tuple_parts(); }
const std::vector<EnumSet>* EnumSet::applied_args() const { return node_->applied_args(); }
const std::vector<EnumSet>* EnumSet::applied_post() const { return node_->applied_post(); }
EnumSet EnumSet::applied_head() const { return node_->applied_head(); }

EnumSet EnumSet::literal(FinSet s) {
  return EnumSet(std::make_shared<detail::LiteralNode>(std::move(s)));
}

EnumSet EnumSet::family(std::string name, std::function<FinSet(Fuel)> gen) {
  return EnumSet(std::make_shared<detail::FamilyNode>(std::move(name), std::move(gen)));
}

EnumSet apply(const EnumSet& fn, const EnumSet& arg) {
  using namespace detail;
  const SetNode* raw = fn.node().get();
  if (dynamic_cast<const GraphNode*>(raw) != nullptr) {
    auto shared = std::static_pointer_cast<const GraphNode>(fn.node());
    return EnumSet(std::make_shared<AppliedGraphNode>(shared, std::vector<EnumSet>{arg},
                                                      std::vector<EnumSet>{}));
  }
  if (auto ag = dynamic_cast<const AppliedGraphNode*>(raw)) {
    std::vector<EnumSet> fixed = ag->fixed();
    std::vector<EnumSet> post = ag->post();
    if (fixed.size() < ag->graph()->arity())
      fixed.push_back(arg);
    else
      post.push_back(arg);
    return EnumSet(
        std::make_shared<AppliedGraphNode>(ag->graph(), std::move(fixed), std::move(post)));
  }
  return EnumSet(std::make_shared<ApplyNode>(fn, arg));
}

EnumSet apply_all(EnumSet fn, const std::vector<EnumSet>& args) {
  for (const EnumSet& a : args) fn = apply(fn, a);
  return fn;
}

EnumSet graph_of(GraphFn fn, unsigned arity, GraphOptions opts) {
  if (arity == 0) throw std::invalid_argument("graph_of: arity must be at least 1");
  return EnumSet(
      std::make_shared<detail::GraphNode>(std::move(fn), arity, std::move(opts), Provenance::graph));
}

namespace detail {
// Internal constructor used by the interpreter so abstractions carry the
// interpreted-term tag; declared here to keep GraphNode private to this file.
EnumSet make_graph_node(GraphFn fn, unsigned arity, GraphOptions opts, Provenance tag) {
  if (arity == 0) throw std::invalid_argument("graph node: arity must be at least 1");
  return EnumSet(std::make_shared<GraphNode>(std::move(fn), arity, std::move(opts), tag));
}

EnumSet make_tuple_node(std::vector<EnumSet> parts) {
  if (parts.empty()) throw std::invalid_argument("tuple: parts must be nonempty");
  return EnumSet(std::make_shared<TupleNode>(std::move(parts)));
}
}  // namespace detail

// --- comparison --------------------------------------------------------------

std::string EqVerdict::to_string() const {
  std::ostringstream os;
  if (kind == EqKind::AgreeThrough) {
    os << "AgreeThrough(" << probe << ")";
  } else {
    os << "MissingWitness(" << (side == Side::left ? "left" : "right") << ", " << missing << ")";
  }
  return os.str();
}

EqVerdict set_eq_upto(const EnumSet& u, const EnumSet& v, Fuel probe, Fuel budget) {
  if (probe > budget) throw std::invalid_argument("set_eq_upto: probe must be <= budget");
  for (const Nat& n : u.approx(probe)) {
    if (!v.contains_at(budget, n)) return EqVerdict{EqKind::MissingWitness, probe, Side::left, n};
  }
  for (const Nat& n : v.approx(probe)) {
    if (!u.contains_at(budget, n)) return EqVerdict{EqKind::MissingWitness, probe, Side::right, n};
  }
  return EqVerdict{EqKind::AgreeThrough, probe, Side::left, Nat(0)};
}

bool agree_through(const EnumSet& u, const EnumSet& v, Fuel probe, Fuel budget) {
  return set_eq_upto(u, v, probe, budget).agreed();
}

// --- opens -------------------------------------------------------------------

bool open_contains(const OpenSet& open, const FinSet& v) {
  for (const FinSet& b : open.basics)
    if (b.subset_of(v)) return true;
  return false;
}

OpenVerdict open_member(const OpenSet& open, const EnumSet& u, Fuel budget) {
  for (Fuel k = 0; k <= budget; ++k) {
    const FinSet st = u.approx(k);
    for (const FinSet& b : open.basics) {
      if (b.subset_of(st)) return OpenVerdict{true, b, k, budget};
    }
  }
  return OpenVerdict{false, FinSet{}, 0, budget};
}

}  // namespace scott
