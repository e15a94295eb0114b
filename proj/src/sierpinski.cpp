#include "scott/sierpinski.hpp"

#include "scott/interp.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace scott {

namespace {

GraphOptions wide_monotone(std::string name) {
  GraphOptions o;
  o.jmax = kWideJmax;
  o.monotone = true;
  o.name = std::move(name);
  return o;
}

void require_explicit(const FiniteAssembly& x, const char* op) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x.spec_at(i).is_explicit())
      throw PredicateSpecUnsupported(std::string(op) + " needs explicit realizers (assembly " +
                                     x.name() + ")");
}

}  // namespace

std::pair<EnumSet, EnumSet> chi_iso_trackers() {
  GraphFn chi = [](const std::vector<FinSet>& args) {
    std::vector<Nat> out;
    for (const Nat& n : args.at(0))
      out.push_back(pair_nat(Nat(1) << static_cast<unsigned>(n), 1));
    return EnumSet::literal(FinSet::from_any(std::move(out)));
  };
  GraphFn chi_inv = [](const std::vector<FinSet>& args) {
    const FinSet u = args.at(0);
    return EnumSet::family("char-preimage", [u](Fuel k) {
      // n is reported when some code <m, 1> in u applies to {n}: either the
      // always-applicable m = 0, or m coding exactly {n}.
      bool top = false;
      std::vector<Nat> hits;
      for (const Nat& c : u) {
        const PairCode pc = unpair_nat(c);
        if (pc.n != 1) continue;
        if (pc.m == 0) {
          top = true;
          continue;
        }
        const FinSet dom = decode_finite(pc.m);
        if (dom.size() == 1) hits.push_back(dom[0]);
      }
      std::vector<Nat> out;
      if (top) {
        for (Fuel n = 0; n <= k; ++n) out.emplace_back(n);
      } else {
        for (const Nat& n : hits)
          if (n <= k) out.push_back(n);
      }
      return FinSet::from_any(std::move(out));
    });
  };
  return {graph_of(std::move(chi), 1, wide_monotone("char-tracker")),
          graph_of(std::move(chi_inv), 1, wide_monotone("char-inverse-tracker"))};
}

std::string ElementhoodVerdict::to_string() const {
  if (found) return "Yes(at fuel " + std::to_string(at) + ")";
  return "Unknown(budget " + std::to_string(budget) + ")";
}

ElementhoodVerdict elementhood_realizer(const Nat& n, const EnumSet& u, Fuel budget) {
  ElementhoodVerdict v;
  v.budget = budget;
  for (Fuel k = 0; k <= budget; ++k) {
    if (u.contains_at(k, n)) {
      v.found = true;
      v.at = k;
      v.realizer = apply_all(std_env().get("p"), {numeral(n), u});
      return v;
    }
  }
  return v;
}

ODReport is_order_discrete(const FiniteAssembly& x) {
  require_explicit(x, "order-discreteness check");
  ODReport r;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (i == j) continue;
      for (const FinSet& u : x.spec_at(i).sets()) {
        for (const FinSet& v : x.spec_at(j).sets()) {
          if (u.subset_of(v)) {
            r.order_discrete = false;
            r.violation = ODViolation{x.carrier()[i], x.carrier()[j], u, v};
            return r;
          }
        }
      }
    }
  }
  r.order_discrete = true;
  return r;
}

EnumSet ODWitness::section_tracker(const EnumSet& f) const {
  const EnumSet at_empty = apply(f, EnumSet::literal(FinSet{}));
  const EnumSet at_one = apply(f, EnumSet::literal(FinSet{1}));
  const EnumSet lower = apply_all(a, {at_empty, at_empty});
  const EnumSet upper = apply_all(a, {at_empty, at_one});
  GraphFn fn = [lower, upper](const std::vector<FinSet>& args) {
    return args.at(0).empty() ? lower : upper;
  };
  return graph_of(std::move(fn), 1, wide_monotone("diagonal-section"));
}

ODWitness od_witness(const FiniteAssembly& x) {
  const ODReport r = is_order_discrete(x);
  if (!r.order_discrete) {
    const ODViolation& w = *r.violation;
    throw NotOrderDiscrete("assembly " + x.name() + " is not order-discrete: " + w.u.to_string() +
                           " in E(" + w.x + ") sits inside " + w.v.to_string() + " in E(" + w.y +
                           ")");
  }
  ODWitness w;
  w.a = interpret(parse_term("\\u v. u"), {}, InterpretOptions{kWideJmax});
  w.note = "first projection; sound because comparable realizers share their point";
  return w;
}

MorphismVerdict check_od_witness(const FiniteAssembly& x, const ODWitness& w, Fuel probe,
                                 Fuel budget) {
  require_explicit(x, "witness check");
  MorphismVerdict verdict;
  verdict.probe = probe;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      for (const FinSet& u : x.spec_at(i).sets()) {
        for (const FinSet& v : x.spec_at(j).sets()) {
          if (!u.subset_of(v)) continue;
          const EnumSet value = apply_all(w.a, {EnumSet::literal(u), EnumSet::literal(v)});
          if (!member_of_spec(value, x.spec_at(i), probe, budget)) {
            verdict.kind = VerdictKind::refuted;
            verdict.evidence =
                TrackerEvidence{x.carrier()[i], u,
                                "witness value at " + v.to_string() + " left E(" +
                                    x.carrier()[i] + ")"};
            return verdict;
          }
        }
      }
    }
  }
  verdict.kind = VerdictKind::verified;
  return verdict;
}

std::size_t Partition::block_of(const std::string& label) const {
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (std::find(blocks[b].begin(), blocks[b].end(), label) != blocks[b].end()) return b;
  throw UnknownLabel(label);
}

std::vector<MergeWitness> Partition::chain(const std::string& a, const std::string& b) const {
  if (block_of(a) != block_of(b)) throw UnknownLabel("no chain: " + a + " and " + b);
  if (a == b) return {};
  // Breadth-first search over the spanning edges.
  std::map<std::string, std::pair<std::string, MergeWitness>> parent;
  std::deque<std::string> queue = {a};
  parent.emplace(a, std::make_pair(std::string(), MergeWitness{}));
  while (!queue.empty()) {
    const std::string cur = queue.front();
    queue.pop_front();
    if (cur == b) break;
    for (const MergeWitness& e : edges) {
      std::string next;
      MergeWitness step = e;
      if (e.x == cur) {
        next = e.y;
      } else if (e.y == cur) {
        next = e.x;
        std::swap(step.x, step.y);
        std::swap(step.u, step.v);
      } else {
        continue;
      }
      if (parent.count(next)) continue;
      parent.emplace(next, std::make_pair(cur, step));
      queue.push_back(next);
    }
  }
  std::vector<MergeWitness> path;
  for (std::string cur = b; cur != a; cur = parent.at(cur).first)
    path.push_back(parent.at(cur).second);
  std::reverse(path.begin(), path.end());
  return path;
}

ODReflection od_reflection(const FiniteAssembly& x) {
  require_explicit(x, "reflection");
  const std::size_t n = x.size();
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&root](std::size_t i) {
    while (root[i] != i) i = root[i] = root[root[i]];
    return i;
  };
  Partition part;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (find(i) == find(j)) continue;
      for (const FinSet& u : x.spec_at(i).sets()) {
        for (const FinSet& v : x.spec_at(j).sets()) {
          if (u.subset_of(v) || v.subset_of(u)) {
            root[find(j)] = find(i);
            part.edges.push_back(MergeWitness{x.carrier()[i], x.carrier()[j], u, v});
            goto merged;
          }
        }
      }
    merged:;
    }
  }
  // Collect blocks in carrier order of their leading member.
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < n; ++i) by_root[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < n; ++i)
    if (find(i) == i) blocks.push_back(by_root.at(i));
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  std::vector<std::string> labels;
  std::vector<RealizerSpec> specs;
  for (const auto& block : blocks) {
    std::string label;
    std::vector<std::string> members;
    std::vector<FinSet> realizers;
    for (std::size_t i : block) {
      if (!label.empty()) label += "|";
      label += x.carrier()[i];
      members.push_back(x.carrier()[i]);
      for (const FinSet& u : x.spec_at(i).sets())
        if (std::find(realizers.begin(), realizers.end(), u) == realizers.end())
          realizers.push_back(u);
    }
    part.blocks.push_back(std::move(members));
    labels.push_back(std::move(label));
    specs.push_back(RealizerSpec::explicit_finite(std::move(realizers)));
  }
  ODReflection out;
  out.partition = std::move(part);
  out.quotient = make_finite_assembly(x.name() + "/~", std::move(labels), std::move(specs));
  return out;
}

SigmaSub sigma_sub_from_open(const FiniteAssembly& x, const OpenSet& u, Fuel probe,
                             Fuel budget) {
  require_explicit(x, "subobject from open");
  std::vector<std::string> inside, labels;
  std::vector<RealizerSpec> specs;
  std::map<std::string, std::string> to_sigma;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& sets = x.spec_at(i).sets();
    std::size_t hits = 0;
    for (const FinSet& v : sets)
      if (open_contains(u, v)) ++hits;
    if (hits == sets.size()) {
      inside.push_back(x.carrier()[i]);
      labels.push_back(x.carrier()[i]);
      specs.push_back(x.spec_at(i));
      to_sigma[x.carrier()[i]] = "1";
    } else if (hits == 0) {
      to_sigma[x.carrier()[i]] = "0";
    } else {
      throw NotCrisp(x.carrier()[i]);
    }
  }
  GraphFn fn = [u](const std::vector<FinSet>& args) {
    return EnumSet::literal(open_contains(u, args.at(0)) ? FinSet{1} : FinSet{});
  };
  const EnumSet tracker = graph_of(std::move(fn), 1, wide_monotone("open-indicator"));
  SigmaSub out;
  out.sub = make_finite_assembly(x.name() + "'", std::move(labels), std::move(specs));
  out.classifier = check_tracker(
      make_morphism(x, sigma_assembly(), std::move(to_sigma), tracker), probe, budget);
  return out;
}

OpenTrace sigma_sub_classify(const Morphism& f, Fuel budget) {
  if (f.verdict.kind != VerdictKind::verified)
    throw TrackerNotVerified("classifier trace needs a verified map to the two-point classifier");
  OpenTrace trace;
  for (std::size_t i = 0; i < f.source.size(); ++i) {
    const std::string& label = f.source.carrier()[i];
    if (f.map.at(label) == "1") trace.inside.push_back(label);
    for (const FinSet& v : f.source.spec_at(i).sets()) {
      const EnumSet value = apply(f.tracker, EnumSet::literal(v));
      trace.rows.push_back(OpenTraceRow{label, v, value.contains_at(budget, 1)});
    }
  }
  return trace;
}

FinSet lift_realizer(const FinSet& u) {
  std::vector<Nat> out = {pair_nat(0, 1), pair_nat(2, 1)};
  for (const Nat& m : u) out.push_back(pair_nat(1, m));
  return FinSet::from_any(std::move(out));
}

namespace {

std::string fresh_bottom(const FiniteAssembly& x) {
  std::string label = "⊥";
  while (x.has(label)) label += "'";
  return label;
}

// First tuple component of each element's code: {m | <1,m> in the input}.
FinSet untuple_first(const FinSet& v) {
  std::vector<Nat> out;
  for (const Nat& c : v) {
    const PairCode pc = unpair_nat(c);
    if (pc.m == 1) out.push_back(pc.n);
  }
  return FinSet::from_any(std::move(out));
}

bool tuple_flag_set(const FinSet& v) { return v.contains(pair_nat(2, 1)); }

}  // namespace

LiftAssembly lift_object(const FiniteAssembly& x) {
  require_explicit(x, "lift");
  LiftAssembly out;
  out.bottom = fresh_bottom(x);
  std::vector<std::string> labels;
  std::vector<RealizerSpec> specs;
  for (std::size_t i = 0; i < x.size(); ++i) {
    labels.push_back(x.carrier()[i]);
    std::vector<FinSet> lifted;
    for (const FinSet& u : x.spec_at(i).sets()) lifted.push_back(lift_realizer(u));
    specs.push_back(RealizerSpec::explicit_finite(std::move(lifted)));
  }
  labels.push_back(out.bottom);
  specs.push_back(RealizerSpec::explicit_finite({FinSet{}}));
  out.assembly = make_finite_assembly("L(" + x.name() + ")", std::move(labels), std::move(specs));
  return out;
}

Morphism lift_morphism(const Morphism& f, Fuel probe, Fuel budget) {
  if (f.verdict.kind != VerdictKind::verified)
    throw TrackerNotVerified("lift needs a verified morphism");
  const LiftAssembly src = lift_object(f.source);
  const LiftAssembly tgt = lift_object(f.target);
  std::map<std::string, std::string> map;
  for (const std::string& l : f.source.carrier()) map[l] = f.map.at(l);
  map[src.bottom] = tgt.bottom;
  const EnumSet base_tracker = f.tracker;
  GraphFn fn = [base_tracker](const std::vector<FinSet>& args) {
    const FinSet& v = args.at(0);
    if (!tuple_flag_set(v)) return EnumSet::literal(FinSet{});
    return tuple_code({apply(base_tracker, EnumSet::literal(untuple_first(v))),
                       EnumSet::literal(FinSet{1})});
  };
  const EnumSet tracker = graph_of(std::move(fn), 1, wide_monotone("lifted-tracker"));
  return check_tracker(make_morphism(src.assembly, tgt.assembly, std::move(map), tracker), probe,
                       budget);
}

Morphism eta(const FiniteAssembly& x, Fuel probe, Fuel budget) {
  const LiftAssembly lx = lift_object(x);
  std::map<std::string, std::string> map;
  for (const std::string& l : x.carrier()) map[l] = l;
  const EnumSet tracker = interpret(parse_term("\\u. [u, {1}]"), {}, InterpretOptions{kWideJmax});
  return check_tracker(make_morphism(x, lx.assembly, std::move(map), tracker), probe, budget);
}

Morphism mu(const FiniteAssembly& x, Fuel probe, Fuel budget) {
  const LiftAssembly lx = lift_object(x);
  const LiftAssembly llx = lift_object(lx.assembly);
  std::map<std::string, std::string> map;
  for (const std::string& l : lx.assembly.carrier()) map[l] = l;
  map[llx.bottom] = lx.bottom;
  GraphFn fn = [](const std::vector<FinSet>& args) {
    return EnumSet::literal(untuple_first(args.at(0)));
  };
  const EnumSet tracker = graph_of(std::move(fn), 1, wide_monotone("unwrap-once"));
  return check_tracker(make_morphism(llx.assembly, lx.assembly, std::move(map), tracker), probe,
                       budget);
}

Morphism chi_classifier(const FiniteAssembly& x, Fuel probe, Fuel budget) {
  const LiftAssembly lx = lift_object(x);
  std::map<std::string, std::string> map;
  for (const std::string& l : x.carrier()) map[l] = "1";
  map[lx.bottom] = "0";
  GraphFn fn = [](const std::vector<FinSet>& args) {
    return EnumSet::literal(tuple_flag_set(args.at(0)) ? FinSet{1} : FinSet{});
  };
  const EnumSet tracker = graph_of(std::move(fn), 1, wide_monotone("definedness-flag"));
  return check_tracker(make_morphism(lx.assembly, sigma_assembly(), std::move(map), tracker),
                       probe, budget);
}

Morphism tilde_morphism(const Morphism& f, const FiniteAssembly& ambient, const OpenSet& u,
                        Fuel probe, Fuel budget) {
  if (f.verdict.kind != VerdictKind::verified)
    throw TrackerNotVerified("partial-map extension needs a verified morphism");
  require_explicit(ambient, "partial-map extension");
  const LiftAssembly lt = lift_object(f.target);
  std::map<std::string, std::string> map;
  for (std::size_t i = 0; i < ambient.size(); ++i) {
    const std::string& label = ambient.carrier()[i];
    const auto& sets = ambient.spec_at(i).sets();
    std::size_t hits = 0;
    for (const FinSet& v : sets)
      if (open_contains(u, v)) ++hits;
    if (hits == sets.size()) {
      if (!f.source.has(label))
        throw NotCrisp(label + " lies in the open but not in the domain of the map");
      map[label] = f.map.at(label);
    } else if (hits == 0) {
      if (f.source.has(label))
        throw NotCrisp(label + " lies in the domain of the map but not in the open");
      map[label] = lt.bottom;
    } else {
      throw NotCrisp(label);
    }
  }
  const EnumSet base_tracker = f.tracker;
  GraphFn fn = [base_tracker, u](const std::vector<FinSet>& args) {
    const FinSet& v = args.at(0);
    if (!open_contains(u, v)) return EnumSet::literal(FinSet{});
    return tuple_code(
        {apply(base_tracker, EnumSet::literal(v)), EnumSet::literal(FinSet{1})});
  };
  const EnumSet tracker = graph_of(std::move(fn), 1, wide_monotone("partial-extension"));
  return check_tracker(make_morphism(ambient, lt.assembly, std::move(map), tracker), probe,
                       budget);
}

EnumSet ip_realizer() {
  return interpret(parse_term("\\u. p (p0 (u k)) (\\v. p1 (u k))"), {},
                   InterpretOptions{kWideJmax});
}

std::string FalsifierReport::to_string() const {
  if (!violation) return "Inconclusive(budget " + std::to_string(budget) + ")";
  return "Violation(condition " + std::to_string(condition) + " at U=" + u.to_string() +
         ", V=" + v.to_string() + ": " + detail + ")";
}

FalsifierReport union_failure_falsifier(const EnumSet& f_cand, const EnumSet& g_cand,
                                        Fuel budget) {
  FalsifierReport report;
  report.budget = budget;
  // Most-informative pair first: the diagonal argument starts from both
  // flags raised, and the two mixed pairs expose a side-naming error.
  const std::vector<std::pair<FinSet, FinSet>> pairs = {
      {FinSet{1}, FinSet{1}}, {FinSet{}, FinSet{1}}, {FinSet{1}, FinSet{}}, {FinSet{}, FinSet{}}};
  bool all_definitive = true;
  for (const auto& [pu, pv] : pairs) {
    FalsifierPairTrace trace;
    trace.u = pu;
    trace.v = pv;
    const bool premise = pu.contains(1) || pv.contains(1);
    const EnumSet fuv = apply_all(f_cand, {EnumSet::literal(pu), EnumSet::literal(pv)});
    const bool one_in_fuv = fuv.contains_at(budget, 1);
    if (premise && !one_in_fuv) {
      report.violation = true;
      report.condition = 1;
      report.u = pu;
      report.v = pv;
      report.detail = "a flag is raised but 1 did not enter F(U,V) by fuel " +
                      std::to_string(budget);
      trace.note = "condition 1 violated";
      report.traces.push_back(std::move(trace));
      return report;
    }
    if (!one_in_fuv) {
      trace.note = premise ? "condition 1 satisfied" : "no flag raised; nothing to check";
      report.traces.push_back(std::move(trace));
      continue;
    }
    const EnumSet guv = apply(g_cand, fuv);
    const bool says_left = guv.contains_at(budget, 0);
    const bool says_right = guv.contains_at(budget, 1);
    if (says_left && says_right) {
      report.violation = true;
      report.condition = 2;
      report.u = pu;
      report.v = pv;
      report.detail = "G(F(U,V)) contains both 0 and 1, so it is neither 0-bar nor 1-bar";
      trace.note = "condition 2 violated";
      report.traces.push_back(std::move(trace));
      return report;
    }
    if (says_left || says_right) {
      const FinSet& side = says_left ? pu : pv;
      if (!side.contains(1)) {
        report.violation = true;
        report.condition = 2;
        report.u = pu;
        report.v = pv;
        report.detail = std::string("G names the ") + (says_left ? "left" : "right") +
                        " input but its flag is down";
        trace.note = "condition 2 violated";
        report.traces.push_back(std::move(trace));
        return report;
      }
      trace.note = std::string("G names the ") + (says_left ? "left" : "right") +
                   " input, correctly";
    } else {
      trace.note = "G(F(U,V)) showed neither 0 nor 1 by the budget";
      all_definitive = false;
    }
    report.traces.push_back(std::move(trace));
  }
  (void)all_definitive;
  return report;  // inconclusive at this budget
}

const std::map<std::string, EnumSet>& falsifier_f_candidates() {
  static const std::map<std::string, EnumSet> table = [] {
    std::map<std::string, EnumSet> t;
    GraphFn set_union = [](const std::vector<FinSet>& a) {
      return EnumSet::literal(a.at(0).union_with(a.at(1)));
    };
    GraphFn left = [](const std::vector<FinSet>& a) { return EnumSet::literal(a.at(0)); };
    GraphFn right = [](const std::vector<FinSet>& a) { return EnumSet::literal(a.at(1)); };
    GraphFn none = [](const std::vector<FinSet>&) { return EnumSet::literal(FinSet{}); };
    t.emplace("union", graph_of(std::move(set_union), 2, wide_monotone("union")));
    t.emplace("left", graph_of(std::move(left), 2, wide_monotone("left")));
    t.emplace("right", graph_of(std::move(right), 2, wide_monotone("right")));
    t.emplace("empty", graph_of(std::move(none), 2, wide_monotone("empty")));
    return t;
  }();
  return table;
}

const std::map<std::string, EnumSet>& falsifier_g_candidates() {
  static const std::map<std::string, EnumSet> table = [] {
    std::map<std::string, EnumSet> t;
    GraphFn zero = [](const std::vector<FinSet>&) { return EnumSet::literal(FinSet{0}); };
    GraphFn one = [](const std::vector<FinSet>&) { return EnumSet::literal(FinSet{1}); };
    GraphFn has_one = [](const std::vector<FinSet>& a) {
      return EnumSet::literal(a.at(0).contains(1) ? FinSet{1} : FinSet{});
    };
    GraphFn none = [](const std::vector<FinSet>&) { return EnumSet::literal(FinSet{}); };
    t.emplace("const0", graph_of(std::move(zero), 1, wide_monotone("const0")));
    t.emplace("const1", graph_of(std::move(one), 1, wide_monotone("const1")));
    t.emplace("contains1", graph_of(std::move(has_one), 1, wide_monotone("contains1")));
    t.emplace("empty", graph_of(std::move(none), 1, wide_monotone("empty")));
    return t;
  }();
  return table;
}

}  // namespace scott
