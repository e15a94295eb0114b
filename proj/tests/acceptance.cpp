// Acceptance checks: one pass/fail line per criterion, with the probe/budget
// pairs and wall-clock limits pinned below.  Exit 0 only when every line
// passes within its limit.
#include "scott/assembly.hpp"
#include "scott/enumset.hpp"
#include "scott/homotopy.hpp"
#include "scott/interp.hpp"
#include "scott/nat.hpp"
#include "scott/sierpinski.hpp"
#include "scott/term.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

using namespace scott;

namespace {

// Pinned tolerances: every agreement check runs at these probe/budget pairs.
constexpr Fuel kLawProbe = 6;
constexpr Fuel kLawBudget = 12;
constexpr Fuel kChiProbe = 8;
// Subsets of {0..7} need the membership code for 7, which is pair(128, 1) =
// 8386; the first stage past it decides every check exactly.
constexpr Fuel kChiBudget = 8400;
constexpr Fuel kProbe = 8;
constexpr Fuel kBudget = 64;
// Realizers three lifts deep carry codes up to pair(1, 1538); this budget
// clears them.
constexpr Fuel kMonadBudget = 2048;
constexpr Fuel kExtendBudget = 512;

struct CriterionResult {
  bool pass = false;
  std::string note;
};

std::string count_note(unsigned long long checks, unsigned long long failures) {
  std::string n = std::to_string(checks) + " checks";
  if (failures > 0) n += ", " + std::to_string(failures) + " failed";
  return n;
}

// The eight subsets of {0,1,2} by bitmask, and the 255 nonempty families of
// them, shared by the exhaustive assembly sweeps.
const std::vector<FinSet>& element_sets() {
  static const std::vector<FinSet> sets = [] {
    std::vector<FinSet> out;
    for (unsigned m = 0; m < 8; ++m) {
      std::vector<Nat> e;
      for (unsigned b = 0; b < 3; ++b)
        if (m & (1u << b)) e.emplace_back(b);
      out.push_back(FinSet::from_any(std::move(e)));
    }
    return out;
  }();
  return sets;
}

const std::vector<std::vector<FinSet>>& families() {
  static const std::vector<std::vector<FinSet>> fams = [] {
    std::vector<std::vector<FinSet>> out(256);
    for (unsigned f = 1; f < 256; ++f)
      for (unsigned m = 0; m < 8; ++m)
        if (f & (1u << m)) out[f].push_back(element_sets()[m]);
    return out;
  }();
  return fams;
}

FiniteAssembly assembly_of(const std::vector<unsigned>& fam_masks) {
  static const std::vector<std::string> labels{"a", "b", "c", "d"};
  std::vector<std::string> carrier(labels.begin(), labels.begin() + fam_masks.size());
  std::vector<RealizerSpec> specs;
  for (unsigned f : fam_masks) specs.push_back(RealizerSpec::explicit_finite(families()[f]));
  return make_finite_assembly("x", std::move(carrier), std::move(specs));
}

// --- criterion 1: coding roundtrips -----------------------------------------

CriterionResult coding_roundtrips() {
  unsigned long long checks = 0, failures = 0;
  // Frozen spot values of the pairing.
  const std::pair<std::pair<unsigned, unsigned>, unsigned> frozen[] = {
      {{0, 1}, 2}, {{1, 1}, 4}, {{2, 1}, 7}, {{1, 2}, 8},
      {{4, 1}, 16}, {{8, 1}, 46}, {{128, 1}, 8386}, {{0, 3}, 9}, {{0, 5}, 20}};
  for (const auto& [mn, code] : frozen) {
    ++checks;
    if (pair_nat(Nat(mn.first), Nat(mn.second)) != Nat(code)) ++failures;
  }
  std::vector<Nat> codes;
  codes.reserve(65536);
  for (unsigned m = 0; m < 256; ++m)
    for (unsigned n = 0; n < 256; ++n) {
      const Nat code = pair_nat(Nat(m), Nat(n));
      const PairCode back = unpair_nat(code);
      ++checks;
      if (back.m != Nat(m) || back.n != Nat(n) || back.code != code) ++failures;
      codes.push_back(code);
    }
  std::sort(codes.begin(), codes.end());
  ++checks;
  if (std::adjacent_find(codes.begin(), codes.end()) != codes.end()) ++failures;

  ++checks;
  if (!(decode_finite(Nat(0)) == FinSet{}) || !(decode_finite(Nat(1024)) == FinSet{10}))
    ++failures;
  for (unsigned n = 0; n < (1u << 16); ++n) {
    ++checks;
    if (encode_finite(decode_finite(Nat(n))) != Nat(n)) ++failures;
  }
  return {failures == 0, count_note(checks, failures)};
}

// --- criterion 2: pairing and case-combinator laws ---------------------------

CriterionResult combinator_laws() {
  const EnumSet& p = std_env().get("p");
  const EnumSet& p0 = std_env().get("p0");
  const EnumSet& p1 = std_env().get("p1");
  const EnumSet& q = std_env().get("q");
  const EnumSet& t = std_env().get("t");
  const EnumSet& f = std_env().get("f");
  std::vector<FinSet> subsets;
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<Nat> e;
    for (unsigned b = 0; b < 6; ++b)
      if (mask & (1u << b)) e.emplace_back(b);
    subsets.push_back(FinSet::from_any(std::move(e)));
  }
  unsigned long long checks = 0, failures = 0;
  for (const FinSet& u : subsets)
    for (const FinSet& v : subsets) {
      const EnumSet lu = EnumSet::literal(u);
      const EnumSet lv = EnumSet::literal(v);
      const EnumSet paired = apply_all(p, {lu, lv});
      const bool ok =
          agree_through(apply(p0, paired), lu, kLawProbe, kLawBudget) &&
          agree_through(apply(p1, paired), lv, kLawProbe, kLawBudget) &&
          agree_through(apply_all(q, {t, lu, lv}), lu, kLawProbe, kLawBudget) &&
          agree_through(apply_all(q, {f, lu, lv}), lv, kLawProbe, kLawBudget);
      checks += 4;
      if (!ok) ++failures;
    }
  return {failures == 0, count_note(checks, failures)};
}

// --- criterion 3: beta reduction soundness -----------------------------------

CriterionResult beta_soundness() {
  const char* corpus[] = {
      "(\\x. x) {0,1,2}",
      "(\\x. x) (p {1} {2})",
      "(\\x. x) #3",
      "(\\x. p0 x) (p {0,2} {5})",
      "(\\x. p1 x) (p {0} {3})",
      "(\\x. p x x) {1,2}",
      "(\\x. p x {0}) {1}",
      "(\\x. p {0} x) {1}",
      "(\\x. p0 (p x x)) {5}",
      "(\\x. p1 (p {2} x)) {5}",
      "(\\x. q t x {9}) {4}",
      "(\\x. q f {9} x) {4}",
      "(\\x. q x {7} {8}) t",
      "(\\x. (\\y. x) {8}) {3}",
      "(\\x. (\\y. y) x) {6}",
      "(\\x. (\\y. p x y) {1}) {0}",
      "(\\x. x {0}) i",
      "(\\x. x (x {0,1})) i",
      "(\\x. p1 (x {1})) i",
      "(\\x. [x, {1}]) {2}",
      "(\\x. len [x]) {9}",
      "(\\x. concat [x] [{2}]) {1}",
      "(\\x. i x) {0,5}",
      "(\\x. k x {9}) {3}",
  };
  unsigned long long checks = 0, failures = 0;
  for (const char* src : corpus) {
    ++checks;
    const TermPtr redex = parse_term(src);
    if (redex->kind != Term::Kind::app || redex->fn->kind != Term::Kind::lam) {
      ++failures;
      continue;
    }
    const TermPtr contracted = substitute(redex->fn->body, redex->fn->name, redex->arg);
    if (!beta_equiv_check(redex, contracted, kLawProbe, kLawBudget).agreed()) ++failures;
  }
  return {checks >= 20 && failures == 0, count_note(checks, failures)};
}

// --- criterion 4: subset characteristic trackers -----------------------------

CriterionResult characteristic_trackers() {
  const auto [chi, chi_inverse] = chi_iso_trackers();
  unsigned long long checks = 0, failures = 0;
  for (unsigned mask = 0; mask < 256; ++mask) {
    std::vector<Nat> e;
    for (unsigned b = 0; b < 8; ++b)
      if (mask & (1u << b)) e.emplace_back(b);
    const FinSet u = FinSet::from_any(std::move(e));
    const EnumSet coded = apply(chi, EnumSet::literal(u));
    for (unsigned n = 0; n < 8; ++n) {
      ++checks;
      const EnumSet flag = apply(coded, numeral(Nat(n)));
      if (u.contains(Nat(n))) {
        if (!flag.contains_at(kChiBudget, Nat(1)) ||
            !agree_through(flag, EnumSet::literal(FinSet{1}), kChiProbe, kChiBudget))
          ++failures;
      } else {
        if (flag.contains_at(kChiBudget, Nat(1)) || !flag.approx(kChiBudget).empty()) ++failures;
      }
    }
    ++checks;
    const EnumSet back = apply(chi_inverse, coded);
    if (!agree_through(back, EnumSet::literal(u), kChiProbe, kChiBudget)) ++failures;
  }
  return {failures == 0, count_note(checks, failures)};
}

// --- criterion 5: order-discrete implies discrete ----------------------------

// Mask mirrors of the two definitions: a family is a bitmask over the eight
// element sets; comparability means some cross inclusion, discreteness means
// no family shares a realizer set verbatim.
struct MaskTables {
  std::vector<std::vector<bool>> comparable;  // some u in a, v in b with u<=v or v<=u
  MaskTables() : comparable(256, std::vector<bool>(256, false)) {
    for (unsigned a = 1; a < 256; ++a)
      for (unsigned b = 1; b < 256; ++b)
        for (unsigned s = 0; s < 8 && !comparable[a][b]; ++s) {
          if (!(a & (1u << s))) continue;
          for (unsigned t = 0; t < 8; ++t)
            if ((b & (1u << t)) && (((s & t) == s) || ((s & t) == t))) {
              comparable[a][b] = true;
              break;
            }
        }
  }
};

CriterionResult od_implies_discrete() {
  const MaskTables tables;
  unsigned long long checks = 0, failures = 0;

  // Exhaustive at the mask level: order-discrete (no cross-comparable pair)
  // must force discrete (no shared realizer set).
  for (unsigned a = 1; a < 256; ++a) {
    ++checks;  // carrier 1: no cross pair exists, nothing can fail
    for (unsigned b = 1; b < 256; ++b) {
      ++checks;
      const bool od2 = !tables.comparable[a][b];
      const bool disc2 = (a & b) == 0;
      if (od2 && !disc2) ++failures;
      for (unsigned c = 1; c < 256; ++c) {
        ++checks;
        const bool od3 = od2 && !tables.comparable[a][c] && !tables.comparable[b][c];
        const bool disc3 = disc2 && ((a & c) == 0) && ((b & c) == 0);
        if (od3 && !disc3) ++failures;
      }
    }
  }

  // The mask mirror must agree with the real checks: all carrier-2 instances,
  // plus a deterministic carrier-3 sample.
  for (unsigned a = 1; a < 256; ++a)
    for (unsigned b = 1; b < 256; ++b) {
      ++checks;
      const FiniteAssembly x = assembly_of({a, b});
      const bool od = is_order_discrete(x).order_discrete;
      const bool disc = classify_assembly(x).discrete;
      if (od != !tables.comparable[a][b] || disc != ((a & b) == 0) || (od && !disc)) ++failures;
    }
  std::mt19937 rng(20260822);
  std::uniform_int_distribution<unsigned> pick(1, 255);
  for (unsigned i = 0; i < 20000; ++i) {
    ++checks;
    const unsigned a = pick(rng), b = pick(rng), c = pick(rng);
    const FiniteAssembly x = assembly_of({a, b, c});
    const bool od = is_order_discrete(x).order_discrete;
    const bool disc = classify_assembly(x).discrete;
    const bool od_mask = !tables.comparable[a][b] && !tables.comparable[a][c] &&
                         !tables.comparable[b][c];
    const bool disc_mask = ((a & b) == 0) && ((a & c) == 0) && ((b & c) == 0);
    if (od != od_mask || disc != disc_mask || (od && !disc)) ++failures;
  }
  return {failures == 0, count_note(checks, failures)};
}

// --- criterion 6: path components match the comparability quotient -----------

CriterionResult components_match_reflection() {
  unsigned long long checks = 0, failures = 0;
  const auto matches = [&](const FiniteAssembly& x) {
    ++checks;
    if (path_components(x).blocks != od_reflection(x).partition.blocks) ++failures;
  };
  for (unsigned a = 1; a < 256; ++a) matches(assembly_of({a}));
  for (unsigned a = 1; a < 256; ++a)
    for (unsigned b = 1; b < 256; ++b) matches(assembly_of({a, b}));
  for (unsigned a = 1; a < 256; ++a)
    for (unsigned b = 1; b < 256; ++b)
      for (unsigned c = 1; c < 256; ++c) matches(assembly_of({a, b, c}));

  // 200 random carrier-4 instances with realizers drawn from P({0,1,2,3}).
  std::mt19937 rng(424242);
  std::uniform_int_distribution<unsigned> pick(1, 65535);
  for (unsigned i = 0; i < 200; ++i) {
    std::vector<RealizerSpec> specs;
    for (unsigned pt = 0; pt < 4; ++pt) {
      const unsigned fam = pick(rng);
      std::vector<FinSet> sets;
      for (unsigned m = 0; m < 16; ++m)
        if (fam & (1u << m)) {
          std::vector<Nat> e;
          for (unsigned b = 0; b < 4; ++b)
            if (m & (1u << b)) e.emplace_back(b);
          sets.push_back(FinSet::from_any(std::move(e)));
        }
      specs.push_back(RealizerSpec::explicit_finite(std::move(sets)));
    }
    matches(make_finite_assembly("r", {"a", "b", "c", "d"}, std::move(specs)));
  }
  return {failures == 0, count_note(checks, failures)};
}

// --- criterion 7: lift monad ------------------------------------------------

bool composite_is(const std::map<std::string, std::string>& first,
                  const std::map<std::string, std::string>& second,
                  const std::function<std::string(const std::string&)>& expected,
                  const std::vector<std::string>& domain) {
  for (const std::string& l : domain)
    if (second.at(first.at(l)) != expected(l)) return false;
  return true;
}

CriterionResult lift_monad() {
  unsigned long long checks = 0, failures = 0;
  const auto expect = [&](bool ok) {
    ++checks;
    if (!ok) ++failures;
  };

  // The lift of the one-point assembly is the two-point classifier, up to an
  // explicit realizer bijection witnessed by verified trackers both ways.
  const FiniteAssembly one = one_assembly();
  const LiftAssembly l1 = lift_object(one);
  const std::string pt = one.carrier().at(0);
  const Morphism to_sigma = chi_classifier(one, kProbe, kBudget);
  expect(to_sigma.verdict.kind == VerdictKind::verified);
  expect(to_sigma.map.at(pt) == "1" && to_sigma.map.at(l1.bottom) == "0");
  const FinSet unit_code = lift_realizer(FinSet{});
  GraphFn back_fn = [unit_code](const std::vector<FinSet>& args) {
    return EnumSet::literal(args.at(0).contains(Nat(1)) ? unit_code : FinSet{});
  };
  GraphOptions wide;
  wide.jmax = kWideJmax;
  wide.monotone = true;
  wide.name = "drop-flag";
  const Morphism from_sigma = check_tracker(
      make_morphism(sigma_assembly(), l1.assembly, {{"0", l1.bottom}, {"1", pt}},
                    graph_of(back_fn, 1, wide)),
      kProbe, kBudget);
  expect(from_sigma.verdict.kind == VerdictKind::verified);
  expect(from_sigma.map.at(to_sigma.map.at(pt)) == pt &&
         from_sigma.map.at(to_sigma.map.at(l1.bottom)) == l1.bottom);
  expect(to_sigma.map.at(from_sigma.map.at("0")) == "0" &&
         to_sigma.map.at(from_sigma.map.at("1")) == "1");
  // The realizer families correspond one-to-one through the trackers.
  expect(set_eq_upto(apply(to_sigma.tracker, EnumSet::literal(unit_code)),
                     EnumSet::literal(FinSet{1}), kProbe, kBudget)
             .agreed());
  expect(set_eq_upto(apply(to_sigma.tracker, EnumSet::literal(FinSet{})),
                     EnumSet::literal(FinSet{}), kProbe, kBudget)
             .agreed());
  expect(set_eq_upto(apply(from_sigma.tracker, EnumSet::literal(FinSet{1})),
                     EnumSet::literal(unit_code), kProbe, kBudget)
             .agreed());
  expect(set_eq_upto(apply(from_sigma.tracker, EnumSet::literal(FinSet{})),
                     EnumSet::literal(FinSet{}), kProbe, kBudget)
             .agreed());

  // Unit and multiplication laws at carrier level, every carrier size <= 3.
  for (unsigned size = 0; size <= 3; ++size) {
    std::vector<std::string> labels;
    std::vector<RealizerSpec> specs;
    for (unsigned i = 0; i < size; ++i) {
      labels.push_back(std::string(1, static_cast<char>('a' + i)));
      specs.push_back(RealizerSpec::explicit_finite({FinSet{Nat(i)}}));
    }
    const FiniteAssembly x = make_finite_assembly("X", std::move(labels), std::move(specs));
    const LiftAssembly lx = lift_object(x);
    const Morphism eta_x = eta(x, kProbe, kMonadBudget);
    const Morphism eta_lx = eta(lx.assembly, kProbe, kMonadBudget);
    const Morphism mu_x = mu(x, kProbe, kMonadBudget);
    const Morphism lifted_eta = lift_morphism(eta_x, kProbe, kMonadBudget);
    const Morphism mu_lx = mu(lx.assembly, kProbe, kMonadBudget);
    const Morphism lifted_mu = lift_morphism(mu_x, kProbe, kMonadBudget);
    for (const Morphism* m : {&eta_x, &eta_lx, &mu_x, &lifted_eta, &mu_lx, &lifted_mu})
      expect(m->verdict.kind == VerdictKind::verified);
    const auto identity = [](const std::string& l) { return l; };
    // mu . eta_{L X} = id and mu . L(eta_X) = id on L(X).
    expect(composite_is(eta_lx.map, mu_x.map, identity, lx.assembly.carrier()));
    expect(composite_is(lifted_eta.map, mu_x.map, identity, lx.assembly.carrier()));
    // mu . mu_{L X} = mu . L(mu_X) on L(L(L(X))).
    const std::vector<std::string>& lll = mu_lx.source.carrier();
    for (const std::string& l : lll)
      expect(mu_x.map.at(mu_lx.map.at(l)) == mu_x.map.at(lifted_mu.map.at(l)));
  }

  // Partial maps on crisp opens extend uniquely: the extension commutes with
  // the inclusion, and brute force over every label map into the lift finds
  // exactly one satisfying the pullback condition.
  struct Triple {
    FiniteAssembly ambient;
    OpenSet open;
    FiniteAssembly target;
    std::map<std::string, std::string> map;  // domain -> target
    EnumSet tracker;
  };
  const EnumSet id_tracker = std_env().get("i");
  const EnumSet drop_all = interpret(parse_term("\\u. {}"), {}, InterpretOptions{kWideJmax});
  GraphOptions wide1 = wide;
  wide1.name = "flag-to-zero";
  GraphFn to_zero = [](const std::vector<FinSet>& args) {
    return EnumSet::literal(args.at(0).contains(Nat(1)) ? FinSet{0} : FinSet{});
  };
  GraphOptions wide2 = wide;
  wide2.name = "keep-flag";
  GraphFn keep_flag = [](const std::vector<FinSet>& args) {
    return EnumSet::literal(args.at(0).contains(Nat(1)) ? FinSet{1} : FinSet{});
  };

  std::vector<Triple> triples;
  {
    const FiniteAssembly chain = make_finite_assembly(
        "chain", {"a", "b", "c"},
        {RealizerSpec::explicit_finite({FinSet{0}}),
         RealizerSpec::explicit_finite({FinSet{0, 1}}),
         RealizerSpec::explicit_finite({FinSet{0, 1, 2}})});
    triples.push_back({chain, OpenSet{{FinSet{1}}}, chain, {{"b", "b"}, {"c", "c"}},
                       id_tracker});
  }
  {
    const FiniteAssembly nat2 = nat_upto_assembly(2);
    triples.push_back({nat2, OpenSet{{FinSet{1}}}, one_assembly(),
                       {{"1", one_assembly().carrier().at(0)}}, drop_all});
  }
  {
    triples.push_back({sigma_assembly(), OpenSet{{FinSet{1}}}, nat_upto_assembly(1),
                       {{"1", "0"}}, graph_of(to_zero, 1, wide1)});
  }
  {
    const FiniteAssembly disc = make_finite_assembly(
        "disc", {"a", "b", "c"},
        {RealizerSpec::explicit_finite({FinSet{0}}), RealizerSpec::explicit_finite({FinSet{1}}),
         RealizerSpec::explicit_finite({FinSet{2}})});
    triples.push_back({disc, OpenSet{{FinSet{0}, FinSet{2}}}, disc,
                       {{"a", "a"}, {"c", "c"}}, id_tracker});
  }
  {
    const FiniteAssembly two = make_finite_assembly(
        "two", {"a", "b"},
        {RealizerSpec::explicit_finite({FinSet{1}, FinSet{1, 2}}),
         RealizerSpec::explicit_finite({FinSet{0}})});
    triples.push_back({two, OpenSet{{FinSet{1}}}, sigma_assembly(), {{"a", "1"}},
                       graph_of(keep_flag, 1, wide2)});
  }

  for (const Triple& tr : triples) {
    const SigmaSub sub = sigma_sub_from_open(tr.ambient, tr.open, kProbe, kExtendBudget);
    expect(sub.classifier.verdict.kind == VerdictKind::verified);
    const Morphism f = check_tracker(
        make_morphism(sub.sub, tr.target, tr.map, tr.tracker), kProbe, kExtendBudget);
    expect(f.verdict.kind == VerdictKind::verified);
    const Morphism ext = tilde_morphism(f, tr.ambient, tr.open, kProbe, kExtendBudget);
    expect(ext.verdict.kind == VerdictKind::verified);
    const LiftAssembly lt = lift_object(tr.target);
    // Commutation: on the domain the extension is the map, off it the bottom.
    bool commutes = true;
    for (const std::string& l : tr.ambient.carrier()) {
      if (sub.sub.has(l))
        commutes = commutes && ext.map.at(l) == f.map.at(l);
      else
        commutes = commutes && ext.map.at(l) == lt.bottom;
    }
    expect(commutes);
    // Brute force over all label maps ambient -> L(target): commutation alone
    // leaves the off-domain values free; the pullback condition (non-bottom
    // exactly on the domain) pins the extension uniquely.
    const std::vector<std::string>& lt_labels = lt.assembly.carrier();
    const std::size_t points = tr.ambient.size();
    unsigned long long commuting = 0, pullbacks = 0;
    std::vector<std::size_t> odo(points, 0);
    bool rolled = false;
    while (!rolled) {
      bool commute_ok = true, pullback_ok = true;
      for (std::size_t i = 0; i < points; ++i) {
        const std::string& l = tr.ambient.carrier()[i];
        const std::string& value = lt_labels[odo[i]];
        if (sub.sub.has(l)) {
          if (value != f.map.at(l)) commute_ok = false;
        }
        const bool non_bottom = value != lt.bottom;
        if (non_bottom != sub.sub.has(l)) pullback_ok = false;
      }
      if (commute_ok) {
        ++commuting;
        if (pullback_ok) {
          ++pullbacks;
          bool is_ext = true;
          for (std::size_t i = 0; i < points; ++i)
            if (lt_labels[odo[i]] != ext.map.at(tr.ambient.carrier()[i])) is_ext = false;
          expect(is_ext);
        }
      }
      rolled = true;
      for (std::size_t i = 0; i < points; ++i) {
        if (++odo[i] < lt_labels.size()) {
          rolled = false;
          break;
        }
        odo[i] = 0;
      }
    }
    unsigned long long free_points = 0;
    for (const std::string& l : tr.ambient.carrier())
      if (!sub.sub.has(l)) ++free_points;
    unsigned long long expected_commuting = 1;
    for (unsigned long long i = 0; i < free_points; ++i) expected_commuting *= lt_labels.size();
    expect(commuting == expected_commuting);
    expect(pullbacks == 1);
  }
  return {failures == 0, count_note(checks, failures)};
}

// --- criterion 8: the union falsifier ----------------------------------------

CriterionResult union_falsifier() {
  constexpr double kPerCandidateLimit = 1.0;
  const auto& fs = falsifier_f_candidates();
  const auto& gs = falsifier_g_candidates();
  unsigned long long checks = 0, failures = 0;
  if (fs.count("union") == 0 || gs.size() < 4) return {false, "candidate sets missing"};
  unsigned violations = 0;
  for (const auto& [name, g] : gs) {
    ++checks;
    const auto t0 = std::chrono::steady_clock::now();
    const FalsifierReport rep = union_failure_falsifier(fs.at("union"), g, 16);
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt >= kPerCandidateLimit) ++failures;
    if (rep.violation) ++violations;
    // The blind and first-marker readers must each be caught in the act.
    if ((name == "const0" || name == "const1" || name == "contains1") &&
        (!rep.violation || rep.condition != 2))
      ++failures;
  }
  ++checks;
  if (violations == 0) ++failures;
  return {failures == 0,
          count_note(checks, failures) + ", " + std::to_string(violations) + " violations"};
}

// --- criterion 9: generic interval invariants --------------------------------

CriterionResult interval_invariants() {
  unsigned long long checks = 0, failures = 0;
  unsigned instances = 0;
  for (unsigned n = 1; n <= 5; ++n) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      ++instances;
      BitSequence sigma;
      for (unsigned k = 0; k < n; ++k) sigma.bits.push_back((mask >> k) & 1u);
      const GenericInterval iv = generic_interval(n, sigma);
      ++checks;
      if (iv.assembly.size() != n + 1) ++failures;
      for (unsigned k = 0; k <= n; ++k) {
        // Projections match the closed forms.
        const FinSet xk = (k == 0 || sigma.bits[k - 1] == 0) ? FinSet{1} : FinSet{};
        const FinSet yk = (k < n && sigma.bits[k] == 1) ? FinSet{1} : FinSet{};
        checks += 2;
        if (!(iv.alpha(k) == pair_realizer(FinSet{Nat(k)}, xk))) ++failures;
        if (!(iv.beta(k) == pair_realizer(FinSet{Nat(k + 1)}, yk))) ++failures;
      }
      for (unsigned k = 0; k < n; ++k) {
        // Inclusion pattern: each step is a strict inclusion whose direction
        // follows the bit.
        ++checks;
        const FinSet& b = iv.beta(k);
        const FinSet& a = iv.alpha(k + 1);
        const bool strict_down = b.subset_of(a) && !(b == a);
        const bool strict_up = a.subset_of(b) && !(b == a);
        if (sigma.bits[k] == 0 ? !strict_down : !strict_up) ++failures;
      }
      ++checks;
      bool threw = false;
      try {
        (void)iv.alpha(n + 1);
      } catch (const IndexOutOfRange&) {
        threw = true;
      }
      if (!threw) ++failures;
      ++checks;
      if (path_components(iv.assembly).blocks.size() != 1) ++failures;
    }
  }
  ++checks;
  if (instances != 62) ++failures;
  return {failures == 0, count_note(checks, failures)};
}

// --- criterion 10: T1 iff order-discrete for embedded finite spaces ----------

CriterionResult t1_iff_order_discrete() {
  unsigned long long checks = 0, failures = 0;
  const std::vector<std::string> all_labels{"a", "b", "c"};
  const unsigned expected_t0[4] = {0, 1, 3, 19};
  for (unsigned npts = 1; npts <= 3; ++npts) {
    const unsigned full = (1u << npts) - 1;
    const unsigned nsubsets = 1u << npts;
    unsigned t0_count = 0;
    for (unsigned long long topo = 0; topo < (1ull << nsubsets); ++topo) {
      // A topology: contains the empty set and the space, closed under
      // pairwise union and intersection.
      if (!(topo & 1ull) || !(topo & (1ull << full))) continue;
      bool closed = true;
      for (unsigned s = 0; s <= full && closed; ++s) {
        if (!(topo & (1ull << s))) continue;
        for (unsigned t = 0; t <= full && closed; ++t) {
          if (!(topo & (1ull << t))) continue;
          if (!(topo & (1ull << (s | t))) || !(topo & (1ull << (s & t)))) closed = false;
        }
      }
      if (!closed) continue;
      // T0: some open separates each pair of distinct points.
      bool t0 = true;
      for (unsigned i = 0; i < npts && t0; ++i)
        for (unsigned j = i + 1; j < npts && t0; ++j) {
          bool separated = false;
          for (unsigned s = 0; s <= full && !separated; ++s)
            if ((topo & (1ull << s)) && (((s >> i) & 1u) != ((s >> j) & 1u))) separated = true;
          t0 = separated;
        }
      if (!t0) continue;
      ++t0_count;
      // T1 by brute force: every pair is separated in both directions.
      bool t1 = true;
      for (unsigned i = 0; i < npts && t1; ++i)
        for (unsigned j = 0; j < npts && t1; ++j) {
          if (i == j) continue;
          bool found = false;
          for (unsigned s = 0; s <= full && !found; ++s)
            if ((topo & (1ull << s)) && ((s >> i) & 1u) && !((s >> j) & 1u)) found = true;
          t1 = found;
        }
      // Embed via the full topology as subbasis and compare both readings.
      FiniteT0Space space;
      for (unsigned i = 0; i < npts; ++i) space.points.push_back(all_labels[i]);
      for (unsigned s = 0; s <= full; ++s) {
        if (!(topo & (1ull << s))) continue;
        std::vector<std::string> open;
        for (unsigned i = 0; i < npts; ++i)
          if ((s >> i) & 1u) open.push_back(all_labels[i]);
        space.subbasis.push_back(std::move(open));
      }
      const SpaceEmbedding emb = embed_finite_t0(space);
      checks += 3;
      if (emb.t1 != t1) ++failures;
      if (emb.order_discrete != is_order_discrete(emb.assembly).order_discrete) ++failures;
      if (emb.t1 != emb.order_discrete) ++failures;
    }
    ++checks;
    if (t0_count != expected_t0[npts]) ++failures;
  }
  return {failures == 0, count_note(checks, failures)};
}

}  // namespace

int main() {
  struct Row {
    const char* name;
    double limit_seconds;
    CriterionResult (*run)();
  };
  const Row rows[] = {
      {"coding roundtrips", 5.0, coding_roundtrips},
      {"pairing and case-combinator laws", 30.0, combinator_laws},
      {"beta reduction soundness", 60.0, beta_soundness},
      {"subset characteristic trackers", 30.0, characteristic_trackers},
      {"order-discrete implies discrete", 60.0, od_implies_discrete},
      {"path components match the comparability quotient", 60.0, components_match_reflection},
      {"lift monad laws and partial-map extension", 60.0, lift_monad},
      {"union falsifier catches every stock reader", 4.0, union_falsifier},
      {"generic interval invariants", 10.0, interval_invariants},
      {"t1 iff order-discrete on embedded finite spaces", 30.0, t1_iff_order_discrete},
  };
  bool all = true;
  int index = 0;
  for (const Row& row : rows) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = row.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = r.pass && dt < row.limit_seconds;
    std::printf("%s %2d  %-48s  (%s, %.2fs, limit %.0fs)\n", ok ? "PASS" : "FAIL", index,
                row.name, r.note.c_str(), dt, row.limit_seconds);
    all = all && ok;
  }
  return all ? 0 : 1;
}
