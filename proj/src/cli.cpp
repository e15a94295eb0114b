#include "scott/cli.hpp"

#include "scott/assembly.hpp"
#include "scott/homotopy.hpp"
#include "scott/interp.hpp"
#include "scott/json_io.hpp"
#include "scott/sierpinski.hpp"
#include "scott/term.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

namespace scott {
namespace {

using nlohmann::json;

struct Options {
  Fuel fuel = 8;
  Fuel budget = 16;
  unsigned jmax = 12;
  bool as_json = false;
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  try {
    json j;
    in >> j;
    return j;
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

// A value argument is a term in the text grammar, or a .json file holding a
// set construction tree.
EnumSet value_argument(const std::string& text, unsigned jmax) {
  if (text.size() > 5 && text.rfind(".json") == text.size() - 5)
    return enumset_from_json(load_json(text), jmax);
  return interpret(parse_term(text), {}, InterpretOptions{jmax});
}

void emit(const Options& opt, std::ostream& out, const json& report, const std::string& text) {
  if (opt.as_json)
    out << report.dump(2) << "\n";
  else
    out << text;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string block_lines(const Partition& p, const char* word) {
  std::string text = std::string(word) + "s: " + std::to_string(p.blocks.size()) + "\n";
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    text += std::string(word) + " " + std::to_string(i) + ":";
    for (const std::string& l : p.blocks[i]) text += " " + l;
    text += "\n";
  }
  return text;
}

int run_eval(const Options& opt, const std::string& term, std::ostream& out) {
  const EnumSet value = interpret(parse_term(term), {}, InterpretOptions{opt.jmax});
  const FinSet v = value.approx(opt.fuel);
  emit(opt, out,
       json{{"command", "eval"}, {"term", term}, {"fuel", opt.fuel}, {"value", finset_to_json(v)}},
       v.to_string() + "\n");
  return kExitSuccess;
}

int run_apply(const Options& opt, const std::string& fn, const std::string& arg,
              std::ostream& out) {
  const EnumSet value = apply(value_argument(fn, opt.jmax), value_argument(arg, opt.jmax));
  const FinSet v = value.approx(opt.fuel);
  emit(opt, out,
       json{{"command", "apply"},
            {"fn", fn},
            {"arg", arg},
            {"fuel", opt.fuel},
            {"value", finset_to_json(v)}},
       v.to_string() + "\n");
  return kExitSuccess;
}

int run_check_tracker(const Options& opt, const std::string& path, std::ostream& out) {
  const Morphism checked =
      check_tracker(morphism_from_json(load_json(path), opt.jmax), opt.fuel, opt.budget);
  json report = morphism_to_json(checked);
  report["command"] = "check-tracker";
  emit(opt, out, report, checked.verdict.to_string() + "\n");
  return checked.verdict.kind == VerdictKind::verified ? kExitSuccess : kExitRefuted;
}

int run_classify(const Options& opt, const std::string& path, std::ostream& out) {
  const FiniteAssembly x = assembly_from_json(load_json(path));
  const ClassifyFlags flags = classify_assembly(x);
  emit(opt, out,
       json{{"command", "classify"},
            {"assembly", x.name()},
            {"partitioned", flags.partitioned},
            {"modest", flags.modest},
            {"discrete", flags.discrete},
            {"join_property", flags.join_property}},
       "partitioned: " + yes_no(flags.partitioned) + "\nmodest: " + yes_no(flags.modest) +
           "\ndiscrete: " + yes_no(flags.discrete) +
           "\njoin-property: " + yes_no(flags.join_property) + "\n");
  return kExitSuccess;
}

int run_reflect(const Options& opt, const std::string& path, std::ostream& out) {
  const FiniteAssembly x = assembly_from_json(load_json(path));
  const ODReflection refl = od_reflection(x);
  emit(opt, out,
       json{{"command", "reflect"},
            {"assembly", x.name()},
            {"partition", partition_to_json(refl.partition)},
            {"quotient", assembly_to_json(refl.quotient)}},
       block_lines(refl.partition, "block") + "quotient: " + refl.quotient.name() + "\n");
  return kExitSuccess;
}

int run_lift(const Options& opt, const std::string& path, std::ostream& out) {
  const FiniteAssembly x = assembly_from_json(load_json(path));
  const LiftAssembly lifted = lift_object(x);
  std::string text = "lifted: " + lifted.assembly.name() + "\nbottom: " + lifted.bottom + "\n";
  for (const std::string& l : lifted.assembly.carrier()) {
    text += l + ":";
    for (const FinSet& s : lifted.assembly.spec_of(l).sets()) text += " " + s.to_string();
    text += "\n";
  }
  emit(opt, out,
       json{{"command", "lift"},
            {"bottom", lifted.bottom},
            {"assembly", assembly_to_json(lifted.assembly)}},
       text);
  return kExitSuccess;
}

int run_paths(const Options& opt, const std::string& path, std::ostream& out) {
  const FiniteAssembly x = assembly_from_json(load_json(path));
  const Partition part = path_components(x);
  emit(opt, out,
       json{{"command", "paths"},
            {"assembly", x.name()},
            {"partition", partition_to_json(part)}},
       block_lines(part, "component"));
  return kExitSuccess;
}

int run_space(const Options& opt, const std::string& path, bool with_report, std::ostream& out) {
  const FiniteT0Space space = space_from_json(load_json(path));
  SpaceEmbedding emb;
  try {
    emb = embed_finite_t0(space);
  } catch (const NotT0& e) {
    emit(opt, out,
         json{{"command", "space"},
              {"t0", false},
              {"witness", json::array({e.x, e.y})},
              {"detail", e.what()}},
         std::string("not T0: ") + e.what() + "\n");
    return kExitRefuted;
  }
  json report{{"command", "space"},
              {"t0", true},
              {"t1", emb.t1},
              {"order_discrete", emb.order_discrete},
              {"components", partition_to_json(emb.components)}};
  std::string text = "points: " + std::to_string(space.points.size()) + "\nt1: " +
                     yes_no(emb.t1) + "\norder-discrete: " + yes_no(emb.order_discrete) + "\n" +
                     block_lines(emb.components, "component");
  if (with_report) {
    json codes = json::object();
    for (std::size_t i = 0; i < space.points.size(); ++i)
      codes[space.points[i]] = finset_to_json(emb.codes[i]);
    json order = json::array();
    for (const auto& [a, b] : emb.order) order.push_back(json::array({a, b}));
    report["codes"] = codes;
    report["order"] = order;
    report["assembly"] = assembly_to_json(emb.assembly);
    for (std::size_t i = 0; i < space.points.size(); ++i)
      text += "e(" + space.points[i] + ") = " + emb.codes[i].to_string() + "\n";
    for (const auto& [a, b] : emb.order) text += a + " <= " + b + "\n";
  }
  emit(opt, out, report, text);
  return kExitSuccess;
}

// The characteristic-map demonstration: elementhood through the coded
// characteristic agrees with membership, and decoding recovers the subset.
int run_demo_chi(const Options& opt, std::ostream& out) {
  const auto [chi, chi_inverse] = chi_iso_trackers();
  const std::vector<FinSet> subsets = [] {
    std::vector<FinSet> out;
    for (unsigned mask = 0; mask < 16; ++mask) {
      std::vector<Nat> elems;
      for (unsigned b = 0; b < 4; ++b)
        if (mask & (1u << b)) elems.emplace_back(b);
      out.emplace_back(std::move(elems));
    }
    return out;
  }();

  unsigned checks = 0;
  bool ok = true;
  for (const FinSet& u : subsets) {
    const EnumSet coded = apply(chi, EnumSet::literal(u));
    for (unsigned n = 0; n < 4 && ok; ++n) {
      const EnumSet flag = apply(coded, numeral(Nat(n)));
      const bool says_in = flag.contains_at(opt.budget, Nat(1));
      const bool is_in = u.contains(Nat(n));
      ok = says_in == is_in && (is_in || flag.approx(opt.budget).empty());
      ++checks;
    }
  }
  // Every membership code for subsets of {0..3} sits below this stage.
  const Fuel stage = std::max<Fuel>(opt.fuel, 47);
  unsigned recovered = 0;
  for (const FinSet& u : subsets) {
    const EnumSet back = apply(chi_inverse, apply(chi, EnumSet::literal(u)));
    if (back.approx(stage) == u) ++recovered;
  }
  ok = ok && recovered == subsets.size();

  emit(opt, out,
       json{{"command", "demo"},
            {"which", "prop3.3"},
            {"budget", opt.budget},
            {"membership_checks", checks},
            {"roundtrip_stage", stage},
            {"recovered", recovered},
            {"ok", ok}},
       "membership through the coded characteristic agreed on " + std::to_string(checks) +
           " checks (budget " + std::to_string(opt.budget) + ")\ndecoding recovered " +
           std::to_string(recovered) + " of " + std::to_string(subsets.size()) +
           " subsets of {0..3} at stage " + std::to_string(stage) + "\n");
  return ok ? kExitSuccess : kExitRefuted;
}

// The union-falsifier demonstration: no candidate witness pair survives the
// four flag combinations.
int run_demo_union(const Options& opt, const std::string& candidates_path, std::ostream& out,
                   std::ostream& err) {
  std::string f_name = "union";
  std::vector<std::string> g_names;
  if (!candidates_path.empty()) {
    const json j = load_json(candidates_path);
    if (j.contains("F")) f_name = j.at("F").get<std::string>();
    if (j.contains("G"))
      for (const json& g : j.at("G")) g_names.push_back(g.get<std::string>());
  }
  if (g_names.empty())
    for (const auto& [name, cand] : falsifier_g_candidates()) {
      (void)cand;
      g_names.push_back(name);
    }

  const auto& fs = falsifier_f_candidates();
  const auto fit = fs.find(f_name);
  if (fit == fs.end()) {
    err << "unknown pairing candidate: " << f_name << "\n";
    return kExitUsage;
  }
  const auto& gs = falsifier_g_candidates();

  json results = json::array();
  std::string text = "F = " + f_name + ", budget " + std::to_string(opt.budget) + "\n";
  unsigned violations = 0;
  for (const std::string& g_name : g_names) {
    const auto git = gs.find(g_name);
    if (git == gs.end()) {
      err << "unknown side-choice candidate: " << g_name << "\n";
      return kExitUsage;
    }
    const FalsifierReport rep = union_failure_falsifier(fit->second, git->second, opt.budget);
    if (rep.violation) ++violations;
    results.push_back(json{{"G", g_name},
                           {"violation", rep.violation},
                           {"condition", rep.condition},
                           {"u", finset_to_json(rep.u)},
                           {"v", finset_to_json(rep.v)},
                           {"detail", rep.detail}});
    text += "G = " + g_name + ": " + rep.to_string() + "\n";
  }
  text += "violations: " + std::to_string(violations) + " of " +
          std::to_string(g_names.size()) + " candidates\n";
  emit(opt, out,
       json{{"command", "demo"},
            {"which", "prop6.1"},
            {"F", f_name},
            {"budget", opt.budget},
            {"results", results},
            {"violations", violations}},
       text);
  return violations > 0 ? kExitRefuted : kExitInconclusive;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  std::string term, fn, arg, file, which, candidates;
  bool with_report = false;

  CLI::App app{"fuel-bounded calculator for the graph model and its assemblies"};
  app.name("scott-pca");
  app.require_subcommand(1);
  app.add_option("--fuel", opt.fuel, "stage bound for printed values")->capture_default_str();
  app.add_option("--budget", opt.budget, "search bound for verdicts")->capture_default_str();
  app.add_option("--jmax", opt.jmax, "graph enumeration cap for interpreted terms")
      ->capture_default_str();
  app.add_flag("--json", opt.as_json, "emit a JSON report");

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a term to its stage");
  eval_cmd->add_option("term", term, "term text")->required();
  CLI::App* apply_cmd = app.add_subcommand("apply", "apply one value to another");
  apply_cmd->add_option("fn", fn, "term text or .json construction tree")->required();
  apply_cmd->add_option("arg", arg, "term text or .json construction tree")->required();
  CLI::App* check_cmd = app.add_subcommand("check-tracker", "verify a morphism's tracker");
  check_cmd->add_option("morphism", file, "morphism .json file")->required();
  CLI::App* classify_cmd = app.add_subcommand("classify", "report assembly classification flags");
  classify_cmd->add_option("assembly", file, "assembly .json file")->required();
  CLI::App* reflect_cmd =
      app.add_subcommand("reflect", "quotient by the comparability closure");
  reflect_cmd->add_option("assembly", file, "assembly .json file")->required();
  CLI::App* lift_cmd = app.add_subcommand("lift", "add a fresh bottom point");
  lift_cmd->add_option("assembly", file, "assembly .json file")->required();
  CLI::App* paths_cmd = app.add_subcommand("paths", "path components of an assembly");
  paths_cmd->add_option("assembly", file, "assembly .json file")->required();
  CLI::App* space_cmd = app.add_subcommand("space", "embed a finite space by its subbasis");
  space_cmd->add_option("space", file, "space .json file")->required();
  space_cmd->add_flag("--report", with_report, "include codes, order and the assembly");
  CLI::App* demo_cmd = app.add_subcommand("demo", "run a demonstration");
  demo_cmd->add_option("which", which, "prop3.3 or prop6.1")->required();
  demo_cmd->add_option("--candidates", candidates, "candidate file for prop6.1");
  for (CLI::App* sub : {eval_cmd, apply_cmd, check_cmd, classify_cmd, reflect_cmd, lift_cmd,
                        paths_cmd, space_cmd, demo_cmd})
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  if (opt.budget < opt.fuel) {
    err << "budget (" << opt.budget << ") must be at least fuel (" << opt.fuel << ")\n";
    return kExitUsage;
  }

  try {
    if (eval_cmd->parsed()) return run_eval(opt, term, out);
    if (apply_cmd->parsed()) return run_apply(opt, fn, arg, out);
    if (check_cmd->parsed()) return run_check_tracker(opt, file, out);
    if (classify_cmd->parsed()) return run_classify(opt, file, out);
    if (reflect_cmd->parsed()) return run_reflect(opt, file, out);
    if (lift_cmd->parsed()) return run_lift(opt, file, out);
    if (paths_cmd->parsed()) return run_paths(opt, file, out);
    if (space_cmd->parsed()) return run_space(opt, file, with_report, out);
    if (demo_cmd->parsed()) {
      if (which == "prop3.3") return run_demo_chi(opt, out);
      if (which == "prop6.1") return run_demo_union(opt, candidates, out, err);
      err << "unknown demo: " << which << " (expected prop3.3 or prop6.1)\n";
      return kExitUsage;
    }
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  err << "no command selected\n";
  return kExitUsage;
}

}  // namespace scott
