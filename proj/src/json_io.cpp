#include "scott/json_io.hpp"

#include "scott/interp.hpp"
#include "scott/term.hpp"

#include <algorithm>

namespace scott {

using nlohmann::json;

namespace {

const json& expect_member(const json& j, const char* key, const char* what) {
  const auto it = j.find(key);
  if (it == j.end()) throw JsonShapeError(std::string(what) + " needs a \"" + key + "\" member");
  return *it;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Nat nat_from_json(const json& j) {
  if (j.is_number_unsigned()) return Nat(j.get<std::uint64_t>());
  if (j.is_number_integer()) {
    const std::int64_t v = j.get<std::int64_t>();
    if (v < 0) throw JsonShapeError("naturals cannot be negative: " + j.dump());
    return Nat(v);
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (!all_digits(s)) throw JsonShapeError("not a decimal natural: \"" + s + "\"");
    return Nat(s);
  }
  throw JsonShapeError("expected a natural (number or decimal string), got " + j.dump());
}

json nat_to_json(const Nat& n) { return n.str(); }

FinSet finset_from_json(const json& j) {
  if (!j.is_array()) throw JsonShapeError("expected a finite set as an array, got " + j.dump());
  std::vector<Nat> elems;
  for (const json& e : j) elems.push_back(nat_from_json(e));
  return FinSet::from_any(std::move(elems));
}

json finset_to_json(const FinSet& s) {
  json out = json::array();
  for (const Nat& e : s) out.push_back(nat_to_json(e));
  return out;
}

EnumSet enumset_from_json(const json& j, unsigned jmax) {
  if (j.is_string()) {
    return interpret(parse_term(j.get<std::string>()), {}, InterpretOptions{jmax});
  }
  if (j.is_array()) return EnumSet::literal(finset_from_json(j));
  if (!j.is_object())
    throw JsonShapeError("expected a set construction tree, got " + j.dump());
  if (j.contains("lit")) return EnumSet::literal(finset_from_json(j.at("lit")));
  if (j.contains("const")) {
    const std::string name = j.at("const").get<std::string>();
    try {
      return std_env().get(name);
    } catch (const std::exception&) {
      throw JsonShapeError("unknown constant: " + name);
    }
  }
  if (j.contains("term"))
    return interpret(parse_term(j.at("term").get<std::string>()), {}, InterpretOptions{jmax});
  if (j.contains("apply")) {
    const json& node = j.at("apply");
    EnumSet fn = enumset_from_json(expect_member(node, "fn", "an application node"), jmax);
    std::vector<EnumSet> args;
    if (node.contains("args")) {
      const json& list = node.at("args");
      if (!list.is_array()) throw JsonShapeError("\"args\" must be an array");
      for (const json& a : list) args.push_back(enumset_from_json(a, jmax));
    } else if (node.contains("arg")) {
      args.push_back(enumset_from_json(node.at("arg"), jmax));
    } else {
      throw JsonShapeError("an application node needs \"args\"");
    }
    return apply_all(std::move(fn), args);
  }
  if (j.contains("tuple")) {
    const json& list = j.at("tuple");
    if (!list.is_array() || list.empty())
      throw JsonShapeError("\"tuple\" must be a nonempty array");
    std::vector<EnumSet> parts;
    for (const json& p : list) parts.push_back(enumset_from_json(p, jmax));
    return tuple_code(parts);
  }
  throw JsonShapeError("unrecognized set construction tree: " + j.dump());
}

json enumset_to_json(const EnumSet& s) {
  if (const FinSet* v = s.literal_value()) return json{{"lit", finset_to_json(*v)}};
  if (const std::vector<EnumSet>* parts = s.tuple_parts()) {
    json list = json::array();
    for (const EnumSet& p : *parts) list.push_back(enumset_to_json(p));
    return json{{"tuple", list}};
  }
  if (const std::vector<EnumSet>* args = s.applied_args()) {
    json list = json::array();
    for (const EnumSet& a : *args) list.push_back(enumset_to_json(a));
    json node = json{{"apply", {{"fn", enumset_to_json(s.applied_head())}, {"args", list}}}};
    if (const std::vector<EnumSet>* post = s.applied_post()) {
      for (const EnumSet& a : *post)
        node = json{{"apply", {{"fn", node}, {"args", json::array({enumset_to_json(a)})}}}};
    }
    return node;
  }
  if (const EnumSet* fn = s.apply_fn()) {
    return json{
        {"apply",
         {{"fn", enumset_to_json(*fn)}, {"args", json::array({enumset_to_json(*s.apply_arg())})}}}};
  }
  // Standard bindings serialize by name, found by node identity so aliases
  // like the interpreted identity survive a round trip.
  for (const auto& [name, value] : std_env().bindings)
    if (value.node().get() == s.node().get()) return json{{"const", name}};
  // Other graphs, families and interpreted terms only carry their name.
  const std::string& note = s.note();
  if (!note.empty()) return json{{"opaque", note}};
  switch (s.provenance()) {
    case Provenance::graph:
      return json{{"opaque", "graph"}};
    case Provenance::term:
      return json{{"opaque", "term"}};
    default:
      return json{{"opaque", "family"}};
  }
}

FiniteAssembly assembly_from_json(const json& j) {
  if (!j.is_object()) throw JsonShapeError("expected an assembly object, got " + j.dump());
  const json& carrier = expect_member(j, "carrier", "an assembly");
  if (!carrier.is_array()) throw JsonShapeError("\"carrier\" must be an array of labels");
  const json& fams = expect_member(j, "E", "an assembly");
  if (!fams.is_object()) throw JsonShapeError("\"E\" must map labels to realizer lists");
  std::vector<std::string> labels;
  std::vector<RealizerSpec> specs;
  for (const json& l : carrier) {
    const std::string label = l.get<std::string>();
    const auto it = fams.find(label);
    if (it == fams.end()) throw JsonShapeError("\"E\" is missing label: " + label);
    if (!it->is_array()) throw JsonShapeError("realizers of " + label + " must be an array");
    std::vector<FinSet> sets;
    for (const json& s : *it) sets.push_back(finset_from_json(s));
    labels.push_back(label);
    specs.push_back(RealizerSpec::explicit_finite(std::move(sets)));
  }
  for (const auto& [key, value] : fams.items()) {
    (void)value;
    if (std::find(labels.begin(), labels.end(), key) == labels.end())
      throw JsonShapeError("\"E\" names a label outside the carrier: " + key);
  }
  const std::string name = j.contains("name") ? j.at("name").get<std::string>() : "assembly";
  return make_finite_assembly(name, std::move(labels), std::move(specs));
}

json assembly_to_json(const FiniteAssembly& x) {
  json fams = json::object();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x.spec_at(i).is_explicit())
      throw PredicateSpecUnsupported("cannot serialize a predicate realizer spec: " + x.name() +
                                     "/" + x.carrier()[i]);
    json list = json::array();
    for (const FinSet& s : x.spec_at(i).sets()) list.push_back(finset_to_json(s));
    fams[x.carrier()[i]] = list;
  }
  return json{{"name", x.name()}, {"carrier", x.carrier()}, {"E", fams}};
}

Morphism morphism_from_json(const json& j, unsigned jmax) {
  if (!j.is_object()) throw JsonShapeError("expected a morphism object, got " + j.dump());
  FiniteAssembly source = assembly_from_json(expect_member(j, "source", "a morphism"));
  FiniteAssembly target = assembly_from_json(expect_member(j, "target", "a morphism"));
  const json& m = expect_member(j, "map", "a morphism");
  if (!m.is_object()) throw JsonShapeError("\"map\" must map source labels to target labels");
  std::map<std::string, std::string> map;
  for (const auto& [key, value] : m.items()) map[key] = value.get<std::string>();
  EnumSet tracker = enumset_from_json(expect_member(j, "tracker", "a morphism"), jmax);
  return make_morphism(std::move(source), std::move(target), std::move(map), std::move(tracker));
}

json morphism_to_json(const Morphism& f) {
  json map = json::object();
  for (const auto& [from, to] : f.map) map[from] = to;
  json verdict = json::object();
  switch (f.verdict.kind) {
    case VerdictKind::unverified:
      verdict["kind"] = "unverified";
      break;
    case VerdictKind::verified:
      verdict["kind"] = "verified";
      verdict["probe"] = f.verdict.probe;
      break;
    case VerdictKind::refuted:
      verdict["kind"] = "refuted";
      verdict["probe"] = f.verdict.probe;
      verdict["evidence"] = json{{"label", f.verdict.evidence.label},
                                 {"realizer", finset_to_json(f.verdict.evidence.realizer)},
                                 {"detail", f.verdict.evidence.detail}};
      break;
  }
  return json{{"source", f.source.name()},
              {"target", f.target.name()},
              {"map", map},
              {"tracker", enumset_to_json(f.tracker)},
              {"verdict", verdict}};
}

FiniteT0Space space_from_json(const json& j) {
  if (!j.is_object()) throw JsonShapeError("expected a space object, got " + j.dump());
  const json& pts = expect_member(j, "points", "a space");
  if (!pts.is_array()) throw JsonShapeError("\"points\" must be an array");
  const json& sub = expect_member(j, "subbasis", "a space");
  if (!sub.is_array()) throw JsonShapeError("\"subbasis\" must be an array of point sets");
  FiniteT0Space space;
  for (const json& p : pts) space.points.push_back(p.get<std::string>());
  for (const json& open : sub) {
    if (!open.is_array()) throw JsonShapeError("each subbasic open must be an array of points");
    std::vector<std::string> set;
    for (const json& p : open) set.push_back(p.get<std::string>());
    space.subbasis.push_back(std::move(set));
  }
  return space;
}

json partition_to_json(const Partition& p) {
  json blocks = json::array();
  for (const auto& block : p.blocks) blocks.push_back(block);
  json edges = json::array();
  for (const MergeWitness& e : p.edges)
    edges.push_back(json{{"x", e.x},
                         {"y", e.y},
                         {"u", finset_to_json(e.u)},
                         {"v", finset_to_json(e.v)}});
  return json{{"blocks", blocks}, {"edges", edges}};
}

}  // namespace scott
