#include "scott/homotopy.hpp"

#include "scott/interp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

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
      throw PredicateSpecUnsupported(std::string(op) + " requires explicit realizer lists: " +
                                     x.name() + "/" + x.carrier()[i]);
}

void require_bits(const BitSequence& sigma) {
  for (unsigned b : sigma.bits)
    if (b > 1) throw std::invalid_argument("bit sequence entries must be 0 or 1");
}

// Monotone elementhood: stages only grow, so the budget stage decides.
bool found_by(const EnumSet& s, const Nat& e, Fuel budget) { return s.contains_at(budget, e); }

// First element of a@probe not found in b by the budget.
std::optional<Nat> missing_from(const EnumSet& a, const EnumSet& b, Fuel probe, Fuel budget) {
  for (const Nat& e : a.approx(probe))
    if (!found_by(b, e, budget)) return e;
  return std::nullopt;
}

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += ",";
    out += l;
  }
  return out;
}

}  // namespace

std::string BitSequence::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(bits[i]);
  }
  return out + ")";
}

const FinSet& GenericInterval::alpha(unsigned k) const {
  if (k > n) throw IndexOutOfRange("interval point out of range: " + std::to_string(k));
  return alphas[k];
}

const FinSet& GenericInterval::beta(unsigned k) const {
  if (k > n) throw IndexOutOfRange("interval point out of range: " + std::to_string(k));
  return betas[k];
}

GenericInterval generic_interval(unsigned n, BitSequence sigma) {
  if (n == 0) throw LengthMismatch("interval length must be positive");
  if (sigma.size() != n)
    throw LengthMismatch("interval of length " + std::to_string(n) + " needs " +
                         std::to_string(n) + " direction bits, got " +
                         std::to_string(sigma.size()));
  require_bits(sigma);

  const FinSet flag_on{Nat(1)};
  const FinSet flag_off;
  GenericInterval out;
  out.n = n;
  out.sigma = sigma;
  std::vector<std::string> labels;
  std::vector<RealizerSpec> specs;
  for (unsigned k = 0; k <= n; ++k) {
    // The lower code names k and raises its flag when the step into k points
    // upward (or at the start); the upper code names k+1 and raises its flag
    // when the step out of k points downward.
    const bool lower_flag = (k == 0) || sigma.bits[k - 1] == 0;
    const bool upper_flag = (k < n) && sigma.bits[k] == 1;
    out.alphas.push_back(pair_realizer(FinSet{Nat(k)}, lower_flag ? flag_on : flag_off));
    out.betas.push_back(pair_realizer(FinSet{Nat(k + 1)}, upper_flag ? flag_on : flag_off));
    labels.push_back(std::to_string(k));
    specs.push_back(RealizerSpec::explicit_finite({out.alphas[k], out.betas[k]}));
  }
  for (unsigned k = 0; k < n; ++k) {
    const FinSet& b = out.betas[k];
    const FinSet& a = out.alphas[k + 1];
    const bool ok = sigma.bits[k] == 0 ? (b.subset_of(a) && !(b == a))
                                       : (a.subset_of(b) && !(a == b));
    if (!ok) throw std::logic_error("interval step " + std::to_string(k) + " lost its direction");
  }
  out.assembly = make_finite_assembly("I(" + std::to_string(n) + "," + sigma.to_string() + ")",
                                      std::move(labels), std::move(specs));
  return out;
}

// --- monotone tracker search -------------------------------------------------

TrackerSearchResult monotone_tracker_search(const TrackerSpec& spec) {
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (spec[i].second.empty())
      throw std::invalid_argument("empty allowed-output list in tracker specification");
    for (std::size_t j = i + 1; j < spec.size(); ++j)
      if (spec[i].first == spec[j].first)
        throw std::invalid_argument("duplicate input in tracker specification");
  }

  std::size_t total = 1;
  for (const auto& [in, allowed] : spec) {
    if (total > (std::size_t{1} << 22) / allowed.size())
      throw std::invalid_argument("tracker search space too large");
    total *= allowed.size();
  }

  const std::size_t m = spec.size();
  std::vector<std::size_t> idx(m, 0);
  auto extension_on = [&spec, &idx](const FinSet& p) {
    FinSet out;
    for (std::size_t i = 0; i < spec.size(); ++i)
      if (spec[i].first.subset_of(p)) out = out.union_with(spec[i].second[idx[i]]);
    return out;
  };

  for (std::size_t tick = 0; tick < total; ++tick) {
    bool ok = true;
    for (std::size_t j = 0; j < m && ok; ++j) {
      const FinSet value = extension_on(spec[j].first);
      const auto& allowed = spec[j].second;
      ok = std::find(allowed.begin(), allowed.end(), value) != allowed.end();
    }
    if (ok) {
      TrackerSearchResult res;
      res.found = true;
      std::vector<FinSet> inputs, outputs;
      for (std::size_t i = 0; i < m; ++i) {
        inputs.push_back(spec[i].first);
        outputs.push_back(spec[i].second[idx[i]]);
        res.choice[spec[i].first] = spec[i].second[idx[i]];
      }
      res.tracker = graph_of(
          [inputs, outputs](const std::vector<FinSet>& args) {
            FinSet out;
            for (std::size_t i = 0; i < inputs.size(); ++i)
              if (inputs[i].subset_of(args[0])) out = out.union_with(outputs[i]);
            return EnumSet::literal(out);
          },
          1, wide_monotone("monotone-tracker"));
      return res;
    }
    // Advance the choice odometer.
    for (std::size_t i = 0; i < m; ++i) {
      if (++idx[i] < spec[i].second.size()) break;
      idx[i] = 0;
    }
  }

  TrackerSearchResult res;
  res.detail = "no choice of outputs extends monotonely over the specified inputs (" +
               std::to_string(total) + " candidates tried)";
  return res;
}

// --- path witnesses ----------------------------------------------------------

std::string PathVerdict::to_string() const {
  if (accepted) return "Accepted(probe " + std::to_string(probe) + ")";
  return "Rejected(" + detail + ")";
}

PathWitness path_witness(FiniteAssembly space, const std::vector<std::string>& visited,
                         BitSequence sigma, std::vector<FinSet> parts) {
  if (sigma.size() == 0) throw LengthMismatch("a path needs at least one direction bit");
  require_bits(sigma);
  const std::size_t n = sigma.size();
  if (visited.size() != n + 1)
    throw IndexOutOfRange("a path of length " + std::to_string(n) + " visits " +
                          std::to_string(n + 1) + " points, got " +
                          std::to_string(visited.size()));
  if (parts.size() != 3 * n + 1)
    throw IndexOutOfRange("a path of length " + std::to_string(n) + " carries " +
                          std::to_string(3 * n + 1) + " tuple components, got " +
                          std::to_string(parts.size()));
  PathWitness w;
  for (const std::string& l : visited) {
    space.index_of(l);  // throws UnknownLabel
    w.points.push_back(l);
    w.points.push_back(l);
  }
  std::vector<EnumSet> coded;
  for (const FinSet& s : parts) coded.push_back(EnumSet::literal(s));
  w.realizer = tuple_code(coded);
  w.space = std::move(space);
  w.sigma = std::move(sigma);
  w.parts = std::move(parts);
  return w;
}

PathVerdict path_realizer_check(const FiniteAssembly& x, const std::vector<std::string>& points,
                                const BitSequence& sigma, const EnumSet& tuple, Fuel probe,
                                Fuel budget) {
  if (sigma.size() == 0) throw IndexOutOfRange("a path needs at least one direction bit");
  require_bits(sigma);
  const std::size_t n = sigma.size();
  if (points.size() != 2 * n + 2)
    throw IndexOutOfRange("a path of length " + std::to_string(n) + " lists " +
                          std::to_string(2 * n + 2) + " point labels, got " +
                          std::to_string(points.size()));
  for (const std::string& l : points) x.index_of(l);  // throws UnknownLabel

  const std::size_t want = 3 * n + 1;
  std::vector<EnumSet> parts;
  if (const std::vector<EnumSet>* direct = tuple.tuple_parts()) {
    if (direct->size() != want)
      throw MalformedTuple("tuple has " + std::to_string(direct->size()) +
                           " components, expected " + std::to_string(want));
    parts = *direct;
  } else {
    const FinSet markers = tuple_length_markers(tuple, budget);
    if (markers.size() != 1)
      throw MalformedTuple(markers.empty() ? "no tuple length marker within the budget"
                                           : "ambiguous tuple length markers: " +
                                                 markers.to_string());
    if (!(markers[0] == Nat(want - 1)))
      throw MalformedTuple("tuple declares " + Nat(markers[0] + 1).str() +
                           " components, expected " + std::to_string(want));
    for (std::size_t i = 0; i < want; ++i) parts.push_back(tuple_component(tuple, i));
  }

  auto reject = [probe](std::string detail) {
    return PathVerdict{false, probe, std::move(detail)};
  };

  for (std::size_t k = 0; k <= n; ++k) {
    const std::string& xs = points[2 * k];
    const std::string& ys = points[2 * k + 1];
    if (xs != ys)
      return reject("segment " + std::to_string(k) + ": no value relates the distinct points " +
                    xs + " and " + ys);
    if (!member_of_spec(parts[3 * k], x.spec_of(xs), probe, budget))
      return reject("component U_" + std::to_string(k) + " does not realize point " + xs);
  }
  for (std::size_t k = 0; k < n; ++k) {
    const std::string& here = points[2 * k + 1];
    const std::string& next = points[2 * k + 2];
    const EnumSet& v = parts[3 * k + 1];
    const EnumSet& w = parts[3 * k + 2];
    if (!member_of_spec(v, x.spec_of(here), probe, budget))
      return reject("component V_" + std::to_string(k) + " does not realize point " + here);
    if (!member_of_spec(w, x.spec_of(next), probe, budget))
      return reject("component W_" + std::to_string(k) + " does not realize point " + next);
    const bool up = sigma.bits[k] == 0;
    const auto missing =
        up ? missing_from(v, w, probe, budget) : missing_from(w, v, probe, budget);
    if (missing)
      return reject("step " + std::to_string(k) + ": direction bit " +
                    std::to_string(sigma.bits[k]) + " needs " +
                    (up ? "V_" : "W_") + std::to_string(k) + " within " + (up ? "W_" : "V_") +
                    std::to_string(k) + ", but " + missing->str() + " is missing by fuel " +
                    std::to_string(budget));
  }
  return PathVerdict{true, probe, ""};
}

PathVerdict path_realizer_check(const PathWitness& w, Fuel probe, Fuel budget) {
  return path_realizer_check(w.space, w.points, w.sigma, w.realizer, probe, budget);
}

PathWitness const_path(const FiniteAssembly& x, const std::string& label) {
  require_explicit(x, "path algebra");
  const FinSet u = x.spec_of(label).sets().front();
  return path_witness(x, {label, label}, BitSequence{{0}}, {u, u, u, u});
}

PathWitness compose(const PathWitness& p, const PathWitness& q) {
  if (p.space.name() != q.space.name() || p.space.carrier() != q.space.carrier())
    throw EndpointMismatch("paths live in different assemblies: " + p.space.name() + " vs " +
                           q.space.name());
  if (p.target() != q.source())
    throw EndpointMismatch("cannot compose: first path ends at " + p.target() +
                           ", second starts at " + q.source());
  PathWitness out;
  out.space = p.space;
  out.points = p.points;
  out.points.insert(out.points.end(), q.points.begin() + 2, q.points.end());
  out.sigma.bits = p.sigma.bits;
  out.sigma.bits.insert(out.sigma.bits.end(), q.sigma.bits.begin(), q.sigma.bits.end());
  // The junction point keeps the first path's final component; the second
  // path's remaining components follow.
  out.parts = p.parts;
  out.parts.insert(out.parts.end(), q.parts.begin() + 1, q.parts.end());
  std::vector<EnumSet> rest;
  for (std::size_t i = 1; i < q.parts.size(); ++i)
    rest.push_back(EnumSet::literal(q.parts[i]));
  out.realizer = apply_all(std_env().get("concat"), {p.realizer, tuple_code(rest)});
  return out;
}

PathWitness reverse(const PathWitness& p) {
  const std::size_t n = p.length();
  PathWitness out;
  out.space = p.space;
  for (std::size_t k = 0; k <= n; ++k) {
    out.points.push_back(p.points[2 * (n - k) + 1]);
    out.points.push_back(p.points[2 * (n - k)]);
  }
  for (std::size_t k = 0; k < n; ++k) out.sigma.bits.push_back(1 - p.sigma.bits[n - 1 - k]);
  for (std::size_t k = 0; k <= n; ++k) {
    out.parts.push_back(p.parts[3 * (n - k)]);
    if (k < n) {
      out.parts.push_back(p.parts[3 * (n - 1 - k) + 2]);
      out.parts.push_back(p.parts[3 * (n - 1 - k) + 1]);
    }
  }
  std::vector<EnumSet> coded;
  for (const FinSet& s : out.parts) coded.push_back(EnumSet::literal(s));
  out.realizer = tuple_code(coded);
  return out;
}

// --- path components ---------------------------------------------------------

Partition path_components(const FiniteAssembly& x) {
  require_explicit(x, "path components");
  const std::size_t n = x.size();
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&root](std::size_t i) {
    while (root[i] != i) i = root[i] = root[root[i]];
    return i;
  };
  Partition part;
  // A single step from i to j exists exactly when some realizer pair is
  // comparable: the inclusion picks the direction bit of an accepted
  // length-1 witness.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (find(i) == find(j)) continue;
      for (const FinSet& u : x.spec_at(i).sets()) {
        for (const FinSet& v : x.spec_at(j).sets()) {
          if (u.subset_of(v) || v.subset_of(u)) {
            root[find(j)] = find(i);
            part.edges.push_back(MergeWitness{x.carrier()[i], x.carrier()[j], u, v});
            goto stepped;
          }
        }
      }
    stepped:;
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < n; ++i) by_root[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < n; ++i)
    if (find(i) == i) blocks.push_back(by_root.at(i));
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (const auto& block : blocks) {
    std::vector<std::string> members;
    for (std::size_t i : block) members.push_back(x.carrier()[i]);
    part.blocks.push_back(std::move(members));
  }
  return part;
}

// --- finite T0 spaces --------------------------------------------------------

SpaceEmbedding embed_finite_t0(const FiniteT0Space& space) {
  for (std::size_t i = 0; i < space.points.size(); ++i)
    for (std::size_t j = i + 1; j < space.points.size(); ++j)
      if (space.points[i] == space.points[j])
        throw std::invalid_argument("duplicate point name: " + space.points[i]);
  auto point_index = [&space](const std::string& l) {
    for (std::size_t i = 0; i < space.points.size(); ++i)
      if (space.points[i] == l) return i;
    throw UnknownLabel(l);
  };
  for (const auto& open : space.subbasis)
    for (const std::string& l : open) point_index(l);

  SpaceEmbedding out;
  for (const std::string& p : space.points) {
    std::vector<Nat> code;
    for (std::size_t s = 0; s < space.subbasis.size(); ++s) {
      const auto& open = space.subbasis[s];
      if (std::find(open.begin(), open.end(), p) != open.end()) code.push_back(Nat(s));
    }
    out.codes.push_back(FinSet(std::move(code)));
  }
  for (std::size_t i = 0; i < space.points.size(); ++i)
    for (std::size_t j = i + 1; j < space.points.size(); ++j)
      if (out.codes[i] == out.codes[j]) throw NotT0(space.points[i], space.points[j]);

  std::vector<RealizerSpec> specs;
  for (const FinSet& c : out.codes) specs.push_back(RealizerSpec::explicit_finite({c}));
  out.assembly = make_finite_assembly("Emb{" + join_labels(space.points) + "}", space.points,
                                      std::move(specs));

  for (std::size_t i = 0; i < space.points.size(); ++i)
    for (std::size_t j = 0; j < space.points.size(); ++j)
      if (i != j && out.codes[i].subset_of(out.codes[j]))
        out.order.emplace_back(space.points[i], space.points[j]);
  out.t1 = out.order.empty();
  out.order_discrete = is_order_discrete(out.assembly).order_discrete;
  out.components = path_components(out.assembly);
  return out;
}

}  // namespace scott
