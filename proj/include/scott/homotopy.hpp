#pragma once

// Path structure over assemblies: generic intervals (finite chains of
// alternating realizers ordered by a bit sequence), a search for monotone
// trackers of finitely-specified maps, coded path witnesses with their
// checking routine and algebra (constant, composition, reversal), path
// components, and the embedding of finite T0 topological spaces.

#include "scott/assembly.hpp"
#include "scott/enumset.hpp"
#include "scott/sierpinski.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scott {

struct LengthMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EndpointMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Nonempty finite sequence over {0,1}.
struct BitSequence {
  std::vector<unsigned> bits;
  std::size_t size() const { return bits.size(); }
  std::string to_string() const;  // e.g. "(0,1,1)"
};

// The interval of length n over a bit sequence: points 0..n, each realized by
// a lower code alpha_k and an upper code beta_k whose even parts name the
// point (k resp. k+1) and whose odd parts make consecutive points comparable
// in the direction the k-th bit selects.
struct GenericInterval {
  unsigned n = 0;
  BitSequence sigma;
  FiniteAssembly assembly;
  std::vector<FinSet> alphas;  // alpha_k = pair value of {k} and the lower flag
  std::vector<FinSet> betas;   // beta_k = pair value of {k+1} and the upper flag
  const FinSet& alpha(unsigned k) const;
  const FinSet& beta(unsigned k) const;
};

// Builds the interval; length must match the bit sequence and be positive.
GenericInterval generic_interval(unsigned n, BitSequence sigma);  // throws LengthMismatch

// --- monotone tracker search -------------------------------------------------

// Finite specification: each explicit input realizer maps to the nonempty
// list of outputs a tracker is allowed to produce on it.
using TrackerSpec = std::vector<std::pair<FinSet, std::vector<FinSet>>>;

struct TrackerSearchResult {
  bool found = false;
  EnumSet tracker;                 // graph of the canonical monotone extension
  std::map<FinSet, FinSet> choice; // accepted output choice per input
  std::string detail;              // failure explanation when not found
};

// Tries every output choice g; the candidate tracker is the monotone closure
// F(p) = union of g(r) over spec inputs r below p, accepted when F stays
// within the allowed outputs on every spec input.
TrackerSearchResult monotone_tracker_search(const TrackerSpec& spec);

// --- path witnesses ----------------------------------------------------------

struct PathVerdict {
  bool accepted = false;
  Fuel probe = 0;
  std::string detail;  // reason when rejected
  std::string to_string() const;
};

// A path of length n through an assembly: 2n+2 point labels in source/target
// pairs, n direction bits, and a coded (3n+1)-part tuple
// [U_0, V_0, W_0, ..., U_n] whose parts realize the visited points with the
// per-step inclusion the bits select.
struct PathWitness {
  FiniteAssembly space;
  std::vector<std::string> points;  // x_0, y_0, ..., x_n, y_n
  BitSequence sigma;
  std::vector<FinSet> parts;        // explicit components, 3n+1 of them
  EnumSet realizer;                 // their coded tuple
  unsigned length() const { return static_cast<unsigned>(sigma.size()); }
  const std::string& source() const { return points.front(); }
  const std::string& target() const { return points.back(); }
};

// Builds a witness visiting the given n+1 labels (each doubled into its
// source/target pair) with explicit tuple components; no acceptance check.
PathWitness path_witness(FiniteAssembly space, const std::vector<std::string>& visited,
                         BitSequence sigma, std::vector<FinSet> parts);

// Checks a coded tuple against the path conditions: each U_k must realize the
// k-th visited point (source and target label must agree), V_k / W_k must
// realize the step's endpoints, and the step inclusion must follow its bit.
PathVerdict path_realizer_check(const FiniteAssembly& x,
                                const std::vector<std::string>& points,
                                const BitSequence& sigma, const EnumSet& tuple, Fuel probe,
                                Fuel budget);
// Convenience overload for a built witness.
PathVerdict path_realizer_check(const PathWitness& w, Fuel probe, Fuel budget);

// The stationary length-1 path at a label.
PathWitness const_path(const FiniteAssembly& x, const std::string& label);
// Concatenation; the junction keeps the first path's final component.
PathWitness compose(const PathWitness& p, const PathWitness& q);  // throws EndpointMismatch
// The same walk backwards: pairs swapped and reversed, bits reversed and
// flipped, components mirrored.
PathWitness reverse(const PathWitness& p);

// Reachability by single comparable-realizer steps, transitively closed.
Partition path_components(const FiniteAssembly& x);

// --- finite T0 spaces --------------------------------------------------------

struct FiniteT0Space {
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> subbasis;  // listed point sets
};

struct NotT0 : std::runtime_error {
  NotT0(const std::string& a, const std::string& b)
      : std::runtime_error("points are not separated by the subbasis: " + a + ", " + b),
        x(a),
        y(b) {}
  std::string x, y;
};

struct SpaceEmbedding {
  FiniteAssembly assembly;  // E(x) = { {n | x in S_n} }
  std::vector<FinSet> codes;
  // Strict specialization pairs (x, y) with x != y and code(x) within code(y).
  std::vector<std::pair<std::string, std::string>> order;
  bool t1 = false;              // no strict specialization
  bool order_discrete = false;  // coincides with t1
  Partition components;
};

// Embeds a finite space via its subbasis membership codes.
SpaceEmbedding embed_finite_t0(const FiniteT0Space& space);  // throws NotT0

}  // namespace scott
