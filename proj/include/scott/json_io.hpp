#pragma once

// JSON shapes for the model's values. Output is canonical: naturals as
// decimal strings (bignum-safe), finite sets as sorted arrays, enumerable
// sets as construction trees, assemblies/morphisms/spaces in the declared
// object shapes. Input is liberal: naturals also parse from JSON numbers, a
// bare string is term text, a bare array is a literal set.

#include "scott/assembly.hpp"
#include "scott/enumset.hpp"
#include "scott/homotopy.hpp"
#include "scott/sierpinski.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace scott {

struct JsonShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Nat nat_from_json(const nlohmann::json& j);
nlohmann::json nat_to_json(const Nat& n);

FinSet finset_from_json(const nlohmann::json& j);
nlohmann::json finset_to_json(const FinSet& s);

// Construction trees: {"lit": [...]}, {"const": "p"}, {"term": "\\u. u"},
// {"apply": {"fn": T, "args": [T, ...]}}, {"tuple": [T, ...]}. jmax bounds
// the graph enumeration cap used for interpreted term text.
EnumSet enumset_from_json(const nlohmann::json& j, unsigned jmax = 12);
nlohmann::json enumset_to_json(const EnumSet& s);

// {"name": ..., "carrier": [...], "E": {label: [set, ...]}}; name optional
// on input. Serialization requires explicit realizer lists.
FiniteAssembly assembly_from_json(const nlohmann::json& j);
nlohmann::json assembly_to_json(const FiniteAssembly& x);

// {"source": assembly, "target": assembly, "map": {...}, "tracker": tree}.
Morphism morphism_from_json(const nlohmann::json& j, unsigned jmax = 12);
nlohmann::json morphism_to_json(const Morphism& f);

// {"points": [...], "subbasis": [[...], ...]}.
FiniteT0Space space_from_json(const nlohmann::json& j);

nlohmann::json partition_to_json(const Partition& p);

}  // namespace scott
