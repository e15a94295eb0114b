#pragma once

// Arbitrary-precision naturals, the finite-set/number coding and the pairing
// bijection that the whole model is built on.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace scott {

using Nat = boost::multiprecision::cpp_int;  // always >= 0 here
using Fuel = std::uint32_t;

// Strictly increasing vector of naturals. Value type for every finite stage.
class FinSet {
 public:
  FinSet() = default;
  explicit FinSet(std::vector<Nat> sorted_unique) : elems_(std::move(sorted_unique)) {}
  FinSet(std::initializer_list<Nat> xs) : FinSet(from_any(std::vector<Nat>(xs))) {}

  static FinSet from_any(std::vector<Nat> xs);  // sorts + dedups

  bool empty() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }
  const std::vector<Nat>& elements() const { return elems_; }
  const Nat& operator[](std::size_t i) const { return elems_[i]; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool contains(const Nat& x) const;
  bool subset_of(const FinSet& other) const;
  FinSet union_with(const FinSet& other) const;
  FinSet intersect(const FinSet& other) const;
  // Elements <= bound (bound inclusive).
  FinSet up_to(const Nat& bound) const;
  FinSet inserted(const Nat& x) const;

  friend bool operator==(const FinSet& a, const FinSet& b) { return a.elems_ == b.elems_; }
  friend std::strong_ordering operator<=>(const FinSet& a, const FinSet& b);

  std::string to_string() const;  // e.g. "{0, 3}"

 private:
  std::vector<Nat> elems_;
};

// --- number <-> finite set coding ------------------------------------------
// decode_finite(n) = set of bit positions of n; encode_finite inverts it.
// decode_finite(0) = {}, decode_finite(2^n) = {n}.

FinSet decode_finite(const Nat& code);
Nat encode_finite(const FinSet& s);

// --- pairing ----------------------------------------------------------------
// pair(m, n) = (m+n)(m+n+1)/2 + n, a bijection N x N -> N. pair(1,2) = 8.

Nat pair_nat(const Nat& m, const Nat& n);

struct PairCode {
  Nat m;
  Nat n;
  Nat code;
};

PairCode unpair_nat(const Nat& code);

// Largest n with pair(m, n) <= bound, if any (pair is strictly increasing
// in n at fixed m). Used to push element bounds through nested codes.
std::optional<Nat> max_second_under(const Nat& m, const Nat& bound);

// Nested right-associated pairing <m1, <m2, ... <mk, n>...>>.
Nat pair_nested(const std::vector<Nat>& ms, const Nat& last);

inline Nat nat_of(std::uint64_t v) { return Nat(v); }

}  // namespace scott
