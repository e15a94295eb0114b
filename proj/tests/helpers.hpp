#pragma once

// Shared test utilities: explicit small-set enumeration and an independent
// reimplementation of the application formula used as an oracle.

#include "scott/enumset.hpp"
#include "scott/nat.hpp"

#include <cstdint>
#include <vector>

namespace testutil {

using scott::EnumSet;
using scott::FinSet;
using scott::Fuel;
using scott::Nat;

// All subsets of {0..n}, in mask order.
inline std::vector<FinSet> subsets_upto(unsigned n) {
  std::vector<FinSet> out;
  const std::uint32_t total = std::uint32_t(1) << (n + 1);
  out.reserve(total);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<Nat> elems;
    for (unsigned b = 0; b <= n; ++b)
      if (mask & (std::uint32_t(1) << b)) elems.emplace_back(b);
    out.emplace_back(std::move(elems));
  }
  return out;
}

// The application formula evaluated directly on finite data: decode every
// code of `fn`, keep the tail when the coded set sits inside `arg`.
inline FinSet brute_apply(const FinSet& fn, const FinSet& arg) {
  std::vector<Nat> out;
  for (const Nat& c : fn) {
    const scott::PairCode pc = scott::unpair_nat(c);
    if (scott::decode_finite(pc.m).subset_of(arg)) out.push_back(pc.n);
  }
  return FinSet::from_any(std::move(out));
}

// Type-erasing wrapper: copies the stages of `s` into a plain family node so
// application falls back to the generic code-decoding path even when `s` is
// a graph.
inline EnumSet erase_structure(const EnumSet& s) {
  return EnumSet::family("erased", [s](Fuel k) { return s.approx(k); });
}

}  // namespace testutil
