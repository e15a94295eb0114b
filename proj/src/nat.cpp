#include "scott/nat.hpp"

#include <algorithm>
#include <sstream>

namespace scott {

FinSet FinSet::from_any(std::vector<Nat> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return FinSet(std::move(xs));
}

bool FinSet::contains(const Nat& x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool FinSet::subset_of(const FinSet& other) const {
  // Two-pointer scan; both sides sorted.
  auto it = other.elems_.begin();
  for (const Nat& x : elems_) {
    while (it != other.elems_.end() && *it < x) ++it;
    if (it == other.elems_.end() || *it != x) return false;
  }
  return true;
}

FinSet FinSet::union_with(const FinSet& other) const {
  std::vector<Nat> out;
  out.reserve(size() + other.size());
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                 std::back_inserter(out));
  return FinSet(std::move(out));
}

FinSet FinSet::intersect(const FinSet& other) const {
  std::vector<Nat> out;
  std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                        std::back_inserter(out));
  return FinSet(std::move(out));
}

FinSet FinSet::up_to(const Nat& bound) const {
  auto it = std::upper_bound(elems_.begin(), elems_.end(), bound);
  return FinSet(std::vector<Nat>(elems_.begin(), it));
}

FinSet FinSet::inserted(const Nat& x) const {
  if (contains(x)) return *this;
  std::vector<Nat> out = elems_;
  out.insert(std::upper_bound(out.begin(), out.end(), x), x);
  return FinSet(std::move(out));
}

std::strong_ordering operator<=>(const FinSet& a, const FinSet& b) {
  const std::size_t n = std::min(a.elems_.size(), b.elems_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.elems_[i] < b.elems_[i]) return std::strong_ordering::less;
    if (b.elems_[i] < a.elems_[i]) return std::strong_ordering::greater;
  }
  if (a.elems_.size() < b.elems_.size()) return std::strong_ordering::less;
  if (a.elems_.size() > b.elems_.size()) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string FinSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const Nat& x : elems_) {
    if (!first) os << ", ";
    first = false;
    os << x;
  }
  os << '}';
  return os.str();
}

FinSet decode_finite(const Nat& code) {
  if (code < 0) throw std::invalid_argument("decode_finite: negative code");
  std::vector<Nat> out;
  Nat rest = code;
  unsigned long bit = 0;
  while (rest != 0) {
    if (boost::multiprecision::bit_test(rest, 0)) out.emplace_back(bit);
    rest >>= 1;
    ++bit;
  }
  return FinSet(std::move(out));
}

Nat encode_finite(const FinSet& s) {
  Nat out = 0;
  for (const Nat& x : s) {
    if (x > Nat(1u) << 24)
      throw std::invalid_argument("encode_finite: element too large to encode");
    boost::multiprecision::bit_set(out, static_cast<unsigned>(x));
  }
  return out;
}

Nat pair_nat(const Nat& m, const Nat& n) {
  const Nat s = m + n;
  return s * (s + 1) / 2 + n;
}

PairCode unpair_nat(const Nat& code) {
  if (code < 0) throw std::invalid_argument("unpair_nat: negative code");
  // Diagonal w = floor((sqrt(8c+1)-1)/2); correct any isqrt edge by hand.
  const Nat disc = 8 * code + 1;
  Nat w = (boost::multiprecision::sqrt(disc) - 1) / 2;
  while (w * (w + 1) / 2 > code) --w;
  while ((w + 1) * (w + 2) / 2 <= code) ++w;
  const Nat t = w * (w + 1) / 2;
  PairCode pc;
  pc.n = code - t;
  pc.m = w - pc.n;
  pc.code = code;
  return pc;
}

std::optional<Nat> max_second_under(const Nat& m, const Nat& bound) {
  if (pair_nat(m, 0) > bound) return std::nullopt;
  // Binary search on n; pair(m, .) is strictly increasing.
  Nat lo = 0, hi = bound;  // pair(m, n) >= n, so n <= bound
  while (lo < hi) {
    const Nat mid = (lo + hi + 1) / 2;
    if (pair_nat(m, mid) <= bound)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

Nat pair_nested(const std::vector<Nat>& ms, const Nat& last) {
  Nat acc = last;
  for (auto it = ms.rbegin(); it != ms.rend(); ++it) acc = pair_nat(*it, acc);
  return acc;
}

}  // namespace scott
