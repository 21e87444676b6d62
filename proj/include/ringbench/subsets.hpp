#ifndef RINGBENCH_SUBSETS_HPP
#define RINGBENCH_SUBSETS_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ringbench/finite_ring.hpp"

namespace ringbench {

enum class Side { left, right };

enum class UnitKind { left, right, two_sided };

inline const char* to_string(Side s) {
  return s == Side::left ? "left" : "right";
}

/// A subset of a ring's elements, materialized as a bit vector indexed by
/// element. Value type; comparable, so set families can be canonicalized
/// by sorting.
class ElementSubset {
public:
  explicit ElementSubset(std::size_t order) : bits_(order, false) {}

  std::size_t order() const { return bits_.size(); }
  bool test(Elem i) const { return bits_[i]; }
  void set(Elem i) { bits_[i] = true; }

  std::size_t count() const {
    return static_cast<std::size_t>(
        std::count(bits_.begin(), bits_.end(), true));
  }

  /// Sorted element indices; the serialization used in reports.
  std::vector<Elem> indices() const {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) out.push_back(static_cast<Elem>(i));
    return out;
  }

  friend bool operator==(const ElementSubset& a, const ElementSubset& b) {
    return a.bits_ == b.bits_;
  }
  friend bool operator<(const ElementSubset& a, const ElementSubset& b) {
    return a.bits_ < b.bits_;
  }

private:
  std::vector<bool> bits_;
};

namespace detail {

inline void require_index(const FiniteRing& r, Elem a) {
  if (a >= r.order())
    throw std::invalid_argument("element index " + std::to_string(a) +
                                " out of range for order " +
                                std::to_string(r.order()));
}

// side-oriented product: left means x*a, right means a*x.
inline Elem mul_side(const FiniteRing& r, Side side, Elem x, Elem a) {
  return side == Side::left ? r.mul(x, a) : r.mul(a, x);
}

}  // namespace detail

/// Principal one-sided ideal generated by a: Ra = {r*a} or aR = {a*r}.
inline ElementSubset principal(const FiniteRing& r, Elem a, Side side) {
  detail::require_index(r, a);
  ElementSubset s(r.order());
  for (Elem x = 0; x < r.order(); ++x)
    s.set(detail::mul_side(r, side, x, a));
  return s;
}

/// One-sided annihilator of a: {r : r*a = 0} (left) or {r : a*r = 0}.
inline ElementSubset annihilator(const FiniteRing& r, Elem a, Side side) {
  detail::require_index(r, a);
  ElementSubset s(r.order());
  for (Elem x = 0; x < r.order(); ++x)
    if (detail::mul_side(r, side, x, a) == r.zero()) s.set(x);
  return s;
}

/// Left units {u : some v has vu = 1}, right units {u : some v has uv = 1},
/// or their intersection. 1 is always a member.
inline ElementSubset units(const FiniteRing& r, UnitKind kind) {
  const std::size_t n = r.order();
  ElementSubset s(n);
  for (Elem u = 0; u < n; ++u) {
    bool left = false, right = false;
    for (Elem v = 0; v < n; ++v) {
      if (r.mul(v, u) == r.one()) left = true;
      if (r.mul(u, v) == r.one()) right = true;
    }
    bool in = kind == UnitKind::left    ? left
              : kind == UnitKind::right ? right
                                        : (left && right);
    if (in) s.set(u);
  }
  return s;
}

/// All principal one-sided ideals of the ring, canonicalized: sorted by
/// bit-vector encoding, duplicates removed.
inline std::vector<ElementSubset> principal_family(const FiniteRing& r,
                                                   Side side) {
  std::vector<ElementSubset> fam;
  fam.reserve(r.order());
  for (Elem a = 0; a < r.order(); ++a) fam.push_back(principal(r, a, side));
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  return fam;
}

/// All one-sided annihilators, canonicalized like principal_family.
inline std::vector<ElementSubset> annihilator_family(const FiniteRing& r,
                                                     Side side) {
  std::vector<ElementSubset> fam;
  fam.reserve(r.order());
  for (Elem a = 0; a < r.order(); ++a) fam.push_back(annihilator(r, a, side));
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  return fam;
}

}  // namespace ringbench

#endif  // RINGBENCH_SUBSETS_HPP
