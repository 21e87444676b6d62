#ifndef RINGBENCH_PROPERTIES_HPP
#define RINGBENCH_PROPERTIES_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringbench/subsets.hpp"

namespace ringbench {

/// Raised when a property sweep exceeds its time budget. Callers that set
/// budgets (the theorem harness) convert this into an explicit skipped
/// verdict; nothing is ever silently truncated.
class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

/// Optional wall-clock limit polled from the outer loop of each sweep.
class Deadline {
public:
  Deadline() = default;

  static Deadline after(double seconds) {
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(seconds));
    return d;
  }

  bool expired() const {
    return at_.has_value() && std::chrono::steady_clock::now() > *at_;
  }

  void poll(const char* what) const {
    if (expired()) throw BudgetExceeded(std::string(what) + ": time budget exceeded");
  }

private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

struct WitnessPart {
  std::string role;  // variable name in the defining formula
  Elem index;
};

/// Verdict of one property decision. A false verdict always carries a
/// witness that replays through the defining formula (replay_witness); a
/// true verdict's search_space equals the full quantifier domain size.
struct PropertyResult {
  std::string property;
  std::optional<Side> side;
  bool holds = true;
  std::vector<WitnessPart> witness;
  std::string detail;
  std::uint64_t search_space = 0;
};

namespace detail {

inline std::vector<Elem> unit_list(const FiniteRing& r, UnitKind kind) {
  return units(r, kind).indices();
}

inline UnitKind side_unit_kind(Side s) {
  return s == Side::left ? UnitKind::left : UnitKind::right;
}

}  // namespace detail

bool replay_witness(const FiniteRing& r, const PropertyResult& res);

namespace detail {

inline PropertyResult finish(const FiniteRing& r, PropertyResult res) {
  if (!res.holds && !replay_witness(r, res))
    throw std::logic_error("internal error: " + res.property +
                           " witness fails replay on " + r.label());
  return res;
}

}  // namespace detail

/// ab = 1 implies ba = 1, for all a, b.
inline PropertyResult directly_finite(const FiniteRing& r,
                                      const Deadline& dl = {}) {
  PropertyResult res;
  res.property = "directly_finite";
  const std::size_t n = r.order();
  for (Elem a = 0; a < n; ++a) {
    dl.poll("directly_finite");
    for (Elem b = 0; b < n; ++b) {
      ++res.search_space;
      if (r.mul(a, b) == r.one() && r.mul(b, a) != r.one()) {
        res.holds = false;
        res.witness = {{"a", a}, {"b", b}};
        return detail::finish(r, res);
      }
    }
  }
  return res;
}

/// Whenever ax + b = 1, some y makes a + by a (two-sided) unit. b is
/// forced by (a, x), so the quantifier domain is the n^2 pairs (a, x).
inline PropertyResult stable_range_one(const FiniteRing& r,
                                       const Deadline& dl = {}) {
  PropertyResult res;
  res.property = "stable_range_one";
  const std::size_t n = r.order();
  const ElementSubset u = units(r, UnitKind::two_sided);
  for (Elem a = 0; a < n; ++a) {
    dl.poll("stable_range_one");
    for (Elem x = 0; x < n; ++x) {
      ++res.search_space;
      const Elem b = r.sub(r.one(), r.mul(a, x));
      bool found = false;
      for (Elem y = 0; y < n; ++y)
        if (u.test(r.add(a, r.mul(b, y)))) {
          found = true;
          break;
        }
      if (!found) {
        res.holds = false;
        res.witness = {{"a", a}, {"x", x}, {"b", b}};
        return detail::finish(r, res);
      }
    }
  }
  return res;
}

/// Left: every b that is a left unit modulo some Rc (some a has
/// ab - 1 in Rc) differs from an actual left unit by an element of Rc.
/// Right is the mirror through cR and right units.
inline PropertyResult unit_lifting(const FiniteRing& r, Side side,
                                   const Deadline& dl = {}) {
  PropertyResult res;
  res.property = "unit_lifting";
  res.side = side;
  const std::size_t n = r.order();
  const std::vector<Elem> su =
      detail::unit_list(r, detail::side_unit_kind(side));
  std::vector<ElementSubset> princ;
  princ.reserve(n);
  for (Elem c = 0; c < n; ++c) princ.push_back(principal(r, c, side));

  for (Elem b = 0; b < n; ++b) {
    dl.poll("unit_lifting");
    for (Elem c = 0; c < n; ++c) {
      ++res.search_space;
      const ElementSubset& pc = princ[c];
      bool premise = false;
      for (Elem a = 0; a < n; ++a)
        if (pc.test(r.sub(detail::mul_side(r, side, a, b), r.one()))) {
          premise = true;
          break;
        }
      if (!premise) continue;
      bool lifts = false;
      for (Elem u : su)
        if (pc.test(r.sub(b, u))) {
          lifts = true;
          break;
        }
      if (!lifts) {
        res.holds = false;
        res.witness = {{"b", b}, {"c", c}};
        return detail::finish(r, res);
      }
    }
  }
  return res;
}

/// The family of principal one-sided ideals coincides with the family of
/// one-sided annihilators. Witness: the first generator whose ideal (or
/// annihilator) is unmatched, direction recorded in detail.
inline PropertyResult quasi_morphic(const FiniteRing& r, Side side,
                                    const Deadline& dl = {}) {
  PropertyResult res;
  res.property = "quasi_morphic";
  res.side = side;
  const std::size_t n = r.order();
  res.search_space = 2 * static_cast<std::uint64_t>(n);
  dl.poll("quasi_morphic");
  const std::vector<ElementSubset> pf = principal_family(r, side);
  const std::vector<ElementSubset> af = annihilator_family(r, side);
  if (pf == af) return res;

  auto in_family = [](const std::vector<ElementSubset>& fam,
                      const ElementSubset& s) {
    return std::binary_search(fam.begin(), fam.end(), s);
  };
  for (Elem a = 0; a < n; ++a)
    if (!in_family(af, principal(r, a, side))) {
      res.holds = false;
      res.witness = {{"a", a}};
      res.detail = "principal_ideal_matches_no_annihilator";
      return detail::finish(r, res);
    }
  for (Elem a = 0; a < n; ++a)
    if (!in_family(pf, annihilator(r, a, side))) {
      res.holds = false;
      res.witness = {{"a", a}};
      res.detail = "annihilator_matches_no_principal_ideal";
      return detail::finish(r, res);
    }
  throw std::logic_error("internal error: families differ but no witness");
}

/// Weaker one-directional inclusion: every principal one-sided ideal is
/// the annihilator of some element.
inline PropertyResult principal_are_annihilators(const FiniteRing& r,
                                                 Side side,
                                                 const Deadline& dl = {}) {
  PropertyResult res;
  res.property = "principal_are_annihilators";
  res.side = side;
  const std::size_t n = r.order();
  dl.poll("principal_are_annihilators");
  const std::vector<ElementSubset> af = annihilator_family(r, side);
  for (Elem a = 0; a < n; ++a) {
    ++res.search_space;
    if (!std::binary_search(af.begin(), af.end(), principal(r, a, side))) {
      res.holds = false;
      res.witness = {{"a", a}};
      res.detail = "principal_ideal_matches_no_annihilator";
      return detail::finish(r, res);
    }
  }
  return res;
}

/// Left: Ra = Rb forces a = ub for some two-sided unit u; right mirror.
inline PropertyResult uniquely_generated(const FiniteRing& r, Side side,
                                         const Deadline& dl = {}) {
  PropertyResult res;
  res.property = "uniquely_generated";
  res.side = side;
  const std::size_t n = r.order();
  const std::vector<Elem> u = detail::unit_list(r, UnitKind::two_sided);
  std::vector<ElementSubset> princ;
  princ.reserve(n);
  for (Elem a = 0; a < n; ++a) princ.push_back(principal(r, a, side));

  for (Elem a = 0; a < n; ++a) {
    dl.poll("uniquely_generated");
    for (Elem b = 0; b < n; ++b) {
      ++res.search_space;
      if (!(princ[a] == princ[b])) continue;
      bool found = false;
      for (Elem uu : u)
        if (detail::mul_side(r, side, uu, b) == a) {
          found = true;
          break;
        }
      if (!found) {
        res.holds = false;
        res.witness = {{"a", a}, {"b", b}};
        return detail::finish(r, res);
      }
    }
  }
  return res;
}

/// Unit transfer: given ab + c = 1 and a + cx a unit, returns the least y
/// with b + yc a unit. Exhaustion without a y means the transfer lemma
/// failed on this input; callers report that as a theorem discrepancy.
/// Precondition violations throw std::invalid_argument instead.
inline std::optional<Elem> vasershtein_transfer(const FiniteRing& r, Elem a,
                                                Elem b, Elem c, Elem x) {
  detail::require_index(r, a);
  detail::require_index(r, b);
  detail::require_index(r, c);
  detail::require_index(r, x);
  const ElementSubset u = units(r, UnitKind::two_sided);
  if (r.add(r.mul(a, b), c) != r.one())
    throw std::invalid_argument("vasershtein_transfer: ab + c != 1");
  if (!u.test(r.add(a, r.mul(c, x))))
    throw std::invalid_argument("vasershtein_transfer: a + cx is not a unit");
  for (Elem y = 0; y < r.order(); ++y)
    if (u.test(r.add(b, r.mul(y, c)))) return y;
  return std::nullopt;
}

/// Re-evaluates the defining formula of a failed property on its recorded
/// witness. True when the witness genuinely demonstrates the failure (or
/// when there is nothing to replay). Every failing PropertyResult is run
/// through this before being returned.
inline bool replay_witness(const FiniteRing& r, const PropertyResult& res) {
  if (res.holds) return true;
  const auto& w = res.witness;
  auto at = [&](std::size_t i) { return w[i].index; };

  if (res.property == "directly_finite") {
    if (w.size() != 2) return false;
    return r.mul(at(0), at(1)) == r.one() && r.mul(at(1), at(0)) != r.one();
  }
  if (res.property == "stable_range_one") {
    if (w.size() != 3) return false;
    const Elem a = at(0), x = at(1), b = at(2);
    if (r.add(r.mul(a, x), b) != r.one()) return false;
    const ElementSubset u = units(r, UnitKind::two_sided);
    for (Elem y = 0; y < r.order(); ++y)
      if (u.test(r.add(a, r.mul(b, y)))) return false;
    return true;
  }
  if (res.property == "unit_lifting") {
    if (w.size() != 2 || !res.side) return false;
    const Side side = *res.side;
    const Elem b = at(0), c = at(1);
    const ElementSubset pc = principal(r, c, side);
    bool premise = false;
    for (Elem a = 0; a < r.order(); ++a)
      if (pc.test(r.sub(detail::mul_side(r, side, a, b), r.one()))) {
        premise = true;
        break;
      }
    if (!premise) return false;
    for (Elem u : detail::unit_list(r, detail::side_unit_kind(side)))
      if (pc.test(r.sub(b, u))) return false;
    return true;
  }
  if (res.property == "quasi_morphic" ||
      res.property == "principal_are_annihilators") {
    if (w.size() != 1 || !res.side) return false;
    const Side side = *res.side;
    if (res.detail == "principal_ideal_matches_no_annihilator") {
      const ElementSubset p = principal(r, at(0), side);
      for (Elem b = 0; b < r.order(); ++b)
        if (annihilator(r, b, side) == p) return false;
      return true;
    }
    if (res.detail == "annihilator_matches_no_principal_ideal") {
      const ElementSubset an = annihilator(r, at(0), side);
      for (Elem b = 0; b < r.order(); ++b)
        if (principal(r, b, side) == an) return false;
      return true;
    }
    return false;
  }
  if (res.property == "uniquely_generated") {
    if (w.size() != 2 || !res.side) return false;
    const Side side = *res.side;
    const Elem a = at(0), b = at(1);
    if (!(principal(r, a, side) == principal(r, b, side))) return false;
    for (Elem u : detail::unit_list(r, UnitKind::two_sided))
      if (detail::mul_side(r, side, u, b) == a) return false;
    return true;
  }
  return false;
}

}  // namespace ringbench

#endif  // RINGBENCH_PROPERTIES_HPP
