#ifndef RINGBENCH_THEOREMS_HPP
#define RINGBENCH_THEOREMS_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringbench/enumerate.hpp"
#include "ringbench/finite_ring.hpp"
#include "ringbench/properties.hpp"
#include "ringbench/ring_spec.hpp"
#include "ringbench/subsets.hpp"

namespace ringbench {

enum class CheckStatus { consistent, discrepancy, skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::consistent: return "consistent";
    case CheckStatus::discrepancy: return "discrepancy";
    default: return "skipped";
  }
}

/// Outcome of one cross-check between independently computed facts.
struct CheckVerdict {
  std::string name;
  CheckStatus status = CheckStatus::consistent;
  std::string detail;
  std::vector<WitnessPart> witness;
  std::uint64_t search_space = 0;
  double seconds = 0.0;  // wall clock; omitted from machine reports
};

namespace detail {

inline std::string yn(bool b) { return b ? "yes" : "no"; }

inline std::string prop_tag(const PropertyResult& p) {
  std::string s = p.property;
  if (p.side.has_value()) s += "(" + std::string(to_string(*p.side)) + ")";
  return s + "=" + yn(p.holds);
}

}  // namespace detail

/// Consistency of the unit-transfer step: whenever a*b + c == 1 and
/// a + c*x is a unit for some x, some y makes b + y*c a unit. Covers the
/// full tuple domain of size order^4; tuples violating the premises hold
/// vacuously. The y search is independent of x, so each (a, b, c) is
/// decided once.
inline CheckVerdict check_vasershtein(const FiniteRing& r,
                                      const Deadline& dl = {}) {
  CheckVerdict v;
  v.name = "vasershtein_transfer";
  const std::size_t n = r.order();
  const std::uint64_t n64 = n;
  v.search_space = n64 * n64 * n64 * n64;
  ElementSubset u = units(r, UnitKind::two_sided);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      dl.poll("check_vasershtein");
      const Elem c = r.sub(r.one(), r.mul(a, b));
      std::optional<Elem> first_x;
      for (Elem x = 0; x < n; ++x)
        if (u.test(r.add(a, r.mul(c, x)))) {
          first_x = x;
          break;
        }
      if (!first_x.has_value()) continue;
      auto y = vasershtein_transfer(r, a, b, c, *first_x);
      if (!y.has_value()) {
        v.status = CheckStatus::discrepancy;
        v.witness = {{"a", a}, {"b", b}, {"c", c}, {"x", *first_x}};
        v.detail =
            "a*b + c == 1 and a + c*x is a unit, but no y makes b + y*c a "
            "unit";
        return v;
      }
    }
  }
  v.detail = "unit transfer succeeded for every premise-satisfying tuple";
  return v;
}

/// Composers build a verdict from already-computed property results, so
/// the comparison logic is testable with synthetic inputs.

inline CheckVerdict lifting_df_verdict(const PropertyResult& lift_left,
                                       const PropertyResult& lift_right,
                                       const PropertyResult& df) {
  CheckVerdict v;
  v.name = "lifting_implies_directly_finite";
  v.search_space =
      lift_left.search_space + lift_right.search_space + df.search_space;
  const bool ok = (!lift_left.holds || df.holds) &&
                  (!lift_right.holds || df.holds);
  v.detail = detail::prop_tag(lift_left) + " " +
             detail::prop_tag(lift_right) + " " + detail::prop_tag(df);
  if (!ok) {
    v.status = CheckStatus::discrepancy;
    v.witness = df.witness;
  }
  return v;
}

inline CheckVerdict sr1_lifting_verdict(const PropertyResult& sr1,
                                        const PropertyResult& lift_left,
                                        const PropertyResult& lift_right) {
  CheckVerdict v;
  v.name = "sr1_lifting_equivalence";
  v.search_space =
      sr1.search_space + lift_left.search_space + lift_right.search_space;
  const bool ok =
      sr1.holds == lift_left.holds && sr1.holds == lift_right.holds;
  v.detail = detail::prop_tag(sr1) + " " + detail::prop_tag(lift_left) +
             " " + detail::prop_tag(lift_right);
  if (!ok) {
    v.status = CheckStatus::discrepancy;
    for (const PropertyResult* p : {&sr1, &lift_left, &lift_right})
      if (!p->holds) {
        v.witness = p->witness;
        break;
      }
  }
  return v;
}

/// When every left principal ideal is a left annihilator, unique
/// generation on the left must agree with stable range one. Without
/// that hypothesis nothing is required and the verdict records why.
inline CheckVerdict ug_sr1_verdict(const PropertyResult& pa_left,
                                   const PropertyResult& ug_left,
                                   const PropertyResult& sr1) {
  CheckVerdict v;
  v.name = "ug_sr1_equivalence";
  v.search_space =
      pa_left.search_space + ug_left.search_space + sr1.search_space;
  if (!pa_left.holds) {
    v.detail = "hypothesis fails: " + detail::prop_tag(pa_left) +
               "; equivalence not required";
    v.witness = pa_left.witness;
    return v;
  }
  v.detail = detail::prop_tag(pa_left) + " " + detail::prop_tag(ug_left) +
             " " + detail::prop_tag(sr1);
  if (ug_left.holds != sr1.holds) {
    v.status = CheckStatus::discrepancy;
    v.witness = ug_left.holds ? sr1.witness : ug_left.witness;
  }
  return v;
}

inline CheckVerdict ug_implications_verdict(const PropertyResult& sr1,
                                            const PropertyResult& ug_left,
                                            const PropertyResult& ug_right,
                                            const PropertyResult& df) {
  CheckVerdict v;
  v.name = "ug_implications";
  v.search_space = sr1.search_space + ug_left.search_space +
                   ug_right.search_space + df.search_space;
  v.detail = detail::prop_tag(sr1) + " " + detail::prop_tag(ug_left) + " " +
             detail::prop_tag(ug_right) + " " + detail::prop_tag(df);
  if (sr1.holds && !(ug_left.holds && ug_right.holds)) {
    v.status = CheckStatus::discrepancy;
    v.witness = ug_left.holds ? ug_right.witness : ug_left.witness;
    return v;
  }
  if ((ug_left.holds || ug_right.holds) && !df.holds) {
    v.status = CheckStatus::discrepancy;
    v.witness = df.witness;
  }
  return v;
}

inline CheckVerdict check_lifting_implies_directly_finite(
    const FiniteRing& r, const Deadline& dl = {}) {
  return lifting_df_verdict(unit_lifting(r, Side::left, dl),
                            unit_lifting(r, Side::right, dl),
                            directly_finite(r, dl));
}

inline CheckVerdict check_sr1_lifting_equivalence(const FiniteRing& r,
                                                  const Deadline& dl = {}) {
  return sr1_lifting_verdict(stable_range_one(r, dl),
                             unit_lifting(r, Side::left, dl),
                             unit_lifting(r, Side::right, dl));
}

inline CheckVerdict check_ug_sr1_equivalence(const FiniteRing& r,
                                             const Deadline& dl = {}) {
  return ug_sr1_verdict(principal_are_annihilators(r, Side::left, dl),
                        uniquely_generated(r, Side::left, dl),
                        stable_range_one(r, dl));
}

inline CheckVerdict check_ug_implications(const FiniteRing& r,
                                          const Deadline& dl = {}) {
  return ug_implications_verdict(stable_range_one(r, dl),
                                 uniquely_generated(r, Side::left, dl),
                                 uniquely_generated(r, Side::right, dl),
                                 directly_finite(r, dl));
}

struct CatalogEntry {
  std::string label;
  RingSpec spec;
};

using Catalog = std::vector<CatalogEntry>;

/// Appends every ring of order 1..max_order as table specs, in canonical
/// order per enumeration.
inline void append_enumerated(Catalog& cat, int max_order,
                              const EnumerateOptions& opts = {}) {
  for (int n = 1; n <= max_order; ++n)
    for (const FiniteRing& r : enumerate_unital_rings(n, opts))
      cat.push_back({r.label(), table_spec_of(r)});
}

/// Everything computed for one catalog entry. A nonempty error means
/// construction or validation failed and nothing else was attempted.
struct RingReport {
  std::string label;
  RingSpec spec;
  std::string error;
  std::size_t order = 0;
  std::vector<PropertyResult> properties;
  std::string property_note;  // nonempty when truncated by the budget
  std::vector<CheckVerdict> checks;
  double seconds = 0.0;  // wall clock; omitted from machine reports
};

struct SuiteOptions {
  double budget_seconds = 30.0;  // per ring; <= 0 disables the deadline
  ConstructOptions construct;
};

/// Fixed property order used across reports: direct finiteness, stable
/// range one, then the sided properties left before right.
inline std::vector<PropertyResult> property_vector(const FiniteRing& r,
                                                   const Deadline& dl = {}) {
  std::vector<PropertyResult> out;
  out.reserve(10);
  out.push_back(directly_finite(r, dl));
  out.push_back(stable_range_one(r, dl));
  for (Side s : {Side::left, Side::right}) out.push_back(unit_lifting(r, s, dl));
  for (Side s : {Side::left, Side::right}) out.push_back(quasi_morphic(r, s, dl));
  for (Side s : {Side::left, Side::right})
    out.push_back(principal_are_annihilators(r, s, dl));
  for (Side s : {Side::left, Side::right})
    out.push_back(uniquely_generated(r, s, dl));
  return out;
}

inline CheckVerdict skipped_verdict(std::string name, std::string why) {
  CheckVerdict v;
  v.name = std::move(name);
  v.status = CheckStatus::skipped;
  v.detail = std::move(why);
  return v;
}

/// Runs the full property vector and every cross-check on each catalog
/// entry. Construction errors and budget overruns are reported in place;
/// later entries still run. Report order follows the catalog.
inline std::vector<RingReport> run_suite(const Catalog& cat,
                                         const SuiteOptions& opts = {}) {
  std::vector<RingReport> out;
  out.reserve(cat.size());
  for (const CatalogEntry& entry : cat) {
    RingReport rep;
    rep.label = entry.label;
    rep.spec = entry.spec;
    const auto t0 = std::chrono::steady_clock::now();
    std::optional<FiniteRing> ring;
    try {
      ring = construct(entry.spec, opts.construct);
    } catch (const RingError& e) {
      rep.error = e.what();
    }
    if (ring.has_value()) {
      ValidationReport vr = validate(*ring);
      if (!vr.ok)
        rep.error = "ring axioms fail: " + vr.violations.front().axiom;
    }
    if (!rep.error.empty()) {
      out.push_back(std::move(rep));
      continue;
    }
    rep.order = ring->order();
    Deadline dl = opts.budget_seconds > 0
                      ? Deadline::after(opts.budget_seconds)
                      : Deadline{};

    bool complete = true;
    try {
      rep.properties = property_vector(*ring, dl);
    } catch (const BudgetExceeded& e) {
      rep.property_note = std::string("time budget exceeded: ") + e.what();
      complete = false;
    }

    try {
      rep.checks.push_back(check_vasershtein(*ring, dl));
    } catch (const BudgetExceeded&) {
      rep.checks.push_back(
          skipped_verdict("vasershtein_transfer", "time budget exceeded"));
    }
    if (complete) {
      const auto& p = rep.properties;
      // indices follow property_vector: 0 df, 1 sr1, 2/3 lifting,
      // 4/5 quasi-morphic, 6/7 principal-annihilator, 8/9 unique gen
      rep.checks.push_back(lifting_df_verdict(p[2], p[3], p[0]));
      rep.checks.push_back(sr1_lifting_verdict(p[1], p[2], p[3]));
      rep.checks.push_back(ug_sr1_verdict(p[6], p[8], p[1]));
      rep.checks.push_back(ug_implications_verdict(p[1], p[8], p[9], p[0]));
    } else {
      for (const char* name :
           {"lifting_implies_directly_finite", "sr1_lifting_equivalence",
            "ug_sr1_equivalence", "ug_implications"})
        rep.checks.push_back(skipped_verdict(
            name, "property vector incomplete under time budget"));
    }
    rep.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace ringbench

#endif  // RINGBENCH_THEOREMS_HPP
