#ifndef RINGBENCH_REPORT_HPP
#define RINGBENCH_REPORT_HPP

#include <json.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "ringbench/enumerate.hpp"
#include "ringbench/finite_ring.hpp"
#include "ringbench/properties.hpp"
#include "ringbench/ring_spec.hpp"
#include "ringbench/theorems.hpp"
#include "ringbench/zint.hpp"

namespace ringbench {

using ordered_json = nlohmann::ordered_json;

/// Machine reports carry only integers and strings and never wall-clock
/// data, so two runs over the same input are byte-identical. The text
/// renderers include timings and are for humans.

inline ordered_json json_of_witness(const std::vector<WitnessPart>& w) {
  ordered_json j = ordered_json::object();
  for (const auto& part : w) j[part.role] = part.index;
  return j;
}

inline ordered_json json_of(const PropertyResult& p) {
  ordered_json j;
  j["property"] = p.property;
  if (p.side.has_value()) j["side"] = to_string(*p.side);
  j["holds"] = p.holds;
  if (!p.witness.empty()) j["witness"] = json_of_witness(p.witness);
  if (!p.detail.empty()) j["detail"] = p.detail;
  j["search_space"] = p.search_space;
  return j;
}

inline ordered_json json_of(const CheckVerdict& v) {
  ordered_json j;
  j["check"] = v.name;
  j["status"] = to_string(v.status);
  if (!v.witness.empty()) j["witness"] = json_of_witness(v.witness);
  if (!v.detail.empty()) j["detail"] = v.detail;
  j["search_space"] = v.search_space;
  return j;
}

inline ordered_json json_of(const ValidationReport& r) {
  ordered_json j;
  j["ok"] = r.ok;
  ordered_json arr = ordered_json::array();
  for (const auto& v : r.violations) {
    ordered_json e;
    e["axiom"] = v.axiom;
    e["witness"] = v.witness;  // element indices in axiom argument order
    arr.push_back(std::move(e));
  }
  j["violations"] = std::move(arr);
  return j;
}

inline ordered_json json_of(const RingReport& r) {
  ordered_json j;
  j["label"] = r.label;
  j["spec"] = r.spec.to_json();
  if (!r.error.empty()) {
    j["error"] = r.error;
    return j;
  }
  j["order"] = r.order;
  ordered_json props = ordered_json::array();
  for (const auto& p : r.properties) props.push_back(json_of(p));
  j["properties"] = std::move(props);
  if (!r.property_note.empty()) j["property_note"] = r.property_note;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) checks.push_back(json_of(c));
  j["checks"] = std::move(checks);
  return j;
}

inline ordered_json json_of(const ZWitness& w) {
  ordered_json j;
  ordered_json parts = ordered_json::object();
  for (const auto& [role, value] : w.parts) parts[role] = value.str();
  j["parts"] = std::move(parts);
  ordered_json trace = ordered_json::array();
  for (const auto& f : w.trace) {
    ordered_json e;
    e["divisor"] = f.divisor.str();
    e["dividend"] = f.dividend.str();
    e["holds"] = f.holds;
    trace.push_back(std::move(e));
  }
  j["trace"] = std::move(trace);
  return j;
}

inline ordered_json json_of(const ZDemoReport& r) {
  ordered_json j;
  j["ring"] = "Z";
  j["bound"] = r.bound;
  ordered_json entries = ordered_json::array();
  for (const auto& e : r.entries) {
    ordered_json je;
    je["property"] = e.property;
    if (!e.side.empty()) je["side"] = e.side;
    je["holds"] = e.holds;
    je["checked"] = e.checked;
    if (e.witness.has_value()) je["witness"] = json_of(*e.witness);
    if (!e.detail.empty()) je["detail"] = e.detail;
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  return j;
}

inline ordered_json json_of_enumerated(const FiniteRing& r) {
  ordered_json j;
  j["label"] = r.label();
  j["order"] = r.order();
  j["canonical_hash"] = canonical_hash_hex(canonical_form(r));
  j["spec"] = table_spec_of(r).to_json();
  return j;
}

namespace detail {

inline std::string witness_text(const std::vector<WitnessPart>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += w[i].role + "=" + std::to_string(w[i].index);
  }
  return s + ")";
}

inline std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

}  // namespace detail

inline std::string text_of(const PropertyResult& p) {
  std::string s = "  " + p.property;
  if (p.side.has_value()) s += std::string(" ") + to_string(*p.side);
  s += ": ";
  s += p.holds ? "yes" : "no";
  if (!p.witness.empty()) s += " witness " + detail::witness_text(p.witness);
  if (!p.detail.empty()) s += " (" + p.detail + ")";
  s += " [searched " + std::to_string(p.search_space) + "]";
  return s + "\n";
}

inline std::string text_of(const CheckVerdict& v) {
  std::string s = "  " + v.name + ": " + to_string(v.status);
  if (!v.witness.empty()) s += " witness " + detail::witness_text(v.witness);
  if (!v.detail.empty()) s += " (" + v.detail + ")";
  s += " [searched " + std::to_string(v.search_space) + ", " +
       detail::seconds_text(v.seconds) + "]";
  return s + "\n";
}

inline std::string text_of(const ValidationReport& r, const std::string& label) {
  std::string s = label + ": " + (r.ok ? "valid ring" : "NOT a ring") + "\n";
  for (const auto& v : r.violations) {
    s += "  violated " + v.axiom + " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i)
      s += (i ? ", " : "") + std::to_string(v.witness[i]);
    s += ")\n";
  }
  return s;
}

inline std::string text_of(const RingReport& r) {
  std::string s = "ring " + r.label + " ";
  if (!r.error.empty()) return s + "error: " + r.error + "\n";
  s += "(order " + std::to_string(r.order) + ")\n";
  s += " properties:\n";
  for (const auto& p : r.properties) s += " " + text_of(p);
  if (!r.property_note.empty()) s += "  note: " + r.property_note + "\n";
  s += " checks:\n";
  for (const auto& c : r.checks) s += " " + text_of(c);
  s += " elapsed: " + detail::seconds_text(r.seconds) + "\n";
  return s;
}

inline std::string text_of(const ZDemoReport& r) {
  std::string s = "ring Z, sweep bound " + std::to_string(r.bound) + "\n";
  for (const auto& e : r.entries) {
    s += "  " + e.property;
    if (!e.side.empty()) s += " " + e.side;
    s += ": ";
    s += e.holds ? "yes" : "no";
    s += " [checked " + std::to_string(e.checked) + "]";
    if (e.witness.has_value()) {
      s += " witness (";
      bool first = true;
      for (const auto& [role, value] : e.witness->parts) {
        if (!first) s += ", ";
        first = false;
        s += role + "=" + value.str();
      }
      s += ")";
      for (const auto& f : e.witness->trace) s += " [" + f.text() + "]";
    }
    if (!e.detail.empty()) s += "\n    " + e.detail;
    s += "\n";
  }
  return s;
}

}  // namespace ringbench

#endif  // RINGBENCH_REPORT_HPP
