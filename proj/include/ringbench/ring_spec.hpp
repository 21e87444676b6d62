#ifndef RINGBENCH_RING_SPEC_HPP
#define RINGBENCH_RING_SPEC_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ringbench/finite_ring.hpp"

namespace ringbench {

struct ConstructOptions {
  /// Rings larger than this are refused; exhaustive property sweeps are
  /// O(n^3)..O(n^4), so the cap keeps runs at desk scale.
  std::size_t max_order = 4096;
};

/// Constructor expression for a finite ring. Interchange format (one JSON
/// document per ring):
///   {"kind":"zn","n":6}
///   {"kind":"product","factors":[...,...]}
///   {"kind":"matrix","base":...,"k":2}
///   {"kind":"triangular","base":...,"k":2}
///   {"kind":"opposite","base":...}
///   {"kind":"table","order":..,"add":[[..]],"mul":[[..]],"zero":..,"one":..,"label":".."}
/// Tables are row-major integer matrices.
struct RingSpec {
  enum class Kind { zn, product, matrix, triangular, opposite, table };

  Kind kind = Kind::zn;
  int n = 0;                       // zn modulus
  int k = 0;                       // matrix/triangular dimension
  std::vector<RingSpec> children;  // product factors, or the single base

  // table literal
  std::size_t order = 0;
  std::vector<Elem> add;  // row-major
  std::vector<Elem> mul;  // row-major
  Elem zero = 0;
  Elem one = 0;
  std::string label;

  static RingSpec parse(const nlohmann::json& j);
  static RingSpec parse_text(const std::string& text);
  nlohmann::ordered_json to_json() const;
};

namespace detail {

[[noreturn]] inline void spec_error(const std::string& field,
                                    const std::string& what) {
  throw RingError("spec field \"" + field + "\": " + what);
}

inline int require_int(const nlohmann::json& j, const std::string& field,
                       long long lo, long long hi) {
  if (!j.contains(field)) spec_error(field, "missing");
  const auto& v = j.at(field);
  if (!v.is_number_integer()) spec_error(field, "expected an integer");
  long long x = v.get<long long>();
  if (x < lo || x > hi)
    spec_error(field, "out of range [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
  return static_cast<int>(x);
}

inline void reject_unknown_keys(const nlohmann::json& j,
                                std::initializer_list<const char*> allowed) {
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const char* key : allowed)
      if (item.key() == key) {
        ok = true;
        break;
      }
    if (!ok) spec_error(item.key(), "unknown key");
  }
}

inline std::vector<Elem> parse_table(const nlohmann::json& j,
                                     const std::string& field,
                                     std::size_t order) {
  if (!j.contains(field)) spec_error(field, "missing");
  const auto& rows = j.at(field);
  if (!rows.is_array() || rows.size() != order)
    spec_error(field, "expected " + std::to_string(order) + " rows");
  std::vector<Elem> flat;
  flat.reserve(order * order);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != order)
      spec_error(field, "expected " + std::to_string(order) +
                            " entries per row");
    for (const auto& v : row) {
      if (!v.is_number_integer() || v.get<long long>() < 0 ||
          v.get<long long>() > static_cast<long long>(kMaxRepresentableOrder))
        spec_error(field, "entries must be integers in [0, 65535]");
      flat.push_back(static_cast<Elem>(v.get<long long>()));
    }
  }
  return flat;
}

}  // namespace detail

inline RingSpec RingSpec::parse(const nlohmann::json& j) {
  using detail::spec_error;
  if (!j.is_object()) spec_error("(document)", "expected a JSON object");
  if (!j.contains("kind")) spec_error("kind", "missing");
  if (!j.at("kind").is_string()) spec_error("kind", "expected a string");
  const std::string kind = j.at("kind").get<std::string>();

  RingSpec s;
  if (kind == "zn") {
    detail::reject_unknown_keys(j, {"kind", "n"});
    s.kind = Kind::zn;
    s.n = detail::require_int(j, "n", 1, static_cast<long long>(kMaxRepresentableOrder));
  } else if (kind == "product") {
    detail::reject_unknown_keys(j, {"kind", "factors"});
    s.kind = Kind::product;
    if (!j.contains("factors") || !j.at("factors").is_array())
      spec_error("factors", "expected an array of specs");
    for (const auto& f : j.at("factors")) s.children.push_back(parse(f));
    if (s.children.size() < 2)
      spec_error("factors", "product requires at least 2 factors");
  } else if (kind == "matrix" || kind == "triangular") {
    detail::reject_unknown_keys(j, {"kind", "base", "k"});
    s.kind = kind == "matrix" ? Kind::matrix : Kind::triangular;
    if (!j.contains("base")) spec_error("base", "missing");
    s.children.push_back(parse(j.at("base")));
    s.k = detail::require_int(j, "k", 1, 16);
  } else if (kind == "opposite") {
    detail::reject_unknown_keys(j, {"kind", "base"});
    s.kind = Kind::opposite;
    if (!j.contains("base")) spec_error("base", "missing");
    s.children.push_back(parse(j.at("base")));
  } else if (kind == "table") {
    detail::reject_unknown_keys(
        j, {"kind", "order", "add", "mul", "zero", "one", "label"});
    s.kind = Kind::table;
    s.order = static_cast<std::size_t>(detail::require_int(
        j, "order", 1, static_cast<long long>(kMaxRepresentableOrder)));
    s.add = detail::parse_table(j, "add", s.order);
    s.mul = detail::parse_table(j, "mul", s.order);
    s.zero = static_cast<Elem>(
        detail::require_int(j, "zero", 0, static_cast<long long>(s.order) - 1));
    s.one = static_cast<Elem>(
        detail::require_int(j, "one", 0, static_cast<long long>(s.order) - 1));
    if (j.contains("label")) {
      if (!j.at("label").is_string()) spec_error("label", "expected a string");
      s.label = j.at("label").get<std::string>();
    }
  } else {
    spec_error("kind", "unknown kind \"" + kind + "\"");
  }
  return s;
}

inline RingSpec RingSpec::parse_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw RingError("spec document is not valid JSON");
  return parse(j);
}

inline nlohmann::ordered_json RingSpec::to_json() const {
  nlohmann::ordered_json j;
  switch (kind) {
    case Kind::zn:
      j["kind"] = "zn";
      j["n"] = n;
      break;
    case Kind::product: {
      j["kind"] = "product";
      auto arr = nlohmann::ordered_json::array();
      for (const auto& c : children) arr.push_back(c.to_json());
      j["factors"] = std::move(arr);
      break;
    }
    case Kind::matrix:
    case Kind::triangular:
      j["kind"] = kind == Kind::matrix ? "matrix" : "triangular";
      j["base"] = children.front().to_json();
      j["k"] = k;
      break;
    case Kind::opposite:
      j["kind"] = "opposite";
      j["base"] = children.front().to_json();
      break;
    case Kind::table: {
      j["kind"] = "table";
      j["order"] = order;
      auto rows = [&](const std::vector<Elem>& t) {
        auto m = nlohmann::ordered_json::array();
        for (std::size_t r = 0; r < order; ++r) {
          auto row = nlohmann::ordered_json::array();
          for (std::size_t c = 0; c < order; ++c)
            row.push_back(t[r * order + c]);
          m.push_back(std::move(row));
        }
        return m;
      };
      j["add"] = rows(add);
      j["mul"] = rows(mul);
      j["zero"] = zero;
      j["one"] = one;
      j["label"] = label;
      break;
    }
  }
  return j;
}

namespace detail {

inline std::string wrap_if_spaced(const std::string& s) {
  return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

inline FiniteRing make_zn(int n) {
  const std::size_t m = static_cast<std::size_t>(n);
  std::vector<Elem> add(m * m), mul(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      add[a * m + b] = static_cast<Elem>((a + b) % m);
      mul[a * m + b] = static_cast<Elem>((a * b) % m);
    }
  return FiniteRing(m, std::move(add), std::move(mul), 0,
                    m == 1 ? 0 : 1, "Z/" + std::to_string(n));
}

// Index convention: left factor most significant (mixed radix).
inline FiniteRing make_product(const std::vector<FiniteRing>& fs,
                               std::size_t max_order) {
  std::size_t n = 1;
  for (const auto& f : fs) {
    n *= f.order();
    if (n > max_order)
      throw RingError("product order exceeds cap " +
                      std::to_string(max_order));
  }
  const std::size_t g = fs.size();
  std::vector<std::size_t> radix(g);
  for (std::size_t i = 0; i < g; ++i) radix[i] = fs[i].order();

  auto decompose = [&](std::size_t idx, std::vector<Elem>& out) {
    for (std::size_t i = g; i-- > 0;) {
      out[i] = static_cast<Elem>(idx % radix[i]);
      idx /= radix[i];
    }
  };
  auto compose = [&](const std::vector<Elem>& xs) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < g; ++i) idx = idx * radix[i] + xs[i];
    return static_cast<Elem>(idx);
  };

  std::vector<std::vector<Elem>> coords(n, std::vector<Elem>(g));
  for (std::size_t i = 0; i < n; ++i) decompose(i, coords[i]);

  std::vector<Elem> add(n * n), mul(n * n), tmp(g);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < g; ++i)
        tmp[i] = fs[i].add(coords[a][i], coords[b][i]);
      add[a * n + b] = compose(tmp);
      for (std::size_t i = 0; i < g; ++i)
        tmp[i] = fs[i].mul(coords[a][i], coords[b][i]);
      mul[a * n + b] = compose(tmp);
    }
  std::vector<Elem> ones(g);
  for (std::size_t i = 0; i < g; ++i) ones[i] = fs[i].one();
  std::string label = wrap_if_spaced(fs[0].label());
  for (std::size_t i = 1; i < g; ++i)
    label += " x " + wrap_if_spaced(fs[i].label());
  return FiniteRing(n, std::move(add), std::move(mul), 0, compose(ones),
                    label);
}

// Shared by matrix and triangular constructions: `cells` lists the stored
// (row, col) positions in the bit-exact index order (row-major; the first
// listed cell is the most significant base-m digit).
inline FiniteRing make_matrix_like(
    const FiniteRing& base, int k,
    const std::vector<std::pair<int, int>>& cells, bool triangular,
    std::size_t max_order, const std::string& label) {
  const std::size_t m = base.order();
  const std::size_t e = cells.size();
  std::size_t n = 1;
  for (std::size_t i = 0; i < e; ++i) {
    n *= m;
    if (n > max_order)
      throw RingError(label + " order exceeds cap " +
                      std::to_string(max_order));
  }

  std::vector<int> pos(static_cast<std::size_t>(k) * k, -1);
  for (std::size_t i = 0; i < e; ++i)
    pos[std::size_t(cells[i].first) * k + cells[i].second] =
        static_cast<int>(i);

  std::vector<std::vector<Elem>> digits(n, std::vector<Elem>(e));
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t x = idx;
    for (std::size_t i = e; i-- > 0;) {
      digits[idx][i] = static_cast<Elem>(x % m);
      x /= m;
    }
  }
  auto compose = [&](const std::vector<Elem>& ds) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < e; ++i) idx = idx * m + ds[i];
    return static_cast<Elem>(idx);
  };
  auto at = [&](const std::vector<Elem>& ds, int r, int c) -> Elem {
    int p = pos[std::size_t(r) * k + c];
    return p < 0 ? base.zero() : ds[std::size_t(p)];
  };

  std::vector<Elem> add(n * n), mul(n * n), tmp(e);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < e; ++i)
        tmp[i] = base.add(digits[a][i], digits[b][i]);
      add[a * n + b] = compose(tmp);
      for (std::size_t i = 0; i < e; ++i) {
        auto [r, c] = cells[i];
        Elem acc = base.zero();
        const int lo = triangular ? r : 0;
        const int hi = triangular ? c : k - 1;
        for (int t = lo; t <= hi; ++t)
          acc = base.add(acc,
                         base.mul(at(digits[a], r, t), at(digits[b], t, c)));
        tmp[i] = acc;
      }
      mul[a * n + b] = compose(tmp);
    }

  std::vector<Elem> ones(e, base.zero());
  for (std::size_t i = 0; i < e; ++i)
    if (cells[i].first == cells[i].second) ones[i] = base.one();
  return FiniteRing(n, std::move(add), std::move(mul), 0, compose(ones),
                    label);
}

inline FiniteRing make_matrix(const FiniteRing& base, int k,
                              std::size_t max_order) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) cells.emplace_back(r, c);
  return make_matrix_like(base, k, cells, false, max_order,
                          "M" + std::to_string(k) + "(" + base.label() + ")");
}

inline FiniteRing make_triangular(const FiniteRing& base, int k,
                                  std::size_t max_order) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < k; ++r)
    for (int c = r; c < k; ++c) cells.emplace_back(r, c);
  return make_matrix_like(base, k, cells, true, max_order,
                          "T" + std::to_string(k) + "(" + base.label() + ")");
}

}  // namespace detail

/// Builds the ring a spec describes. Deterministic; construction follows
/// the fixed indexing conventions, so equal specs yield bit-identical
/// tables. Throws RingError on malformed specs, cap overruns, or table
/// literals that fail validation.
inline FiniteRing construct(const RingSpec& spec,
                            const ConstructOptions& opts = {}) {
  const std::size_t cap =
      std::min(opts.max_order, kMaxRepresentableOrder);
  switch (spec.kind) {
    case RingSpec::Kind::zn:
      if (static_cast<std::size_t>(spec.n) > cap)
        throw RingError("zn order exceeds cap " + std::to_string(cap));
      return detail::make_zn(spec.n);
    case RingSpec::Kind::product: {
      std::vector<FiniteRing> fs;
      fs.reserve(spec.children.size());
      for (const auto& c : spec.children) fs.push_back(construct(c, opts));
      return detail::make_product(fs, cap);
    }
    case RingSpec::Kind::matrix:
      return detail::make_matrix(construct(spec.children.front(), opts),
                                 spec.k, cap);
    case RingSpec::Kind::triangular:
      return detail::make_triangular(construct(spec.children.front(), opts),
                                     spec.k, cap);
    case RingSpec::Kind::opposite:
      return opposite(construct(spec.children.front(), opts));
    case RingSpec::Kind::table: {
      if (spec.order > cap)
        throw RingError("table order exceeds cap " + std::to_string(cap));
      ValidationReport rep = validate_tables(spec.add, spec.mul, spec.zero,
                                             spec.one, spec.order);
      if (!rep.ok) {
        std::string msg = "table literal fails ring axioms:";
        for (const auto& v : rep.violations) msg += " " + v.axiom;
        throw RingError(msg);
      }
      return FiniteRing(spec.order, spec.add, spec.mul, spec.zero, spec.one,
                        spec.label.empty()
                            ? "table/" + std::to_string(spec.order)
                            : spec.label);
    }
  }
  throw RingError("unreachable spec kind");
}

/// Label a spec would construct under, without building the tables.
inline std::string label_of(const RingSpec& s) {
  switch (s.kind) {
    case RingSpec::Kind::zn:
      return "Z/" + std::to_string(s.n);
    case RingSpec::Kind::product: {
      std::string l = detail::wrap_if_spaced(label_of(s.children.front()));
      for (std::size_t i = 1; i < s.children.size(); ++i)
        l += " x " + detail::wrap_if_spaced(label_of(s.children[i]));
      return l;
    }
    case RingSpec::Kind::matrix:
      return "M" + std::to_string(s.k) + "(" + label_of(s.children.front()) +
             ")";
    case RingSpec::Kind::triangular:
      return "T" + std::to_string(s.k) + "(" + label_of(s.children.front()) +
             ")";
    case RingSpec::Kind::opposite:
      return "op(" + label_of(s.children.front()) + ")";
    case RingSpec::Kind::table:
      return s.label.empty() ? "table/" + std::to_string(s.order) : s.label;
  }
  return "?";
}

/// Table-literal spec reproducing the ring bit-exactly.
inline RingSpec table_spec_of(const FiniteRing& r) {
  RingSpec s;
  s.kind = RingSpec::Kind::table;
  s.order = r.order();
  s.add = r.add_table();
  s.mul = r.mul_table();
  s.zero = r.zero();
  s.one = r.one();
  s.label = r.label();
  return s;
}

}  // namespace ringbench

#endif  // RINGBENCH_RING_SPEC_HPP
