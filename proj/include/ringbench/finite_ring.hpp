#ifndef RINGBENCH_FINITE_RING_HPP
#define RINGBENCH_FINITE_RING_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ringbench {

/// Element index into a ring's operation tables.
using Elem = std::uint16_t;

/// Hard ceiling on ring order; indices must fit in Elem.
inline constexpr std::size_t kMaxRepresentableOrder = 65535;

/// Error in ring construction or spec handling (bad input, cap exceeded,
/// failed table validation). Operation precondition violations use
/// std::invalid_argument instead.
class RingError : public std::runtime_error {
public:
  explicit RingError(const std::string& what) : std::runtime_error(what) {}
};

struct Violation {
  std::string axiom;
  std::vector<Elem> witness;
};

/// Outcome of checking the unital-ring axioms on a pair of tables.
/// ok holds exactly when violations is empty; each violated axiom is
/// reported once, with the first witness tuple in row-major scan order.
struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  void add(std::string axiom, std::vector<Elem> witness) {
    ok = false;
    violations.push_back({std::move(axiom), std::move(witness)});
  }
};

/// A finite unital ring as a pair of order x order operation tables over
/// element indices 0..order-1, with distinguished zero and one.
///
/// Immutable after construction and safe to share across threads. The
/// constructor checks only cheap structural facts (table shape, index
/// ranges, existence of additive inverses); the full axiom sweep is
/// validate_tables(), which callers run on untrusted tables first.
class FiniteRing {
public:
  FiniteRing(std::size_t order, std::vector<Elem> add, std::vector<Elem> mul,
             Elem zero, Elem one, std::string label)
      : n_(order), add_(std::move(add)), mul_(std::move(mul)), zero_(zero),
        one_(one), label_(std::move(label)) {
    if (n_ == 0 || n_ > kMaxRepresentableOrder)
      throw RingError("ring order must be in [1, 65535], got " +
                      std::to_string(order));
    if (add_.size() != n_ * n_ || mul_.size() != n_ * n_)
      throw RingError("operation tables must have order*order entries");
    for (Elem v : add_)
      if (v >= n_) throw RingError("add table entry out of range");
    for (Elem v : mul_)
      if (v >= n_) throw RingError("mul table entry out of range");
    if (zero_ >= n_ || one_ >= n_)
      throw RingError("zero/one index out of range");
    neg_.assign(n_, 0);
    for (std::size_t a = 0; a < n_; ++a) {
      bool found = false;
      for (std::size_t b = 0; b < n_; ++b)
        if (add_[a * n_ + b] == zero_) {
          neg_[a] = static_cast<Elem>(b);
          found = true;
          break;
        }
      if (!found)
        throw RingError("element " + std::to_string(a) +
                        " has no additive inverse");
    }
  }

  std::size_t order() const { return n_; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  const std::string& label() const { return label_; }

  Elem add(Elem a, Elem b) const { return add_[std::size_t(a) * n_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[std::size_t(a) * n_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }

  const std::vector<Elem>& add_table() const { return add_; }
  const std::vector<Elem>& mul_table() const { return mul_; }

  bool same_tables(const FiniteRing& other) const {
    return n_ == other.n_ && zero_ == other.zero_ && one_ == other.one_ &&
           add_ == other.add_ && mul_ == other.mul_;
  }

private:
  std::size_t n_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  Elem zero_;
  Elem one_;
  std::string label_;
};

/// Checks every unital-ring axiom on raw tables. Never throws: every
/// failure, including out-of-range entries, is reported as a violation.
/// Axioms whose evaluation would index out of range are skipped once an
/// entry-range violation is recorded.
inline ValidationReport validate_tables(const std::vector<Elem>& add,
                                        const std::vector<Elem>& mul,
                                        Elem zero, Elem one,
                                        std::size_t order) {
  ValidationReport rep;
  const std::size_t n = order;
  if (n == 0) {
    rep.add("order_positive", {});
    return rep;
  }
  if (add.size() != n * n) {
    rep.add("add_table_shape", {});
    return rep;
  }
  if (mul.size() != n * n) {
    rep.add("mul_table_shape", {});
    return rep;
  }
  if (zero >= n) rep.add("zero_index_range", {zero});
  if (one >= n) rep.add("one_index_range", {one});

  bool in_range = true;
  for (std::size_t i = 0; i < n && in_range; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (add[i * n + j] >= n) {
        rep.add("add_entry_range", {Elem(i), Elem(j)});
        in_range = false;
        break;
      }
  for (std::size_t i = 0; i < n && in_range; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (mul[i * n + j] >= n) {
        rep.add("mul_entry_range", {Elem(i), Elem(j)});
        in_range = false;
        break;
      }
  if (!rep.ok) return rep;

  auto A = [&](Elem a, Elem b) { return add[std::size_t(a) * n + b]; };
  auto M = [&](Elem a, Elem b) { return mul[std::size_t(a) * n + b]; };

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (A(a, b) != A(b, a)) {
        rep.add("add_commutativity", {a, b});
        goto comm_done;
      }
    }
comm_done:
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (A(A(a, b), c) != A(a, A(b, c))) {
          rep.add("add_associativity", {a, b, c});
          goto add_assoc_done;
        }
add_assoc_done:
  for (Elem a = 0; a < n; ++a)
    if (A(a, zero) != a || A(zero, a) != a) {
      rep.add("additive_identity", {a});
      break;
    }
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n; ++b)
      if (A(a, b) == zero) {
        found = true;
        break;
      }
    if (!found) {
      rep.add("additive_inverse", {a});
      break;
    }
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (M(M(a, b), c) != M(a, M(b, c))) {
          rep.add("mul_associativity", {a, b, c});
          goto mul_assoc_done;
        }
mul_assoc_done:
  for (Elem a = 0; a < n; ++a)
    if (M(one, a) != a || M(a, one) != a) {
      rep.add("multiplicative_identity", {a});
      break;
    }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (M(a, A(b, c)) != A(M(a, b), M(a, c))) {
          rep.add("left_distributivity", {a, b, c});
          goto left_dist_done;
        }
left_dist_done:
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (M(A(a, b), c) != A(M(a, c), M(b, c))) {
          rep.add("right_distributivity", {a, b, c});
          goto right_dist_done;
        }
right_dist_done:
  return rep;
}

inline ValidationReport validate(const FiniteRing& r) {
  return validate_tables(r.add_table(), r.mul_table(), r.zero(), r.one(),
                         r.order());
}

/// Same elements, addition, zero and one; multiplication reversed.
/// Involution: opposite(opposite(R)) reproduces R bit-exactly.
inline FiniteRing opposite(const FiniteRing& r) {
  const std::size_t n = r.order();
  std::vector<Elem> mul(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      mul[std::size_t(a) * n + b] = r.mul(b, a);
  std::string label = r.label();
  const std::string prefix = "op(";
  if (label.size() > 4 && label.compare(0, prefix.size(), prefix) == 0 &&
      label.back() == ')')
    label = label.substr(prefix.size(), label.size() - prefix.size() - 1);
  else
    label = "op(" + label + ")";
  return FiniteRing(n, r.add_table(), std::move(mul), r.zero(), r.one(),
                    std::move(label));
}

namespace detail {

// Backtracking with forced-image propagation. Branch indices try S-images
// in ascending order, so the first completed map is lexicographically
// least over all ring isomorphisms R -> S.
class IsoSearch {
public:
  IsoSearch(const FiniteRing& r, const FiniteRing& s)
      : r_(r), s_(s), n_(r.order()), img_(n_, kUnset), used_(n_, false) {}

  std::optional<std::vector<Elem>> run() {
    std::vector<Elem> trail;
    if (!assign(r_.zero(), s_.zero(), trail)) return std::nullopt;
    if (img_[r_.one()] == kUnset) {
      if (!assign(r_.one(), s_.one(), trail)) return std::nullopt;
    } else if (img_[r_.one()] != s_.one()) {
      return std::nullopt;
    }
    if (dfs(0)) {
      std::vector<Elem> out(n_);
      for (std::size_t i = 0; i < n_; ++i) out[i] = Elem(img_[i]);
      return out;
    }
    return std::nullopt;
  }

private:
  static constexpr int kUnset = -1;

  bool dfs(std::size_t from) {
    std::size_t i = from;
    while (i < n_ && img_[i] != kUnset) ++i;
    if (i == n_) return true;
    for (std::size_t v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      std::vector<Elem> trail;
      if (assign(Elem(i), Elem(v), trail)) {
        if (dfs(i + 1)) return true;
      }
      for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
        used_[img_[*it]] = false;
        img_[*it] = kUnset;
      }
    }
    return false;
  }

  // Sets img_[a] = v, then closes under both operations: any product or
  // sum of assigned elements has a forced image. Returns false on
  // conflict, leaving undo information in trail.
  bool assign(Elem a, Elem v, std::vector<Elem>& trail) {
    if (img_[a] != kUnset) return img_[a] == v;
    if (used_[v]) return false;
    img_[a] = v;
    used_[v] = true;
    trail.push_back(a);
    std::vector<Elem> queue{a};
    while (!queue.empty()) {
      Elem x = queue.back();
      queue.pop_back();
      for (std::size_t b = 0; b < n_; ++b) {
        if (img_[b] == kUnset) continue;
        Elem bb = Elem(b);
        Elem pairs[4][2] = {{x, bb}, {bb, x}, {x, bb}, {bb, x}};
        for (int k = 0; k < 4; ++k) {
          Elem p = pairs[k][0], q = pairs[k][1];
          bool additive = k < 2;
          Elem c = additive ? r_.add(p, q) : r_.mul(p, q);
          Elem w = additive ? s_.add(Elem(img_[p]), Elem(img_[q]))
                            : s_.mul(Elem(img_[p]), Elem(img_[q]));
          if (img_[c] != kUnset) {
            if (img_[c] != Elem(w)) return false;
          } else {
            if (used_[w]) return false;
            img_[c] = w;
            used_[w] = true;
            trail.push_back(c);
            queue.push_back(c);
          }
        }
      }
    }
    return true;
  }

  const FiniteRing& r_;
  const FiniteRing& s_;
  std::size_t n_;
  std::vector<int> img_;
  std::vector<bool> used_;
};

}  // namespace detail

/// Exhaustive search for a ring isomorphism R -> S. Returns the
/// lexicographically least index bijection f (f(0), f(1), ...) with
/// f(zero)=zero, f(one)=one and f respecting both tables, or nullopt.
inline std::optional<std::vector<Elem>> isomorphic(const FiniteRing& r,
                                                   const FiniteRing& s) {
  if (r.order() != s.order()) return std::nullopt;
  return detail::IsoSearch(r, s).run();
}

}  // namespace ringbench

#endif  // RINGBENCH_FINITE_RING_HPP
