#ifndef RINGBENCH_ENUMERATE_HPP
#define RINGBENCH_ENUMERATE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ringbench/finite_ring.hpp"
#include "ringbench/properties.hpp"

namespace ringbench {

/// An abelian group in invariant-factor form: Z/d1 x ... x Z/dg with
/// d(i+1) | d(i). Index convention matches ring products: left factor
/// most significant.
struct AbelianGroup {
  std::vector<int> invariant_factors;
  std::vector<Elem> add;  // row-major order x order
  std::size_t order = 0;
  std::string label;
};

namespace detail {

inline void chains_rec(int remaining, int prev, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
  if (remaining == 1) {
    out.push_back(cur);
    return;
  }
  for (int d = std::min(prev, remaining); d >= 2; --d) {
    if (remaining % d != 0 || prev % d != 0) continue;
    cur.push_back(d);
    chains_rec(remaining / d, d, cur, out);
    cur.pop_back();
  }
}

inline AbelianGroup make_abelian(const std::vector<int>& factors) {
  AbelianGroup g;
  g.invariant_factors = factors;
  std::size_t n = 1;
  for (int d : factors) n *= static_cast<std::size_t>(d);
  g.order = n;
  const std::size_t gl = factors.size();

  auto decompose = [&](std::size_t idx, std::vector<int>& out) {
    for (std::size_t i = gl; i-- > 0;) {
      out[i] = static_cast<int>(idx % std::size_t(factors[i]));
      idx /= std::size_t(factors[i]);
    }
  };
  std::vector<std::vector<int>> coords(n, std::vector<int>(gl));
  for (std::size_t i = 0; i < n; ++i) decompose(i, coords[i]);

  g.add.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < gl; ++i)
        idx = idx * std::size_t(factors[i]) +
              std::size_t((coords[a][i] + coords[b][i]) % factors[i]);
      g.add[a * n + b] = static_cast<Elem>(idx);
    }

  g.label = "C" + std::to_string(factors.empty() ? 1 : factors[0]);
  for (std::size_t i = 1; i < gl; ++i)
    g.label += " x C" + std::to_string(factors[i]);
  return g;
}

}  // namespace detail

/// One addition table per isomorphism class of abelian groups of order n,
/// in descending lexicographic order of invariant-factor chains (the
/// cyclic group first).
inline std::vector<AbelianGroup> abelian_groups(int n) {
  if (n < 1 || n > 16)
    throw std::invalid_argument("abelian_groups: order must be in [1, 16]");
  if (n == 1) return {detail::make_abelian({1})};
  std::vector<std::vector<int>> chains;
  std::vector<int> cur;
  detail::chains_rec(n, n, cur, chains);
  std::vector<AbelianGroup> out;
  out.reserve(chains.size());
  for (const auto& ch : chains) out.push_back(detail::make_abelian(ch));
  return out;
}

namespace detail {

// Serialization schedule: pairs (i, j) with max(i, j) = k are emitted at
// stage k, so the positions indexed by the first k+1 relabeled elements
// form a contiguous prefix. Stage k occupies slots [k^2, (k+1)^2).
inline const std::vector<std::pair<Elem, Elem>>& square_schedule(
    std::size_t n) {
  static thread_local std::size_t cached_n = 0;
  static thread_local std::vector<std::pair<Elem, Elem>> sched;
  if (cached_n != n) {
    sched.clear();
    for (Elem k = 0; k < n; ++k) {
      for (Elem j = 0; j < k; ++j) {
        sched.emplace_back(k, j);
        sched.emplace_back(j, k);
      }
      sched.emplace_back(k, k);
    }
    cached_n = n;
  }
  return sched;
}

// Byte layout per stage: the stage's add entries, then its mul entries,
// so every byte of stage k is indexed by the first k+1 relabeled
// elements and the search can compare both tables while extending.
inline std::string serialize_relabeled(const FiniteRing& r,
                                       const std::vector<Elem>& new_to_old,
                                       const std::vector<int>& old_to_new) {
  const std::size_t n = r.order();
  const auto& sched = square_schedule(n);
  std::string out;
  out.reserve(2 * sched.size());
  for (std::size_t k = 0; k < n; ++k)
    for (bool mul : {false, true})
      for (std::size_t p = k * k; p < (k + 1) * (k + 1); ++p) {
        const auto [i, j] = sched[p];
        const Elem v = mul ? r.mul(new_to_old[i], new_to_old[j])
                           : r.add(new_to_old[i], new_to_old[j]);
        out.push_back(static_cast<char>(old_to_new[v]));
      }
  return out;
}

// Branch-and-bound lexicographic minimization over bijections fixing
// zero -> 0 and one -> 1. Used above order 8; small orders brute-force
// all permutations instead.
class CanonicalSearch {
public:
  explicit CanonicalSearch(const FiniteRing& r)
      : r_(r), n_(r.order()), new_to_old_(n_, 0), old_to_new_(n_, -1) {
    const auto& sched = square_schedule(n_);
    positions_.reserve(2 * sched.size());
    // must match the byte layout of serialize_relabeled
    for (std::size_t k = 0; k < n_; ++k)
      for (bool mul : {false, true})
        for (std::size_t p = k * k; p < (k + 1) * (k + 1); ++p)
          positions_.push_back({mul, sched[p].first, sched[p].second});
  }

  std::pair<std::string, std::vector<Elem>> run() {
    new_to_old_[0] = r_.zero();
    old_to_new_[r_.zero()] = 0;
    std::size_t start = 1;
    if (n_ > 1) {
      new_to_old_[1] = r_.one();
      old_to_new_[r_.one()] = 1;
      start = 2;
    }
    dfs(start);
    return {best_, best_perm_};
  }

private:
  struct Pos {
    bool mul;
    Elem i, j;
  };

  // Compares the determined prefix of the current partial relabeling
  // against best_. Returns true when the branch provably cannot beat it.
  // A value not yet assigned an index will receive one >= assigned, so a
  // best_ byte below that bound already decides the comparison.
  bool prunable(std::size_t assigned) const {
    if (best_.empty()) return false;
    for (std::size_t p = 0; p < positions_.size(); ++p) {
      const Pos& q = positions_[p];
      if (q.i >= assigned || q.j >= assigned) return false;
      const Elem a = new_to_old_[q.i], b = new_to_old_[q.j];
      const Elem v = q.mul ? r_.mul(a, b) : r_.add(a, b);
      const int byte = old_to_new_[v];
      const int bb = static_cast<unsigned char>(best_[p]);
      if (byte < 0) return bb < static_cast<int>(assigned);
      if (byte != bb) return byte > bb;
    }
    return false;
  }

  void dfs(std::size_t k) {
    if (k == n_) {
      std::string cand = serialize_relabeled(r_, new_to_old_, old_to_new_);
      if (best_.empty() || cand < best_) {
        best_ = std::move(cand);
        best_perm_ = new_to_old_;
      }
      return;
    }
    for (std::size_t o = 0; o < n_; ++o) {
      if (old_to_new_[o] != -1) continue;
      new_to_old_[k] = static_cast<Elem>(o);
      old_to_new_[o] = static_cast<int>(k);
      if (!prunable(k + 1)) dfs(k + 1);
      old_to_new_[o] = -1;
    }
  }

  const FiniteRing& r_;
  std::size_t n_;
  std::vector<Elem> new_to_old_;
  std::vector<int> old_to_new_;
  std::vector<Pos> positions_;
  std::string best_;
  std::vector<Elem> best_perm_;
};

inline std::pair<std::string, std::vector<Elem>> canonical_search(
    const FiniteRing& r) {
  const std::size_t n = r.order();
  if (n > 16)
    throw std::invalid_argument("canonical_form: order must be <= 16");
  if (n <= 8) {
    std::vector<Elem> free_elems;
    for (Elem o = 0; o < n; ++o)
      if (o != r.zero() && o != r.one()) free_elems.push_back(o);
    std::sort(free_elems.begin(), free_elems.end());
    std::vector<Elem> new_to_old(n);
    std::vector<int> old_to_new(n);
    std::string best;
    std::vector<Elem> best_perm;
    do {
      new_to_old[0] = r.zero();
      if (n > 1) new_to_old[1] = r.one();
      for (std::size_t i = 0; i < free_elems.size(); ++i)
        new_to_old[(n > 1 ? 2 : 1) + i] = free_elems[i];
      for (std::size_t i = 0; i < n; ++i)
        old_to_new[new_to_old[i]] = static_cast<int>(i);
      std::string cand = serialize_relabeled(r, new_to_old, old_to_new);
      if (best.empty() || cand < best) {
        best = std::move(cand);
        best_perm = new_to_old;
      }
    } while (std::next_permutation(free_elems.begin(), free_elems.end()));
    return {best, best_perm};
  }
  return CanonicalSearch(r).run();
}

}  // namespace detail

/// Relabeling-invariant byte string: the lexicographically least
/// serialization of (add, mul) over all element bijections fixing zero
/// and one. Equal byte strings exactly characterize isomorphic rings.
inline std::string canonical_form(const FiniteRing& r) {
  return detail::canonical_search(r).first;
}

/// The ring relabeled by its canonical bijection: zero at index 0, one at
/// index 1, tables in canonical order. Bit-identical for isomorphic
/// inputs.
inline FiniteRing canonical_relabel(const FiniteRing& r,
                                    const std::string& label) {
  auto [key, new_to_old] = detail::canonical_search(r);
  const std::size_t n = r.order();
  std::vector<int> old_to_new(n);
  for (std::size_t i = 0; i < n; ++i) old_to_new[new_to_old[i]] = int(i);
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      add[i * n + j] = static_cast<Elem>(
          old_to_new[r.add(new_to_old[i], new_to_old[j])]);
      mul[i * n + j] = static_cast<Elem>(
          old_to_new[r.mul(new_to_old[i], new_to_old[j])]);
    }
  return FiniteRing(n, std::move(add), std::move(mul), 0, n > 1 ? 1 : 0,
                    label);
}

/// FNV-1a over the canonical form; used for emitted file names.
inline std::string canonical_hash_hex(const std::string& key) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[std::size_t(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

struct EnumerateOptions {
  /// Orders above this are refused up front. Raising it is supported up
  /// to 16 (the canonical-form limit); expect to need a deadline there.
  std::size_t max_order = 8;
  Deadline deadline;
};

namespace detail {

// Ring-structure search over one abelian group. The identity is pinned
// to the first basis vector: the identity of any unital structure has
// maximal additive order, so some additive automorphism moves it there,
// and canonical-form dedup absorbs the relabeling.
class StructureSearch {
public:
  StructureSearch(const AbelianGroup& g, const Deadline& dl)
      : g_(g), dl_(dl), gens_(g.invariant_factors.size()) {
    const auto& d = g_.invariant_factors;
    radix_ = d;
    n_ = g_.order;
    // e_i coordinate vectors
    for (std::size_t i = 0; i < gens_; ++i) {
      std::vector<int> c(gens_, 0);
      if (d[i] > 1) c[i] = 1;
      basis_.push_back(c);
    }
    products_.assign(gens_ * gens_, std::nullopt);
    for (std::size_t j = 0; j < gens_; ++j) {
      set_product(0, j, basis_[j]);
      set_product(j, 0, basis_[j]);
    }
    for (std::size_t i = 1; i < gens_; ++i)
      for (std::size_t j = 1; j < gens_; ++j)
        free_.emplace_back(i, j);
    // candidate values for c(i,j): additive order dividing gcd(d_i, d_j)
    for (auto [i, j] : free_) {
      const int cap = std::gcd(radix_[i], radix_[j]);
      std::vector<std::vector<int>> cands;
      for (std::size_t e = 0; e < n_; ++e) {
        std::vector<int> c = coords_of(e);
        bool ok = true;
        for (std::size_t t = 0; t < gens_; ++t)
          if ((cap * c[t]) % radix_[t] != 0) {
            ok = false;
            break;
          }
        if (ok) cands.push_back(std::move(c));
      }
      candidates_.push_back(std::move(cands));
    }
  }

  void run(std::vector<FiniteRing>& out) { dfs(0, out); }

private:
  std::vector<int> coords_of(std::size_t idx) const {
    std::vector<int> c(gens_);
    for (std::size_t i = gens_; i-- > 0;) {
      c[i] = static_cast<int>(idx % std::size_t(radix_[i]));
      idx /= std::size_t(radix_[i]);
    }
    return c;
  }

  std::size_t index_of(const std::vector<int>& c) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < gens_; ++i)
      idx = idx * std::size_t(radix_[i]) + std::size_t(c[i]);
    return idx;
  }

  void set_product(std::size_t i, std::size_t j, const std::vector<int>& v) {
    products_[i * gens_ + j] = v;
  }
  const std::optional<std::vector<int>>& product(std::size_t i,
                                                 std::size_t j) const {
    return products_[i * gens_ + j];
  }

  void accumulate(std::vector<int>& acc, int scalar,
                  const std::vector<int>& v) const {
    for (std::size_t t = 0; t < gens_; ++t)
      acc[t] = (acc[t] + scalar * v[t]) % radix_[t];
  }

  // Bilinear extension from generator products; nullopt while a needed
  // product is unassigned (unless its scalar coefficient kills it).
  std::optional<std::vector<int>> try_mul(const std::vector<int>& x,
                                          const std::vector<int>& y) const {
    std::vector<int> acc(gens_, 0);
    for (std::size_t s = 0; s < gens_; ++s) {
      if (x[s] == 0) continue;
      for (std::size_t t = 0; t < gens_; ++t) {
        if (y[t] == 0) continue;
        const int scalar = x[s] * y[t];
        const auto& p = product(s, t);
        if (!p.has_value()) {
          if (scalar % std::gcd(radix_[s], radix_[t]) == 0) continue;
          return std::nullopt;
        }
        accumulate(acc, scalar, *p);
      }
    }
    return acc;
  }

  // Associativity on generator triples; index 0 is the identity and is
  // automatically consistent.
  bool consistent() const {
    for (std::size_t p = 1; p < gens_; ++p)
      for (std::size_t q = 1; q < gens_; ++q) {
        const auto& pq = product(p, q);
        if (!pq.has_value()) continue;
        for (std::size_t r = 1; r < gens_; ++r) {
          const auto& qr = product(q, r);
          if (!qr.has_value()) continue;
          auto lhs = try_mul(*pq, basis_[r]);
          auto rhs = try_mul(basis_[p], *qr);
          if (lhs && rhs && !(*lhs == *rhs)) return false;
        }
      }
    return true;
  }

  void dfs(std::size_t pos, std::vector<FiniteRing>& out) {
    dl_.poll("enumerate_unital_rings");
    if (pos == free_.size()) {
      out.push_back(build());
      return;
    }
    auto [i, j] = free_[pos];
    for (const auto& cand : candidates_[pos]) {
      set_product(i, j, cand);
      if (consistent()) dfs(pos + 1, out);
      products_[i * gens_ + j] = std::nullopt;
    }
  }

  FiniteRing build() const {
    std::vector<std::vector<int>> coords(n_);
    for (std::size_t e = 0; e < n_; ++e) coords[e] = coords_of(e);
    std::vector<Elem> mul(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        auto v = try_mul(coords[a], coords[b]);
        mul[a * n_ + b] = static_cast<Elem>(index_of(*v));
      }
    FiniteRing r(n_, g_.add, std::move(mul), 0,
                 static_cast<Elem>(index_of(basis_[0])), "candidate");
    ValidationReport rep = validate(r);
    if (!rep.ok)
      throw std::logic_error(
          "internal error: structure search emitted an invalid ring");
    return r;
  }

  const AbelianGroup& g_;
  const Deadline& dl_;
  std::size_t gens_;
  std::size_t n_ = 0;
  std::vector<int> radix_;
  std::vector<std::vector<int>> basis_;
  std::vector<std::optional<std::vector<int>>> products_;
  std::vector<std::pair<std::size_t, std::size_t>> free_;
  std::vector<std::vector<std::vector<int>>> candidates_;
};

}  // namespace detail

/// Every unital ring of order n, exactly once up to isomorphism, in
/// canonical relabeling (zero=0, one=1), sorted by canonical form.
/// Labels are "enum-o<n>-<index>".
inline std::vector<FiniteRing> enumerate_unital_rings(
    int n, const EnumerateOptions& opts = {}) {
  const std::size_t cap = std::min<std::size_t>(opts.max_order, 16);
  if (n < 1 || static_cast<std::size_t>(n) > cap)
    throw std::invalid_argument(
        "enumerate_unital_rings: order must be in [1, " +
        std::to_string(cap) + "]");

  std::map<std::string, FiniteRing> classes;
  for (const AbelianGroup& g : abelian_groups(n)) {
    std::vector<FiniteRing> found;
    detail::StructureSearch(g, opts.deadline).run(found);
    for (const FiniteRing& r : found) {
      std::string key = canonical_form(r);
      if (!classes.count(key)) classes.emplace(key, canonical_relabel(r, ""));
    }
  }
  std::vector<FiniteRing> out;
  out.reserve(classes.size());
  std::size_t idx = 0;
  for (auto& [key, ring] : classes) {
    out.push_back(FiniteRing(ring.order(), ring.add_table(),
                             ring.mul_table(), ring.zero(), ring.one(),
                             "enum-o" + std::to_string(n) + "-" +
                                 std::to_string(idx)));
    ++idx;
  }
  return out;
}

}  // namespace ringbench

#endif  // RINGBENCH_ENUMERATE_HPP
