#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <vector>

#include "nilmod/lattice.hpp"

namespace nilmod {

/// a^k m = 0 with k minimal for this a, and a S m != 0.
struct NilpotencyWitness {
  ModElem element;
  RingElem nilpotentiser;
  std::uint32_t degree = 0;
  friend bool operator==(const NilpotencyWitness&, const NilpotencyWitness&) = default;
};

/// Result of the elementwise test. Zero is nilpotent by definition and
/// carries no witness.
struct NilpotencyVerdict {
  bool nilpotent = false;
  bool by_definition = false;
  std::optional<NilpotencyWitness> witness;
  explicit operator bool() const { return nilpotent; }
};

inline constexpr std::uint32_t unreachable = std::numeric_limits<std::uint32_t>::max();

namespace detail {

/// depth[m] = least j >= 0 with a^j m in `target`, or `unreachable`. The
/// target must be closed under a (a submodule is). Each orbit is walked to
/// its first repeat or resolved node, so the cost is linear in |M|.
inline std::vector<std::uint32_t> orbit_depths(const FiniteModule& m, RingElem a,
                                               const ElementSet& target) {
  const std::size_t n = m.size();
  constexpr std::uint32_t unknown = unreachable - 1;
  std::vector<std::uint32_t> depth(n, unknown);
  std::vector<std::uint8_t> on_path(n, 0);
  std::vector<std::uint32_t> path;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (depth[start] != unknown) continue;
    path.clear();
    std::uint32_t x = start;
    std::uint32_t base;
    while (true) {
      if (target.contains(x)) { base = 0; depth[x] = 0; break; }
      if (depth[x] != unknown) { base = depth[x]; break; }
      if (on_path[x]) { base = unreachable; break; }
      on_path[x] = 1;
      path.push_back(x);
      x = m.act(a, {x}).index;
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      if (base != unreachable) ++base;
      depth[*it] = base;
      on_path[*it] = 0;
    }
  }
  return depth;
}

struct NilScan {
  std::vector<std::optional<NilpotencyWitness>> witness;  // canonical, per element
  std::vector<std::uint32_t> min_degree;                  // over all nilpotentisers
};

inline NilScan nil_scan(const FiniteModule& m) {
  const std::size_t n = m.size();
  NilScan out;
  out.witness.assign(n, std::nullopt);
  out.min_degree.assign(n, unreachable);
  const auto zero = m.zero_set();
  for (auto a : m.ring().elements()) {
    auto depth = orbit_depths(m, a, zero);
    auto kernel = kernel_of(m, a);
    for (auto x : m.elements()) {
      if (x == m.zero() || depth[x.index] == unreachable) continue;
      if (m.cyclic(x).subset_of(kernel)) continue;  // a S m = 0
      if (!out.witness[x.index]) out.witness[x.index] = NilpotencyWitness{x, a, depth[x.index]};
      out.min_degree[x.index] = std::min(out.min_degree[x.index], depth[x.index]);
    }
  }
  return out;
}

inline const NilScan& scan(const FiniteModule& m) {
  return *m.memo<NilScan>("nil_scan", [&] { return nil_scan(m); });
}

}  // namespace detail

/// Scans every a in S for a^k m = 0 with a S m != 0 and returns the witness
/// with the smallest (a-index, k).
inline NilpotencyVerdict is_nilpotent_element(const FiniteModule& m, ModElem x) {
  if (x == m.zero()) return {true, true, std::nullopt};
  const auto& w = detail::scan(m).witness[x.index];
  return {w.has_value(), false, w};
}

/// N(M), including zero.
inline ElementSet nilpotent_set(const FiniteModule& m) {
  const auto& s = detail::scan(m);
  ElementSet out = m.zero_set();
  for (auto x : m.elements())
    if (s.witness[x.index]) out.insert(x.index);
  return out;
}

/// R(M): non-nilpotent elements together with zero.
inline ElementSet reduced_part(const FiniteModule& m) {
  auto out = nilpotent_set(m).complement();
  out.insert(m.zero().index);
  return out;
}

struct NilReport {
  ElementSet nilpotent_set;
  std::vector<NilpotencyWitness> witnesses;  ///< one per nonzero nilpotent element, ascending
  bool is_nil = false;
  std::optional<std::uint32_t> nilpotent_degree;
  ElementSet reduced_part;
  bool reduced_part_is_submodule = false;
  friend bool operator==(const NilReport&, const NilReport&) = default;
};

inline bool is_nil(const FiniteModule& m) { return nilpotent_set(m).is_full(); }

/// For finite modules nil implies nilpotent: once a^k m = 0 it stays 0 for
/// larger powers, so the uniform degree is the max of per-element minima.
inline std::optional<std::uint32_t> is_nilpotent_module(const FiniteModule& m) {
  if (!is_nil(m)) return std::nullopt;
  const auto& s = detail::scan(m);
  std::uint32_t k = 1;
  for (auto x : m.elements())
    if (x != m.zero()) k = std::max(k, s.min_degree[x.index]);
  return k;
}

inline NilReport nil_report(const FiniteModule& m) {
  NilReport r;
  r.nilpotent_set = nilpotent_set(m);
  for (const auto& w : detail::scan(m).witness)
    if (w) r.witnesses.push_back(*w);
  r.is_nil = r.nilpotent_set.is_full();
  r.nilpotent_degree = is_nilpotent_module(m);
  r.reduced_part = reduced_part(m);
  r.reduced_part_is_submodule = is_submodule(m, r.reduced_part);
  return r;
}

/// a^2 m = 0 implies a S m = 0.
inline bool is_reduced(const FiniteModule& m) {
  for (auto a : m.ring().elements()) {
    auto a2 = m.ring().mul(a, a);
    auto kernel = kernel_of(m, a);
    for (auto x : m.elements())
      if (m.act(a2, x) == m.zero() && !m.cyclic(x).subset_of(kernel)) return false;
  }
  return true;
}

/// a^k m = 0 for some k implies a m = 0.
inline bool is_rigid(const FiniteModule& m) {
  const auto zero = m.zero_set();
  for (auto a : m.ring().elements()) {
    auto depth = detail::orbit_depths(m, a, zero);
    for (auto x : m.elements())
      if (depth[x.index] != unreachable && depth[x.index] > 1) return false;
  }
  return true;
}

/// Whether a(bm) = b(am) throughout, i.e. the image ring is commutative.
inline bool acts_commutatively(const FiniteModule& m) {
  return *m.memo<bool>("acts_commutatively", [&] {
    const FiniteRing& s = m.ring();
    if (is_commutative(s)) return true;
    for (auto a : s.elements())
      for (auto b : s.elements()) {
        if (b.index <= a.index) continue;
        for (auto x : m.elements())
          if (m.act(a, m.act(b, x)) != m.act(b, m.act(a, x))) return false;
      }
    return true;
  });
}

/// r M = r^2 M for every r (the image chain stabilizes at once). Defined
/// for commutative acting rings only.
inline bool is_co_reduced(const FiniteModule& m) {
  if (!acts_commutatively(m))
    throw UnsupportedPredicate("is_co_reduced: the acting ring does not act commutatively");
  for (auto r : m.ring().elements())
    if (!(image_of(m, r) == image_of(m, m.ring().mul(r, r)))) return false;
  return true;
}

/// E_M(N) = {r m : r^k m in N for some k >= 1}.
inline ElementSet envelope(const FiniteModule& m, const ElementSet& n) {
  ElementSet out(m.size());
  for (auto r : m.ring().elements()) {
    auto depth = detail::orbit_depths(m, r, n);
    for (auto x : m.elements())
      if (depth[x.index] != unreachable) out.insert(m.act(r, x).index);
  }
  return out;
}

inline ElementSet envelope(const FiniteModule& m, const Submodule& n) { return envelope(m, n.elements); }

struct EnvelopeWitness {
  RingElem r;
  ModElem m;
  std::uint32_t k = 0;
  friend bool operator==(const EnvelopeWitness&, const EnvelopeWitness&) = default;
};

/// Smallest (r, m) with r m = target and r^k m in N, with k minimal.
inline std::optional<EnvelopeWitness> envelope_witness(const FiniteModule& m, const ElementSet& n,
                                                       ModElem target) {
  for (auto r : m.ring().elements()) {
    auto depth = detail::orbit_depths(m, r, n);
    for (auto x : m.elements())
      if (depth[x.index] != unreachable && m.act(r, x) == target)
        return EnvelopeWitness{r, x, std::max<std::uint32_t>(1, depth[x.index])};
  }
  return std::nullopt;
}

inline ElementSet envelope_zero(const FiniteModule& m) { return envelope(m, m.zero_set()); }

/// <E_M(0)>.
inline Submodule envelope_zero_span(const FiniteModule& m) {
  return {m, generate(m, envelope_zero(m))};
}

struct AnnihilatorSumBound {
  ElementSet bound;  ///< sum of (0 :_M a_i^{k_i}) over canonical witnesses
  bool inclusion = false;
  bool equality = false;
};

inline AnnihilatorSumBound annihilator_sum_bound(const FiniteModule& m) {
  const FiniteRing& s = m.ring();
  std::vector<std::uint32_t> powers;
  for (const auto& w : nil_report(m).witnesses)
    powers.push_back(s.pow(w.nilpotentiser, w.degree).index);
  std::sort(powers.begin(), powers.end());
  powers.erase(std::unique(powers.begin(), powers.end()), powers.end());
  ElementSet bound = m.zero_set();
  for (auto p : powers) bound = sum(m, bound, kernel_of(m, {p}));
  const auto nil = nilpotent_set(m);
  return {bound, nil.subset_of(bound), nil == bound};
}

/// (0 :_M r) = (0 :_M r^k) for every k, checked along the ascending chain
/// until it stabilizes.
inline bool kernel_stabilization(const FiniteModule& m, RingElem r) {
  const FiniteRing& s = m.ring();
  const auto first = kernel_of(m, r);
  auto prev = first;
  RingElem power = r;
  for (std::size_t k = 2; k <= m.size() + 1; ++k) {
    power = s.mul(power, r);
    auto next = kernel_of(m, power);
    if (!(next == first)) return false;
    if (next == prev) return true;
    prev = std::move(next);
  }
  return true;
}

}  // namespace nilmod
