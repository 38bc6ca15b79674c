#pragma once

#include <algorithm>
#include <deque>
#include <unordered_set>
#include <vector>

#include "nilmod/module.hpp"

namespace nilmod {

/// A + B for submodules (or any subgroups) given as element sets.
inline ElementSet sum(const FiniteModule& m, const ElementSet& a, const ElementSet& b) {
  if (a.subset_of(b)) return b;
  if (b.subset_of(a)) return a;
  ElementSet out(m.size());
  a.for_each([&](std::uint32_t x) {
    b.for_each([&](std::uint32_t y) { out.insert(m.add({x}, {y}).index); });
  });
  return out;
}

/// Smallest submodule containing `seed`: the sum of the cyclic submodules
/// of its elements.
inline ElementSet generate(const FiniteModule& m, const ElementSet& seed) {
  ElementSet out = m.zero_set();
  seed.for_each([&](std::uint32_t x) {
    if (!out.contains(x)) out = sum(m, out, m.cyclic({x}));
  });
  return out;
}

inline Submodule submodule_generated(const FiniteModule& m, const ElementSet& seed) {
  return {m, generate(m, seed)};
}

inline bool is_submodule(const FiniteModule& m, const ElementSet& s) {
  if (s.universe() != m.size() || !s.contains(m.zero().index)) return false;
  bool ok = true;
  s.for_each([&](std::uint32_t x) {
    if (!ok) return;
    if (!m.cyclic({x}).subset_of(s)) { ok = false; return; }
    s.for_each([&](std::uint32_t y) {
      if (ok && !s.contains(m.add({x}, {y}).index)) ok = false;
    });
  });
  return ok;
}

/// S*m for every m, deduplicated, in canonical order.
inline std::vector<ElementSet> distinct_cyclics(const FiniteModule& m) {
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> out;
  for (auto x : m.elements())
    if (seen.insert(m.cyclic(x)).second) out.push_back(m.cyclic(x));
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) { return canonical_less(a, b); });
  return out;
}

namespace detail {
inline std::vector<ElementSet> enumerate_lattice(const FiniteModule& m, std::size_t cap) {
  const auto cyclics = distinct_cyclics(m);
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> out;
  std::deque<std::size_t> queue;
  auto push = [&](ElementSet s) {
    if (!seen.insert(s).second) return;
    if (out.size() >= cap)
      throw CapacityError("lattice_cap", cap, "submodule lattice has more than " + std::to_string(cap) + " members");
    out.push_back(std::move(s));
    queue.push_back(out.size() - 1);
  };
  push(m.zero_set());
  while (!queue.empty()) {
    const ElementSet u = out[queue.front()];
    queue.pop_front();
    for (const auto& c : cyclics)
      if (!c.subset_of(u)) push(sum(m, u, c));
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) { return canonical_less(a, b); });
  return out;
}
}  // namespace detail

/// Every submodule, in canonical order (by size, then element list). Built
/// by closing {0} under adding cyclic submodules; memoized per module.
inline std::vector<Submodule> all_submodules(const FiniteModule& m,
                                             const Limits& limits = default_limits()) {
  auto sets = m.memo<std::vector<ElementSet>>("lattice", [&] {
    return detail::enumerate_lattice(m, limits.lattice_cap);
  });
  if (sets->size() > limits.lattice_cap)
    throw CapacityError("lattice_cap", limits.lattice_cap,
                        "submodule lattice has " + std::to_string(sets->size()) + " members");
  std::vector<Submodule> out;
  out.reserve(sets->size());
  for (const auto& s : *sets) out.push_back({m, s});
  return out;
}

/// Minimal nonzero submodules: cyclic S*m all of whose nonzero elements
/// generate it again.
inline std::vector<Submodule> minimal_submodules(const FiniteModule& m) {
  std::vector<Submodule> out;
  for (const auto& c : distinct_cyclics(m)) {
    if (c.size() < 2) continue;
    bool minimal = true;
    c.for_each([&](std::uint32_t x) {
      if (minimal && x != m.zero().index && !(m.cyclic({x}) == c)) minimal = false;
    });
    if (minimal) out.push_back({m, c});
  }
  return out;
}

inline Submodule socle(const FiniteModule& m) {
  ElementSet s = m.zero_set();
  for (const auto& n : minimal_submodules(m)) s = sum(m, s, n.elements);
  return {m, s};
}

/// Exactly two submodules: M != 0 and every nonzero element generates M.
inline bool is_simple(const FiniteModule& m) {
  if (m.size() < 2) return false;
  for (auto x : m.elements())
    if (x != m.zero() && !m.cyclic(x).is_full()) return false;
  return true;
}

inline bool is_semisimple_module(const FiniteModule& m) { return socle(m).elements.is_full(); }

inline Ideal annihilator(const FiniteModule& m) {
  return {m.ring(), module_annihilator(m), Sidedness::two_sided};
}

inline Ideal annihilator_elem(const FiniteModule& m, ModElem x) {
  ElementSet out(m.ring().size());
  for (auto a : m.ring().elements())
    if (m.act(a, x) == m.zero()) out.insert(a.index);
  return {m.ring(), std::move(out), Sidedness::left};
}

/// ann_S(X) for a subset X of M.
inline ElementSet annihilator_of(const FiniteModule& m, const ElementSet& x) {
  ElementSet out(m.ring().size());
  for (auto a : m.ring().elements()) {
    bool kills = true;
    x.for_each([&](std::uint32_t i) {
      if (kills && m.act(a, {i}) != m.zero()) kills = false;
    });
    if (kills) out.insert(a.index);
  }
  return out;
}

/// (0 :_M a) = {m : a m = 0}.
inline ElementSet kernel_of(const FiniteModule& m, RingElem a) {
  ElementSet out(m.size());
  for (auto x : m.elements())
    if (m.act(a, x) == m.zero()) out.insert(x.index);
  return out;
}

/// a M = {a m : m in M}.
inline ElementSet image_of(const FiniteModule& m, RingElem a) {
  ElementSet out(m.size());
  for (auto x : m.elements()) out.insert(m.act(a, x).index);
  return out;
}

}  // namespace nilmod
