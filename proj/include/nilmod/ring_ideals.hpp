#pragma once

#include <vector>

#include "nilmod/lattice.hpp"

namespace nilmod {

namespace detail {
inline FiniteModule regular_for_ideals(const FiniteRing& r, const Limits& limits) {
  Limits l = limits;
  l.module_cap = std::max(l.module_cap, r.size());
  return module_regular(r, l);
}

inline bool right_closed(const FiniteRing& r, const ElementSet& s) {
  bool ok = true;
  s.for_each([&](std::uint32_t x) {
    if (!ok) return;
    for (auto t : r.elements())
      if (!s.contains(r.mul({x}, t).index)) { ok = false; return; }
  });
  return ok;
}
}  // namespace detail

/// Left ideals as the submodules of the regular module.
inline std::vector<Ideal> left_ideals(const FiniteRing& r, const Limits& limits = default_limits()) {
  auto reg = detail::regular_for_ideals(r, limits);
  std::vector<Ideal> out;
  for (auto& s : all_submodules(reg, limits)) out.push_back({r, std::move(s.elements), Sidedness::left});
  return out;
}

inline std::vector<Ideal> two_sided_ideals(const FiniteRing& r, const Limits& limits = default_limits()) {
  std::vector<Ideal> out;
  for (auto& i : left_ideals(r, limits))
    if (detail::right_closed(r, i.elements)) out.push_back({r, std::move(i.elements), Sidedness::two_sided});
  return out;
}

inline bool is_left_ideal(const FiniteRing& r, const ElementSet& s) {
  if (s.universe() != r.size() || !s.contains(r.zero().index)) return false;
  bool ok = true;
  s.for_each([&](std::uint32_t x) {
    if (!ok) return;
    for (auto t : r.elements())
      if (!s.contains(r.mul(t, {x}).index)) { ok = false; return; }
    s.for_each([&](std::uint32_t y) {
      if (ok && !s.contains(r.add({x}, {y}).index)) ok = false;
    });
  });
  return ok;
}

inline bool is_two_sided_ideal(const FiniteRing& r, const ElementSet& s) {
  return is_left_ideal(r, s) && detail::right_closed(r, s);
}

/// J(R) = {x : 1 - r x is a unit for every r}.
inline Ideal jacobson_radical(const FiniteRing& r) {
  const auto units = ring_units(r);
  ElementSet j(r.size());
  for (auto x : r.elements()) {
    bool in = true;
    for (auto t : r.elements())
      if (!units.contains(r.sub(r.one(), r.mul(t, x)).index)) { in = false; break; }
    if (in) j.insert(x.index);
  }
  return {r, std::move(j), Sidedness::two_sided};
}

inline bool is_semisimple_ring(const FiniteRing& r) { return jacobson_radical(r).size() == 1; }

inline bool is_reduced_ring(const FiniteRing& r) {
  for (auto a : r.elements())
    if (a != r.zero() && r.mul(a, a) == r.zero()) return false;
  return true;
}

/// All nilpotent elements of the ring.
inline ElementSet ring_nilpotents(const FiniteRing& r) {
  ElementSet out(r.size());
  for (auto a : r.elements())
    if (ring_nilpotency_index(r, a)) out.insert(a.index);
  return out;
}

namespace detail {
inline void require_left_ideal(const FiniteRing& r, const Ideal& i, const char* who) {
  if (!i.ring.same_as(r) || !is_left_ideal(r, i.elements))
    throw InvalidArgument(std::string(who) + ": not a left ideal of the ring");
}
}  // namespace detail

inline bool is_nil_left_ideal(const FiniteRing& r, const Ideal& i) {
  detail::require_left_ideal(r, i, "is_nil_left_ideal");
  return i.elements.subset_of(ring_nilpotents(r));
}

/// Dense: for all r1 != 0 and r2 there is r with r r1 != 0 and r r2 in I.
inline bool is_dense_left_ideal(const FiniteRing& r, const Ideal& i) {
  detail::require_left_ideal(r, i, "is_dense_left_ideal");
  for (auto r1 : r.elements()) {
    if (r1 == r.zero()) continue;
    for (auto r2 : r.elements()) {
      bool found = false;
      for (auto t : r.elements())
        if (r.mul(t, r1) != r.zero() && i.contains(r.mul(t, r2))) { found = true; break; }
      if (!found) return false;
    }
  }
  return true;
}

inline std::vector<std::string> element_names(const FiniteRing& r, const ElementSet& s) {
  std::vector<std::string> out;
  s.for_each([&](std::uint32_t i) { out.push_back(r.name({i})); });
  return out;
}

}  // namespace nilmod
