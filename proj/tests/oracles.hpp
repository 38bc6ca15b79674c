#pragma once

// Brute-force reference implementations. They use only the element
// operations of rings and modules and share no algorithm with the library.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "nilmod/nilmod.hpp"

namespace oracle {

using nilmod::FiniteModule;
using nilmod::FiniteRing;
using nilmod::ModElem;
using nilmod::RingElem;
using Set = std::set<std::uint32_t>;

inline Set to_set(const nilmod::ElementSet& s) {
  auto v = s.to_vector();
  return Set(v.begin(), v.end());
}

/// Closure of closed + {x} under addition and the maps x -> f(x), given
/// that `closed` is already closed. Stops early once `universe` elements
/// are reached.
template <class Add, class Maps>
Set adjoin(const Set& closed, std::uint32_t x, Add add, const Maps& maps, std::size_t universe = 0) {
  std::uint32_t top = x;
  if (!closed.empty()) top = std::max(top, *closed.rbegin());
  std::vector<char> in(top + 1, 0);
  std::vector<std::uint32_t> members(closed.begin(), closed.end()), todo;
  for (auto y : members) in[y] = 1;
  auto insert = [&](std::uint32_t w) {
    if (w >= in.size()) in.resize(w + 1, 0);
    if (in[w]) return;
    in[w] = 1;
    members.push_back(w);
    todo.push_back(w);
  };
  insert(x);
  while (!todo.empty() && members.size() != universe) {
    auto z = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i < members.size(); ++i) insert(add(z, members[i]));
    for (const auto& f : maps) insert(f(z));
  }
  return Set(members.begin(), members.end());
}

/// Every set closed under + and the maps, found by adjoining one element
/// at a time to already-found members.
template <class Add, class Maps>
std::vector<Set> all_closed(std::size_t n, std::uint32_t zero, Add add, const Maps& maps) {
  std::set<Set> seen{Set{zero}};
  std::vector<Set> queue{Set{zero}};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::uint32_t x = 0; x < n; ++x) {
      if (queue[i].count(x)) continue;
      auto c = adjoin(queue[i], x, add, maps);
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  return {seen.begin(), seen.end()};
}

inline std::vector<Set> left_ideals(const FiniteRing& r) {
  std::vector<std::function<std::uint32_t(std::uint32_t)>> maps;
  for (auto a : r.elements()) maps.push_back([&r, a](std::uint32_t x) { return r.mul(a, RingElem{x}).index; });
  return all_closed(r.size(), r.zero().index, [&](auto x, auto y) { return r.add(RingElem{x}, RingElem{y}).index; }, maps);
}

inline std::vector<Set> two_sided_ideals(const FiniteRing& r) {
  std::vector<std::function<std::uint32_t(std::uint32_t)>> maps;
  for (auto a : r.elements()) {
    maps.push_back([&r, a](std::uint32_t x) { return r.mul(a, RingElem{x}).index; });
    maps.push_back([&r, a](std::uint32_t x) { return r.mul(RingElem{x}, a).index; });
  }
  return all_closed(r.size(), r.zero().index, [&](auto x, auto y) { return r.add(RingElem{x}, RingElem{y}).index; }, maps);
}

inline std::vector<Set> submodules(const FiniteModule& m) {
  std::vector<std::function<std::uint32_t(std::uint32_t)>> maps;
  for (auto a : m.ring().elements()) maps.push_back([&m, a](std::uint32_t x) { return m.act(a, ModElem{x}).index; });
  return all_closed(m.size(), m.zero().index, [&](auto x, auto y) { return m.add(ModElem{x}, ModElem{y}).index; }, maps);
}

inline bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

/// J(R) as the intersection of the maximal left ideals.
inline Set jacobson(const FiniteRing& r) {
  auto ideals = oracle::left_ideals(r);
  Set out;
  for (std::uint32_t x = 0; x < r.size(); ++x) out.insert(x);
  for (const auto& i : ideals) {
    if (i.size() == r.size()) continue;
    bool maximal = true;
    for (const auto& j : ideals)
      if (j.size() != r.size() && j.size() > i.size() && subset(i, j)) maximal = false;
    if (!maximal) continue;
    Set keep;
    std::set_intersection(out.begin(), out.end(), i.begin(), i.end(), std::inserter(keep, keep.end()));
    out = keep;
  }
  return out;
}

/// P is prime when A N in P forces A M in P or N in P, over two-sided
/// ideals A and submodules N.
inline bool is_prime_submodule(const FiniteModule& m, const Set& p, const std::vector<Set>& ideals,
                               const std::vector<Set>& subs) {
  if (p.size() == m.size()) return false;
  auto product_in_p = [&](const Set& a, const Set& n) {
    for (auto x : a)
      for (auto y : n)
        if (!p.count(m.act(RingElem{x}, ModElem{y}).index)) return false;
    return true;
  };
  Set all;
  for (std::uint32_t x = 0; x < m.size(); ++x) all.insert(x);
  for (const auto& a : ideals)
    for (const auto& n : subs)
      if (product_in_p(a, n) && !product_in_p(a, all) && !subset(n, p)) return false;
  return true;
}

/// m is nilpotent when a^k m = 0 and a r m != 0 for some a, r, k.
inline bool is_nilpotent(const FiniteModule& m, ModElem x) {
  const auto& s = m.ring();
  for (auto a : s.elements()) {
    bool moves = false;
    for (auto r : s.elements())
      if (m.act(s.mul(a, r), x) != m.zero()) moves = true;
    if (!moves) continue;
    RingElem p = a;
    for (std::size_t k = 1; k <= m.size() + 1; ++k, p = s.mul(p, a))
      if (m.act(p, x) == m.zero()) return true;
  }
  return false;
}

inline Set nilpotents(const FiniteModule& m) {
  Set out{m.zero().index};
  for (auto x : m.elements())
    if (is_nilpotent(m, x)) out.insert(x.index);
  return out;
}

/// a^2 m = 0 forces a r m = 0 for all r.
inline bool is_reduced(const FiniteModule& m) {
  const auto& s = m.ring();
  for (auto a : s.elements())
    for (auto x : m.elements()) {
      if (m.act(s.mul(a, a), x) != m.zero()) continue;
      for (auto r : s.elements())
        if (m.act(s.mul(a, r), x) != m.zero()) return false;
    }
  return true;
}

/// Sum of all nil two-sided ideals (the upper nil radical).
inline Set upper_nil_radical(const FiniteRing& r) {
  auto nilpotent = [&](RingElem a) {
    RingElem p = a;
    for (std::size_t k = 0; k <= r.size(); ++k, p = r.mul(p, a))
      if (p == r.zero()) return true;
    return false;
  };
  Set out{r.zero().index};
  for (const auto& i : oracle::two_sided_ideals(r)) {
    if (!std::all_of(i.begin(), i.end(), [&](auto x) { return nilpotent(RingElem{x}); })) continue;
    Set grown = out;
    for (auto x : out)
      for (auto y : i) grown.insert(r.add(RingElem{x}, RingElem{y}).index);
    out = grown;
  }
  return out;
}

/// s-prime through the quotient ring: P prime and U(S/(P:M)) = 0.
inline bool is_s_prime_submodule(const FiniteModule& m, const Set& p, const std::vector<Set>& ideals,
                                 const std::vector<Set>& subs) {
  if (!is_prime_submodule(m, p, ideals, subs)) return false;
  nilmod::ElementSet colon(m.ring().size());
  for (auto a : m.ring().elements()) {
    bool in = true;
    for (auto x : m.elements())
      if (!p.count(m.act(a, x).index)) in = false;
    if (in) colon.insert(a.index);
  }
  auto q = nilmod::quotient_ring(m.ring(), colon);
  return upper_nil_radical(q).size() == 1;
}

inline std::size_t divisor_count(long long n) {
  std::size_t c = 0;
  for (long long d = 1; d <= n; ++d)
    if (n % d == 0) ++c;
  return c;
}

inline bool squarefree(long long n) {
  for (long long p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

}  // namespace oracle
