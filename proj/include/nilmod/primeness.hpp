#pragma once

#include <optional>
#include <vector>

#include "nilmod/nilpotency.hpp"
#include "nilmod/ring_ideals.hpp"

namespace nilmod {

/// (a, m) violating a primeness condition.
struct PrimeWitness {
  RingElem a;
  ModElem m;
  friend bool operator==(const PrimeWitness&, const PrimeWitness&) = default;
};

namespace detail {

inline void require_proper(const FiniteModule& m, const ElementSet& p, const char* who) {
  if (p.universe() != m.size() || !is_submodule(m, p))
    throw InvalidArgument(std::string(who) + ": not a submodule");
  if (p.is_full()) throw InvalidArgument(std::string(who) + ": prime submodules are proper");
}

/// Q_a = {x : a x in P}.
inline ElementSet preimage(const FiniteModule& m, RingElem a, const ElementSet& p) {
  ElementSet q(m.size());
  for (auto x : m.elements())
    if (p.contains(m.act(a, x).index)) q.insert(x.index);
  return q;
}

inline std::optional<PrimeWitness> prime_violation_unchecked(const FiniteModule& m, const ElementSet& p) {
  for (auto a : m.ring().elements()) {
    auto q = preimage(m, a, p);
    if (q.is_full()) continue;
    for (auto x : m.elements())
      if (!p.contains(x.index) && m.cyclic(x).subset_of(q)) return PrimeWitness{a, x};
  }
  return std::nullopt;
}

inline std::optional<PrimeWitness> completely_prime_violation_unchecked(const FiniteModule& m,
                                                                        const ElementSet& p) {
  for (auto a : m.ring().elements()) {
    auto q = preimage(m, a, p);
    if (q.is_full()) continue;
    if (auto x = q.minus(p).first(); x) return PrimeWitness{a, {*x}};
  }
  return std::nullopt;
}

}  // namespace detail

/// A violation of: a S m in P implies a M in P or m in P.
inline std::optional<PrimeWitness> prime_violation(const FiniteModule& m, const ElementSet& p) {
  detail::require_proper(m, p, "is_prime_submodule");
  return detail::prime_violation_unchecked(m, p);
}

inline bool is_prime_submodule(const FiniteModule& m, const ElementSet& p) {
  return !prime_violation(m, p);
}
inline bool is_prime_submodule(const FiniteModule& m, const Submodule& p) {
  return is_prime_submodule(m, p.elements);
}

/// A violation of: a m in P implies a M in P or m in P.
inline std::optional<PrimeWitness> completely_prime_violation(const FiniteModule& m, const ElementSet& p) {
  detail::require_proper(m, p, "is_completely_prime_submodule");
  return detail::completely_prime_violation_unchecked(m, p);
}

inline bool is_completely_prime_submodule(const FiniteModule& m, const ElementSet& p) {
  return !completely_prime_violation(m, p);
}
inline bool is_completely_prime_submodule(const FiniteModule& m, const Submodule& p) {
  return is_completely_prime_submodule(m, p.elements);
}

inline bool is_prime_module(const FiniteModule& m) {
  return m.size() > 1 && is_prime_submodule(m, m.zero_set());
}

inline bool is_completely_prime_module(const FiniteModule& m) {
  return m.size() > 1 && is_completely_prime_submodule(m, m.zero_set());
}

/// (P : M) = {a : a M in P}.
inline ElementSet colon(const FiniteModule& m, const ElementSet& p) {
  ElementSet out(m.ring().size());
  for (auto a : m.ring().elements())
    if (detail::preimage(m, a, p).is_full()) out.insert(a.index);
  return out;
}

inline const Ideal& acting_jacobson(const FiniteModule& m) {
  return *m.memo<Ideal>("jacobson", [&] { return jacobson_radical(m.ring()); });
}

/// P is s-prime when M/P is: prime with U(S/(P:M)) = 0. In a finite ring the
/// upper nil radical is J, and J(S/I) = (J(S)+I)/I, so the radical vanishes
/// exactly when J(S) is inside (P:M).
inline bool is_s_prime_submodule(const FiniteModule& m, const ElementSet& p) {
  return is_prime_submodule(m, p) && acting_jacobson(m).elements.subset_of(colon(m, p));
}

/// As s-prime with the Levitzki radical, which also equals J for finite rings.
inline bool is_l_prime_submodule(const FiniteModule& m, const ElementSet& p) {
  return is_prime_submodule(m, p) && acting_jacobson(m).elements.subset_of(colon(m, p));
}

inline bool is_s_prime_module(const FiniteModule& m) {
  return m.size() > 1 && is_s_prime_submodule(m, m.zero_set());
}
inline bool is_l_prime_module(const FiniteModule& m) {
  return m.size() > 1 && is_l_prime_submodule(m, m.zero_set());
}

struct PrimeSpectrum {
  std::vector<ElementSet> prime, completely_prime, s_prime, l_prime;  // proper submodules, canonical order
};

/// Classifies every proper submodule once; memoized per module.
inline const PrimeSpectrum& prime_spectrum(const FiniteModule& m, const Limits& limits = default_limits()) {
  auto lattice = all_submodules(m, limits);
  return *m.memo<PrimeSpectrum>("prime_spectrum", [&] {
    PrimeSpectrum out;
    const auto& j = acting_jacobson(m).elements;
    for (const auto& p : lattice) {
      if (p.elements.is_full()) continue;
      if (!detail::prime_violation_unchecked(m, p.elements)) {
        out.prime.push_back(p.elements);
        if (j.subset_of(colon(m, p.elements))) {
          out.s_prime.push_back(p.elements);
          out.l_prime.push_back(p.elements);
        }
        if (!detail::completely_prime_violation_unchecked(m, p.elements))
          out.completely_prime.push_back(p.elements);
      }
    }
    return out;
  });
}

namespace detail {
inline Submodule intersect_all(const FiniteModule& m, const std::vector<ElementSet>& family) {
  ElementSet out = m.full_set();
  for (const auto& p : family) out &= p;
  return {m, out};
}
}  // namespace detail

/// beta(M): intersection of prime submodules, M if there are none.
inline Submodule prime_radical(const FiniteModule& m, const Limits& limits = default_limits()) {
  return detail::intersect_all(m, prime_spectrum(m, limits).prime);
}

/// beta_co(M): intersection of completely prime submodules.
inline Submodule completely_prime_radical(const FiniteModule& m, const Limits& limits = default_limits()) {
  return detail::intersect_all(m, prime_spectrum(m, limits).completely_prime);
}

/// U(M): intersection of s-prime submodules.
inline Submodule upper_nil_radical_module(const FiniteModule& m, const Limits& limits = default_limits()) {
  return detail::intersect_all(m, prime_spectrum(m, limits).s_prime);
}

/// L(M): intersection of l-prime submodules.
inline Submodule levitzki_radical_module(const FiniteModule& m, const Limits& limits = default_limits()) {
  return detail::intersect_all(m, prime_spectrum(m, limits).l_prime);
}

struct TorsionFreeReport {
  bool torsion_free = false;        ///< a m = 0 forces a = 0 or m = 0
  bool element_annihilators = false;  ///< ann(m) = 0 for m != 0
  bool reduced_faithful_cyclics = false;  ///< reduced and ann(S m) = 0 for m != 0
  bool completely_prime_faithful = false;  ///< completely prime and ann(M) = 0
  friend bool operator==(const TorsionFreeReport&, const TorsionFreeReport&) = default;
};

inline TorsionFreeReport torsion_free_equivalences_report(const FiniteModule& m) {
  TorsionFreeReport r;
  const FiniteRing& s = m.ring();
  r.torsion_free = true;
  for (auto a : s.elements()) {
    if (a == s.zero()) continue;
    for (auto x : m.elements())
      if (x != m.zero() && m.act(a, x) == m.zero()) { r.torsion_free = false; break; }
    if (!r.torsion_free) break;
  }
  r.element_annihilators = true;
  bool cyclics_faithful = true;
  for (auto x : m.elements()) {
    if (x == m.zero()) continue;
    if (annihilator_elem(m, x).size() != 1) r.element_annihilators = false;
    if (annihilator_of(m, m.cyclic(x)).size() != 1) cyclics_faithful = false;
  }
  r.reduced_faithful_cyclics = cyclics_faithful && is_reduced(m);
  r.completely_prime_faithful = is_completely_prime_module(m) && module_annihilator(m).size() == 1;
  return r;
}

inline bool is_torsion_free(const FiniteModule& m) { return torsion_free_equivalences_report(m).torsion_free; }

struct RadicalReport {
  ElementSet beta;
  ElementSet beta_co;
  ElementSet levitzki;
  ElementSet upper_nil;
  ElementSet envelope_span;
  bool satisfies_rf_zero = false;   ///< <E_M(0)> = beta(M)
  bool satisfies_crf_zero = false;  ///< <E_M(0)> = beta_co(M)
  friend bool operator==(const RadicalReport&, const RadicalReport&) = default;
};

inline RadicalReport radical_report(const FiniteModule& m, const Limits& limits = default_limits()) {
  RadicalReport r;
  r.beta = prime_radical(m, limits).elements;
  r.beta_co = completely_prime_radical(m, limits).elements;
  r.levitzki = levitzki_radical_module(m, limits).elements;
  r.upper_nil = upper_nil_radical_module(m, limits).elements;
  r.envelope_span = envelope_zero_span(m).elements;
  r.satisfies_rf_zero = r.envelope_span == r.beta;
  r.satisfies_crf_zero = r.envelope_span == r.beta_co;
  return r;
}

inline bool satisfies_radical_formula_zero(const FiniteModule& m, const Limits& limits = default_limits()) {
  return envelope_zero_span(m).elements == prime_radical(m, limits).elements;
}

inline bool satisfies_complete_radical_formula_zero(const FiniteModule& m,
                                                    const Limits& limits = default_limits()) {
  return envelope_zero_span(m).elements == completely_prime_radical(m, limits).elements;
}

/// a^2 in I implies a in I, for a two-sided ideal of a commutative ring.
inline bool is_semiprime_ideal_commutative(const FiniteRing& r, const Ideal& i) {
  if (!is_commutative(r)) throw UnsupportedPredicate("is_semiprime_ideal_commutative: ring is not commutative");
  if (!i.ring.same_as(r) || !is_two_sided_ideal(r, i.elements))
    throw InvalidArgument("is_semiprime_ideal_commutative: not an ideal of the ring");
  for (auto a : r.elements())
    if (i.contains(r.mul(a, a)) && !i.contains(a)) return false;
  return true;
}

}  // namespace nilmod
