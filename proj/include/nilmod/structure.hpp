#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nilmod/primeness.hpp"

namespace nilmod {

/// Smallest m with ann_S(m) = ann_S(M); then r + ann(M) -> r m embeds the
/// image ring S/ann_S(M) into M.
inline std::optional<ModElem> regular_embedding_witness(const FiniteModule& m) {
  const auto ann = module_annihilator(m);
  for (auto x : m.elements())
    if (annihilator_elem(m, x).elements == ann) return x;
  return std::nullopt;
}

/// Outcome of evaluating one theorem on one module. A theorem is violated
/// only when every hypothesis holds and the recomputed conclusion fails.
struct TheoremCheck {
  std::string theorem;
  bool hypothesis = false;
  std::optional<bool> conclusion;  ///< evaluated only when the hypothesis holds
  std::string note;
  bool violated() const { return hypothesis && conclusion && !*conclusion; }
  friend bool operator==(const TheoremCheck&, const TheoremCheck&) = default;
};

inline constexpr const char* artinian_note = "artinian by finiteness";

inline const FiniteRing& image_ring_of(const FiniteModule& m) {
  return *m.memo<FiniteRing>("image_ring", [&] { return image_ring(m); });
}

inline const FiniteModule& faithful_view(const FiniteModule& m) {
  return *m.memo<FiniteModule>("faithful_view", [&] { return module_over_image_ring(m); });
}

/// Reduced with an embedded image ring forces the image ring, and M, to be
/// semisimple.
inline TheoremCheck verify_th1(const FiniteModule& m) {
  TheoremCheck c{"reduced artinian with embedded image ring is semisimple", false, std::nullopt, artinian_note};
  c.hypothesis = is_reduced(m) && regular_embedding_witness(m).has_value();
  if (c.hypothesis) c.conclusion = is_semisimple_ring(image_ring_of(m)) && is_semisimple_module(m);
  return c;
}

/// The zero submodule satisfying the complete radical formula makes a
/// reduced module semisimple.
inline TheoremCheck verify_zero_theorem(const FiniteModule& m, const Limits& limits = default_limits()) {
  TheoremCheck c{"complete radical formula at zero and reduced implies semisimple", false, std::nullopt,
                 artinian_note};
  c.hypothesis = is_reduced(m) && satisfies_complete_radical_formula_zero(m, limits);
  if (c.hypothesis) c.conclusion = is_semisimple_module(m);
  return c;
}

/// Over a commutative artinian image ring, reduced iff semisimple.
inline TheoremCheck verify_reduced_iff_semisimple(const FiniteModule& m) {
  TheoremCheck c{"commutative artinian: reduced iff semisimple", false, std::nullopt, artinian_note};
  c.hypothesis = acts_commutatively(m);
  if (c.hypothesis) c.conclusion = is_reduced(m) == is_semisimple_module(m);
  return c;
}

/// Prime and reduced implies s-prime, l-prime and completely prime.
inline TheoremCheck verify_prime_reduced(const FiniteModule& m) {
  TheoremCheck c{"prime and reduced implies s-prime, l-prime, completely prime", false, std::nullopt, ""};
  c.hypothesis = is_prime_module(m) && is_reduced(m);
  if (c.hypothesis)
    c.conclusion = is_s_prime_module(m) && is_l_prime_module(m) && is_completely_prime_module(m);
  return c;
}

/// A nonzero Jacobson radical of the image ring (= upper nil = Levitzki =
/// prime radical for finite rings) forces a nonzero nilpotent element.
inline TheoremCheck verify_ring_radical_nilpotents(const FiniteModule& m) {
  TheoremCheck c{"nonzero radical of the image ring implies nonzero nilpotents", false, std::nullopt,
                 "upper nil, Levitzki and prime radicals equal J in finite rings"};
  c.hypothesis = !acting_jacobson(m).elements.subset_of(module_annihilator(m));
  if (c.hypothesis) c.conclusion = nilpotent_set(m).size() > 1;
  return c;
}

/// beta <= L <= U <= beta_co.
inline TheoremCheck verify_radical_chain(const FiniteModule& m, const Limits& limits = default_limits()) {
  TheoremCheck c{"beta in L in U in beta_co", true, std::nullopt, ""};
  const auto b = prime_radical(m, limits).elements, l = levitzki_radical_module(m, limits).elements,
             u = upper_nil_radical_module(m, limits).elements,
             bc = completely_prime_radical(m, limits).elements;
  c.conclusion = b.subset_of(l) && l.subset_of(u) && u.subset_of(bc);
  return c;
}

inline std::vector<TheoremCheck> theorem_checks(const FiniteModule& m, const Limits& limits = default_limits()) {
  return {verify_th1(m),
          verify_zero_theorem(m, limits),
          verify_reduced_iff_semisimple(m),
          verify_prime_reduced(m),
          verify_ring_radical_nilpotents(m),
          verify_radical_chain(m, limits)};
}

/// The ten conditions characterising reducedness over a commutative ring,
/// each computed along its own route.
inline std::array<bool, 10> reduced_conditions(const FiniteModule& m) {
  if (!acts_commutatively(m))
    throw UnsupportedPredicate("reduced_conditions: the acting ring does not act commutatively");
  const FiniteModule& fm = faithful_view(m);
  const FiniteRing& s = fm.ring();
  std::array<bool, 10> c{};
  c[0] = is_reduced(fm);

  const auto regular = module_regular(s);
  c[1] = c[2] = c[5] = true;
  for (auto x : fm.elements()) {
    if (x == fm.zero()) continue;
    auto ann = annihilator_elem(fm, x);
    if (c[1] && !is_reduced(quotient_module(regular, Submodule{regular, ann.elements}))) c[1] = false;
    if (c[2] && !is_reduced(submodule_as_module(fm, fm.cyclic(x)))) c[2] = false;
    if (c[5] && !is_semiprime_ideal_commutative(s, ann)) c[5] = false;
  }

  c[3] = true;
  for (const auto& n : minimal_submodules(fm))
    if (!is_reduced(submodule_as_module(n))) { c[3] = false; break; }

  // No f_a with a M != 0 is nilpotent: some orbit must avoid zero.
  c[4] = true;
  const auto zero = fm.zero_set();
  for (auto a : s.elements()) {
    if (image_of(fm, a) == zero) continue;
    auto depth = detail::orbit_depths(fm, a, zero);
    if (std::all_of(depth.begin(), depth.end(), [](auto d) { return d != unreachable; })) {
      c[4] = false;
      break;
    }
  }

  // Ker f_r^k by iterating f_r on elements.
  c[6] = true;
  for (auto r : s.elements()) {
    auto depth = detail::orbit_depths(fm, r, zero);
    for (auto x : fm.elements())
      if (depth[x.index] != unreachable && depth[x.index] > 1) { c[6] = false; break; }
    if (!c[6]) break;
  }

  // (0 :_M r^k) through ring powers.
  c[7] = true;
  for (auto r : s.elements())
    if (!kernel_stabilization(fm, r)) { c[7] = false; break; }

  c[8] = envelope_zero(fm) == zero;
  c[9] = nilpotent_set(fm) == zero;
  return c;
}

/// One implication A => B from the displayed chain or the closing remarks.
struct ImplicationResult {
  std::string name;
  bool antecedent = false;
  bool consequent = false;
  bool theorem_backed = true;
  std::string witness;  ///< filled when the implication fails
  bool holds() const { return !antecedent || consequent; }
  friend bool operator==(const ImplicationResult&, const ImplicationResult&) = default;
};

struct Predicates {
  bool nil = false;
  std::optional<std::uint32_t> nilpotent_degree;
  bool reduced = false;
  bool rigid = false;
  std::optional<bool> co_reduced;  ///< absent when the action is not commutative
  bool torsion_free = false;
  bool prime = false;
  bool completely_prime = false;
  bool s_prime = false;
  bool l_prime = false;
  bool simple = false;
  bool semisimple = false;
  friend bool operator==(const Predicates&, const Predicates&) = default;
};

struct ImageRingFacts {
  std::size_t size = 0;
  bool commutative = false;
  bool semisimple = false;
  bool reduced = false;
  std::size_t jacobson_size = 0;
  friend bool operator==(const ImageRingFacts&, const ImageRingFacts&) = default;
};

struct ClassificationRecord {
  std::string provenance;
  std::size_t size = 0;
  std::size_t ring_size = 0;
  Predicates predicates;
  NilReport nil;
  RadicalReport radicals;
  TorsionFreeReport torsion;
  std::optional<std::uint32_t> embedding_witness;
  std::optional<PrimeWitness> completely_prime_witness;
  ImageRingFacts image_ring;
  std::size_t submodule_count = 0;
  ElementSet socle;
  std::vector<std::string> element_names;
  friend bool operator==(const ClassificationRecord&, const ClassificationRecord&) = default;
};

namespace detail {
template <class F>
auto staged(const char* stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (Error& e) {
    if (e.stage().empty()) e.set_stage(stage);
    throw;
  }
}
}  // namespace detail

inline std::vector<ImplicationResult> chain_check(const FiniteModule& m, const Limits& limits = default_limits());

inline ClassificationRecord classify(const FiniteModule& m, const Limits& limits = default_limits()) {
  ClassificationRecord r;
  r.provenance = m.provenance();
  r.size = m.size();
  r.ring_size = m.ring().size();
  for (auto x : m.elements()) r.element_names.push_back(m.name(x));
  auto& p = r.predicates;
  detail::staged("nilpotency", [&] {
    r.nil = nil_report(m);
    p.nil = r.nil.is_nil;
    p.nilpotent_degree = r.nil.nilpotent_degree;
    p.reduced = is_reduced(m);
    p.rigid = is_rigid(m);
    if (acts_commutatively(m)) p.co_reduced = is_co_reduced(m);
  });
  detail::staged("lattice", [&] {
    r.submodule_count = all_submodules(m, limits).size();
    r.socle = socle(m).elements;
    p.simple = is_simple(m);
    p.semisimple = r.socle.is_full();
  });
  detail::staged("primeness", [&] {
    r.torsion = torsion_free_equivalences_report(m);
    p.torsion_free = r.torsion.torsion_free;
    p.prime = is_prime_module(m);
    p.completely_prime = is_completely_prime_module(m);
    if (m.size() > 1 && !p.completely_prime)
      r.completely_prime_witness = completely_prime_violation(m, m.zero_set());
    p.s_prime = is_s_prime_module(m);
    p.l_prime = is_l_prime_module(m);
  });
  detail::staged("radicals", [&] { r.radicals = radical_report(m, limits); });
  detail::staged("structure", [&] {
    if (auto w = regular_embedding_witness(m)) r.embedding_witness = w->index;
    const FiniteRing& img = image_ring_of(m);
    r.image_ring.size = img.size();
    r.image_ring.commutative = acts_commutatively(m);
    r.image_ring.jacobson_size = jacobson_radical(img).size();
    r.image_ring.semisimple = r.image_ring.jacobson_size == 1;
    r.image_ring.reduced = is_reduced_ring(img);
  });
  return r;
}

inline std::vector<ImplicationResult> chain_check(const FiniteModule& m, const Limits& limits) {
  const bool tf = is_torsion_free(m), cp = is_completely_prime_module(m), red = is_reduced(m),
             rig = is_rigid(m);
  const bool nonzero_nil = m.size() > 1 && is_nil(m);
  const bool sp = is_s_prime_module(m), lp = is_l_prime_module(m);
  (void)limits;
  std::vector<ImplicationResult> out{
      {"torsion-free => completely prime", tf, cp, true, ""},
      {"completely prime => reduced", cp, red, true, ""},
      {"reduced => rigid", red, rig, true, ""},
      {"nil => not torsion-free", nonzero_nil, !tf, true, ""},
      {"nil => not completely prime", nonzero_nil, !cp, true, ""},
      // With s-prime and l-prime decided through the radical of the image
      // ring, a nil prime module over a semisimple ring is both (the
      // matrix examples), so these two are recorded but not escalated.
      {"nil => not s-prime", nonzero_nil, !sp, false, ""},
      {"nil => not l-prime", nonzero_nil, !lp, false, ""},
  };
  for (auto& i : out) {
    if (i.holds()) continue;
    if (i.name.rfind("nil", 0) == 0) {
      auto w = is_nilpotent_element(m, ModElem{m.size() > 1 ? 1u : 0u});
      i.witness = "module is nil";
      if (w.witness)
        i.witness += "; e.g. " + m.name(w.witness->element) + " with nilpotentiser " +
                     m.ring().name(w.witness->nilpotentiser) + ", degree " + std::to_string(w.witness->degree);
    } else if (i.name.rfind("torsion-free", 0) == 0) {
      if (auto v = completely_prime_violation(m, m.zero_set()))
        i.witness = "a=" + m.ring().name(v->a) + ", m=" + m.name(v->m);
    } else if (i.name.rfind("completely", 0) == 0) {
      i.witness = "reducedness fails";
    } else {
      i.witness = "rigidity fails";
    }
  }
  return out;
}

}  // namespace nilmod
