#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace nilmod;

namespace {

FiniteModule reg(FiniteRing r) { return module_regular(r); }

ElementSet set_of(const FiniteModule& m, std::initializer_list<const char*> names) {
  ElementSet s(m.size());
  for (auto n : names) s.insert(m.find(n)->index);
  return s;
}

std::vector<FiniteModule> sample_modules() {
  auto q = ring_path_algebra({2, {{"a", 2, 1}}}, 2);
  auto g = module_golden(2, 2);
  return {reg(ring_zmod(4)),
          reg(ring_zmod(6)),
          reg(ring_zmod(12)),
          reg(ring_zmod(36)),
          reg(ring_poly_quotient(2, {0, 0, 0, 1})),
          reg(ring_matrix(ring_zmod(2), 2)),
          reg(q),
          module_quiver(q, 2, 2, {{"e1", {{1, 0}, {0, 0}}}, {"e2", {{0, 0}, {0, 1}}}, {"a", {{0, 1}, {0, 0}}}}),
          g.module,
          submodule_as_module(g.part),
          reg(ring_product(ring_zmod(2), ring_zmod(4))),
          module_scalar_matrices(2, 2),
          reg(ring_monomial_quotient(2, {"x", "y"}, {{2, 0}, {0, 2}}))};
}

}  // namespace

TEST(PrimeSubmodule, ZmodFour) {
  auto m = reg(ring_zmod(4));
  EXPECT_TRUE(is_prime_submodule(m, set_of(m, {"0", "2"})));
  auto v = prime_violation(m, m.zero_set());
  ASSERT_TRUE(v);
  EXPECT_EQ(m.ring().name(v->a), "2");
  EXPECT_EQ(m.name(v->m), "2");
  EXPECT_THROW(is_prime_submodule(m, ElementSet::full(4)), InvalidArgument);
  EXPECT_THROW(is_prime_submodule(m, set_of(m, {"0", "1"})), InvalidArgument);
}

TEST(PrimeSubmodule, GoldenZeroIsPrime) { EXPECT_TRUE(is_prime_module(module_golden(2, 2).module)); }

TEST(PrimeSubmodule, ElementwiseMatchesIdealDefinition) {
  for (const auto& m : sample_modules()) {
    auto ideals = oracle::two_sided_ideals(m.ring());
    auto subs = oracle::submodules(m);
    ASSERT_LE(subs.size(), 200u);
    for (const auto& p : all_submodules(m)) {
      if (p.elements.is_full()) continue;
      EXPECT_EQ(is_prime_submodule(m, p.elements),
                oracle::is_prime_submodule(m, oracle::to_set(p.elements), ideals, subs))
          << m.provenance();
    }
  }
}

TEST(CompletelyPrime, Examples) {
  auto n = submodule_as_module(module_golden(2, 2).part);
  EXPECT_FALSE(is_completely_prime_module(n));
  auto w = completely_prime_violation(n, n.zero_set());
  ASSERT_TRUE(w);
  EXPECT_EQ(n.act(w->a, w->m), n.zero());
  EXPECT_NE(w->m, n.zero());
  EXPECT_FALSE(image_of(n, w->a) == n.zero_set());

  auto z4 = reg(ring_zmod(4));
  EXPECT_TRUE(is_completely_prime_submodule(z4, set_of(z4, {"0", "2"})));
  EXPECT_TRUE(is_completely_prime_module(reg(ring_zmod(5))));
}

TEST(CompletelyPrime, AgreesWithPrimeOverCommutativeRings) {
  for (const auto& m : sample_modules()) {
    if (!acts_commutatively(m)) continue;
    for (const auto& p : all_submodules(m))
      if (!p.elements.is_full()) {
        EXPECT_EQ(is_prime_submodule(m, p), is_completely_prime_submodule(m, p)) << m.provenance();
      }
  }
}

TEST(Radicals, Examples) {
  auto z4 = reg(ring_zmod(4));
  EXPECT_EQ(prime_radical(z4).elements, set_of(z4, {"0", "2"}));
  EXPECT_EQ(completely_prime_radical(z4).elements, set_of(z4, {"0", "2"}));
  auto g = module_golden(2, 2).module;
  EXPECT_EQ(prime_radical(g).size(), 1u);
  EXPECT_TRUE(completely_prime_radical(g).elements.is_full());
  EXPECT_EQ(prime_radical(reg(ring_zmod(6))).size(), 1u);
  EXPECT_EQ(upper_nil_radical_module(reg(ring_zmod(6))).size(), 1u);
}

TEST(Radicals, ChainHolds) {
  for (const auto& m : sample_modules()) {
    auto r = radical_report(m);
    EXPECT_TRUE(r.beta.subset_of(r.levitzki));
    EXPECT_TRUE(r.levitzki.subset_of(r.upper_nil));
    EXPECT_TRUE(r.upper_nil.subset_of(r.beta_co));
    if (nilpotent_set(m).size() == 1) {
      EXPECT_EQ(r.beta_co, m.zero_set());
      EXPECT_EQ(r.beta, m.zero_set());
    }
  }
}

TEST(SPrime, Examples) {
  auto n = submodule_as_module(module_golden(2, 2).part);
  EXPECT_TRUE(is_prime_module(n));
  EXPECT_TRUE(is_s_prime_module(n));
  EXPECT_TRUE(is_l_prime_module(n));
  EXPECT_FALSE(is_prime_module(reg(ring_zmod(4))));
  auto f2 = reg(ring_zmod(2));
  EXPECT_TRUE(is_prime_module(f2) && is_s_prime_module(f2) && is_l_prime_module(f2) && is_completely_prime_module(f2));
}

TEST(SPrime, MatchesQuotientRingOracle) {
  for (const auto& m : sample_modules()) {
    auto ideals = oracle::two_sided_ideals(m.ring());
    auto subs = oracle::submodules(m);
    for (const auto& p : all_submodules(m)) {
      if (p.elements.is_full()) continue;
      EXPECT_EQ(is_s_prime_submodule(m, p.elements),
                oracle::is_s_prime_submodule(m, oracle::to_set(p.elements), ideals, subs))
          << m.provenance();
    }
  }
}

TEST(TorsionFree, Examples) {
  auto z6 = torsion_free_equivalences_report(reg(ring_zmod(6)));
  EXPECT_FALSE(z6.torsion_free || z6.element_annihilators || z6.reduced_faithful_cyclics || z6.completely_prime_faithful);
  auto f2 = torsion_free_equivalences_report(reg(ring_zmod(2)));
  EXPECT_TRUE(f2.torsion_free && f2.element_annihilators && f2.reduced_faithful_cyclics && f2.completely_prime_faithful);
  auto n = torsion_free_equivalences_report(submodule_as_module(module_golden(2, 2).part));
  EXPECT_FALSE(n.torsion_free || n.element_annihilators || n.reduced_faithful_cyclics || n.completely_prime_faithful);
}

TEST(TorsionFree, FourConditionsAgree) {
  for (const auto& m : sample_modules()) {
    auto r = torsion_free_equivalences_report(m);
    EXPECT_EQ(r.torsion_free, r.element_annihilators) << m.provenance();
    EXPECT_EQ(r.torsion_free, r.reduced_faithful_cyclics) << m.provenance();
    EXPECT_EQ(r.torsion_free, r.completely_prime_faithful) << m.provenance();
  }
}

TEST(RadicalFormula, Examples) {
  auto z4 = reg(ring_zmod(4));
  EXPECT_TRUE(satisfies_radical_formula_zero(z4));
  EXPECT_TRUE(satisfies_complete_radical_formula_zero(z4));
  auto g = module_golden(2, 2).module;
  EXPECT_TRUE(satisfies_complete_radical_formula_zero(g));
  EXPECT_FALSE(satisfies_radical_formula_zero(g));
  auto f3 = reg(ring_zmod(3));
  EXPECT_TRUE(satisfies_radical_formula_zero(f3) && satisfies_complete_radical_formula_zero(f3));
}

TEST(Semiprime, Examples) {
  auto z12 = ring_zmod(12);
  Ideal i{z12, ElementSet::from(12, std::vector<std::uint32_t>{0, 6}), Sidedness::two_sided};
  bool expect = true;
  for (auto a : z12.elements())
    if (i.contains(z12.mul(a, a)) && !i.contains(a)) expect = false;
  EXPECT_EQ(is_semiprime_ideal_commutative(z12, i), expect);
  EXPECT_TRUE(expect);  // the squares landing in {0, 6} are 0^2 and 6^2
  auto z6 = ring_zmod(6);
  EXPECT_TRUE(is_semiprime_ideal_commutative(z6, Ideal{z6, ElementSet::from(6, std::vector<std::uint32_t>{0}), Sidedness::two_sided}));
  auto z4 = ring_zmod(4);
  EXPECT_FALSE(is_semiprime_ideal_commutative(z4, Ideal{z4, ElementSet::from(4, std::vector<std::uint32_t>{0}), Sidedness::two_sided}));
  auto m2 = ring_matrix(ring_zmod(2), 2);
  EXPECT_THROW(is_semiprime_ideal_commutative(m2, Ideal{m2, ElementSet::from(16, std::vector<std::uint32_t>{0}), Sidedness::two_sided}),
               UnsupportedPredicate);
}
