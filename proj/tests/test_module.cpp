#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace nilmod;

namespace {

FiniteModule quiver_rep(const ActionMatrix& a) {
  auto q = ring_path_algebra({2, {{"a", 2, 1}}}, 2);
  return module_quiver(q, 2, 2, {{"e1", {{1, 0}, {0, 0}}}, {"e2", {{0, 0}, {0, 1}}}, {"a", a}}, {"x", "y"});
}

ElementSet set_of(const FiniteModule& m, std::initializer_list<const char*> names) {
  ElementSet s(m.size());
  for (auto n : names) s.insert(m.find(n)->index);
  return s;
}

// Matrices over Z/k with every row summing to 0, counted directly.
std::size_t row_sum_zero_count(int n, int k) {
  std::size_t cells = n * n, total = 1, count = 0;
  for (std::size_t i = 0; i < cells; ++i) total *= k;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    bool ok = true;
    for (int row = 0; row < n; ++row) {
      int s = 0;
      for (int col = 0; col < n; ++col, c /= k) s += static_cast<int>(c % k);
      if (s % k) ok = false;
    }
    count += ok;
  }
  return count;
}

}  // namespace

TEST(Regular, Sizes) {
  EXPECT_EQ(module_regular(ring_poly_quotient(2, {0, 0, 0, 1})).size(), 8u);
  auto f2 = module_regular(ring_zmod(2));
  EXPECT_EQ(f2.size(), 2u);
  EXPECT_TRUE(is_simple(f2));
  EXPECT_EQ(module_regular(ring_matrix(ring_zmod(2), 2)).size(), 16u);
}

TEST(Golden, OrdersOfMAndN) {
  for (auto [n, k] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    auto g = module_golden(n, k);
    std::size_t m_order = 1;
    for (int i = 0; i < n * n; ++i) m_order *= k;
    EXPECT_EQ(g.module.size(), m_order);
    EXPECT_EQ(g.part.size(), row_sum_zero_count(n, k)) << n << "," << k;
    EXPECT_TRUE(check_module_axioms(g.module).ok());
  }
  EXPECT_EQ(module_golden(2, 2).part.size(), 4u);
  EXPECT_EQ(module_golden(2, 3).part.size(), 9u);
}

TEST(Golden, RejectsSmallParameters) {
  EXPECT_THROW(module_golden(1, 2), InvalidParameter);
  EXPECT_THROW(module_golden(2, 1), InvalidParameter);
}

TEST(Golden, NIsFaithfulOverTheImageRing) {
  auto n = submodule_as_module(module_golden(2, 2).part);
  EXPECT_EQ(module_annihilator(n).size(), 1u);
}

TEST(Golden, LatticeContainsColumnSimplesAndN) {
  auto g = module_golden(2, 2);
  const auto& m = g.module;
  auto subs = all_submodules(m);
  auto has = [&](const ElementSet& s) {
    return std::any_of(subs.begin(), subs.end(), [&](const Submodule& x) { return x.elements == s; });
  };
  EXPECT_TRUE(has(g.part.elements));
  EXPECT_TRUE(has(submodule_generated(m, set_of(m, {"[[1,0],[1,0]]"})).elements));
  EXPECT_TRUE(has(submodule_generated(m, set_of(m, {"[[0,1],[0,1]]"})).elements));
}

TEST(CyclicInt, Sizes) {
  EXPECT_EQ(module_cyclic_int(4).size(), 4u);
  EXPECT_EQ(module_cyclic_int(12).size(), 12u);
  EXPECT_THROW(module_cyclic_int(1), InvalidParameter);
}

TEST(Quiver, OneArrowHasOneSimpleSubmodule) {
  auto m = quiver_rep({{0, 1}, {0, 0}});
  EXPECT_EQ(m.size(), 4u);
  auto mins = minimal_submodules(m);
  ASSERT_EQ(mins.size(), 1u);
  EXPECT_EQ(mins[0].elements, set_of(m, {"0", "x"}));
  EXPECT_FALSE(is_semisimple_module(m));
}

TEST(Quiver, SwappedActionIsNotAModule) {
  // e1 (a x) = e1 y = 0 but (e1 a) x = a x = y.
  try {
    quiver_rep({{0, 1}, {1, 0}});
    FAIL() << "expected invalid-action";
  } catch (const InvalidAction& e) {
    EXPECT_FALSE(e.witness().empty());
  }
}

TEST(Quiver, ZeroArrowOneDimensionalIsSimple) {
  auto q = ring_path_algebra({2, {{"a", 2, 1}}}, 2);
  auto s = module_quiver(q, 2, 1, {{"e1", {{1}}}, {"e2", {{0}}}, {"a", {{0}}}});
  EXPECT_TRUE(is_simple(s));
}

TEST(Staircase, Size) { EXPECT_EQ(module_monomial_staircase(2).size(), 512u); }

TEST(FromAction, RejectsNonUnitalAction) {
  auto r = ring_zmod(2);
  EXPECT_THROW(module_from_action(r, {{0, 1}, {1, 0}}, {{0, 0}, {0, 0}}), InvalidAction);
}

TEST(DirectSum, TwoCopiesOfF2) {
  auto f2 = module_regular(ring_zmod(2));
  auto d = direct_sum(f2, f2);
  EXPECT_EQ(d.size(), 4u);
  EXPECT_TRUE(is_semisimple_module(d));
}

TEST(DirectSum, PreservesReducedness) {
  // Z/a + Z/b as modules over Z/ab.
  std::vector<long long> ns{2, 3, 4, 6, 8, 9, 12};
  for (long long a : ns)
    for (long long b : ns) {
      auto reg = module_regular(ring_zmod(a * b));
      auto by = [&](long long g) {
        return quotient_module(reg, submodule_generated(reg, ElementSet::from(a * b, std::vector<long long>{g})));
      };
      auto ma = by(a), mb = by(b);
      EXPECT_EQ(is_reduced(direct_sum(ma, mb)), is_reduced(ma) && is_reduced(mb)) << a << "," << b;
    }
}

TEST(Quotient, Zmod4ByTwo) {
  auto m = module_regular(ring_zmod(4));
  auto q = quotient_module(m, submodule_generated(m, set_of(m, {"2"})));
  EXPECT_EQ(q.size(), 2u);
  EXPECT_TRUE(is_simple(q));
}

TEST(Quotient, CardinalityDividesForEverySubmodule) {
  for (auto m : {module_regular(ring_zmod(12)), module_golden(2, 2).module,
                 module_regular(ring_poly_quotient(2, {0, 0, 0, 1}))})
    for (const auto& n : all_submodules(m)) EXPECT_EQ(quotient_module(m, n).size() * n.size(), m.size());
}

TEST(Generation, CyclicSeed) {
  auto m = module_regular(ring_zmod(4));
  EXPECT_EQ(submodule_generated(m, set_of(m, {"2"})).elements, set_of(m, {"0", "2"}));
}

TEST(Lattice, DivisorCountForZmod) {
  for (long long n : {12, 30, 36, 64, 72, 97})
    EXPECT_EQ(all_submodules(module_cyclic_int(n)).size(), oracle::divisor_count(n)) << n;
}

TEST(Lattice, MatchesOracleAndIsClosed) {
  std::vector<FiniteModule> mods{module_regular(ring_zmod(12)), module_golden(2, 2).module,
                                 quiver_rep({{0, 1}, {0, 0}}), module_regular(ring_path_algebra({2, {{"a", 2, 1}}}, 2)),
                                 [] {
                                   auto z4 = module_regular(ring_zmod(4));
                                   return direct_sum(z4, z4);
                                 }(),
                                 module_regular(ring_monomial_quotient(2, {"x", "y"}, {{2, 0}, {0, 2}}))};
  for (const auto& m : mods) {
    auto subs = all_submodules(m);
    std::set<oracle::Set> lib;
    for (const auto& s : subs) {
      ASSERT_TRUE(is_submodule(m, s.elements));
      lib.insert(oracle::to_set(s.elements));
    }
    auto ref = oracle::submodules(m);
    EXPECT_EQ(lib, std::set<oracle::Set>(ref.begin(), ref.end())) << m.provenance();
    for (const auto& a : subs)
      for (const auto& b : subs) {
        EXPECT_TRUE(lib.count(oracle::to_set(sum(m, a.elements, b.elements))));
        EXPECT_TRUE(lib.count(oracle::to_set(a.elements & b.elements)));
      }
  }
}

TEST(Lattice, HonoursCap) {
  Limits l;
  l.lattice_cap = 3;
  EXPECT_THROW(all_submodules(module_cyclic_int(12), l), CapacityError);
}

TEST(Socle, ZmodFour) {
  auto m = module_regular(ring_zmod(4));
  EXPECT_EQ(socle(m).elements, set_of(m, {"0", "2"}));
  EXPECT_FALSE(is_semisimple_module(m));
}

TEST(Socle, IsSemisimple) {
  for (auto m : {module_regular(ring_zmod(72)), module_golden(2, 3).module, quiver_rep({{0, 1}, {0, 0}}),
                 module_regular(ring_poly_quotient(2, {0, 0, 0, 1}))})
    EXPECT_TRUE(is_semisimple_module(submodule_as_module(socle(m)))) << m.provenance();
}

TEST(Annihilators, ElementsAndKernels) {
  auto m = module_regular(ring_zmod(12));
  auto two = *m.find("2");
  EXPECT_EQ(annihilator_elem(m, two).size(), 2u);  // {0, 6}
  EXPECT_EQ(module_annihilator(m).size(), 1u);
  EXPECT_EQ(kernel_of(m, RingElem{3}).size(), 3u);
  EXPECT_EQ(image_of(m, RingElem{3}).size(), 4u);
}
