#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace nilmod;

namespace {

std::vector<std::string> names(const FiniteRing& r) {
  std::vector<std::string> out;
  for (auto a : r.elements()) out.push_back(r.name(a));
  return out;
}

NonUnitalRingData two_z_mod_4() {
  // 2Z/4Z = {0, 2}: 2 + 2 = 0, 2 * 2 = 0.
  return {{{0, 1}, {1, 0}}, {{0, 0}, {0, 0}}, {"0", "2"}};
}

}  // namespace

TEST(Zmod, RejectsModulusBelowTwo) {
  EXPECT_THROW(ring_zmod(1), InvalidParameter);
  EXPECT_THROW(ring_zmod(0), InvalidParameter);
  EXPECT_THROW(ring_zmod(-3), InvalidParameter);
}

TEST(Zmod, ArithmeticIsModular) {
  auto r = ring_zmod(12);
  EXPECT_EQ(r.size(), 12u);
  auto x = *r.find("7"), y = *r.find("9");
  EXPECT_EQ(r.name(r.add(x, y)), "4");
  EXPECT_EQ(r.name(r.mul(x, y)), "3");
  EXPECT_EQ(r.name(r.neg(x)), "5");
  EXPECT_TRUE(check_ring_axioms(r).ok());
}

TEST(Matrix, SizesAreBasePowers) {
  EXPECT_EQ(ring_matrix(ring_zmod(2), 2).size(), 16u);
  EXPECT_EQ(ring_matrix(ring_zmod(3), 2).size(), 81u);
  EXPECT_EQ(ring_matrix(ring_zmod(3), 3).size(), 19683u);
}

TEST(Matrix, IsNotCommutativeAndSatisfiesAxioms) {
  auto r = ring_matrix(ring_zmod(2), 2);
  EXPECT_FALSE(is_commutative(r));
  EXPECT_TRUE(check_ring_axioms(r).ok());
  auto e12 = *r.find("[[0,1],[0,0]]"), e21 = *r.find("[[0,0],[1,0]]");
  EXPECT_EQ(r.name(r.mul(e12, e21)), "[[1,0],[0,0]]");
  EXPECT_EQ(r.name(r.mul(e21, e12)), "[[0,0],[0,1]]");
  EXPECT_EQ(ring_units(r).size(), 6u);
}

TEST(Matrix, RuleBackendMatchesDenseCopy) {
  auto rule = ring_matrix(ring_zmod(3), 2);
  auto dense = detail::materialize(rule);
  for (auto a : rule.elements())
    for (auto b : rule.elements()) {
      ASSERT_EQ(rule.mul(a, b), dense.mul(a, b));
      ASSERT_EQ(rule.add(a, b), dense.add(a, b));
    }
}

TEST(Poly, DualNumbersOverF2) {
  auto r = ring_poly_quotient(2, {0, 0, 1});
  auto n = names(r);
  std::sort(n.begin(), n.end());
  EXPECT_EQ(n, (std::vector<std::string>{"0", "1", "1+x", "x"}));
  auto x = *r.find("x");
  EXPECT_EQ(r.mul(x, x), r.zero());
  EXPECT_EQ(ring_nilpotency_index(r, x), 2u);
  EXPECT_TRUE(is_commutative(r));
}

TEST(Poly, RejectsNonPrimeOrNonMonic) {
  EXPECT_THROW(ring_poly_quotient(4, {0, 1}), InvalidParameter);
  EXPECT_THROW(ring_poly_quotient(2, {1, 0}), InvalidParameter);
}

TEST(Monomial, StaircaseQuotientHasNineMonomials) {
  auto r = ring_monomial_quotient(2, {"x", "y"}, {{4, 0}, {1, 2}, {3, 1}, {0, 4}});
  EXPECT_EQ(r.size(), 512u);
  auto x = *r.find("x"), y = *r.find("y");
  EXPECT_EQ(r.name(r.mul(r.mul(x, x), y)), "x^2y");
  EXPECT_EQ(r.mul(x, r.mul(y, y)), r.zero());
}

TEST(PathAlgebra, OneArrowQuiver) {
  auto r = ring_path_algebra({2, {{"a", 2, 1}}}, 2);
  EXPECT_EQ(r.size(), 8u);
  auto a = *r.find("a"), e1 = *r.find("e1"), e2 = *r.find("e2");
  EXPECT_EQ(r.mul(a, a), r.zero());
  EXPECT_EQ(r.mul(e1, a), a);
  EXPECT_EQ(r.mul(a, e2), a);
  EXPECT_EQ(r.mul(a, e1), r.zero());
  EXPECT_EQ(r.add(e1, e2), r.one());
  EXPECT_TRUE(check_ring_axioms(r).ok());
}

TEST(PathAlgebra, RejectsCycles) { EXPECT_THROW(ring_path_algebra({1, {{"l", 1, 1}}}, 2), UnsupportedPredicate); }

TEST(Product, SizesMultiplyAndIdempotentsSplit) {
  auto r = ring_product(ring_zmod(2), ring_zmod(3));
  EXPECT_EQ(r.size(), 6u);
  EXPECT_TRUE(is_reduced_ring(r));
  EXPECT_TRUE(check_ring_axioms(r).ok());
}

TEST(Dorroh, UnitalizationOfTwoZMod4) {
  auto r = ring_dorroh(two_z_mod_4(), 2);
  EXPECT_EQ(r.size(), 4u);
  EXPECT_TRUE(check_ring_axioms(r).ok());
  EXPECT_EQ(r.mul(r.one(), r.one()), r.one());
}

TEST(Tables, RejectBadMultiplication) {
  const std::vector<std::vector<std::uint32_t>> z3{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  EXPECT_THROW(ring_from_tables({{0, 1}, {1, 0}}, {{1, 1}, {1, 1}}), InvalidArgument);  // no identity
  // Unital, but 2 * (1 + 1) = 2 while 2 + 2 = 1.
  EXPECT_THROW(ring_from_tables(z3, {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}}), InvalidArgument);
}

TEST(Tables, RejectTrivialRing) { EXPECT_THROW(ring_from_tables({{0}}, {{0}}), InvalidArgument); }

TEST(Quotient, Zmod12ByIdeal4) {
  auto r = ring_zmod(12);
  ElementSet i(12);
  for (std::uint32_t x : {0u, 4u, 8u}) i.insert(x);
  auto q = quotient_ring(r, i);
  EXPECT_EQ(q.size(), 4u);
  EXPECT_TRUE(check_ring_axioms(q).ok());
}

TEST(Ideals, ZmodFourChain) {
  auto r = ring_zmod(4);
  auto ls = left_ideals(r);
  ASSERT_EQ(ls.size(), 3u);
  EXPECT_EQ(ls[0].size(), 1u);
  EXPECT_EQ(ls[1].size(), 2u);
  EXPECT_EQ(ls[2].size(), 4u);
  EXPECT_EQ(two_sided_ideals(r).size(), 3u);
}

TEST(Ideals, MatrixRingIsSimpleWithFiveLeftIdeals) {
  auto r = ring_matrix(ring_zmod(2), 2);
  EXPECT_EQ(two_sided_ideals(r).size(), 2u);
  // 0, R and the three column ideals.
  EXPECT_EQ(left_ideals(r).size(), 5u);
}

TEST(Ideals, MatchOracleEnumeration) {
  std::vector<FiniteRing> rings{ring_zmod(12), ring_zmod(36), ring_poly_quotient(2, {0, 0, 0, 1}),
                                ring_matrix(ring_zmod(2), 2), ring_path_algebra({2, {{"a", 2, 1}}}, 2),
                                ring_product(ring_zmod(4), ring_zmod(2)), ring_dorroh(two_z_mod_4(), 2)};
  for (const auto& r : rings) {
    std::set<oracle::Set> lib, ref;
    for (const auto& i : left_ideals(r)) lib.insert(oracle::to_set(i.elements));
    for (const auto& i : oracle::left_ideals(r)) ref.insert(i);
    EXPECT_EQ(lib, ref) << r.presentation();
    std::set<oracle::Set> lib2, ref2;
    for (const auto& i : two_sided_ideals(r)) lib2.insert(oracle::to_set(i.elements));
    for (const auto& i : oracle::two_sided_ideals(r)) ref2.insert(i);
    EXPECT_EQ(lib2, ref2) << r.presentation();
  }
}

TEST(Jacobson, Examples) {
  EXPECT_EQ(oracle::to_set(jacobson_radical(ring_zmod(4)).elements), (oracle::Set{0, 2}));
  auto r = ring_poly_quotient(2, {0, 0, 0, 1});
  std::set<std::string> got;
  for (auto a : jacobson_radical(r).elements.to_vector()) got.insert(r.name({a}));
  EXPECT_EQ(got, (std::set<std::string>{"0", "x", "x^2", "x+x^2"}));
  EXPECT_TRUE(is_semisimple_ring(ring_matrix(ring_zmod(2), 2)));
  EXPECT_FALSE(is_semisimple_ring(ring_path_algebra({2, {{"a", 2, 1}}}, 2)));
}

TEST(Jacobson, MatchesIntersectionOfMaximalLeftIdeals) {
  std::vector<FiniteRing> rings{ring_zmod(72), ring_zmod(30), ring_poly_quotient(3, {0, 0, 1}),
                                ring_matrix(ring_zmod(2), 2), ring_matrix(ring_zmod(3), 2),
                                ring_product(ring_zmod(4), ring_poly_quotient(2, {0, 0, 1})),
                                ring_path_algebra({2, {{"a", 2, 1}}}, 2),
                                ring_monomial_quotient(2, {"x", "y"}, {{2, 0}, {0, 2}})};
  for (const auto& r : rings)
    EXPECT_EQ(oracle::to_set(jacobson_radical(r).elements), oracle::jacobson(r)) << r.presentation();
}

TEST(Ideals, NilAndDense) {
  auto r = ring_zmod(4);
  Ideal i{r, ElementSet::from(4, std::vector<std::uint32_t>{0, 2}), Sidedness::left};
  EXPECT_TRUE(is_nil_left_ideal(r, i));
  EXPECT_FALSE(is_dense_left_ideal(r, i));
  Ideal all{r, ElementSet::full(4), Sidedness::left};
  EXPECT_TRUE(is_dense_left_ideal(r, all));
  Ideal bad{r, ElementSet::from(4, std::vector<std::uint32_t>{0, 1}), Sidedness::left};
  EXPECT_THROW(is_nil_left_ideal(r, bad), InvalidArgument);
}
