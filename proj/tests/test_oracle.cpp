#include <gtest/gtest.h>

#include "isoprod/error.hpp"
#include "isoprod/examples.hpp"
#include "isoprod/aut0.hpp"
#include "isoprod/oracle.hpp"
#include "instances.hpp"

namespace isoprod {
namespace {

TEST(Oracle, EnumerateSubgroup) {
  const AbelianGroup g({4, 4});
  EXPECT_EQ(oracle::enumerate_subgroup(Subgroup::trivial(g)).indices(),
            std::vector<std::int64_t>{0});
  const GroupElement x(g, {2, 2});
  const auto s = oracle::enumerate_subgroup(Subgroup::generate(g, std::span(&x, 1)));
  EXPECT_EQ(s.elements(), (std::vector<GroupElement>{GroupElement::zero(g), x}));
  const AbelianGroup z2({2, 2, 2});
  EXPECT_EQ(oracle::enumerate_subgroup(diagonal_subgroup(z2, 3)).size(), 8u);
}

TEST(Oracle, CapIsEnforced) {
  const AbelianGroup g({64, 64});
  try {
    oracle::enumerate_subgroup(Subgroup::whole(g), 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOracleScale);
  }
}

TEST(Oracle, QuotientFromCensus) {
  const AbelianGroup g({4, 4});
  const GroupElement x(g, {2, 2});
  const auto h = oracle::closure(g, {x});
  const auto census = oracle::order_census(oracle::whole_group(g), h);
  EXPECT_EQ(census, (std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 1}, {2, 3}, {4, 4}}));
  EXPECT_EQ(oracle::brute_quotient(g, h), InvariantFactors({2, 4}));
  EXPECT_EQ(oracle::factors_from_census({{1, 1}, {2, 1}, {3, 2}, {6, 2}}), InvariantFactors({6}));
  EXPECT_EQ(oracle::factors_from_census({{1, 1}, {2, 3}, {3, 2}, {6, 6}}),
            InvariantFactors({2, 6}));
}

TEST(Oracle, KernelWithNoCharactersIsEverything) {
  const AbelianGroup g({2, 3});
  EXPECT_EQ(oracle::brute_kernel(g, {}).size(), 6u);
}

TEST(Oracle, CrossCheckExamples) {
  EXPECT_TRUE(oracle::cross_check(examples::example1(1, 1, 1)).all());
  EXPECT_TRUE(oracle::cross_check(examples::example3(2)).all());
  EXPECT_TRUE(oracle::cross_check(examples::example4()).all());
}

TEST(Oracle, PreAdmissibleAgrees) {
  testing::Rng rng(31);
  for (int k = 0; k < 15; ++k) {
    const AlgebraicDatum d = testing::random_datum_retry(rng);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::int64_t c = 0; c < d.group().order(); ++c) {
        const Character chi = Character::at_index(d.group(), c);
        EXPECT_EQ(pre_admissible(d, i, chi), oracle::brute_pre_admissible(d, i, chi));
      }
  }
}

TEST(OracleProperty, RandomDataAgree) {
  testing::Rng rng(32);
  for (int k = 0; k < 20; ++k) {
    const AlgebraicDatum d = testing::random_datum_retry(rng);
    const auto a = oracle::cross_check(d);
    EXPECT_TRUE(a.all()) << d.group().to_string();
  }
}

}  // namespace
}  // namespace isoprod
