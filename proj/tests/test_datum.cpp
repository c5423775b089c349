#include <gtest/gtest.h>

#include "isoprod/datum.hpp"
#include "isoprod/error.hpp"
#include "isoprod/examples.hpp"
#include "isoprod/oracle.hpp"
#include "instances.hpp"

namespace isoprod {
namespace {

TEST(Validate, Example1) {
  const AlgebraicDatum d = examples::example1(1, 1, 1);
  const DatumReport r = validate_datum(d);
  EXPECT_TRUE(r.minimality.pass);
  EXPECT_TRUE(r.freeness.pass);
  EXPECT_EQ(r.q, 3);
  EXPECT_TRUE(r.is_valid());
  EXPECT_EQ(*r.genera, (std::array<std::int64_t, 3>{3, 3, 3}));
  EXPECT_TRUE(r.flags.kernels_cyclic && r.flags.all_g_prime_one && r.flags.all_genus_at_least_two);
}

TEST(Validate, Example3NotFree) {
  for (std::int64_t n = 1; n <= 3; ++n) {
    const AlgebraicDatum d = examples::example3(n);
    const DatumReport r = validate_datum(d);
    EXPECT_TRUE(r.well_formed());
    EXPECT_FALSE(r.freeness.pass);
    ASSERT_TRUE(r.freeness.witness);
    EXPECT_EQ(*r.freeness.witness, GroupElement(d.group(), {0, n, n}));
  }
}

TEST(Validate, MinimalityWitness) {
  const AlgebraicDatum e = examples::example1(1, 1, 1);
  const AbelianGroup& g = e.group();
  const GroupElement e1 = GroupElement::unit(g, 0);
  std::array<Subgroup, 3> k{Subgroup::generate(g, std::span(&e1, 1)),
                            Subgroup::generate(g, std::span(&e1, 1)), e.kernel(2)};
  const AlgebraicDatum d(g, k, {e.input(0), e.input(1), e.input(2)});
  const DatumReport r = validate_datum(d);
  EXPECT_FALSE(r.minimality.pass);
  EXPECT_EQ(r.minimality.witness, (std::pair<int, int>{0, 1}));
  EXPECT_FALSE(r.well_formed());
}

TEST(Validate, StructuralErrors) {
  const AbelianGroup g({2, 2, 2}), other({2, 2});
  const std::array<Subgroup, 3> k{Subgroup::trivial(g), Subgroup::trivial(g), Subgroup::trivial(g)};
  FactorInput bad{1, {GroupElement::zero(other)}, {}};
  try {
    AlgebraicDatum d(g, k, {bad, bad, bad});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kStructural);
  }
  const AbelianGroup huge({1 << 22});
  const std::array<Subgroup, 3> hk{Subgroup::trivial(huge), Subgroup::trivial(huge),
                                   Subgroup::trivial(huge)};
  try {
    AlgebraicDatum d(huge, hk, {FactorInput{}, FactorInput{}, FactorInput{}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kArithmeticOverflow);
  }
}

TEST(Invariants, Example1) {
  const NumericalInvariants inv = invariants(examples::example1(1, 1, 1));
  EXPECT_EQ(inv.chi_o, -1);
  EXPECT_EQ(inv.euler, -8);
  EXPECT_EQ(inv.k_cubed, 48);
  for (std::int64_t n1 = 1; n1 <= 3; ++n1)
    for (std::int64_t n2 = 1; n2 <= 3; ++n2)
      for (std::int64_t n3 = 1; n3 <= 3; ++n3) {
        const NumericalInvariants x = invariants(examples::example1(n1, n2, n3));
        EXPECT_EQ(x.k_cubed, 48 * n1 * n2 * n3);
        EXPECT_EQ(x.k_cubed + 48 * x.chi_o, 0);
        EXPECT_EQ(x.genera[0], 2 * n2 * n3 + 1);
      }
}

TEST(Rigidity, Classes) {
  EXPECT_EQ(rigidity_class(examples::example1(1, 1, 1)), RigidityClass::kAut0Computable);
  EXPECT_EQ(rigidity_class(examples::example4()), RigidityClass::kKernelOnly);

  const AlgebraicDatum e = examples::example1(1, 1, 1);
  FactorInput f0 = e.input(0);
  f0.g_prime = 2;
  f0.eta.push_back(f0.eta[0]);
  f0.eta.push_back(f0.eta[1]);
  const AlgebraicDatum q4(e.group(), {e.kernel(0), e.kernel(1), e.kernel(2)},
                          {f0, e.input(1), e.input(2)});
  EXPECT_EQ(validate_datum(q4).q, 4);
  EXPECT_EQ(rigidity_class(q4), RigidityClass::kTrivialByRigidity);

  // g' = 0 on the first curve: three branch points of order 2 over G/K_1.
  const AbelianGroup& g = e.group();
  FactorInput r0{0,
                 {GroupElement(g, {0, 1, 0}), GroupElement(g, {0, 0, 1}), GroupElement(g, {0, 1, 1})},
                 {}};
  const AlgebraicDatum q2(g, {e.kernel(0), e.kernel(1), e.kernel(2)}, {r0, e.input(1), e.input(2)});
  EXPECT_EQ(rigidity_class(q2), RigidityClass::kUnsupported);
}

TEST(DatumProperty, VerdictsAgreeWithOracle) {
  testing::Rng rng(4242);
  for (int k = 0; k < 60; ++k) {
    const AlgebraicDatum d = testing::random_datum_retry(rng);
    const DatumReport r = validate_datum(d);
    EXPECT_EQ(r.minimality.witness, oracle::brute_minimality_witness(d));
    EXPECT_EQ(r.freeness.witness, oracle::brute_freeness_witness(d));
    EXPECT_EQ(r.q, 3);
    if (r.freeness.pass) {
      const NumericalInvariants inv = invariants(d);
      EXPECT_EQ(inv.k_cubed, -48 * inv.chi_o);
    }
  }
}

TEST(DatumProperty, PreimageMaskContainsKernel) {
  const AlgebraicDatum d = examples::example4();
  for (std::size_t i = 0; i < 3; ++i) {
    const auto mask = stabilizer_preimage_mask(d, i);
    for (const auto& k : oracle::enumerate_subgroup(d.kernel(i)).elements())
      EXPECT_TRUE(mask[k.index()]);
  }
}

}  // namespace
}  // namespace isoprod
