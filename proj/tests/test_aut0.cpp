#include <gtest/gtest.h>

#include "isoprod/aut0.hpp"
#include "isoprod/examples.hpp"
#include "isoprod/oracle.hpp"
#include "instances.hpp"

namespace isoprod {
namespace {

GroupElement triple(const AlgebraicDatum& d, std::vector<std::int64_t> a,
                    std::vector<std::int64_t> b, std::vector<std::int64_t> c) {
  const AbelianGroup& g = d.group();
  return cube_element(d, GroupElement(g, a), GroupElement(g, b), GroupElement(g, c));
}

TEST(PreAdmissible, Example1) {
  const AlgebraicDatum d = examples::example1(1, 1, 1);
  const AbelianGroup& g = d.group();
  EXPECT_FALSE(pre_admissible(d, 0, Character::zero(g)));
  EXPECT_FALSE(pre_admissible(d, 0, Character(g, {0, 1, 0})));
  EXPECT_TRUE(pre_admissible(d, 0, Character(g, {0, 0, 1})));
  EXPECT_FALSE(pre_admissible(d, 0, Character(g, {1, 0, 1})));
}

TEST(Admissible, Example1FamilyOddExponents) {
  for (std::int64_t n = 1; n <= 2; ++n) {
    const AlgebraicDatum d = examples::example1(n, n + 1, 2);
    const std::array<std::int64_t, 3> ns{n, n + 1, 2};
    const AdmissibleSets s = admissible_characters(d);
    EXPECT_TRUE(s.second.empty());
    // phi2^k2 phi3^k3 (x) phi1^k1 phi3^-k3 (x) phi1^-k1 phi2^-k2 with all k odd.
    EXPECT_EQ(static_cast<std::int64_t>(s.first.size()), ns[0] * ns[1] * ns[2]);
    for (const auto& a : s.first) {
      const auto& c = a.triple;
      const std::int64_t k1 = c[1][0], k2 = c[0][1], k3 = c[0][2];
      EXPECT_EQ(c[0][0], 0);
      EXPECT_TRUE(k1 % 2 == 1 && k2 % 2 == 1 && k3 % 2 == 1);
      EXPECT_EQ(c[1][2], (2 * ns[2] - k3) % (2 * ns[2]));
      EXPECT_EQ(c[2][0], (2 * ns[0] - k1) % (2 * ns[0]));
      EXPECT_EQ(c[2][1], (2 * ns[1] - k2) % (2 * ns[1]));
    }
  }
}

TEST(Admissible, Example3OnlySecondKind) {
  const AlgebraicDatum d = examples::example3(1);
  const AbelianGroup& g = d.group();
  const AdmissibleSets s = admissible_characters(d);
  EXPECT_TRUE(s.first.empty());
  ASSERT_EQ(s.second.size(), 2u);
  const Character z = Character::zero(g), p2(g, {0, 1, 0}), p3(g, {0, 0, 1});
  EXPECT_EQ(s.second[0].triple, (std::array<Character, 3>{p3, p3, z}));
  EXPECT_EQ(s.second[1].triple, (std::array<Character, 3>{p2, z, p2}));
}

TEST(Admissible, Example2aMembershipRule) {
  // chi_3 = phi_1^{-k1} phi_2^{-k2} must be nontrivial on e1^n1 e2^n2, with
  // k1 odd forced by the first curve: so k2 is even.
  const AlgebraicDatum d = examples::example2a(2, 2, 1);
  const AdmissibleSets s = admissible_characters(d);
  ASSERT_FALSE(s.first.empty());
  for (const auto& a : s.first) {
    EXPECT_EQ(a.triple[1][0] % 2, 1);
    EXPECT_EQ(a.triple[0][1] % 2, 0);
  }
}

TEST(Admissible, SerialEqualsParallel) {
  testing::Rng rng(21);
  for (int k = 0; k < 20; ++k) {
    const AlgebraicDatum d = testing::random_datum_retry(rng);
    const AdmissibleSets a = admissible_characters(d, Execution::kSerial);
    const AdmissibleSets b = admissible_characters(d, Execution::kParallel);
    ASSERT_EQ(a.first.size(), b.first.size());
    for (std::size_t t = 0; t < a.first.size(); ++t) EXPECT_EQ(a.first[t].triple, b.first[t].triple);
    ASSERT_EQ(a.second.size(), b.second.size());
  }
}

TEST(Kernel, EmptyAdmissibleSetGivesEverything) {
  const AlgebraicDatum d = examples::example1(1, 1, 1);
  EXPECT_EQ(representation_kernel(d, AdmissibleSets{}, 3, 0).order(), d.cube().order());
  EXPECT_EQ(representation_kernel(d, 1, 0).order(), d.cube().order());
  EXPECT_EQ(representation_kernel(d, 0, 0).order(), d.cube().order());
}

TEST(Kernel, Example1Order) {
  const AlgebraicDatum d = examples::example1(1, 1, 1);
  const Subgroup k = representation_kernel(d, 3, 0);
  EXPECT_EQ(k.order(), 256);
  EXPECT_EQ(k.order(), d.k_delta().order() * 4);
  EXPECT_EQ(oracle::brute_representation_kernel(d, 3, 0).size(), 256u);
}

TEST(Kernel, ChainAndDuality) {
  testing::Rng rng(22);
  for (int k = 0; k < 25; ++k) {
    const AlgebraicDatum d = testing::random_datum_retry(rng);
    const AdmissibleSets s = admissible_characters(d);
    const Subgroup g30 = representation_kernel(d, s, 3, 0), g21 = representation_kernel(d, s, 2, 1);
    const Subgroup g20 = representation_kernel(d, s, 2, 0), g11 = representation_kernel(d, s, 1, 1);
    EXPECT_EQ(g30, g21);
    EXPECT_EQ(g20, g11);
    EXPECT_TRUE(g20.contains(g30));
    EXPECT_TRUE(g30.contains(d.k_delta()));
    EXPECT_EQ(representation_kernel(d, s, 0, 3), g30);
    EXPECT_EQ(representation_kernel(d, s, 3, 2), representation_kernel(d, s, 0, 1));
    for (auto [p, q] : {std::pair{3, 0}, {2, 1}, {2, 0}, {1, 1}})
      EXPECT_EQ(isotypic_kernel(d, p, q), representation_kernel(d, s, p, q)) << p << q;
  }
}

TEST(Aut0, Examples) {
  const AlgebraicDatum e1 = examples::example1(1, 1, 1);
  const Aut0Result r1 = aut0(e1);
  EXPECT_EQ(r1.invariant_factors, InvariantFactors({2, 2}));
  EXPECT_EQ(r1.status, Aut0Status::kProven);
  EXPECT_EQ(r1.first_count, 1u);

  const Aut0Result r2 = aut0(examples::example2a(1, 1, 1));
  EXPECT_EQ(r2.invariant_factors, InvariantFactors({2}));
  const AlgebraicDatum e2 = examples::example2a(1, 1, 1);
  EXPECT_EQ(r2.generators, std::vector<GroupElement>{triple(e2, {0, 1, 0}, {0, 0, 0}, {0, 0, 0})});

  const AlgebraicDatum e3 = examples::example3(2);
  const Aut0Result r3 = aut0(e3);
  EXPECT_EQ(r3.status, Aut0Status::kNonFreeKernelOnly);
  EXPECT_EQ(r3.invariant_factors, InvariantFactors({4}));
  EXPECT_EQ(r3.generators, std::vector<GroupElement>{triple(e3, {0, 0, 0}, {1, 0, 0}, {0, 0, 0})});

  const AlgebraicDatum e4 = examples::example4();
  const Aut0Result r4 = aut0(e4);
  EXPECT_EQ(r4.status, Aut0Status::kKernelOnly);
  EXPECT_EQ(r4.invariant_factors, InvariantFactors({2}));
  const GroupElement stated = triple(e4, {0, 0, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 0});
  EXPECT_EQ(r4.generators,
            std::vector<GroupElement>{triple(e4, {0, 0, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 0})});
  EXPECT_EQ(r4.generators[0], canonical_coset_representative(e4, stated));
}

TEST(Aut0, TrivialByRigidityShortCircuits) {
  const AlgebraicDatum e = examples::example1(1, 1, 1);
  FactorInput f0 = e.input(0);
  f0.g_prime = 2;
  f0.eta.insert(f0.eta.end(), {f0.eta[0], f0.eta[1]});
  const AlgebraicDatum d(e.group(), {e.kernel(0), e.kernel(1), e.kernel(2)},
                         {f0, e.input(1), e.input(2)});
  const Aut0Result r = aut0(d);
  EXPECT_EQ(r.status, Aut0Status::kTrivialByRigidity);
  EXPECT_TRUE(r.invariant_factors.is_trivial());
  EXPECT_TRUE(r.generators.empty());
}

TEST(VerifyGenerator, Example1) {
  const AlgebraicDatum d = examples::example1(1, 1, 1);
  EXPECT_TRUE(verify_generator(d, GroupElement::zero(d.cube())));
  EXPECT_TRUE(verify_generator(d, triple(d, {0, 1, 0}, {1, 0, 0}, {0, 0, 0})));
  EXPECT_FALSE(verify_generator(d, triple(d, {0, 1, 0}, {0, 0, 0}, {0, 0, 0})));
}

TEST(CanonicalRepresentative, ThirdComponentZeroAndLeast) {
  const AlgebraicDatum d = examples::example1(1, 2, 1);
  const GroupElement t = triple(d, {1, 3, 1}, {0, 2, 1}, {1, 1, 1});
  const GroupElement rep = canonical_coset_representative(d, t);
  EXPECT_TRUE(d.k_delta().contains(rep - t));
  const std::array<AbelianGroup, 3> parts{d.group(), d.group(), d.group()};
  EXPECT_TRUE(split_element(rep, parts)[2].is_zero());
  for (const auto& x : oracle::enumerate_subgroup(d.k_delta()).elements()) {
    const auto p = split_element(t + x, parts);
    if (p[2].is_zero()) EXPECT_LE(rep, t + x);
  }
}

TEST(Aut0Property, GeneratorsVerifyAndQuotientMatchesOracle) {
  testing::Rng rng(23);
  for (int k = 0; k < 20; ++k) {
    const AlgebraicDatum d = testing::random_datum_retry(rng);
    const Aut0Result r = aut0(d);
    for (const auto& g : r.generators) {
      EXPECT_TRUE(verify_generator(d, g));
      EXPECT_FALSE(d.k_delta().contains(g));
    }
    if (r.status == Aut0Status::kTrivialByRigidity) continue;
    const auto kernel = oracle::brute_representation_kernel(d, 3, 0);
    EXPECT_EQ(r.invariant_factors,
              oracle::brute_quotient(kernel, oracle::enumerate_subgroup(d.k_delta())));
    if (r.status == Aut0Status::kProven) EXPECT_LE(r.invariant_factors.order(), 4);
  }
}

TEST(Aut0Property, RelabelingCoordinatesGivesIsomorphicResult) {
  // Swap the first two coordinates of Example 1 with n1 = n2.
  const AlgebraicDatum d = examples::example1(2, 2, 1);
  const AbelianGroup& g = d.group();
  auto swap = [&](const GroupElement& x) {
    return GroupElement(g, {x[1], x[0], x[2]});
  };
  std::array<Subgroup, 3> k;
  std::array<FactorInput, 3> f;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<GroupElement> gens;
    for (const auto& x : d.kernel(i).generators()) gens.push_back(swap(x));
    k[i] = Subgroup::generate(g, gens);
    f[i].g_prime = d.input(i).g_prime;
    for (const auto& x : d.input(i).branch) f[i].branch.push_back(swap(x));
    for (const auto& x : d.input(i).eta) f[i].eta.push_back(swap(x));
  }
  EXPECT_EQ(aut0(AlgebraicDatum(g, k, f)).invariant_factors, aut0(d).invariant_factors);
}

}  // namespace
}  // namespace isoprod
