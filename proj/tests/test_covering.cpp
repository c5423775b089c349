#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "isoprod/covering.hpp"
#include "isoprod/error.hpp"
#include "instances.hpp"

namespace isoprod {
namespace {

GroupElement el(const AbelianGroup& g, std::vector<std::int64_t> e) {
  return GroupElement(g, std::move(e));
}

const AbelianGroup kV4({2, 2});

GeneratingVector v4_vector() {
  // Example 1 with n = 1, first curve: Q = G/K_1, branch (e3, e3).
  return {kV4, 1, {el(kV4, {0, 1}), el(kV4, {0, 1})}, {el(kV4, {1, 0}), el(kV4, {0, 1})}};
}

TEST(Validate, Accepts) {
  const GeneratingVector v{kV4, 1, {el(kV4, {1, 0}), el(kV4, {1, 0})},
                           {el(kV4, {1, 0}), el(kV4, {0, 1})}};
  EXPECT_TRUE(validate_generating_vector(v).ok());
  const AbelianGroup z4({4});
  EXPECT_TRUE(validate_generating_vector({z4, 1, {}, {el(z4, {0}), el(z4, {1})}}).ok());
}

TEST(Validate, ReportsEachViolation) {
  const GeneratingVector lone{kV4, 1, {el(kV4, {1, 0})}, {el(kV4, {1, 0}), el(kV4, {0, 1})}};
  EXPECT_TRUE(validate_generating_vector(lone).has(VectorViolationKind::kProductRelation));

  const GeneratingVector bad{kV4, 1, {el(kV4, {0, 0}), el(kV4, {1, 0})}, {el(kV4, {0, 0})}};
  const auto out = validate_generating_vector(bad);
  EXPECT_TRUE(out.has(VectorViolationKind::kTrivialBranchElement));
  EXPECT_TRUE(out.has(VectorViolationKind::kProductRelation));
  EXPECT_TRUE(out.has(VectorViolationKind::kEtaCount));
  EXPECT_TRUE(out.has(VectorViolationKind::kNotGenerating));
  EXPECT_EQ(out.violations.size(), 4u);
}

TEST(Genus, RiemannHurwitz) {
  const AbelianGroup z5({5});
  std::vector<GroupElement> eta(4, el(z5, {1}));
  EXPECT_EQ(genus({z5, 2, {}, eta}), 6);
  EXPECT_EQ(genus(v4_vector()), 3);
  for (std::int64_t n2 = 1; n2 <= 3; ++n2)
    for (std::int64_t n3 = 1; n3 <= 3; ++n3) {
      const AbelianGroup q({2 * n2, 2 * n3});
      const GroupElement s = el(q, {0, n3});
      const GeneratingVector v{q, 1, {s, s}, {el(q, {1, 0}), el(q, {0, 1})}};
      EXPECT_EQ(genus(v), 2 * n2 * n3 + 1);
      const auto t = cw_table(v);
      EXPECT_EQ(std::accumulate(t.begin(), t.end(), std::int64_t{0}), genus(v));
    }
}

TEST(Signature, SortedAscending) {
  const AbelianGroup z6({6});
  const GeneratingVector v{z6, 0, {el(z6, {3}), el(z6, {2}), el(z6, {1})}, {}};
  EXPECT_EQ(signature(v).orders, (std::vector<std::int64_t>{2, 3, 6}));
  EXPECT_EQ(signature(v).to_string(), "[0; 2,3,6]");
}

TEST(Stabilizers, Unions) {
  const GeneratingVector free{kV4, 1, {}, {el(kV4, {1, 0}), el(kV4, {0, 1})}};
  EXPECT_EQ(stabilizer_union(free), std::vector<GroupElement>{GroupElement::zero(kV4)});
  const GeneratingVector one{kV4, 1, {el(kV4, {1, 0}), el(kV4, {1, 0})}, free.eta};
  EXPECT_EQ(stabilizer_union(one),
            (std::vector<GroupElement>{GroupElement::zero(kV4), el(kV4, {1, 0})}));
  const GeneratingVector three{kV4, 0, {el(kV4, {1, 0}), el(kV4, {0, 1}), el(kV4, {1, 1})}, {}};
  EXPECT_EQ(stabilizer_union(three).size(), 4u);
}

TEST(ChevalleyWeil, Example1FirstCurve) {
  const GeneratingVector v = v4_vector();
  EXPECT_EQ(cw_dimension(v, Character::zero(kV4)), 1);
  EXPECT_EQ(cw_dimension(v, Character(kV4, {0, 1})), 1);
  EXPECT_EQ(cw_dimension(v, Character(kV4, {1, 0})), 0);
  EXPECT_EQ(cw_table(v), (std::vector<std::int64_t>{1, 1, 0, 1}));
}

TEST(ChevalleyWeil, TrivialGroup) {
  const AbelianGroup triv;
  const GeneratingVector v{triv, 4, {}, std::vector<GroupElement>(8, GroupElement::zero(triv))};
  EXPECT_EQ(cw_table(v), std::vector<std::int64_t>{4});
  EXPECT_EQ(genus(v), 4);
}

// Random valid vectors over small groups.
std::optional<GeneratingVector> random_vector(testing::Rng& rng) {
  const AbelianGroup q = testing::random_group(rng, 24, 3);
  const std::int64_t gp = testing::uniform(rng, 0, 2);
  GeneratingVector v{q, gp, {}, {}};
  GroupElement sum = GroupElement::zero(q);
  const auto r = testing::uniform(rng, gp == 0 ? 2 : 0, 4);
  for (std::int64_t k = 0; k < r; ++k) {
    GroupElement s = GroupElement::at_index(q, testing::uniform(rng, 1, q.order() - 1));
    sum = sum + s;
    v.branch.push_back(s);
  }
  if (!sum.is_zero()) v.branch.push_back(-sum);
  for (std::int64_t k = 0; k < 2 * gp; ++k) v.eta.push_back(testing::random_element(rng, q));
  if (!validate_generating_vector(v).ok()) return std::nullopt;
  return v;
}

TEST(CoveringProperty, IntegralitySumRuleAndCriterion) {
  testing::Rng rng(314);
  int checked = 0;
  while (checked < 300) {
    auto v = random_vector(rng);
    if (!v) continue;
    ++checked;
    const auto table = cw_table(*v);  // throws on a sum mismatch
    std::int64_t total = 0;
    for (auto d : table) {
      EXPECT_GE(d, 0);
      total += d;
    }
    EXPECT_EQ(total, genus(*v));
    EXPECT_EQ(table[0], v->g_prime);
    if (v->g_prime != 1) continue;
    const auto stab = stabilizer_union(*v);
    for (std::int64_t idx = 1; idx < v->group.order(); ++idx) {
      const Character chi = Character::at_index(v->group, idx);
      const bool moves = std::any_of(stab.begin(), stab.end(), [&](const GroupElement& s) {
        return !pairing(chi, s).is_zero();
      });
      EXPECT_EQ(table[idx] > 0, moves);
    }
  }
}

TEST(CoveringProperty, BranchPermutationInvariance) {
  testing::Rng rng(2718);
  int checked = 0;
  while (checked < 100) {
    auto v = random_vector(rng);
    if (!v) continue;
    ++checked;
    GeneratingVector w = *v;
    std::shuffle(w.branch.begin(), w.branch.end(), rng);
    EXPECT_EQ(genus(w), genus(*v));
    EXPECT_EQ(cw_table(w), cw_table(*v));
    EXPECT_EQ(stabilizer_union(w), stabilizer_union(*v));
    EXPECT_EQ(signature(w), signature(*v));
  }
}

}  // namespace
}  // namespace isoprod
