#include <gtest/gtest.h>

#include "isoprod/checked.hpp"
#include "isoprod/error.hpp"
#include "isoprod/matrix.hpp"
#include "properties.hpp"

namespace isoprod {
namespace {

TEST(Smith, Identity) {
  const IntMatrix a{{1, 0}, {0, 1}};
  const SmithForm f = smith_normal_form(a);
  EXPECT_EQ(f.S, a);
  EXPECT_EQ(f.U, IntMatrix::identity(2));
  EXPECT_EQ(f.V, IntMatrix::identity(2));
}

TEST(Smith, TwoByTwo) {
  const SmithForm f = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  EXPECT_EQ(f.diagonal(), (std::vector<std::int64_t>{2, 4}));
  EXPECT_EQ(testing::check_smith(IntMatrix{{2, 4}, {6, 8}}), "");
}

TEST(Smith, ZeroMatrix) {
  const SmithForm f = smith_normal_form(IntMatrix(2, 2));
  EXPECT_EQ(f.S, IntMatrix(2, 2));
  EXPECT_EQ(f.U, IntMatrix::identity(2));
  EXPECT_EQ(f.V, IntMatrix::identity(2));
}

TEST(Smith, RectangularAndRankDeficient) {
  EXPECT_EQ(smith_normal_form(IntMatrix{{2, 0, 0}, {0, 3, 0}}).diagonal(),
            (std::vector<std::int64_t>{1, 6}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{4, 6}, {8, 12}}).diagonal(),
            (std::vector<std::int64_t>{2, 0}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{0}, {5}, {10}}).diagonal(),
            (std::vector<std::int64_t>{5}));
}

TEST(Smith, OverflowIsReported) {
  const std::int64_t big = std::int64_t{1} << 40;
  const IntMatrix a{{big, big + 1}, {big - 1, big}};
  try {
    a * a;
    FAIL() << "expected overflow";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kArithmeticOverflow);
  }
}

TEST(Determinant, Small) {
  EXPECT_EQ(determinant(IntMatrix{{2, 4}, {6, 8}}), -8);
  EXPECT_EQ(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}), -3);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
}

TEST(Checked, Arithmetic) {
  EXPECT_EQ(checked::mod(-3, 4), 1);
  EXPECT_EQ(checked::floor_div(-3, 2), -2);
  EXPECT_EQ(checked::lcm(4, 6), 12);
  const auto [d, x, y] = checked::ext_gcd(12, 18);
  EXPECT_EQ(d, 6);
  EXPECT_EQ(12 * x + 18 * y, 6);
  EXPECT_THROW(checked::mul(std::int64_t{1} << 62, 4), Error);
}

TEST(SmithProperty, RandomMatrices) {
  testing::Rng rng(20240101);
  for (int k = 0; k < 500; ++k) {
    const IntMatrix a = testing::random_matrix(rng, 6, 20);
    ASSERT_EQ(testing::check_smith(a), "");
  }
}

}  // namespace
}  // namespace isoprod
