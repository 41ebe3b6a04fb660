#include <gtest/gtest.h>

#include "cohomc/oracle.hpp"

using namespace cohomc;

namespace {

CohomologyGroup ray(std::int64_t lo) { return CohomologyGroup::series(ExponentSupport(1, {at_least(1, 0, lo)})); }

}  // namespace

TEST(GroupsEqual, ZeroMatchesEmptyFinite) {
  for (std::int64_t b : {1, 4, 16}) EXPECT_TRUE(groups_equal(CohomologyGroup::zero(), CohomologyGroup::finite(0), b).equal());
}

TEST(GroupsEqual, RaysDifferAtOrigin) {
  const auto v = groups_equal(ray(1), ray(0), 1);
  EXPECT_EQ(v.kind, VerdictKind::kDiffer);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(*v.witness, ExponentVector{0});
}

TEST(GroupsEqual, FiniteDimensions) {
  EXPECT_TRUE(groups_equal(CohomologyGroup::finite(2), CohomologyGroup::finite(2)).equal());
  EXPECT_EQ(groups_equal(CohomologyGroup::finite(2), CohomologyGroup::finite(3)).kind, VerdictKind::kDiffer);
}

TEST(GroupsEqual, PermutedCoordinates) {
  const auto a = CohomologyGroup::series(ExponentSupport(2, {at_least(2, 0, 2), at_least(2, 1, 0)}));
  const auto b = CohomologyGroup::series(ExponentSupport(2, {at_least(2, 0, 0), at_least(2, 1, 2)}));
  EXPECT_TRUE(groups_equal(a, b, 8).equal());
}

TEST(GroupsEqual, PinnedZeroCoordinateIgnored) {
  const auto flat = CohomologyGroup::series(ExponentSupport(2, {at_least(2, 0, 1), at_least(2, 1, 0), at_most(2, 1, 0)}));
  EXPECT_TRUE(groups_equal(flat, ray(1), 16).equal());
}

TEST(GroupsEqual, DirectSumOrderIrrelevant) {
  const auto a = CohomologyGroup::direct_sum({ray(1), ray(3)});
  const auto b = CohomologyGroup::direct_sum({ray(3), ray(1)});
  EXPECT_TRUE(groups_equal(a, b, 8).equal());
}

TEST(GroupsEqual, MixedShapesWithEqualCountAreIncomparable) {
  // {9,10} twice vs {7,8,9,10}: four points each inside the box.
  const auto sum = CohomologyGroup::direct_sum({ray(9), ray(9)});
  EXPECT_EQ(truncated_dimension(sum, 10), 4);
  EXPECT_EQ(groups_equal(sum, ray(7), 10).kind, VerdictKind::kIncomparable);
  EXPECT_EQ(groups_equal(CohomologyGroup::finite(3), ray(8), 10).kind, VerdictKind::kIncomparable);
  EXPECT_EQ(groups_equal(sum, ray(5), 10).kind, VerdictKind::kDiffer);
}

TEST(GroupsEqual, RejectsBadBound) {
  EXPECT_THROW(groups_equal(ray(1), ray(1), 0), InvalidArgument);
}

TEST(TruncatedDimension, DerivedCounts) {
  std::int64_t orthant = 0, cone = 0;
  for (int n = 0; n <= 10; ++n)
    for (int m = 0; m <= 10; ++m) {
      if (n == 0 && m == 0) continue;
      ++orthant;
      if (m >= n) ++cone;
    }
  const auto e1 = CohomologyGroup::series(remove_point(ExponentSupport::orthant(2), {0, 0}));
  const auto ek = CohomologyGroup::series(
      remove_point(ExponentSupport(2, {at_least(2, 0, 0), at_least(2, 1, 0), LinearConstraint({-1, 1}, 0)}), {0, 0}));
  EXPECT_EQ(truncated_dimension(e1, 10), orthant);
  EXPECT_EQ(truncated_dimension(ek, 10), cone);
  EXPECT_EQ(orthant, 120);
  EXPECT_EQ(cone, 65);
  EXPECT_EQ(truncated_dimension(CohomologyGroup::zero(), 3), 0);
}

TEST(VerdictJson, Shape) {
  const json j = groups_equal(ray(1), ray(0), 2);
  EXPECT_EQ(j.at("verdict"), "Differ");
  EXPECT_EQ(j.at("witness"), json::array({0}));
}
