#include <gtest/gtest.h>

#include "cohomc/kunneth.hpp"
#include "cohomc/oracle.hpp"

using namespace cohomc;

namespace {

CohomologyGroup ray(std::int64_t lo) { return CohomologyGroup::series(ExponentSupport(1, {at_least(1, 0, lo)})); }

GradedCohomology graded(std::vector<CohomologyGroup> gs) {
  GradedCohomology g;
  g.dimension = static_cast<int>(gs.size()) - 1;
  for (int q = 0; q <= g.dimension; ++q) g.set(q, gs[static_cast<std::size_t>(q)], Provenance::kCatalog);
  return g;
}

}  // namespace

TEST(Tensor, ZeroAnnihilates) {
  EXPECT_TRUE(tensor(CohomologyGroup::zero(), ray(0)).is_zero());
  EXPECT_TRUE(tensor(CohomologyGroup::finite(3), CohomologyGroup::zero()).is_zero());
}

TEST(Tensor, UnitAndScalars) {
  EXPECT_EQ(tensor(CohomologyGroup::finite(1), ray(1)), ray(1));
  EXPECT_EQ(tensor(CohomologyGroup::finite(2), CohomologyGroup::finite(3)), CohomologyGroup::finite(6));
  EXPECT_EQ(tensor(ray(1), CohomologyGroup::finite(2)).summands().size(), 2u);
}

TEST(Tensor, TwoRaysGiveQuadrant) {
  const auto t = tensor(ray(1), ray(1));
  ASSERT_TRUE(t.is_series());
  // Independent count: 1 <= i, j <= 5.
  std::size_t count = 0;
  for (int i = -5; i <= 5; ++i)
    for (int j = -5; j <= 5; ++j) count += (i >= 1 && j >= 1) ? 1 : 0;
  EXPECT_EQ(truncated_dimension(t, 5), static_cast<std::int64_t>(count));
  EXPECT_EQ(count, 25u);
}

TEST(Tensor, PuncturedFactorSplits) {
  const auto punctured = CohomologyGroup::series(remove_point(ExponentSupport::orthant(2), {0, 0}));
  const auto t = tensor(punctured, ray(0));
  EXPECT_EQ(truncated_dimension(t, 6), truncated_dimension(punctured, 6) * 7);
}

TEST(Tensor, DistributesOverSums) {
  const auto sum = CohomologyGroup::direct_sum({ray(1), ray(3)});
  const auto t = tensor(sum, ray(0));
  EXPECT_EQ(t.summands().size(), 2u);
  EXPECT_EQ(truncated_dimension(t, 6), (6 + 4) * 7);
}

TEST(KunnethDegree, AffineLineTimesProjectiveLine) {
  const Catalog cat;
  const auto c1 = cat.lookup(make_affine(1));
  const auto p1 = cat.lookup(make_p1());
  EXPECT_TRUE(groups_equal(kunneth_degree(c1, p1, 1), c1.at(1), 16).equal());
  EXPECT_TRUE(kunneth_degree(c1, p1, 2).is_zero());
  EXPECT_TRUE(kunneth_degree(c1, c1, 0).is_zero());
}

TEST(KunnethDegree, SummandsEnumerateSplits) {
  const auto s = kunneth_summands(graded({CohomologyGroup::finite(1), CohomologyGroup::zero()}),
                                  graded({CohomologyGroup::zero(), ray(1)}), 1);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].p, 0);
  EXPECT_EQ(s[0].product, ray(1));
  EXPECT_TRUE(s[1].product.is_zero());
}

TEST(KunnethDegree, MissingDegreeThrows) {
  GradedCohomology partial;
  partial.dimension = 2;
  partial.set(0, CohomologyGroup::zero(), Provenance::kCatalog);
  EXPECT_THROW(kunneth_degree(partial, partial, 2), NotRegistered);
}

TEST(ComputeKunneth, ProductOfProjectiveLineAndAffineLine) {
  const Catalog cat;
  const auto r = compute_kunneth(make_p1_times_c1(), cat);
  EXPECT_TRUE(r.graded.at(0).is_zero());
  ASSERT_TRUE(r.graded.at(1).is_series());
  EXPECT_EQ(r.graded.at(1).as_series().reference_chart, "P1.U1");
  EXPECT_TRUE(r.graded.at(2).is_zero());
  ASSERT_EQ(r.notes.size(), 1u);
  EXPECT_EQ(r.notes.front().id, "c1_coordinate_convention");
  const json j = kunneth_to_json(r);
  EXPECT_EQ(j.at("summands").at("1").size(), 2u);
}

TEST(ComputeKunneth, NonProductRejected) {
  const Catalog cat;
  EXPECT_THROW(compute_kunneth(make_line_bundle(2), cat), NotRegistered);
}
