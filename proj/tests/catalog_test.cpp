#include <gtest/gtest.h>

#include <thread>

#include "cohomc/catalog.hpp"
#include "cohomc/kunneth.hpp"
#include "cohomc/les_engine.hpp"

using namespace cohomc;

TEST(Lookup, Seeds) {
  const Catalog cat;
  const auto p1 = cat.lookup(make_p1());
  EXPECT_EQ(p1.at(0), CohomologyGroup::finite(1));
  EXPECT_TRUE(p1.at(1).is_zero());
  const auto p2 = cat.lookup(make_p2());
  EXPECT_EQ(p2.at(0), CohomologyGroup::finite(1));
  EXPECT_TRUE(p2.at(1).is_zero());
  EXPECT_TRUE(p2.at(2).is_zero());
  const auto c1 = cat.lookup(make_affine(1));
  EXPECT_TRUE(c1.at(0).is_zero());
  EXPECT_EQ(c1.at(1).as_series().support, ExponentSupport(1, {at_least(1, 0, 1)}));
  EXPECT_EQ(c1.at(1).as_series().reference_chart, "P1.U1");
}

TEST(Lookup, AffinePlaneTopDegreeAbsent) {
  const Catalog cat;
  const auto c2 = cat.lookup(make_affine(2));
  EXPECT_TRUE(c2.at(1).is_zero());
  EXPECT_FALSE(c2.has(2));
  EXPECT_THROW(c2.at(2), NotRegistered);
}

TEST(Lookup, HirzebruchAxiomsForEveryTwist) {
  const Catalog cat;
  for (std::int64_t k = -5; k <= 5; ++k) {
    const auto h = cat.lookup(make_hirzebruch(k));
    EXPECT_EQ(h.at(0), CohomologyGroup::finite(1));
    EXPECT_TRUE(h.at(1).is_zero());
    EXPECT_TRUE(h.at(2).is_zero());
    EXPECT_EQ(h.entries.at(1).provenance, Provenance::kAxiom);
  }
}

TEST(Lookup, UnknownSpaceThrows) {
  const Catalog cat;
  EXPECT_THROW(cat.lookup(make_line_bundle(5)), NotRegistered);
}

TEST(Register, KunnethThenAdditiveAgree) {
  Catalog cat;
  const auto product = make_p1_times_c1();
  cat.register_graded(product, compute_kunneth(product, cat).graded);
  const auto additive = compute_additive(builtin_decompositions(make_hirzebruch(1)).front(), cat);
  EXPECT_NO_THROW(cat.register_graded(product, additive.graded));
}

TEST(Register, DisagreementRejected) {
  Catalog cat;
  const auto e = make_line_bundle(-2);
  GradedCohomology g;
  g.dimension = 2;
  g.set(0, CohomologyGroup::zero(), Provenance::kSolved);
  g.set(1, CohomologyGroup::series(ExponentSupport(2, {at_least(2, 0, 1), at_least(2, 1, 0)})), Provenance::kSolved);
  cat.register_graded(e, g);
  g.set(1, CohomologyGroup::series(ExponentSupport(2, {at_least(2, 0, 0), at_least(2, 1, 1)})), Provenance::kSolved);
  // A coordinate swap is not a disagreement under the oracle.
  EXPECT_NO_THROW(cat.register_graded(e, g));
  g.set(1, CohomologyGroup::series(ExponentSupport::orthant(2)), Provenance::kSolved);
  EXPECT_THROW(cat.register_graded(e, g), ConflictingEntry);
}

TEST(Register, CompactnessInvariant) {
  Catalog cat;
  GradedCohomology g;
  g.dimension = 1;
  g.set(0, CohomologyGroup::finite(1), Provenance::kSolved);
  EXPECT_THROW(cat.register_graded(make_cstar(), g), ConflictingEntry);
  g.set(0, CohomologyGroup::zero(), Provenance::kSolved);
  EXPECT_THROW(cat.register_graded(make_p1(), g), ConflictingEntry);
}

TEST(Register, HirzebruchAxiomsAccepted) {
  Catalog cat;
  const auto h = make_hirzebruch(2);
  EXPECT_NO_THROW(cat.register_graded(h, cat.lookup(h)));
}

TEST(Register, MergesNewDegrees) {
  Catalog cat;
  const auto c2 = make_affine(2);
  GradedCohomology g;
  g.dimension = 2;
  g.set(2, CohomologyGroup::finite(4), Provenance::kSolved);
  cat.register_graded(c2, g);
  EXPECT_EQ(cat.lookup(c2).at(2), CohomologyGroup::finite(4));
  EXPECT_TRUE(cat.lookup(c2).at(1).is_zero());
}

TEST(Register, ConcurrentReadersAndWriter) {
  Catalog cat;
  const auto product = make_p1_times_c1();
  const auto g = compute_kunneth(product, cat).graded;
  std::vector<std::thread> threads;
  for (int i = 0; i < 4; ++i)
    threads.emplace_back([&] {
      for (int j = 0; j < 50; ++j) EXPECT_NO_THROW(cat.lookup(make_p1()));
    });
  threads.emplace_back([&] {
    for (int j = 0; j < 5; ++j) cat.register_graded(product, g);
  });
  for (auto& t : threads) t.join();
  EXPECT_TRUE(cat.find(product).has_value());
}

TEST(Dump, ListsSeedsAndFamily) {
  const Catalog cat;
  const json j = cat.dump();
  std::vector<std::string> names;
  for (const auto& e : j.at("entries")) names.push_back(e.at("space"));
  EXPECT_EQ(names, (std::vector<std::string>{"C1", "C2", "P1", "P2", "pt"}));
  EXPECT_EQ(j.at("families")[0].at("family"), "Hirzebruch");
}
