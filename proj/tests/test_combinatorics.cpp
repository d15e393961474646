#include "maroni/combinatorics.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace maroni;

TEST(HurwitzParams, DerivesKAndBranchCount) {
  const auto p = HurwitzParams::make(4, 3);
  EXPECT_EQ(p.k, 1);
  EXPECT_EQ(p.b, 12);
  EXPECT_EQ(HurwitzParams::from_k(3, 2).g, 4);
}

TEST(HurwitzParams, RejectsGenusNotDivisible) {
  EXPECT_THROW(HurwitzParams::make(3, 3), DomainError);
  EXPECT_THROW(HurwitzParams::make(3, 0), DomainError);
  EXPECT_THROW(HurwitzParams::make(2, 2), DomainError);
  try {
    HurwitzParams::make(3, 3);
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("g=(d-1)k"), std::string::npos);
  }
}

TEST(Partitions, DegreeThree) {
  const auto ps = enumerate_partitions(3);
  ASSERT_EQ(ps.size(), 3u);
  EXPECT_EQ(ps[0].parts(), (std::vector<int>{3}));
  EXPECT_EQ(ps[1].parts(), (std::vector<int>{2, 1}));
  EXPECT_EQ(ps[2].parts(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(ps[0].m(), 3);
  EXPECT_EQ(ps[1].m(), 2);
  EXPECT_EQ(ps[2].m(), 1);
}

TEST(Partitions, DegreeOneAndFive) {
  ASSERT_EQ(enumerate_partitions(1).size(), 1u);
  const auto ps = enumerate_partitions(5);
  ASSERT_EQ(ps.size(), 7u);
  const auto find = [&](std::vector<int> parts) {
    return *std::find_if(ps.begin(), ps.end(), [&](const Partition& p) { return p.parts() == parts; });
  };
  EXPECT_EQ(find({4, 1}).m(), 4);
  EXPECT_EQ(find({3, 2}).m(), 6);
}

TEST(Partitions, RejectsNonPositiveDegree) {
  EXPECT_THROW(enumerate_partitions(0), DomainError);
  EXPECT_THROW(enumerate_partitions(-2), DomainError);
}

TEST(Partitions, MatchFilterOracleUpToTwelve) {
  for (int d = 1; d <= 12; ++d) {
    const auto ps = enumerate_partitions(d);
    EXPECT_EQ(static_cast<std::int64_t>(ps.size()), oracle::partition_count(d)) << "d=" << d;
    std::set<std::vector<int>> mine, theirs;
    for (const auto& p : ps) mine.insert(p.parts());
    for (const auto& p : oracle::partitions_by_filter(d)) theirs.insert(p);
    EXPECT_EQ(mine, theirs) << "d=" << d;
    EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end())) << "d=" << d;
  }
}

TEST(Partitions, StringForm) {
  EXPECT_EQ(Partition({3, 2, 1}).str(), "(3|2|1)");
  EXPECT_EQ(Partition({1}).str(), "(1)");
  EXPECT_THROW(Partition({1, 2}), DomainError);
  EXPECT_THROW(Partition(std::vector<int>{}), DomainError);
  EXPECT_THROW(Partition({2, 0}), DomainError);
}

TEST(GcdProfile, HandValues) {
  EXPECT_EQ(gcd_profile(Partition({3})).delta, (std::vector<int>{0, 2, 2, 0}));
  EXPECT_EQ(gcd_profile(Partition({1, 1, 1})).delta, (std::vector<int>{0, 0}));
  EXPECT_EQ(gcd_profile(Partition({4})).delta, (std::vector<int>{0, 3, 2, 3, 0}));
  const auto p = gcd_profile(Partition({4, 2}));
  EXPECT_EQ(p.d_table[0], (std::vector<int>{4, 1, 2, 1, 4}));
  EXPECT_EQ(p.d_table[1], (std::vector<int>{2, 1, 2, 1, 2}));
}

TEST(GcdProfile, MatchesOracleAndIsSymmetric) {
  for (int d = 1; d <= 12; ++d) {
    for (const auto& mu : enumerate_partitions(d)) {
      const auto delta = gcd_profile(mu).delta;
      EXPECT_EQ(delta, oracle::delta_of(mu.parts())) << mu.str();
      const int m = mu.m();
      EXPECT_EQ(delta.front(), 0);
      EXPECT_EQ(delta.back(), 0);
      for (int i = 0; i <= m; ++i) {
        EXPECT_GE(delta[i], 0);
        EXPECT_EQ(delta[i], delta[m - i]) << mu.str() << " i=" << i;
      }
    }
  }
}

TEST(BoundaryType, LongDivisionExamples) {
  const auto t = make_boundary_type(HurwitzParams::make(4, 3), 5, Partition({4}));
  EXPECT_EQ(t.n(), 1);
  EXPECT_EQ(t.q, 1);
  EXPECT_EQ(t.r, 1);
  EXPECT_EQ(t.c, 1);
  EXPECT_EQ(t.l, 7);

  const auto u = make_boundary_type(HurwitzParams::make(3, 4), 4, Partition({3}));
  EXPECT_EQ(u.r, 1);
  EXPECT_EQ(u.c, 0);
}

TEST(BoundaryType, Rejections) {
  const auto p = HurwitzParams::make(3, 2);
  EXPECT_THROW(make_boundary_type(p, 3, Partition({1, 1, 1})), AdmissibilityError);
  EXPECT_THROW(make_boundary_type(p, 1, Partition({2, 1})), DomainError);
  EXPECT_THROW(make_boundary_type(p, 7, Partition({2, 1})), DomainError);
  EXPECT_THROW(make_boundary_type(p, 4, Partition({2, 2})), DomainError);
}

TEST(BoundaryType, EnumerationForDegreeThreeGenusTwo) {
  const auto types = enumerate_boundary_types(HurwitzParams::make(3, 2));
  std::vector<std::pair<int, std::string>> got;
  for (const auto& t : types) got.emplace_back(t.j, t.mu.str());
  const std::vector<std::pair<int, std::string>> want{
      {2, "(3)"}, {2, "(1|1|1)"}, {3, "(2|1)"}, {4, "(3)"}, {4, "(1|1|1)"}};
  EXPECT_EQ(got, want);
  for (const auto& t : types) EXPECT_LE(t.j, t.params.b - t.j);
}

TEST(BoundaryType, ImbalanceOnBothSidesAgrees) {
  for (int d = 3; d <= 7; ++d) {
    for (int k = 1; k <= 4; ++k) {
      const auto params = HurwitzParams::from_k(d, k);
      for (const auto& mu : enumerate_partitions(d)) {
        for (int j = 2; j <= params.b - 2; ++j) {
          if ((j + d - mu.n()) % 2 != 0) continue;
          const auto t = make_boundary_type(params, j, mu);
          const auto side = [d](int c) { return std::abs(c) * (std::abs(c) - 2 * (d - 1)); };
          EXPECT_EQ(side(t.c), side(t.cprime));
          EXPECT_GE(t.r, 0);
          EXPECT_LT(t.r, d - 1);
          EXPECT_EQ((j + d - mu.n()) / 2, t.q * (d - 1) + t.r);
          // c only sees j modulo 2(d-1)
          if (j + 2 * (d - 1) <= params.b - 2) {
            EXPECT_EQ(make_boundary_type(params, j + 2 * (d - 1), mu).c, t.c);
          }
        }
      }
    }
  }
}
