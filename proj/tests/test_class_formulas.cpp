#include "maroni/class_formulas.hpp"

#include "oracles.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace maroni;

namespace {

BoundaryType type(int d, int g, int j, std::vector<int> mu) {
  return make_boundary_type(HurwitzParams::make(d, g), j, Partition(std::move(mu)));
}

}  // namespace

TEST(SigmaSt, Examples) {
  EXPECT_EQ(sigma_st(type(3, 2, 4, {1, 1, 1})), Q("1/7"));
}

TEST(SigmaSt, MatchesStraightLineOracle) {
  for (int d = 3; d <= 6; ++d) {
    for (int k = 1; k <= 3; ++k) {
      for (const auto& bt : enumerate_boundary_types(HurwitzParams::from_k(d, k))) {
        const auto t = oracle::make_type(d, k, bt.j, bt.mu.parts());
        ASSERT_EQ(t.c, bt.c);
        EXPECT_EQ(sigma_st(bt), from_frac(oracle::sigma_st(t))) << "d=" << d << " j=" << bt.j << " " << bt.mu.str();
      }
    }
  }
}

TEST(Lambda, AndPsi) {
  const auto bt = type(3, 2, 4, {1, 1, 1});
  // b = 8: lambda = 4*4/56 - (3 - 3)/12 = 2/7
  EXPECT_EQ(lambda_coeff(bt), Q("2/7"));
  EXPECT_EQ(psi_coeff(bt), Q("16/7"));
  const auto three = type(3, 2, 2, {3});
  // m = 3: 3 (2*6/56 - (3 - 1/3)/12)
  EXPECT_EQ(lambda_coeff(three), Q("3") * (Q("12/56") - Q("8/36")));
}

TEST(SigmaCorr1, AgreesWithCorrectionN) {
  for (int d = 3; d <= 6; ++d) {
    for (int k = 1; k <= 3; ++k) {
      for (const auto& bt : enumerate_boundary_types(HurwitzParams::from_k(d, k))) {
        EXPECT_EQ(sigma_st(bt) - sigma_corr1(bt), correction_n(bt).delta) << "d=" << d << " j=" << bt.j;
      }
    }
  }
}

TEST(SigmaCorr1, TableOneExamples) {
  EXPECT_EQ(sigma_corr1(type(3, 4, 4, {3})), sigma_st(type(3, 4, 4, {3})) - 1);
  EXPECT_EQ(sigma_corr1(type(5, 4, 8, {5})), sigma_st(type(5, 4, 8, {5})) - 2);
}

TEST(SigmaCorr2, OnlyWithUnitPart) {
  EXPECT_FALSE(sigma_corr2(type(3, 4, 4, {3})).has_value());
  const auto bt = type(3, 4, 2, {1, 1, 1});
  ASSERT_TRUE(sigma_corr2(bt).has_value());
  EXPECT_EQ(sigma_st(bt) - *sigma_corr2(bt), 6);
  for (int d = 3; d <= 6; ++d) {
    for (const auto& t : enumerate_boundary_types(HurwitzParams::from_k(d, 2))) {
      if (!t.mu.has_unit_part()) continue;
      EXPECT_EQ(sigma_st(t) - *sigma_corr2(t), correction_ln(t).delta) << "d=" << d << " j=" << t.j;
    }
  }
}

TEST(SigmaMin, NeverAboveStandard) {
  for (int d = 3; d <= 6; ++d) {
    for (const auto& bt : enumerate_boundary_types(HurwitzParams::from_k(d, 2))) {
      const auto best = sigma_min(bt);
      EXPECT_LE(best.value, sigma_st(bt));
      EXPECT_LE(best.value, sigma_corr1(bt));
      if (const auto c2 = sigma_corr2(bt)) EXPECT_LE(best.value, *c2);
    }
  }
  const auto ones = sigma_min(type(3, 4, 2, {1, 1, 1}));
  EXPECT_EQ(ones.achieved_by, ClassVariant::corr2);
  EXPECT_EQ(ones.provenance, "corr2;cond:rational-tail");
  // corr1 gives nothing for mu = 1^3 at j = 2, so st wins the tie
  EXPECT_EQ(sigma_min(type(3, 4, 2, {3})).provenance, "st");
}

TEST(BuildTable, RowsAndOrder) {
  const auto params = HurwitzParams::make(3, 2);
  const auto st = build_table(params, ClassVariant::st);
  ASSERT_EQ(st.rows.size(), 5u);
  EXPECT_EQ(st.rows[4].coefficient, Q("1/7"));
  EXPECT_EQ(build_table(params, ClassVariant::corr1).rows.size(), 5u);
  EXPECT_EQ(build_table(params, ClassVariant::min).rows.size(), 5u);
  const auto c2 = build_table(params, ClassVariant::corr2);
  EXPECT_EQ(c2.rows.size(), 3u);
  for (const auto& r : c2.rows) {
    EXPECT_TRUE(r.bt.mu.has_unit_part());
    EXPECT_EQ(r.provenance, "cond:rational-tail");
  }
}

TEST(Variant, ParseRoundTrip) {
  for (auto v : {ClassVariant::st, ClassVariant::corr1, ClassVariant::corr2, ClassVariant::min}) {
    EXPECT_EQ(parse_variant(to_string(v)), v);
  }
  EXPECT_THROW(parse_variant("corr3"), DomainError);
}

TEST(Patel, PartialMatchesSigma) {
  for (int d = 3; d <= 6; ++d) {
    for (int k = 1; k <= 10; ++k) {
      const auto params = HurwitzParams::from_k(d, k);
      const auto closed = patel_partial(params);
      const auto mine = patel_from_sigma(params);
      EXPECT_EQ(mine.delta, closed.delta) << "d=" << d << " k=" << k;
      EXPECT_EQ(mine.e3, closed.e3) << "d=" << d << " k=" << k;
      if (d >= 4) {
        ASSERT_TRUE(mine.e2.has_value());
        EXPECT_EQ(*mine.e2, closed.e2) << "d=" << d << " k=" << k;
      } else {
        EXPECT_FALSE(mine.e2.has_value());
      }
    }
  }
}

TEST(SpecialValue, ClosedForm) {
  EXPECT_EQ(special_value(1, 1), 0);
  EXPECT_EQ(special_value(2, 1), 2);
  EXPECT_EQ(special_value(1, 3), 2);
  EXPECT_EQ(special_value(3, 2), 11);
  for (int k = 1; k <= 12; ++k) {
    for (int d1 = 1; d1 <= 12; ++d1) {
      EXPECT_EQ(special_value(k, d1) > 0, !(k == 1 && d1 == 1));
    }
  }
  EXPECT_THROW(special_value(0, 1), DomainError);
  EXPECT_THROW(elliptic_tail_gain(1, 3, 1, 1, 0, -1), DomainError);
}

TEST(Trigonal, AllCheckedRowsPass) {
  for (int g = 4; g <= 30; g += 2) {
    const auto report = dp_trigonal_check(g);
    for (const auto& r : report.rows) {
      if (r.checked) {
        EXPECT_TRUE(r.pass) << "g=" << g << " " << r.family << " " << r.parameter << ": " << to_string(r.computed)
                            << " vs " << to_string(r.expected);
      }
    }
    EXPECT_TRUE(report.all_pass());
    // Delta, Delta1 (+lambda, +residual), Delta3, Delta4, H, three skipped families
    const std::size_t expected = 1 + 2 * (g - 1) + g / 2 + (g + 1) + g + 1 + 3;
    EXPECT_EQ(report.rows.size(), expected);
  }
  EXPECT_THROW(dp_trigonal_check(5), DomainError);
  EXPECT_THROW(dp_trigonal_check(2), DomainError);
}
