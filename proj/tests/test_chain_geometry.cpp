#include "maroni/chain_geometry.hpp"

#include "oracles.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace maroni;

namespace {

BoundaryType type(int d, int g, int j, std::vector<int> mu) {
  return make_boundary_type(HurwitzParams::make(d, g), j, Partition(std::move(mu)));
}

}  // namespace

TEST(Intersect, InteriorSelfIntersection) {
  const ChainModel chain(3);
  const auto r1 = FibralDivisor::component(3, 1);
  EXPECT_EQ(intersect(chain, r1, r1), -2);
  const auto r0 = FibralDivisor::component(3, 0);
  EXPECT_EQ(intersect(chain, r0, r0), -1);
  EXPECT_EQ(intersect(chain, r0, r1), 1);
  EXPECT_EQ(intersect(chain, r0, FibralDivisor::component(3, 2)), 0);
}

TEST(Intersect, FullFibreIsNumericallyTrivial) {
  for (int m = 1; m <= 8; ++m) {
    const ChainModel chain(m);
    const auto f = FibralDivisor::full_fibre(m);
    for (int i = 0; i <= m; ++i) EXPECT_EQ(intersect(chain, f, FibralDivisor::component(m, i)), 0);
    EXPECT_EQ(theta_dot(chain, f), -2);
  }
}

TEST(Intersect, LengthMismatch) {
  const ChainModel chain(3);
  EXPECT_THROW(intersect(chain, FibralDivisor::zero(2), FibralDivisor::zero(3)), DomainError);
  EXPECT_THROW(FibralDivisor::zero(2) + FibralDivisor::zero(3), DomainError);
  EXPECT_THROW(ChainModel(0), DomainError);
}

TEST(Intersect, ProperSubsetsAreNegativeDefinite) {
  // Leading principal minors of -Q restricted to R_0..R_{m-1} are positive.
  for (int m = 1; m <= 8; ++m) {
    const auto q = oracle::chain_matrix(m);
    // Gaussian elimination in fractions on -Q without the last row/column.
    std::vector<std::vector<oracle::Frac>> a(m, std::vector<oracle::Frac>(m));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) a[i][j] = oracle::Frac(-q[i][j]);
    }
    for (int p = 0; p < m; ++p) {
      ASSERT_TRUE(oracle::Frac(0) < a[p][p]) << "m=" << m << " pivot " << p;
      for (int i = p + 1; i < m; ++i) {
        const auto f = a[i][p] / a[p][p];
        for (int j = p; j < m; ++j) a[i][j] = a[i][j] - f * a[p][j];
      }
    }
  }
}

TEST(ThetaDot, StandardAPairing) {
  const auto bt = type(3, 4, 4, {3});
  const auto a = a_standard(bt).divisor();
  EXPECT_EQ(theta_dot(ChainModel(3), a), 0);
  const auto bt2 = type(4, 3, 5, {4});
  EXPECT_EQ(theta_dot(ChainModel(4), a_standard(bt2).divisor()), Q("2"));
}

TEST(Shift, Examples) {
  const auto d = FibralDivisor(Qs({"2", "3", "1"}));
  const auto s = shift_and_fibre_part(d);
  EXPECT_EQ(s.shifted, FibralDivisor(Qs({"-1", "0", "-2"})));
  EXPECT_EQ(s.fibre_part, FibralDivisor::full_fibre(2));

  const auto z = shift_and_fibre_part(FibralDivisor::zero(4));
  EXPECT_EQ(z.shifted, FibralDivisor::zero(4));
  EXPECT_EQ(z.fibre_part, FibralDivisor::zero(4));

  const auto n = shift_and_fibre_part(FibralDivisor(Qs({"-1", "-1"})));
  EXPECT_EQ(n.shifted, FibralDivisor::zero(1));
  EXPECT_EQ(n.fibre_part, -FibralDivisor::full_fibre(1));
}

TEST(StandardA, Examples) {
  EXPECT_EQ(a_standard(type(3, 4, 4, {3})).divisor(), FibralDivisor(Qs({"0", "1", "1", "0"})));
  // d=4, j=1 (mod 6) gives c=-1 for mu=(4); j=7 with g=6.
  const auto bt = type(4, 6, 7, {4});
  ASSERT_EQ(bt.c, -1);
  EXPECT_EQ(a_standard(bt).divisor(), FibralDivisor(Qs({"2", "3", "2", "2", "0"})));
  for (int j : {2, 4, 6}) {
    const auto ones = type(3, 4, j, {1, 1, 1});
    const auto a = a_standard(ones).divisor();
    EXPECT_EQ(a[0], Rational(-ones.c) / 2);
    EXPECT_EQ(a[1], 0);
  }
}

TEST(StandardA, DegreesOnTheChain) {
  const auto bt = type(5, 8, 9, {3, 2});
  const auto a = a_standard(bt).divisor();
  const ChainModel chain(bt.m());
  EXPECT_EQ(intersect(chain, a, FibralDivisor::component(bt.m(), 0)), bt.d() - bt.n() - bt.r);
  EXPECT_EQ(intersect(chain, a, FibralDivisor::component(bt.m(), bt.m())), bt.r);
  Rational total = 0;
  for (int i = 0; i <= bt.m(); ++i) total += intersect(chain, a, FibralDivisor::component(bt.m(), i));
  EXPECT_EQ(total, 0);
}

TEST(BranchDivisor, Examples) {
  const auto ones = we_divisor(type(3, 2, 2, {1, 1, 1}));
  EXPECT_EQ(ones.we, FibralDivisor::zero(1));
  EXPECT_EQ(ones.we_sq, 0);
  EXPECT_EQ(we_divisor(type(3, 4, 4, {3})).we_sq, -8);
  const auto four = we_divisor(type(4, 3, 5, {4}));
  EXPECT_EQ(four.we, FibralDivisor(Qs({"0", "3", "2", "3", "0"})));
  EXPECT_EQ(four.we_sq, -20);
}

TEST(BranchDivisor, ClosedFormMatchesDenseMatrixUpToTwelve) {
  for (int d = 1; d <= 12; ++d) {
    for (const auto& mu : enumerate_partitions(d)) {
      const auto delta = oracle::delta_of(mu.parts());
      std::vector<oracle::Frac> w(delta.begin(), delta.end());
      EXPECT_EQ(we_square_closed_form(gcd_profile(mu).delta), from_frac(oracle::pair(w, w))) << mu.str();
    }
  }
}

TEST(NormalSurface, Numbers) {
  const auto bt = type(4, 3, 5, {2, 1, 1});
  ASSERT_EQ(bt.m(), 2);
  const auto unit = normal_surface_numbers(bt, 1, 1, Qs({"0", "0"}), 0);
  EXPECT_EQ(unit.t_sq, -2);
  EXPECT_EQ(unit.c_dot_t, 1);
  const auto two = normal_surface_numbers(bt, 0, 1, Qs({"1", "1"}), 0);
  EXPECT_EQ(two.c_dot_u, 3);
  EXPECT_EQ(two.t_sq, -4);
  // constant coefficients: only the last step a_{m-1} - a_m contributes
  EXPECT_EQ(two.z_sq, -2);
  EXPECT_EQ(two.t_dot_u, -2 + 2 * 1 - 2);
  EXPECT_THROW(normal_surface_numbers(bt, 0, 0, Qs({"1", "1"}), 0), DomainError);
  EXPECT_THROW(normal_surface_numbers(bt, 0, 2, Qs({"1", "1"}), 0), DomainError);
  EXPECT_THROW(normal_surface_numbers(bt, 3, 1, Qs({"1", "1"}), 0), DomainError);
}

TEST(NormalSurface, PushforwardAgainstDenseFormula) {
  const auto bt = type(5, 4, 4, {3, 1, 1});
  ASSERT_EQ(bt.m(), 3);
  const auto coeffs = Qs({"2", "1", "1/2"});
  const auto out = normal_surface_numbers(bt, 0, 1, coeffs, 1);
  // d_{0,i} = 3, 1, 1, 3; a = 2, 1, 1/2, 0
  const oracle::Frac w0 = oracle::Frac(3 * 2) - oracle::Frac(1);
  const oracle::Frac w1 = oracle::Frac(1) - oracle::Frac(1, 2);
  const oracle::Frac w2 = oracle::Frac(1, 2) - oracle::Frac(0);
  EXPECT_EQ(out.pushforward_sq, from_frac(-(w0 * w0 + w1 * w1 + w2 * w2)));
  EXPECT_EQ(out.c_dot_u, 3 * 2 + 2);
  // delta = 0, 2, 2, 0 for (3,1,1)
  const oracle::Frac w = oracle::Frac(2 * 3 * bt.l) - (w0 * oracle::Frac(-2) + w1 * oracle::Frac(0) + w2 * oracle::Frac(2));
  EXPECT_EQ(out.pushforward_dot_w, from_frac(w));
}
