#include "qlab/zq_series.hpp"

#include "gtest/gtest.h"
#include "qlab/laurent_poly.hpp"
#include "qlab/partitions.hpp"

namespace qlab {
namespace {

bool support_bound_holds(const LaurentZQSeries& f) {
  for (int n = 0; n <= f.order(); ++n) {
    for (int k = -f.order(); k <= f.order(); ++k) {
      if (std::abs(k) > n && f.coeff(n, k) != 0) return false;
    }
  }
  return true;
}

TEST(LaurentPoly, Arithmetic) {
  const auto x = LaurentPoly::binomial({BigRational(1), -2});  // 1 - q^{-2}
  EXPECT_EQ(x.valuation(), -2);
  EXPECT_EQ(x.degree(), 0);
  const auto y = x * LaurentPoly::monomial(q_power(2));
  EXPECT_EQ(y, LaurentPoly::binomial(q_power(2)) * LaurentPoly::constant(BigRational(-1)));
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_THROW(x.to_series(3), std::domain_error);
  EXPECT_EQ(y.to_series(1).coeffs()[0], BigRational(-1));
}

TEST(LaurentPoly, QuotientExpansion) {
  // (1 - q^{-3}) / (1 - q^{-1}) = 1 + q^{-1} + q^{-2}
  const auto num = LaurentPoly::binomial({BigRational(1), -3});
  const auto den = LaurentPoly::binomial({BigRational(1), -1});
  const auto quotient = expand_quotient(num, den, 5);
  EXPECT_EQ(quotient, LaurentPoly::from_coeffs(-2, {BigRational(1), BigRational(1), BigRational(1)}));
  // 1 / (1 - q) to q^4
  const auto geometric = expand_quotient(LaurentPoly::constant(BigRational(1)),
                                         LaurentPoly::binomial(q_power(1)), 4);
  EXPECT_EQ(geometric.to_series(4), QSeries::one(4).over_binomial(q_power(1)));
}

TEST(LaurentPoly, PochhammerMatchesSeries) {
  const QMonomial x{BigRational(-2, 3), 1};
  EXPECT_EQ(laurent_pochhammer(x, 4).to_series(20), pochhammer(x, 4, 20));
  EXPECT_EQ(laurent_pochhammer(x, 3, 2).to_series(20), pochhammer(x, 3, 20, 2));
}

TEST(ZQSeries, ZFreeInputs) {
  const auto f = LaurentZQSeries::from_series(pochhammer(q_power(1), kInfinite, 12));
  EXPECT_EQ(at_z_one(apply_z_derivative(f)), QSeries(12));
  EXPECT_TRUE(first_positive_moment(f).is_zero());
  EXPECT_EQ(at_z_one(f), pochhammer(q_power(1), kInfinite, 12));
}

TEST(ZQSeries, PositivePart) {
  LaurentZQSeries f(3);
  f.add(1, 1, BigRational(1));
  f.add(1, -1, BigRational(1));
  const auto g = std::get<LaurentZQSeries>(laurent_extract(f, ExtractMode::PositivePart));
  EXPECT_EQ(g.coeff(1, 1), 1);
  EXPECT_EQ(g.coeff(1, -1), 0);
  EXPECT_THROW(f.add(1, 2, BigRational(1)), std::out_of_range);
  EXPECT_THROW(f.over_binomial(BigRational(1), 2, 1), std::invalid_argument);
}

TEST(ZQSeries, ProductMatchesOverBinomial) {
  const int t = 10;
  // 1 / (1 - z q) built by division and by an explicit geometric sum.
  auto divided = LaurentZQSeries::from_series(QSeries::one(t));
  divided.over_binomial(BigRational(1), 1, 1);
  LaurentZQSeries geometric(t);
  for (int n = 0; n <= t; ++n) geometric.add(n, n, BigRational(1));
  EXPECT_EQ(divided, geometric);
  EXPECT_EQ(divided * LaurentZQSeries::from_series(QSeries::one(t)), geometric);
}

// The crank distribution at z-exponent k, read off the bivariate product,
// matches enumeration for n >= 2.
TEST(ZQSeries, InfiniteCrankProductMatchesEnumeration) {
  const int t = 14;
  const auto f = finite_crank_generating_function(t, t);
  EXPECT_TRUE(support_bound_holds(f));
  for (int n = 2; n <= t; ++n) {
    const auto dist = statistic_distribution(Statistic::Crank, n);
    for (int k = -n; k <= n; ++k) {
      const auto it = dist.find(k);
      const std::int64_t expected = it == dist.end() ? 0 : it->second;
      EXPECT_EQ(f.coeff(n, k), expected) << "n=" << n << " k=" << k;
    }
  }
  // n = 1: M(-1,1) = M(1,1) = 1 and M(0,1) = -1.
  EXPECT_EQ(f.coeff(1, 1), 1);
  EXPECT_EQ(f.coeff(1, -1), 1);
  EXPECT_EQ(f.coeff(1, 0), -1);
}

TEST(ZQSeries, InfiniteRankSumMatchesEnumeration) {
  const int t = 16;
  const auto f = finite_rank_generating_function(t, t);
  EXPECT_TRUE(support_bound_holds(f));
  for (int n = 1; n <= t; ++n) {
    const auto dist = statistic_distribution(Statistic::Rank, n);
    for (const auto& [k, count] : dist) EXPECT_EQ(f.coeff(n, k), count) << "n=" << n << " k=" << k;
  }
}

TEST(ZQSeries, FiniteFunctionsRespectSupport) {
  for (int N = 1; N <= 6; ++N) {
    EXPECT_TRUE(support_bound_holds(finite_crank_generating_function(N, 20)));
    EXPECT_TRUE(support_bound_holds(finite_rank_generating_function(N, 20)));
  }
}

}  // namespace
}  // namespace qlab
