#include "qlab/series.hpp"

#include <array>
#include <random>

#include "gtest/gtest.h"
#include "qlab/errors.hpp"
#include "qlab/rational.hpp"
#include "test_support.hpp"

namespace qlab {
namespace {

using testing::integers_of;
using testing::pentagonal_series;
using testing::random_series;
using testing::series_of;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-6/4"), BigRational(-3, 2));
  EXPECT_EQ(parse_rational("7"), BigRational(7));
  EXPECT_EQ(to_string(parse_rational("-10/5")), "-2");
  EXPECT_THROW(parse_rational("10/-5"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("0.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_EQ(pow(BigRational(2, 3), -2), BigRational(9, 4));
}

TEST(Series, AddCancels) {
  EXPECT_EQ(series_add(series_of({1, 1}), series_of({1, -1})), series_of({2, 0}));
  const QSeries y = series_of({3, 1, 4, 1, 5});
  EXPECT_EQ(series_add(QSeries(4), y), y);
  EXPECT_TRUE(series_add(pochhammer(q_power(1), kInfinite, 5), -pochhammer(q_power(1), kInfinite, 5)).is_zero());
}

TEST(Series, MismatchedOrdersTruncate) {
  const QSeries s = series_add(series_of({1, 2, 3}), series_of({1, 1, 1, 1, 1}));
  EXPECT_EQ(s.order(), 2);
  EXPECT_EQ(series_mul(series_of({1, 1}), series_of({1, 1, 1})).order(), 1);
}

TEST(Series, GeometricTelescopes) {
  const int t = 12;
  const QSeries geometric = QSeries::one(t).over_binomial(q_power(1));
  const QSeries one_minus_q = QSeries::one(t).times_binomial(q_power(1));
  EXPECT_EQ(series_mul(one_minus_q, geometric), QSeries::one(t));
  EXPECT_EQ(series_inverse(one_minus_q), geometric);
  EXPECT_EQ(series_inverse(QSeries::one(3)), QSeries::one(3));
}

TEST(Series, InverseOfFinitePochhammer) {
  const QSeries p2 = pochhammer(q_power(1), 2, 20);
  EXPECT_EQ(integers_of(p2.truncate(4)), (std::vector<long>{1, -1, -1, 1, 0}));
  EXPECT_EQ(series_mul(p2, series_inverse(p2)), QSeries::one(20));
  EXPECT_EQ(series_inverse(p2), QSeries::one(20).over_poch(q_power(1), 2));
  EXPECT_THROW(series_inverse(series_of({0, 1})), ZeroConstantTerm);
}

TEST(Pochhammer, Examples) {
  EXPECT_EQ(pochhammer({BigRational(5, 7), 3}, 0, 6), QSeries::one(6));
  EXPECT_EQ(integers_of(pochhammer(q_power(1), kInfinite, 7)),
            (std::vector<long>{1, -1, -1, 0, 0, 1, 0, 1}));
}

TEST(Pochhammer, PentagonalOracle) {
  for (int t : {0, 1, 10, 60}) {
    EXPECT_EQ(pochhammer(q_power(1), kInfinite, t), pentagonal_series(t)) << "T=" << t;
  }
}

TEST(Pochhammer, Cocycle) {
  std::mt19937_64 rng(11);
  const int t = 25;
  for (int trial = 0; trial < 40; ++trial) {
    const QMonomial x{make_rational(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 9) + 1),
                      static_cast<int>(rng() % 3)};
    const int n = static_cast<int>(rng() % 7);
    const int m = static_cast<int>(rng() % (13 - n));
    const QSeries lhs = pochhammer(x, n, t) * pochhammer(x * q_power(n), m, t);
    EXPECT_EQ(lhs, pochhammer(x, n + m, t)) << "x=" << x.coefficient << " q^" << x.exponent << " n=" << n << " m=" << m;
  }
}

TEST(Pochhammer, BaseStep) {
  // (q; q^2)_2 = (1 - q)(1 - q^3)
  EXPECT_EQ(integers_of(pochhammer(q_power(1), 2, 5, 2)), (std::vector<long>{1, -1, 0, -1, 1, 0}));
}

TEST(RingLaws, RandomSeries) {
  std::mt19937_64 rng(3);
  const int t = 15;
  for (int trial = 0; trial < 25; ++trial) {
    const QSeries x = random_series(rng, t);
    const QSeries y = random_series(rng, t);
    const QSeries z = random_series(rng, t);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x + y, y + x);
    const QSeries u = random_series(rng, t, true);
    EXPECT_EQ(series_mul(u, series_inverse(u)), QSeries::one(t));
  }
}

TEST(SparseOps, AgreeWithDenseProducts) {
  std::mt19937_64 rng(5);
  const int t = 18;
  const QMonomial x{BigRational(-2, 3), 2};
  for (int trial = 0; trial < 10; ++trial) {
    const QSeries s = random_series(rng, t);
    const QSeries binomial = QSeries::one(t) - QSeries::monomial(x, t);
    EXPECT_EQ(QSeries(s).times_binomial(x), s * binomial);
    EXPECT_EQ(QSeries(s).over_binomial(x), s * series_inverse(binomial));
    EXPECT_EQ(QSeries(s).times(x), s * QSeries::monomial(x, t));
  }
}

TEST(GaussianBinomial, Examples) {
  EXPECT_EQ(integers_of(q_binomial(2, 1, 3)), (std::vector<long>{1, 1, 0, 0}));
  EXPECT_EQ(integers_of(q_binomial(4, 2, 6)), (std::vector<long>{1, 1, 2, 1, 1, 0, 0}));
  EXPECT_TRUE(q_binomial(3, 5, 10).is_zero());
  EXPECT_TRUE(q_binomial(3, -1, 10).is_zero());
  EXPECT_EQ(q_binomial(0, 0, 2), QSeries::one(2));
}

TEST(GaussianBinomial, AgreesWithPochhammerQuotient) {
  const int t = 40;
  for (int N = 0; N <= 9; ++N) {
    for (int n = 0; n <= N; ++n) {
      const QSeries quotient = pochhammer(q_power(1), N, t)
                                   .over_poch(q_power(1), n)
                                   .over_poch(q_power(1), N - n);
      EXPECT_EQ(q_binomial(N, n, t), quotient) << N << "," << n;
    }
  }
}

TEST(GaussianBinomial, SymmetryRecurrencesPositivityDegree) {
  const int t = 80;
  for (int N = 1; N <= 12; ++N) {
    const auto row = q_binomial_row(N, t);
    const auto prev = q_binomial_row(N - 1, t);
    for (int n = 0; n <= N; ++n) {
      const QSeries& b = row[static_cast<std::size_t>(n)];
      EXPECT_EQ(b, row[static_cast<std::size_t>(N - n)]);
      const QSeries lower = n >= 1 ? prev[static_cast<std::size_t>(n - 1)] : QSeries(t);
      const QSeries upper = n <= N - 1 ? prev[static_cast<std::size_t>(n)] : QSeries(t);
      // [N,n] = [N-1,n-1] + q^n [N-1,n] = q^{N-n} [N-1,n-1] + [N-1,n]
      EXPECT_EQ(b, lower + QSeries(upper).times(q_power(n)));
      EXPECT_EQ(b, QSeries(lower).times(q_power(N - n)) + upper);
      int degree = -1;
      for (int k = 0; k <= t; ++k) {
        EXPECT_TRUE(is_integer(b[k]) && b[k] >= 0);
        if (b[k] != 0) degree = k;
      }
      EXPECT_EQ(degree, n * (N - n));
    }
  }
}

TEST(Phi, TrivialArgument) {
  EXPECT_EQ(phi_series({}, {}, {BigRational(0), 0}, std::nullopt, 8), QSeries::one(8));
}

TEST(Phi, QChuVandermonde) {
  // 2phi1(q^{-N}, x/a; x; q, aq) ... summed in its q-shifted form
  // 2phi1(q^{-N}, b; c; q, q) = (c/b)_N b^N / (c)_N, with b = x/a.
  const int t = 30;
  for (int N = 1; N <= 5; ++N) {
    const QMonomial b{BigRational(2, 7), 1};
    const QMonomial c{BigRational(-3, 5), 2};
    const std::array num{q_power(-N), b};
    const std::array den{c};
    const QSeries lhs = phi_series(num, den, q_power(1), std::nullopt, t);
    const QSeries rhs = pochhammer(c / b, N, t).times(b.pow(N)).over_poch(c, N);
    EXPECT_EQ(lhs, rhs) << "N=" << N;
  }
}

TEST(Phi, HeinePair) {
  // 2phi1(a, b; c; q, z) = (b)_inf (az)_inf / ((c)_inf (z)_inf) 2phi1(c/b, z; az; q, b)
  const int t = 30;
  const QMonomial a{BigRational(1, 2), 0};
  const QMonomial b{BigRational(-1, 3), 1};
  const QMonomial c{BigRational(2, 5), 1};
  const QMonomial z{BigRational(3, 4), 1};
  const std::array num1{a, b};
  const std::array den1{c};
  const std::array num2{c / b, z};
  const std::array den2{a * z};
  const QSeries lhs = phi_series(num1, den1, z, std::nullopt, t);
  QSeries rhs = phi_series(num2, den2, b, std::nullopt, t);
  rhs.times_poch(b, kInfinite).times_poch(a * z, kInfinite).over_poch(c, kInfinite).over_poch(z, kInfinite);
  EXPECT_EQ(lhs, rhs);
}

TEST(Phi, ReportsPoleAndNonGrowth) {
  const std::array den{QMonomial{BigRational(1), -1}};
  const std::array num{q_power(-3)};
  EXPECT_THROW(phi_series(num, den, q_power(1), std::nullopt, 10), PoleInTermRange);
  const std::array num2{QMonomial{BigRational(1, 2), 0}};
  EXPECT_THROW(phi_series(num2, {}, {BigRational(1, 3), 0}, std::nullopt, 10), std::invalid_argument);
  EXPECT_NO_THROW(phi_series(num2, {}, {BigRational(1, 3), 0}, 4, 10));
}

}  // namespace
}  // namespace qlab
