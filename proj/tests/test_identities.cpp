#include "qlab/identities.hpp"

#include <set>

#include "gtest/gtest.h"
#include "qlab/errors.hpp"
#include "qlab/partitions.hpp"
#include "test_support.hpp"

namespace qlab {
namespace {

ParamEnv env(std::initializer_list<std::pair<const char*, const char*>> items) {
  ParamEnv out;
  for (const auto& [name, value] : items) out[name] = parse_rational(value);
  return out;
}

std::vector<std::string> checked_ids() {
  std::vector<std::string> ids;
  for (const auto& e : registry()) {
    if (!e.scan_only) ids.push_back(e.id);
  }
  return ids;
}

TEST(Registry, Shape) {
  const auto& r = registry();
  ASSERT_EQ(r.size(), 45u);
  for (std::size_t i = 0; i < r.size(); ++i) {
    EXPECT_EQ(r[i].id, (i < 9 ? "R0" : "R") + std::to_string(i + 1));
    EXPECT_GE(r[i].sides.size(), 2u) << r[i].id;
    EXPECT_EQ(r[i].sides[0].label, "lhs") << r[i].id;
    EXPECT_FALSE(r[i].statement.empty());
  }
  EXPECT_TRUE(find_identity("R35").scan_only);
  EXPECT_EQ(checked_ids().size(), 44u);
  EXPECT_THROW(find_identity("R46"), UnknownIdentity);
}

class EachEntry : public ::testing::TestWithParam<std::string> {};

TEST_P(EachEntry, AgreesOnSampledEnvironments) {
  SuiteConfig config;
  config.ids = {GetParam()};
  config.samples = 2;
  config.T = 25;
  config.N_max = 4;
  config.timing = false;
  try {
    const auto reports = run_suite(config);
    EXPECT_FALSE(reports.empty());
  } catch (const SuiteFailure& failure) {
    for (const auto& r : failure.reports()) {
      EXPECT_TRUE(r.pass) << r.id << " side " << r.mismatch_side.value_or("?") << " order "
                          << r.first_mismatch_order.value_or(-1);
    }
  }
}

TEST_P(EachEntry, TruncationIsStable) {
  const Identity& identity = find_identity(GetParam());
  const auto envs = sample_envs(identity, 3, 1);
  for (std::size_t s = 0; s < identity.sides.size(); ++s) {
    const QSeries low = build_side(identity, s, envs[0], 3, 15);
    const QSeries high = build_side(identity, s, envs[0], 3, 24);
    EXPECT_EQ(high.truncate(15), low) << identity.sides[s].label;
  }
}

INSTANTIATE_TEST_SUITE_P(Registry, EachEntry, ::testing::ValuesIn(checked_ids()),
                         [](const auto& info) { return info.param; });

TEST(Verify, StatedExamples) {
  EXPECT_TRUE(verify(find_identity("R01"), env({{"a", "1/2"}, {"b", "1/3"}}), 0, 30).pass);
  const auto four = env({{"a", "1/2"}, {"b", "1/3"}, {"c", "1/5"}, {"d", "1/7"}});
  for (int N = 1; N <= 6; ++N) EXPECT_TRUE(verify(find_identity("R05"), four, N, 40).pass) << N;

  const auto r10 = env({{"a", "1/2"}, {"b", "1/3"}});
  EXPECT_EQ(build_side(find_identity("R10"), "lhs", r10, 3, 25), build_side(find_identity("R10"), "rhs", r10, 3, 25));
}

TEST(Verify, VanishingPochhammer) {
  for (const char* c : {"1/5", "-3", "7/2"}) {
    const auto e = env({{"a", "1/2"}, {"b", "1/3"}, {"c", c}, {"d", c}});
    for (int N = 1; N <= 4; ++N) EXPECT_TRUE(build_side(find_identity("R05"), 0, e, N, 20).is_zero());
  }
}

TEST(Verify, CrankMomentAtNEqualsOne) {
  // q / ((1-q)(1-q^2))
  const auto expected = QSeries::monomial(q_power(1), 10).over_binomial(q_power(1)).over_binomial(q_power(2));
  EXPECT_EQ(build_side(find_identity("R33"), "lhs", {}, 1, 10), expected);
  EXPECT_EQ(build_side(find_identity("R33"), "rhs", {}, 1, 10), expected);
  EXPECT_EQ(testing::integers_of(build_side(find_identity("R35"), 0, {}, 1, 6)),
            (std::vector<long>{0, 1, 0, 1, 0, 1, 0}));
}

TEST(Verify, CorruptedSideIsCaught) {
  Identity corrupted = find_identity("R18");
  const auto original = corrupted.sides[1].build;
  // a^n q^{n+1} in place of a^n q^n
  corrupted.sides[1].build = [original](const BuildContext& ctx) {
    return original(ctx).times(q_power(1));
  };
  const auto report = verify(corrupted, env({{"a", "1/2"}}), 0, 20);
  EXPECT_FALSE(report.pass);
  ASSERT_TRUE(report.first_mismatch_order.has_value());
  EXPECT_EQ(*report.first_mismatch_order, 1);
  EXPECT_EQ(*report.lhs_coeff, make_rational(1, 2));
  EXPECT_EQ(*report.rhs_coeff, 0);
  EXPECT_EQ(*report.mismatch_side, "rhs");
}

TEST(Verify, Errors) {
  const Identity& r01 = find_identity("R01");
  EXPECT_THROW(build_side(r01, 0, env({{"a", "0"}, {"b", "1/2"}}), 0, 10), ConstraintViolation);
  EXPECT_THROW(build_side(r01, 0, env({{"a", "1/2"}}), 0, 10), std::invalid_argument);
  EXPECT_THROW(build_side(r01, "rhs9", env({{"a", "1/2"}, {"b", "1/3"}}), 0, 10), std::invalid_argument);
  EXPECT_THROW(build_side(find_identity("R10"), 0, env({{"a", "1/2"}, {"b", "1/3"}}), -1, 10), UnsupportedN);
  EXPECT_THROW(build_side(find_identity("R42"), 0, {}, 0, 10), UnsupportedN);
  EXPECT_EQ(violated_pole(find_identity("R39"), env({{"a", "6/7"}, {"b", "1/2"}, {"c", "5/3"}, {"t", "2"}})),
            "bt = 1");
  EXPECT_EQ(violated_pole(find_identity("R37"),
                          env({{"A", "2"}, {"B", "3"}, {"C", "1/5"}, {"D", "3/2"}, {"E", "4/5"}})),
            "ABC = DE");
  // Infinite entries ignore N.
  EXPECT_NO_THROW(build_side(find_identity("R29"), 0, {}, -7, 10));
  // With the pole list dropped, the division by zero inside the builder
  // still surfaces as a constraint violation.
  Identity unguarded = find_identity("R43");
  unguarded.poles.clear();
  EXPECT_THROW(build_side(unguarded, 1, env({{"x", "1"}}), 3, 10), ConstraintViolation);
}

TEST(Sampling, DeterministicAdmissibleDistinct) {
  for (const auto& e : registry()) {
    const auto first = sample_envs(e, 11, 5);
    EXPECT_EQ(first, sample_envs(e, 11, 5)) << e.id;
    EXPECT_TRUE(sample_envs(e, 11, 0).empty());
    if (e.params.empty()) {
      EXPECT_EQ(first.size(), 1u);
      continue;
    }
    ASSERT_EQ(first.size(), 5u);
    EXPECT_EQ(std::set<ParamEnv>(first.begin(), first.end()).size(), 5u) << e.id;
    for (const auto& sample : first) {
      EXPECT_FALSE(violated_pole(e, sample).has_value()) << e.id;
      for (const auto& p : e.params) {
        const auto& v = sample.at(p.name);
        EXPECT_LE(BigInteger(abs(v.get_num())), 9);
        EXPECT_LE(BigInteger(v.get_den()), 9);
        if (p.unit_disc) EXPECT_LT(BigRational(abs(v)), 1) << e.id << " " << p.name;
      }
    }
  }
  EXPECT_NE(sample_envs(find_identity("R05"), 1, 3), sample_envs(find_identity("R05"), 2, 3));
}

TEST(Suite, DeterministicAndSorted) {
  SuiteConfig config;
  config.ids = {"R03", "R21", "R42"};
  config.samples = 2;
  config.T = 15;
  config.N_max = 3;
  config.timing = false;
  const auto first = run_suite(config);
  EXPECT_EQ(first, run_suite(config));
  EXPECT_EQ(first.size(), 2u * 3 + 2u * 3 + 3u);
  for (std::size_t i = 1; i < first.size(); ++i) {
    EXPECT_LE(std::tie(first[i - 1].id, first[i - 1].env, first[i - 1].N),
              std::tie(first[i].id, first[i].env, first[i].N));
  }
  config.only_N = 2;
  EXPECT_EQ(run_suite(config).size(), 2u + 2u + 1u);
  config.samples = 0;
  EXPECT_TRUE(run_suite(config).empty());
}

TEST(Moments, ExtractionMatchesClosedForms) {
  for (int N = 1; N <= 6; ++N) {
    EXPECT_TRUE(crank_rank_extraction_check(MomentKind::Crank, N, 30).pass) << N;
    EXPECT_TRUE(crank_rank_extraction_check(MomentKind::Rank, N, 30).pass) << N;
  }
}

TEST(Moments, InfiniteSeriesMatchEnumeration) {
  const int t = 22;
  const auto crank = first_crank_moment_series(t);
  const auto rank = first_rank_moment_series(t);
  EXPECT_EQ(crank, first_crank_moment_square_form(t));
  // The generating function assigns (1) the cranks +-1 and 0 with weights
  // 1, 1, -1, so n = 1 is compared separately.
  EXPECT_EQ(crank[1], 1);
  for (int n = 2; n <= t; ++n) EXPECT_EQ(crank[n], moment(Statistic::Crank, 1, n, true)) << n;
  for (int n = 1; n <= t; ++n) EXPECT_EQ(rank[n], moment(Statistic::Rank, 1, n, true)) << n;
  for (int n = 2; n <= t; ++n) EXPECT_EQ(crank[n] - rank[n], ospt(n)) << n;
}

TEST(Positivity, SmallScan) {
  const auto rows = positivity_scan(4, 30);
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& row : rows) {
    EXPECT_EQ(row.coeffs.size(), 31u);
    EXPECT_TRUE(row.negative_orders.empty()) << row.N;
  }
  EXPECT_TRUE(positivity_scan(4, 0).empty());
}

}  // namespace
}  // namespace qlab
