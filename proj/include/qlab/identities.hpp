#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlab/rational.hpp"
#include "qlab/series.hpp"

namespace qlab {

// A parameter is substituted as value * q^q_shift. A shift of 1 gives the
// infinite sums whose terms carry no q-power of their own (e.g. a^n) a
// growing q-order, which keeps every side a computable power series.
struct ParamSpec {
  std::string name;
  int q_shift = 0;
  bool unit_disc = false;  // sample |value| < 1
};

using ParamEnv = std::map<std::string, BigRational>;

struct BuildContext {
  std::map<std::string, QMonomial> values;
  int N = 0;  // 0 for infinite-only identities
  int T = 0;

  const QMonomial& operator[](const std::string& name) const;
};

struct Side {
  std::string label;
  std::string term_order;  // lower bound on the q-order of the k-th summand
  std::function<QSeries(const BuildContext&)> build;
};

struct Pole {
  std::string description;
  std::function<bool(const ParamEnv&)> occurs;
};

struct Identity {
  std::string id;
  std::string title;
  std::string statement;
  std::vector<ParamSpec> params;
  std::vector<Side> sides;  // every side must equal sides[0]
  std::vector<Pole> poles;
  bool finite = false;
  int n_min = 1;
  bool scan_only = false;
};

const std::vector<Identity>& registry();
// Throws UnknownIdentity.
const Identity& find_identity(const std::string& id);
std::string registry_ids();

// First pole hit by env, if any. Missing parameters raise std::invalid_argument.
std::optional<std::string> violated_pole(const Identity& identity, const ParamEnv& env);

// Throws ConstraintViolation on a pole and UnsupportedN when N is outside the
// identity's range (N is ignored by infinite-only identities).
QSeries build_side(const Identity& identity, std::size_t side, const ParamEnv& env, int N, int T);
QSeries build_side(const Identity& identity, const std::string& label, const ParamEnv& env, int N,
                   int T);

struct VerificationReport {
  std::string id;
  ParamEnv env;
  std::optional<int> N;
  int T = 0;
  bool pass = false;
  std::optional<int> first_mismatch_order;
  std::optional<BigRational> lhs_coeff;
  std::optional<BigRational> rhs_coeff;
  std::optional<std::string> mismatch_side;
  std::int64_t elapsed_ms = 0;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

VerificationReport verify(const Identity& identity, const ParamEnv& env, int N, int T,
                          bool timing = true);

struct SuiteConfig {
  std::uint64_t seed = 0;
  int samples = 5;
  int T = 40;
  int N_max = 6;
  std::vector<std::string> ids;  // empty: every non-scan entry
  std::optional<int> only_N;
  bool timing = true;
};

class SuiteFailure : public std::runtime_error {
 public:
  SuiteFailure(std::string what, std::vector<VerificationReport> reports)
      : std::runtime_error(std::move(what)), reports_(std::move(reports)) {}
  const std::vector<VerificationReport>& reports() const { return reports_; }

 private:
  std::vector<VerificationReport> reports_;
};

// Draws `count` distinct admissible environments, deterministic in the seed.
std::vector<ParamEnv> sample_envs(const Identity& identity, std::uint64_t seed, int count);

// Reports sorted by (id, env, N). Throws SuiteFailure if any report fails.
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

enum class MomentKind { Crank, Rank };
// z d/dz -> positive z-part -> z = 1 on the bivariate finite generating
// function, compared with the closed form.
VerificationReport crank_rank_extraction_check(MomentKind kind, int N, int T);

// Infinite first positive crank / rank moment generating functions.
QSeries first_crank_moment_series(int T);
QSeries first_crank_moment_square_form(int T);
QSeries first_rank_moment_series(int T);

struct PositivityRow {
  int N = 0;
  std::vector<BigRational> coeffs;  // orders 0..T
  std::vector<int> negative_orders;
};

// Coefficients of the finite crank-minus-rank moment difference; reports,
// never asserts. T = 0 gives an empty table.
std::vector<PositivityRow> positivity_scan(int N_max, int T);

}  // namespace qlab
