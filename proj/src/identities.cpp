#include "qlab/identities.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <tuple>

#include "qlab/errors.hpp"
#include "registry_kit.hpp"

namespace qlab {

const QMonomial& BuildContext::operator[](const std::string& name) const {
  const auto it = values.find(name);
  if (it == values.end()) throw std::invalid_argument("parameter '" + name + "' is not bound");
  return it->second;
}

const std::vector<Identity>& registry() {
  static const std::vector<Identity> entries = [] {
    std::vector<Identity> out;
    kit::add_entries(out);
    kit::add_applications(out);
    kit::add_classical(out);
    std::sort(out.begin(), out.end(), [](const Identity& x, const Identity& y) { return x.id < y.id; });
    return out;
  }();
  return entries;
}

const Identity& find_identity(const std::string& id) {
  for (const auto& entry : registry()) {
    if (entry.id == id) return entry;
  }
  throw UnknownIdentity("unknown identity '" + id + "' (known: " + registry_ids() + ")");
}

std::string registry_ids() {
  const auto& r = registry();
  return r.empty() ? std::string() : r.front().id + ".." + r.back().id;
}

std::optional<std::string> violated_pole(const Identity& identity, const ParamEnv& env) {
  for (const auto& p : identity.params) {
    if (!env.contains(p.name)) {
      throw std::invalid_argument(identity.id + ": missing parameter '" + p.name + "'");
    }
  }
  for (const auto& pole : identity.poles) {
    if (pole.occurs(env)) return pole.description;
  }
  return std::nullopt;
}

QSeries build_side(const Identity& identity, std::size_t side, const ParamEnv& env, int N, int T) {
  if (side >= identity.sides.size()) {
    throw std::out_of_range(identity.id + " has no side " + std::to_string(side));
  }
  if (T < 0) throw std::invalid_argument("truncation order must be non-negative");
  if (identity.finite && N < identity.n_min) {
    throw UnsupportedN(identity.id + " needs N >= " + std::to_string(identity.n_min) + ", got " +
                       std::to_string(N));
  }
  if (const auto pole = violated_pole(identity, env)) {
    throw ConstraintViolation(identity.id + ": pole at " + *pole);
  }
  BuildContext ctx;
  ctx.N = identity.finite ? N : 0;
  ctx.T = T;
  for (const auto& p : identity.params) ctx.values[p.name] = QMonomial(env.at(p.name), p.q_shift);
  try {
    return identity.sides[side].build(ctx).truncate(T);
  } catch (const ZeroConstantTerm& e) {
    throw ConstraintViolation(identity.id + " " + identity.sides[side].label + ": " + e.what());
  } catch (const PoleInTermRange& e) {
    throw ConstraintViolation(identity.id + " " + identity.sides[side].label + ": " + e.what());
  }
}

QSeries build_side(const Identity& identity, const std::string& label, const ParamEnv& env, int N, int T) {
  for (std::size_t i = 0; i < identity.sides.size(); ++i) {
    if (identity.sides[i].label == label) return build_side(identity, i, env, N, T);
  }
  throw std::invalid_argument(identity.id + " has no side '" + label + "'");
}

VerificationReport verify(const Identity& identity, const ParamEnv& env, int N, int T, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.id = identity.id;
  report.env = env;
  if (identity.finite) report.N = N;
  report.T = T;
  report.pass = true;
  const QSeries reference = build_side(identity, 0, env, N, T);
  for (std::size_t s = 1; s < identity.sides.size() && report.pass; ++s) {
    const QSeries other = build_side(identity, s, env, N, T);
    for (int k = 0; k <= T; ++k) {
      if (reference[k] != other[k]) {
        report.pass = false;
        report.first_mismatch_order = k;
        report.lhs_coeff = reference[k];
        report.rhs_coeff = other[k];
        report.mismatch_side = identity.sides[s].label;
        break;
      }
    }
  }
  if (timing) {
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  }
  return report;
}

std::vector<ParamEnv> sample_envs(const Identity& identity, std::uint64_t seed, int count) {
  if (count <= 0) return {};
  if (identity.params.empty()) return {ParamEnv{}};

  const auto& all = registry();
  const auto index = static_cast<std::uint32_t>(
      std::find_if(all.begin(), all.end(), [&](const Identity& e) { return e.id == identity.id; }) - all.begin());
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), index};
  std::mt19937_64 rng(seq);

  auto draw = [&](bool unit_disc) {
    for (;;) {
      const long num = static_cast<long>(rng() % 19) - 9;
      const long den = static_cast<long>(rng() % 9) + 1;
      if (unit_disc && std::abs(num) >= den) continue;
      return make_rational(num, den);
    }
  };

  std::vector<ParamEnv> envs;
  std::set<ParamEnv> seen;
  for (int attempts = 0; static_cast<int>(envs.size()) < count; ++attempts) {
    if (attempts > 10000 * count) throw std::runtime_error(identity.id + ": cannot sample admissible parameters");
    ParamEnv env;
    for (const auto& p : identity.params) env[p.name] = draw(p.unit_disc);
    if (violated_pole(identity, env) || !seen.insert(env).second) continue;
    envs.push_back(std::move(env));
  }
  return envs;
}

std::vector<VerificationReport> run_suite(const SuiteConfig& config) {
  std::vector<const Identity*> selected;
  if (config.ids.empty()) {
    for (const auto& entry : registry()) {
      if (!entry.scan_only) selected.push_back(&entry);
    }
  } else {
    for (const auto& id : config.ids) selected.push_back(&find_identity(id));
  }

  std::vector<VerificationReport> reports;
  for (const Identity* identity : selected) {
    std::vector<std::optional<int>> Ns;
    if (!identity->finite) {
      Ns.push_back(std::nullopt);
    } else if (config.only_N) {
      Ns.push_back(*config.only_N);
    } else {
      for (int N = std::max(1, identity->n_min); N <= config.N_max; ++N) Ns.push_back(N);
    }
    for (const auto& env : sample_envs(*identity, config.seed, config.samples)) {
      for (const auto& N : Ns) {
        try {
          reports.push_back(verify(*identity, env, N.value_or(0), config.T, config.timing));
        } catch (const ConstraintViolation& e) {
          // An unlisted pole: the entry's constraint list is incomplete.
          VerificationReport failed{identity->id, env, N, config.T};
          failed.mismatch_side = std::string("error: ") + e.what();
          reports.push_back(std::move(failed));
        }
      }
    }
  }

  std::sort(reports.begin(), reports.end(), [](const VerificationReport& x, const VerificationReport& y) {
    return std::tie(x.id, x.env, x.N) < std::tie(y.id, y.env, y.N);
  });
  const auto failures = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.pass; });
  if (failures > 0) {
    throw SuiteFailure(std::to_string(failures) + " of " + std::to_string(reports.size()) + " checks failed",
                       std::move(reports));
  }
  return reports;
}

VerificationReport crank_rank_extraction_check(MomentKind kind, int N, int T) {
  return verify(find_identity(kind == MomentKind::Crank ? "R33" : "R34"), {}, N, T, false);
}

QSeries first_crank_moment_series(int T) {
  using namespace kit;
  const auto s = sum(T, 1, kInfinite, tri, [&](int n) {
    return mono(scalar(n % 2 == 1 ? 1 : -1) * q(tri(n)), T).over_binomial(q(n));
  });
  return QSeries(s).over_poch(q(1), kInfinite);
}

QSeries first_crank_moment_square_form(int T) {
  using namespace kit;
  return sum(T, 1, kInfinite, [](int k) { return k * k; }, [&](int k) {
    return mono(scalar(k) * q(k * k), T).over_poch(q(1), k).over_poch(q(1), k);
  });
}

QSeries first_rank_moment_series(int T) {
  using namespace kit;
  const auto s = sum(T, 1, kInfinite, [](int n) { return n * (3 * n + 1) / 2; }, [&](int n) {
    return mono(scalar(n % 2 == 1 ? 1 : -1) * q(n * (3 * n + 1) / 2), T).over_binomial(q(n));
  });
  return QSeries(s).over_poch(q(1), kInfinite);
}

std::vector<PositivityRow> positivity_scan(int N_max, int T) {
  std::vector<PositivityRow> rows;
  if (T <= 0) return rows;
  const Identity& difference = find_identity("R35");
  for (int N = 1; N <= N_max; ++N) {
    const QSeries s = build_side(difference, 0, {}, N, T);
    PositivityRow row{N, {s.coeffs().begin(), s.coeffs().end()}, {}};
    for (int k = 0; k <= T; ++k) {
      if (s[k] < 0) row.negative_orders.push_back(k);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qlab
