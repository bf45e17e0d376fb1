#include "qlab/cli.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qlab/errors.hpp"
#include "qlab/identities.hpp"
#include "qlab/partitions.hpp"
#include "qlab/report_io.hpp"

namespace qlab {

namespace {

using nlohmann::json;

// A bad command line or input; maps to exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> ids;
  std::uint64_t seed = 0;
  int samples = 5;
  int order = 40;
  std::optional<int> N;
  int N_max = 6;
  int max_n = 10;
  std::string stat;
  std::string format = "json";
  std::string out_path;
  bool strict = false;
  bool timing = false;
  std::vector<std::string> params;
  std::string side = "lhs";
  int j = 2;
  bool positive_only = false;
};

json integer_json(const BigInteger& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

ParamEnv parse_env(const std::vector<std::string>& items) {
  ParamEnv env;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects name=p/q, got '" + item + "'");
    try {
      env[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return env;
}

ParamEnv env_for(const Identity& identity, const std::vector<std::string>& items) {
  ParamEnv env = parse_env(items);
  for (const auto& [name, value] : env) {
    const bool known = std::any_of(identity.params.begin(), identity.params.end(),
                                   [&](const ParamSpec& p) { return p.name == name; });
    if (!known) throw UsageError(identity.id + " has no parameter '" + name + "'");
  }
  for (const auto& p : identity.params) {
    if (!env.contains(p.name)) throw UsageError(identity.id + " needs --param " + p.name + "=p/q");
  }
  return env;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (o.format == f) return;
  }
  throw UsageError("unsupported --format '" + o.format + "'");
}

std::string render_reports(const std::vector<VerificationReport>& reports, const Options& o) {
  if (o.format == "tsv") return reports_tsv(reports);
  const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.pass; });
  json doc{{"reports", reports}, {"total", reports.size()}, {"failed", failed}};
  return doc.dump(2) + "\n";
}

int cmd_verify(const Options& o, std::string& text) {
  require_format(o, {"json", "tsv"});
  if (o.order < 0 || o.samples < 0 || o.N_max < 1) throw UsageError("--order and --samples must be >= 0, --N-max >= 1");
  std::vector<VerificationReport> reports;
  bool ok = true;
  if (!o.params.empty()) {
    if (o.ids.size() != 1) throw UsageError("--param needs exactly one --id");
    const Identity& identity = find_identity(o.ids.front());
    const ParamEnv env = env_for(identity, o.params);
    std::vector<int> Ns;
    if (!identity.finite) Ns.push_back(0);
    else if (o.N) Ns.push_back(*o.N);
    else for (int N = std::max(1, identity.n_min); N <= o.N_max; ++N) Ns.push_back(N);
    for (int N : Ns) {
      try {
        reports.push_back(verify(identity, env, N, o.order, o.timing));
      } catch (const ConstraintViolation& e) {
        throw UsageError(e.what());
      }
      ok = ok && reports.back().pass;
    }
  } else {
    SuiteConfig config;
    config.seed = o.seed;
    config.samples = o.samples;
    config.T = o.order;
    config.N_max = o.N_max;
    config.ids = o.ids;
    config.only_N = o.N;
    config.timing = o.timing;
    for (const auto& id : config.ids) find_identity(id);
    try {
      reports = run_suite(config);
    } catch (const SuiteFailure& failure) {
      reports = failure.reports();
      ok = false;
    }
  }
  text = render_reports(reports, o);
  return ok ? 0 : 1;
}

int cmd_table(const Options& o, std::string& text) {
  require_format(o, {"json", "tsv"});
  if (o.max_n < 0) throw UsageError("--max-n must be >= 0");
  StatisticTable table;
  try {
    table = statistic_table(o.stat, {.max_n = o.max_n, .N = o.N, .j = o.j, .positive_only = o.positive_only});
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.format == "tsv") {
    std::ostringstream os;
    os << "n\tN\tvalue\n";
    for (const auto& row : table.rows) {
      os << row.n << '\t' << (row.N ? std::to_string(*row.N) : "-") << '\t' << row.value.get_str() << '\n';
    }
    text = os.str();
  } else {
    json rows = json::array();
    for (const auto& row : table.rows) {
      rows.push_back({{"n", row.n}, {"N", row.N ? json(*row.N) : json(nullptr)}, {"value", integer_json(row.value)}});
    }
    text = json{{"statistic", table.statistic}, {"rows", rows}}.dump(2) + "\n";
  }
  return 0;
}

int cmd_coeffs(const Options& o, std::string& text) {
  require_format(o, {"list", "json", "tsv"});
  if (o.ids.size() != 1) throw UsageError("coeffs needs exactly one --id");
  if (o.order < 0) throw UsageError("--order must be >= 0");
  const Identity& identity = find_identity(o.ids.front());
  const ParamEnv env = env_for(identity, o.params);
  const int N = o.N.value_or(identity.finite ? std::max(1, identity.n_min) : 0);
  QSeries s;
  try {
    s = build_side(identity, o.side, env, N, o.order);
  } catch (const ConstraintViolation& e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::ostringstream os;
  if (o.format == "list") {
    for (int k = 0; k <= s.order(); ++k) os << (k ? "," : "") << to_string(s[k]);
    os << '\n';
  } else if (o.format == "tsv") {
    os << "k\tcoeff\n";
    for (int k = 0; k <= s.order(); ++k) os << k << '\t' << to_string(s[k]) << '\n';
  } else {
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
    json env_json = json::object();
    for (const auto& [name, value] : env) env_json[name] = to_string(value);
    os << json{{"id", identity.id},
               {"side", o.side},
               {"env", env_json},
               {"N", identity.finite ? json(N) : json(nullptr)},
               {"T", o.order},
               {"coeffs", coeffs}}
              .dump(2)
       << '\n';
  }
  text = os.str();
  return 0;
}

int cmd_positivity(const Options& o, std::string& text) {
  require_format(o, {"json", "tsv"});
  const int N_max = o.N.value_or(8);
  if (N_max < 1) throw UsageError("--N must be >= 1");
  if (o.order < 0) throw UsageError("--order must be >= 0");
  const auto rows = positivity_scan(N_max, o.order);
  bool negative = false;
  std::ostringstream os;
  if (o.format == "tsv") os << "N\tcoeffs\tnegative_orders\n";
  json rows_json = json::array();
  for (const auto& row : rows) {
    negative = negative || !row.negative_orders.empty();
    std::string coeffs, negatives;
    json coeff_json = json::array();
    for (std::size_t k = 0; k < row.coeffs.size(); ++k) {
      coeffs += (k ? "," : "") + to_string(row.coeffs[k]);
      coeff_json.push_back(to_string(row.coeffs[k]));
    }
    for (int k : row.negative_orders) negatives += (negatives.empty() ? "" : ",") + std::to_string(k);
    if (o.format == "tsv") os << row.N << '\t' << coeffs << '\t' << (negatives.empty() ? "-" : negatives) << '\n';
    rows_json.push_back({{"N", row.N}, {"coeffs", coeff_json}, {"negative_orders", row.negative_orders}});
  }
  if (o.format == "json") {
    os << json{{"T", o.order}, {"rows", rows_json}, {"negative_found", negative}}.dump(2) << '\n';
  }
  text = os.str();
  return o.strict && negative ? 1 : 0;
}

int cmd_list(const Options& o, std::string& text) {
  require_format(o, {"json", "tsv"});
  std::ostringstream os;
  json entries = json::array();
  if (o.format == "tsv") os << "id\tkind\tparams\tsides\ttitle\n";
  for (const auto& e : registry()) {
    std::string params, sides;
    json params_json = json::array(), sides_json = json::array();
    for (const auto& p : e.params) {
      params += (params.empty() ? "" : ",") + p.name;
      params_json.push_back({{"name", p.name}, {"q_shift", p.q_shift}, {"unit_disc", p.unit_disc}});
    }
    for (const auto& s : e.sides) {
      sides += (sides.empty() ? "" : ",") + s.label;
      sides_json.push_back(s.label);
    }
    const char* kind = e.scan_only ? "scan" : e.finite ? "finite" : "infinite";
    if (o.format == "tsv") {
      os << e.id << '\t' << kind << '\t' << (params.empty() ? "-" : params) << '\t' << sides << '\t' << e.title
         << '\n';
    }
    entries.push_back({{"id", e.id},
                       {"title", e.title},
                       {"statement", e.statement},
                       {"kind", kind},
                       {"params", params_json},
                       {"sides", sides_json},
                       {"n_min", e.n_min}});
  }
  if (o.format == "json") os << entries.dump(2) << '\n';
  text = os.str();
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of q-series identities and partition statistics", "qlab"};
  app.require_subcommand(1);
  Options o;

  // Defaults differ per subcommand, so each gets its own storage.
  std::map<CLI::App*, std::string> formats;
  std::map<CLI::App*, int> orders;
  auto add_common = [&](CLI::App* cmd, const std::string& format) {
    formats[cmd] = format;
    cmd->add_option("--format", formats[cmd], "Output format")->capture_default_str();
    cmd->add_option("--out", o.out_path, "Write output to this file instead of stdout");
  };
  auto add_order = [&](CLI::App* cmd, int order) {
    orders[cmd] = order;
    cmd->add_option("--order", orders[cmd], "Truncation order T")->capture_default_str();
  };

  auto* verify_cmd = app.add_subcommand("verify", "Check identities on sampled or given parameters");
  verify_cmd->add_option("--id", o.ids, "Identity id (repeatable; default: all)");
  verify_cmd->add_option("--seed", o.seed, "Sampling seed");
  verify_cmd->add_option("--samples", o.samples, "Parameter environments per identity");
  add_order(verify_cmd, 40);
  verify_cmd->add_option("--N", o.N, "Check only this N");
  verify_cmd->add_option("--N-max", o.N_max, "Largest N for finite identities");
  verify_cmd->add_option("--param", o.params, "Fixed parameter name=p/q (with a single --id)");
  verify_cmd->add_flag("--timing", o.timing, "Record elapsed_ms (output is then not reproducible)");
  add_common(verify_cmd, "json");

  auto* table_cmd = app.add_subcommand("table", "Partition statistic table");
  table_cmd->add_option("--stat", o.stat, "Statistic name")->required();
  table_cmd->add_option("--max-n", o.max_n, "Largest n");
  table_cmd->add_option("--N", o.N, "Largest-part bound for restricted statistics");
  table_cmd->add_option("--j", o.j, "Moment order");
  table_cmd->add_flag("--positive-only", o.positive_only, "Sum moments over k >= 1 only");
  add_common(table_cmd, "json");

  auto* coeffs_cmd = app.add_subcommand("coeffs", "Print the coefficients of one side");
  coeffs_cmd->add_option("--id", o.ids, "Identity id")->required();
  coeffs_cmd->add_option("--side", o.side, "Side label (lhs, rhs, rhs2, ...)");
  coeffs_cmd->add_option("--param", o.params, "Parameter name=p/q (repeatable)");
  coeffs_cmd->add_option("--N", o.N, "N for finite identities");
  add_order(coeffs_cmd, 10);
  add_common(coeffs_cmd, "list");

  auto* positivity_cmd = app.add_subcommand("positivity", "Scan the finite crank-minus-rank moment difference");
  positivity_cmd->add_option("--N,--N-max", o.N, "Largest N");
  add_order(positivity_cmd, 50);
  positivity_cmd->add_flag("--strict", o.strict, "Exit 1 if a negative coefficient appears");
  add_common(positivity_cmd, "json");

  auto* list_cmd = app.add_subcommand("list", "Print the identity registry");
  add_common(list_cmd, "json");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  for (const auto& [cmd, format] : formats) {
    if (cmd->parsed()) o.format = format;
  }
  for (const auto& [cmd, order] : orders) {
    if (cmd->parsed()) o.order = order;
  }

  try {
    std::string text;
    int status = 0;
    if (verify_cmd->parsed()) status = cmd_verify(o, text);
    else if (table_cmd->parsed()) status = cmd_table(o, text);
    else if (coeffs_cmd->parsed()) status = cmd_coeffs(o, text);
    else if (positivity_cmd->parsed()) status = cmd_positivity(o, text);
    else status = cmd_list(o, text);

    if (o.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out_path, std::ios::binary);
      if (!file) throw UsageError("cannot write '" + o.out_path + "'");
      file << text;
    }
    return status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const UnknownIdentity& e) {
    err << "error: " << e.what() << '\n';
  } catch (const UnsupportedN& e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace qlab
