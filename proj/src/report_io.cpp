#include "qlab/report_io.hpp"

#include <sstream>

namespace qlab {

namespace {

template <class T>
nlohmann::json or_null(const std::optional<T>& value) {
  return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

nlohmann::json rational_or_null(const std::optional<BigRational>& value) {
  return value ? nlohmann::json(to_string(*value)) : nlohmann::json(nullptr);
}

std::optional<BigRational> read_rational(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return parse_rational(j.at(key).get<std::string>());
}

template <class T>
std::optional<T> read_optional(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::string env_string(const ParamEnv& env) {
  std::string out;
  for (const auto& [name, value] : env) {
    if (!out.empty()) out += ',';
    out += name + "=" + to_string(value);
  }
  return out.empty() ? "-" : out;
}

}  // namespace

void to_json(nlohmann::json& j, const VerificationReport& report) {
  nlohmann::json env = nlohmann::json::object();
  for (const auto& [name, value] : report.env) env[name] = to_string(value);
  j = nlohmann::json{{"id", report.id},
                     {"env", env},
                     {"N", or_null(report.N)},
                     {"T", report.T},
                     {"outcome", report.pass ? "pass" : "fail"},
                     {"first_mismatch_order", or_null(report.first_mismatch_order)},
                     {"lhs_coeff", rational_or_null(report.lhs_coeff)},
                     {"rhs_coeff", rational_or_null(report.rhs_coeff)},
                     {"mismatch_side", or_null(report.mismatch_side)},
                     {"elapsed_ms", report.elapsed_ms}};
}

void from_json(const nlohmann::json& j, VerificationReport& report) {
  report.id = j.at("id").get<std::string>();
  report.env.clear();
  for (const auto& [name, value] : j.at("env").items()) report.env[name] = parse_rational(value.get<std::string>());
  report.N = read_optional<int>(j, "N");
  report.T = j.at("T").get<int>();
  const auto outcome = j.at("outcome").get<std::string>();
  if (outcome != "pass" && outcome != "fail") throw std::invalid_argument("bad outcome '" + outcome + "'");
  report.pass = outcome == "pass";
  report.first_mismatch_order = read_optional<int>(j, "first_mismatch_order");
  report.lhs_coeff = read_rational(j, "lhs_coeff");
  report.rhs_coeff = read_rational(j, "rhs_coeff");
  report.mismatch_side = read_optional<std::string>(j, "mismatch_side");
  report.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
}

std::string reports_tsv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "id\tenv\tN\tT\toutcome\tfirst_mismatch_order\tlhs_coeff\trhs_coeff\tmismatch_side\telapsed_ms\n";
  for (const auto& r : reports) {
    os << r.id << '\t' << env_string(r.env) << '\t' << (r.N ? std::to_string(*r.N) : "-") << '\t' << r.T
       << '\t' << (r.pass ? "pass" : "fail") << '\t'
       << (r.first_mismatch_order ? std::to_string(*r.first_mismatch_order) : "-") << '\t'
       << (r.lhs_coeff ? to_string(*r.lhs_coeff) : "-") << '\t'
       << (r.rhs_coeff ? to_string(*r.rhs_coeff) : "-") << '\t' << r.mismatch_side.value_or("-") << '\t'
       << r.elapsed_ms << '\n';
  }
  return os.str();
}

}  // namespace qlab
