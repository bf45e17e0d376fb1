#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qlab/identities.hpp"

namespace qlab {

// Rationals travel as "p/q" strings; absent optionals as null.
void to_json(nlohmann::json& j, const VerificationReport& report);
void from_json(const nlohmann::json& j, VerificationReport& report);

std::string reports_tsv(const std::vector<VerificationReport>& reports);

}  // namespace qlab
