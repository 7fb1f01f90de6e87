#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "signed_spectra/enumeration.hpp"
#include "signed_spectra/family.hpp"

namespace signed_spectra {

inline constexpr const char* kToolVersion = "1.0.0";

/// Published (λ1, λmin) of the six order-6 classes, 4 decimals, sorted by λ1.
inline constexpr std::array<std::pair<double, double>, 6> kOrderSixPairs{{
    {1.6180, -2.0},
    {1.7321, -1.7321},
    {1.8608, -2.1149},
    {2.1642, -2.3914},
    {2.3028, -2.0},
    {2.6691, -2.1451},
}};

/// Rounds to 4 decimals the way the published tables print values.
std::string four_decimals(double x);

nlohmann::json class_to_json(const SignedGraphClass& c);
/// `deterministic` drops wall time so repeated runs serialize identically.
nlohmann::json verification_to_json(const VerificationReport& r, bool deterministic);
nlohmann::json family_to_json(const FamilySpectrumReport& r);

/// Classes sorted by λ1 as "index,lambda1,lambda_min,rho,sg1" rows (sg1 with ';' line separators).
std::string classes_to_csv(const std::vector<SignedGraphClass>& classes);

/// Parses the (lambda1, lambda_min) columns of a CSV with a header row.
std::vector<std::pair<double, double>> eigenvalue_pairs_from_csv(const std::string& csv);

/**
 * Matches computed (λ1, λmin) pairs to reference pairs one-to-one within
 * `tolerance` (both lists sorted by λ1 first). Returns false on count mismatch.
 */
bool match_eigenvalue_pairs(std::vector<std::pair<double, double>> computed,
                            std::vector<std::pair<double, double>> reference, double tolerance);

struct ReportDocument {
    std::string tool_version = kToolVersion;
    nlohmann::json config = nlohmann::json::object();
    std::string timestamp;  // empty for deterministic runs
    nlohmann::json results = nlohmann::json::object();
    bool passed = false;
    std::vector<std::string> summary;

    bool operator==(const ReportDocument&) const = default;
};

nlohmann::json to_json(const ReportDocument& doc);
ReportDocument report_from_json(const nlohmann::json& j);

}  // namespace signed_spectra
