#pragma once

#include "dunkl/dunkl.hpp"
#include "dunkl/transform.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dunkl {

enum class CaseStatus { pass, fail, skipped };

std::string to_string(CaseStatus s);

struct NumericDetail {
    Complex lhs;
    Complex rhs;
    double abs_residual;
    double rel_residual;
};

struct CaseResult {
    std::string name;
    CaseStatus status = CaseStatus::pass;
    /// "0" for exact identities, the nonzero residual text otherwise, or a
    /// float for numeric checks.
    std::string residual = "0";
    std::string detail;
    std::optional<NumericDetail> numeric;
};

struct VerificationReport {
    std::string suite;
    std::string system;
    std::uint64_t seed = 0;
    std::optional<double> tolerance;
    std::vector<CaseResult> cases;

    bool passed() const;
    std::size_t count(CaseStatus s) const;
    /// Cases sorted by name.
    nlohmann::ordered_json to_json() const;
};

struct SuiteOptions {
    std::string system_label;
    unsigned max_degree = 6;
    unsigned count = 50;
    std::uint64_t seed = 1;
    /// Overrides every numeric tolerance when set.
    std::optional<double> tolerance;
};

/// hobson, commutativity, laplacian-routes, com00, ad-formula, projection,
/// pizzetti, hermite, transforms.
const std::vector<std::string>& suite_names();

/// Runs a named suite; throws InputError for an unknown name.
VerificationReport run_suite(const std::string& name, const DunklContext& ctx, const SuiteOptions& opts);

/// The seven test profiles r^2, r^4, r^(7/2), r^(-2 lambda), e^{-r^2/2},
/// e^{-r^2}, r^3 e^{-r^2}.
std::vector<RadialProfile> standard_profiles(const DunklContext& ctx);

} // namespace dunkl
