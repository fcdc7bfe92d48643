#pragma once

#include <optional>
#include <string>

#include "facering/hk_rees.hpp"

namespace facering {

inline constexpr int kReportSchemaVersion = 1;

/// Structured report: {schema, schema_version, inputs, mode, s_min, samples,
/// verification, polynomial{monomial, binomial}, multiplicity, bound_check,
/// oracle}. Exact rationals are strings ("8/3"); integers are JSON numbers.
std::string report_to_json(const HKReport& report,
                           const std::optional<std::string>& name = std::nullopt);

std::string report_to_text(const HKReport& report);

std::string mode_to_string(const HKMode& mode);

}  // namespace facering
