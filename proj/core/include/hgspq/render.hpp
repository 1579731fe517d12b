#pragma once

#include <string>
#include <vector>

#include "hgspq/report.hpp"

namespace hgspq {

enum class Format { Table, Json, Csv };

/// "table", "json" or "csv"; DomainError otherwise.
Format parse_format(const std::string& s);

/// Outcome of comparing a report with the exhaustive oracle.
struct VerificationSummary {
  std::string mode;  // "standard", "deep" or "formula"
  std::vector<std::string> failures;
  std::vector<std::string> warnings;
};

/// Deterministic text for `report`. JSON counts are decimal strings.
std::string render(const ClassificationReport& report, Format format,
                   const VerificationSummary* verification = nullptr);

}  // namespace hgspq
