#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgspq/cyclic_classify.hpp"
#include "hgspq/metab_classify.hpp"
#include "hgspq/records.hpp"

namespace hgspq {

/// A transitive group realized by structures of both types.
struct BothTypesRow {
  std::string structure;
  std::string cyclic_key;
  std::string metab_key;
  u64 n_hgs_cyclic = 0;
  u64 n_hgs_metab = 0;
  bool acg_cyclic = true;
  bool acg_metab = true;
  /// "witness" when matched by a permutation isomorphism of realized
  /// representatives, "formula" when matched by class parameters.
  std::string evidence = "formula";
};

/// Classes present in both lists. Realized representatives are matched by
/// permutation isomorphism only; otherwise by the parameter rule
/// (prod(c,d) with Type1 (c, X in <alpha_i>, |X| = d); e1T(c,d) with Type2).
std::vector<BothTypesRow> both_types_table(const std::vector<IsoClassRecord>& cyclic,
                                           const std::vector<IsoClassRecord>& metab);

struct ReportTotals {
  std::optional<CyclicTotals> cyclic;
  std::optional<MetabTotals> metab;
  std::optional<u64> both_types;
  std::optional<u64> both_types_formula;      // sigma0(s)(2 e0 + 1)
  std::optional<u64> both_non_acg;
  std::optional<u64> both_non_acg_formula;    // sigma0(s)(e0 - 1)
};

struct ReportOptions {
  ClassifyOptions classify;
  bool cyclic = true;
  bool metabelian = true;
};

struct ClassificationReport {
  u64 p = 0;
  u64 q = 0;
  /// Empty in the unique-structure regime.
  std::optional<PqParams> params;
  std::vector<IsoClassRecord> cyclic;
  std::vector<IsoClassRecord> metabelian;
  std::vector<BothTypesRow> both_types;
  ReportTotals totals;
  std::vector<Discrepancy> discrepancies;
  /// Certification failures on realized classes; empty on success.
  std::vector<std::string> failures;
  bool realized_cyclic = false;
  bool realized_metab = false;
};

/// Validates (p, q) (DomainError) and classifies. When q does not divide
/// p - 1 the report holds the single cyclic-type record.
ClassificationReport build_report(u64 p, u64 q, const ReportOptions& opts = {});

}  // namespace hgspq
