#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgspq/holomorph.hpp"
#include "hgspq/records.hpp"

namespace hgspq {

/// Permutation-isomorphism class labels for N = C_p x| C_q.
///   Hol:  P x| <T, A^(q^(e0-c)), B^(s/d)>,  c >= 1
///   Ptb:  P x| <T, B^(s/d)>
///   M:    M_{u,c} x| <B^(s/d)>, u the class representative
///   E1T:  C_p x| C_{dq^c} not containing P
///   Prod: (C_p x| C_{dq^c}) x C_q
struct MetabClass {
  enum class Kind { Hol, Ptb, M, E1T, Prod };
  Kind kind = Kind::Hol;
  unsigned c = 0;
  u64 u = 0;  // M only
  u64 d = 1;
  std::string key() const;
  friend bool operator==(const MetabClass&, const MetabClass&) = default;
};

/// One instantiated row of the transitive-subgroup table. u is taken
/// modulo q (the group depends on nothing else), lambda in F_p.
struct MetabRowDescriptor {
  unsigned row = 1;
  unsigned c = 0;
  u64 d = 1;
  u64 u = 0;
  u64 lambda = 0;
  u64 mu = 0;
  u64 nu = 0;
  std::vector<MetabCoords> generators;
  MetabClass cls;
  u64 order = 0;
  /// Number of lambda values this descriptor stands for: 1 when realized,
  /// the full lambda range for the lambda = 0 representative otherwise.
  u64 multiplicity = 1;
  std::optional<PermGroup> group;
};

enum class IntersectionKind { Full, E1Line, E2Line, Other };
std::string to_string(IntersectionKind k);

struct TransitivityCheck {
  bool projection_ok = false;
  IntersectionKind intersection = IntersectionKind::Other;
  bool transitive() const {
    return projection_ok && intersection != IntersectionKind::Other;
  }
};

/// Projection of M to R = <T, A, B> must involve T; M n P must be P, <e1>
/// or <e2>. M must lie in Hol(N).
TransitivityCheck check_transitivity_conditions(const PermGroup& m, const MetabHolomorph& hol);

/// Every row over its parameter ranges. Groups are realized when `hol` is
/// given; without it each lambda-orbit is one descriptor with multiplicity.
std::vector<MetabRowDescriptor> enumerate_table1(const PqParams& params,
                                                 const MetabHolomorph* hol = nullptr,
                                                 unsigned threads = 0);

/// Closed-form |Aut(M, M')|.
u64 metab_rel_aut(const MetabClass& cls, const PqParams& params);

std::vector<IsoClassRecord> metab_iso_classes(const PqParams& params,
                                              const std::vector<MetabRowDescriptor>& descriptors);

/// Fills n_hgs (|Aut(N)| = p(p-1)).
void metab_hgs_counts(std::vector<IsoClassRecord>& records, const PqParams& params);

struct MetabTotals {
  u64 enumerated = 0;
  u64 formula = 0;
  u64 non_acg = 0;
  u64 formula_non_acg = 0;
  u64 acg = 0;
  u64 formula_acg = 0;
};

MetabTotals metab_theorem_totals(const PqParams& params,
                                 const std::vector<IsoClassRecord>& records);

struct MetabClassification {
  PqParams params;
  bool realized = false;
  std::vector<MetabRowDescriptor> descriptors;
  std::vector<IsoClassRecord> records;
  MetabTotals totals;
  std::vector<std::string> failures;
  std::vector<Discrepancy> discrepancies;
};

MetabClassification classify_metab(const PqParams& params, const ClassifyOptions& opts = {});

}  // namespace hgspq
