#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgspq/ell_subgroups.hpp"
#include "hgspq/holomorph.hpp"
#include "hgspq/records.hpp"

namespace hgspq {

/// A transitive subgroup of Hol(C_pq):
///   Type1: N x| <alpha^(q^(e0-c)), X_1, ..., X_m>,        0 <= c <= e0
///   Type2: J_{t,c} x| <alpha_i^(ell_i^(e_i - c_i))>,      1 <= c <= e0
/// with J_{t,c} = <sigma, [tau, alpha^(t q^(e0-c))]>.
struct CyclicFamilyDescriptor {
  enum class Family { Type1, Type2 };
  Family family = Family::Type1;
  unsigned c = 0;
  std::vector<std::size_t> x;  // Type1: index into the i-th ell-subgroup list
  u64 t = 0;                   // Type2
  std::vector<unsigned> ci;    // Type2
  std::string key;             // class key
  u64 order = 0;
  std::optional<PermGroup> group;
};

/// Subgroup lists of <alpha_i, beta_i>, i = 1..m.
std::vector<std::vector<EllSubgroupDescriptor>> cyclic_ell_subgroups(const PqParams& params);

/// All Type1 and Type2 descriptors. J_{t,c} depends on t only modulo q, so
/// t runs over 1..q-1. Groups are realized when `hol` is given.
std::vector<CyclicFamilyDescriptor> enumerate_transitive_cyclic(
    const PqParams& params, const std::vector<std::vector<EllSubgroupDescriptor>>& ell_subs,
    const CyclicHolomorph* hol, unsigned threads = 0);

/// One record per permutation-isomorphism class, with closed-form values.
std::vector<IsoClassRecord> cyclic_iso_classes(
    const PqParams& params, const std::vector<std::vector<EllSubgroupDescriptor>>& ell_subs,
    const std::vector<CyclicFamilyDescriptor>& descriptors);

/// Fills n_hgs from n_groups and rel_aut (|Aut(N)| = (p-1)(q-1)).
void cyclic_hgs_counts(std::vector<IsoClassRecord>& records, const PqParams& params);

struct CyclicTotals {
  u64 enumerated = 0;
  i64 formula = 0;         // closed-form Sigma values
  i64 formula_direct = 0;  // explicit-sum Sigma values
  u64 non_acg = 0;
  u64 formula_non_acg = 0;
  /// (6r+4) sigma0(s') when p = 2q + 1.
  std::optional<u64> sophie_germain;
};

CyclicTotals cyclic_theorem_totals(const PqParams& params,
                                   const std::vector<IsoClassRecord>& records);

struct CyclicClassification {
  PqParams params;
  bool realized = false;
  std::vector<std::vector<EllSubgroupDescriptor>> ell_subgroups;
  std::vector<CyclicFamilyDescriptor> descriptors;
  std::vector<IsoClassRecord> records;
  CyclicTotals totals;
  std::vector<std::string> failures;
  std::vector<Discrepancy> discrepancies;
};

/// Sites "<prefix>.closed_form", "<prefix>.direct_sum" and
/// "<prefix>.brute_force" where a subgroup count disagrees with the echelon
/// enumeration.
std::vector<Discrepancy> lattice_discrepancies(const EllLatticeReport& r,
                                               const std::string& prefix);

CyclicClassification classify_cyclic(const PqParams& params, const ClassifyOptions& opts = {});

}  // namespace hgspq
