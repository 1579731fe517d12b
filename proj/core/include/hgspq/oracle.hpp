#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hgspq/holomorph.hpp"
#include "hgspq/records.hpp"

namespace hgspq {

/// Default largest ambient group the oracle enumerates.
inline constexpr std::size_t kOracleCap = 10'000;

/// Every subgroup of an ambient group, as sorted element-index lists into
/// the ambient table, in canonical order (order, then elements).
class SubgroupLattice {
 public:
  SubgroupLattice(PermGroup ambient, std::vector<std::vector<GroupTable::Index>> members,
                  std::vector<std::vector<GroupTable::Index>> generators,
                  std::vector<std::pair<std::size_t, std::size_t>> edges);

  const PermGroup& ambient() const noexcept { return ambient_; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<GroupTable::Index>& members(std::size_t i) const { return members_[i]; }
  /// (H, K): K was built from H by one cyclic extension.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  std::uint64_t order(std::size_t i) const { return members_[i].size(); }
  bool is_transitive(std::size_t i) const;
  PermGroup group(std::size_t i) const;

 private:
  PermGroup ambient_;
  std::vector<std::vector<GroupTable::Index>> members_;
  std::vector<std::vector<GroupTable::Index>> generators_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// All subgroups by cyclic extension. For solvable G every subgroup K has a
/// subgroup H of prime index normal in K, so extending by elements of
/// N(H) \ H with a prime power in H suffices; otherwise every element is
/// tried. Throws ResourceError if |G| > cap.
SubgroupLattice all_subgroups(const PermGroup& g, std::size_t cap = kOracleCap,
                              unsigned threads = 0);

struct OracleClass {
  PermGroup representative;  // least member
  std::vector<PermGroup> members;
  PermGroup stabilizer;
  u64 rel_aut = 0;
  bool acg = false;
  bool regular = false;
};

/// Partition of `groups` (transitive, same degree) under permutation
/// isomorphism, in canonical order.
std::vector<OracleClass> transitive_classes(std::vector<PermGroup> groups,
                                            std::size_t aut_cap = kAutSearchCap,
                                            unsigned threads = 0);

/// e(G, N) = |class| |Aut(G, G')| / |Aut(N)|.
u64 direct_hgs_count(const OracleClass& cls, u64 aut_n);

struct OracleOptions {
  std::size_t cap = kOracleCap;
  std::size_t aut_cap = kAutSearchCap;
  unsigned threads = 0;
};

struct OracleRun {
  u64 hol_order = 0;
  u64 aut_n = 0;
  std::size_t n_subgroups = 0;
  std::vector<PermGroup> transitive;  // canonical order
  std::vector<OracleClass> classes;
};

/// Exhaustive ground truth for Hol(N).
OracleRun run_oracle(const Holomorph& hol, const OracleOptions& opts = {});

/// Differences between the oracle and classified records. With realized
/// members the transitive-subgroup families and class partitions must
/// agree as element sets; otherwise the per-class
/// (order, #groups, |Aut(M,M')|, #HGS, ACG) multisets are compared.
std::vector<std::string> compare_with_oracle(const OracleRun& run,
                                             const std::vector<IsoClassRecord>& records,
                                             const std::string& side);

/// Checks on the transitive groups M = N x| A containing lambda(N), with
/// A = M_0 <= Aut(N):
///   when N and Aut(N) are abelian, distinct such M admit no isomorphism
///   carrying lambda(N) onto itself;
///   when lambda(N) is characteristic in M, |Aut(M, A)| equals the order of
///   the normalizer of A in Aut(N).
/// The second check needs |Aut(M)| and is skipped for |M| > max_order.
/// Returns a message per violation.
std::vector<std::string> check_regular_normal_properties(const OracleRun& run,
                                                         const Holomorph& hol,
                                                         std::size_t aut_cap = kAutSearchCap,
                                                         std::size_t max_order = 2000);

}  // namespace hgspq
