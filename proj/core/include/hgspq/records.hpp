#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgspq/arith.hpp"
#include "hgspq/iso.hpp"
#include "hgspq/perm_group.hpp"

namespace hgspq {

enum class NType { Cyclic, Metabelian };
std::string to_string(NType t);

/// Default largest |Hol(N)| whose subgroups are realized as permutation
/// groups; above it classification runs on closed forms only.
inline constexpr std::size_t kDefaultRealizeCap = 2000;

struct ClassifyOptions {
  std::size_t realize_cap = kDefaultRealizeCap;
  std::size_t aut_cap = kAutSearchCap;
  unsigned threads = 0;
  /// Skips the smallest witnesses when choosing a_alpha.
  unsigned alpha_rank = 0;
};

/// Values a class is predicted to have, as stated in the closed-form
/// tables; compared against what the classification computes.
struct PublishedValues {
  std::optional<u64> n_groups;
  std::optional<u64> rel_aut;
  std::optional<u64> n_hgs;
};

/// One permutation-isomorphism class of transitive subgroups of Hol(N).
struct IsoClassRecord {
  NType n_type = NType::Cyclic;
  std::string key;        // canonical class key, e.g. "J[1;0]" or "e1T(1,2)"
  std::string structure;  // abstract structure with parameters substituted
  std::string family;     // descriptor families the members come from
  unsigned c = 0;
  u64 d = 1;
  u64 group_order = 0;
  u64 n_groups = 0;  // e'(G, N)
  u64 rel_aut = 0;   // |Aut(G, G')|
  u64 n_hgs = 0;     // e(G, N)
  bool acg = true;
  bool regular = false;
  /// "witness" when members and invariants were computed on realized
  /// groups, "formula" otherwise.
  std::string evidence = "formula";
  PublishedValues published;
  /// Canonical representative and all members when realized.
  std::optional<PermGroup> representative;
  std::vector<PermGroup> members;
};

struct Discrepancy {
  std::string site;
  std::string paper_value;
  std::string computed_value;
  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

/// e(G, N) = |Aut(G, G')| e'(G, N) / |Aut(N)|. Throws InvariantViolation
/// when the quotient is not an integer, DomainError if aut_n == 0.
u64 byott_count(u64 e_prime, u64 aut_gg, u64 aut_n);

/// Checks realized classes: members transitive and pairwise distinct,
/// members permutation-isomorphic to the representative (witnessed),
/// representatives pairwise non-isomorphic. Fills rel_aut, acg, regular and
/// evidence from the groups and returns a message per failed check.
std::vector<std::string> certify_realized_classes(std::vector<IsoClassRecord>& records,
                                                  const ClassifyOptions& opts);

/// One entry per published value that differs from the computed one;
/// sites are "<prefix>.<key>.<field>".
std::vector<Discrepancy> published_discrepancies(const std::vector<IsoClassRecord>& records,
                                                 const std::string& prefix);

}  // namespace hgspq
