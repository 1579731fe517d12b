#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hgspq/perm_group.hpp"

namespace hgspq {

/// Largest group order for which automorphism counting is attempted.
inline constexpr std::size_t kAutSearchCap = 10'000;

/// Generator images defining an isomorphism G -> H. `generators` generate
/// G; the map sending generators[i] to images[i] extends to a bijective
/// homomorphism.
struct IsoWitness {
  std::vector<Perm> generators;
  std::vector<Perm> images;
};

/// Exhaustive search for an isomorphism G -> H. With `preserve_stabilizer`
/// the isomorphism must carry the stabilizer of point 0 in G onto that of H
/// (permutation isomorphism for transitive groups of equal degree). An empty
/// result is a proof that no such isomorphism exists.
std::optional<IsoWitness> abstract_isomorphic(const PermGroup& g, const PermGroup& h,
                                              bool preserve_stabilizer);

/// Isomorphism G -> H carrying the subgroup G0 onto H0 (G0 <= G, H0 <= H).
std::optional<IsoWitness> isomorphism_preserving(const PermGroup& g, const PermGroup& g0,
                                                 const PermGroup& h, const PermGroup& h0);

/// Checks a witness independently of the search: well-defined, bijective,
/// and (optionally) stabilizer-preserving.
bool verify_witness(const PermGroup& g, const PermGroup& h, const IsoWitness& w,
                    bool preserve_stabilizer);

/// |{theta in Aut(M) : theta(M') = M'}| by exhaustive generator-image
/// backtracking. Throws ResourceError if |M| > cap.
std::uint64_t rel_aut_order(const PermGroup& m, const PermGroup& mprime,
                            std::size_t cap = kAutSearchCap);

/// Number of automorphisms of M mapping each listed subgroup onto itself
/// (at most 16). Throws ResourceError if |M| > cap.
std::uint64_t count_automorphisms(const PermGroup& m, const std::vector<PermGroup>& preserved,
                                  std::size_t cap = kAutSearchCap);

/// |Aut(M)|.
std::uint64_t aut_order(const PermGroup& m, std::size_t cap = kAutSearchCap);

/// Multiset of per-element invariants (order, class size, stabilizer
/// membership); equal for permutation-isomorphic transitive groups.
std::vector<std::uint64_t> invariant_signature(const PermGroup& g, bool with_stabilizer);

}  // namespace hgspq
