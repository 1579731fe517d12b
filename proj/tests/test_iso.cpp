#include <gtest/gtest.h>

#include "groups.hpp"
#include "hgspq/errors.hpp"
#include "hgspq/iso.hpp"
#include "hgspq/oracle.hpp"

using namespace hgspq;
using namespace hgspq::testing;

TEST(Iso, AutomorphismGroupOrders) {
  EXPECT_EQ(aut_order(cyclic(7)), 6u);
  EXPECT_EQ(aut_order(klein4()), 6u);
  EXPECT_EQ(aut_order(sym(3)), 6u);
  EXPECT_EQ(aut_order(dihedral8()), 8u);
  EXPECT_EQ(aut_order(quaternion8()), 24u);
  EXPECT_EQ(aut_order(sym(4)), 24u);
  EXPECT_EQ(aut_order(alt5()), 120u);
}

TEST(Iso, RelativeAutomorphisms) {
  // Automorphisms of S4 fixing a point stabilizer S3: conjugations by S3.
  const auto s4 = sym(4);
  EXPECT_EQ(rel_aut_order(s4, stabilizer(s4, 0)), 6u);
  EXPECT_EQ(rel_aut_order(s4, PermGroup::trivial(4)), 24u);
  EXPECT_EQ(count_automorphisms(s4, {klein4(), stabilizer(s4, 0)}), 6u);
  EXPECT_THROW(rel_aut_order(sym(5), PermGroup::trivial(5), 100), ResourceError);
}

TEST(Iso, CyclicVersusKlein) {
  const auto c4 = cyclic(4);
  EXPECT_FALSE(abstract_isomorphic(c4, klein4(), false).has_value());
  const auto other = PermGroup::closure({cyc(4, {{0, 2, 1, 3}})}, 4);
  const auto w = abstract_isomorphic(c4, other, true);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(verify_witness(c4, other, *w, true));
}

TEST(Iso, StabilizerPreservation) {
  // Two copies of C2 x C2 in S4: regular V4, and <(01), (23)> which fixes
  // no point but is intransitive. Abstractly isomorphic only.
  const auto v4 = klein4();
  const auto w = PermGroup::closure({cyc(4, {{0, 1}}), cyc(4, {{2, 3}})}, 4);
  EXPECT_TRUE(abstract_isomorphic(v4, w, false).has_value());
  EXPECT_FALSE(abstract_isomorphic(v4, w, true).has_value());
}

TEST(Iso, WitnessVerificationRejectsBadMaps) {
  const auto s3 = sym(3);
  IsoWitness bad{s3.generators(), std::vector<Perm>(s3.generators().size(), Perm(3))};
  EXPECT_FALSE(verify_witness(s3, s3, bad, false));
  const auto good = abstract_isomorphic(s3, s3, true);
  ASSERT_TRUE(good.has_value());
  EXPECT_TRUE(verify_witness(s3, s3, *good, true));
}

TEST(Iso, PreservingSubgroup) {
  const auto d8 = dihedral8();
  const auto c4 = subgroup_generated(d8, {cyc(4, {{0, 1, 2, 3}})});
  const auto v = subgroup_generated(d8, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
  EXPECT_TRUE(isomorphism_preserving(d8, c4, d8, c4).has_value());
  EXPECT_FALSE(isomorphism_preserving(d8, c4, d8, v).has_value());
}

TEST(Iso, SignatureIsInvariant) {
  const auto a = PermGroup::closure({cyc(4, {{0, 1, 2, 3}})}, 4);
  const auto b = PermGroup::closure({cyc(4, {{0, 2, 1, 3}})}, 4);
  EXPECT_EQ(invariant_signature(a, true), invariant_signature(b, true));
  EXPECT_NE(invariant_signature(a, false), invariant_signature(klein4(), false));
}

// Subgroup lattice sizes of small groups.
TEST(Lattice, KnownCounts) {
  EXPECT_EQ(all_subgroups(klein4()).size(), 5u);
  EXPECT_EQ(all_subgroups(sym(3)).size(), 6u);
  EXPECT_EQ(all_subgroups(dihedral8()).size(), 10u);
  EXPECT_EQ(all_subgroups(quaternion8()).size(), 6u);
  EXPECT_EQ(all_subgroups(sym(4)).size(), 30u);
  EXPECT_EQ(all_subgroups(alt5()).size(), 59u);
  EXPECT_EQ(all_subgroups(cyclic(12)).size(), 6u);
}

TEST(Lattice, MembersAreSubgroups) {
  const auto s4 = sym(4);
  const auto lat = all_subgroups(s4);
  std::size_t transitive = 0;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const auto h = lat.group(i);
    EXPECT_EQ(h.order(), lat.order(i));
    EXPECT_EQ(24 % h.order(), 0u);
    EXPECT_EQ(PermGroup::closure(h.generators(), 4), h);
    if (lat.is_transitive(i)) ++transitive;
  }
  // C4 x3, V4 normal, D8 x3, A4, S4
  EXPECT_EQ(transitive, 9u);
  EXPECT_THROW(all_subgroups(s4, 10), ResourceError);
}

TEST(Lattice, TransitiveClasses) {
  const auto s4 = sym(4);
  const auto lat = all_subgroups(s4);
  std::vector<PermGroup> tr;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.is_transitive(i)) tr.push_back(lat.group(i));
  const auto classes = transitive_classes(tr);
  // C4, V4, D8, A4, S4
  ASSERT_EQ(classes.size(), 5u);
  std::vector<std::size_t> sizes;
  for (const auto& c : classes) sizes.push_back(c.members.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 1, 1, 3, 3}));
}
