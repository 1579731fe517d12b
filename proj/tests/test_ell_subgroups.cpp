#include <gtest/gtest.h>

#include "hgspq/arith.hpp"
#include "hgspq/cyclic_classify.hpp"
#include "hgspq/errors.hpp"

using namespace hgspq;

namespace {

struct Triple {
  u64 ell;
  unsigned e;
  unsigned f;
};

std::vector<Triple> all_triples(u64 bound) {
  std::vector<Triple> out;
  for (u64 ell = 2; ell <= bound; ++ell) {
    if (!is_prime(ell)) continue;
    for (unsigned e = 0; ipow(ell, e) <= bound; ++e)
      for (unsigned f = 0; ipow(ell, e + f) <= bound; ++f) out.push_back({ell, e, f});
  }
  return out;
}

}  // namespace

TEST(EllSubgroups, KnownCounts) {
  EXPECT_EQ(enumerate_ell_subgroups(1, 1, 2).size(), 5u);
  EXPECT_EQ(enumerate_ell_subgroups(2, 1, 2).size(), 8u);
  EXPECT_EQ(enumerate_ell_subgroups(2, 2, 2).size(), 15u);
  EXPECT_EQ(enumerate_ell_subgroups(1, 1, 3).size(), 6u);
  EXPECT_EQ(enumerate_ell_subgroups(3, 0, 5).size(), 4u);
  EXPECT_EQ(brute_force_abelian_subgroup_count({4, 4}), 15u);
  EXPECT_EQ(brute_force_abelian_subgroup_count({2, 2, 2}), 16u);
}

TEST(EllSubgroups, CapIsEnforced) {
  EXPECT_THROW(enumerate_ell_subgroups(10, 10, 2, 1024), ResourceError);
}

TEST(EllSubgroups, DescriptorsAreConsistent) {
  for (const auto& d : enumerate_ell_subgroups(2, 3, 3)) {
    EXPECT_EQ(d.order, ipow(3, 5 - d.j - d.k)) << d.label();
    EXPECT_EQ(d.order % d.alpha_part, 0u);
    EXPECT_EQ(d.order % d.beta_part, 0u);
    EXPECT_FALSE(d.label().empty());
  }
}

// Brute force against the echelon enumeration for every ell^(e+f) <= 1024;
// the closed and summed forms agree whenever min(e, f) <= 1.
TEST(EllSubgroups, BruteForceSweep) {
  std::size_t checked = 0;
  for (const auto& [ell, e, f] : all_triples(1024)) {
    const auto r = ell_lattice_report(e, f, ell);
    SCOPED_TRACE(std::to_string(ell) + "^" + std::to_string(e) + "," + std::to_string(f));
    EXPECT_EQ(r.brute_force, r.enumerated);
    u64 attached = 0;
    for (auto k : r.kind_counts) attached += k;
    EXPECT_EQ(attached, r.enumerated);
    if (std::min(e, f) <= 1) {
      EXPECT_EQ(r.closed_total, static_cast<i64>(r.enumerated));
      EXPECT_EQ(r.direct_total, static_cast<i64>(r.enumerated));
      EXPECT_TRUE(r.matches());
    }
    ++checked;
  }
  EXPECT_GT(checked, 60u);
}

TEST(EllSubgroups, SymmetricInExponents) {
  for (unsigned e = 0; e <= 4; ++e)
    for (unsigned f = 0; f <= 4; ++f)
      EXPECT_EQ(enumerate_ell_subgroups(e, f, 2).size(), enumerate_ell_subgroups(f, e, 2).size());
}

TEST(EllSubgroups, SumFormsDivergeAboveOne) {
  const auto r = ell_lattice_report(2, 2, 2);
  EXPECT_EQ(r.enumerated, 15u);
  EXPECT_EQ(r.closed_total, 19);
  EXPECT_EQ(r.direct_total, 16);
  EXPECT_EQ(r.sigma1.closed_form, 6);
  EXPECT_EQ(r.sigma1.direct_sum, 5);
  EXPECT_EQ(r.sigma2.closed_form, 4);
  EXPECT_EQ(r.sigma2.direct_sum, 2);
  EXPECT_FALSE(r.matches());
}

TEST(EllSubgroups, DiscrepancyLog) {
  const auto log = lattice_discrepancies(ell_lattice_report(2, 2, 2), "s");
  ASSERT_EQ(log.size(), 2u);
  EXPECT_EQ(log[0], (Discrepancy{"s.closed_form", "19", "15"}));
  EXPECT_EQ(log[1], (Discrepancy{"s.direct_sum", "16", "15"}));
  EXPECT_TRUE(lattice_discrepancies(ell_lattice_report(1, 3, 3), "s").empty());
  for (const auto& [ell, e, f] : all_triples(1024)) {
    const auto r = ell_lattice_report(e, f, ell);
    EXPECT_EQ(r.matches(), lattice_discrepancies(r, "s").empty());
  }
}
