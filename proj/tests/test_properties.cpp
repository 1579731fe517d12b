#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hgspq/render.hpp"

using namespace hgspq;
using namespace hgspq::testing;

namespace {

const std::vector<std::pair<u64, u64>> kPairs = {{7, 3},   {13, 3}, {19, 3}, {11, 5},
                                                 {31, 5},  {37, 3}, {43, 7}, {61, 5},
                                                 {73, 3},  {127, 7}, {211, 7}};

ReportOptions formula_only() {
  ReportOptions ro;
  ro.classify.realize_cap = 0;
  return ro;
}

}  // namespace

TEST(Properties, RegularNormalChecksOnOracle) {
  EXPECT_EQ(check_regular_normal_properties(cyclic_oracle_7_3(), cyclic_hol_7_3()),
            std::vector<std::string>{});
  EXPECT_EQ(check_regular_normal_properties(metab_oracle_7_3(), metab_hol_7_3()),
            std::vector<std::string>{});
}

TEST(Properties, ByottIntegrality) {
  for (const auto& [p, q] : kPairs) {
    const auto r = build_report(p, q, formula_only());
    const u64 aut_c = (p - 1) * (q - 1);
    const u64 aut_m = p * (p - 1);
    for (const auto& c : r.cyclic)
      EXPECT_EQ(static_cast<unsigned __int128>(c.n_hgs) * aut_c,
                static_cast<unsigned __int128>(c.n_groups) * c.rel_aut)
          << p << "," << q << " " << c.key;
    for (const auto& m : r.metabelian)
      EXPECT_EQ(static_cast<unsigned __int128>(m.n_hgs) * aut_m,
                static_cast<unsigned __int128>(m.n_groups) * m.rel_aut)
          << p << "," << q << " " << m.key;
  }
}

TEST(Properties, NonAbelianCountsAreEven) {
  for (const auto& [p, q] : kPairs) {
    const auto r = build_report(p, q, formula_only());
    for (const auto& m : r.metabelian) EXPECT_EQ(m.n_hgs % 2, 0u) << p << "," << q << " " << m.key;
  }
  for (const auto& m : metab_7_3().records) EXPECT_EQ(m.n_hgs % 2, 0u) << m.key;
}

TEST(Properties, BothTypesFormula) {
  for (const auto& [p, q] : kPairs) {
    const auto r = build_report(p, q, formula_only());
    EXPECT_EQ(r.totals.both_types, r.totals.both_types_formula) << p << "," << q;
  }
}

TEST(Properties, DeterministicAcrossThreadCounts) {
  std::string reference;
  for (unsigned threads : {1u, 2u, 3u, 8u}) {
    ReportOptions ro;
    ro.classify.threads = threads;
    const auto out = render(build_report(7, 3, ro), Format::Json);
    if (reference.empty()) reference = out;
    EXPECT_EQ(out, reference) << threads;
  }
  std::vector<std::size_t> sizes;
  for (unsigned threads : {1u, 4u}) {
    OracleOptions oo;
    oo.threads = threads;
    const auto run = run_oracle(metab_hol_7_3(), oo);
    EXPECT_EQ(run.transitive, metab_oracle_7_3().transitive);
    ASSERT_EQ(run.classes.size(), metab_oracle_7_3().classes.size());
    for (std::size_t i = 0; i < run.classes.size(); ++i)
      EXPECT_EQ(run.classes[i].members, metab_oracle_7_3().classes[i].members);
  }
}

// The projection / intersection criterion agrees with transitivity on
// every subgroup of Hol(C_7 x| C_3).
TEST(Properties, TransitivityCriterionOnAllSubgroups) {
  const auto& hol = metab_hol_7_3();
  const auto lat = all_subgroups(hol.build_group());
  ASSERT_EQ(lat.size(), 744u);
  std::size_t transitive = 0;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const auto g = lat.group(i);
    const bool t = is_transitive(g);
    EXPECT_EQ(check_transitivity_conditions(g, hol).transitive(), t) << i;
    transitive += t;
  }
  EXPECT_EQ(transitive, 108u);
}

TEST(Properties, HallSubgroupMeetsTransitively) {
  const auto h = cyclic_hol_7_3().hall_pq_subgroup();
  for (const auto& m : cyclic_oracle_7_3().transitive)
    EXPECT_TRUE(is_transitive(intersection(m, h)));
}

TEST(Properties, IsomorphismIsAnEquivalence) {
  const auto& tr = cyclic_oracle_7_3().transitive;
  const std::size_t n = tr.size();
  std::vector<std::vector<char>> abs(n, std::vector<char>(n)), perm(n, std::vector<char>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      abs[i][j] = abstract_isomorphic(tr[i], tr[j], false).has_value();
      perm[i][j] = abstract_isomorphic(tr[i], tr[j], true).has_value();
    }
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_TRUE(abs[i][i]);
    EXPECT_TRUE(perm[i][i]);
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_EQ(abs[i][j], abs[j][i]);
      EXPECT_EQ(perm[i][j], perm[j][i]);
      if (perm[i][j]) EXPECT_TRUE(abs[i][j]);
      for (std::size_t k = 0; k < n; ++k)
        if (abs[i][j] && abs[j][k]) EXPECT_TRUE(abs[i][k]);
    }
  }
}
