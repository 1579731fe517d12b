#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"

using namespace hgspq;
using namespace hgspq::testing;

TEST(Metab, ClassKeys) {
  using K = MetabClass::Kind;
  EXPECT_EQ((MetabClass{K::Hol, 1, 0, 2}).key(), "hol(1,2)");
  EXPECT_EQ((MetabClass{K::Ptb, 0, 0, 1}).key(), "ptb(1)");
  EXPECT_EQ((MetabClass{K::M, 1, 1, 2}).key(), "M(1,1,2)");
  EXPECT_EQ((MetabClass{K::E1T, 1, 0, 1}).key(), "e1T(1,1)");
  EXPECT_EQ((MetabClass{K::Prod, 0, 0, 1}).key(), "prod(0,1)");
}

TEST(Metab, ClassCountAt73) {
  const auto& m = metab_7_3();
  EXPECT_TRUE(m.realized);
  EXPECT_TRUE(m.failures.empty());
  EXPECT_EQ(m.records.size(), 12u);
  EXPECT_EQ(m.totals.enumerated, 12u);
  EXPECT_EQ(m.totals.formula, 12u);
  EXPECT_EQ(m.totals.non_acg, 2u);
  EXPECT_EQ(m.totals.formula_non_acg, 2u);
  EXPECT_EQ(m.totals.acg, 10u);
  u64 groups = 0;
  for (const auto& r : m.records) groups += r.n_groups;
  EXPECT_EQ(groups, 108u);
}

TEST(Metab, FrozenValuesAt73) {
  struct Row {
    const char* key;
    u64 n_groups, rel_aut, n_hgs;
    bool acg;
  };
  const Row rows[] = {
      {"ptb(1)", 2, 42, 2, true},     {"hol(1,1)", 1, 84, 2, true},
      {"M(1,1,1)", 1, 588, 14, false}, {"e1T(1,1)", 16, 42, 16, true},
      {"prod(0,1)", 14, 12, 4, true}, {"prod(1,1)", 14, 12, 4, true},
      {"ptb(2)", 2, 42, 2, true},     {"hol(1,2)", 1, 84, 2, true},
      {"M(1,1,2)", 1, 84, 2, false},  {"e1T(1,2)", 28, 6, 4, true},
      {"prod(0,2)", 14, 12, 4, true}, {"prod(1,2)", 14, 12, 4, true},
  };
  const auto& recs = metab_7_3().records;
  for (const auto& row : rows) {
    const auto& r = find(recs, row.key);
    EXPECT_EQ(r.n_groups, row.n_groups) << row.key;
    EXPECT_EQ(r.rel_aut, row.rel_aut) << row.key;
    EXPECT_EQ(r.n_hgs, row.n_hgs) << row.key;
    EXPECT_EQ(r.acg, row.acg) << row.key;
    EXPECT_EQ(r.evidence, "witness") << row.key;
  }
  EXPECT_TRUE(find(recs, "e1T(1,1)").regular);
  EXPECT_TRUE(find(recs, "prod(0,1)").regular);
  EXPECT_EQ(find(recs, "ptb(1)").structure, "(C_7 ⋊ C_3) × C_7");
}

TEST(Metab, RelAutClosedForms) {
  const auto& pr = params(7, 3);
  for (const auto& r : metab_7_3().records) {
    ASSERT_TRUE(r.representative.has_value());
    const auto g0 = stabilizer(*r.representative, 0);
    EXPECT_EQ(rel_aut_order(*r.representative, g0), r.rel_aut) << r.key;
  }
  using K = MetabClass::Kind;
  EXPECT_EQ(metab_rel_aut({K::Ptb, 0, 0, 1}, pr), 42u);
  EXPECT_EQ(metab_rel_aut({K::Hol, 1, 0, 1}, pr), 84u);
  EXPECT_EQ(metab_rel_aut({K::Prod, 0, 0, 1}, pr), 12u);
}

TEST(Metab, FormulaPathMatchesRealized) {
  ClassifyOptions opts;
  opts.realize_cap = 0;
  const auto f = classify_metab(params(7, 3), opts);
  EXPECT_FALSE(f.realized);
  const auto& w = metab_7_3();
  ASSERT_EQ(f.records.size(), w.records.size());
  for (std::size_t i = 0; i < f.records.size(); ++i) {
    EXPECT_EQ(f.records[i].key, w.records[i].key);
    EXPECT_EQ(f.records[i].n_groups, w.records[i].n_groups) << f.records[i].key;
    EXPECT_EQ(f.records[i].rel_aut, w.records[i].rel_aut) << f.records[i].key;
    EXPECT_EQ(f.records[i].n_hgs, w.records[i].n_hgs) << f.records[i].key;
    EXPECT_EQ(f.records[i].acg, w.records[i].acg) << f.records[i].key;
  }
  EXPECT_LT(f.descriptors.size(), w.descriptors.size());
}

TEST(Metab, RealizedRowsAreDistinctAndTransitive) {
  const auto& m = metab_7_3();
  std::set<std::vector<Perm>> seen;
  for (const auto& d : m.descriptors) {
    ASSERT_TRUE(d.group.has_value());
    EXPECT_EQ(d.group->order(), d.order);
    EXPECT_TRUE(check_transitivity_conditions(*d.group, metab_hol_7_3()).transitive());
    seen.insert(d.group->elements());
  }
  EXPECT_EQ(seen.size(), 108u);
}

TEST(Metab, ExtendedTierCounts) {
  ClassifyOptions opts;
  opts.realize_cap = 0;
  EXPECT_EQ(classify_metab(params(13, 3), opts).records.size(), 18u);
  EXPECT_EQ(classify_metab(params(11, 5), opts).records.size(), 14u);
}

TEST(Metab, Discrepancies) {
  const auto& d = metab_7_3().discrepancies;
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0], (Discrepancy{"metabelian.e1T(1,1).n_groups", "30", "16"}));
  EXPECT_EQ(d[1], (Discrepancy{"metabelian.ptb(2).rel_aut.contains_P", "84", "42"}));
}

TEST(Metab, TheoremMissesHigherE1TClasses) {
  ClassifyOptions opts;
  opts.realize_cap = 0;
  const auto m = classify_metab(params(19, 3), opts);
  EXPECT_EQ(m.totals.non_acg, 6u);
  EXPECT_EQ(m.totals.formula_non_acg, 4u);
  EXPECT_EQ(m.totals.acg, 14u);
  EXPECT_EQ(m.totals.formula_acg, 16u);
  const auto& e = find(m.records, "e1T(2,1)");
  EXPECT_EQ(e.n_groups, 2u * 19 * 2);
  EXPECT_FALSE(e.acg);
}
