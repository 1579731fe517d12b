#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "hgspq/errors.hpp"

using namespace hgspq;
using namespace hgspq::testing;

TEST(Oracle, CyclicHolomorph73) {
  const auto& run = cyclic_oracle_7_3();
  EXPECT_EQ(run.hol_order, 252u);
  EXPECT_EQ(run.aut_n, 12u);
  EXPECT_EQ(run.n_subgroups, 252u);
  EXPECT_EQ(run.transitive.size(), 14u);
  EXPECT_EQ(run.classes.size(), 12u);
}

TEST(Oracle, MetabHolomorph73) {
  const auto& run = metab_oracle_7_3();
  EXPECT_EQ(run.hol_order, 882u);
  EXPECT_EQ(run.aut_n, 42u);
  EXPECT_EQ(run.n_subgroups, 744u);
  EXPECT_EQ(run.transitive.size(), 108u);
  EXPECT_EQ(run.classes.size(), 12u);
}

TEST(Oracle, AgreesWithClassification) {
  EXPECT_EQ(compare_with_oracle(cyclic_oracle_7_3(), cyclic_7_3().records, "cyclic"),
            std::vector<std::string>{});
  EXPECT_EQ(compare_with_oracle(metab_oracle_7_3(), metab_7_3().records, "metabelian"),
            std::vector<std::string>{});
}

TEST(Oracle, AgreesWithFormulaRecords) {
  ClassifyOptions opts;
  opts.realize_cap = 0;
  const auto f = classify_metab(params(7, 3), opts);
  EXPECT_EQ(compare_with_oracle(metab_oracle_7_3(), f.records, "metabelian"),
            std::vector<std::string>{});
}

TEST(Oracle, DetectsMissingClass) {
  auto recs = metab_7_3().records;
  recs.pop_back();
  EXPECT_FALSE(compare_with_oracle(metab_oracle_7_3(), recs, "metabelian").empty());
  auto tweaked = metab_7_3().records;
  for (auto& r : tweaked) {
    r.members.clear();
    r.representative.reset();
  }
  tweaked[0].n_hgs += 1;
  EXPECT_FALSE(compare_with_oracle(metab_oracle_7_3(), tweaked, "metabelian").empty());
}

TEST(Oracle, DirectHgsCounts) {
  const auto& run = cyclic_oracle_7_3();
  std::multiset<u64> direct;
  for (const auto& c : run.classes) direct.insert(direct_hgs_count(c, run.aut_n));
  std::multiset<u64> recorded;
  for (const auto& r : cyclic_7_3().records) recorded.insert(r.n_hgs);
  EXPECT_EQ(direct, recorded);
  EXPECT_EQ(direct.count(7), 1u);
  u64 total = 0;
  for (auto v : direct) total += v;
  EXPECT_EQ(total, 18u);
}

TEST(Oracle, ClassesAreCanonical) {
  const auto& run = metab_oracle_7_3();
  for (const auto& c : run.classes) {
    EXPECT_EQ(c.representative, c.members.front());
    EXPECT_TRUE(std::is_sorted(c.members.begin(), c.members.end()));
    EXPECT_EQ(c.stabilizer.order() * 21, c.representative.order());
  }
}

TEST(Oracle, CapIsEnforced) {
  OracleOptions opts;
  opts.cap = 100;
  EXPECT_THROW(run_oracle(cyclic_hol_7_3(), opts), ResourceError);
}
