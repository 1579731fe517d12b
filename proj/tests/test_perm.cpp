#include <gtest/gtest.h>

#include "groups.hpp"
#include "hgspq/errors.hpp"

using namespace hgspq;
using hgspq::testing::cyc;

TEST(Perm, ConstructionAndValidation) {
  EXPECT_THROW(Perm(std::vector<Point>{0, 0, 1}), DomainError);
  EXPECT_THROW(Perm(std::vector<Point>{0, 3}), DomainError);
  const Perm id(5);
  EXPECT_TRUE(id.is_identity());
  EXPECT_EQ(id.num_fixed_points(), 5u);
}

TEST(Perm, CompositionIsRightToLeft) {
  const Perm a = cyc(3, {{0, 1}});
  const Perm b = cyc(3, {{1, 2}});
  // (a*b)(1) = a(b(1)) = a(2) = 2
  EXPECT_EQ((a * b)(1), 2u);
  EXPECT_EQ((a * b)(0), 1u);
  EXPECT_NE(a * b, b * a);
}

TEST(Perm, PowersOrderInverse) {
  const Perm g = cyc(7, {{0, 1, 2}, {3, 4}});
  EXPECT_EQ(g.order(), 6u);
  EXPECT_TRUE(g.pow(6).is_identity());
  EXPECT_EQ(g.pow(-1), g.inverse());
  EXPECT_EQ(g.pow(7), g);
  EXPECT_TRUE((g * g.inverse()).is_identity());
  EXPECT_EQ(g.cycle_type(), (std::vector<std::size_t>{1, 1, 2, 3}));
  EXPECT_EQ(g.num_fixed_points(), 2u);
}

TEST(Perm, HashAgreesWithEquality) {
  const Perm a = cyc(6, {{0, 5, 2}});
  const Perm b = cyc(6, {{5, 2, 0}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.hash(), b.hash());
}
