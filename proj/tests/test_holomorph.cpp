#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace hgspq;
using namespace hgspq::testing;

namespace {

template <class Hol>
void check_multiplication(const Hol& hol, std::uint32_t seed) {
  const auto& pr = hol.params();
  std::mt19937_64 rng(seed);
  const auto pick = [&](u64 n) { return std::uniform_int_distribution<u64>(0, n - 1)(rng); };
  const auto random_element = [&] {
    const auto id = hol.aut_identity();
    AutPair a = id;
    for (int k = 0; k < 4; ++k) {
      AutPair step = id;
      step.a = 1 + pick(pr.p - 1);
      step.b = id.b == 0 ? pick(pr.p) : 1 + pick(pr.q - 1);
      a = hol.compose(a, step);
    }
    return HolElement{{pick(pr.p), pick(pr.q)}, a};
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_element();
    const auto y = random_element();
    EXPECT_EQ(hol.to_perm(hol.mul(x, y)), hol.to_perm(x) * hol.to_perm(y));
  }
}

}  // namespace

TEST(Holomorph, CyclicOrders) {
  const auto& hol = cyclic_hol_7_3();
  EXPECT_EQ(hol.degree(), 21u);
  EXPECT_EQ(hol.aut_order(), 12u);
  EXPECT_EQ(hol.hol_order(), 252u);
  EXPECT_EQ(hol.build_group().order(), 252u);
  EXPECT_EQ(hol.gen("alpha").order(), 3u);
  EXPECT_EQ(hol.gen("alpha_1").order(), 2u);
  EXPECT_EQ(hol.gen("beta_1").order(), 2u);
  EXPECT_EQ(hol.hall_pq_subgroup().order(), 63u);
}

TEST(Holomorph, MetabOrders) {
  const auto& hol = metab_hol_7_3();
  EXPECT_EQ(hol.aut_order(), 42u);
  EXPECT_EQ(hol.hol_order(), 882u);
  const auto g = hol.build_group();
  EXPECT_EQ(g.order(), 882u);
  for (const auto& [name, perm] : hol.generators()) EXPECT_TRUE(g.contains(perm)) << name;
  EXPECT_EQ(hol.gen("T").order(), 3u);
  EXPECT_EQ(hol.gen("e1").order(), 7u);
  EXPECT_EQ(hol.gen("e2").order(), 7u);
}

TEST(Holomorph, LambdaIsRegularAndNormal) {
  for (const Holomorph* hol :
       std::initializer_list<const Holomorph*>{&cyclic_hol_7_3(), &metab_hol_7_3()}) {
    const auto ln = hol->lambda_n();
    EXPECT_EQ(ln.order(), 21u);
    EXPECT_TRUE(is_regular(ln));
    EXPECT_TRUE(is_normal_subgroup(ln, hol->build_group()));
  }
  EXPECT_TRUE(is_abelian(cyclic_hol_7_3().lambda_n()));
  EXPECT_FALSE(is_abelian(metab_hol_7_3().lambda_n()));
}

TEST(Holomorph, HolomorphIsNormalizerOfLambda) {
  // Hol(N) = Norm_{Perm(N)}(lambda(N)); its stabilizer is Aut(N).
  const auto& hol = metab_hol_7_3();
  const auto g = hol.build_group();
  EXPECT_EQ(stabilizer(g, 0).order(), hol.aut_order());
}

TEST(Holomorph, MultiplicationMatchesPermutations) {
  check_multiplication(cyclic_hol_7_3(), 1);
  check_multiplication(metab_hol_7_3(), 2);
  const CyclicHolomorph c133(params(13, 3));
  check_multiplication(c133, 3);
  const MetabHolomorph m115(params(11, 5));
  check_multiplication(m115, 4);
}

TEST(Holomorph, MetabModelRoundTrip) {
  const auto& hol = metab_hol_7_3();
  for (u64 x = 0; x < 7; x += 2)
    for (u64 y = 0; y < 7; y += 3)
      for (u64 t = 0; t < 3; ++t)
        for (u64 r = 1; r < 7; ++r) {
          const MetabCoords c{x, y, t, r};
          EXPECT_EQ(hol.coords(hol.model(c)), c);
        }
}

TEST(Holomorph, AlphaChoiceGivesSameGroup) {
  const CyclicHolomorph other(params(7, 3), 1);
  EXPECT_NE(other.a_alpha(), cyclic_hol_7_3().a_alpha());
  EXPECT_EQ(other.build_group(), cyclic_hol_7_3().build_group());
}

TEST(Holomorph, ElementLabelling) {
  const auto& hol = cyclic_hol_7_3();
  EXPECT_EQ(hol.point({2, 1}), 7u);
  EXPECT_EQ(hol.element(7), (NElement{2, 1}));
}
