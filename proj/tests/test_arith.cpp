#include <gtest/gtest.h>

#include "hgspq/arith.hpp"
#include "hgspq/errors.hpp"

using namespace hgspq;

TEST(Arith, Factorize) {
  EXPECT_TRUE(factorize(1).empty());
  const std::vector<PrimePower> f{{2, 4}, {3, 2}, {5, 1}, {7, 1}, {13, 1}};
  EXPECT_EQ(factorize(65520), f);
  EXPECT_THROW(factorize(0), DomainError);
}

TEST(Arith, Primality) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(65521));
  EXPECT_FALSE(is_prime(65523));
}

TEST(Arith, ModularHelpers) {
  EXPECT_EQ(powmod(3, 6, 7), 1u);
  EXPECT_EQ(mult_order(3, 7), 6u);
  EXPECT_EQ(mult_order(2, 7), 3u);
  EXPECT_EQ(invmod(3, 7), 5u);
  EXPECT_EQ(element_of_order(3, 7), 2u);
  EXPECT_EQ(element_of_order(3, 7, 1), 4u);
  EXPECT_EQ(element_of_order(1, 7), 1u);
  EXPECT_THROW(element_of_order(4, 7), DomainError);
  EXPECT_EQ(mulmod(0xFFFFFFFFFFFFull, 0xFFFFFFFFFFFFull, 1000000007ull),
            (static_cast<unsigned __int128>(0xFFFFFFFFFFFFull) * 0xFFFFFFFFFFFFull) % 1000000007ull);
}

TEST(Arith, DivisorFunctions) {
  EXPECT_EQ(euler_phi(9), 6u);
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(divisors(12), (std::vector<u64>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(sigma0(1), 1u);
  EXPECT_EQ(sigma0(4), 3u);
}

TEST(Arith, PqParameters) {
  const auto p73 = std::get<PqParams>(pq_parameters(7, 3));
  EXPECT_EQ(p73.e0, 1u);
  EXPECT_EQ(p73.s, 2u);
  EXPECT_EQ(p73.ell, std::vector<u64>{2});
  EXPECT_EQ(p73.e, std::vector<unsigned>{1});
  EXPECT_EQ(p73.f, std::vector<unsigned>{1});

  const auto p133 = std::get<PqParams>(pq_parameters(13, 3));
  EXPECT_EQ(p133.s, 4u);
  EXPECT_EQ(p133.e, std::vector<unsigned>{2});
  EXPECT_EQ(p133.f, std::vector<unsigned>{1});

  const auto p193 = std::get<PqParams>(pq_parameters(19, 3));
  EXPECT_EQ(p193.e0, 2u);
  EXPECT_EQ(p193.s, 2u);

  // 31 - 1 = 5 * 6, 5 - 1 = 4: ell = 2 (e 1, f 2), 3 (e 1, f 0)
  const auto p315 = std::get<PqParams>(pq_parameters(31, 5));
  EXPECT_EQ(p315.ell, (std::vector<u64>{2, 3}));
  EXPECT_EQ(p315.e, (std::vector<unsigned>{1, 1}));
  EXPECT_EQ(p315.f, (std::vector<unsigned>{2, 0}));
}

TEST(Arith, UniqueRegimeAndValidation) {
  EXPECT_TRUE(std::holds_alternative<UniqueStructureRegime>(pq_parameters(5, 3)));
  EXPECT_TRUE(std::holds_alternative<UniqueStructureRegime>(pq_parameters(11, 3)));
  EXPECT_THROW(pq_parameters(6, 3), DomainError);
  EXPECT_THROW(pq_parameters(3, 7), DomainError);
  EXPECT_THROW(pq_parameters(7, 2), DomainError);
  EXPECT_THROW(pq_parameters(7, 7), DomainError);
  EXPECT_THROW(pq_parameters(65537, 3), DomainError);
}
