#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

namespace hgspq {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Largest p accepted by pq_parameters. Keeps p^2 q^(1+e0) s well inside
/// 64-bit range.
inline constexpr u64 kMaxPrimeP = (u64{1} << 16);

struct PrimePower {
  u64 prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial-division factorization, primes strictly increasing. factorize(1)
/// is empty. Throws DomainError for n == 0.
std::vector<PrimePower> factorize(u64 n);

bool is_prime(u64 n);

u64 ipow(u64 base, unsigned exp);
u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

/// Multiplicative order of a modulo the prime `modulus`.
u64 mult_order(u64 a, u64 modulus);

/// Smallest a in [1, p-1] of multiplicative order r modulo p. `rank` skips
/// that many smaller witnesses (rank 0 is the canonical choice).
u64 element_of_order(u64 r, u64 p, unsigned rank = 0);

/// Modular inverse of a modulo the prime p.
u64 invmod(u64 a, u64 p);

u64 euler_phi(u64 n);
std::vector<u64> divisors(u64 n);
u64 sigma0(u64 n);

/// The prime-power skeleton of (p, q) when q | p - 1:
///   p - 1 = q^e0 * prod ell_i^e_i,   q - 1 = prod ell_i^f_i.
struct PqParams {
  u64 p = 0;
  u64 q = 0;
  unsigned e0 = 0;
  std::vector<u64> ell;
  std::vector<unsigned> e;
  std::vector<unsigned> f;
  u64 s = 0;  // (p - 1) / q^e0

  std::size_t m() const { return ell.size(); }
  u64 q_pow_e0() const { return ipow(q, e0); }
  friend bool operator==(const PqParams&, const PqParams&) = default;
};

/// q does not divide p - 1: the extension admits exactly one Hopf-Galois
/// structure (cyclic type, almost classically Galois).
struct UniqueStructureRegime {
  u64 p = 0;
  u64 q = 0;
  friend bool operator==(const UniqueStructureRegime&,
                         const UniqueStructureRegime&) = default;
};

using PqParamsResult = std::variant<PqParams, UniqueStructureRegime>;

/// Validates (p, q) and returns the parameter skeleton, or the
/// unique-structure signal when q does not divide p - 1. Throws DomainError
/// unless p, q are distinct odd primes with q < p < kMaxPrimeP.
PqParamsResult pq_parameters(u64 p, u64 q);

/// Same validation as pq_parameters without building anything.
void validate_prime_pair(u64 p, u64 q);

}  // namespace hgspq
