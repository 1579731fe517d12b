#include "hgspq/arith.hpp"

#include <algorithm>
#include <string>

#include "hgspq/errors.hpp"

namespace hgspq {

std::vector<PrimePower> factorize(u64 n) {
  if (n == 0) throw DomainError("factorize: n must be positive");
  std::vector<PrimePower> out;
  for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    out.push_back({d, k});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

u64 ipow(u64 base, unsigned exp) {
  u64 r = 1;
  while (exp--) r *= base;
  return r;
}

u64 mulmod(u64 a, u64 b, u64 m) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

u64 mult_order(u64 a, u64 modulus) {
  if (modulus < 2) throw DomainError("mult_order: modulus must be prime");
  a %= modulus;
  if (a == 0) throw DomainError("mult_order: a is not a unit");
  u64 n = modulus - 1;
  for (const auto& [r, k] : factorize(n)) {
    for (unsigned i = 0; i < k && n % r == 0 && powmod(a, n / r, modulus) == 1; ++i)
      n /= r;
  }
  return n;
}

u64 element_of_order(u64 r, u64 p, unsigned rank) {
  if (r == 0 || (p - 1) % r != 0)
    throw DomainError("element_of_order: " + std::to_string(r) +
                      " does not divide p - 1");
  for (u64 a = 1; a < p; ++a) {
    if (mult_order(a, p) == r && rank-- == 0) return a;
  }
  throw DomainError("element_of_order: rank exceeds the number of witnesses");
}

u64 invmod(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw DomainError("invmod: zero has no inverse");
  return powmod(a, p - 2, p);
}

u64 euler_phi(u64 n) {
  u64 r = n;
  for (const auto& pp : factorize(n)) r = r / pp.prime * (pp.prime - 1);
  return r;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (const auto& [prime, k] : factorize(n)) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned i = 1; i <= k; ++i) {
      pk *= prime;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 sigma0(u64 n) {
  u64 r = 1;
  for (const auto& pp : factorize(n)) r *= pp.exponent + 1;
  return r;
}

void validate_prime_pair(u64 p, u64 q) {
  if (!is_prime(p) || !is_prime(q))
    throw DomainError("p and q must both be prime");
  if (p == 2 || q == 2) throw DomainError("p and q must be odd");
  if (!(q < p)) throw DomainError("require q < p");
  if (p >= kMaxPrimeP) throw DomainError("p exceeds the supported range");
}

PqParamsResult pq_parameters(u64 p, u64 q) {
  validate_prime_pair(p, q);
  if ((p - 1) % q != 0) return UniqueStructureRegime{p, q};

  PqParams out;
  out.p = p;
  out.q = q;
  u64 rest = p - 1;
  while (rest % q == 0) {
    rest /= q;
    ++out.e0;
  }
  out.s = rest;

  // Primes of (p-1)/q^e0 and q-1, merged and sorted.
  std::vector<u64> primes;
  for (const auto& pp : factorize(rest)) primes.push_back(pp.prime);
  for (const auto& pp : factorize(q - 1)) primes.push_back(pp.prime);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  for (u64 ell : primes) {
    unsigned ei = 0, fi = 0;
    for (u64 x = rest; x % ell == 0; x /= ell) ++ei;
    for (u64 x = q - 1; x % ell == 0; x /= ell) ++fi;
    out.ell.push_back(ell);
    out.e.push_back(ei);
    out.f.push_back(fi);
  }
  return out;
}

}  // namespace hgspq
