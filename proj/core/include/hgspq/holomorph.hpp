#pragma once

#include <map>
#include <string>

#include "hgspq/arith.hpp"
#include "hgspq/perm.hpp"
#include "hgspq/perm_group.hpp"

namespace hgspq {

/// sigma^i tau^j, 0 <= i < p, 0 <= j < q.
struct NElement {
  u64 i = 0;
  u64 j = 0;
  friend bool operator==(const NElement&, const NElement&) = default;
};

/// An automorphism of N by its action on the generators.
///   cyclic N:      sigma -> sigma^a, tau -> tau^b
///   metabelian N:  sigma -> sigma^a, tau -> sigma^b tau
struct AutPair {
  u64 a = 1;
  u64 b = 0;
  friend bool operator==(const AutPair&, const AutPair&) = default;
};

/// [eta, alpha] acting on N by x -> eta * alpha(x).
struct HolElement {
  NElement eta;
  AutPair aut;
  friend bool operator==(const HolElement&, const HolElement&) = default;
};

/// Hol(N) for a group N of order pq, realized on the points of N with
/// sigma^i tau^j labelled i*q + j.
class Holomorph {
 public:
  explicit Holomorph(const PqParams& params) : params_(params) {}
  virtual ~Holomorph() = default;

  const PqParams& params() const noexcept { return params_; }
  std::size_t degree() const noexcept { return params_.p * params_.q; }
  Point point(NElement x) const { return static_cast<Point>(x.i * params_.q + x.j); }
  NElement element(Point x) const { return {x / params_.q, x % params_.q}; }

  virtual NElement n_mul(NElement x, NElement y) const = 0;
  virtual NElement apply(const AutPair& a, NElement x) const = 0;
  /// (a o b)(x) = a(b(x)).
  virtual AutPair compose(const AutPair& a, const AutPair& b) const = 0;
  virtual AutPair aut_identity() const = 0;
  /// |Aut(N)|.
  virtual u64 aut_order() const = 0;

  u64 hol_order() const { return degree() * aut_order(); }
  HolElement identity() const { return {{0, 0}, aut_identity()}; }
  /// [eta, a][mu, b] = [eta a(mu), ab].
  HolElement mul(const HolElement& x, const HolElement& y) const;
  Perm to_perm(const HolElement& h) const;

  /// Named generators of Hol(N) as permutations.
  const std::map<std::string, Perm>& generators() const noexcept { return gens_; }
  const Perm& gen(const std::string& name) const;
  /// Throws ResourceError if |Hol(N)| > cap.
  PermGroup build_group(std::size_t cap = kDefaultOrderCap) const;
  /// The left regular representation lambda(N) = <sigma, tau>.
  PermGroup lambda_n() const;

 protected:
  PqParams params_;
  std::map<std::string, Perm> gens_;
};

/// Hol(C_pq) = N x| ((Z/p)^x x (Z/q)^x). Generators: sigma, tau, alpha
/// (order q^e0), alpha_i (order ell_i^e_i), beta_i (order ell_i^f_i),
/// i = 1..m.
class CyclicHolomorph : public Holomorph {
 public:
  explicit CyclicHolomorph(const PqParams& params, unsigned alpha_rank = 0);

  NElement n_mul(NElement x, NElement y) const override;
  NElement apply(const AutPair& a, NElement x) const override;
  AutPair compose(const AutPair& a, const AutPair& b) const override;
  AutPair aut_identity() const override { return {1, 1}; }
  u64 aut_order() const override { return (params_.p - 1) * (params_.q - 1); }

  u64 a_alpha() const noexcept { return a_alpha_; }
  const std::vector<u64>& a_alpha_i() const noexcept { return a_alpha_i_; }
  const std::vector<u64>& b_beta_i() const noexcept { return b_beta_i_; }

  /// alpha^x * prod alpha_i^{xs[i]} * beta_i^{ys[i]} as an AutPair.
  AutPair aut_from_exponents(u64 x, const std::vector<u64>& xs,
                             const std::vector<u64>& ys) const;

  /// H = <sigma, tau, alpha>, the unique Hall {p,q}-subgroup.
  PermGroup hall_pq_subgroup() const;

 private:
  u64 a_alpha_;
  std::vector<u64> a_alpha_i_;
  std::vector<u64> b_beta_i_;
};

/// A point of the F_p^2 model: [x e1 + y e2, T^t r], r a scalar in F_p^x
/// standing for A^a B^b.
struct MetabCoords {
  u64 x = 0;
  u64 y = 0;
  u64 t = 0;
  u64 r = 1;
  friend bool operator==(const MetabCoords&, const MetabCoords&) = default;
};

/// Hol(C_p x| C_q) with tau sigma = sigma^g tau. Generators: sigma, tau,
/// alpha, beta, epsilon and the model names e1, e2, f, T, A, B.
/// P = <sigma, epsilon> is identified with F_p^2 via e1 = sigma and
/// e2 = sigma epsilon^(g-1).
class MetabHolomorph : public Holomorph {
 public:
  explicit MetabHolomorph(const PqParams& params, unsigned alpha_rank = 0);

  NElement n_mul(NElement x, NElement y) const override;
  NElement apply(const AutPair& a, NElement x) const override;
  AutPair compose(const AutPair& a, const AutPair& b) const override;
  AutPair aut_identity() const override { return {1, 0}; }
  u64 aut_order() const override { return params_.p * (params_.p - 1); }

  u64 g() const noexcept { return g_; }
  u64 a_alpha() const noexcept { return a_alpha_; }
  u64 a_beta() const noexcept { return a_beta_; }

  HolElement model(const MetabCoords& c) const;
  Perm model_perm(const MetabCoords& c) const { return to_perm(model(c)); }
  MetabCoords coords(const HolElement& h) const;

 private:
  u64 g_;
  u64 a_alpha_;
  u64 a_beta_;
  std::vector<u64> g_pow_sum_;  // 1 + g + ... + g^(j-1)
};

}  // namespace hgspq
