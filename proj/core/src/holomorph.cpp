#include "hgspq/holomorph.hpp"

#include "hgspq/errors.hpp"

namespace hgspq {

HolElement Holomorph::mul(const HolElement& x, const HolElement& y) const {
  return {n_mul(x.eta, apply(x.aut, y.eta)), compose(x.aut, y.aut)};
}

Perm Holomorph::to_perm(const HolElement& h) const {
  std::vector<Point> img(degree());
  for (u64 i = 0; i < params_.p; ++i)
    for (u64 j = 0; j < params_.q; ++j) {
      const NElement x{i, j};
      img[point(x)] = point(n_mul(h.eta, apply(h.aut, x)));
    }
  return Perm(std::move(img));
}

const Perm& Holomorph::gen(const std::string& name) const {
  auto it = gens_.find(name);
  if (it == gens_.end()) throw DomainError("unknown holomorph generator: " + name);
  return it->second;
}

PermGroup Holomorph::build_group(std::size_t cap) const {
  std::vector<Perm> gens;
  for (const auto& [name, p] : gens_) gens.push_back(p);
  return PermGroup::closure(std::move(gens), degree(), cap);
}

PermGroup Holomorph::lambda_n() const {
  return PermGroup::closure({gen("sigma"), gen("tau")}, degree());
}

// ---------------------------------------------------------------- cyclic

CyclicHolomorph::CyclicHolomorph(const PqParams& params, unsigned alpha_rank)
    : Holomorph(params) {
  const u64 p = params.p, q = params.q;
  a_alpha_ = element_of_order(params.q_pow_e0(), p, alpha_rank);
  gens_["sigma"] = to_perm({{1, 0}, aut_identity()});
  gens_["tau"] = to_perm({{0, 1}, aut_identity()});
  gens_["alpha"] = to_perm({{0, 0}, {a_alpha_, 1}});
  for (std::size_t i = 0; i < params.m(); ++i) {
    const u64 l = params.ell[i];
    a_alpha_i_.push_back(element_of_order(ipow(l, params.e[i]), p));
    b_beta_i_.push_back(element_of_order(ipow(l, params.f[i]), q));
    const std::string k = std::to_string(i + 1);
    gens_["alpha_" + k] = to_perm({{0, 0}, {a_alpha_i_.back(), 1}});
    gens_["beta_" + k] = to_perm({{0, 0}, {1, b_beta_i_.back()}});
  }
}

NElement CyclicHolomorph::n_mul(NElement x, NElement y) const {
  return {(x.i + y.i) % params_.p, (x.j + y.j) % params_.q};
}

NElement CyclicHolomorph::apply(const AutPair& a, NElement x) const {
  return {mulmod(a.a, x.i, params_.p), mulmod(a.b, x.j, params_.q)};
}

AutPair CyclicHolomorph::compose(const AutPair& a, const AutPair& b) const {
  return {mulmod(a.a, b.a, params_.p), mulmod(a.b, b.b, params_.q)};
}

AutPair CyclicHolomorph::aut_from_exponents(u64 x, const std::vector<u64>& xs,
                                            const std::vector<u64>& ys) const {
  const u64 p = params_.p, q = params_.q;
  AutPair r{powmod(a_alpha_, x, p), 1};
  for (std::size_t i = 0; i < params_.m(); ++i) {
    if (i < xs.size()) r.a = mulmod(r.a, powmod(a_alpha_i_[i], xs[i], p), p);
    if (i < ys.size()) r.b = mulmod(r.b, powmod(b_beta_i_[i], ys[i], q), q);
  }
  return r;
}

PermGroup CyclicHolomorph::hall_pq_subgroup() const {
  return PermGroup::closure({gen("sigma"), gen("tau"), gen("alpha")}, degree());
}

// ------------------------------------------------------------ metabelian

MetabHolomorph::MetabHolomorph(const PqParams& params, unsigned alpha_rank)
    : Holomorph(params) {
  const u64 p = params.p, q = params.q;
  a_alpha_ = element_of_order(params.q_pow_e0(), p, alpha_rank);
  a_beta_ = element_of_order(params.s, p);
  g_ = powmod(a_alpha_, ipow(q, params.e0 - 1), p);
  g_pow_sum_.assign(q + 1, 0);
  for (u64 j = 1, gp = 1; j <= q; ++j, gp = mulmod(gp, g_, p))
    g_pow_sum_[j] = (g_pow_sum_[j - 1] + gp) % p;

  gens_["sigma"] = to_perm({{1, 0}, aut_identity()});
  gens_["tau"] = to_perm({{0, 1}, aut_identity()});
  gens_["alpha"] = to_perm({{0, 0}, {a_alpha_, 0}});
  gens_["beta"] = to_perm({{0, 0}, {a_beta_, 0}});
  gens_["epsilon"] = to_perm({{0, 0}, {1, 1}});
  gens_["e1"] = model_perm({1, 0, 0, 1});
  gens_["e2"] = model_perm({0, 1, 0, 1});
  gens_["f"] = model_perm({1, p - 1, 0, 1});
  gens_["T"] = model_perm({0, 0, 1, 1});
  gens_["A"] = model_perm({0, 0, 0, a_alpha_});
  gens_["B"] = model_perm({0, 0, 0, a_beta_});
}

NElement MetabHolomorph::n_mul(NElement x, NElement y) const {
  const u64 p = params_.p;
  return {(x.i + mulmod(powmod(g_, x.j, p), y.i, p)) % p, (x.j + y.j) % params_.q};
}

NElement MetabHolomorph::apply(const AutPair& a, NElement x) const {
  const u64 p = params_.p;
  return {(mulmod(a.a, x.i, p) + mulmod(a.b, g_pow_sum_[x.j], p)) % p, x.j};
}

AutPair MetabHolomorph::compose(const AutPair& a, const AutPair& b) const {
  const u64 p = params_.p;
  return {mulmod(a.a, b.a, p), (mulmod(a.a, b.b, p) + a.b) % p};
}

HolElement MetabHolomorph::model(const MetabCoords& c) const {
  const u64 p = params_.p;
  const u64 x = c.x % p, y = c.y % p;
  // x e1 + y e2 = sigma^(x+y) epsilon^((g-1)y)
  const HolElement v{{(x + y) % p, 0}, {1, mulmod((g_ + p - 1) % p, y, p)}};
  const HolElement r{{0, c.t % params_.q}, {c.r % p, 0}};
  return mul(v, r);
}

MetabCoords MetabHolomorph::coords(const HolElement& h) const {
  const u64 p = params_.p;
  const u64 j = h.eta.j;
  const u64 y = h.aut.b;
  const u64 x = (h.eta.i + p - mulmod(y, g_pow_sum_[j], p)) % p;
  const u64 y2 = mulmod(y, invmod((g_ + p - 1) % p, p), p);
  return {(x + p - y2) % p, y2, j, h.aut.a};
}

}  // namespace hgspq
