#include "hgspq/metab_classify.hpp"

#include <map>

#include "hgspq/errors.hpp"
#include "hgspq/parallel.hpp"
#include "labels.hpp"

namespace hgspq {

using detail::cyc;
using detail::direct;
using detail::semidirect;

std::string MetabClass::key() const {
  const auto n = [](auto v) { return std::to_string(v); };
  switch (kind) {
    case Kind::Hol: return "hol(" + n(c) + "," + n(d) + ")";
    case Kind::Ptb: return "ptb(" + n(d) + ")";
    case Kind::M: return "M(" + n(c) + "," + n(u) + "," + n(d) + ")";
    case Kind::E1T: return "e1T(" + n(c) + "," + n(d) + ")";
    case Kind::Prod: return "prod(" + n(c) + "," + n(d) + ")";
  }
  return "?";
}

std::string to_string(IntersectionKind k) {
  switch (k) {
    case IntersectionKind::Full: return "full";
    case IntersectionKind::E1Line: return "e1-line";
    case IntersectionKind::E2Line: return "e2-line";
    case IntersectionKind::Other: return "other";
  }
  return "?";
}

TransitivityCheck check_transitivity_conditions(const PermGroup& m, const MetabHolomorph& hol) {
  const u64 p = hol.params().p, q = hol.params().q;
  const u64 g = hol.g();
  TransitivityCheck out;
  u64 in_p = 0;
  bool on_e1 = true, on_e2 = true;
  for (const Perm& x : m.elements()) {
    const NElement eta = hol.element(x(0));
    // eta^-1 = sigma^(-i g^-j) tau^-j
    const u64 jn = (q - eta.j) % q;
    const NElement inv{mulmod((p - eta.i) % p, powmod(g, jn, p), p), jn};
    const NElement s = hol.n_mul(inv, hol.element(x(hol.point({1, 0}))));
    const NElement t = hol.n_mul(inv, hol.element(x(hol.point({0, 1}))));
    if (s.j != 0 || t.j != 1) throw DomainError("check_transitivity_conditions: not in Hol(N)");
    const MetabCoords c = hol.coords({eta, {s.i, t.i}});
    if (c.t != 0) out.projection_ok = true;
    if (c.t == 0 && c.r == 1) {
      ++in_p;
      on_e1 = on_e1 && c.y == 0;
      on_e2 = on_e2 && c.x == 0;
    }
  }
  if (in_p == p * p)
    out.intersection = IntersectionKind::Full;
  else if (in_p == p && on_e1)
    out.intersection = IntersectionKind::E1Line;
  else if (in_p == p && on_e2)
    out.intersection = IntersectionKind::E2Line;
  return out;
}

namespace {

using Kind = MetabClass::Kind;

MetabClass row_class(unsigned row, unsigned c, u64 u, u64 d, u64 q) {
  switch (row) {
    case 1: return c == 0 ? MetabClass{Kind::Ptb, 0, 0, d} : MetabClass{Kind::Hol, c, 0, d};
    case 2:
      if (c == 1 && u == q - 1) return {Kind::Ptb, 0, 0, d};
      if (c == 1) return {Kind::M, 1, std::min(u, q - 1 - u), d};
      return {Kind::M, c, std::min(u, q - u), d};
    case 3:
    case 6: return {Kind::E1T, 1, 0, d};
    case 4:
      if (c == 1 && u == q - 1) return {Kind::Prod, 0, 0, d};
      return {Kind::E1T, c, 0, d};
    case 7:
      if (c == 0) return {Kind::Prod, 0, 0, d};
      return {Kind::E1T, c, 0, d};
    default: return {Kind::Prod, c, 0, d};
  }
}

}  // namespace

std::vector<MetabRowDescriptor> enumerate_table1(const PqParams& params,
                                                 const MetabHolomorph* hol, unsigned threads) {
  const u64 p = params.p, q = params.q, s = params.s;
  const unsigned e0 = params.e0;
  const u64 a = hol ? hol->a_alpha() : element_of_order(params.q_pow_e0(), p);
  const u64 ab = hol ? hol->a_beta() : element_of_order(s, p);
  const u64 g = powmod(a, ipow(q, e0 - 1), p);
  const auto kc = [&](unsigned c) { return powmod(a, ipow(q, e0 - c), p); };
  const auto frac = [&](u64 num_r, u64 den_r, u64 lambda) {
    // (1 - num_r)(1 - den_r)^-1 lambda
    return mulmod(mulmod((1 + p - num_r) % p, invmod((1 + p - den_r) % p, p), p), lambda, p);
  };

  std::vector<MetabRowDescriptor> out;
  // Realized runs list every lambda; formula runs keep lambda = 0 only.
  const bool expand = hol != nullptr;
  u64 mult = 1;
  auto add = [&](unsigned row, unsigned c, u64 d, u64 u, u64 lambda, u64 mu, u64 nu,
                 std::vector<MetabCoords> gens, u64 order) {
    MetabRowDescriptor r;
    r.multiplicity = mult;
    r.row = row;
    r.c = c;
    r.d = d;
    r.u = u;
    r.lambda = lambda;
    r.mu = mu;
    r.nu = nu;
    r.generators = std::move(gens);
    r.cls = row_class(row, c, u, d, q);
    r.order = order;
    out.push_back(std::move(r));
  };
  const MetabCoords e1{1, 0, 0, 1}, e2{0, 1, 0, 1}, T{0, 0, 1, 1};

  // Lambda ranges: rows 3 and 6 collapse to lambda = 0 when d = 1.
  const auto lambda_range = [&](u64 full) {
    mult = expand ? 1 : full;
    return expand ? full : u64{1};
  };
  for (u64 d : divisors(s)) {
    const u64 b = powmod(ab, s / d, p);
    const u64 short_range = d == 1 ? 1 : p;
    mult = 1;
    for (unsigned c = 0; c <= e0; ++c)
      add(1, c, d, 0, 0, 0, 0, {e1, e2, T, {0, 0, 0, kc(c)}, {0, 0, 0, b}},
          d * p * p * ipow(q, 1 + c));
    for (unsigned c = 1; c <= e0; ++c)
      for (u64 u = 1; u < q; ++u)
        add(2, c, d, u, 0, 0, 0, {e1, e2, {0, 0, 1, powmod(kc(c), u, p)}, {0, 0, 0, b}},
            d * p * p * ipow(q, c));
    for (u64 l = 0, n = lambda_range(short_range); l < n; ++l)
      add(3, 1, d, 0, l, 0, 0, {e1, T, {0, l, 0, b}}, p * q * d);
    for (unsigned c = 1; c <= e0; ++c)
      for (u64 u = 1; u < q; ++u) {
        const u64 ku = powmod(kc(c), u, p);
        for (u64 l = 0, n = lambda_range(p); l < n; ++l) {
          const u64 mu = frac(b, ku, l);
          add(4, c, d, u, l, mu, 0, {e1, {0, l, 1, ku}, {0, mu, 0, b}}, p * ipow(q, c) * d);
        }
      }
    for (unsigned c = 1; c <= e0; ++c)
      for (u64 l = 0, n = lambda_range(p); l < n; ++l) {
        const u64 nu = frac(b, kc(c), l);
        add(5, c, d, 0, l, 0, nu, {e1, T, {0, l, 0, kc(c)}, {0, nu, 0, b}},
            p * ipow(q, c + 1) * d);
      }
    for (u64 l = 0, n = lambda_range(short_range); l < n; ++l)
      add(6, 1, d, 0, l, 0, 0, {e2, {0, 0, 1, invmod(g, p)}, {l, 0, 0, b}}, p * q * d);
    for (unsigned c = 0; c <= e0; ++c)
      for (u64 u = c == 0 ? 0 : 1; u < (c == 0 ? 1 : q); ++u) {
        if (c == 1 && u == q - 1) continue;
        const u64 ku = c == 0 ? 1 : powmod(kc(c), u, p);
        for (u64 l = 0, n = lambda_range(p); l < n; ++l) {
          const u64 mu = frac(b, mulmod(g, ku, p), l);
          add(7, c, d, u, l, mu, 0, {e2, {l, 0, 1, ku}, {mu, 0, 0, b}},
              p * ipow(q, std::max(1u, c)) * d);
        }
      }
    for (unsigned c = 1; c <= e0; ++c)
      for (u64 l = 0, n = lambda_range(p); l < n; ++l) {
        const u64 x2 = frac(kc(c), g, l);
        const u64 x3 = frac(b, g, l);
        add(8, c, d, 0, l, x2, x3, {e2, {l, 0, 1, 1}, {x2, 0, 0, kc(c)}, {x3, 0, 0, b}},
            p * ipow(q, c + 1) * d);
      }
  }

  if (hol) {
    parallel_for(out.size(), threads, [&](std::size_t k) {
      auto& r = out[k];
      std::vector<Perm> gens;
      for (const auto& m : r.generators) gens.push_back(hol->model_perm(m));
      r.group = PermGroup::closure(std::move(gens), hol->degree(), hol->hol_order());
      const std::string where = "row " + std::to_string(r.row) + " " + r.cls.key();
      if (r.group->order() != r.order)
        throw InvariantViolation(where + ": order " + std::to_string(r.group->order()) +
                                 ", expected " + std::to_string(r.order));
      if (!check_transitivity_conditions(*r.group, *hol).transitive() ||
          !is_transitive(*r.group))
        throw InvariantViolation(where + ": not transitive");
    });
  }
  return out;
}

u64 metab_rel_aut(const MetabClass& cls, const PqParams& params) {
  const u64 p = params.p, q = params.q;
  switch (cls.kind) {
    case Kind::Hol: return 2 * p * (p - 1);
    case Kind::Ptb: return p * (p - 1);
    case Kind::M: {
      if (cls.c >= 2) return p * (p - 1);
      const u64 single = 2 * cls.u + 1 == q ? 2 : 1;
      return single * (cls.d == 1 ? p : 1) * p * (p - 1);
    }
    case Kind::E1T: return cls.c == 1 && cls.d == 1 ? p * (p - 1) : p - 1;
    case Kind::Prod: return (p - 1) * (q - 1);
  }
  throw InvariantViolation("metab_rel_aut: unknown class");
}

namespace {

std::string structure(const MetabClass& k, const PqParams& params) {
  const u64 p = params.p, q = params.q;
  const std::string cp = cyc(p), n = cp + " ⋊ " + cyc(q);
  switch (k.kind) {
    case Kind::Hol:
      return semidirect(detail::paren(n) + " ⋊ " + detail::paren(cp + " ⋊ " + cyc(ipow(q, k.c))),
                        k.d);
    case Kind::Ptb: return semidirect(direct(n, cp), k.d);
    case Kind::M:
      return "F_" + std::to_string(p) + "^2 ⋊_" + std::to_string(k.u) + " " +
             cyc(k.d * ipow(q, k.c));
    case Kind::E1T: return semidirect(cp, k.d * ipow(q, k.c));
    case Kind::Prod:
      if (k.c == 0 && k.d == 1) return cyc(p * q);
      return direct(semidirect(cp, k.d * ipow(q, k.c)), cyc(q));
  }
  return "?";
}

PublishedValues published(const MetabClass& k, const PqParams& params, u64 n_groups) {
  const u64 p = params.p, q = params.q;
  const u64 phi = euler_phi(ipow(q, k.c));
  switch (k.kind) {
    case Kind::Hol: return {1, 2 * p * (p - 1), 2};
    case Kind::Ptb: return {2, p * (p - 1), 2};
    case Kind::M:
      if (k.c == 1) return {n_groups, metab_rel_aut(k, params), k.d == 1 ? 2 * p : 2};
      return {2 * ipow(q, k.c - 1), p * (p - 1), 2 * ipow(q, k.c - 1)};
    case Kind::E1T:
      if (k.c == 1 && k.d == 1) return {2 * p * (q - 1) + 2, p * (p - 1), 2 * p * (q - 2) + 2};
      return {2 * p * phi, p - 1, 2 * phi};
    case Kind::Prod: return {2 * p, (p - 1) * (q - 1), 2 * (q - 1)};
  }
  return {};
}

}  // namespace

std::vector<IsoClassRecord> metab_iso_classes(const PqParams& params,
                                              const std::vector<MetabRowDescriptor>& descriptors) {
  std::vector<IsoClassRecord> out;
  std::vector<MetabClass> classes;
  std::map<std::string, std::size_t> index;
  for (const auto& d : descriptors) {
    const std::string key = d.cls.key();
    auto [it, fresh] = index.emplace(key, out.size());
    if (fresh) {
      out.emplace_back();
      classes.push_back(d.cls);
    }
    auto& r = out[it->second];
    r.n_groups += d.multiplicity;
    const std::string row = "row" + std::to_string(d.row);
    if (r.family.find(row) == std::string::npos)
      r.family += (r.family.empty() ? "" : ",") + row;
    if (!fresh) continue;
    r.n_type = NType::Metabelian;
    r.key = key;
    r.c = d.cls.c;
    r.d = d.cls.d;
    r.group_order = d.order;
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto& r = out[i];
    const auto& k = classes[i];
    r.structure = structure(k, params);
    r.rel_aut = metab_rel_aut(k, params);
    r.acg = !(k.kind == Kind::M || (k.kind == Kind::E1T && k.c >= 2));
    r.regular = (k.kind == Kind::E1T && k.c == 1 && k.d == 1) ||
                (k.kind == Kind::Prod && k.c == 0 && k.d == 1);
    r.published = published(k, params, r.n_groups);
  }
  return out;
}

void metab_hgs_counts(std::vector<IsoClassRecord>& records, const PqParams& params) {
  const u64 aut_n = params.p * (params.p - 1);
  for (auto& r : records) r.n_hgs = byott_count(r.n_groups, r.rel_aut, aut_n);
}

MetabTotals metab_theorem_totals(const PqParams& params,
                                 const std::vector<IsoClassRecord>& records) {
  MetabTotals t;
  t.enumerated = records.size();
  for (const auto& r : records) (r.acg ? t.acg : t.non_acg) += 1;
  const u64 q = params.q, e0 = params.e0, sd = sigma0(params.s);
  t.formula = sd * (3 * e0 + 3 + (q - 3) / 2 + (e0 - 1) * (q - 1) / 2);
  t.formula_non_acg = sd * (1 + (q - 3) / 2 + (e0 - 1) * (q - 1) / 2);
  t.formula_acg = sd * (3 * e0 + 2);
  return t;
}

MetabClassification classify_metab(const PqParams& params, const ClassifyOptions& opts) {
  MetabClassification out;
  out.params = params;
  const MetabHolomorph hol(params, opts.alpha_rank);
  out.realized = hol.hol_order() <= opts.realize_cap;
  out.descriptors = enumerate_table1(params, out.realized ? &hol : nullptr, opts.threads);
  out.records = metab_iso_classes(params, out.descriptors);
  if (out.realized) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < out.records.size(); ++i) index[out.records[i].key] = i;
    for (const auto& d : out.descriptors)
      out.records[index.at(d.cls.key())].members.push_back(*d.group);
    out.failures = certify_realized_classes(out.records, opts);
  }
  metab_hgs_counts(out.records, params);
  out.totals = metab_theorem_totals(params, out.records);

  auto& disc = out.discrepancies;
  disc = published_discrepancies(out.records, "metabelian");
  const u64 p = params.p;
  for (const auto& r : out.records)
    if (r.key.starts_with("ptb(") && r.d > 1 && r.rel_aut != 2 * p * (p - 1))
      disc.push_back({"metabelian." + r.key + ".rel_aut.contains_P", std::to_string(2 * p * (p - 1)),
                      std::to_string(r.rel_aut)});
  const auto& t = out.totals;
  const auto cmp = [&](const char* site, u64 stated, u64 computed) {
    if (stated != computed)
      disc.push_back({site, std::to_string(stated), std::to_string(computed)});
  };
  cmp("metabelian.theorem.classes", t.formula, t.enumerated);
  cmp("metabelian.theorem.non_acg", t.formula_non_acg, t.non_acg);
  cmp("metabelian.theorem.acg", t.formula_acg, t.acg);
  return out;
}

}  // namespace hgspq
