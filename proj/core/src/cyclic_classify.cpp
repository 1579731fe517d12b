#include "hgspq/cyclic_classify.hpp"

#include <map>

#include "hgspq/errors.hpp"
#include "hgspq/parallel.hpp"
#include "labels.hpp"

namespace hgspq {

using detail::cyc;
using detail::direct;
using detail::semidirect;

std::vector<std::vector<EllSubgroupDescriptor>> cyclic_ell_subgroups(const PqParams& params) {
  std::vector<std::vector<EllSubgroupDescriptor>> out;
  for (std::size_t i = 0; i < params.m(); ++i)
    out.push_back(enumerate_ell_subgroups(params.e[i], params.f[i], params.ell[i]));
  return out;
}

namespace {

std::string type1_key(unsigned c, const std::vector<std::size_t>& x,
                      const std::vector<std::vector<EllSubgroupDescriptor>>& subs) {
  std::string k = "N⋊[" + std::to_string(c) + ";";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) k += ",";
    k += subs[i][x[i]].label();
  }
  return k + "]";
}

std::string type2_key(unsigned c, const std::vector<unsigned>& ci) {
  std::string k = "J[" + std::to_string(c) + ";";
  for (std::size_t i = 0; i < ci.size(); ++i) {
    if (i) k += ",";
    k += std::to_string(ci[i]);
  }
  return k + "]";
}

// Odometer over ranges[i].
bool advance(std::vector<std::size_t>& v, const std::vector<std::size_t>& ranges) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (++v[i] < ranges[i]) return true;
    v[i] = 0;
  }
  return false;
}

Perm realize(const CyclicFamilyDescriptor& d, const PqParams& params,
             const std::vector<std::vector<EllSubgroupDescriptor>>& subs,
             const CyclicHolomorph& hol, std::vector<Perm>& gens) {
  const u64 q = params.q;
  const std::size_t m = params.m();
  auto aut = [&](const AutPair& a) { return hol.to_perm({{0, 0}, a}); };
  gens.push_back(hol.gen("sigma"));
  if (d.family == CyclicFamilyDescriptor::Family::Type1) {
    gens.push_back(hol.gen("tau"));
    if (d.c > 0) gens.push_back(aut(hol.aut_from_exponents(ipow(q, params.e0 - d.c), {}, {})));
    for (std::size_t i = 0; i < m; ++i)
      for (const auto& [gx, gy] : subs[i][d.x[i]].generators) {
        std::vector<u64> xs(m, 0), ys(m, 0);
        xs[i] = gx;
        ys[i] = gy;
        gens.push_back(aut(hol.aut_from_exponents(0, xs, ys)));
      }
  } else {
    const AutPair a = hol.aut_from_exponents(d.t * ipow(q, params.e0 - d.c), {}, {});
    gens.push_back(hol.to_perm({{0, 1}, a}));
    for (std::size_t i = 0; i < m; ++i) {
      if (d.ci[i] == 0) continue;
      std::vector<u64> xs(m, 0);
      xs[i] = ipow(params.ell[i], params.e[i] - d.ci[i]);
      gens.push_back(aut(hol.aut_from_exponents(0, xs, {})));
    }
  }
  return gens.front();
}

}  // namespace

std::vector<CyclicFamilyDescriptor> enumerate_transitive_cyclic(
    const PqParams& params, const std::vector<std::vector<EllSubgroupDescriptor>>& subs,
    const CyclicHolomorph* hol, unsigned threads) {
  const u64 p = params.p, q = params.q;
  const std::size_t m = params.m();
  std::vector<CyclicFamilyDescriptor> out;

  std::vector<std::size_t> ranges;
  for (const auto& s : subs) ranges.push_back(s.size());
  for (unsigned c = 0; c <= params.e0; ++c) {
    std::vector<std::size_t> x(m, 0);
    do {
      CyclicFamilyDescriptor d;
      d.family = CyclicFamilyDescriptor::Family::Type1;
      d.c = c;
      d.x = x;
      d.key = type1_key(c, x, subs);
      d.order = p * q * ipow(q, c);
      for (std::size_t i = 0; i < m; ++i) d.order *= subs[i][x[i]].order;
      out.push_back(std::move(d));
    } while (advance(x, ranges));
  }

  std::vector<std::size_t> ci_ranges;
  for (std::size_t i = 0; i < m; ++i) ci_ranges.push_back(params.e[i] + 1);
  for (unsigned c = 1; c <= params.e0; ++c) {
    std::vector<std::size_t> ci(m, 0);
    do {
      for (u64 t = 1; t < q; ++t) {
        CyclicFamilyDescriptor d;
        d.family = CyclicFamilyDescriptor::Family::Type2;
        d.c = c;
        d.t = t;
        d.ci.assign(ci.begin(), ci.end());
        d.key = type2_key(c, d.ci);
        d.order = p * ipow(q, c);
        for (std::size_t i = 0; i < m; ++i) d.order *= ipow(params.ell[i], d.ci[i]);
        out.push_back(std::move(d));
      }
    } while (advance(ci, ci_ranges));
  }

  if (hol) {
    parallel_for(out.size(), threads, [&](std::size_t k) {
      std::vector<Perm> gens;
      realize(out[k], params, subs, *hol, gens);
      out[k].group = PermGroup::closure(std::move(gens), hol->degree(), hol->hol_order());
      if (out[k].group->order() != out[k].order)
        throw InvariantViolation("realized " + out[k].key + " has order " +
                                 std::to_string(out[k].group->order()) + ", expected " +
                                 std::to_string(out[k].order));
    });
  }
  return out;
}

std::vector<IsoClassRecord> cyclic_iso_classes(
    const PqParams& params, const std::vector<std::vector<EllSubgroupDescriptor>>& subs,
    const std::vector<CyclicFamilyDescriptor>& descriptors) {
  const u64 p = params.p, q = params.q;
  std::vector<IsoClassRecord> out;
  std::map<std::string, std::size_t> index;
  for (const auto& d : descriptors) {
    auto [it, fresh] = index.emplace(d.key, out.size());
    if (!fresh) {
      ++out[it->second].n_groups;
      continue;
    }
    IsoClassRecord r;
    r.n_type = NType::Cyclic;
    r.key = d.key;
    r.c = d.c;
    r.group_order = d.order;
    r.n_groups = 1;
    if (d.family == CyclicFamilyDescriptor::Family::Type1) {
      u64 x = 1, d1 = 1, d2 = 1;
      bool alpha_only = true;
      for (std::size_t i = 0; i < params.m(); ++i) {
        const auto& s = subs[i][d.x[i]];
        x *= s.order;
        d1 *= s.alpha_part;
        d2 *= s.beta_part;
        alpha_only = alpha_only && s.alpha_part == s.order;
      }
      const u64 d3 = x / (d1 * d2);
      const u64 qc = ipow(q, d.c);
      const std::string core = (qc * d1 == 1 && d2 == 1)
                                   ? cyc(p * q)
                                   : direct(semidirect(cyc(p), qc * d1), semidirect(cyc(q), d2));
      r.structure = semidirect(core, d3);
      r.family = "Type1";
      r.d = alpha_only ? x : 0;
      r.rel_aut = (p - 1) * (q - 1);
      r.acg = true;
      r.regular = d.c == 0 && x == 1;
      r.published = {1, (p - 1) * (q - 1), 1};
    } else {
      u64 a = 1;
      for (std::size_t i = 0; i < params.m(); ++i) a *= ipow(params.ell[i], d.ci[i]);
      const bool j_only = d.c == 1 && a == 1;
      r.structure = semidirect(cyc(p), ipow(q, d.c) * a);
      r.family = "Type2";
      r.d = a;
      r.rel_aut = j_only ? p * (p - 1) : p - 1;
      r.acg = d.c == 1;
      r.regular = j_only;
      r.published = {euler_phi(ipow(q, d.c)), r.rel_aut, j_only ? p : ipow(q, d.c - 1)};
    }
    out.push_back(std::move(r));
  }
  return out;
}

void cyclic_hgs_counts(std::vector<IsoClassRecord>& records, const PqParams& params) {
  const u64 aut_n = (params.p - 1) * (params.q - 1);
  for (auto& r : records) r.n_hgs = byott_count(r.n_groups, r.rel_aut, aut_n);
}

CyclicTotals cyclic_theorem_totals(const PqParams& params,
                                   const std::vector<IsoClassRecord>& records) {
  CyclicTotals t;
  t.enumerated = records.size();
  for (const auto& r : records) t.non_acg += r.acg ? 0 : 1;
  i64 prod_closed = 1, prod_direct = 1;
  u64 prod_e = 1;
  for (std::size_t i = 0; i < params.m(); ++i) {
    const unsigned e = params.e[i], f = params.f[i];
    const auto s1 = sigma1(e, f, params.ell[i]);
    const auto s2 = sigma2(e, f, params.ell[i]);
    const i64 base = static_cast<i64>((e + 1) * (f + 1));
    prod_closed *= base + s1.closed_form + s2.closed_form;
    prod_direct *= base + s1.direct_sum + s2.direct_sum;
    prod_e *= e + 1;
  }
  const i64 e0 = params.e0;
  t.formula = (1 + e0) * prod_closed + e0 * static_cast<i64>(prod_e);
  t.formula_direct = (1 + e0) * prod_direct + e0 * static_cast<i64>(prod_e);
  t.formula_non_acg = (params.e0 - 1) * prod_e;
  if (params.p == 2 * params.q + 1) {
    u64 odd = params.q - 1;
    u64 r = 0;
    while (odd % 2 == 0) {
      odd /= 2;
      ++r;
    }
    t.sophie_germain = (6 * r + 4) * sigma0(odd);
  }
  return t;
}

std::vector<Discrepancy> lattice_discrepancies(const EllLatticeReport& r,
                                               const std::string& prefix) {
  std::vector<Discrepancy> out;
  const auto n = static_cast<i64>(r.enumerated);
  if (r.closed_total != n)
    out.push_back({prefix + ".closed_form", std::to_string(r.closed_total), std::to_string(n)});
  if (r.direct_total != n)
    out.push_back({prefix + ".direct_sum", std::to_string(r.direct_total), std::to_string(n)});
  if (r.brute_force != r.enumerated)
    out.push_back({prefix + ".brute_force", std::to_string(r.brute_force), std::to_string(n)});
  return out;
}

CyclicClassification classify_cyclic(const PqParams& params, const ClassifyOptions& opts) {
  CyclicClassification out;
  out.params = params;
  out.ell_subgroups = cyclic_ell_subgroups(params);
  const CyclicHolomorph hol(params, opts.alpha_rank);
  out.realized = hol.hol_order() <= opts.realize_cap;
  out.descriptors = enumerate_transitive_cyclic(params, out.ell_subgroups,
                                                out.realized ? &hol : nullptr, opts.threads);
  out.records = cyclic_iso_classes(params, out.ell_subgroups, out.descriptors);
  if (out.realized) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < out.records.size(); ++i) index[out.records[i].key] = i;
    for (const auto& d : out.descriptors) out.records[index.at(d.key)].members.push_back(*d.group);
    out.failures = certify_realized_classes(out.records, opts);
  }
  cyclic_hgs_counts(out.records, params);
  out.totals = cyclic_theorem_totals(params, out.records);

  auto& disc = out.discrepancies;
  disc = published_discrepancies(out.records, "cyclic");
  const auto& t = out.totals;
  if (t.formula != static_cast<i64>(t.enumerated))
    disc.push_back({"cyclic.theorem.classes", std::to_string(t.formula),
                    std::to_string(t.enumerated)});
  if (t.formula_non_acg != t.non_acg)
    disc.push_back({"cyclic.theorem.non_acg", std::to_string(t.formula_non_acg),
                    std::to_string(t.non_acg)});
  if (t.sophie_germain && *t.sophie_germain != t.enumerated)
    disc.push_back({"cyclic.remark.sophie_germain_classes", std::to_string(*t.sophie_germain),
                    std::to_string(t.enumerated)});
  for (std::size_t i = 0; i < params.m(); ++i) {
    const auto r = ell_lattice_report(params.e[i], params.f[i], params.ell[i]);
    const std::string site = "cyclic.subgroups(ell=" + std::to_string(params.ell[i]) +
                             ",e=" + std::to_string(params.e[i]) +
                             ",f=" + std::to_string(params.f[i]) + ")";
    for (auto& d : lattice_discrepancies(r, site)) disc.push_back(std::move(d));
  }
  return out;
}

}  // namespace hgspq
