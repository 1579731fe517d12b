#include "hgspq/report.hpp"

#include <algorithm>
#include <set>

#include "hgspq/errors.hpp"
#include "hgspq/parallel.hpp"

namespace hgspq {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

std::string to_string(NType t) { return t == NType::Cyclic ? "cyclic" : "metabelian"; }

u64 byott_count(u64 e_prime, u64 aut_gg, u64 aut_n) {
  if (aut_n == 0) throw DomainError("byott_count: |Aut(N)| must be positive");
  const u128 num = static_cast<u128>(e_prime) * aut_gg;
  if (num % aut_n != 0)
    throw InvariantViolation("byott_count: " + std::to_string(e_prime) + " * " +
                             std::to_string(aut_gg) + " not divisible by " +
                             std::to_string(aut_n));
  return static_cast<u64>(num / aut_n);
}

std::vector<std::string> certify_realized_classes(std::vector<IsoClassRecord>& records,
                                                  const ClassifyOptions& opts) {
  std::vector<std::vector<std::string>> per(records.size());
  parallel_for(records.size(), opts.threads, [&](std::size_t i) {
    auto& r = records[i];
    auto& fail = per[i];
    if (r.members.empty()) return;
    std::sort(r.members.begin(), r.members.end());
    if (std::adjacent_find(r.members.begin(), r.members.end()) != r.members.end())
      fail.push_back(r.key + ": duplicate members");
    const PermGroup& rep = r.members.front();
    r.representative = rep;
    for (std::size_t k = 0; k < r.members.size(); ++k) {
      const auto& m = r.members[k];
      if (!is_transitive(m)) fail.push_back(r.key + ": member " + std::to_string(k) + " intransitive");
      if (k == 0) continue;
      const auto w = abstract_isomorphic(rep, m, true);
      if (!w || !verify_witness(rep, m, *w, true))
        fail.push_back(r.key + ": member " + std::to_string(k) +
                       " not permutation-isomorphic to the representative");
    }
    const u64 n = r.members.size();
    if (n != r.n_groups)
      fail.push_back(r.key + ": " + std::to_string(n) + " members, formula " +
                     std::to_string(r.n_groups));
    const u64 rel = rel_aut_order(rep, stabilizer(rep, 0), opts.aut_cap);
    if (rel != r.rel_aut)
      fail.push_back(r.key + ": |Aut(M,M')| = " + std::to_string(rel) + ", formula " +
                     std::to_string(r.rel_aut));
    const bool acg = has_regular_normal_subgroup(rep);
    if (acg != r.acg)
      fail.push_back(r.key + ": ACG " + std::to_string(acg) + ", formula " + std::to_string(r.acg));
    const bool regular = rep.order() == rep.degree();
    if (regular != r.regular) fail.push_back(r.key + ": regularity differs from formula");
    if (rep.order() != r.group_order) fail.push_back(r.key + ": group order differs from formula");
    r.n_groups = n;
    r.rel_aut = rel;
    r.acg = acg;
    r.regular = regular;
    r.evidence = "witness";
  });

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < records.size(); ++i)
    for (std::size_t j = i + 1; j < records.size(); ++j)
      if (records[i].representative && records[j].representative &&
          records[i].representative->order() == records[j].representative->order())
        pairs.emplace_back(i, j);
  std::vector<char> merged(pairs.size(), 0);
  parallel_for(pairs.size(), opts.threads, [&](std::size_t k) {
    const auto& [i, j] = pairs[k];
    merged[k] = abstract_isomorphic(*records[i].representative, *records[j].representative, true)
                    .has_value();
  });

  std::vector<std::string> out;
  for (auto& f : per) out.insert(out.end(), f.begin(), f.end());
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (merged[k])
      out.push_back(records[pairs[k].first].key + " and " + records[pairs[k].second].key +
                    " are permutation-isomorphic");
  return out;
}

std::vector<Discrepancy> published_discrepancies(const std::vector<IsoClassRecord>& records,
                                                 const std::string& prefix) {
  std::vector<Discrepancy> out;
  for (const auto& r : records) {
    const auto check = [&](const char* field, const std::optional<u64>& stated, u64 computed) {
      if (stated && *stated != computed)
        out.push_back({prefix + "." + r.key + "." + field, std::to_string(*stated),
                       std::to_string(computed)});
    };
    check("n_groups", r.published.n_groups, r.n_groups);
    check("rel_aut", r.published.rel_aut, r.rel_aut);
    check("n_hgs", r.published.n_hgs, r.n_hgs);
  }
  return out;
}

namespace {

bool rule_match(const IsoClassRecord& cyc, const IsoClassRecord& met) {
  if (met.key.starts_with("prod("))
    return cyc.family == "Type1" && cyc.d != 0 && cyc.c == met.c && cyc.d == met.d;
  if (met.key.starts_with("e1T("))
    return cyc.family == "Type2" && cyc.c == met.c && cyc.d == met.d;
  return false;
}

BothTypesRow make_row(const IsoClassRecord& c, const IsoClassRecord& m, const char* evidence) {
  return {m.structure, c.key, m.key, c.n_hgs, m.n_hgs, c.acg, m.acg, evidence};
}

}  // namespace

std::vector<BothTypesRow> both_types_table(const std::vector<IsoClassRecord>& cyclic,
                                           const std::vector<IsoClassRecord>& metab) {
  std::vector<BothTypesRow> out;
  for (const auto& c : cyclic)
    for (const auto& m : metab) {
      if (c.group_order != m.group_order) continue;
      if (c.representative && m.representative) {
        if (abstract_isomorphic(*c.representative, *m.representative, true))
          out.push_back(make_row(c, m, "witness"));
      } else if (rule_match(c, m)) {
        out.push_back(make_row(c, m, "formula"));
      }
    }
  return out;
}

ClassificationReport build_report(u64 p, u64 q, const ReportOptions& opts) {
  ClassificationReport rep;
  rep.p = p;
  rep.q = q;
  const auto res = pq_parameters(p, q);
  if (const auto* u = std::get_if<UniqueStructureRegime>(&res)) {
    (void)u;
    IsoClassRecord r;
    r.n_type = NType::Cyclic;
    r.key = "N";
    r.structure = "C_" + std::to_string(p * q);
    r.family = "unique";
    r.group_order = p * q;
    r.n_groups = 1;
    r.rel_aut = (p - 1) * (q - 1);
    r.n_hgs = 1;
    r.acg = true;
    r.regular = true;
    rep.cyclic.push_back(std::move(r));
    return rep;
  }
  const auto& params = std::get<PqParams>(res);
  rep.params = params;
  if (opts.cyclic) {
    auto c = classify_cyclic(params, opts.classify);
    rep.realized_cyclic = c.realized;
    rep.cyclic = std::move(c.records);
    rep.totals.cyclic = c.totals;
    rep.discrepancies.insert(rep.discrepancies.end(), c.discrepancies.begin(),
                             c.discrepancies.end());
    rep.failures.insert(rep.failures.end(), c.failures.begin(), c.failures.end());
  }
  if (opts.metabelian) {
    auto m = classify_metab(params, opts.classify);
    rep.realized_metab = m.realized;
    rep.metabelian = std::move(m.records);
    rep.totals.metab = m.totals;
    rep.discrepancies.insert(rep.discrepancies.end(), m.discrepancies.begin(),
                             m.discrepancies.end());
    rep.failures.insert(rep.failures.end(), m.failures.begin(), m.failures.end());
  }
  if (opts.cyclic && opts.metabelian) {
    rep.both_types = both_types_table(rep.cyclic, rep.metabelian);
    if (rep.realized_cyclic && rep.realized_metab) {
      std::set<std::pair<std::string, std::string>> by_witness, by_rule;
      for (const auto& r : rep.both_types) by_witness.emplace(r.cyclic_key, r.metab_key);
      for (const auto& c : rep.cyclic)
        for (const auto& m : rep.metabelian)
          if (rule_match(c, m)) by_rule.emplace(c.key, m.key);
      if (by_witness != by_rule)
        rep.failures.push_back("both-types: witness matching differs from the parameter rule");
    }
    const u64 sd = sigma0(params.s), e0 = params.e0;
    auto& t = rep.totals;
    t.both_types = rep.both_types.size();
    t.both_types_formula = sd * (2 * e0 + 1);
    u64 non_acg = 0;
    for (const auto& r : rep.both_types) non_acg += r.acg_metab ? 0 : 1;
    t.both_non_acg = non_acg;
    t.both_non_acg_formula = sd * (e0 - 1);
    if (*t.both_types != *t.both_types_formula)
      rep.discrepancies.push_back({"both_types.theorem.classes",
                                   std::to_string(*t.both_types_formula),
                                   std::to_string(*t.both_types)});
    if (non_acg != *t.both_non_acg_formula)
      rep.discrepancies.push_back({"both_types.theorem.non_acg",
                                   std::to_string(*t.both_non_acg_formula),
                                   std::to_string(non_acg)});
  }
  return rep;
}

}  // namespace hgspq
