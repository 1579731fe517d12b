#include "hgspq/render.hpp"

#include <algorithm>
#include <sstream>

#include "hgspq/errors.hpp"
#include "json.hpp"

namespace hgspq {

using json = nlohmann::ordered_json;

Format parse_format(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw DomainError("unknown format: " + s);
}

namespace {

std::string str(u64 v) { return std::to_string(v); }

json opt(const std::optional<u64>& v) { return v ? json(str(*v)) : json(nullptr); }

json record_json(const IsoClassRecord& r) {
  return {{"key", r.key},
          {"structure_label", r.structure},
          {"type", to_string(r.n_type)},
          {"family", r.family},
          {"c", r.c},
          {"d", r.d},
          {"group_order", str(r.group_order)},
          {"n_groups", str(r.n_groups)},
          {"rel_aut_order", str(r.rel_aut)},
          {"n_hgs", str(r.n_hgs)},
          {"acg", r.acg},
          {"regular", r.regular},
          {"evidence", r.evidence},
          {"published",
           {{"n_groups", opt(r.published.n_groups)},
            {"rel_aut_order", opt(r.published.rel_aut)},
            {"n_hgs", opt(r.published.n_hgs)}}}};
}

json params_json(const ClassificationReport& rep) {
  if (!rep.params) return {{"regime", "unique"}};
  const auto& pp = *rep.params;
  json ell = json::array();
  for (std::size_t i = 0; i < pp.m(); ++i)
    ell.push_back({{"ell", pp.ell[i]}, {"e", pp.e[i]}, {"f", pp.f[i]}});
  return {{"regime", "general"}, {"e0", pp.e0}, {"s", str(pp.s)}, {"ell", ell}};
}

json totals_json(const ReportTotals& t) {
  json j = json::object();
  if (t.cyclic) {
    const auto& c = *t.cyclic;
    j["cyclic"] = {{"classes", str(c.enumerated)},
                   {"formula_closed", std::to_string(c.formula)},
                   {"formula_direct", std::to_string(c.formula_direct)},
                   {"non_acg", str(c.non_acg)},
                   {"formula_non_acg", str(c.formula_non_acg)},
                   {"sophie_germain", opt(c.sophie_germain)}};
  }
  if (t.metab) {
    const auto& m = *t.metab;
    j["metabelian"] = {{"classes", str(m.enumerated)},
                       {"formula", str(m.formula)},
                       {"non_acg", str(m.non_acg)},
                       {"formula_non_acg", str(m.formula_non_acg)},
                       {"acg", str(m.acg)},
                       {"formula_acg", str(m.formula_acg)}};
  }
  if (t.both_types)
    j["both_types"] = {{"classes", opt(t.both_types)},
                       {"formula", opt(t.both_types_formula)},
                       {"non_acg", opt(t.both_non_acg)},
                       {"formula_non_acg", opt(t.both_non_acg_formula)}};
  return j;
}

std::string render_json(const ClassificationReport& rep, const VerificationSummary* v) {
  json j;
  j["p"] = rep.p;
  j["q"] = rep.q;
  j["params"] = params_json(rep);
  j["cyclic"] = json::array();
  for (const auto& r : rep.cyclic) j["cyclic"].push_back(record_json(r));
  j["metabelian"] = json::array();
  for (const auto& r : rep.metabelian) j["metabelian"].push_back(record_json(r));
  j["both_types"] = json::array();
  for (const auto& b : rep.both_types)
    j["both_types"].push_back({{"structure_label", b.structure},
                               {"cyclic_key", b.cyclic_key},
                               {"metabelian_key", b.metab_key},
                               {"n_hgs_cyclic", str(b.n_hgs_cyclic)},
                               {"n_hgs_metab", str(b.n_hgs_metab)},
                               {"acg_cyclic", b.acg_cyclic},
                               {"acg_metab", b.acg_metab},
                               {"evidence", b.evidence}});
  j["totals"] = totals_json(rep.totals);
  j["discrepancies"] = json::array();
  for (const auto& d : rep.discrepancies)
    j["discrepancies"].push_back(
        {{"site", d.site}, {"paper_value", d.paper_value}, {"computed_value", d.computed_value}});
  if (v)
    j["verification"] = {{"mode", v->mode},
                         {"certification_failures", rep.failures},
                         {"failures", v->failures},
                         {"warnings", v->warnings}};
  return j.dump(2) + "\n";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const ClassificationReport& rep) {
  std::ostringstream os;
  os << "structure_label,n_groups,rel_aut_order,n_hgs,acg,type,key\n";
  for (const auto* list : {&rep.cyclic, &rep.metabelian})
    for (const auto& r : *list)
      os << csv_field(r.structure) << ',' << r.n_groups << ',' << r.rel_aut << ',' << r.n_hgs
         << ',' << (r.acg ? "true" : "false") << ',' << to_string(r.n_type) << ','
         << csv_field(r.key) << '\n';
  return os.str();
}

// Display width in code points.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

void table(std::ostringstream& os, const std::vector<std::string>& head,
           const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(head.size());
  for (std::size_t i = 0; i < head.size(); ++i) w[i] = width(head[i]);
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], width(r[i]));
  const auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      os << "  " << r[i];
      if (i + 1 < r.size()) os << std::string(w[i] - width(r[i]), ' ');
    }
    os << '\n';
  };
  line(head);
  std::vector<std::string> rule;
  for (auto x : w) rule.push_back(std::string(x, '-'));
  line(rule);
  for (const auto& r : rows) line(r);
}

void records_table(std::ostringstream& os, const std::string& title,
                   const std::vector<IsoClassRecord>& recs) {
  os << title << " (" << recs.size() << " classes)\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : recs)
    rows.push_back({r.structure, r.key, str(r.n_groups), str(r.rel_aut), str(r.n_hgs),
                    r.acg ? "yes" : "no", r.evidence});
  table(os, {"Structure", "Key", "#groups", "|Aut(M,M')|", "#HGS", "ACG", "Evidence"}, rows);
  os << '\n';
}

std::string render_table(const ClassificationReport& rep, const VerificationSummary* v) {
  std::ostringstream os;
  os << "p = " << rep.p << ", q = " << rep.q;
  if (!rep.params) {
    os << ": q does not divide p-1; unique Hopf-Galois structure, cyclic type, "
          "almost classically Galois\n\n";
  } else {
    os << ", e0 = " << rep.params->e0 << ", s = " << rep.params->s << "\n\n";
  }
  if (!rep.cyclic.empty() || !rep.params) records_table(os, "Cyclic type", rep.cyclic);
  if (!rep.metabelian.empty()) records_table(os, "Non-abelian type", rep.metabelian);
  if (rep.totals.both_types) {
    os << "Both types (" << rep.both_types.size() << " classes)\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& b : rep.both_types)
      rows.push_back({b.structure, str(b.n_hgs_cyclic), str(b.n_hgs_metab), b.evidence});
    table(os, {"Structure", "#HGS cyclic", "#HGS non-abelian", "Evidence"}, rows);
    os << '\n';
  }
  const auto& t = rep.totals;
  if (t.cyclic)
    os << "Cyclic totals: " << t.cyclic->enumerated << " classes (closed form "
       << t.cyclic->formula << ", direct sum " << t.cyclic->formula_direct << "), non-ACG "
       << t.cyclic->non_acg << " (formula " << t.cyclic->formula_non_acg << ")\n";
  if (t.metab)
    os << "Non-abelian totals: " << t.metab->enumerated << " classes (formula "
       << t.metab->formula << "), non-ACG " << t.metab->non_acg << " (formula "
       << t.metab->formula_non_acg << "), ACG " << t.metab->acg << " (formula "
       << t.metab->formula_acg << ")\n";
  if (t.both_types)
    os << "Both-types totals: " << *t.both_types << " classes (formula " << *t.both_types_formula
       << "), non-ACG " << *t.both_non_acg << " (formula " << *t.both_non_acg_formula << ")\n";
  if (!rep.discrepancies.empty()) {
    os << "\nDiscrepancies (" << rep.discrepancies.size() << ")\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& d : rep.discrepancies)
      rows.push_back({d.site, d.paper_value, d.computed_value});
    table(os, {"Site", "Stated", "Computed"}, rows);
  }
  for (const auto& f : rep.failures) os << "CERTIFICATION FAILURE: " << f << '\n';
  if (v) {
    os << "\nVerification (" << v->mode << "): "
       << (v->failures.empty() && rep.failures.empty() ? "PASS" : "FAIL") << '\n';
    for (const auto& f : v->failures) os << "  FAIL " << f << '\n';
    for (const auto& w : v->warnings) os << "  WARN " << w << '\n';
  }
  return os.str();
}

}  // namespace

std::string render(const ClassificationReport& report, Format format,
                   const VerificationSummary* verification) {
  switch (format) {
    case Format::Json: return render_json(report, verification);
    case Format::Csv: return render_csv(report);
    case Format::Table: return render_table(report, verification);
  }
  return {};
}

}  // namespace hgspq
