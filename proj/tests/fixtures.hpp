#pragma once

#include "hgspq/cyclic_classify.hpp"
#include "hgspq/metab_classify.hpp"
#include "hgspq/oracle.hpp"
#include "hgspq/report.hpp"

namespace hgspq::testing {

inline const PqParams& params(u64 p, u64 q) {
  static std::map<std::pair<u64, u64>, PqParams> cache;
  auto it = cache.find({p, q});
  if (it == cache.end())
    it = cache.emplace(std::pair{p, q}, std::get<PqParams>(pq_parameters(p, q))).first;
  return it->second;
}

// (7,3) fixtures, computed once per test binary.
inline const CyclicClassification& cyclic_7_3() {
  static const auto c = classify_cyclic(params(7, 3));
  return c;
}

inline const MetabClassification& metab_7_3() {
  static const auto m = classify_metab(params(7, 3));
  return m;
}

inline const ClassificationReport& report_7_3() {
  static const auto r = build_report(7, 3);
  return r;
}

inline const CyclicHolomorph& cyclic_hol_7_3() {
  static const CyclicHolomorph h(params(7, 3));
  return h;
}

inline const MetabHolomorph& metab_hol_7_3() {
  static const MetabHolomorph h(params(7, 3));
  return h;
}

inline const OracleRun& cyclic_oracle_7_3() {
  static const auto r = run_oracle(cyclic_hol_7_3());
  return r;
}

inline const OracleRun& metab_oracle_7_3() {
  static const auto r = run_oracle(metab_hol_7_3());
  return r;
}

inline const IsoClassRecord& find(const std::vector<IsoClassRecord>& recs, const std::string& key) {
  for (const auto& r : recs)
    if (r.key == key) return r;
  throw std::out_of_range("no class " + key);
}

}  // namespace hgspq::testing
