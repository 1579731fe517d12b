// hgspq: Hopf-Galois structures on separable extensions of degree pq.
//
//   hgspq classify --p 7 --q 3 --format json
//   hgspq verify --p 13 --q 3 --deep
//   hgspq params --p 31 --q 5
//   hgspq subgroup-lattice --ell 2 --e 2 --f 2

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <unistd.h>

#include "CLI11.hpp"
#include "hgspq/ell_subgroups.hpp"
#include "hgspq/errors.hpp"
#include "hgspq/oracle.hpp"
#include "hgspq/render.hpp"
#include "json.hpp"

namespace {

using namespace hgspq;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;

struct Config {
  u64 p = 0;
  u64 q = 0;
  std::string type = "both";
  std::string format = "table";
  std::string out;
  bool deep = false;
  bool verbose = false;
  unsigned threads = 0;
  std::size_t realize_cap = kDefaultRealizeCap;
  u64 ell = 0;
  unsigned e = 0;
  unsigned f = 0;
};

class Clock {
 public:
  explicit Clock(bool on) : on_(on), start_(std::chrono::steady_clock::now()) {}
  void note(const std::string& what) const {
    if (!on_) return;
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
    std::fprintf(stderr, "[%8.3fs] %s\n", dt.count(), what.c_str());
  }

 private:
  bool on_;
  std::chrono::steady_clock::time_point start_;
};

std::size_t env_cap() {
  const char* v = std::getenv("HGSPQ_CAP");
  if (!v || !*v) return kOracleCap;
  char* end = nullptr;
  const unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) throw DomainError(std::string("invalid HGSPQ_CAP: ") + v);
  return static_cast<std::size_t>(n);
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text << std::flush;
    return;
  }
  const std::filesystem::path target(cfg.out);
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw DomainError("cannot write " + tmp.string());
    os << text;
    if (!os.flush()) throw DomainError("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

ReportOptions report_options(const Config& cfg) {
  ReportOptions o;
  o.cyclic = cfg.type != "metabelian";
  o.metabelian = cfg.type != "cyclic";
  o.classify.threads = cfg.threads;
  o.classify.realize_cap = cfg.realize_cap;
  o.classify.aut_cap = std::max<std::size_t>(kAutSearchCap, cfg.realize_cap);
  return o;
}

int cmd_classify(const Config& cfg) {
  const Clock clock(cfg.verbose);
  const auto report = build_report(cfg.p, cfg.q, report_options(cfg));
  clock.note("classified p=" + std::to_string(cfg.p) + " q=" + std::to_string(cfg.q));
  emit(cfg, render(report, parse_format(cfg.format)));
  for (const auto& f : report.failures) std::cerr << "certification failure: " << f << '\n';
  return report.failures.empty() ? kExitOk : kExitMismatch;
}

// Hol(C_pq) parameters when q does not divide p - 1 (e0 = 0).
PqParams unique_regime_params(u64 p, u64 q) {
  PqParams pp;
  pp.p = p;
  pp.q = q;
  pp.s = p - 1;
  std::map<u64, std::pair<unsigned, unsigned>> ex;
  for (const auto& f : factorize(p - 1)) ex[f.prime].first = f.exponent;
  for (const auto& f : factorize(q - 1)) ex[f.prime].second = f.exponent;
  for (const auto& [ell, ef] : ex) {
    pp.ell.push_back(ell);
    pp.e.push_back(ef.first);
    pp.f.push_back(ef.second);
  }
  return pp;
}

int cmd_verify(const Config& cfg) {
  const Clock clock(cfg.verbose);
  const std::size_t cap = env_cap();
  const std::size_t tier = cfg.deep ? cap : kDefaultRealizeCap;
  VerificationSummary v;
  v.mode = cfg.deep ? "deep" : "standard";
  OracleOptions oo;
  oo.cap = tier;
  oo.aut_cap = std::max<std::size_t>(kAutSearchCap, tier);
  oo.threads = cfg.threads;
  const auto tier_error = [&](u64 order) {
    std::cerr << "error: |Hol(N)| = " << order << " exceeds the "
              << (cfg.deep ? "HGSPQ_CAP limit " : "standard verification tier ") << tier
              << (cfg.deep ? "" : "; rerun with --deep") << '\n';
    return kExitInvalid;
  };

  const auto res = pq_parameters(cfg.p, cfg.q);
  Config rcfg = cfg;
  rcfg.realize_cap = tier;
  ClassificationReport report;
  if (std::holds_alternative<UniqueStructureRegime>(res)) {
    const CyclicHolomorph hol(unique_regime_params(cfg.p, cfg.q));
    if (hol.hol_order() > tier) return tier_error(hol.hol_order());
    report = build_report(cfg.p, cfg.q, report_options(rcfg));
    const auto run = run_oracle(hol, oo);
    std::size_t regular = 0;
    for (const auto& c : run.classes) {
      if (!c.regular) continue;
      ++regular;
      if (direct_hgs_count(c, run.aut_n) != 1) v.failures.push_back("regular class has #HGS != 1");
      if (!c.acg) v.failures.push_back("regular class is not almost classically Galois");
    }
    if (regular != 1)
      v.failures.push_back("oracle finds " + std::to_string(regular) + " regular classes");
  } else {
    const auto& params = std::get<PqParams>(res);
    const auto opts = report_options(rcfg);
    std::optional<CyclicHolomorph> ch;
    std::optional<MetabHolomorph> mh;
    if (opts.cyclic) ch.emplace(params);
    if (opts.metabelian) mh.emplace(params);
    if (ch && ch->hol_order() > tier) return tier_error(ch->hol_order());
    if (mh && mh->hol_order() > tier) return tier_error(mh->hol_order());
    report = build_report(cfg.p, cfg.q, opts);
    clock.note("classified");
    if (ch) {
      const auto run = run_oracle(*ch, oo);
      clock.note("cyclic oracle: " + std::to_string(run.n_subgroups) + " subgroups, " +
                 std::to_string(run.transitive.size()) + " transitive");
      for (auto& f : compare_with_oracle(run, report.cyclic, "cyclic")) v.failures.push_back(f);
      for (auto& f : check_regular_normal_properties(run, *ch, oo.aut_cap))
        v.failures.push_back("cyclic: " + f);
    }
    if (mh) {
      const auto run = run_oracle(*mh, oo);
      clock.note("metabelian oracle: " + std::to_string(run.n_subgroups) + " subgroups, " +
                 std::to_string(run.transitive.size()) + " transitive");
      for (auto& f : compare_with_oracle(run, report.metabelian, "metabelian"))
        v.failures.push_back(f);
      for (auto& f : check_regular_normal_properties(run, *mh, oo.aut_cap))
        v.failures.push_back("metabelian: " + f);
    }
  }
  for (const auto& d : report.discrepancies)
    v.warnings.push_back(d.site + ": stated " + d.paper_value + ", computed " + d.computed_value);
  emit(cfg, render(report, parse_format(cfg.format), &v));
  return v.failures.empty() && report.failures.empty() ? kExitOk : kExitMismatch;
}

int cmd_params(const Config& cfg) {
  const auto res = pq_parameters(cfg.p, cfg.q);
  const auto fmt = parse_format(cfg.format);
  nlohmann::ordered_json j;
  j["p"] = cfg.p;
  j["q"] = cfg.q;
  std::ostringstream os;
  if (std::holds_alternative<UniqueStructureRegime>(res)) {
    j["regime"] = "unique";
    os << "p = " << cfg.p << ", q = " << cfg.q
       << ": q does not divide p-1 (unique Hopf-Galois structure)\n";
  } else {
    const auto& pp = std::get<PqParams>(res);
    const u64 p = pp.p, q = pp.q;
    j["regime"] = "general";
    j["e0"] = pp.e0;
    j["s"] = std::to_string(pp.s);
    j["ell"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < pp.m(); ++i)
      j["ell"].push_back({{"ell", pp.ell[i]}, {"e", pp.e[i]}, {"f", pp.f[i]}});
    j["aut_cyclic"] = std::to_string((p - 1) * (q - 1));
    j["aut_metabelian"] = std::to_string(p * (p - 1));
    j["hol_cyclic"] = std::to_string(p * q * (p - 1) * (q - 1));
    j["hol_metabelian"] = std::to_string(p * q * p * (p - 1));
    os << "p = " << p << ", q = " << q << "\n"
       << "  p-1 = " << q << "^" << pp.e0 << " * " << pp.s << "\n"
       << "  e0 = " << pp.e0 << ", s = " << pp.s << ", sigma0(s) = " << sigma0(pp.s) << "\n";
    for (std::size_t i = 0; i < pp.m(); ++i)
      os << "  ell_" << i + 1 << " = " << pp.ell[i] << ": e = " << pp.e[i] << ", f = " << pp.f[i]
         << "\n";
    os << "  |Aut(C_pq)| = " << (p - 1) * (q - 1) << ", |Hol(C_pq)| = " << p * q * (p - 1) * (q - 1)
       << "\n"
       << "  |Aut(C_p x| C_q)| = " << p * (p - 1) << ", |Hol(C_p x| C_q)| = " << p * q * p * (p - 1)
       << "\n";
  }
  emit(cfg, fmt == Format::Json ? j.dump(2) + "\n" : os.str());
  return kExitOk;
}

int cmd_lattice(const Config& cfg) {
  const char* v = std::getenv("HGSPQ_CAP");
  const u64 cap = v && *v ? env_cap() : (u64{1} << 20);
  const auto r = ell_lattice_report(cfg.e, cfg.f, cfg.ell, cap);
  const auto fmt = parse_format(cfg.format);
  const i64 base = static_cast<i64>((cfg.e + 1) * (cfg.f + 1));
  const std::string site = "subgroups(ell=" + std::to_string(cfg.ell) +
                           ",e=" + std::to_string(cfg.e) + ",f=" + std::to_string(cfg.f) + ")";
  if (fmt == Format::Json) {
    nlohmann::ordered_json j{
        {"ell", r.ell}, {"e", r.e}, {"f", r.f},
        {"brute_force", r.brute_force}, {"enumerated", r.enumerated},
        {"closed_form", {{"total", r.closed_total}, {"base", base},
                         {"sigma1", r.sigma1.closed_form}, {"sigma2", r.sigma2.closed_form}}},
        {"direct_sum", {{"total", r.direct_total}, {"base", base},
                        {"sigma1", r.sigma1.direct_sum}, {"sigma2", r.sigma2.direct_sum}}},
        {"kinds", {{"I", r.kind_counts[0]}, {"II", r.kind_counts[1]}, {"III", r.kind_counts[2]},
                   {"unparametrized", r.kind_counts[3]}}},
        {"match", r.matches()}};
    auto& log = j["discrepancies"] = nlohmann::ordered_json::array();
    for (const auto& d : lattice_discrepancies(r, site))
      log.push_back({{"site", d.site}, {"paper_value", d.paper_value},
                     {"computed_value", d.computed_value}});
    emit(cfg, j.dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream os;
  os << "C_" << cfg.ell << "^" << cfg.e << " x C_" << cfg.ell << "^" << cfg.f << "\n"
     << "  brute force   " << r.brute_force << "\n"
     << "  enumerated    " << r.enumerated << "\n"
     << "  closed form   " << r.closed_total << " = " << base << " + " << r.sigma1.closed_form
     << " + " << r.sigma2.closed_form << "\n"
     << "  direct sum    " << r.direct_total << " = " << base << " + " << r.sigma1.direct_sum
     << " + " << r.sigma2.direct_sum << "\n"
     << "  kinds         I " << r.kind_counts[0] << ", II " << r.kind_counts[1] << ", III "
     << r.kind_counts[2] << ", unparametrized " << r.kind_counts[3] << "\n"
     << "  verdict       " << (r.matches() ? "match" : "mismatch") << "\n";
  for (const auto& d : lattice_discrepancies(r, site))
    os << "  discrepancy   " << d.site << ": stated " << d.paper_value << ", computed "
       << d.computed_value << "\n";
  emit(cfg, os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopf-Galois structures on separable extensions of degree pq"};
  app.require_subcommand(1);
  Config cfg;

  const auto add_pq = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "larger odd prime")->required();
    sub->add_option("--q", cfg.q, "smaller odd prime")->required();
    sub->add_option("--format", cfg.format, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--out", cfg.out, "write output to this file (atomically)");
    sub->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
    sub->add_flag("--verbose", cfg.verbose, "timings on stderr");
  };
  const auto add_type = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type, "cyclic, metabelian or both")
        ->check(CLI::IsMember({"cyclic", "metabelian", "both"}));
  };

  auto* classify = app.add_subcommand("classify", "classify transitive subgroups and count HGS");
  add_pq(classify);
  add_type(classify);
  classify->add_option("--realize-cap", cfg.realize_cap,
                       "largest |Hol(N)| realized as permutation groups");

  auto* verify = app.add_subcommand("verify", "compare the classification with exhaustive search");
  add_pq(verify);
  add_type(verify);
  verify->add_flag("--deep", cfg.deep, "extended tier, up to HGSPQ_CAP (default 10000)");

  auto* params = app.add_subcommand("params", "show the prime-power skeleton of (p, q)");
  add_pq(params);

  auto* lattice = app.add_subcommand("subgroup-lattice",
                                     "count subgroups of C_{ell^e} x C_{ell^f} three ways");
  lattice->add_option("--ell", cfg.ell, "prime")->required();
  lattice->add_option("--e", cfg.e, "exponent of the first factor")->required();
  lattice->add_option("--f", cfg.f, "exponent of the second factor")->required();
  lattice->add_option("--format", cfg.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  lattice->add_option("--out", cfg.out, "write output to this file (atomically)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*classify) return cmd_classify(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*params) return cmd_params(cfg);
    if (*lattice) return cmd_lattice(cfg);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
