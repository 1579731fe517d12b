#include "hgspq/ell_subgroups.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hgspq/errors.hpp"

namespace hgspq {

std::string to_string(EllKind k) {
  switch (k) {
    case EllKind::I: return "I";
    case EllKind::II: return "II";
    case EllKind::III: return "III";
    case EllKind::Unparametrized: return "E";
  }
  return "?";
}

std::string EllSubgroupDescriptor::label() const {
  const auto u = [](auto v) { return std::to_string(v); };
  switch (kind) {
    case EllKind::I: return "I(" + u(s) + "," + u(r2) + ")";
    case EllKind::II: return "II(" + u(s) + "," + u(r1) + "," + u(n) + ")";
    case EllKind::III: return "III(" + u(s) + "," + u(r1) + "," + u(r2) + "," + u(n) + ")";
    case EllKind::Unparametrized: return "E(" + u(j) + "," + u(k) + "," + u(b) + ")";
  }
  return "?";
}

namespace {

// Sorted element codes x * F + y of the subgroup generated by `gens`.
std::vector<u64> span(const std::vector<std::pair<u64, u64>>& gens, u64 E, u64 F) {
  std::vector<char> seen(E * F, 0);
  std::vector<u64> out{0};
  seen[0] = 1;
  for (std::size_t pos = 0; pos < out.size(); ++pos) {
    const u64 x = out[pos] / F, y = out[pos] % F;
    for (const auto& [gx, gy] : gens) {
      const u64 c = ((x + gx) % E) * F + (y + gy) % F;
      if (!seen[c]) {
        seen[c] = 1;
        out.push_back(c);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<EllSubgroupDescriptor> enumerate_ell_subgroups(unsigned e, unsigned f, u64 ell,
                                                            u64 cap) {
  if (!is_prime(ell)) throw DomainError("enumerate_ell_subgroups: ell must be prime");
  if (e + f > 63 || ipow(ell, e + f) > cap || ipow(ell, e) * ipow(ell, f) > cap)
    throw ResourceError("enumerate_ell_subgroups: ell^(e+f) exceeds cap");
  const u64 E = ipow(ell, e), F = ipow(ell, f);

  std::vector<EllSubgroupDescriptor> out;
  std::map<std::vector<u64>, std::size_t> by_elements;
  for (unsigned j = 0; j <= e; ++j) {
    for (unsigned k = 0; k <= f; ++k) {
      const u64 lk = ipow(ell, k);
      const u64 shift = ipow(ell, e - j);
      for (u64 b = 0; b < lk; ++b) {
        if ((shift * b) % F % lk != 0) continue;
        EllSubgroupDescriptor d;
        d.kind = EllKind::Unparametrized;
        d.j = j;
        d.k = k;
        d.b = b;
        const u64 a = ipow(ell, j) % E;
        if (a != 0 || b != 0) d.generators.push_back({a, b});
        if (lk % F != 0) d.generators.push_back({0, lk});
        auto elems = span(d.generators, E, F);
        d.order = elems.size();
        d.alpha_part = static_cast<u64>(
            std::count_if(elems.begin(), elems.end(), [&](u64 c) { return c % F == 0; }));
        d.beta_part = static_cast<u64>(
            std::count_if(elems.begin(), elems.end(), [&](u64 c) { return c < F; }));
        by_elements.emplace(std::move(elems), out.size());
        out.push_back(std::move(d));
      }
    }
  }

  auto attach = [&](EllSubgroupDescriptor tmpl) {
    auto it = by_elements.find(span(tmpl.generators, E, F));
    if (it == by_elements.end())
      throw InvariantViolation("parametrized subgroup missing from echelon enumeration");
    auto& d = out[it->second];
    if (d.kind != EllKind::Unparametrized) return;
    d.kind = tmpl.kind;
    d.s = tmpl.s;
    d.r1 = tmpl.r1;
    d.r2 = tmpl.r2;
    d.n = tmpl.n;
  };
  auto lp = [&](unsigned x) { return ipow(ell, x); };

  for (unsigned s = 0; s <= e; ++s)
    for (unsigned r2 = 0; r2 <= f; ++r2) {
      EllSubgroupDescriptor t;
      t.kind = EllKind::I;
      t.s = s;
      t.r2 = r2;
      t.generators = {{lp(e - s) % E, 0}, {0, lp(f - r2) % F}};
      attach(t);
    }
  for (unsigned s = 1; s <= e; ++s)
    for (unsigned r1 = 1; r1 <= f; ++r1)
      for (u64 n = 1; n < lp(std::min(s, r1)); ++n) {
        if (n % ell == 0) continue;
        EllSubgroupDescriptor t;
        t.kind = EllKind::II;
        t.s = s;
        t.r1 = r1;
        t.n = n;
        t.generators = {{(n * lp(e - s)) % E, lp(f - r1) % F}};
        attach(t);
      }
  for (unsigned r2 = 1; r2 <= f; ++r2)
    for (unsigned r1 = r2 + 1; r1 <= f; ++r1)
      for (unsigned s = r1 - r2 + 1; s <= e; ++s)
        for (u64 n = 1; n < lp(std::min(s, r1)); ++n) {
          if (n % ell == 0) continue;
          EllSubgroupDescriptor t;
          t.kind = EllKind::III;
          t.s = s;
          t.r1 = r1;
          t.r2 = r2;
          t.n = n;
          t.generators = {{(n * lp(e - s)) % E, lp(f - r1) % F}, {0, lp(f - r2) % F}};
          attach(t);
        }
  return out;
}

namespace {

i64 ipow_i(i64 b, unsigned x) { return static_cast<i64>(ipow(static_cast<u64>(b), x)); }
i64 phi_ell(u64 ell, unsigned x) { return static_cast<i64>(euler_phi(ipow(ell, x))); }

}  // namespace

SigmaValue sigma1(unsigned e, unsigned f, u64 ell) {
  SigmaValue v;
  const unsigned M = std::min(e, f);
  if (M == 0) return v;
  const i64 l = static_cast<i64>(ell);
  const i64 lm1 = ipow_i(l, M - 1);
  const i64 diff = std::abs(static_cast<i64>(f) - static_cast<i64>(e));
  v.closed_form = (lm1 - 1) * (2 * static_cast<i64>(M) + 1) + 2 * (lm1 - 1) / (l - 1) -
                  2 * static_cast<i64>(M - 1) * lm1 + (diff + 1) * (ipow_i(l, M) - 1);
  for (unsigned r1 = 1; r1 <= f; ++r1)
    for (unsigned s = 1; s <= e; ++s) v.direct_sum += phi_ell(ell, std::min(s, r1));
  return v;
}

SigmaValue sigma2(unsigned e, unsigned f, u64 ell) {
  SigmaValue v;
  const unsigned M = std::min(e, f);
  if (M == 0) return v;
  const i64 l = static_cast<i64>(ell);
  const i64 diff = std::abs(static_cast<i64>(f) - static_cast<i64>(e));
  v.closed_form = (diff + 2) * (static_cast<i64>(M - 1) * ipow_i(l, M) -
                                l * (ipow_i(l, M - 1) - 1) / (l - 1));
  for (unsigned s = 2; s <= e; ++s)
    for (unsigned a = 1; a <= s - 1; ++a)
      for (unsigned r1 = 1 + a; r1 <= f; ++r1) v.direct_sum += phi_ell(ell, std::min(s, r1));
  return v;
}

EllLatticeReport ell_lattice_report(unsigned e, unsigned f, u64 ell, u64 cap) {
  EllLatticeReport r;
  r.ell = ell;
  r.e = e;
  r.f = f;
  const auto subs = enumerate_ell_subgroups(e, f, ell, cap);
  r.enumerated = subs.size();
  for (const auto& d : subs) ++r.kind_counts[static_cast<int>(d.kind)];
  r.brute_force = brute_force_abelian_subgroup_count({ipow(ell, e), ipow(ell, f)}, cap);
  r.sigma1 = sigma1(e, f, ell);
  r.sigma2 = sigma2(e, f, ell);
  const i64 base = static_cast<i64>((e + 1) * (f + 1));
  r.closed_total = base + r.sigma1.closed_form + r.sigma2.closed_form;
  r.direct_total = base + r.sigma1.direct_sum + r.sigma2.direct_sum;
  r.parametrized = static_cast<u64>(r.direct_total);
  return r;
}

u64 brute_force_abelian_subgroup_count(const std::vector<u64>& moduli, u64 cap) {
  u64 n = 1;
  for (u64 m : moduli) {
    if (m == 0) throw DomainError("modulus must be positive");
    n *= m;
    if (n > cap) throw ResourceError("abelian group exceeds brute-force cap");
  }
  std::vector<u64> radix(moduli.size(), 1);
  for (std::size_t i = moduli.size(); i-- > 1;) radix[i - 1] = radix[i] * moduli[i];
  auto add = [&](u64 a, u64 b) {
    u64 c = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      const u64 da = a / radix[i] % moduli[i], db = b / radix[i] % moduli[i];
      c += ((da + db) % moduli[i]) * radix[i];
    }
    return c;
  };
  using Bits = std::vector<bool>;
  std::set<Bits> seen;
  std::vector<Bits> queue;
  Bits triv(n, false);
  triv[0] = true;
  seen.insert(triv);
  queue.push_back(triv);
  for (std::size_t pos = 0; pos < queue.size(); ++pos) {
    const Bits h = queue[pos];
    std::vector<u64> members;
    for (u64 x = 0; x < n; ++x)
      if (h[x]) members.push_back(x);
    Bits done = h;
    for (u64 g = 0; g < n; ++g) {
      if (done[g]) continue;
      u64 k = 1, acc = g;
      while (!h[acc]) {
        acc = add(acc, g);
        ++k;
      }
      if (!is_prime(k)) continue;
      Bits kset(n, false);
      u64 shift = 0;
      for (u64 i = 0; i < k; ++i) {
        for (u64 x : members) kset[add(x, shift)] = true;
        shift = add(shift, g);
      }
      for (u64 x = 0; x < n; ++x)
        if (kset[x]) done[x] = true;
      if (seen.insert(kset).second) queue.push_back(std::move(kset));
    }
  }
  return seen.size();
}

}  // namespace hgspq
