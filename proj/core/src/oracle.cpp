#include "hgspq/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_map>

#include "hgspq/errors.hpp"
#include "hgspq/parallel.hpp"

namespace hgspq {

using Index = GroupTable::Index;

SubgroupLattice::SubgroupLattice(PermGroup ambient, std::vector<std::vector<Index>> members,
                                 std::vector<std::vector<Index>> generators,
                                 std::vector<std::pair<std::size_t, std::size_t>> edges)
    : ambient_(std::move(ambient)),
      members_(std::move(members)),
      generators_(std::move(generators)),
      edges_(std::move(edges)) {}

bool SubgroupLattice::is_transitive(std::size_t i) const {
  const std::size_t n = ambient_.degree();
  if (members_[i].size() % n != 0) return false;
  std::vector<char> hit(n, 0);
  std::size_t count = 0;
  for (Index x : members_[i]) {
    const Point y = ambient_.table().image(x, 0);
    if (!hit[y]) {
      hit[y] = 1;
      ++count;
    }
  }
  return count == n;
}

PermGroup SubgroupLattice::group(std::size_t i) const {
  const auto& t = ambient_.table();
  std::vector<Perm> elems, gens;
  elems.reserve(members_[i].size());
  for (Index x : members_[i]) elems.push_back(t.element(x));
  for (Index x : generators_[i]) gens.push_back(t.element(x));
  return PermGroup::from_closed_elements(ambient_.degree(), std::move(gens), std::move(elems));
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct Node {
  Bits bits;
  std::vector<Index> gens;
};

bool test(const Bits& b, Index i) { return (b[i >> 6] >> (i & 63)) & 1; }
void set(Bits& b, Index i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

std::uint64_t hash_bits(const Bits& b) {
  std::uint64_t h = 0x9E3779B97F4A7C15ull;
  for (auto w : b) h = (h ^ w) * 0x100000001B3ull + (h >> 29);
  return h;
}

std::vector<Index> to_list(const Bits& b, std::size_t n) {
  std::vector<Index> out;
  for (Index i = 0; i < n; ++i)
    if (test(b, i)) out.push_back(i);
  return out;
}

// Subgroups one cyclic extension above `h`.
std::vector<Node> extensions(const GroupTable& t, const Node& h, bool solvable) {
  const std::size_t n = t.size();
  const auto members = to_list(h.bits, n);
  Bits done = h.bits;
  std::vector<Node> out;
  for (Index g = 0; g < n; ++g) {
    if (test(done, g)) continue;
    if (solvable) {
      bool normalizes = true;
      for (Index x : h.gens)
        if (!test(h.bits, t.conjugate(g, x))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      std::uint64_t k = 1;
      Index acc = g;
      while (!test(h.bits, acc)) {
        acc = t.mult(acc, g);
        ++k;
      }
      if (!is_prime(k)) continue;
      Node kn{Bits(h.bits.size(), 0), h.gens};
      kn.gens.push_back(g);
      Index shift = t.identity();
      for (std::uint64_t i = 0; i < k; ++i) {
        for (Index x : members) set(kn.bits, t.mult(x, shift));
        shift = t.mult(shift, g);
      }
      for (std::size_t w = 0; w < done.size(); ++w) done[w] |= kn.bits[w];
      out.push_back(std::move(kn));
    } else {
      set(done, g);
      Node kn{Bits(h.bits.size(), 0), h.gens};
      kn.gens.push_back(g);
      for (Index x : closure_indices(t, kn.gens)) set(kn.bits, x);
      out.push_back(std::move(kn));
    }
  }
  return out;
}

}  // namespace

SubgroupLattice all_subgroups(const PermGroup& g, std::size_t cap, unsigned threads) {
  if (g.order() > cap)
    throw ResourceError("all_subgroups: |G| = " + std::to_string(g.order()) + " exceeds cap " +
                        std::to_string(cap));
  const auto& t = g.table();
  const std::size_t n = t.size();
  const bool solvable = is_solvable(g);

  std::vector<Node> nodes;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> index;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  auto intern = [&](Node&& k) -> std::pair<std::size_t, bool> {
    auto& bucket = index[hash_bits(k.bits)];
    for (std::size_t i : bucket)
      if (nodes[i].bits == k.bits) return {i, false};
    bucket.push_back(nodes.size());
    nodes.push_back(std::move(k));
    return {nodes.size() - 1, true};
  };
  Node triv{Bits((n + 63) / 64, 0), {}};
  set(triv.bits, t.identity());
  intern(std::move(triv));

  std::vector<std::size_t> layer{0};
  while (!layer.empty()) {
    std::vector<std::vector<Node>> found(layer.size());
    parallel_for(layer.size(), threads,
                 [&](std::size_t i) { found[i] = extensions(t, nodes[layer[i]], solvable); });
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < layer.size(); ++i)
      for (auto& k : found[i]) {
        const auto [id, fresh] = intern(std::move(k));
        edges.emplace_back(layer[i], id);
        if (fresh) next.push_back(id);
      }
    layer = std::move(next);
  }

  std::vector<std::vector<Index>> members(nodes.size());
  parallel_for(nodes.size(), threads, [&](std::size_t i) { members[i] = to_list(nodes[i].bits, n); });
  std::vector<std::size_t> perm(nodes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (members[a].size() != members[b].size()) return members[a].size() < members[b].size();
    return members[a] < members[b];
  });
  std::vector<std::size_t> rank(nodes.size());
  for (std::size_t i = 0; i < perm.size(); ++i) rank[perm[i]] = i;
  std::vector<std::vector<Index>> sorted_members, sorted_gens;
  for (std::size_t i : perm) {
    sorted_members.push_back(std::move(members[i]));
    sorted_gens.push_back(std::move(nodes[i].gens));
  }
  std::set<std::pair<std::size_t, std::size_t>> edge_set;
  for (const auto& [a, b] : edges) edge_set.emplace(rank[a], rank[b]);
  return SubgroupLattice(g, std::move(sorted_members), std::move(sorted_gens),
                         {edge_set.begin(), edge_set.end()});
}

std::vector<OracleClass> transitive_classes(std::vector<PermGroup> groups, std::size_t aut_cap,
                                            unsigned threads) {
  std::sort(groups.begin(), groups.end());
  std::vector<std::vector<std::uint64_t>> sig(groups.size());
  parallel_for(groups.size(), threads,
               [&](std::size_t i) { sig[i] = invariant_signature(groups[i], true); });
  std::map<std::pair<std::uint64_t, std::vector<std::uint64_t>>, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < groups.size(); ++i)
    buckets[{groups[i].order(), sig[i]}].push_back(i);
  std::vector<std::vector<std::size_t>> bucket_list;
  for (auto& [k, v] : buckets) bucket_list.push_back(std::move(v));

  std::vector<std::vector<std::vector<std::size_t>>> parts(bucket_list.size());
  parallel_for(bucket_list.size(), threads, [&](std::size_t b) {
    for (std::size_t i : bucket_list[b]) {
      bool placed = false;
      for (auto& cls : parts[b])
        if (abstract_isomorphic(groups[cls.front()], groups[i], true)) {
          cls.push_back(i);
          placed = true;
          break;
        }
      if (!placed) parts[b].push_back({i});
    }
  });

  std::vector<std::vector<std::size_t>> flat;
  for (auto& p : parts)
    for (auto& c : p) flat.push_back(std::move(c));
  std::sort(flat.begin(), flat.end(),
            [&](const auto& a, const auto& b) { return groups[a.front()] < groups[b.front()]; });

  std::vector<OracleClass> out(flat.size());
  parallel_for(flat.size(), threads, [&](std::size_t k) {
    auto& c = out[k];
    for (std::size_t i : flat[k]) c.members.push_back(groups[i]);
    c.representative = c.members.front();
    c.stabilizer = stabilizer(c.representative, 0);
    c.rel_aut = rel_aut_order(c.representative, c.stabilizer, aut_cap);
    c.acg = has_regular_normal_subgroup(c.representative);
    c.regular = c.representative.order() == c.representative.degree();
  });
  return out;
}

u64 direct_hgs_count(const OracleClass& cls, u64 aut_n) {
  return byott_count(cls.members.size(), cls.rel_aut, aut_n);
}

OracleRun run_oracle(const Holomorph& hol, const OracleOptions& opts) {
  OracleRun run;
  run.hol_order = hol.hol_order();
  run.aut_n = hol.aut_order();
  if (run.hol_order > opts.cap)
    throw ResourceError("oracle: |Hol(N)| = " + std::to_string(run.hol_order) +
                        " exceeds cap " + std::to_string(opts.cap));
  const PermGroup g = hol.build_group(opts.cap);
  const auto lattice = all_subgroups(g, opts.cap, opts.threads);
  run.n_subgroups = lattice.size();
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (lattice.is_transitive(i)) run.transitive.push_back(lattice.group(i));
  run.classes = transitive_classes(run.transitive, opts.aut_cap, opts.threads);
  return run;
}

namespace {

using ClassTuple = std::tuple<u64, u64, u64, u64, bool>;

}  // namespace

std::vector<std::string> compare_with_oracle(const OracleRun& run,
                                             const std::vector<IsoClassRecord>& records,
                                             const std::string& side) {
  std::vector<std::string> out;
  const auto fail = [&](std::string m) { out.push_back(side + ": " + std::move(m)); };
  if (run.classes.size() != records.size())
    fail("oracle finds " + std::to_string(run.classes.size()) + " classes, classification " +
         std::to_string(records.size()));

  const bool realized = !records.empty() && std::all_of(records.begin(), records.end(), [](const auto& r) {
    return !r.members.empty();
  });
  if (!realized) {
    std::multiset<ClassTuple> a, b;
    for (const auto& c : run.classes)
      a.emplace(c.representative.order(), c.members.size(), c.rel_aut,
                direct_hgs_count(c, run.aut_n), c.acg);
    for (const auto& r : records) b.emplace(r.group_order, r.n_groups, r.rel_aut, r.n_hgs, r.acg);
    if (a != b) fail("per-class (order, #groups, |Aut(M,M')|, #HGS, ACG) multisets differ");
    return out;
  }

  std::map<PermGroup, std::size_t> owner;
  std::size_t total = 0;
  for (std::size_t i = 0; i < records.size(); ++i)
    for (const auto& m : records[i].members) {
      owner.emplace(m, i);
      ++total;
    }
  if (total != run.transitive.size())
    fail("oracle finds " + std::to_string(run.transitive.size()) +
         " transitive subgroups, classification " + std::to_string(total));
  std::size_t missing = 0;
  for (const auto& gp : run.transitive)
    if (!owner.count(gp)) ++missing;
  if (missing) fail(std::to_string(missing) + " oracle transitive subgroups missing from classification");

  for (const auto& c : run.classes) {
    auto it = owner.find(c.representative);
    if (it == owner.end()) continue;
    const auto& r = records[it->second];
    for (const auto& m : c.members) {
      auto jt = owner.find(m);
      if (jt != owner.end() && jt->second != it->second)
        fail("oracle class of " + r.key + " also contains a member of " + records[jt->second].key);
    }
    if (c.members.size() != r.members.size())
      fail(r.key + ": oracle class size " + std::to_string(c.members.size()) + ", classification " +
           std::to_string(r.members.size()));
    if (c.rel_aut != r.rel_aut)
      fail(r.key + ": oracle |Aut(M,M')| " + std::to_string(c.rel_aut) + ", classification " +
           std::to_string(r.rel_aut));
    const u64 hgs = direct_hgs_count(c, run.aut_n);
    if (hgs != r.n_hgs)
      fail(r.key + ": oracle #HGS " + std::to_string(hgs) + ", classification " +
           std::to_string(r.n_hgs));
    if (c.acg != r.acg) fail(r.key + ": ACG differs from oracle");
  }
  return out;
}

std::vector<std::string> check_regular_normal_properties(const OracleRun& run,
                                                         const Holomorph& hol,
                                                         std::size_t aut_cap,
                                                         std::size_t max_order) {
  std::vector<std::string> out;
  const auto lambda_n = hol.lambda_n();
  const auto aut = stabilizer(hol.build_group(), 0);
  std::vector<PermGroup> over;
  for (const auto& g : run.transitive)
    if (lambda_n.is_subgroup_of(g)) over.push_back(g);
  if (is_abelian(lambda_n) && is_abelian(aut)) {
    for (std::size_t i = 0; i < over.size(); ++i)
      for (std::size_t j = i + 1; j < over.size(); ++j)
        if (over[i].order() == over[j].order() &&
            isomorphism_preserving(over[i], lambda_n, over[j], lambda_n))
          out.push_back("groups " + std::to_string(i) + " and " + std::to_string(j) +
                        " over lambda(N) are isomorphic preserving lambda(N)");
  }
  for (std::size_t i = 0; i < over.size(); ++i) {
    const auto& m = over[i];
    if (m.order() > max_order) continue;
    const u64 all = count_automorphisms(m, {}, aut_cap);
    if (count_automorphisms(m, {lambda_n}, aut_cap) != all) continue;
    const auto a = stabilizer(m, 0);
    const u64 rel = count_automorphisms(m, {a}, aut_cap);
    const u64 expected = normalizer(aut, a).order();
    if (rel != expected)
      out.push_back("group " + std::to_string(i) + " with characteristic lambda(N): |Aut(M,A)| = " +
                    std::to_string(rel) + ", expected " + std::to_string(expected));
  }
  return out;
}

}  // namespace hgspq
