#include "hgspq/iso.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "hgspq/errors.hpp"

namespace hgspq {

using Index = GroupTable::Index;

namespace {

constexpr std::uint64_t kNodeBudget = 200'000'000;

std::uint64_t pack_sig(std::uint32_t order, std::uint32_t class_size, std::uint32_t flags) {
  return (std::uint64_t{order} << 40) | (std::uint64_t{class_size} << 16) | flags;
}

struct Side {
  const PermGroup* group = nullptr;
  std::vector<std::vector<char>> in_sub;
  std::vector<std::size_t> sub_size;
  std::vector<std::uint64_t> sig;
};

Side make_side(const PermGroup& g, const std::vector<const PermGroup*>& subs) {
  if (subs.size() > 16) throw DomainError("at most 16 preserved subgroups");
  Side s;
  s.group = &g;
  const auto& t = g.table();
  std::vector<std::uint32_t> flags(t.size(), 0);
  for (std::size_t k = 0; k < subs.size(); ++k) {
    std::vector<char> in(t.size(), 0);
    for (const auto& x : subs[k]->elements()) {
      auto i = t.index_of(x);
      if (!i) throw DomainError("distinguished subgroup is not contained in the group");
      in[*i] = 1;
      flags[*i] |= 1u << k;
    }
    s.in_sub.push_back(std::move(in));
    s.sub_size.push_back(subs[k]->order());
  }
  const auto& cls = g.class_sizes();
  s.sig.resize(t.size());
  for (Index i = 0; i < t.size(); ++i) s.sig[i] = pack_sig(t.order(i), cls[i], flags[i]);
  return s;
}

// Enumerates injective homomorphisms dom -> cod determined by images of a
// fixed generating sequence, checking every Cayley-graph edge as the
// domain grows.
class HomSearch {
 public:
  HomSearch(const Side& dom, const Side& cod, std::vector<Index> gens,
            std::vector<std::vector<Index>> cands)
      : dom_(dom.group->table()), cod_(cod.group->table()), dom_sig_(dom.sig),
        cod_sig_(cod.sig), gens_(std::move(gens)), cands_(std::move(cands)),
        imgs_(gens_.size()), fwd_(dom_.size(), -1), bwd_(cod_.size(), -1) {
    domain_.push_back(dom_.identity());
    fwd_[dom_.identity()] = static_cast<std::int64_t>(cod_.identity());
    bwd_[cod_.identity()] = static_cast<std::int64_t>(dom_.identity());
  }

  template <class OnLeaf>
  void run(OnLeaf&& on_leaf) {
    stop_ = false;
    recurse(0, on_leaf);
  }

  const std::vector<Index>& images() const { return imgs_; }

 private:
  template <class OnLeaf>
  void recurse(std::size_t depth, OnLeaf& on_leaf) {
    if (++nodes_ > kNodeBudget) throw ResourceError("isomorphism search exceeded node budget");
    if (depth == gens_.size()) {
      if (!on_leaf(*this)) stop_ = true;
      return;
    }
    for (Index h : cands_[depth]) {
      const std::size_t mark = domain_.size();
      imgs_[depth] = h;
      if (relations_hold(depth) && extend(depth)) recurse(depth + 1, on_leaf);
      undo(mark);
      if (stop_) return;
    }
  }

  // Necessary conditions checked before extending: conjugates of earlier
  // generators and the first power of the new one that land in the mapped
  // part must land on the right images.
  bool relations_hold(std::size_t depth) const {
    const Index x = gens_[depth], h = imgs_[depth];
    const Index xi = dom_.inverse(x), hi = cod_.inverse(h);
    for (std::size_t i = 0; i < depth; ++i) {
      const Index y = dom_.mult(dom_.mult(x, gens_[i]), xi);
      if (fwd_[y] >= 0 &&
          static_cast<Index>(fwd_[y]) != cod_.mult(cod_.mult(h, imgs_[i]), hi))
        return false;
      const Index z = dom_.mult(dom_.mult(xi, gens_[i]), x);
      if (fwd_[z] >= 0 &&
          static_cast<Index>(fwd_[z]) != cod_.mult(cod_.mult(hi, imgs_[i]), h))
        return false;
    }
    Index xp = x, hp = h;
    for (std::uint32_t k = 1; k < dom_.order(x); ++k) {
      if (fwd_[xp] >= 0) return static_cast<Index>(fwd_[xp]) == hp;
      xp = dom_.mult(xp, x);
      hp = cod_.mult(hp, h);
    }
    return true;
  }

  bool extend(std::size_t depth) {
    const std::size_t old = domain_.size();
    for (std::size_t pos = 0; pos < domain_.size(); ++pos) {
      const Index x = domain_[pos];
      const Index fx = static_cast<Index>(fwd_[x]);
      for (std::size_t i = pos < old ? depth : 0; i <= depth; ++i) {
        const Index y = dom_.mult(gens_[i], x);
        const Index im = cod_.mult(imgs_[i], fx);
        if (fwd_[y] < 0) {
          if (bwd_[im] >= 0 || dom_sig_[y] != cod_sig_[im]) return false;
          fwd_[y] = im;
          bwd_[im] = y;
          domain_.push_back(y);
        } else if (static_cast<Index>(fwd_[y]) != im) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (domain_.size() > mark) {
      const Index y = domain_.back();
      domain_.pop_back();
      bwd_[static_cast<Index>(fwd_[y])] = -1;
      fwd_[y] = -1;
    }
  }

  const GroupTable& dom_;
  const GroupTable& cod_;
  const std::vector<std::uint64_t>& dom_sig_;
  const std::vector<std::uint64_t>& cod_sig_;
  std::vector<Index> gens_;
  std::vector<std::vector<Index>> cands_;
  std::vector<Index> imgs_;
  std::vector<std::int64_t> fwd_;
  std::vector<std::int64_t> bwd_;
  std::vector<Index> domain_;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
};

struct Plan {
  std::vector<Index> gens;
  std::vector<std::vector<Index>> cands;
};

// Generating sequence for G: generators of each distinguished subgroup in
// turn, then of the rest, each step taking the element with the fewest
// candidate images.
std::optional<Plan> make_plan(const Side& g, const Side& h) {
  const auto& tg = g.group->table();
  std::map<std::uint64_t, std::vector<Index>> by_sig;
  for (Index i = 0; i < h.sig.size(); ++i) by_sig[h.sig[i]].push_back(i);

  Plan plan;
  std::vector<char> span(tg.size(), 0);
  span[tg.identity()] = 1;

  auto grow = [&](const std::vector<char>* within) -> bool {
    for (;;) {
      std::tuple<std::size_t, std::int64_t, Index> best{0, 0, 0};
      bool found = false;
      for (Index x = 0; x < tg.size(); ++x) {
        if (span[x] || (within && !(*within)[x])) continue;
        auto it = by_sig.find(g.sig[x]);
        if (it == by_sig.end()) return false;
        std::tuple<std::size_t, std::int64_t, Index> key{
            it->second.size(), -static_cast<std::int64_t>(tg.order(x)), x};
        if (!found || key < best) {
          best = key;
          found = true;
        }
      }
      if (!found) return true;
      const Index x = std::get<2>(best);
      plan.gens.push_back(x);
      plan.cands.push_back(by_sig[g.sig[x]]);
      std::fill(span.begin(), span.end(), 0);
      for (Index y : closure_indices(tg, plan.gens)) span[y] = 1;
    }
  };
  for (const auto& in : g.in_sub)
    if (!grow(&in)) return std::nullopt;
  if (!grow(nullptr)) return std::nullopt;
  return plan;
}

bool signatures_match(const Side& g, const Side& h) {
  if (g.sig.size() != h.sig.size() || g.sub_size != h.sub_size) return false;
  auto a = g.sig;
  auto b = h.sig;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::optional<IsoWitness> find_iso(const PermGroup& g, const std::vector<const PermGroup*>& gs,
                                   const PermGroup& h, const std::vector<const PermGroup*>& hs) {
  if (g.order() != h.order()) return std::nullopt;
  Side sg = make_side(g, gs);
  Side sh = make_side(h, hs);
  if (!signatures_match(sg, sh)) return std::nullopt;
  auto plan = make_plan(sg, sh);
  if (!plan) return std::nullopt;
  HomSearch search(sg, sh, plan->gens, plan->cands);
  std::optional<IsoWitness> out;
  search.run([&](const HomSearch& s) {
    IsoWitness w;
    for (std::size_t i = 0; i < plan->gens.size(); ++i) {
      w.generators.push_back(g.table().element(plan->gens[i]));
      w.images.push_back(h.table().element(s.images()[i]));
    }
    out = std::move(w);
    return false;
  });
  return out;
}

}  // namespace

std::optional<IsoWitness> abstract_isomorphic(const PermGroup& g, const PermGroup& h,
                                              bool preserve_stabilizer) {
  if (!preserve_stabilizer) return find_iso(g, {}, h, {});
  if (g.degree() == 0 || h.degree() == 0) return std::nullopt;
  PermGroup g0 = stabilizer(g, 0);
  PermGroup h0 = stabilizer(h, 0);
  return find_iso(g, {&g0}, h, {&h0});
}

std::optional<IsoWitness> isomorphism_preserving(const PermGroup& g, const PermGroup& g0,
                                                 const PermGroup& h, const PermGroup& h0) {
  return find_iso(g, {&g0}, h, {&h0});
}

bool verify_witness(const PermGroup& g, const PermGroup& h, const IsoWitness& w,
                    bool preserve_stabilizer) {
  if (g.order() != h.order() || w.generators.size() != w.images.size()) return false;
  const auto& tg = g.table();
  const auto& th = h.table();
  std::vector<Index> gi, hi;
  for (std::size_t i = 0; i < w.generators.size(); ++i) {
    auto a = tg.index_of(w.generators[i]);
    auto b = th.index_of(w.images[i]);
    if (!a || !b) return false;
    gi.push_back(*a);
    hi.push_back(*b);
  }
  std::vector<std::int64_t> fwd(tg.size(), -1);
  std::vector<char> hit(th.size(), 0);
  std::vector<Index> queue{tg.identity()};
  fwd[tg.identity()] = th.identity();
  hit[th.identity()] = 1;
  for (std::size_t pos = 0; pos < queue.size(); ++pos) {
    const Index x = queue[pos];
    for (std::size_t i = 0; i < gi.size(); ++i) {
      const Index y = tg.mult(gi[i], x);
      const Index im = th.mult(hi[i], static_cast<Index>(fwd[x]));
      if (fwd[y] < 0) {
        if (hit[im]) return false;
        hit[im] = 1;
        fwd[y] = im;
        queue.push_back(y);
      } else if (static_cast<Index>(fwd[y]) != im) {
        return false;
      }
    }
  }
  if (queue.size() != tg.size()) return false;
  if (preserve_stabilizer) {
    for (Index x = 0; x < tg.size(); ++x) {
      const bool fixes_g = tg.image(x, 0) == 0;
      const bool fixes_h = th.image(static_cast<Index>(fwd[x]), 0) == 0;
      if (fixes_g != fixes_h) return false;
    }
  }
  return true;
}

std::uint64_t count_automorphisms(const PermGroup& m, const std::vector<PermGroup>& preserved,
                                  std::size_t cap) {
  if (m.order() > cap)
    throw ResourceError("automorphism count: |M| = " + std::to_string(m.order()) +
                        " exceeds cap " + std::to_string(cap));
  std::vector<const PermGroup*> subs;
  for (const auto& s : preserved) subs.push_back(&s);
  Side s = make_side(m, subs);
  auto plan = make_plan(s, s);
  if (!plan) throw InvariantViolation("automorphism count: identity map not found");
  HomSearch search(s, s, plan->gens, plan->cands);
  std::uint64_t count = 0;
  search.run([&](const HomSearch&) {
    ++count;
    return true;
  });
  return count;
}

std::uint64_t rel_aut_order(const PermGroup& m, const PermGroup& mprime, std::size_t cap) {
  return count_automorphisms(m, {mprime}, cap);
}

std::uint64_t aut_order(const PermGroup& m, std::size_t cap) {
  return count_automorphisms(m, {}, cap);
}

std::vector<std::uint64_t> invariant_signature(const PermGroup& g, bool with_stabilizer) {
  std::optional<PermGroup> g0;
  std::vector<const PermGroup*> subs;
  if (with_stabilizer && g.degree() > 0) {
    g0 = stabilizer(g, 0);
    subs.push_back(&*g0);
  }
  Side s = make_side(g, subs);
  auto sig = s.sig;
  std::sort(sig.begin(), sig.end());
  return sig;
}

}  // namespace hgspq
