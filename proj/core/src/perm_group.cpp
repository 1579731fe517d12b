#include "hgspq/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

#include "hgspq/errors.hpp"

namespace hgspq {

using Index = GroupTable::Index;

namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;

}  // namespace

GroupTable::GroupTable(std::size_t degree, std::vector<Perm> sorted_elements)
    : degree_(degree), elements_(std::move(sorted_elements)) {
  if (elements_.empty()) throw DomainError("GroupTable: empty element list");

  // Greedy base: add a point while the pointwise stabilizer is nontrivial.
  std::vector<Index> stab(elements_.size());
  std::iota(stab.begin(), stab.end(), Index{0});
  for (Point x = 0; x < degree_ && stab.size() > 1; ++x) {
    bool moved = std::any_of(stab.begin(), stab.end(),
                             [&](Index i) { return elements_[i](x) != x; });
    if (!moved) continue;
    base_.push_back(x);
    std::erase_if(stab, [&](Index i) { return elements_[i](x) != x; });
  }

  std::uint64_t span = 1;
  bool overflow = false;
  for (std::size_t k = 0; k < base_.size(); ++k) {
    stride_.push_back(span);
    if (span > (~std::uint64_t{0}) / std::max<std::uint64_t>(degree_, 1)) overflow = true;
    span *= degree_;
  }
  if (overflow) throw ResourceError("GroupTable: base key does not fit in 64 bits");
  dense_ = span <= kDenseLimit;
  if (dense_) dense_lookup_.assign(span, npos);

  std::vector<Point> imgs(base_.size());
  for (Index i = 0; i < elements_.size(); ++i) {
    std::uint64_t key = 0;
    for (std::size_t k = 0; k < base_.size(); ++k) key += elements_[i](base_[k]) * stride_[k];
    if (dense_) {
      dense_lookup_[key] = i;
    } else {
      sparse_lookup_.emplace(key, i);
    }
  }

  order_.resize(elements_.size());
  inverse_.resize(elements_.size());
  for (Index i = 0; i < elements_.size(); ++i) {
    order_[i] = static_cast<std::uint32_t>(elements_[i].order());
    if (elements_[i].is_identity()) identity_ = i;
  }
  for (Index i = 0; i < elements_.size(); ++i) {
    auto inv = index_of(elements_[i].inverse());
    if (!inv) throw DomainError("GroupTable: element list is not closed under inverses");
    inverse_[i] = *inv;
  }
}

Index GroupTable::lookup_images(std::span<const Point> base_images) const {
  std::uint64_t key = 0;
  for (std::size_t k = 0; k < base_.size(); ++k) key += base_images[k] * stride_[k];
  if (dense_) return dense_lookup_[key];
  auto it = sparse_lookup_.find(key);
  return it == sparse_lookup_.end() ? npos : it->second;
}

Index GroupTable::mult(Index a, Index b) const {
  const auto ia = elements_[a].image();
  const auto ib = elements_[b].image();
  std::uint64_t key = 0;
  for (std::size_t k = 0; k < base_.size(); ++k) key += ia[ib[base_[k]]] * stride_[k];
  if (dense_) return dense_lookup_[key];
  return sparse_lookup_.find(key)->second;
}

Index GroupTable::power(Index a, std::uint64_t k) const {
  Index result = identity_;
  Index base = a;
  while (k) {
    if (k & 1) result = mult(result, base);
    base = mult(base, base);
    k >>= 1;
  }
  return result;
}

std::optional<Index> GroupTable::index_of(const Perm& p) const {
  if (p.degree() != degree_) return std::nullopt;
  std::vector<Point> imgs(base_.size());
  for (std::size_t k = 0; k < base_.size(); ++k) imgs[k] = p(base_[k]);
  Index i = lookup_images(imgs);
  if (i == npos || elements_[i] != p) return std::nullopt;
  return i;
}

std::vector<Index> closure_indices(const GroupTable& t, std::span<const Index> gens) {
  std::vector<char> in(t.size(), 0);
  std::vector<Index> out{t.identity()};
  in[t.identity()] = 1;
  for (std::size_t pos = 0; pos < out.size(); ++pos) {
    for (Index g : gens) {
      Index y = t.mult(g, out[pos]);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Greedy generating set of the subgroup whose sorted index list is `subset`.
std::vector<Index> small_generating_set(const GroupTable& t, const std::vector<Index>& subset) {
  std::vector<Index> order_sorted = subset;
  std::stable_sort(order_sorted.begin(), order_sorted.end(),
                   [&](Index a, Index b) { return t.order(a) > t.order(b); });
  std::vector<Index> gens;
  std::vector<char> in(t.size(), 0);
  in[t.identity()] = 1;
  std::size_t span = 1;
  for (Index x : order_sorted) {
    if (span == subset.size()) break;
    if (in[x]) continue;
    gens.push_back(x);
    auto cl = closure_indices(t, gens);
    for (Index y : cl) in[y] = 1;
    span = cl.size();
  }
  return gens;
}

PermGroup subgroup_from_indices(const PermGroup& g, const std::vector<Index>& idx) {
  const auto& t = g.table();
  std::vector<Perm> elems;
  elems.reserve(idx.size());
  for (Index i : idx) elems.push_back(t.element(i));
  std::vector<Perm> gens;
  for (Index i : small_generating_set(t, idx)) gens.push_back(t.element(i));
  return PermGroup::from_closed_elements(g.degree(), std::move(gens), std::move(elems));
}

std::vector<char> membership(const PermGroup& g, const PermGroup& h) {
  std::vector<char> in(g.order(), 0);
  for (const auto& x : h.elements()) {
    auto i = g.table().index_of(x);
    if (!i) throw DomainError("expected a subgroup");
    in[*i] = 1;
  }
  return in;
}

}  // namespace

PermGroup PermGroup::closure(std::vector<Perm> gens, std::size_t degree, std::size_t cap) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw DomainError("closure: generator degree mismatch");
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> elems{Perm(degree)};
  seen.insert(elems.front());
  for (std::size_t pos = 0; pos < elems.size(); ++pos) {
    for (const auto& g : gens) {
      Perm y = g * elems[pos];
      if (seen.insert(y).second) {
        elems.push_back(std::move(y));
        if (elems.size() > cap)
          throw ResourceError("closure: group order exceeds cap " + std::to_string(cap));
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return PermGroup(std::make_shared<const Data>(degree, std::move(gens), std::move(elems)));
}

PermGroup PermGroup::trivial(std::size_t degree) {
  return PermGroup(std::make_shared<const Data>(degree, std::vector<Perm>{},
                                                std::vector<Perm>{Perm(degree)}));
}

PermGroup PermGroup::from_closed_elements(std::size_t degree, std::vector<Perm> generators,
                                          std::vector<Perm> elements) {
  if (!std::is_sorted(elements.begin(), elements.end()))
    std::sort(elements.begin(), elements.end());
  return PermGroup(
      std::make_shared<const Data>(degree, std::move(generators), std::move(elements)));
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (other.degree() != degree() || other.order() % order() != 0) return false;
  return std::all_of(generators().begin(), generators().end(),
                     [&](const Perm& g) { return other.contains(g); });
}

std::vector<Index> PermGroup::generator_indices() const {
  std::vector<Index> out;
  for (const auto& g : generators()) out.push_back(*table().index_of(g));
  return out;
}

const std::vector<std::uint32_t>& PermGroup::class_sizes() const {
  std::call_once(data_->class_once, [this] {
    const auto& t = table();
    auto gens = generator_indices();
    std::vector<std::uint32_t> sizes(t.size(), 0);
    std::vector<Index> cls;
    for (Index x = 0; x < t.size(); ++x) {
      if (sizes[x]) continue;
      cls.assign(1, x);
      sizes[x] = 1;
      for (std::size_t pos = 0; pos < cls.size(); ++pos) {
        for (Index g : gens) {
          Index y = t.conjugate(g, cls[pos]);
          if (!sizes[y]) {
            sizes[y] = 1;
            cls.push_back(y);
          }
        }
      }
      for (Index y : cls) sizes[y] = static_cast<std::uint32_t>(cls.size());
    }
    data_->class_sizes = std::move(sizes);
  });
  return data_->class_sizes;
}

bool operator<(const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements() < b.elements();
}

std::vector<Point> orbit(const PermGroup& g, Point x) {
  std::vector<char> seen(g.degree(), 0);
  std::vector<Point> out{x};
  seen[x] = 1;
  for (std::size_t pos = 0; pos < out.size(); ++pos) {
    for (const auto& gen : g.generators()) {
      Point y = gen(out[pos]);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_transitive(const PermGroup& g) {
  if (g.degree() == 0) return false;
  return orbit(g, 0).size() == g.degree();
}

bool is_regular(const PermGroup& g) { return is_transitive(g) && g.order() == g.degree(); }

PermGroup stabilizer(const PermGroup& g, Point x) {
  if (x >= g.degree()) throw DomainError("stabilizer: point out of range");
  std::vector<Index> idx;
  for (Index i = 0; i < g.order(); ++i)
    if (g.table().image(i, x) == x) idx.push_back(i);
  return subgroup_from_indices(g, idx);
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h) {
  const auto& t = g.table();
  auto in_h = membership(g, h);
  std::vector<Index> hgens;
  for (const auto& x : h.generators()) hgens.push_back(*t.index_of(x));
  std::vector<Index> idx;
  for (Index x = 0; x < t.size(); ++x) {
    bool ok = std::all_of(hgens.begin(), hgens.end(),
                          [&](Index y) { return in_h[t.conjugate(x, y)] != 0; });
    if (ok) idx.push_back(x);
  }
  return subgroup_from_indices(g, idx);
}

bool is_normal_subgroup(const PermGroup& h, const PermGroup& g) {
  if (!h.is_subgroup_of(g)) return false;
  for (const auto& x : g.generators())
    for (const auto& y : h.generators())
      if (!h.contains(x * y * x.inverse())) return false;
  return true;
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

PermGroup subgroup_generated(const PermGroup& g, const std::vector<Perm>& gens) {
  std::vector<Index> gi;
  for (const auto& x : gens) {
    auto i = g.table().index_of(x);
    if (!i) throw DomainError("subgroup_generated: generator outside the group");
    gi.push_back(*i);
  }
  auto idx = closure_indices(g.table(), gi);
  std::vector<Perm> elems;
  for (Index i : idx) elems.push_back(g.table().element(i));
  return PermGroup::from_closed_elements(g.degree(), gens, std::move(elems));
}

PermGroup intersection(const PermGroup& a, const PermGroup& b) {
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& large = a.order() <= b.order() ? b : a;
  std::vector<Index> idx;
  for (Index i = 0; i < small.order(); ++i)
    if (large.contains(small.table().element(i))) idx.push_back(i);
  return subgroup_from_indices(small, idx);
}

bool has_regular_normal_subgroup(const PermGroup& g) {
  const std::size_t n = g.degree();
  if (n == 0 || g.order() % n != 0) return false;
  const auto& t = g.table();
  auto gens = g.generator_indices();

  // Conjugacy classes of fixed-point-free elements; a regular normal
  // subgroup is the identity plus a union of such classes.
  std::vector<std::vector<Index>> classes;
  std::vector<char> seen(t.size(), 0);
  for (Index x = 0; x < t.size(); ++x) {
    if (seen[x] || x == t.identity()) continue;
    std::vector<Index> cls{x};
    seen[x] = 1;
    for (std::size_t pos = 0; pos < cls.size(); ++pos)
      for (Index gg : gens) {
        Index y = t.conjugate(gg, cls[pos]);
        if (!seen[y]) {
          seen[y] = 1;
          cls.push_back(y);
        }
      }
    if (t.element(x).num_fixed_points() == 0) classes.push_back(std::move(cls));
  }

  // Depth-first over normal subgroups generated by fixed-point-free
  // classes, pruned as soon as one has a non-identity element with a fixed
  // point or order not dividing n.
  std::vector<char> fpf(t.size(), 0);
  for (const auto& cls : classes)
    for (Index x : cls) fpf[x] = 1;
  std::set<std::vector<Index>> visited;
  auto dfs = [&](auto&& self, const std::vector<Index>& gens_so_far,
                 const std::vector<Index>& members) -> bool {
    if (members.size() == n) return true;
    std::vector<char> in(t.size(), 0);
    for (Index x : members) in[x] = 1;
    for (const auto& cls : classes) {
      if (in[cls.front()]) continue;
      std::vector<Index> gset = gens_so_far;
      gset.insert(gset.end(), cls.begin(), cls.end());
      auto cl = closure_indices(t, gset);
      if (cl.size() > n || n % cl.size() != 0) continue;
      if (!std::all_of(cl.begin(), cl.end(),
                       [&](Index x) { return x == t.identity() || fpf[x]; }))
        continue;
      if (!visited.insert(cl).second) continue;
      if (self(self, gset, cl)) return true;
    }
    return false;
  };
  return dfs(dfs, {}, {t.identity()});
}

std::uint64_t count_sylow_subgroups(const PermGroup& g, std::uint64_t r) {
  std::uint64_t sylow_order = 1;
  for (std::uint64_t n = g.order(); n % r == 0; n /= r) sylow_order *= r;
  if (sylow_order == 1) return 1;
  const auto& t = g.table();
  auto is_r_power = [r](std::uint64_t x) {
    while (x % r == 0) x /= r;
    return x == 1;
  };
  std::vector<Index> gens;
  std::vector<Index> span{t.identity()};
  while (span.size() < sylow_order) {
    bool grown = false;
    for (Index x = 0; x < t.size() && !grown; ++x) {
      if (!is_r_power(t.order(x)) || std::binary_search(span.begin(), span.end(), x)) continue;
      gens.push_back(x);
      auto cand = closure_indices(t, gens);
      if (is_r_power(cand.size())) {
        span = std::move(cand);
        grown = true;
      } else {
        gens.pop_back();
      }
    }
    if (!grown) throw InvariantViolation("count_sylow_subgroups: greedy growth stalled");
  }
  std::vector<Perm> pgens;
  for (Index i : gens) pgens.push_back(t.element(i));
  PermGroup p = subgroup_generated(g, pgens);
  return g.order() / normalizer(g, p).order();
}

bool is_solvable(const PermGroup& g) {
  PermGroup cur = g;
  while (cur.order() > 1) {
    const auto& t = cur.table();
    auto gens = cur.generator_indices();
    std::vector<Index> sgens;
    for (Index a : gens)
      for (Index b : gens) {
        Index c = t.mult(t.mult(a, b), t.mult(t.inverse(a), t.inverse(b)));
        if (c != t.identity()) sgens.push_back(c);
      }
    // Normal closure of the generator commutators is the derived subgroup.
    for (;;) {
      auto span = closure_indices(t, sgens);
      std::vector<char> in(t.size(), 0);
      for (Index i : span) in[i] = 1;
      bool added = false;
      for (Index a : gens) {
        for (Index y : std::vector<Index>(sgens)) {
          Index c = t.conjugate(a, y);
          if (!in[c]) {
            sgens.push_back(c);
            added = true;
            in[c] = 1;
          }
        }
      }
      if (!added) {
        if (span.size() == cur.order()) return false;
        std::vector<Perm> pg;
        for (Index i : sgens) pg.push_back(t.element(i));
        std::vector<Perm> elems;
        for (Index i : span) elems.push_back(t.element(i));
        cur = PermGroup::from_closed_elements(cur.degree(), std::move(pg), std::move(elems));
        break;
      }
    }
  }
  return true;
}

}  // namespace hgspq
