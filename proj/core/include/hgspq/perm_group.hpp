#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hgspq/perm.hpp"

namespace hgspq {

inline constexpr std::size_t kDefaultOrderCap = 1'000'000;

/// Indexed view of a finite permutation group: elements are numbered in
/// sorted order and multiplied through a base-image lookup, so a product
/// costs |base| image reads plus one table probe.
class GroupTable {
 public:
  using Index = std::uint32_t;
  static constexpr Index npos = ~Index{0};

  GroupTable(std::size_t degree, std::vector<Perm> sorted_elements);

  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  Index identity() const noexcept { return identity_; }
  const Perm& element(Index i) const { return elements_[i]; }
  const std::vector<Perm>& elements() const noexcept { return elements_; }
  const std::vector<Point>& base() const noexcept { return base_; }

  Point image(Index a, Point x) const { return elements_[a](x); }
  Index mult(Index a, Index b) const;  // element(a) * element(b)
  Index inverse(Index a) const { return inverse_[a]; }
  Index conjugate(Index g, Index x) const {  // g x g^-1
    return mult(mult(g, x), inverse_[g]);
  }
  std::uint32_t order(Index a) const { return order_[a]; }
  Index power(Index a, std::uint64_t k) const;

  std::optional<Index> index_of(const Perm& p) const;

 private:
  Index lookup_images(std::span<const Point> base_images) const;

  std::size_t degree_;
  std::vector<Perm> elements_;
  std::vector<Point> base_;
  std::vector<std::uint64_t> stride_;
  bool dense_ = true;
  std::vector<Index> dense_lookup_;
  std::unordered_map<std::uint64_t, Index> sparse_lookup_;
  std::vector<Index> inverse_;
  std::vector<std::uint32_t> order_;
  Index identity_ = 0;
};

/// A finite permutation group held with its complete, sorted element list.
/// Immutable after construction; copies share storage.
class PermGroup {
 public:
  PermGroup() : PermGroup(trivial(0)) {}

  /// Smallest group containing `gens`. Throws ResourceError if the order
  /// exceeds `cap`, DomainError on degree mismatch.
  static PermGroup closure(std::vector<Perm> gens, std::size_t degree,
                           std::size_t cap = kDefaultOrderCap);
  static PermGroup trivial(std::size_t degree);
  /// Trusts that `elements` is closed under products (checked by size
  /// only). Used when an ambient group already enumerated a subgroup.
  static PermGroup from_closed_elements(std::size_t degree,
                                        std::vector<Perm> generators,
                                        std::vector<Perm> elements);

  std::size_t degree() const noexcept { return data_->table.degree(); }
  std::uint64_t order() const noexcept { return data_->table.size(); }
  const std::vector<Perm>& generators() const noexcept { return data_->generators; }
  const std::vector<Perm>& elements() const noexcept { return data_->table.elements(); }
  const GroupTable& table() const noexcept { return data_->table; }
  bool contains(const Perm& p) const { return table().index_of(p).has_value(); }
  bool is_subgroup_of(const PermGroup& other) const;

  /// Indices of the generators in table().
  std::vector<GroupTable::Index> generator_indices() const;
  /// Conjugacy-class size of every element, by table index. Cached.
  const std::vector<std::uint32_t>& class_sizes() const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.elements() == b.elements();
  }
  /// Canonical order: by group order, then by sorted element list.
  friend bool operator<(const PermGroup& a, const PermGroup& b);

 private:
  struct Data {
    Data(std::size_t degree, std::vector<Perm> gens, std::vector<Perm> elems)
        : generators(std::move(gens)), table(degree, std::move(elems)) {}
    std::vector<Perm> generators;
    GroupTable table;
    mutable std::once_flag class_once;
    mutable std::vector<std::uint32_t> class_sizes;
  };
  explicit PermGroup(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

std::vector<Point> orbit(const PermGroup& g, Point x);
bool is_transitive(const PermGroup& g);
bool is_regular(const PermGroup& g);
PermGroup stabilizer(const PermGroup& g, Point x);
/// {x in G : x H x^-1 = H}. Requires H to be a subgroup of G.
PermGroup normalizer(const PermGroup& g, const PermGroup& h);
bool is_normal_subgroup(const PermGroup& h, const PermGroup& g);
bool is_abelian(const PermGroup& g);
/// Subgroup generated by `gens` inside `g`, returned as a PermGroup.
PermGroup subgroup_generated(const PermGroup& g, const std::vector<Perm>& gens);
/// Intersection of two groups of the same degree.
PermGroup intersection(const PermGroup& a, const PermGroup& b);
/// True iff G contains a normal subgroup acting regularly. For G transitive
/// this is exactly "the point stabilizer has a normal complement".
bool has_regular_normal_subgroup(const PermGroup& g);
/// Number of Sylow r-subgroups, r prime.
std::uint64_t count_sylow_subgroups(const PermGroup& g, std::uint64_t r);
bool is_solvable(const PermGroup& g);

/// Index-set helpers over a GroupTable.
std::vector<GroupTable::Index> closure_indices(
    const GroupTable& t, std::span<const GroupTable::Index> gens);

}  // namespace hgspq
