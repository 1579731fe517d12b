#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hgspq {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1} stored as its image array.
/// Composition is right-to-left: (a * b)(x) == a(b(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  /// Throws DomainError unless `image` is a bijection of {0..n-1}.
  explicit Perm(std::vector<Point> image);

  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return image_.size(); }
  Point operator()(Point x) const { return image_[x]; }
  std::span<const Point> image() const noexcept { return image_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm pow(std::int64_t k) const;
  bool is_identity() const noexcept;
  std::uint64_t order() const;
  /// Sorted cycle lengths, fixed points included.
  std::vector<std::size_t> cycle_type() const;
  std::size_t num_fixed_points() const;

  std::size_t hash() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.image_ <=> b.image_;
  }

 private:
  std::vector<Point> image_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept { return p.hash(); }
};

}  // namespace hgspq
