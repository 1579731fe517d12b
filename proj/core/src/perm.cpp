#include "hgspq/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hgspq/errors.hpp"

namespace hgspq {

Perm::Perm(std::size_t degree) : image_(degree) {
  std::iota(image_.begin(), image_.end(), Point{0});
}

Perm::Perm(std::vector<Point> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (Point x : image_) {
    if (x >= image_.size() || seen[x])
      throw DomainError("Perm: image is not a bijection");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree,
                       const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (cyc[i] >= degree) throw DomainError("Perm: cycle point out of range");
      img[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
  }
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& rhs) const {
  if (rhs.degree() != degree()) throw DomainError("Perm: degree mismatch");
  Perm out;
  out.image_.resize(image_.size());
  for (std::size_t x = 0; x < image_.size(); ++x) out.image_[x] = image_[rhs.image_[x]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.image_.resize(image_.size());
  for (std::size_t x = 0; x < image_.size(); ++x) out.image_[image_[x]] = static_cast<Point>(x);
  return out;
}

Perm Perm::pow(std::int64_t k) const {
  Perm base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Perm result(degree());
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Perm::is_identity() const noexcept {
  for (std::size_t x = 0; x < image_.size(); ++x)
    if (image_[x] != x) return false;
  return true;
}

std::vector<std::size_t> Perm::cycle_type() const {
  std::vector<std::size_t> lens;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (Point y = static_cast<Point>(x); !seen[y]; y = image_[y]) {
      seen[y] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

std::uint64_t Perm::order() const {
  std::uint64_t ord = 1;
  for (std::size_t len : cycle_type()) ord = std::lcm(ord, static_cast<std::uint64_t>(len));
  return ord;
}

std::size_t Perm::num_fixed_points() const {
  std::size_t n = 0;
  for (std::size_t x = 0; x < image_.size(); ++x) n += image_[x] == x;
  return n;
}

std::size_t Perm::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : image_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string Perm::to_string() const {
  std::ostringstream os;
  std::vector<bool> seen(image_.size(), false);
  bool any = false;
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (seen[x] || image_[x] == x) continue;
    any = true;
    os << '(';
    for (Point y = static_cast<Point>(x); !seen[y]; y = image_[y]) {
      seen[y] = true;
      if (y != x) os << ' ';
      os << y;
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

}  // namespace hgspq
