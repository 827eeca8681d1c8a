#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hurwitz {

using Point = std::uint32_t;

// A permutation of {0..n-1} acting on the right: point p maps to images()[p].
// Products follow the right-action convention, (p * q) applies p first.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Point> images);  // validates bijectivity

  static Perm identity(std::size_t degree);
  // Swaps a and b (0-based).
  static Perm transposition(std::size_t degree, Point a, Point b);
  // Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)". "()" is the
  // identity. Points above `degree` are rejected.
  static Perm parse_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point p) const { return images_[p]; }
  Point operator[](Point p) const { return images_[p]; }
  const std::vector<Point>& images() const { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm& operator*=(const Perm& rhs);
  Perm inverse() const;
  // this^g = g^-1 * this * g
  Perm conjugate_by(const Perm& g) const;

  bool is_identity() const;
  bool is_even() const;
  // +1 or -1
  int sign() const { return is_even() ? 1 : -1; }
  // Cycle lengths (including fixed points), descending.
  std::vector<std::size_t> cycle_type() const;
  // Smallest m > 0 with this^m = id (as 64-bit; lcm of cycle lengths).
  std::uint64_t order() const;
  // 1-based cycle notation without fixed points; "()" for the identity.
  std::string to_cycle_string() const;

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  std::vector<Point> images_;
};

}  // namespace hurwitz
