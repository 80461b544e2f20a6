#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace colorgroups {

/// Exact integer used for group orders and factorials.
using BigInt = boost::multiprecision::cpp_int;

using Point = std::uint32_t;

/// Weakly decreasing cycle lengths of a permutation, fixed points included.
struct CycleType {
  std::vector<std::size_t> parts;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;

  std::string to_string() const;
};

/// A bijection of {0, ..., n-1} stored as its image array.
///
/// Products compose as functions: (p * q)(x) == p(q(x)), so in a product
/// p1 * p2 * ... * pk the rightmost factor acts first.
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Builds a permutation from disjoint or overlapping cycles, applied
  /// right to left as written.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  /// Parses cycle notation such as "(0 1)(2 3 4)" or "()" for the identity.
  /// Commas between points are accepted.
  static Permutation parse_cycles(std::string_view text, std::size_t degree);

  /// The transposition swapping a and b.
  static Permutation transposition(std::size_t degree, Point a, Point b);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  Point image(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  bool is_involution() const;

  Permutation inverse() const;
  Permutation pow(std::int64_t exponent) const;

  /// Nontrivial cycles, each starting at its smallest point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;
  CycleType cycle_type() const;

  /// Least common multiple of the cycle lengths.
  BigInt order() const;

  /// Smallest point not fixed, or degree() when the permutation is the identity.
  std::size_t first_moved_point() const;

  /// Cycle notation with fixed points omitted; "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend Permutation operator*(const Permutation& p, const Permutation& q);

 private:
  std::vector<Point> images_;
};

/// p * q applies q first. Throws std::invalid_argument on degree mismatch.
Permutation operator*(const Permutation& p, const Permutation& q);

inline Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }
inline Permutation inverse(const Permutation& p) { return p.inverse(); }
inline CycleType cycle_type(const Permutation& p) { return p.cycle_type(); }

/// Product of the given permutations in list order, p[0] * p[1] * ...
Permutation product(std::span<const Permutation> factors, std::size_t degree);

bool commute(const Permutation& a, const Permutation& b);

BigInt factorial(std::size_t n);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace colorgroups
