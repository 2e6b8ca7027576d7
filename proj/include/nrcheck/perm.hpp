#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "nrcheck/hamming.hpp"

namespace nrcheck {

/// A permutation of {0..n-1}, n <= 24, acting on the right: (p * q)(i) is
/// q(p(i)). Coordinate j of a vertex is moved to position p(j).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity
  /// From 0-based images. Throws std::invalid_argument if not a bijection.
  static Permutation from_images(const std::vector<int>& images);
  /// From 1-based images of 1..n.
  static Permutation from_one_based(const std::vector<int>& images);
  /// Transposition of 1-based points a and b.
  static Permutation transposition(int degree, int a, int b);

  int degree() const { return degree_; }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  bool is_identity() const;
  /// -1 for the identity.
  int smallest_moved_point() const;

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;

  /// Moves bit j of w to bit p(j).
  Word apply(Word w) const;
  Vertex apply(const Vertex& v) const;

  /// Space-separated 1-based images.
  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.degree_ == b.degree_ && a.images_ == b.images_;
  }
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.images_ <=> b.images_;
  }

 private:
  int degree_ = 0;
  std::array<std::uint8_t, kMaxLength> images_{};
};

}  // namespace nrcheck
