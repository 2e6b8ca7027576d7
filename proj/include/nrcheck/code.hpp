#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nrcheck/hamming.hpp"

namespace nrcheck {

/// An immutable binary code: a deduplicated set of equal-length words kept
/// in ascending bit-word order. Minimum distance and a dense membership
/// bitmap are computed once at construction.
class Code {
 public:
  /// Throws std::invalid_argument if the length is out of range or a word
  /// has bits beyond it. Duplicates are dropped, order is canonicalized.
  Code(int length, std::vector<Word> words);

  static Code from_vertices(int length, std::span<const Vertex> vertices);

  int length() const { return length_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  std::span<const Word> words() const { return words_; }
  std::vector<Vertex> vertices() const;

  bool contains(Word w) const {
    if ((w & ~length_mask(length_)) != 0) return false;
    return (membership_[w >> 6] >> (w & 63U)) & 1U;
  }
  bool contains(const Vertex& v) const { return v.length() == length_ && contains(v.bits()); }

  /// Absent when the code has fewer than two words.
  std::optional<int> min_distance() const { return min_distance_; }

  /// C(k): the codewords of weight k.
  Code weight_class(int k) const;

  friend bool operator==(const Code& a, const Code& b) {
    return a.length_ == b.length_ && a.words_ == b.words_;
  }

 private:
  int length_;
  std::vector<Word> words_;
  std::vector<std::uint64_t> membership_;
  std::optional<int> min_distance_;
};

}  // namespace nrcheck
