#include "nrcheck/code.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nrcheck {

Code::Code(int length, std::vector<Word> words) : length_(length), words_(std::move(words)) {
  if (length < 1 || length > kMaxLength) {
    throw std::invalid_argument("code length must lie in [1, 24], got " + std::to_string(length));
  }
  const Word mask = length_mask(length);
  for (Word w : words_) {
    if ((w & ~mask) != 0) throw std::invalid_argument("codeword has bits beyond the code length");
  }
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());

  membership_.assign(((std::size_t{1} << length) + 63) / 64, 0);
  for (Word w : words_) membership_[w >> 6] |= std::uint64_t{1} << (w & 63U);

  if (words_.size() >= 2) {
    int best = length + 1;
    for (std::size_t i = 0; i < words_.size() && best > 1; ++i) {
      for (std::size_t j = i + 1; j < words_.size(); ++j) {
        best = std::min(best, popcount(words_[i] ^ words_[j]));
      }
    }
    min_distance_ = best;
  }
}

Code Code::from_vertices(int length, std::span<const Vertex> vertices) {
  std::vector<Word> words;
  words.reserve(vertices.size());
  for (const Vertex& v : vertices) {
    if (v.length() != length) throw std::invalid_argument("vertex length mismatch");
    words.push_back(v.bits());
  }
  return Code(length, std::move(words));
}

std::vector<Vertex> Code::vertices() const {
  std::vector<Vertex> out;
  out.reserve(words_.size());
  for (Word w : words_) out.emplace_back(length_, w);
  return out;
}

Code Code::weight_class(int k) const {
  std::vector<Word> out;
  for (Word w : words_) {
    if (popcount(w) == k) out.push_back(w);
  }
  return Code(length_, std::move(out));
}

}  // namespace nrcheck
