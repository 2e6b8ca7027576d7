#include "nrcheck/hamming.hpp"

#include <algorithm>
#include <stdexcept>

namespace nrcheck {

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Vertex::Vertex(int length, Word bits) : length_(length), bits_(bits) {
  if (length < 1 || length > kMaxLength) {
    throw std::invalid_argument("vertex length must lie in [1, 24], got " +
                                std::to_string(length));
  }
  if ((bits & ~length_mask(length)) != 0) {
    throw std::invalid_argument("vertex has bits beyond its length");
  }
}

Vertex Vertex::from_support(int length, const std::vector<int>& support) {
  Word bits = 0;
  for (int i : support) {
    if (i < 1 || i > length) throw std::out_of_range("support coordinate out of range");
    bits |= Word{1} << (i - 1);
  }
  return Vertex(length, bits);
}

Vertex Vertex::parse(std::string_view text) {
  if (text.empty() || text.size() > kMaxLength) {
    throw std::invalid_argument("vertex text must have 1..24 characters");
  }
  Word bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= Word{1} << i;
    } else if (text[i] != '0') {
      throw std::invalid_argument("vertex text may only contain '0' and '1'");
    }
  }
  return Vertex(static_cast<int>(text.size()), bits);
}

bool Vertex::at(int i) const {
  if (i < 1 || i > length_) throw std::out_of_range("coordinate out of range");
  return (bits_ >> (i - 1)) & 1U;
}

std::vector<int> Vertex::support() const {
  std::vector<int> out;
  for (int i = 0; i < length_; ++i) {
    if ((bits_ >> i) & 1U) out.push_back(i + 1);
  }
  return out;
}

std::string Vertex::to_string() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if ((bits_ >> i) & 1U) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

Vertex Vertex::operator+(const Vertex& other) const {
  if (length_ != other.length_) throw std::invalid_argument("vertex length mismatch");
  return Vertex(length_, bits_ ^ other.bits_);
}

int weight(const Vertex& v) { return popcount(v.bits()); }

int distance(const Vertex& u, const Vertex& v) { return weight(u + v); }

bool covers(const Vertex& nu, const Vertex& beta) {
  if (nu.length() != beta.length()) throw std::invalid_argument("vertex length mismatch");
  return (nu.bits() & ~beta.bits()) == 0;
}

std::vector<Vertex> sphere(const Vertex& center, int k) {
  const int m = center.length();
  if (k < 0 || k > m) throw std::out_of_range("sphere radius out of range");
  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(binomial(m, k)));
  for_each_weight_k(m, k, [&](Word e) { words.push_back(e ^ center.bits()); });
  std::sort(words.begin(), words.end());
  std::vector<Vertex> out;
  out.reserve(words.size());
  for (Word w : words) out.emplace_back(m, w);
  return out;
}

BigInt krawtchouk(int m, int k, int x) {
  if (m < 0 || k < 0 || x < 0 || k > m || x > m) {
    throw std::out_of_range("krawtchouk arguments out of range");
  }
  BigInt sum = 0;
  for (int j = 0; j <= k; ++j) {
    BigInt term = binomial(x, j) * binomial(m - x, k - j);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

KrawtchoukTable::KrawtchoukTable(int m) : m_(m) {
  if (m < 0) throw std::out_of_range("negative length");
  const auto n = static_cast<std::size_t>(m + 1);
  values_.reserve(n * n);
  for (int k = 0; k <= m; ++k) {
    for (int x = 0; x <= m; ++x) values_.push_back(krawtchouk(m, k, x));
  }
}

const BigInt& KrawtchoukTable::at(int k, int x) const {
  if (k < 0 || x < 0 || k > m_ || x > m_) throw std::out_of_range("krawtchouk table index");
  return values_[static_cast<std::size_t>(k) * static_cast<std::size_t>(m_ + 1) +
                 static_cast<std::size_t>(x)];
}

}  // namespace nrcheck
