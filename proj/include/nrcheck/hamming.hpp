#pragma once

// Vertices of the binary Hamming graph and the Krawtchouk polynomials of
// its association scheme.
//
// Coordinate i (1-indexed) of a vertex of length m lives in bit i-1 of a
// single machine word, so every length up to 24 fits in 32 bits.

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nrcheck/exact.hpp"

namespace nrcheck {

using Word = std::uint32_t;

inline constexpr int kMaxLength = 24;

/// All-ones mask for the low m bits.
constexpr Word length_mask(int m) {
  return m >= 32 ? ~Word{0} : ((Word{1} << m) - 1);
}

inline int popcount(Word w) { return std::popcount(w); }

class Vertex {
 public:
  Vertex() = default;
  /// Throws std::invalid_argument for lengths outside [1, 24] or stray bits.
  Vertex(int length, Word bits);

  static Vertex zero(int length) { return Vertex(length, 0); }
  static Vertex ones(int length) { return Vertex(length, length_mask(length)); }
  /// Vertex with exactly the listed (1-indexed) coordinates set.
  static Vertex from_support(int length, const std::vector<int>& support);
  /// Parses the '0'/'1' text form, coordinate 1 leftmost.
  static Vertex parse(std::string_view text);

  int length() const { return length_; }
  Word bits() const { return bits_; }
  /// Value of 1-indexed coordinate i.
  bool at(int i) const;
  std::vector<int> support() const;

  Vertex complement() const { return Vertex(length_, ~bits_ & length_mask(length_)); }
  std::string to_string() const;

  /// Coordinatewise sum over F_2; throws on length mismatch.
  Vertex operator+(const Vertex& other) const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  int length_ = 1;
  Word bits_ = 0;
};

int weight(const Vertex& v);
/// Throws std::invalid_argument on length mismatch.
int distance(const Vertex& u, const Vertex& v);
/// True iff supp(nu) is contained in supp(beta).
bool covers(const Vertex& nu, const Vertex& beta);

/// Every vertex at distance k from center, ascending by bit word.
/// Throws std::out_of_range unless 0 <= k <= length.
std::vector<Vertex> sphere(const Vertex& center, int k);

/// Calls fn(word) for every m-bit word of weight k, ascending.
template <typename Fn>
void for_each_weight_k(int m, int k, Fn&& fn) {
  if (k < 0 || k > m) return;
  if (k == 0) {
    fn(Word{0});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << m;
  std::uint64_t w = (std::uint64_t{1} << k) - 1;
  while (w < limit) {
    fn(static_cast<Word>(w));
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t c = w & (~w + 1);
    const std::uint64_t r = w + c;
    w = (((r ^ w) >> 2) / c) | r;
  }
}

/// K_k(x) for length m, summed exactly. Throws std::out_of_range unless
/// 0 <= k, x <= m.
BigInt krawtchouk(int m, int k, int x);

/// Memoized (m+1) x (m+1) table with entry (k, x) = K_k(x).
class KrawtchoukTable {
 public:
  explicit KrawtchoukTable(int m);

  int length() const { return m_; }
  const BigInt& at(int k, int x) const;

 private:
  int m_;
  std::vector<BigInt> values_;
};

}  // namespace nrcheck
