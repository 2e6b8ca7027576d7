#include "nrcheck/perm.hpp"

#include <stdexcept>

namespace nrcheck {

Permutation::Permutation(int degree) : degree_(degree) {
  if (degree < 0 || degree > kMaxLength) throw std::invalid_argument("permutation degree out of range");
  for (int i = 0; i < degree; ++i) images_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  Permutation p(static_cast<int>(images.size()));
  std::array<bool, kMaxLength> seen{};
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int img = images[i];
    if (img < 0 || img >= p.degree_ || seen[static_cast<std::size_t>(img)]) {
      throw std::invalid_argument("images do not form a permutation");
    }
    seen[static_cast<std::size_t>(img)] = true;
    p.images_[i] = static_cast<std::uint8_t>(img);
  }
  return p;
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> zero_based(images);
  for (int& x : zero_based) --x;
  return from_images(zero_based);
}

Permutation Permutation::transposition(int degree, int a, int b) {
  Permutation p(degree);
  if (a < 1 || b < 1 || a > degree || b > degree) throw std::out_of_range("transposition point");
  std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(b - 1)]);
  return p;
}

bool Permutation::is_identity() const { return smallest_moved_point() < 0; }

int Permutation::smallest_moved_point() const {
  for (int i = 0; i < degree_; ++i) {
    if (images_[static_cast<std::size_t>(i)] != i) return i;
  }
  return -1;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree_ != other.degree_) throw std::invalid_argument("permutation degree mismatch");
  Permutation r(degree_);
  for (int i = 0; i < degree_; ++i) {
    r.images_[static_cast<std::size_t>(i)] = other.images_[images_[static_cast<std::size_t>(i)]];
  }
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r(degree_);
  for (int i = 0; i < degree_; ++i) r.images_[images_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return r;
}

Word Permutation::apply(Word w) const {
  Word out = 0;
  while (w != 0) {
    const int j = std::countr_zero(w);
    out |= Word{1} << images_[static_cast<std::size_t>(j)];
    w &= w - 1;
  }
  return out;
}

Vertex Permutation::apply(const Vertex& v) const {
  if (v.length() != degree_) throw std::invalid_argument("permutation/vertex length mismatch");
  return Vertex(degree_, apply(v.bits()));
}

std::string Permutation::to_string() const {
  std::string out;
  for (int i = 0; i < degree_; ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(images_[static_cast<std::size_t>(i)] + 1);
  }
  return out;
}

}  // namespace nrcheck
