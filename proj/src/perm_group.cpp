#include "nrcheck/perm_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace nrcheck {

PermGroup::PermGroup(int degree, std::vector<Permutation> generators) : degree_(degree) {
  if (degree < 1 || degree > kMaxLength) throw std::invalid_argument("group degree out of range");
  for (Permutation& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
  for (const Permutation& g : generators_) insert(g, 0);
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation g, std::size_t from) const {
  for (std::size_t i = from; i < chain_.size(); ++i) {
    const Level& level = chain_[i];
    const auto& u = level.transversal[static_cast<std::size_t>(g(level.base_point))];
    if (!u) return {g, i};
    g = g * u->inverse();
  }
  return {g, chain_.size()};
}

void PermGroup::rebuild_transversal(Level& level) const {
  level.transversal.assign(static_cast<std::size_t>(degree_), std::nullopt);
  level.transversal[static_cast<std::size_t>(level.base_point)] = Permutation(degree_);
  level.orbit = {level.base_point};
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    const int p = level.orbit[head];
    for (const Permutation& s : level.generators) {
      const int q = s(p);
      if (!level.transversal[static_cast<std::size_t>(q)]) {
        level.transversal[static_cast<std::size_t>(q)] = *level.transversal[static_cast<std::size_t>(p)] * s;
        level.orbit.push_back(q);
      }
    }
  }
}

void PermGroup::insert(const Permutation& g, std::size_t level) {
  auto [residue, stuck] = sift(g, level);
  if (residue.is_identity()) return;
  if (stuck == chain_.size()) {
    Level fresh;
    fresh.base_point = residue.smallest_moved_point();
    chain_.push_back(std::move(fresh));
  }
  for (std::size_t i = level; i <= stuck; ++i) chain_[i].generators.push_back(residue);

  for (std::size_t i = stuck + 1; i-- > level;) {
    rebuild_transversal(chain_[i]);
    // Deeper insertions may reallocate chain_, so work from copies.
    const std::vector<int> orbit = chain_[i].orbit;
    const std::vector<Permutation> gens = chain_[i].generators;
    const std::vector<std::optional<Permutation>> transversal = chain_[i].transversal;
    for (int p : orbit) {
      for (const Permutation& s : gens) {
        const Permutation& up = *transversal[static_cast<std::size_t>(p)];
        const Permutation& ups = *transversal[static_cast<std::size_t>(s(p))];
        const Permutation schreier = up * s * ups.inverse();
        if (!schreier.is_identity()) insert(schreier, i + 1);
      }
    }
  }
}

BigInt PermGroup::order() const {
  BigInt order = 1;
  for (const Level& level : chain_) order *= level.orbit.size();
  return order;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return sift(g, 0).first.is_identity();
}

std::vector<int> PermGroup::base() const {
  std::vector<int> out;
  for (const Level& level : chain_) out.push_back(level.base_point);
  return out;
}

std::vector<std::size_t> PermGroup::transversal_sizes() const {
  std::vector<std::size_t> out;
  for (const Level& level : chain_) out.push_back(level.orbit.size());
  return out;
}

std::vector<int> PermGroup::orbit(int point) const {
  if (point < 0 || point >= degree_) throw std::out_of_range("orbit point out of range");
  std::vector<bool> seen(static_cast<std::size_t>(degree_), false);
  std::vector<int> out{point};
  seen[static_cast<std::size_t>(point)] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const Permutation& s : generators_) {
      const int q = s(out[head]);
      if (!seen[static_cast<std::size_t>(q)]) {
        seen[static_cast<std::size_t>(q)] = true;
        out.push_back(q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nrcheck
