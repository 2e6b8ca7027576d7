#pragma once

#include <optional>
#include <vector>

#include "nrcheck/exact.hpp"
#include "nrcheck/perm.hpp"

namespace nrcheck {

/// A permutation group given by generators, with a stabilizer chain built
/// by deterministic Schreier-Sims.
///
/// Base points are chosen as the smallest point moved by the element that
/// forces a new level. Transversals are grown breadth-first, applying the
/// level's generators in insertion order, so the chain (and the order) is
/// reproducible for a given generator list.
class PermGroup {
 public:
  /// Identity generators are dropped. Throws std::invalid_argument on a
  /// degree mismatch.
  PermGroup(int degree, std::vector<Permutation> generators);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  BigInt order() const;
  bool contains(const Permutation& g) const;

  std::vector<int> base() const;
  std::vector<std::size_t> transversal_sizes() const;

  /// Orbit of a 0-based point under the generators, ascending.
  std::vector<int> orbit(int point) const;

 private:
  struct Level {
    int base_point = 0;
    std::vector<Permutation> generators;
    /// transversal[p], when set, maps base_point to p.
    std::vector<std::optional<Permutation>> transversal;
    std::vector<int> orbit;  // discovery order
  };

  /// Sifts g from level `from`; returns the residue and the level it stuck at.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const;
  void insert(const Permutation& g, std::size_t level);
  void rebuild_transversal(Level& level) const;

  int degree_;
  std::vector<Permutation> generators_;
  std::vector<Level> chain_;
};

}  // namespace nrcheck
