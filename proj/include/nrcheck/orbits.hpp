#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nrcheck/aut.hpp"
#include "nrcheck/code.hpp"
#include "nrcheck/perm_group.hpp"

namespace nrcheck {

/// Orbits of a group of Hamming-graph automorphisms on all 2^m vertices.
/// Orbit ids are numbered by smallest member, so orbit 0 contains 0.
struct OrbitPartition {
  int length = 0;
  std::vector<std::uint32_t> orbit_id;
  std::vector<std::size_t> orbit_sizes;
  /// Smallest vertex in each orbit.
  std::vector<Word> representatives;

  std::size_t orbit_count() const { return orbit_sizes.size(); }
};

/// Breadth-first closure from each unvisited vertex, generators applied in
/// list order. Throws std::invalid_argument if a generator length differs.
OrbitPartition vertex_orbits(const std::vector<AutElement>& gens, int m);

struct SphereOrbits {
  std::size_t count = 0;
  /// Sizes listed in order of each orbit's smallest vertex.
  std::vector<std::size_t> sizes;
};

/// Orbits of the permutation action on weight-k vertices.
/// Throws std::invalid_argument if m != degree or k is out of range.
SphereOrbits orbits_on_sphere(const PermGroup& group, int m, int k);

struct TransitivityCertificate {
  bool completely_transitive = false;
  /// orbit_sizes[i]: size of the single orbit equal to cell C_i (success).
  std::vector<std::size_t> cell_sizes;
  std::vector<std::size_t> orbit_sizes;
  std::size_t orbit_count = 0;
  /// On failure: two vertices of one cell lying in different orbits.
  std::optional<std::pair<Vertex, Vertex>> witness;
};

class NotAStabilizerError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Succeeds iff every distance cell of C is exactly one orbit.
/// Throws NotAStabilizerError if some generator does not fix C.
TransitivityCertificate verify_complete_transitivity(const Code& code, const std::vector<AutElement>& gens);

}  // namespace nrcheck
