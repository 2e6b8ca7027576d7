#pragma once

// Constructions of the extended Golay code, its octad coset decomposition,
// the Nordstrom-Robinson code and the codes derived from it.

#include <array>
#include <optional>
#include <vector>

#include "nrcheck/code.hpp"

namespace nrcheck {

/// Ordered coordinate subset {i_1 < ... < i_k} of {1..m} used by pi_J.
class ProjectionSpec {
 public:
  /// Throws std::invalid_argument if coords is empty, has repeats or leaves
  /// {1..source_length}. Coordinates are sorted.
  ProjectionSpec(int source_length, std::vector<int> coords);

  /// All coordinates of {1..m} except p. Throws std::out_of_range for bad p.
  static ProjectionSpec puncturing(int m, int p);

  int source_length() const { return source_length_; }
  int target_length() const { return static_cast<int>(coords_.size()); }
  const std::vector<int>& coords() const { return coords_; }
  bool contains(int coord) const;

  Word apply(Word w) const;
  Vertex apply(const Vertex& v) const;

 private:
  int source_length_;
  std::vector<int> coords_;
};

/// The [24,12,8] code generated by [I | B] with B the bordered quadratic
/// residue circulant mod 11, moved by a coordinate permutation so that its
/// least weight-8 word becomes (1^8, 0^16).
Code golay24();

enum class RepresentativeRule { least, greatest };

struct CosetDecomposition {
  Code golay;
  /// Words of the Golay code with no support in the first 8 coordinates.
  Code subcode;
  /// Representatives for i = 1..7 (index i-1): supp meets {1..8} in {i, 8}.
  std::array<Vertex, 7> representatives;
  /// Length-8 prefixes u_0..u_7 with supp(u_i) = {i, 8}, u_0 = 0.
  std::array<Vertex, 8> prefixes;
  /// cosets[0] = subcode, cosets[i] = representatives[i-1] + subcode.
  std::vector<Code> cosets;

  static const ProjectionSpec& outer();  // {1..8}
  static const ProjectionSpec& inner();  // {9..24}
};

/// Throws std::runtime_error if a required representative does not exist or
/// a coset is not exactly the set of words with its prescribed prefix.
CosetDecomposition coset_decomposition(const Code& golay,
                                       RepresentativeRule rule = RepresentativeRule::least);

Code project(const Code& code, const ProjectionSpec& spec);

/// The union of the eight cosets projected onto coordinates 9..24.
Code nordstrom_robinson();
Code nordstrom_robinson(const CosetDecomposition& decomposition);

/// R = pi_J(D), the first-order Reed-Muller code of length 16 inside NR.
Code reed_muller_subcode();
Code reed_muller_subcode(const CosetDecomposition& decomposition);

/// Deletes coordinate p. Throws std::out_of_range unless 1 <= p <= m.
Code puncture(const Code& code, int p);

/// {w + beta : w in C}. Throws std::invalid_argument on length mismatch.
Code translate(const Code& code, const Vertex& beta);

struct CodePredicates {
  bool is_linear = false;
  bool is_even = false;
  bool is_antipodal = false;
  std::optional<int> min_distance;
  std::vector<std::size_t> weight_histogram;  // indexed 0..m
};

CodePredicates code_predicates(const Code& code);

}  // namespace nrcheck
