#pragma once

// Backtrack search for coordinate permutations between codes, used for
// permutation automorphism groups, code equivalence and the assembly of
// automorphism generators.
//
// Pruning has two parts. Coordinates are first colored by iterated
// refinement of pairwise support counts per weight class; a permutation
// may only send a coordinate to one of the same color. During the search a
// partial assignment survives only while the multiset of source codeword
// prefixes read along the assigned coordinates equals the multiset of
// target prefixes read along their images. The smallest unassigned
// coordinate is extended first and images are tried in ascending order.
// Equivalence search also pairs codewords only when their signatures (the
// distances to every other codeword together with that codeword's own
// distance distribution) agree.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nrcheck/aut.hpp"
#include "nrcheck/code.hpp"
#include "nrcheck/perm_group.hpp"

namespace nrcheck {

inline constexpr std::uint64_t kDefaultNodeLimit = 100'000'000;

class SearchBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shared node counter; every tried coordinate image costs one node.
struct SearchBudget {
  std::uint64_t node_limit = kDefaultNodeLimit;
  std::uint64_t nodes_used = 0;

  /// Throws SearchBudgetExceeded once the limit is passed.
  void charge();
};

/// Ordered cells of 1-based coordinates.
using CoordinatePartition = std::vector<std::vector<int>>;

CoordinatePartition coordinate_invariant_partition(const Code& code);

/// Refines a given partition of the coordinates of `code` to the fixed point.
CoordinatePartition refine_partition(const Code& code, const CoordinatePartition& start);

struct PermAutomorphisms {
  PermGroup group;
  /// Product of the basic orbit lengths found by the search itself; equals
  /// group.order() (which comes from Schreier-Sims) when both are right.
  BigInt search_order;
};

/// The full group of coordinate permutations fixing the code setwise.
/// Throws std::invalid_argument for m > 16 or |C| > 4096, and
/// SearchBudgetExceeded when the node limit is hit.
PermAutomorphisms enumerate_perm_automorphisms(const Code& code, SearchBudget& budget);

/// Some x with act(x, source) == target, or nullopt if none exists.
/// Throws SearchBudgetExceeded when the node limit is hit.
std::optional<AutElement> find_equivalence(const Code& source, const Code& target, SearchBudget& budget);

/// Permutation automorphisms, a basis of the translation kernel and elements
/// sending 0 to codewords outside the orbit of 0 built so far, each
/// verified to fix the code. Generates the full stabilizer. Throws
/// std::invalid_argument if 0 is not a codeword.
std::vector<AutElement> assemble_aut_generators(const Code& code, SearchBudget& budget);

}  // namespace nrcheck
