#pragma once

// Distance distributions, the MacWilliams transform, distance partitions,
// complete regularity and 2-ary design checks. Everything here is exact.

#include <cstdint>
#include <optional>
#include <vector>

#include "nrcheck/code.hpp"
#include "nrcheck/exact.hpp"

namespace nrcheck {

struct DistanceDistribution {
  int length = 0;
  std::size_t code_size = 0;
  /// N_i: ordered pairs of codewords at distance i.
  std::vector<BigInt> pair_counts;
  /// a_i = N_i / |C|.
  std::vector<Rational> a;
};

/// Throws std::invalid_argument for an empty code.
DistanceDistribution distance_distribution(const Code& code);

/// a'_k = sum_i a_i K_k(i), k = 0..m.
std::vector<Rational> macwilliams_transform(const DistanceDistribution& dist);

struct DistancePartition {
  int length = 0;
  /// d(gamma, C) for every gamma in [0, 2^m), one byte each.
  std::vector<std::uint8_t> distance_to_code;
  int covering_radius = 0;
  /// |C_0|, ..., |C_rho|.
  std::vector<std::size_t> cell_sizes;

  int cell_of(Word gamma) const { return distance_to_code[gamma]; }
};

/// Multi-source breadth-first search from the codewords over Gamma_m.
/// Throws std::invalid_argument for an empty code.
DistancePartition distance_partition(const Code& code);

/// (|Gamma_{m,k}(gamma) ∩ C|)_k for k = 0..m.
std::vector<std::size_t> distance_profile(const Code& code, Word gamma);

struct IntersectionTable {
  int length = 0;
  int covering_radius = 0;
  /// rows[i][k] = |Gamma_{m,k}(gamma) ∩ C| for any gamma in C_i.
  std::vector<std::vector<std::size_t>> rows;
};

/// Two vertices of one cell whose profiles differ.
struct ProfileWitness {
  int cell = 0;
  Vertex first;
  Vertex second;
  std::vector<std::size_t> first_profile;
  std::vector<std::size_t> second_profile;
};

struct RegularityResult {
  std::optional<IntersectionTable> table;
  std::optional<ProfileWitness> witness;

  bool regular() const { return table.has_value(); }
};

/// Profiles are invariant under the translation kernel of C, so only one
/// vertex per kernel coset is scanned; the verdict covers every vertex.
RegularityResult completely_regular_check(const Code& code);

struct DesignWitness {
  Vertex subset;
  std::size_t count = 0;
  std::size_t expected = 0;
};

struct DesignResult {
  std::optional<std::size_t> lambda;
  std::optional<DesignWitness> witness;
};

/// Checks that every weight-t vertex is covered by the same number of words.
/// Throws std::invalid_argument if the words have mixed weights, the set is
/// empty, or t exceeds the common weight.
DesignResult design_check(const Code& words, int t);

struct DesignParams {
  int t = 0;
  int m = 0;
  int k = 0;
  BigInt lambda;
  /// lambdas[i] for i = 0..t; lambdas[t] == lambda.
  std::vector<Rational> lambdas;
  /// Number of blocks; equals lambdas[0].
  Rational blocks;
  std::vector<bool> lambda_integral;
  bool blocks_integral = false;

  bool admissible() const;
};

/// Derived block counts of a t-(m,k,lambda) design:
/// lambda_i * C(k-i, t-i) = lambda * C(m-i, t-i), C(m,i) lambda_i = b C(k,i).
/// Throws std::invalid_argument unless 0 <= t <= k <= m and lambda >= 1.
DesignParams design_arithmetic(int t, int m, int k, const BigInt& lambda);

/// (m - t) / (delta - t). Throws std::invalid_argument unless delta > t.
Rational lambda_upper_bound(int m, int t, int min_distance);

/// Every lambda in [1, floor(bound)] whose derived parameters are integral.
std::vector<BigInt> admissible_lambdas(int t, int m, int k, int min_distance);

}  // namespace nrcheck
