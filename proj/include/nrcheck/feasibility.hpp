#pragma once

// Integer distance distributions compatible with nonnegativity of the
// MacWilliams transform.
//
// A template fixes some slots a_i and leaves others unknown; with the
// antipodal flag, slot i and slot m-i share one variable. Each transform
// entry a'_k becomes an affine form in the unknowns, every form must be
// nonnegative, and the unknowns are nonnegative integers. Variable ranges
// are tightened by interval propagation until a fixed point, then the
// remaining box is enumerated.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nrcheck/exact.hpp"

namespace nrcheck {

class UnboundedSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DistributionTemplate {
  int length = 0;
  /// slots[i] is the fixed value of a_i, or nullopt for an unknown.
  std::vector<std::optional<BigInt>> slots;
  bool antipodal = false;

  /// Parses "i=value" / "i=?" entries separated by commas. Unlisted slots
  /// are 0 unless antipodal and their mirror slot is listed, in which case
  /// they copy the mirror. Throws std::invalid_argument on malformed input
  /// or conflicting mirror entries.
  static DistributionTemplate parse(int length, const std::string& spec, bool antipodal);
};

/// constant + sum_v coefficients[v] * x_v.
struct AffineForm {
  BigInt constant;
  std::vector<BigInt> coefficients;

  BigInt evaluate(const std::vector<BigInt>& values) const;
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

struct FeasibilitySystem {
  int length = 0;
  /// variable_slots[v]: the slots tied to variable v, ascending.
  std::vector<std::vector<int>> variable_slots;
  /// rows[k] is a'_k as an affine form; all must be >= 0.
  std::vector<AffineForm> rows;
  /// False when the template contradicts itself (mirror slots disagree).
  bool consistent = true;

  /// Name of variable v: "a<i>" for its smallest slot.
  std::string variable_name(std::size_t v) const;
  /// Renders e.g. "240 - 12*a7 - 8*a8".
  std::string render(const AffineForm& form) const;
};

/// Builds the transform rows for a template. Throws std::invalid_argument
/// if the template length and slot count disagree.
FeasibilitySystem build_system(const DistributionTemplate& tmpl);

struct VariableRange {
  BigInt low;
  std::optional<BigInt> high;
};

/// Interval propagation to a fixed point over rows >= 0 and x >= 0. Returns
/// nullopt if some range becomes empty.
std::optional<std::vector<VariableRange>> propagate_bounds(const std::vector<AffineForm>& rows,
                                                           std::size_t variable_count);

/// Every nonnegative integer assignment that keeps all rows >= 0. Throws
/// UnboundedSystemError if propagation leaves some unknown unbounded.
std::vector<std::vector<BigInt>> solve_rows(const std::vector<AffineForm>& rows,
                                            std::size_t variable_count);

struct FeasibilityResult {
  FeasibilitySystem system;
  std::vector<std::vector<BigInt>> solutions;
};

FeasibilityResult feasible_distributions(const DistributionTemplate& tmpl);

}  // namespace nrcheck
