#pragma once

// Automorphisms of the Hamming graph: a translation followed by a
// coordinate permutation.

#include <iosfwd>
#include <string>
#include <vector>

#include "nrcheck/code.hpp"
#include "nrcheck/construct.hpp"
#include "nrcheck/perm.hpp"

namespace nrcheck {

/// gamma -> sigma(gamma + beta), where sigma moves coordinate j to sigma(j).
/// Products compose left to right: act(x * y, v) == act(y, act(x, v)).
class AutElement {
 public:
  /// Throws std::invalid_argument if lengths disagree.
  AutElement(Vertex beta, Permutation sigma);

  static AutElement identity(int m);
  static AutElement translation(const Vertex& beta);
  static AutElement permutation(const Permutation& sigma);

  int length() const { return beta_.length(); }
  const Vertex& beta() const { return beta_; }
  const Permutation& sigma() const { return sigma_; }

  Word apply(Word gamma) const { return sigma_.apply(gamma ^ beta_.bits()); }
  AutElement operator*(const AutElement& other) const;
  AutElement inverse() const;

  /// "beta=<0/1 string> sigma=<1-based images>"
  std::string to_string() const;
  /// Inverse of to_string. Throws std::invalid_argument on malformed text.
  static AutElement parse(const std::string& line);

  friend bool operator==(const AutElement&, const AutElement&) = default;

 private:
  Vertex beta_;
  Permutation sigma_;
};

/// Throws std::invalid_argument on length mismatch.
Vertex act(const AutElement& x, const Vertex& v);
/// Image of a whole code.
Code act(const AutElement& x, const Code& code);

/// The coordinate-permutation part (the map g sigma -> sigma).
inline const Permutation& permutation_part(const AutElement& x) { return x.sigma(); }

/// True iff x maps every codeword into the code.
bool stabilizes(const AutElement& x, const Code& code);

/// The induced element on pi_J-projections: pi_J(gamma)^chi(x) = pi_J(gamma^x).
/// Throws std::invalid_argument unless sigma maps J onto itself.
AutElement project_automorphism(const AutElement& x, const ProjectionSpec& spec);

std::vector<AutElement> read_automorphisms(std::istream& in);
void write_automorphisms(std::ostream& out, const std::vector<AutElement>& elements);

}  // namespace nrcheck
