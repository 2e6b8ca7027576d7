#include "nrcheck/aut.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nrcheck {

AutElement::AutElement(Vertex beta, Permutation sigma) : beta_(beta), sigma_(std::move(sigma)) {
  if (beta_.length() != sigma_.degree()) throw std::invalid_argument("translation/permutation length mismatch");
}

AutElement AutElement::identity(int m) { return AutElement(Vertex::zero(m), Permutation(m)); }

AutElement AutElement::translation(const Vertex& beta) { return AutElement(beta, Permutation(beta.length())); }

AutElement AutElement::permutation(const Permutation& sigma) {
  return AutElement(Vertex::zero(sigma.degree()), sigma);
}

AutElement AutElement::operator*(const AutElement& other) const {
  if (length() != other.length()) throw std::invalid_argument("automorphism length mismatch");
  const Word moved_back = sigma_.inverse().apply(other.beta_.bits());
  return AutElement(Vertex(length(), beta_.bits() ^ moved_back), sigma_ * other.sigma_);
}

AutElement AutElement::inverse() const {
  return AutElement(Vertex(length(), sigma_.apply(beta_.bits())), sigma_.inverse());
}

std::string AutElement::to_string() const {
  return "beta=" + beta_.to_string() + " sigma=" + sigma_.to_string();
}

AutElement AutElement::parse(const std::string& line) {
  const auto b = line.find("beta=");
  const auto s = line.find("sigma=");
  if (b == std::string::npos || s == std::string::npos || s < b) {
    throw std::invalid_argument("automorphism line needs beta=... sigma=...");
  }
  std::istringstream beta_in(line.substr(b + 5, s - b - 5));
  std::string beta_text;
  beta_in >> beta_text;
  const Vertex beta = Vertex::parse(beta_text);

  std::istringstream sigma_in(line.substr(s + 6));
  std::vector<int> images;
  int x = 0;
  while (sigma_in >> x) images.push_back(x);
  if (!sigma_in.eof()) throw std::invalid_argument("bad sigma images");
  if (static_cast<int>(images.size()) != beta.length()) {
    throw std::invalid_argument("sigma has the wrong number of images");
  }
  return AutElement(beta, Permutation::from_one_based(images));
}

Vertex act(const AutElement& x, const Vertex& v) {
  if (v.length() != x.length()) throw std::invalid_argument("automorphism/vertex length mismatch");
  return Vertex(v.length(), x.apply(v.bits()));
}

Code act(const AutElement& x, const Code& code) {
  if (code.length() != x.length()) throw std::invalid_argument("automorphism/code length mismatch");
  std::vector<Word> out;
  out.reserve(code.size());
  for (Word w : code.words()) out.push_back(x.apply(w));
  return Code(code.length(), std::move(out));
}

bool stabilizes(const AutElement& x, const Code& code) {
  if (code.length() != x.length()) return false;
  return std::all_of(code.words().begin(), code.words().end(),
                     [&](Word w) { return code.contains(x.apply(w)); });
}

AutElement project_automorphism(const AutElement& x, const ProjectionSpec& spec) {
  if (spec.source_length() != x.length()) throw std::invalid_argument("projection length mismatch");
  const auto& coords = spec.coords();
  std::vector<int> images;
  images.reserve(coords.size());
  for (int c : coords) {
    const int image = x.sigma()(c - 1) + 1;
    const auto pos = std::lower_bound(coords.begin(), coords.end(), image);
    if (pos == coords.end() || *pos != image) {
      throw std::invalid_argument("permutation does not stabilize the projection coordinates");
    }
    images.push_back(static_cast<int>(pos - coords.begin()));
  }
  return AutElement(spec.apply(x.beta()), Permutation::from_images(images));
}

std::vector<AutElement> read_automorphisms(std::istream& in) {
  std::vector<AutElement> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(AutElement::parse(line));
  }
  return out;
}

void write_automorphisms(std::ostream& out, const std::vector<AutElement>& elements) {
  for (const AutElement& x : elements) out << x.to_string() << '\n';
}

}  // namespace nrcheck
