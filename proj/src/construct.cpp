#include "nrcheck/construct.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nrcheck {

ProjectionSpec::ProjectionSpec(int source_length, std::vector<int> coords)
    : source_length_(source_length), coords_(std::move(coords)) {
  if (source_length < 1 || source_length > kMaxLength) {
    throw std::invalid_argument("projection source length out of range");
  }
  if (coords_.empty()) throw std::invalid_argument("projection needs at least one coordinate");
  std::sort(coords_.begin(), coords_.end());
  if (std::adjacent_find(coords_.begin(), coords_.end()) != coords_.end()) {
    throw std::invalid_argument("projection coordinates repeat");
  }
  if (coords_.front() < 1 || coords_.back() > source_length) {
    throw std::invalid_argument("projection coordinate outside the source length");
  }
}

ProjectionSpec ProjectionSpec::puncturing(int m, int p) {
  if (p < 1 || p > m) throw std::out_of_range("puncture coordinate out of range");
  if (m < 2) throw std::out_of_range("cannot puncture a length-1 code");
  std::vector<int> coords;
  for (int i = 1; i <= m; ++i) {
    if (i != p) coords.push_back(i);
  }
  return ProjectionSpec(m, std::move(coords));
}

bool ProjectionSpec::contains(int coord) const {
  return std::binary_search(coords_.begin(), coords_.end(), coord);
}

Word ProjectionSpec::apply(Word w) const {
  Word out = 0;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    out |= ((w >> (coords_[j] - 1)) & 1U) << j;
  }
  return out;
}

Vertex ProjectionSpec::apply(const Vertex& v) const {
  if (v.length() != source_length_) throw std::invalid_argument("projection length mismatch");
  return Vertex(target_length(), apply(v.bits()));
}

namespace {

std::vector<Word> span_of(const std::vector<Word>& generators) {
  std::vector<Word> words{0};
  for (Word g : generators) {
    const std::size_t n = words.size();
    for (std::size_t i = 0; i < n; ++i) words.push_back(words[i] ^ g);
  }
  return words;
}

}  // namespace

Code golay24() {
  // Bordered circulant: row 0 is (0, 1^11); rows 1..11 are (1, N_i) where N
  // is the circulant whose first row marks 0 and the quadratic residues
  // {1, 3, 4, 5, 9} mod 11.
  constexpr std::array<int, 11> kFirstRow = {1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0};
  std::vector<Word> generators;
  for (int i = 0; i < 12; ++i) {
    Word row = Word{1} << i;
    for (int j = 0; j < 12; ++j) {
      bool bit = false;
      if (i == 0) {
        bit = j != 0;
      } else if (j == 0) {
        bit = true;
      } else {
        bit = kFirstRow[static_cast<std::size_t>(((j - 1) - (i - 1) + 11) % 11)] != 0;
      }
      if (bit) row |= Word{1} << (12 + j);
    }
    generators.push_back(row);
  }
  std::vector<Word> words = span_of(generators);

  Word octad = ~Word{0};
  for (Word w : words) {
    if (popcount(w) == 8) octad = std::min(octad, w);
  }
  if (octad == ~Word{0}) throw std::runtime_error("Golay construction produced no weight-8 word");

  // Send the octad support to coordinates 1..8 and the rest to 9..24, both
  // in their original relative order.
  std::array<int, 24> target{};
  int next_in = 0;
  int next_out = 8;
  for (int j = 0; j < 24; ++j) {
    target[static_cast<std::size_t>(j)] = ((octad >> j) & 1U) ? next_in++ : next_out++;
  }
  for (Word& w : words) {
    Word moved = 0;
    for (int j = 0; j < 24; ++j) {
      if ((w >> j) & 1U) moved |= Word{1} << target[static_cast<std::size_t>(j)];
    }
    w = moved;
  }

  Code golay(24, std::move(words));
  if (golay.size() != 4096 || golay.min_distance() != 8) {
    throw std::runtime_error("Golay construction failed its [24,12,8] check");
  }
  return golay;
}

const ProjectionSpec& CosetDecomposition::outer() {
  static const ProjectionSpec spec(24, {1, 2, 3, 4, 5, 6, 7, 8});
  return spec;
}

const ProjectionSpec& CosetDecomposition::inner() {
  static const ProjectionSpec spec = [] {
    std::vector<int> coords;
    for (int i = 9; i <= 24; ++i) coords.push_back(i);
    return ProjectionSpec(24, std::move(coords));
  }();
  return spec;
}

CosetDecomposition coset_decomposition(const Code& golay, RepresentativeRule rule) {
  if (golay.length() != 24) throw std::invalid_argument("coset decomposition needs a length-24 code");
  constexpr Word kOuterMask = 0xFFU;

  std::vector<Word> subcode;
  std::array<std::vector<Word>, 8> by_prefix;
  for (Word w : golay.words()) {
    const Word prefix = w & kOuterMask;
    if (prefix == 0) subcode.push_back(w);
    for (int i = 1; i <= 7; ++i) {
      if (prefix == ((Word{1} << (i - 1)) | (Word{1} << 7))) {
        by_prefix[static_cast<std::size_t>(i)].push_back(w);
      }
    }
  }

  Code sub(24, subcode);
  std::array<Vertex, 7> reps;
  std::array<Vertex, 8> prefixes;
  prefixes[0] = Vertex::zero(8);
  std::vector<Code> cosets{sub};
  for (int i = 1; i <= 7; ++i) {
    const auto& candidates = by_prefix[static_cast<std::size_t>(i)];
    if (candidates.empty()) {
      throw std::runtime_error("no Golay word meets {1..8} in {" + std::to_string(i) + ", 8}");
    }
    // golay.words() is ascending, so front/back are the extreme choices.
    const Word rep = rule == RepresentativeRule::least ? candidates.front() : candidates.back();
    reps[static_cast<std::size_t>(i - 1)] = Vertex(24, rep);
    prefixes[static_cast<std::size_t>(i)] = Vertex::from_support(8, {i, 8});

    std::vector<Word> coset;
    coset.reserve(sub.size());
    for (Word d : sub.words()) coset.push_back(d ^ rep);
    Code coset_code(24, std::move(coset));
    if (coset_code != Code(24, candidates)) {
      throw std::runtime_error("coset " + std::to_string(i) +
                               " is not the full set of words with its prefix");
    }
    cosets.push_back(std::move(coset_code));
  }
  return CosetDecomposition{golay, std::move(sub), reps, prefixes, std::move(cosets)};
}

Code project(const Code& code, const ProjectionSpec& spec) {
  if (spec.source_length() != code.length()) throw std::invalid_argument("projection length mismatch");
  std::vector<Word> out;
  out.reserve(code.size());
  for (Word w : code.words()) out.push_back(spec.apply(w));
  return Code(spec.target_length(), std::move(out));
}

Code nordstrom_robinson(const CosetDecomposition& decomposition) {
  std::vector<Word> union_words;
  for (const Code& coset : decomposition.cosets) {
    union_words.insert(union_words.end(), coset.words().begin(), coset.words().end());
  }
  return project(Code(24, std::move(union_words)), CosetDecomposition::inner());
}

Code nordstrom_robinson() { return nordstrom_robinson(coset_decomposition(golay24())); }

Code reed_muller_subcode(const CosetDecomposition& decomposition) {
  return project(decomposition.subcode, CosetDecomposition::inner());
}

Code reed_muller_subcode() { return reed_muller_subcode(coset_decomposition(golay24())); }

Code puncture(const Code& code, int p) {
  return project(code, ProjectionSpec::puncturing(code.length(), p));
}

Code translate(const Code& code, const Vertex& beta) {
  if (beta.length() != code.length()) throw std::invalid_argument("translation length mismatch");
  std::vector<Word> out;
  out.reserve(code.size());
  for (Word w : code.words()) out.push_back(w ^ beta.bits());
  return Code(code.length(), std::move(out));
}

CodePredicates code_predicates(const Code& code) {
  CodePredicates p;
  const int m = code.length();
  const Word mask = length_mask(m);
  p.min_distance = code.min_distance();
  p.weight_histogram.assign(static_cast<std::size_t>(m + 1), 0);
  p.is_even = true;
  p.is_antipodal = true;
  for (Word w : code.words()) {
    ++p.weight_histogram[static_cast<std::size_t>(popcount(w))];
    if (popcount(w) % 2 != 0) p.is_even = false;
    if (!code.contains(~w & mask)) p.is_antipodal = false;
  }
  p.is_linear = code.contains(Word{0});
  const auto words = code.words();
  for (std::size_t i = 0; p.is_linear && i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (!code.contains(words[i] ^ words[j])) {
        p.is_linear = false;
        break;
      }
    }
  }
  return p;
}

}  // namespace nrcheck
