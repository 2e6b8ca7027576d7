#include "nrcheck/search.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "nrcheck/construct.hpp"
#include "nrcheck/kernel.hpp"

namespace nrcheck {

void SearchBudget::charge() {
  if (++nodes_used > node_limit) {
    throw SearchBudgetExceeded("backtrack search exceeded its budget of " + std::to_string(node_limit) +
                               " nodes");
  }
}

namespace {

// N_w(i, j) = |{c in C : wt(c) = w, {i, j} ⊆ supp(c)}| for every weight w
// that occurs in C.
struct PairCounts {
  int m = 0;
  std::vector<int> weights;
  std::vector<std::vector<std::int32_t>> counts;  // [weight index][i * m + j]

  explicit PairCounts(const Code& code) : m(code.length()) {
    std::vector<bool> present(static_cast<std::size_t>(m + 1), false);
    for (Word w : code.words()) present[static_cast<std::size_t>(popcount(w))] = true;
    std::vector<int> index(static_cast<std::size_t>(m + 1), -1);
    for (int w = 0; w <= m; ++w) {
      if (present[static_cast<std::size_t>(w)]) {
        index[static_cast<std::size_t>(w)] = static_cast<int>(weights.size());
        weights.push_back(w);
      }
    }
    counts.assign(weights.size(), std::vector<std::int32_t>(static_cast<std::size_t>(m * m), 0));
    std::vector<int> support;
    for (Word w : code.words()) {
      auto& table = counts[static_cast<std::size_t>(index[static_cast<std::size_t>(popcount(w))])];
      support.clear();
      for (int j = 0; j < m; ++j) {
        if ((w >> j) & 1U) support.push_back(j);
      }
      for (int a : support) {
        for (int b : support) ++table[static_cast<std::size_t>(a * m + b)];
      }
    }
  }

  std::int32_t at(std::size_t widx, int i, int j) const {
    return counts[widx][static_cast<std::size_t>(i * m + j)];
  }
};

using Signature = std::pair<std::vector<std::int64_t>, std::vector<std::vector<std::int64_t>>>;

// Refines the colorings of several codes' coordinates together so that the
// resulting color numbers are comparable across codes.
std::vector<std::vector<int>> refine_jointly(const std::vector<PairCounts>& codes,
                                             std::vector<std::vector<int>> colors) {
  auto distinct = [](const std::vector<std::vector<int>>& cs) {
    std::vector<int> all;
    for (const auto& c : cs) all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
  };

  std::size_t classes = distinct(colors);
  while (true) {
    std::vector<std::vector<Signature>> sigs(codes.size());
    for (std::size_t c = 0; c < codes.size(); ++c) {
      const PairCounts& pc = codes[c];
      for (int i = 0; i < pc.m; ++i) {
        Signature sig;
        sig.first.push_back(colors[c][static_cast<std::size_t>(i)]);
        for (std::size_t w = 0; w < pc.weights.size(); ++w) {
          sig.first.push_back(pc.weights[w]);
          sig.first.push_back(pc.at(w, i, i));
        }
        for (int j = 0; j < pc.m; ++j) {
          if (j == i) continue;
          std::vector<std::int64_t> entry{colors[c][static_cast<std::size_t>(j)]};
          for (std::size_t w = 0; w < pc.weights.size(); ++w) {
            entry.push_back(pc.weights[w]);
            entry.push_back(pc.at(w, i, j));
          }
          sig.second.push_back(std::move(entry));
        }
        std::sort(sig.second.begin(), sig.second.end());
        sigs[c].push_back(std::move(sig));
      }
    }
    std::vector<Signature> all;
    for (const auto& s : sigs) all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (std::size_t c = 0; c < codes.size(); ++c) {
      for (std::size_t i = 0; i < sigs[c].size(); ++i) {
        colors[c][i] = static_cast<int>(std::lower_bound(all.begin(), all.end(), sigs[c][i]) - all.begin());
      }
    }
    const std::size_t next = distinct(colors);
    if (next == classes) return colors;
    classes = next;
  }
}

CoordinatePartition to_partition(const std::vector<int>& colors) {
  std::map<int, std::vector<int>> cells;
  for (std::size_t i = 0; i < colors.size(); ++i) cells[colors[i]].push_back(static_cast<int>(i) + 1);
  CoordinatePartition out;
  for (auto& [color, cell] : cells) out.push_back(std::move(cell));
  return out;
}

// Finds coordinate permutations sigma with sigma(source) == target that
// respect the colorings and an optional fixed prefix of assignments.
class Matcher {
 public:
  Matcher(const Code& source, const Code& target, std::vector<int> source_colors,
          std::vector<int> target_colors, SearchBudget& budget)
      : source_(source),
        target_(target),
        m_(source.length()),
        source_colors_(std::move(source_colors)),
        target_colors_(std::move(target_colors)),
        budget_(budget) {}

  std::optional<Permutation> find(const std::vector<std::pair<int, int>>& prefix) {
    if (source_.size() != target_.size() || source_.length() != target_.length()) return std::nullopt;
    const std::size_t n = source_.size();
    prefix_ = prefix;
    order_.clear();
    std::vector<bool> in_prefix(static_cast<std::size_t>(m_), false);
    for (const auto& [coord, image] : prefix_) {
      order_.push_back(coord);
      in_prefix[static_cast<std::size_t>(coord)] = true;
    }
    for (int j = 0; j < m_; ++j) {
      if (!in_prefix[static_cast<std::size_t>(j)]) order_.push_back(j);
    }
    image_.assign(static_cast<std::size_t>(m_), -1);
    used_.assign(static_cast<std::size_t>(m_), false);
    source_keys_.assign(static_cast<std::size_t>(m_ + 1), std::vector<Word>(n, 0));
    target_keys_.assign(static_cast<std::size_t>(m_ + 1), std::vector<Word>(n, 0));
    if (!extend(0)) return std::nullopt;
    std::vector<int> images(image_.begin(), image_.end());
    return Permutation::from_images(images);
  }

 private:
  bool extend(int depth) {
    if (depth == m_) return true;
    const int coord = order_[static_cast<std::size_t>(depth)];
    if (static_cast<std::size_t>(depth) < prefix_.size()) {
      return try_image(depth, coord, prefix_[static_cast<std::size_t>(depth)].second);
    }
    for (int image = 0; image < m_; ++image) {
      if (try_image(depth, coord, image)) return true;
    }
    return false;
  }

  bool try_image(int depth, int coord, int image) {
    if (used_[static_cast<std::size_t>(image)] ||
        source_colors_[static_cast<std::size_t>(coord)] != target_colors_[static_cast<std::size_t>(image)]) {
      return false;
    }
    budget_.charge();
    const auto d = static_cast<std::size_t>(depth);
    const auto& sw = source_.words();
    const auto& tw = target_.words();
    auto& sk = source_keys_[d + 1];
    auto& tk = target_keys_[d + 1];
    for (std::size_t w = 0; w < sw.size(); ++w) {
      sk[w] = source_keys_[d][w] | (((sw[w] >> coord) & 1U) << depth);
      tk[w] = target_keys_[d][w] | (((tw[w] >> image) & 1U) << depth);
    }
    scratch_a_ = sk;
    scratch_b_ = tk;
    std::sort(scratch_a_.begin(), scratch_a_.end());
    std::sort(scratch_b_.begin(), scratch_b_.end());
    if (scratch_a_ != scratch_b_) return false;

    image_[static_cast<std::size_t>(coord)] = image;
    used_[static_cast<std::size_t>(image)] = true;
    if (extend(depth + 1)) return true;
    image_[static_cast<std::size_t>(coord)] = -1;
    used_[static_cast<std::size_t>(image)] = false;
    return false;
  }

  const Code& source_;
  const Code& target_;
  int m_;
  std::vector<int> source_colors_;
  std::vector<int> target_colors_;
  SearchBudget& budget_;

  std::vector<std::pair<int, int>> prefix_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<bool> used_;
  std::vector<std::vector<Word>> source_keys_;
  std::vector<std::vector<Word>> target_keys_;
  std::vector<Word> scratch_a_;
  std::vector<Word> scratch_b_;
};

std::vector<int> point_orbit(int point, int degree, const std::vector<Permutation>& gens) {
  std::vector<bool> seen(static_cast<std::size_t>(degree), false);
  std::vector<int> orbit{point};
  seen[static_cast<std::size_t>(point)] = true;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const Permutation& g : gens) {
      const int q = g(orbit[head]);
      if (!seen[static_cast<std::size_t>(q)]) {
        seen[static_cast<std::size_t>(q)] = true;
        orbit.push_back(q);
      }
    }
  }
  return orbit;
}

bool permutation_fixes(const Permutation& sigma, const Code& code) {
  return std::all_of(code.words().begin(), code.words().end(),
                     [&](Word w) { return code.contains(sigma.apply(w)); });
}

// Distance distribution from each word to the rest of its code.
std::vector<std::vector<std::uint32_t>> word_profiles(const Code& code) {
  std::vector<std::vector<std::uint32_t>> out;
  for (Word c : code.words()) {
    std::vector<std::uint32_t> p(static_cast<std::size_t>(code.length() + 1), 0);
    for (Word d : code.words()) ++p[static_cast<std::size_t>(popcount(c ^ d))];
    out.push_back(std::move(p));
  }
  return out;
}

// Signature of each word: the sorted (distance, profile class) pairs over
// the whole code. An equivalence maps each word to one with the same
// signature. Class ids are shared across both codes through `classes`.
std::vector<std::vector<std::uint64_t>> word_signatures(
    const Code& code, const std::vector<std::vector<std::uint32_t>>& profiles,
    std::map<std::vector<std::uint32_t>, std::uint32_t>& classes) {
  std::vector<std::uint32_t> ids;
  for (const auto& p : profiles) ids.push_back(classes.emplace(p, static_cast<std::uint32_t>(classes.size())).first->second);
  const auto words = code.words();
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::vector<std::uint64_t> sig;
    sig.reserve(words.size());
    for (std::size_t j = 0; j < words.size(); ++j) {
      sig.push_back((std::uint64_t{static_cast<std::uint32_t>(popcount(words[i] ^ words[j]))} << 32) | ids[j]);
    }
    std::sort(sig.begin(), sig.end());
    out.push_back(std::move(sig));
  }
  return out;
}

}  // namespace

CoordinatePartition refine_partition(const Code& code, const CoordinatePartition& start) {
  std::vector<int> colors(static_cast<std::size_t>(code.length()), -1);
  for (std::size_t cell = 0; cell < start.size(); ++cell) {
    for (int coord : start[cell]) {
      if (coord < 1 || coord > code.length() || colors[static_cast<std::size_t>(coord - 1)] >= 0) {
        throw std::invalid_argument("start is not a partition of the coordinates");
      }
      colors[static_cast<std::size_t>(coord - 1)] = static_cast<int>(cell);
    }
  }
  if (std::find(colors.begin(), colors.end(), -1) != colors.end()) {
    throw std::invalid_argument("start does not cover every coordinate");
  }
  std::vector<PairCounts> counts{PairCounts(code)};
  return to_partition(refine_jointly(counts, {colors}).front());
}

CoordinatePartition coordinate_invariant_partition(const Code& code) {
  std::vector<int> all(static_cast<std::size_t>(code.length()));
  for (int i = 0; i < code.length(); ++i) all[static_cast<std::size_t>(i)] = i + 1;
  return refine_partition(code, {all});
}

PermAutomorphisms enumerate_perm_automorphisms(const Code& code, SearchBudget& budget) {
  const int m = code.length();
  if (m > 16) throw std::invalid_argument("permutation automorphism search needs m <= 16");
  if (code.size() > 4096) throw std::invalid_argument("permutation automorphism search needs |C| <= 4096");

  std::vector<PairCounts> counts{PairCounts(code)};
  const std::vector<int> colors =
      refine_jointly(counts, {std::vector<int>(static_cast<std::size_t>(m), 0)}).front();
  Matcher matcher(code, code, colors, colors, budget);

  // Level i fixes 0..i-1 pointwise; deeper levels are finished first so the
  // generators found so far generate the pointwise stabilizer at level i.
  std::vector<Permutation> gens;
  BigInt search_order = 1;
  for (int level = m - 1; level >= 0; --level) {
    std::vector<int> orbit = point_orbit(level, m, gens);
    for (int image = level + 1; image < m; ++image) {
      if (colors[static_cast<std::size_t>(image)] != colors[static_cast<std::size_t>(level)]) continue;
      if (std::find(orbit.begin(), orbit.end(), image) != orbit.end()) continue;
      std::vector<std::pair<int, int>> prefix;
      for (int j = 0; j < level; ++j) prefix.emplace_back(j, j);
      prefix.emplace_back(level, image);
      if (auto sigma = matcher.find(prefix)) {
        if (!permutation_fixes(*sigma, code)) throw std::logic_error("search returned a non-automorphism");
        gens.push_back(*sigma);
        orbit = point_orbit(level, m, gens);
      }
    }
    search_order *= orbit.size();
  }

  PermGroup group(m, gens);
  if (group.order() != search_order) {
    throw std::logic_error("stabilizer chain order " + group.order().str() + " disagrees with search order " +
                           search_order.str());
  }
  return PermAutomorphisms{std::move(group), search_order};
}

namespace {

// A coordinate permutation sigma with sigma(source) = target, if any.
std::optional<Permutation> match_codes(const Code& source, const Code& target, const PairCounts& source_counts,
                                       SearchBudget& budget) {
  const int m = source.length();
  std::vector<PairCounts> counts{source_counts, PairCounts(target)};
  const auto colors = refine_jointly(
      counts, {std::vector<int>(static_cast<std::size_t>(m), 0), std::vector<int>(static_cast<std::size_t>(m), 0)});
  auto a = colors[0];
  auto b = colors[1];
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return std::nullopt;
  Matcher matcher(source, target, colors[0], colors[1], budget);
  return matcher.find({});
}

}  // namespace

std::optional<AutElement> find_equivalence(const Code& source, const Code& target, SearchBudget& budget) {
  if (source.length() != target.length()) throw std::invalid_argument("equivalence needs equal lengths");
  const int m = source.length();
  if (source.size() != target.size()) return std::nullopt;
  if (source.empty()) return AutElement::identity(m);

  std::map<std::vector<std::uint32_t>, std::uint32_t> classes;
  const auto source_sigs = word_signatures(source, word_profiles(source), classes);
  const auto target_sigs = word_signatures(target, word_profiles(target), classes);
  {
    auto a = source_sigs;
    auto b = target_sigs;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  const Word anchor = source.words().front();
  const Code shifted_source = translate(source, Vertex(m, anchor));
  const PairCounts source_counts(shifted_source);

  const auto targets = target.words();
  for (std::size_t t = 0; t < targets.size(); ++t) {
    if (target_sigs[t] != source_sigs.front()) continue;
    const Word candidate = targets[t];
    const Code shifted_target = translate(target, Vertex(m, candidate));

    if (auto sigma = match_codes(shifted_source, shifted_target, source_counts, budget)) {
      const AutElement x = AutElement(Vertex(m, anchor), *sigma) * AutElement::translation(Vertex(m, candidate));
      if (act(x, source) != target) throw std::logic_error("equivalence search returned a wrong element");
      return x;
    }
  }
  return std::nullopt;
}

std::vector<AutElement> assemble_aut_generators(const Code& code, SearchBudget& budget) {
  const int m = code.length();
  if (!code.contains(Word{0})) throw std::invalid_argument("generator assembly needs 0 in the code");

  std::vector<AutElement> gens;
  const PermAutomorphisms perms = enumerate_perm_automorphisms(code, budget);
  for (const Permutation& sigma : perms.group.generators()) gens.push_back(AutElement::permutation(sigma));

  const Code kernel = translation_kernel(code);
  for (Word b : echelon_basis(kernel)) gens.push_back(AutElement::translation(Vertex(m, b)));

  // Elements carrying 0 to other codewords. A codeword already in the orbit
  // of 0 needs no new element: anything fixing 0 is a pure permutation and
  // so already generated. A failed target rules out its whole orbit.
  auto orbit = [&](Word start, std::vector<bool>& mark) {
    std::vector<Word> queue{start};
    mark[start] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const AutElement& g : gens) {
        const Word next = g.apply(queue[head]);
        if (!mark[next]) {
          mark[next] = true;
          queue.push_back(next);
        }
      }
    }
  };
  const std::size_t n = std::size_t{1} << m;
  std::vector<bool> reached(n, false);
  std::vector<bool> ruled_out(n, false);
  orbit(0, reached);
  // Some x in Aut(C) sends 0 to c iff a pure permutation sends C onto C + c,
  // so the search pins 0 to 0 and only codewords whose signature matches
  // that of 0 are tried.
  std::map<std::vector<std::uint32_t>, std::uint32_t> classes;
  const auto sigs = word_signatures(code, word_profiles(code), classes);
  const PairCounts counts(code);
  const auto words = code.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Word rep = words[i];
    if (reached[rep] || ruled_out[rep]) continue;
    std::optional<Permutation> sigma;
    if (sigs[i] == sigs.front()) sigma = match_codes(code, translate(code, Vertex(m, rep)), counts, budget);
    if (sigma) {
      gens.push_back(AutElement::permutation(*sigma) * AutElement::translation(Vertex(m, rep)));
      reached.assign(n, false);
      orbit(0, reached);
    } else {
      orbit(rep, ruled_out);
    }
  }

  for (const AutElement& x : gens) {
    if (!stabilizes(x, code)) throw std::logic_error("assembled generator does not fix the code");
  }
  return gens;
}

}  // namespace nrcheck
