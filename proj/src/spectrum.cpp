#include "nrcheck/spectrum.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "nrcheck/kernel.hpp"

namespace nrcheck {

DistanceDistribution distance_distribution(const Code& code) {
  if (code.empty()) throw std::invalid_argument("distance distribution of an empty code");
  const int m = code.length();
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(m + 1), 0);
  const auto words = code.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    ++counts[0];
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      counts[static_cast<std::size_t>(popcount(words[i] ^ words[j]))] += 2;
    }
  }
  DistanceDistribution dist;
  dist.length = m;
  dist.code_size = code.size();
  for (std::uint64_t c : counts) {
    dist.pair_counts.emplace_back(c);
    dist.a.emplace_back(BigInt(c), BigInt(code.size()));
  }
  return dist;
}

std::vector<Rational> macwilliams_transform(const DistanceDistribution& dist) {
  const KrawtchoukTable table(dist.length);
  std::vector<Rational> out;
  for (int k = 0; k <= dist.length; ++k) {
    Rational sum = 0;
    for (int i = 0; i <= dist.length; ++i) sum += dist.a[static_cast<std::size_t>(i)] * table.at(k, i);
    out.push_back(sum);
  }
  return out;
}

DistancePartition distance_partition(const Code& code) {
  if (code.empty()) throw std::invalid_argument("distance partition of an empty code");
  const int m = code.length();
  const std::size_t n = std::size_t{1} << m;
  constexpr std::uint8_t kUnseen = 0xFF;

  DistancePartition part;
  part.length = m;
  part.distance_to_code.assign(n, kUnseen);
  std::vector<Word> queue;
  queue.reserve(n);
  for (Word w : code.words()) {
    part.distance_to_code[w] = 0;
    queue.push_back(w);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Word v = queue[head];
    const std::uint8_t next = static_cast<std::uint8_t>(part.distance_to_code[v] + 1);
    for (int j = 0; j < m; ++j) {
      const Word u = v ^ (Word{1} << j);
      if (part.distance_to_code[u] == kUnseen) {
        part.distance_to_code[u] = next;
        queue.push_back(u);
      }
    }
  }
  part.covering_radius = part.distance_to_code[queue.back()];
  part.cell_sizes.assign(static_cast<std::size_t>(part.covering_radius + 1), 0);
  for (std::uint8_t d : part.distance_to_code) ++part.cell_sizes[d];
  return part;
}

std::vector<std::size_t> distance_profile(const Code& code, Word gamma) {
  std::vector<std::size_t> profile(static_cast<std::size_t>(code.length() + 1), 0);
  for (Word c : code.words()) ++profile[static_cast<std::size_t>(popcount(gamma ^ c))];
  return profile;
}

RegularityResult completely_regular_check(const Code& code) {
  if (code.empty()) throw std::invalid_argument("complete regularity of an empty code");
  const int m = code.length();

  // profile(gamma + beta) = profile(gamma) for beta in the kernel, so one
  // representative per kernel coset suffices: the unique coset member that
  // vanishes on every pivot bit of the reduced echelon basis.
  const std::vector<Word> basis = echelon_basis(translation_kernel(code));
  Word pivot_mask = 0;
  for (Word b : basis) pivot_mask |= std::bit_floor(b);

  struct CellData {
    Word first = 0;
    std::vector<std::size_t> profile;
  };
  std::vector<CellData> cells;
  const std::uint64_t n = std::uint64_t{1} << m;
  std::vector<std::size_t> profile(static_cast<std::size_t>(m + 1));
  for (std::uint64_t g = 0; g < n; ++g) {
    const Word gamma = static_cast<Word>(g);
    if (gamma & pivot_mask) continue;
    std::fill(profile.begin(), profile.end(), 0);
    for (Word c : code.words()) ++profile[static_cast<std::size_t>(popcount(gamma ^ c))];
    const auto cell = static_cast<std::size_t>(
        std::find_if(profile.begin(), profile.end(), [](std::size_t x) { return x != 0; }) -
        profile.begin());
    if (cells.size() <= cell) cells.resize(cell + 1);
    CellData& data = cells[cell];
    if (data.profile.empty()) {
      data.first = gamma;
      data.profile = profile;
    } else if (data.profile != profile) {
      ProfileWitness witness{static_cast<int>(cell), Vertex(m, data.first), Vertex(m, gamma),
                             data.profile, profile};
      return RegularityResult{std::nullopt, std::move(witness)};
    }
  }

  IntersectionTable table;
  table.length = m;
  table.covering_radius = static_cast<int>(cells.size()) - 1;
  for (const CellData& data : cells) {
    // Every distance 0..rho is realized along a path from a codeword.
    if (data.profile.empty()) throw std::logic_error("distance cell without a representative");
    table.rows.push_back(data.profile);
  }
  return RegularityResult{std::move(table), std::nullopt};
}

DesignResult design_check(const Code& words, int t) {
  if (words.empty()) throw std::invalid_argument("design check on an empty word set");
  const int m = words.length();
  const int k = popcount(words.words().front());
  for (Word w : words.words()) {
    if (popcount(w) != k) throw std::invalid_argument("design words have mixed weights");
  }
  if (t < 0 || t > k) throw std::invalid_argument("design strength exceeds block weight");

  // Every t-subset of every block, sorted, then counted in runs.
  std::vector<Word> subsets;
  for (Word w : words.words()) {
    std::vector<int> positions;
    for (int j = 0; j < m; ++j) {
      if ((w >> j) & 1U) positions.push_back(j);
    }
    for_each_weight_k(k, t, [&](Word pick) {
      Word sub = 0;
      for (int j = 0; j < k; ++j) {
        if ((pick >> j) & 1U) sub |= Word{1} << positions[static_cast<std::size_t>(j)];
      }
      subsets.push_back(sub);
    });
  }
  std::sort(subsets.begin(), subsets.end());

  std::optional<std::size_t> expected;
  std::optional<DesignWitness> witness;
  auto it = subsets.begin();
  for_each_weight_k(m, t, [&](Word nu) {
    if (witness) return;
    const auto run_end = std::upper_bound(it, subsets.end(), nu);
    const auto lower = std::lower_bound(it, run_end, nu);
    const auto count = static_cast<std::size_t>(run_end - lower);
    it = run_end;
    if (!expected) {
      expected = count;
    } else if (count != *expected) {
      witness = DesignWitness{Vertex(m, nu), count, *expected};
    }
  });
  if (witness) return DesignResult{std::nullopt, witness};
  return DesignResult{expected, std::nullopt};
}

bool DesignParams::admissible() const {
  return blocks_integral &&
         std::all_of(lambda_integral.begin(), lambda_integral.end(), [](bool b) { return b; });
}

DesignParams design_arithmetic(int t, int m, int k, const BigInt& lambda) {
  if (t < 0 || t > k || k > m) throw std::invalid_argument("design parameters need 0 <= t <= k <= m");
  if (lambda < 1) throw std::invalid_argument("design lambda must be positive");
  DesignParams p;
  p.t = t;
  p.m = m;
  p.k = k;
  p.lambda = lambda;
  for (int i = 0; i <= t; ++i) {
    Rational li(lambda * binomial(m - i, t - i), binomial(k - i, t - i));
    p.lambda_integral.push_back(is_integral(li));
    p.lambdas.push_back(li);
  }
  // C(m, 0) lambda_0 = b C(k, 0).
  p.blocks = p.lambdas.front();
  p.blocks_integral = is_integral(p.blocks);
  return p;
}

Rational lambda_upper_bound(int m, int t, int min_distance) {
  if (min_distance <= t) throw std::invalid_argument("lambda bound needs delta > t");
  return Rational(m - t, min_distance - t);
}

std::vector<BigInt> admissible_lambdas(int t, int m, int k, int min_distance) {
  const Rational bound = lambda_upper_bound(m, t, min_distance);
  const BigInt top = boost::multiprecision::numerator(bound) / boost::multiprecision::denominator(bound);
  std::vector<BigInt> out;
  for (BigInt lambda = 1; lambda <= top; ++lambda) {
    if (design_arithmetic(t, m, k, lambda).admissible()) out.push_back(lambda);
  }
  return out;
}

}  // namespace nrcheck
