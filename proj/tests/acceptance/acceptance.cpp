// One line per acceptance criterion: PASS or FAIL, the measured time and
// what was compared. Exit status is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "nrcheck/aut.hpp"
#include "nrcheck/construct.hpp"
#include "nrcheck/feasibility.hpp"
#include "nrcheck/kernel.hpp"
#include "nrcheck/orbits.hpp"
#include "nrcheck/search.hpp"
#include "nrcheck/spectrum.hpp"

using namespace nrcheck;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
};

struct Criterion {
  int number;
  std::string title;
  double bound_s;
  std::function<Outcome()> run;
};

std::vector<Word> words_of(const Code& c) { return {c.words().begin(), c.words().end()}; }

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

struct Shared {
  Code golay = golay24();
  Code nr = nordstrom_robinson();
  Code pn = puncture(nr, 1);
  Code rm = reed_muller_subcode();
  std::optional<PermAutomorphisms> nr_perm;
  std::optional<PermAutomorphisms> pn_perm;
};

}  // namespace

int main() {
  Shared s;
  std::vector<Criterion> criteria;

  criteria.push_back({1, "Golay construction", 5, [&] {
    Outcome o;
    const Code g = golay24();
    o.expect(g.size() == 4096, "|G| = 4096");
    o.expect(g.min_distance() == 8, "delta = 8");
    o.expect(oracle::min_distance(words_of(g)) == 8, "delta = 8 by exhaustive pairs");
    o.expect(g.contains(Word{0xFF}), "(1^8,0^16) in G");
    std::map<int, std::size_t> lib, ref;
    for (Word w : g.words()) ++lib[std::popcount(w)];
    for (Word w : oracle::golay_by_span()) ++ref[std::popcount(w)];
    o.expect(lib == ref && lib[8] == 759 && lib[12] == 2576 && lib[16] == 759, "weights 759/2576/759");
    o.detail = "4096 words, delta 8, weights 759/2576/759" + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
  }});

  criteria.push_back({2, "NR construction", 1, [&] {
    Outcome o;
    const Code nr = nordstrom_robinson();
    o.expect(nr.length() == 16 && nr.size() == 256, "(16,256)");
    o.expect(oracle::min_distance(words_of(nr)) == 6 && nr.min_distance() == 6, "delta = 6");
    o.expect(code_predicates(nr).is_even, "all weights even");
    o.expect(nr.weight_class(6).size() == 112 && nr.weight_class(8).size() == 30 && nr.weight_class(10).size() == 112,
             "|NR(6)|,|NR(8)|,|NR(10)| = 112,30,112");
    const auto pairs = oracle::pair_counts(words_of(nr), 16);
    const std::vector<std::int64_t> expected{1, 0, 0, 0, 0, 0, 112, 0, 30, 0, 112, 0, 0, 0, 0, 0, 1};
    for (int i = 0; i <= 16; ++i) o.expect(pairs[static_cast<std::size_t>(i)] == 256 * expected[static_cast<std::size_t>(i)], "a(NR)_" + std::to_string(i));
    const auto dist = distance_distribution(nr);
    for (int i = 0; i <= 16; ++i) o.expect(dist.a[static_cast<std::size_t>(i)] == expected[static_cast<std::size_t>(i)], "library a(NR)");
    o.detail = "(16,256,6), a(NR) = (1,0^5,112,0,30,0,112,0^5,1)" + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
  }});

  criteria.push_back({3, "PN construction", 1, [&] {
    Outcome o;
    const Code pn = puncture(nordstrom_robinson(), 1);
    o.expect(pn.length() == 15 && pn.size() == 256, "(15,256)");
    o.expect(oracle::min_distance(words_of(pn)) == 5, "delta = 5");
    o.expect(pn.weight_class(5).size() == 42, "42 words of weight 5");
    const auto pairs = oracle::pair_counts(words_of(pn), 15);
    const std::vector<std::int64_t> expected{1, 0, 0, 0, 0, 42, 70, 15, 15, 70, 42, 0, 0, 0, 0, 1};
    for (int i = 0; i <= 15; ++i) o.expect(pairs[static_cast<std::size_t>(i)] == 256 * expected[static_cast<std::size_t>(i)], "a(PN)_" + std::to_string(i));
    o.detail = "(15,256,5), a(PN) = (1,0^4,42,70,15,15,70,42,0^4,1)" + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
  }});

  criteria.push_back({4, "covering radii", 2, [&] {
    Outcome o;
    const DistancePartition nr = distance_partition(s.nr);
    const DistancePartition pn = distance_partition(s.pn);
    o.expect(nr.covering_radius == 4, "rho(NR) = 4");
    o.expect(pn.covering_radius == 3, "rho(PN) = 3");
    o.detail = "rho(NR) = " + std::to_string(nr.covering_radius) + ", rho(PN) = " + std::to_string(pn.covering_radius) +
               (o.detail.empty() ? "" : "; " + o.detail);
    return o;
  }});

  criteria.push_back({5, "complete regularity of NR, PN, Golay, R(1,4)", 30, [&] {
    Outcome o;
    std::string summary;
    const std::pair<const char*, const Code*> codes[] = {{"NR", &s.nr}, {"PN", &s.pn}, {"Golay", &s.golay}, {"R(1,4)", &s.rm}};
    for (const auto& [name, code] : codes) {
      const RegularityResult r = completely_regular_check(*code);
      if (r.regular()) {
        bool sums = true;
        for (const auto& row : r.table->rows) {
          std::size_t total = 0;
          for (std::size_t x : row) total += x;
          sums = sums && total == code->size();
        }
        o.expect(sums, std::string(name) + " row sums = |C|");
        summary += std::string(summary.empty() ? "" : ", ") + name + " regular";
      } else {
        const ProfileWitness& w = *r.witness;
        o.expect(false, std::string(name) + " regular (cell " + std::to_string(w.cell) + " splits: " + w.first.to_string() +
                            " profile " + join(w.first_profile) + " vs " + w.second.to_string() + " profile " +
                            join(w.second_profile) + ")");
      }
    }
    o.detail = summary + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
  }});

  criteria.push_back({6, "designs", 5, [&] {
    Outcome o;
    const auto nr6 = design_check(s.nr.weight_class(6), 3);
    const auto pn5 = design_check(s.pn.weight_class(5), 2);
    const auto nr8 = design_check(s.nr.weight_class(8), 3);
    o.expect(nr6.lambda == 4u, "NR(6) is a 3-(16,6,4) design");
    o.expect(design_arithmetic(3, 16, 6, 4).blocks == 112, "b = 112");
    o.expect(pn5.lambda == 4u, "PN(5) is a 2-(15,5,4) design");
    o.expect(nr8.lambda == 3u, "NR(8) is a 3-(16,8,3) design");
    o.expect(30 * oracle::binom(8, 3) == 3 * oracle::binom(16, 3), "30 C(8,3) = 3 C(16,3)");
    o.detail = "lambda 4, 4, 3; b = 112" + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
  }});

  criteria.push_back({7, "lambda elimination", 1, [&] {
    Outcome o;
    for (const auto& [t, m, k] : {std::tuple{3, 16, 6}, std::tuple{2, 15, 5}}) {
      for (int lambda = 1; lambda <= 4; ++lambda) {
        o.expect(design_arithmetic(t, m, k, lambda).admissible() == (lambda % 2 == 0),
                 "parity of lambda = " + std::to_string(lambda));
      }
      o.expect(lambda_upper_bound(m, t, k) == Rational(13, 3), "bound 13/3");
      o.expect(admissible_lambdas(t, m, k, k) == std::vector<BigInt>{2, 4}, "admissible {2,4}");
    }
    o.detail = "odd lambda inadmissible, bound 13/3, lambda in {2,4}; lambda = 2 is external-fact" +
               (o.detail.empty() ? "" : "; " + o.detail);
    return o;
  }});

  criteria.push_back({8, "feasibility uniqueness", 5, [&] {
    Outcome o;
    using Solutions = std::vector<std::vector<BigInt>>;
    const auto nr = feasible_distributions(DistributionTemplate::parse(16, "0=1,6=112,7=?,8=?,10=112,16=1", true));
    const auto pn = feasible_distributions(DistributionTemplate::parse(15, "0=1,5=42,6=?,7=?", true));
    o.expect(nr.solutions == Solutions{{0, 30}}, "NR solutions {(0,30)}");
    o.expect(pn.solutions == Solutions{{70, 15}}, "PN solutions {(70,15)}");
    const std::string row2 = nr.system.render(nr.system.rows[2]);
    o.expect(row2 == "240 - 12*a7 - 8*a8", "k=2 row");
    o.detail = "{(0,30)}, {(70,15)}, row2 = " + row2 + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
  }});

  criteria.push_back({9, "translation kernel", 1, [&] {
    Outcome o;
    const Code k = translation_kernel(s.nr);
    o.expect(k == s.rm && k.size() == 32, "K = R, 32 words");
    std::size_t rejected = 0;
    for (Word b : s.nr.words()) {
      if (s.rm.contains(b)) continue;
      const Code moved = translate(s.nr, Vertex(16, b));
      bool fixes = true;
      for (Word w : s.nr.words()) fixes = fixes && moved.contains(w);
      o.expect(!fixes, "beta outside R moves NR");
      ++rejected;
    }
    o.detail = "K = R (32 words); " + std::to_string(rejected) + " translations outside R all move NR" +
               (o.detail.empty() ? "" : "; " + o.detail);
    return o;
  }});

  criteria.push_back({10, "group orders", 180, [&] {
    Outcome o;
    SearchBudget b1;
    s.nr_perm = enumerate_perm_automorphisms(s.nr, b1);
    SearchBudget b2;
    s.pn_perm = enumerate_perm_automorphisms(s.pn, b2);
    o.expect(s.nr_perm->group.order() == 16 * 2520 && s.nr_perm->search_order == 40320, "|Perm(NR)| = 2^4 |A7|");
    o.expect(s.pn_perm->group.order() == 2520 && s.pn_perm->search_order == 2520, "|Perm(PN)| = |A7|");
    SearchBudget b3;
    const auto gens = assemble_aut_generators(s.nr, b3);
    std::vector<Permutation> mu;
    for (const AutElement& g : gens) {
      o.expect(stabilizes(g, s.nr), "generator fixes NR");
      mu.push_back(permutation_part(g));
    }
    const BigInt mu_order = PermGroup(16, mu).order();
    o.expect(mu_order == 16 * 20160, "|mu(Aut(NR))| = 2^4 |A8|");
    o.detail = "40320, 2520, mu-image " + mu_order.str() + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
  }});

  criteria.push_back({11, "sphere orbits", 5, [&] {
    Outcome o;
    if (!s.nr_perm || !s.pn_perm) {
      o.expect(false, "needs the groups from criterion 10");
      return o;
    }
    for (int k = 1; k <= 3; ++k) o.expect(orbits_on_sphere(s.nr_perm->group, 16, k).count == 1, "transitive on weight " + std::to_string(k));
    const auto nr4 = orbits_on_sphere(s.nr_perm->group, 16, 4);
    const auto pn3 = orbits_on_sphere(s.pn_perm->group, 15, 3);
    o.expect(nr4.count == 2, "2 orbits on weight-4 vertices");
    o.expect(pn3.count == 2, "2 orbits on weight-3 vertices");
    o.detail = "NR weight 4: " + join(nr4.sizes) + "; PN weight 3: " + join(pn3.sizes) + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
  }});

  criteria.push_back({12, "complete transitivity", 30, [&] {
    Outcome o;
    SearchBudget b1;
    const auto nr = verify_complete_transitivity(s.nr, assemble_aut_generators(s.nr, b1));
    SearchBudget b2;
    const auto pn = verify_complete_transitivity(s.pn, assemble_aut_generators(s.pn, b2));
    const DistancePartition cells = distance_partition(s.nr);
    o.expect(nr.completely_transitive && nr.orbit_count == 5, "NR: 5 orbits equal to cells");
    o.expect(nr.orbit_sizes.size() == 5 && nr.orbit_sizes[0] == 256 && nr.orbit_sizes[1] == 4096 && nr.orbit_sizes[2] == 30720 &&
                 nr.orbit_sizes[3] + nr.orbit_sizes[4] == 30464 && nr.orbit_sizes == cells.cell_sizes,
             "NR orbit sizes 256, 4096, 30720, x, y with x + y = 30464");
    o.expect(pn.completely_transitive && pn.orbit_count == 4, "PN: 4 orbits equal to cells");
    o.detail = "NR orbits " + join(nr.orbit_sizes) + "; PN orbits " + join(pn.orbit_sizes) + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
  }});

  criteria.push_back({13, "puncturing equivalence", 60, [&] {
    Outcome o;
    int found = 0;
    for (int p = 2; p <= 16; ++p) {
      SearchBudget b;
      const Code punctured = puncture(s.nr, p);
      const auto x = find_equivalence(punctured, s.pn, b);
      o.expect(x && act(*x, punctured) == s.pn, "p = " + std::to_string(p));
      found += x.has_value();
    }
    o.detail = std::to_string(found) + " of 15 equivalences found and checked" + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
  }});

  criteria.push_back({14, "oracle suites", 60, [&] {
    Outcome o;
    std::mt19937_64 rng(14);
    int backtrack = 0;
    for (int trial = 0; trial < 24; ++trial) {
      const int m = 3 + trial % 6;
      auto w = oracle::random_code(rng, m, 2 + rng() % 6);
      if (trial % 2) w.push_back(0);
      const Code c(m, w);
      SearchBudget b;
      const auto perm = enumerate_perm_automorphisms(c, b);
      o.expect(perm.group.order() == oracle::perm_automorphism_count(words_of(c), m), "backtrack vs m! enumeration");
      ++backtrack;
    }
    int regular = 0;
    for (int trial = 0; trial < 60; ++trial) {
      const int m = 2 + trial % 9;
      const Code c(m, oracle::random_code(rng, m, 1 + rng() % 4));
      o.expect(completely_regular_check(c).regular() == oracle::completely_regular(words_of(c), m), "CR vs double loop");
      ++regular;
    }
    int laws = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      auto random_aut = [&] {
        std::vector<int> p(16);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        return AutElement(Vertex(16, static_cast<Word>(rng()) & 0xFFFFu), Permutation::from_images(p));
      };
      const AutElement x = random_aut(), y = random_aut(), z = random_aut();
      const Vertex v(16, static_cast<Word>(rng()) & 0xFFFFu);
      bool ok = act(x * y, v) == act(y, act(x, v)) && (x * y) * z == x * (y * z) &&
                x * x.inverse() == AutElement::identity(16) && permutation_part(x * y) == permutation_part(x) * permutation_part(y);
      o.expect(ok, "group laws");
      ++laws;
    }
    o.detail = std::to_string(backtrack) + " backtrack, " + std::to_string(regular) + " CR, " + std::to_string(laws) +
               " group-law checks" + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
  }});

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.bound_s;
    const bool pass = o.ok && in_time;
    failures += !pass;
    std::printf("criterion %2d %-46s %s  %.2fs (bound %.0fs%s)  %s\n", c.number, c.title.c_str(), pass ? "PASS" : "FAIL", secs,
                c.bound_s, in_time ? "" : ", exceeded", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
