#include "nrcheck/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "nrcheck/construct.hpp"
#include "nrcheck/kernel.hpp"
#include "nrcheck/orbits.hpp"

namespace nrcheck {

std::string to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::pass:
      return "pass";
    case ClaimStatus::fail:
      return "fail";
    case ClaimStatus::external_fact:
      return "external-fact";
  }
  return "fail";
}

ClaimStatus parse_claim_status(const std::string& text) {
  if (text == "pass") return ClaimStatus::pass;
  if (text == "fail") return ClaimStatus::fail;
  if (text == "external-fact") return ClaimStatus::external_fact;
  throw std::invalid_argument("unknown claim status: " + text);
}

bool VerificationReport::all_passed() const { return failing_ids().empty(); }

std::vector<std::string> VerificationReport::failing_ids() const {
  std::vector<std::string> out;
  for (const ClaimResult& c : claims) {
    if (c.status == ClaimStatus::fail) out.push_back(c.id);
  }
  return out;
}

const ClaimResult* VerificationReport::find(const std::string& id) const {
  for (const ClaimResult& c : claims) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

void to_json(nlohmann::json& j, const ClaimResult& c) {
  j = nlohmann::json{{"id", c.id},
                     {"locus", c.locus},
                     {"expected", c.expected ? nlohmann::json(*c.expected) : nlohmann::json(nullptr)},
                     {"computed", c.computed},
                     {"status", to_string(c.status)},
                     {"wall_ms", c.wall_ms},
                     {"note", c.note}};
}

void from_json(const nlohmann::json& j, ClaimResult& c) {
  j.at("id").get_to(c.id);
  j.at("locus").get_to(c.locus);
  if (j.at("expected").is_null()) {
    c.expected.reset();
  } else {
    c.expected = j.at("expected").get<std::string>();
  }
  j.at("computed").get_to(c.computed);
  c.status = parse_claim_status(j.at("status").get<std::string>());
  j.at("wall_ms").get_to(c.wall_ms);
  j.at("note").get_to(c.note);
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t external = 0;
  for (const ClaimResult& c : r.claims) {
    if (c.status == ClaimStatus::pass) ++passed;
    if (c.status == ClaimStatus::fail) ++failed;
    if (c.status == ClaimStatus::external_fact) ++external;
  }
  j = nlohmann::json{{"version", r.version},
                     {"target", r.target},
                     {"node_limit", std::to_string(r.node_limit)},
                     {"claims", r.claims},
                     {"summary", {{"pass", passed}, {"fail", failed}, {"external_fact", external}}}};
}

void from_json(const nlohmann::json& j, VerificationReport& r) {
  j.at("version").get_to(r.version);
  j.at("target").get_to(r.target);
  r.node_limit = std::stoull(j.at("node_limit").get<std::string>());
  j.at("claims").get_to(r.claims);
}

VerifyTarget parse_verify_target(const std::string& text) {
  if (text == "nr") return VerifyTarget::nr;
  if (text == "pn") return VerifyTarget::pn;
  if (text == "all") return VerifyTarget::all;
  throw std::invalid_argument("verify target must be nr, pn or all");
}

std::string to_string(VerifyTarget target) {
  switch (target) {
    case VerifyTarget::nr:
      return "nr";
    case VerifyTarget::pn:
      return "pn";
    case VerifyTarget::all:
      return "all";
  }
  return "all";
}

VerificationInputs VerificationInputs::standard() {
  Code golay = golay24();
  Code nr = nordstrom_robinson(coset_decomposition(golay));
  return VerificationInputs{std::move(golay), std::move(nr)};
}

namespace {

template <typename T, typename F>
const T& lazy(std::optional<T>& slot, F&& make) {
  if (!slot) slot.emplace(make());
  return *slot;
}

std::string bool_string(bool b) { return b ? "true" : "false"; }

template <typename T>
std::string tuple_string(const std::vector<T>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, BigInt>) {
      out += nrcheck::to_string(values[i]);
    } else {
      out += std::to_string(values[i]);
    }
  }
  return out + ")";
}

std::string histogram_string(const Code& code) {
  std::vector<std::size_t> h(static_cast<std::size_t>(code.length() + 1), 0);
  for (Word w : code.words()) ++h[static_cast<std::size_t>(popcount(w))];
  std::string out;
  for (std::size_t w = 0; w < h.size(); ++w) {
    if (h[w] == 0) continue;
    if (!out.empty()) out += ",";
    out += std::to_string(w) + ":" + std::to_string(h[w]);
  }
  return out;
}

std::string solutions_string(const std::vector<std::vector<BigInt>>& solutions) {
  if (solutions.empty()) return "{}";
  std::string out = "{";
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    if (i > 0) out += ",";
    out += tuple_string(solutions[i]);
  }
  return out + "}";
}

std::string lambdas_string(const std::vector<BigInt>& lambdas) {
  std::string out;
  for (const BigInt& l : lambdas) {
    if (!out.empty()) out += ",";
    out += l.str();
  }
  return out.empty() ? "none" : out;
}

// Lazily computed shared state; a claim's wall time includes whatever it
// is the first to need.
class Context {
 public:
  Context(const VerificationInputs& inputs, std::uint64_t node_limit) : inputs_(inputs), node_limit_(node_limit) {}

  const Code& golay() const { return inputs_.golay; }
  const Code& nr() const { return inputs_.nr; }

  const CosetDecomposition& decomposition() {
    return lazy(decomposition_, [&] { return coset_decomposition(golay()); });
  }
  const Code& rm() {
    return lazy(rm_, [&] { return reed_muller_subcode(decomposition()); });
  }
  const Code& pn() {
    return lazy(pn_, [&] { return puncture(nr(), 1); });
  }
  const DistanceDistribution& nr_dist() {
    return lazy(nr_dist_, [&] { return distance_distribution(nr()); });
  }
  const DistanceDistribution& pn_dist() {
    return lazy(pn_dist_, [&] { return distance_distribution(pn()); });
  }
  const DistancePartition& nr_partition() {
    return lazy(nr_partition_, [&] { return distance_partition(nr()); });
  }
  const PermAutomorphisms& nr_perm() {
    return lazy(nr_perm_, [&] {
      SearchBudget budget{node_limit_};
      return enumerate_perm_automorphisms(nr(), budget);
    });
  }
  const PermAutomorphisms& pn_perm() {
    return lazy(pn_perm_, [&] {
      SearchBudget budget{node_limit_};
      return enumerate_perm_automorphisms(pn(), budget);
    });
  }
  const std::vector<AutElement>& nr_gens() {
    return lazy(nr_gens_, [&] {
      SearchBudget budget{node_limit_};
      return assemble_aut_generators(nr(), budget);
    });
  }
  const std::vector<AutElement>& pn_gens() {
    return lazy(pn_gens_, [&] {
      SearchBudget budget{node_limit_};
      return assemble_aut_generators(pn(), budget);
    });
  }
  const TransitivityCertificate& nr_ct() {
    return lazy(nr_ct_, [&] { return verify_complete_transitivity(nr(), nr_gens()); });
  }
  const TransitivityCertificate& pn_ct() {
    return lazy(pn_ct_, [&] { return verify_complete_transitivity(pn(), pn_gens()); });
  }
  std::uint64_t node_limit() const { return node_limit_; }

 private:
  const VerificationInputs& inputs_;
  std::uint64_t node_limit_;
  std::optional<CosetDecomposition> decomposition_;
  std::optional<Code> rm_;
  std::optional<Code> pn_;
  std::optional<DistanceDistribution> nr_dist_;
  std::optional<DistanceDistribution> pn_dist_;
  std::optional<DistancePartition> nr_partition_;
  std::optional<PermAutomorphisms> nr_perm_;
  std::optional<PermAutomorphisms> pn_perm_;
  std::optional<std::vector<AutElement>> nr_gens_;
  std::optional<std::vector<AutElement>> pn_gens_;
  std::optional<TransitivityCertificate> nr_ct_;
  std::optional<TransitivityCertificate> pn_ct_;
};

struct Computed {
  std::string value;
  std::string note;
};

struct ClaimSpec {
  std::string id;
  std::string locus;
  /// nullopt marks an external fact that is cited, not computed.
  std::optional<std::string> expected;
  std::function<Computed(Context&)> compute;
  std::string citation;
};

Computed plain(std::string value) { return Computed{std::move(value), {}}; }

Computed regularity_claim(const Code& code) {
  const RegularityResult r = completely_regular_check(code);
  if (!r.regular()) {
    const ProfileWitness& w = *r.witness;
    return Computed{"false", "cell " + std::to_string(w.cell) + " splits: " + w.first.to_string() + " vs " +
                                 w.second.to_string()};
  }
  bool sums_ok = true;
  for (const auto& row : r.table->rows) {
    std::size_t s = 0;
    for (std::size_t x : row) s += x;
    sums_ok = sums_ok && s == code.size();
  }
  return Computed{bool_string(sums_ok), "rho = " + std::to_string(r.table->covering_radius)};
}

Computed design_claim(const Code& words, int t) {
  const DesignResult r = design_check(words, t);
  if (!r.lambda) {
    return Computed{"not a design", "witness " + r.witness->subset.to_string() + " covered " +
                                        std::to_string(r.witness->count) + " times, expected " +
                                        std::to_string(r.witness->expected)};
  }
  return plain(std::to_string(*r.lambda));
}

// Odd lambda values up to the bound are inadmissible and even ones are not.
Computed parity_claim(int t, int m, int k, int delta) {
  const Rational bound = lambda_upper_bound(m, t, delta);
  const BigInt top = boost::multiprecision::numerator(bound) / boost::multiprecision::denominator(bound);
  bool ok = true;
  std::string note;
  for (BigInt lambda = 1; lambda <= top; ++lambda) {
    const DesignParams p = design_arithmetic(t, m, k, lambda);
    const bool odd = lambda % 2 != 0;
    ok = ok && (p.admissible() != odd);
    if (odd) {
      for (int i = 0; i <= t; ++i) {
        if (!p.lambda_integral[static_cast<std::size_t>(i)]) {
          if (!note.empty()) note += "; ";
          note += "lambda=" + lambda.str() + ": lambda_" + std::to_string(i) + " = " +
                  nrcheck::to_string(p.lambdas[static_cast<std::size_t>(i)]);
          break;
        }
      }
    }
  }
  return Computed{bool_string(ok), note};
}

std::vector<AutElement> translations_of(const Code& code) {
  std::vector<AutElement> out;
  for (Word w : code.words()) out.push_back(AutElement::translation(Vertex(code.length(), w)));
  return out;
}

BigInt mu_order(const std::vector<AutElement>& gens, int m) {
  std::vector<Permutation> perms;
  for (const AutElement& x : gens) perms.push_back(permutation_part(x));
  return PermGroup(m, perms).order();
}

std::vector<ClaimSpec> all_claims() {
  std::vector<ClaimSpec> c;
  auto add = [&](std::string id, std::string locus, std::string expected, std::function<Computed(Context&)> f) {
    c.push_back(ClaimSpec{std::move(id), std::move(locus), std::move(expected), std::move(f), {}});
  };
  auto external = [&](std::string id, std::string locus, std::string citation) {
    c.push_back(ClaimSpec{std::move(id), std::move(locus), std::nullopt, nullptr, std::move(citation)});
  };

  // Golay code.
  add("golay.size", "extended Golay code cardinality", "4096",
      [](Context& x) { return plain(std::to_string(x.golay().size())); });
  add("golay.delta", "extended Golay code minimum distance", "8",
      [](Context& x) { return plain(x.golay().min_distance() ? std::to_string(*x.golay().min_distance()) : "none"); });
  add("golay.octad", "Golay code contains (1^8,0^16)", "true",
      [](Context& x) { return plain(bool_string(x.golay().contains(Word{0xFF}))); });
  add("golay.weights", "Golay weight enumerator", "0:1,8:759,12:2576,16:759,24:1",
      [](Context& x) { return plain(histogram_string(x.golay())); });
  add("golay.self_dual_transform", "MacWilliams transform of the Golay code is 4096 a", "true", [](Context& x) {
    const auto dist = distance_distribution(x.golay());
    const auto t = macwilliams_transform(dist);
    bool ok = true;
    for (std::size_t k = 0; k < t.size(); ++k) ok = ok && t[k] == dist.a[k] * 4096;
    return plain(bool_string(ok));
  });

  // NR construction.
  add("nr.length", "NR length", "16", [](Context& x) { return plain(std::to_string(x.nr().length())); });
  add("nr.size", "NR cardinality", "256", [](Context& x) { return plain(std::to_string(x.nr().size())); });
  add("nr.delta", "NR minimum distance", "6",
      [](Context& x) { return plain(x.nr().min_distance() ? std::to_string(*x.nr().min_distance()) : "none"); });
  add("nr.even", "every NR word has even weight", "true",
      [](Context& x) { return plain(bool_string(code_predicates(x.nr()).is_even)); });
  add("nr.weight6.count", "|NR(6)|", "112", [](Context& x) { return plain(std::to_string(x.nr().weight_class(6).size())); });
  add("nr.weight8.count", "|NR(8)|", "30", [](Context& x) { return plain(std::to_string(x.nr().weight_class(8).size())); });
  add("nr.weight10.count", "|NR(10)|", "112",
      [](Context& x) { return plain(std::to_string(x.nr().weight_class(10).size())); });
  add("nr.distribution", "distance distribution a(NR)", "(1,0,0,0,0,0,112,0,30,0,112,0,0,0,0,0,1)",
      [](Context& x) { return plain(tuple_string(x.nr_dist().a)); });
  add("nr.antipodal", "NR is closed under complement", "true",
      [](Context& x) { return plain(bool_string(code_predicates(x.nr()).is_antipodal)); });
  add("nr.nonlinear", "NR is not linear", "false",
      [](Context& x) { return plain(bool_string(code_predicates(x.nr()).is_linear)); });
  add("nr.transform_nonnegative", "a'(NR) >= 0", "true", [](Context& x) {
    const auto t = macwilliams_transform(x.nr_dist());
    return Computed{bool_string(std::all_of(t.begin(), t.end(), [](const Rational& v) { return v >= 0; })),
                    "a' = " + tuple_string(t)};
  });
  add("nr.coset_union", "NR is the union of 8 cosets of R", "true", [](Context& x) {
    const auto& dec = x.decomposition();
    std::vector<Word> words;
    for (int i = 0; i < 8; ++i) {
      const Word shift = i == 0 ? 0 : CosetDecomposition::inner().apply(dec.representatives[static_cast<std::size_t>(i - 1)].bits());
      for (Word r : x.rm().words()) words.push_back(r ^ shift);
    }
    return plain(bool_string(Code(16, words) == x.nr()));
  });
  add("nr.representative_choice", "NR does not depend on the coset representatives", "true", [](Context& x) {
    return plain(bool_string(nordstrom_robinson(coset_decomposition(x.golay(), RepresentativeRule::greatest)) == x.nr()));
  });

  // Reed-Muller subcode.
  add("rm.size", "|R|", "32", [](Context& x) { return plain(std::to_string(x.rm().size())); });
  add("rm.delta", "R minimum distance", "8",
      [](Context& x) { return plain(x.rm().min_distance() ? std::to_string(*x.rm().min_distance()) : "none"); });
  add("rm.linear", "R is linear", "true", [](Context& x) { return plain(bool_string(code_predicates(x.rm()).is_linear)); });
  add("rm.in_nr", "R is a subcode of NR", "true", [](Context& x) {
    const auto w = x.rm().words();
    return plain(bool_string(std::all_of(w.begin(), w.end(), [&](Word r) { return x.nr().contains(r); })));
  });

  // PN construction.
  add("pn.length", "PN length", "15", [](Context& x) { return plain(std::to_string(x.pn().length())); });
  add("pn.size", "PN cardinality", "256", [](Context& x) { return plain(std::to_string(x.pn().size())); });
  add("pn.delta", "PN minimum distance", "5",
      [](Context& x) { return plain(x.pn().min_distance() ? std::to_string(*x.pn().min_distance()) : "none"); });
  add("pn.weight5.count", "|PN(5)|", "42", [](Context& x) { return plain(std::to_string(x.pn().weight_class(5).size())); });
  add("pn.distribution", "distance distribution a(PN)", "(1,0,0,0,0,42,70,15,15,70,42,0,0,0,0,1)",
      [](Context& x) { return plain(tuple_string(x.pn_dist().a)); });

  // Covering radii and distance partitions.
  add("nr.rho", "covering radius of NR", "4", [](Context& x) { return plain(std::to_string(x.nr_partition().covering_radius)); });
  add("nr.cells.low", "|NR_0|, |NR_1|, |NR_2|", "256,4096,30720", [](Context& x) {
    const auto& s = x.nr_partition().cell_sizes;
    if (s.size() < 3) return plain("rho < 2");
    return plain(std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]));
  });
  add("nr.cells.high", "|NR_3| + |NR_4|", "30464", [](Context& x) {
    const auto& s = x.nr_partition().cell_sizes;
    std::size_t sum = 0;
    for (std::size_t i = 3; i < s.size(); ++i) sum += s[i];
    return Computed{std::to_string(sum), "cell sizes " + tuple_string(s)};
  });
  add("pn.rho", "covering radius of PN", "3",
      [](Context& x) { return plain(std::to_string(distance_partition(x.pn()).covering_radius)); });

  // Complete regularity.
  add("golay.cr", "Golay code is completely regular", "true", [](Context& x) { return regularity_claim(x.golay()); });
  add("nr.cr", "NR is completely regular", "true", [](Context& x) { return regularity_claim(x.nr()); });
  add("pn.cr", "PN is completely regular", "true", [](Context& x) { return regularity_claim(x.pn()); });
  add("rm.cr", "R(1,4) is completely regular", "true", [](Context& x) { return regularity_claim(x.rm()); });

  // Designs.
  add("nr.design6", "NR(6) is a 3-(16,6,lambda) design", "4", [](Context& x) { return design_claim(x.nr().weight_class(6), 3); });
  add("nr.design6.blocks", "block count of a 3-(16,6,4) design", "112", [](Context& x) {
    const DesignParams p = design_arithmetic(3, 16, 6, 4);
    return Computed{nrcheck::to_string(p.blocks), "|NR(6)| = " + std::to_string(x.nr().weight_class(6).size())};
  });
  add("nr.design8", "NR(8) is a 3-(16,8,lambda) design", "3", [](Context& x) { return design_claim(x.nr().weight_class(8), 3); });
  add("nr.designs.all", "every nonempty NR(k), k >= 6, is a 3-design", "true", [](Context& x) {
    bool ok = true;
    std::string note;
    for (int k = 6; k <= 16; ++k) {
      const Code words = x.nr().weight_class(k);
      if (words.empty()) continue;
      const DesignResult r = design_check(words, 3);
      ok = ok && r.lambda.has_value();
      note += (note.empty() ? "" : "; ") + std::string("k=") + std::to_string(k) + ": lambda=" +
              (r.lambda ? std::to_string(*r.lambda) : std::string("none"));
    }
    return Computed{bool_string(ok), note};
  });
  add("pn.design5", "PN(5) is a 2-(15,5,lambda) design", "4", [](Context& x) { return design_claim(x.pn().weight_class(5), 2); });

  // Lambda elimination.
  add("lambda.nr.parity", "odd lambda is inadmissible for 3-(16,6,lambda)", "true",
      [](Context&) { return parity_claim(3, 16, 6, 6); });
  add("lambda.nr.bound", "lambda <= (m-t)/(delta-t) for (16,6)", "13/3",
      [](Context&) { return plain(nrcheck::to_string(lambda_upper_bound(16, 3, 6))); });
  add("lambda.nr.admissible", "admissible lambda for (16,6)", "2,4",
      [](Context&) { return plain(lambdas_string(admissible_lambdas(3, 16, 6, 6))); });
  external("lambda.nr.two", "no 3-(16,6,2) design exists",
           "Handbook of Combinatorial Designs: nonexistence of a 3-(16,6,2) design");
  add("lambda.pn.parity", "odd lambda is inadmissible for 2-(15,5,lambda)", "true",
      [](Context&) { return parity_claim(2, 15, 5, 5); });
  add("lambda.pn.bound", "lambda <= (m-t)/(delta-t) for (15,5)", "13/3",
      [](Context&) { return plain(nrcheck::to_string(lambda_upper_bound(15, 2, 5))); });
  add("lambda.pn.admissible", "admissible lambda for (15,5)", "2,4",
      [](Context&) { return plain(lambdas_string(admissible_lambdas(2, 15, 5, 5))); });
  external("lambda.pn.two", "no 2-(15,5,2) design exists",
           "Handbook of Combinatorial Designs: nonexistence of a 2-(15,5,2) design");

  // Feasibility.
  add("feas.nr.unique", "integer solutions (a7,a8) for the (16,6) template", "{(0,30)}", [](Context&) {
    const auto r = feasible_distributions(DistributionTemplate::parse(16, "0=1,6=112,7=?,8=?,10=112,16=1", true));
    return plain(solutions_string(r.solutions));
  });
  add("feas.nr.row2", "a'_2 for the (16,6) template", "240 - 12*a7 - 8*a8", [](Context&) {
    const auto sys = build_system(DistributionTemplate::parse(16, "0=1,6=112,7=?,8=?,10=112,16=1", true));
    return plain(sys.render(sys.rows[2]));
  });
  add("feas.nr.row4", "a'_4 for the (16,6) template", "-840 + 28*a7 + 28*a8", [](Context&) {
    const auto sys = build_system(DistributionTemplate::parse(16, "0=1,6=112,7=?,8=?,10=112,16=1", true));
    std::string note = "published form -840 - 28*a7 + 28*a8 differs in the sign of the a7 term";
    for (std::size_t k = 0; k < sys.rows.size(); ++k) {
      if (sys.render(sys.rows[k]) == "-840 - 28*a7 + 28*a8") note += "; it equals row k=" + std::to_string(k);
    }
    return Computed{sys.render(sys.rows[4]), note};
  });
  add("feas.nr.published_system", "solutions of the published two-row (16,6) system", "{(0,30)}", [](Context&) {
    const std::vector<AffineForm> rows{AffineForm{240, {-12, -8}}, AffineForm{-840, {-28, 28}}};
    return plain(solutions_string(solve_rows(rows, 2)));
  });
  add("feas.pn.unique", "integer solutions (a6,a7) for the (15,5) template", "{(70,15)}", [](Context&) {
    const auto r = feasible_distributions(DistributionTemplate::parse(15, "0=1,5=42,6=?,7=?", true));
    return plain(solutions_string(r.solutions));
  });

  // Kernel.
  add("nr.kernel", "translation kernel of NR equals R", "true",
      [](Context& x) { return plain(bool_string(translation_kernel(x.nr()) == x.rm())); });
  add("nr.kernel.size", "|K| for NR", "32", [](Context& x) { return plain(std::to_string(translation_kernel(x.nr()).size())); });
  add("nr.kernel.strict", "no beta in NR \\ R fixes NR", "true", [](Context& x) {
    bool ok = true;
    for (Word b : x.nr().words()) {
      if (x.rm().contains(b)) continue;
      ok = ok && translate(x.nr(), Vertex(16, b)) != x.nr();
    }
    return plain(bool_string(ok));
  });
  add("pn.kernel.size", "|K| for PN", "32", [](Context& x) { return plain(std::to_string(translation_kernel(x.pn()).size())); });

  // Group orders.
  add("nr.perm.order", "|Perm(NR)| = 2^4 |A_7|", "40320", [](Context& x) { return plain(x.nr_perm().group.order().str()); });
  add("pn.perm.order", "|Perm(PN)| = |A_7|", "2520", [](Context& x) { return plain(x.pn_perm().group.order().str()); });
  add("nr.mu.order", "|mu(Aut(NR))| = 2^4 |A_8|", "322560", [](Context& x) {
    return Computed{mu_order(x.nr_gens(), 16).str(), std::to_string(x.nr_gens().size()) + " assembled generators"};
  });
  add("nr.aut.order", "|Aut(NR)| = |K| |mu(Aut(NR))| = |NR| |Perm(NR)|", "10321920", [](Context& x) {
    const BigInt via_kernel = BigInt(translation_kernel(x.nr()).size()) * mu_order(x.nr_gens(), 16);
    const BigInt via_orbit = BigInt(x.nr().size()) * x.nr_perm().group.order();
    return plain(via_kernel == via_orbit ? via_kernel.str() : via_kernel.str() + " != " + via_orbit.str());
  });
  add("pn.mu.order", "|mu(Aut(PN))| = |A_8|", "20160", [](Context& x) { return plain(mu_order(x.pn_gens(), 15).str()); });

  // Sphere orbits.
  for (int k = 1; k <= 3; ++k) {
    add("nr.sphere" + std::to_string(k) + ".orbits", "Perm(NR) orbits on weight-" + std::to_string(k) + " vertices", "1",
        [k](Context& x) { return plain(std::to_string(orbits_on_sphere(x.nr_perm().group, 16, k).count)); });
  }
  add("nr.sphere4.orbits", "Perm(NR) orbits on weight-4 vertices", "2", [](Context& x) {
    const auto o = orbits_on_sphere(x.nr_perm().group, 16, 4);
    return Computed{std::to_string(o.count), "sizes " + tuple_string(o.sizes)};
  });
  for (int k = 1; k <= 2; ++k) {
    add("pn.sphere" + std::to_string(k) + ".orbits", "Perm(PN) orbits on weight-" + std::to_string(k) + " vertices", "1",
        [k](Context& x) { return plain(std::to_string(orbits_on_sphere(x.pn_perm().group, 15, k).count)); });
  }
  add("pn.sphere3.orbits", "Perm(PN) orbits on weight-3 vertices", "2", [](Context& x) {
    const auto o = orbits_on_sphere(x.pn_perm().group, 15, 3);
    return Computed{std::to_string(o.count), "sizes " + tuple_string(o.sizes)};
  });

  // Complete transitivity.
  add("nr.zero_orbit", "orbit of 0 under assembled Aut(NR) generators is NR", "256", [](Context& x) {
    const OrbitPartition o = vertex_orbits(x.nr_gens(), 16);
    return plain(std::to_string(o.orbit_sizes[0]));
  });
  add("nr.ct", "NR is Aut(NR)-completely transitive", "true", [](Context& x) {
    const auto& ct = x.nr_ct();
    return Computed{bool_string(ct.completely_transitive), "orbit sizes " + tuple_string(ct.orbit_sizes)};
  });
  add("nr.ct.orbits", "number of Aut(NR) orbits on F_2^16", "5", [](Context& x) { return plain(std::to_string(x.nr_ct().orbit_count)); });
  add("pn.chi", "projections of Aut(NR)_1 fix PN", "true", [](Context& x) {
    const ProjectionSpec spec = ProjectionSpec::puncturing(16, 1);
    std::vector<AutElement> elems = translations_of(x.rm());
    for (const Permutation& s : x.nr_perm().group.generators()) {
      if (s(0) == 0) elems.push_back(AutElement::permutation(s));
    }
    for (const AutElement& g : x.nr_gens()) {
      if (g.sigma()(0) == 0) elems.push_back(g);
    }
    bool ok = true;
    for (const AutElement& g : elems) ok = ok && stabilizes(project_automorphism(g, spec), x.pn());
    return Computed{bool_string(ok), std::to_string(elems.size()) + " elements checked"};
  });
  add("pn.ct", "PN is Aut(PN)-completely transitive", "true", [](Context& x) {
    const auto& ct = x.pn_ct();
    return Computed{bool_string(ct.completely_transitive), "orbit sizes " + tuple_string(ct.orbit_sizes)};
  });
  add("pn.ct.orbits", "number of Aut(PN) orbits on F_2^15", "4", [](Context& x) { return plain(std::to_string(x.pn_ct().orbit_count)); });

  // Puncturing equivalence.
  add("pn.equivalence", "puncture(NR, p) is equivalent to puncture(NR, 1) for p = 2..16", "15", [](Context& x) {
    std::size_t found = 0;
    std::string missing;
    for (int p = 2; p <= 16; ++p) {
      SearchBudget budget{x.node_limit()};
      if (find_equivalence(puncture(x.nr(), p), x.pn(), budget)) {
        ++found;
      } else {
        missing += (missing.empty() ? "missing p=" : ",") + std::to_string(p);
      }
    }
    return Computed{std::to_string(found), missing};
  });

  external("nr.snover", "every (16,256,6) code is equivalent to NR",
           "Snover (1973), uniqueness of the (16,256,6) and (15,256,5) binary codes");
  external("pn.snover", "every (15,256,5) code is equivalent to PN",
           "Snover (1973), uniqueness of the (16,256,6) and (15,256,5) binary codes");
  return c;
}

bool in_target(const std::string& id, VerifyTarget target) {
  if (target == VerifyTarget::all) return true;
  const bool pn = id.rfind("pn.", 0) == 0 || id.rfind("lambda.pn.", 0) == 0 || id.rfind("feas.pn.", 0) == 0;
  return target == VerifyTarget::pn ? pn : !pn;
}

}  // namespace

std::vector<std::string> claim_manifest(VerifyTarget target) {
  std::vector<std::string> ids;
  for (const ClaimSpec& spec : all_claims()) {
    if (in_target(spec.id, target)) ids.push_back(spec.id);
  }
  return ids;
}

VerificationReport run_verification(VerifyTarget target, const VerificationInputs& inputs, std::uint64_t node_limit) {
  VerificationReport report;
  report.target = to_string(target);
  report.node_limit = node_limit;
  Context context(inputs, node_limit);
  for (const ClaimSpec& spec : all_claims()) {
    if (!in_target(spec.id, target)) continue;
    ClaimResult result;
    result.id = spec.id;
    result.locus = spec.locus;
    result.expected = spec.expected;
    if (!spec.expected) {
      result.status = ClaimStatus::external_fact;
      result.computed = "not recomputed";
      result.note = spec.citation;
      report.claims.push_back(std::move(result));
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    try {
      Computed computed = spec.compute(context);
      result.computed = std::move(computed.value);
      result.note = std::move(computed.note);
    } catch (const std::exception& e) {
      result.computed = std::string("error: ") + e.what();
    }
    result.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    result.status = result.computed == *spec.expected ? ClaimStatus::pass : ClaimStatus::fail;
    report.claims.push_back(std::move(result));
  }
  return report;
}

std::string render_summary(const VerificationReport& report) {
  std::ostringstream out;
  std::size_t passed = 0;
  std::size_t external = 0;
  for (const ClaimResult& c : report.claims) {
    std::string tag = c.status == ClaimStatus::pass ? "PASS" : c.status == ClaimStatus::fail ? "FAIL" : "EXTERNAL";
    out << tag << "  " << c.id << "  computed=" << c.computed;
    if (c.expected && c.status == ClaimStatus::fail) out << " expected=" << *c.expected;
    if (!c.note.empty()) out << "  [" << c.note << "]";
    out << '\n';
    if (c.status == ClaimStatus::pass) ++passed;
    if (c.status == ClaimStatus::external_fact) ++external;
  }
  const auto failing = report.failing_ids();
  out << passed << " passed, " << failing.size() << " failed, " << external << " external facts\n";
  if (!failing.empty()) {
    out << "failing:";
    for (const auto& id : failing) out << ' ' << id;
    out << '\n';
  }
  return out.str();
}

nlohmann::json analysis_json(const Code& code) {
  nlohmann::json j;
  const CodePredicates pred = code_predicates(code);
  const DistanceDistribution dist = distance_distribution(code);
  const auto transform = macwilliams_transform(dist);
  const DistancePartition part = distance_partition(code);
  const RegularityResult reg = completely_regular_check(code);

  auto strings = [](const auto& values) {
    std::vector<std::string> out;
    for (const auto& v : values) out.push_back(nrcheck::to_string(v));
    return out;
  };
  j["m"] = code.length();
  j["size"] = code.size();
  j["min_distance"] = pred.min_distance ? nlohmann::json(*pred.min_distance) : nlohmann::json(nullptr);
  j["weight_histogram"] = pred.weight_histogram;
  j["pair_counts"] = strings(dist.pair_counts);
  j["distance_distribution"] = strings(dist.a);
  j["macwilliams_transform"] = strings(transform);
  j["covering_radius"] = part.covering_radius;
  j["cell_sizes"] = part.cell_sizes;
  j["predicates"] = {{"linear", pred.is_linear}, {"even", pred.is_even}, {"antipodal", pred.is_antipodal}};
  if (reg.regular()) {
    j["completely_regular"] = {{"regular", true}, {"intersection_table", reg.table->rows}};
  } else {
    const ProfileWitness& w = *reg.witness;
    j["completely_regular"] = {{"regular", false},
                               {"witness",
                                {{"cell", w.cell},
                                 {"first", w.first.to_string()},
                                 {"second", w.second.to_string()},
                                 {"first_profile", w.first_profile},
                                 {"second_profile", w.second_profile}}}};
  }
  return j;
}

nlohmann::json feasibility_json(const FeasibilityResult& result) {
  const FeasibilitySystem& sys = result.system;
  nlohmann::json j;
  j["m"] = sys.length;
  j["consistent"] = sys.consistent;
  std::vector<std::string> names;
  for (std::size_t v = 0; v < sys.variable_slots.size(); ++v) names.push_back(sys.variable_name(v));
  j["unknowns"] = names;
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t k = 0; k < sys.rows.size(); ++k) {
    rows.push_back({{"k", k}, {"row", sys.render(sys.rows[k]) + " >= 0"}});
  }
  j["rows"] = rows;
  nlohmann::json solutions = nlohmann::json::array();
  for (const auto& s : result.solutions) {
    nlohmann::json entry = nlohmann::json::object();
    for (std::size_t v = 0; v < s.size(); ++v) entry[names[v]] = s[v].str();
    solutions.push_back(entry);
  }
  j["solutions"] = solutions;
  return j;
}

}  // namespace nrcheck
