#include <doctest.h>

#include <set>

#include "nrcheck/construct.hpp"
#include "nrcheck/report.hpp"

using namespace nrcheck;

namespace {

const VerificationInputs& inputs() {
  static const VerificationInputs in = VerificationInputs::standard();
  return in;
}

// NR with one codeword replaced by its neighbour across coordinate 16.
VerificationInputs corrupted() {
  VerificationInputs in = inputs();
  std::vector<Word> words(in.nr.words().begin(), in.nr.words().end());
  words[5] ^= Word{1} << 15;
  in.nr = Code(16, words);
  return in;
}

VerificationReport strip_times(VerificationReport r) {
  for (ClaimResult& c : r.claims) c.wall_ms = 0;
  return r;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("manifest ids are unique and filtered by target") {
  const auto all = claim_manifest(VerifyTarget::all);
  CHECK(std::set<std::string>(all.begin(), all.end()).size() == all.size());
  for (const char* id : {"nr.delta", "nr.weight6.count", "nr.kernel", "nr.ct", "pn.ct", "feas.nr.unique"}) {
    CHECK(std::find(all.begin(), all.end(), id) != all.end());
  }
  for (const auto& id : claim_manifest(VerifyTarget::nr)) CHECK(id.rfind("pn.", 0) != 0);
  for (const auto& id : claim_manifest(VerifyTarget::pn)) {
    CHECK((id.rfind("pn.", 0) == 0 || id.rfind("lambda.pn.", 0) == 0 || id.rfind("feas.pn.", 0) == 0));
  }
  CHECK(claim_manifest(VerifyTarget::nr).size() + claim_manifest(VerifyTarget::pn).size() == all.size());
}

TEST_CASE("target parsing") {
  CHECK(parse_verify_target("pn") == VerifyTarget::pn);
  CHECK(to_string(VerifyTarget::all) == "all");
  CHECK_THROWS_AS(parse_verify_target("golay"), std::invalid_argument);
  CHECK(parse_claim_status("external-fact") == ClaimStatus::external_fact);
  CHECK_THROWS_AS(parse_claim_status("ok"), std::invalid_argument);
}

TEST_CASE("pn report") {
  const VerificationReport r = run_verification(VerifyTarget::pn, inputs());
  CHECK(r.version == kArtifactVersion);
  CHECK(r.claims.size() == claim_manifest(VerifyTarget::pn).size());
  CHECK(r.all_passed());
  for (const ClaimResult& c : r.claims) {
    if (c.status == ClaimStatus::external_fact) {
      CHECK_FALSE(c.expected);
      CHECK_FALSE(c.note.empty());
    } else {
      CHECK(c.status == ClaimStatus::pass);
      CHECK(c.computed == *c.expected);
    }
  }
  REQUIRE(r.find("lambda.pn.two"));
  CHECK(r.find("lambda.pn.two")->status == ClaimStatus::external_fact);
  CHECK(r.find("pn.snover")->status == ClaimStatus::external_fact);
  CHECK(r.find("nr.delta") == nullptr);
}

TEST_CASE("json round trip and determinism") {
  const VerificationReport first = run_verification(VerifyTarget::pn, inputs());
  const nlohmann::json j = first;
  CHECK(j.at("node_limit").is_string());
  const VerificationReport back = j.get<VerificationReport>();
  CHECK(back == first);
  const VerificationReport second = run_verification(VerifyTarget::pn, inputs());
  CHECK(nlohmann::json(strip_times(first)).dump() == nlohmann::json(strip_times(second)).dump());
}

TEST_CASE("nr report: every claim but rm.cr passes") {
  const VerificationReport r = run_verification(VerifyTarget::nr, inputs());
  CHECK(r.failing_ids() == std::vector<std::string>{"rm.cr"});
  CHECK(r.find("feas.nr.row4")->note.find("k=12") != std::string::npos);
}

TEST_CASE("a corrupted NR word is caught") {
  const VerificationReport r = run_verification(VerifyTarget::all, corrupted());
  const auto failing = r.failing_ids();
  for (const char* id : {"nr.delta", "nr.cr", "nr.ct"}) {
    CAPTURE(id);
    CHECK(std::find(failing.begin(), failing.end(), id) != failing.end());
  }
  CHECK_FALSE(r.all_passed());
}

TEST_CASE("analysis json") {
  const nlohmann::json j = analysis_json(puncture(inputs().nr, 1));
  CHECK(j.at("min_distance") == 5);
  CHECK(j.at("covering_radius") == 3);
  CHECK(j.at("completely_regular").at("regular") == true);
  const nlohmann::json bad = analysis_json(Code(3, {0b000, 0b011}));
  CHECK(bad.at("completely_regular").at("regular") == false);
  CHECK(bad.at("completely_regular").at("witness").at("cell") == 1);
}

}  // TEST_SUITE
