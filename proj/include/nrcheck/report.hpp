#pragma once

// The verification manifest: every claim about the Golay, Nordstrom-Robinson
// and punctured Nordstrom-Robinson codes that this tool checks, with the
// expected value, the computed value and a status.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nrcheck/code.hpp"
#include "nrcheck/feasibility.hpp"
#include "nrcheck/search.hpp"
#include "nrcheck/spectrum.hpp"

namespace nrcheck {

inline constexpr const char* kArtifactVersion = "1.0.0";

enum class ClaimStatus { pass, fail, external_fact };

std::string to_string(ClaimStatus status);
ClaimStatus parse_claim_status(const std::string& text);

struct ClaimResult {
  std::string id;
  /// Short description of the statement being checked.
  std::string locus;
  /// Absent for external facts.
  std::optional<std::string> expected;
  std::string computed;
  ClaimStatus status = ClaimStatus::fail;
  double wall_ms = 0.0;
  std::string note;

  friend bool operator==(const ClaimResult&, const ClaimResult&) = default;
};

struct VerificationReport {
  std::string version = kArtifactVersion;
  std::string target;
  std::uint64_t node_limit = kDefaultNodeLimit;
  std::vector<ClaimResult> claims;

  /// True iff no claim has status fail.
  bool all_passed() const;
  std::vector<std::string> failing_ids() const;
  const ClaimResult* find(const std::string& id) const;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

void to_json(nlohmann::json& j, const ClaimResult& c);
void from_json(const nlohmann::json& j, ClaimResult& c);
void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

enum class VerifyTarget { nr, pn, all };

/// Throws std::invalid_argument for anything but "nr", "pn" or "all".
VerifyTarget parse_verify_target(const std::string& text);
std::string to_string(VerifyTarget target);

/// Codes the manifest runs on. Everything else (R, PN, ...) is derived:
/// PN is NR punctured at coordinate 1, so a corrupted NR propagates.
struct VerificationInputs {
  Code golay;
  Code nr;

  static VerificationInputs standard();
};

/// Claim ids run for a target, in report order.
std::vector<std::string> claim_manifest(VerifyTarget target);

VerificationReport run_verification(VerifyTarget target, const VerificationInputs& inputs,
                                    std::uint64_t node_limit = kDefaultNodeLimit);

/// Human-readable one-line-per-claim summary.
std::string render_summary(const VerificationReport& report);

// JSON fragments shared with the CLI.
nlohmann::json analysis_json(const Code& code);
nlohmann::json feasibility_json(const FeasibilityResult& result);

}  // namespace nrcheck
