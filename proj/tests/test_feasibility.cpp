#include <doctest.h>

#include "nrcheck/feasibility.hpp"
#include "oracles.hpp"

using namespace nrcheck;

namespace {

constexpr const char* kNrTemplate = "0=1,6=112,7=?,8=?,10=112,16=1";
constexpr const char* kPnTemplate = "0=1,5=42,6=?,7=?";

using Solutions = std::vector<std::vector<BigInt>>;

}  // namespace

TEST_SUITE("feasibility") {

TEST_CASE("template parsing") {
  const auto t = DistributionTemplate::parse(16, kNrTemplate, true);
  CHECK(t.slots.size() == 17);
  CHECK(t.slots[6] == BigInt(112));
  CHECK_FALSE(t.slots[7].has_value());
  CHECK_FALSE(t.slots[9].has_value());  // mirror of 7
  CHECK(t.slots[3] == BigInt(0));
  CHECK_THROWS_AS(DistributionTemplate::parse(16, "0=1,6=112,10=111", true), std::invalid_argument);
  CHECK_THROWS_AS(DistributionTemplate::parse(16, "0=1,17=1", false), std::invalid_argument);
  CHECK_THROWS_AS(DistributionTemplate::parse(16, "0=1,3", false), std::invalid_argument);
  CHECK_THROWS_AS(DistributionTemplate::parse(16, "0=1,3=-2", false), std::invalid_argument);
  CHECK_THROWS_AS(DistributionTemplate::parse(16, "0=1,0=1", false), std::invalid_argument);
}

TEST_CASE("NR template has the unique solution (0,30)") {
  const auto r = feasible_distributions(DistributionTemplate::parse(16, kNrTemplate, true));
  CHECK(r.solutions == Solutions{{0, 30}});
  CHECK(r.system.variable_name(0) == "a7");
  CHECK(r.system.variable_name(1) == "a8");
  CHECK(r.system.render(r.system.rows[2]) == "240 - 12*a7 - 8*a8");
  CHECK(r.system.render(r.system.rows[4]) == "-840 + 28*a7 + 28*a8");
}

TEST_CASE("PN template has the unique solution (70,15)") {
  const auto r = feasible_distributions(DistributionTemplate::parse(15, kPnTemplate, true));
  CHECK(r.solutions == Solutions{{70, 15}});
}

TEST_CASE("rows agree with the Krawtchouk sum") {
  const auto sys = build_system(DistributionTemplate::parse(16, kNrTemplate, true));
  std::vector<std::int64_t> a(17, 0);
  a[0] = a[16] = 1;
  a[6] = a[10] = 112;
  a[8] = 30;
  for (int k = 0; k <= 16; ++k) {
    std::int64_t direct = 0;
    for (int i = 0; i <= 16; ++i) direct += a[static_cast<std::size_t>(i)] * oracle::krawtchouk(16, k, i);
    CHECK(sys.rows[static_cast<std::size_t>(k)].evaluate({0, 30}) == direct);
  }
}

TEST_CASE("published two-row system also pins (0,30)") {
  const std::vector<AffineForm> rows{AffineForm{240, {-12, -8}}, AffineForm{-840, {-28, 28}}};
  CHECK(solve_rows(rows, 2) == Solutions{{0, 30}});
}

TEST_CASE("fully fixed template") {
  const auto r = feasible_distributions(
      DistributionTemplate::parse(16, "0=1,6=112,8=30,10=112,16=1", false));
  CHECK(r.solutions == Solutions{{}});
}

TEST_CASE("contradictory template has no solutions") {
  // a = (1,1,0,0,1) gives a'_3 = 4 - 2 - 4 < 0.
  const auto r = feasible_distributions(DistributionTemplate::parse(4, "0=1,1=1,4=1", false));
  CHECK(r.solutions.empty());
}

TEST_CASE("unbounded systems are reported") {
  // 1 + a >= 0 puts no upper bound on a.
  const std::vector<AffineForm> rows{AffineForm{1, {1}}};
  CHECK_THROWS_AS(solve_rows(rows, 1), UnboundedSystemError);
}

TEST_CASE("propagation bounds") {
  const std::vector<AffineForm> rows{AffineForm{10, {-2, -5}}};
  const auto ranges = propagate_bounds(rows, 2);
  REQUIRE(ranges);
  CHECK((*ranges)[0].high == BigInt(5));
  CHECK((*ranges)[1].high == BigInt(2));
  CHECK_FALSE(propagate_bounds({AffineForm{-1, {0}}}, 1));
}

}  // TEST_SUITE
