#include "sortlat/errors.hpp"
#include "sortlat/orient.hpp"

#include <doctest.h>

using namespace sortlat;

namespace {

OrientedDiagram orient(const char* d, const char* g) { return orientation_from_word(GammaContext::parse(d, g)); }

}  // namespace

TEST_CASE("orientation from a Coxeter element") {
  const auto a3 = orient("A3", "1,2,3");
  CHECK(a3.points(0, 1));
  CHECK(a3.points(1, 2));
  CHECK_FALSE(a3.points(1, 0));
  CHECK_FALSE(a3.points(0, 2));
  CHECK(a3.describe() == "s1→s2 s2→s3");

  const auto c = orient("tC2", "1,3,2");
  CHECK(c.points(0, 1));
  CHECK(c.points(2, 1));
  CHECK(c.describe() == "s1→s2 s2←s3");

  CHECK(orient("A1", "1").arrows().empty());
  CHECK(orient("A3", "3,1,2") == orient("A3", "1,3,2"));
}

TEST_CASE("orientations validate edges and acyclicity") {
  const CoxeterDiagram a3 = parse_diagram("A3");
  CHECK_THROWS_AS(OrientedDiagram(a3, {{0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(OrientedDiagram(a3, {{0, 2}, {0, 1}, {1, 2}}), InvalidArgument);
  CHECK_THROWS_AS(OrientedDiagram(a3, {{0, 1}, {1, 0}, {1, 2}}), InvalidArgument);
  const CoxeterDiagram cyc = parse_diagram("rank=3; 1-2; 2-3; 1-3");
  CHECK_THROWS_AS(OrientedDiagram(cyc, {{0, 1}, {1, 2}, {2, 0}}), InvalidArgument);
  CHECK(OrientedDiagram(a3, {{1, 0}, {1, 2}}).canonical_word() == Word{1, 0, 2});
}

TEST_CASE("Coxeter element enumeration") {
  CHECK(enumerate_coxeter_elements(parse_diagram("A3")).size() == 4);
  CHECK(enumerate_coxeter_elements(parse_diagram("D4")).size() == 8);
  CHECK(enumerate_coxeter_elements(parse_diagram("H4")).size() == 8);
  CHECK(enumerate_coxeter_elements(parse_diagram("A1")).size() == 1);
  CHECK(enumerate_coxeter_elements(parse_diagram("rank=3; 1-2; 2-3; 1-3")).size() == 6);
  const auto list = enumerate_coxeter_elements(parse_diagram("B3"));
  for (std::size_t i = 1; i < list.size(); ++i) CHECK(list[i - 1].word < list[i].word);
  for (const auto& e : list) CHECK(orientation_from_word(parse_diagram("B3"), e.word) == e.orientation);
}

TEST_CASE("forbidden patterns") {
  const auto d4 = find_forbidden(orient("D4", "2,1,3,4"));
  REQUIRE(d4.has_value());
  CHECK(d4->pattern == 1);

  const auto h4 = find_forbidden(orient("H4", "1,2,3,4"));
  REQUIRE(h4.has_value());
  CHECK(h4->pattern == 6);
  CHECK(h4->witness == std::vector<Generator>{0, 1, 2, 3});
  CHECK(h4->edge_labels == std::vector<Label>{3, 3, 5});

  CHECK_FALSE(find_forbidden(orient("A4", "1,2,3,4")).has_value());
  CHECK_FALSE(find_forbidden(orient("B3", "1,2,3")).has_value());
  CHECK(pattern_name(4) == "iv");
  CHECK(matches_pattern(orient("A3", "2,1,3"), 1, std::vector<Generator>{0, 1, 2}));
  CHECK_FALSE(matches_pattern(orient("A3", "1,2,3"), 1, std::vector<Generator>{0, 1, 2}));
}

TEST_CASE("counterexample replays") {
  for (int p = 1; p <= 7; ++p) {
    const ReplayResult r = replay_counterexamples(p);
    CHECK_MESSAGE(r.matches_printed, pattern_name(p));
    CHECK(r.lhs != r.rhs);
    for (const auto& s : r.steps) CHECK_MESSAGE(s.ok, s.name);
  }
}

TEST_CASE("case (i) and (ii) values in B3") {
  const auto L1 = BruhatLattice::build(GammaContext::parse("B3", "2,1,3"));
  const ReplayResult r1 = replay_counterexample(1, L1, std::vector<Generator>{0, 1, 2});
  CHECK(r1.lhs == "s2s1|s2");
  CHECK(r1.rhs == "s2s1");

  const auto L2 = BruhatLattice::build(GammaContext::parse("B3", "3,2,1"));
  const ReplayResult r2 = replay_counterexample(2, L2, std::vector<Generator>{0, 1, 2});
  CHECK(r2.matches_printed);
  CHECK_THROWS_AS(replay_counterexample(1, L2, std::vector<Generator>{0, 1, 2}), InvalidArgument);
}

TEST_CASE("scan") {
  const ScanReport b3 = scan_conjecture(parse_diagram("B3"));
  CHECK(b3.rows.size() == 4);
  CHECK(b3.sound());
  CHECK(b3.consistent());
  CHECK(b3.distributive_count() == 2);
  const ScanReport d4 = scan_conjecture(parse_diagram("D4"));
  CHECK(d4.distributive_count() == 0);
  for (const auto& row : d4.rows) CHECK(row.match.has_value());
  CHECK_THROWS_AS(scan_conjecture(parse_diagram("tC2")), InvalidArgument);
  CHECK_THROWS_AS(scan_conjecture(parse_diagram("H4"), 1000), LimitExceeded);
  const std::string table = format_scan_table(b3);
  CHECK(table.find("orientation") != std::string::npos);
  CHECK(table.find("—") != std::string::npos);
}
