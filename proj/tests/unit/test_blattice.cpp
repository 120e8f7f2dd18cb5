#include "sortlat/blattice.hpp"
#include "sortlat/errors.hpp"

#include "support/figures.hpp"

#include <doctest.h>

#include <set>
#include <tuple>

using namespace sortlat;

namespace {

BruhatLattice make(const char* d, const char* g, std::optional<int> cap = std::nullopt) {
  return BruhatLattice::build(GammaContext::parse(d, g), cap);
}

int at(const BruhatLattice& L, const char* word) {
  const auto i = L.find(word);
  REQUIRE_MESSAGE(i.has_value(), word);
  return *i;
}

}  // namespace

TEST_CASE("A3 reproduces the drawn Hasse diagram") {
  const auto& fig = figures::a3();
  const auto L = make("A3", "1,2,3");
  REQUIRE(L.size() == fig.nodes.size());
  std::set<std::string> words;
  for (std::size_t i = 0; i < L.size(); ++i) words.insert(L.word(static_cast<int>(i)));
  CHECK(words == std::set<std::string>(fig.nodes.begin(), fig.nodes.end()));

  std::set<std::tuple<std::string, std::string, std::string>> drawn, built;
  for (const auto& e : fig.edges)
    drawn.emplace(fig.nodes[static_cast<std::size_t>(e.from - 1)], fig.nodes[static_cast<std::size_t>(e.to - 1)], e.label);
  for (const Cover& c : hasse(L)) built.emplace(L.word(c.lower), L.word(c.upper), format_generator(c.label.letter));
  CHECK(built == drawn);
  CHECK(hasse(L).size() == 21);
}

TEST_CASE("edge labels") {
  const auto L = make("A3", "1,2,3");
  for (const Cover& c : L.covers()) {
    if (c.lower == at(L, "ε") && c.upper == at(L, "s3")) CHECK(c.label.letter == 2);
    if (c.lower == at(L, "s1s2s3|s1s2")) {
      CHECK(c.label.position == 7);
      CHECK(c.label.letter == 0);
    }
  }
}

TEST_CASE("order, join and meet") {
  const auto L = make("A3", "1,2,3");
  CHECK(L.leq(at(L, "ε"), at(L, "s2s3|s2")));
  CHECK(L.leq(at(L, "s1s2|s1"), at(L, "s1s2s3|s1")));
  CHECK_FALSE(L.leq(at(L, "s1s3"), at(L, "s2s3|s2")));
  CHECK(L.word(L.join(at(L, "s1s2|s1"), at(L, "s2s3|s2"))) == "s1s2s3|s1s2");
  CHECK(L.word(L.meet(at(L, "s1s2"), at(L, "s2s3"))) == "s2");
  CHECK(L.meet(at(L, "s1"), at(L, "s1s2|s1")) == at(L, "s1"));
}

TEST_CASE("values from the distributivity counterexample in A3") {
  const auto L = make("A3", "2,1,3");
  CHECK(L.word(L.join(at(L, "s2s1s3"), at(L, "s2s3|s2"))) == "s2s1s3|s2");
  CHECK(L.word(L.meet(at(L, "s2s1|s2"), at(L, "s2s1s3"))) == "s2s1");
}

TEST_CASE("lattice laws on all triples") {
  for (auto [d, g] : {std::pair{"A3", "1,2,3"}, std::pair{"B3", "2,3,1"}}) {
    const auto L = make(d, g);
    const int n = static_cast<int>(L.size());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        CHECK(L.join(a, L.meet(a, b)) == a);
        CHECK(L.meet(a, L.join(a, b)) == a);
        CHECK(L.join(a, b) == L.join(b, a));
        CHECK(L.meet(a, b) == L.meet(b, a));
        for (int c = 0; c < n; ++c) {
          CHECK(L.join(L.join(a, b), c) == L.join(a, L.join(b, c)));
          CHECK(L.meet(L.meet(a, b), c) == L.meet(a, L.meet(b, c)));
        }
      }
  }
}

TEST_CASE("gradedness") {
  const auto L = make("H3", "1,2,3");
  for (const Cover& c : L.covers()) CHECK(L.rank_of(c.upper) == L.rank_of(c.lower) + 1);
  for (std::size_t i = 0; i < L.size(); ++i) CHECK(L.element(static_cast<int>(i)).length() == L.rank_of(static_cast<int>(i)));
}

TEST_CASE("capped lattice") {
  const auto L = make("tC2", "1,3,2", 7);
  CHECK(L.size() == 20);
  CHECK(L.covers().size() == 31);
  CHECK(L.cap() == 7);
  bool saw_cap = false;
  for (int u = 0; u < 20; ++u)
    for (int v = 0; v < 20; ++v) {
      try {
        const int j = L.join(u, v);
        CHECK(L.leq(u, j));
        CHECK(L.leq(v, j));
      } catch (const CapExceeded&) {
        saw_cap = true;
      }
      CHECK(L.leq(L.meet(u, v), u));
    }
  CHECK(saw_cap);
  CHECK_THROWS_AS(lattice_properties(L), InvalidArgument);
}

TEST_CASE("Mobius function") {
  const auto L = make("A3", "1,2,3");
  CHECK(mobius(L, 0, 0) == 1);
  CHECK(mobius(L, 0, at(L, "s1")) == -1);
  CHECK(mobius(L, 0, at(L, "s1s3")) == 1);
  CHECK(mobius(L, 0, at(L, "s1s2s3|s1s2|s1")) == 0);
  for (auto [d, g] : {std::pair{"H3", "1,2,3"}, std::pair{"D4", "1,2,3,4"}}) {
    const auto H = make(d, g);
    for (const auto& [value, count] : MobiusTable(H).histogram()) {
      CHECK(value >= -1);
      CHECK(value <= 1);
      CHECK(count > 0);
    }
  }
}

TEST_CASE("SB labeling") {
  const auto L = make("A3", "1,2,3");
  const SbReport r = verify_sb(L);
  CHECK(r.ok());
  CHECK(r.diamonds > 0);
  const SbReport bad = verify_sb(L, [](const Cover&) { return 0; });
  CHECK_FALSE(bad.ok());
  std::set<std::pair<int, int>> diamonds;
  for (const auto& v : bad.violations) {
    CHECK(v.axiom == 1);
    diamonds.emplace(v.p1, v.p2);
  }
  CHECK(diamonds.size() == r.diamonds);
  CHECK_THROWS_AS(verify_sb(L, letter_label, 1), LimitExceeded);

  const auto C = make("tC2", "1,3,2", 7);
  const SbReport capped = verify_sb(C);
  CHECK(capped.ok());
  CHECK(capped.inconclusive > 0);
}

TEST_CASE("properties") {
  const auto a3 = lattice_properties(make("A3", "1,2,3"));
  CHECK(a3.graded);
  CHECK(a3.join_distributive);
  CHECK(a3.distributive);
  CHECK(a3.distributive_dual);
  CHECK(a3.diamonds_four);
  CHECK_FALSE(a3.distributivity_witness.has_value());

  const auto d4 = lattice_properties(make("D4", "2,1,3,4"));
  CHECK(d4.join_distributive);
  CHECK(d4.upper_semimodular);
  CHECK(d4.meet_semidistributive);
  CHECK_FALSE(d4.distributive);
  CHECK(d4.distributivity_witness.has_value());
}

TEST_CASE("antimatroid") {
  const auto r = antimatroid_check(make("A3", "1,2,3"));
  CHECK(r.ok());
  CHECK(r.violations.empty());
  CHECK(antimatroid_check(make("F4", "1,3,2,4")).ok());
}

TEST_CASE("order ideals and isomorphism") {
  FinitePoset chain{{"a", "b", "c"}, {{true, true, true}, {false, true, true}, {false, false, true}}};
  CHECK(order_ideals(chain).size() == 4);
  FinitePoset anti{{"a", "b", "c"}, {{true, false, false}, {false, true, false}, {false, false, true}}};
  CHECK(order_ideals(anti).size() == 8);
  CHECK_THROWS_AS(order_ideals(anti, 5), LimitExceeded);
  CHECK_FALSE(find_isomorphism(chain, anti).has_value());
  FinitePoset rev{{"x", "y", "z"}, {{true, false, false}, {true, true, false}, {true, true, true}}};
  const auto iso = find_isomorphism(chain, rev);
  REQUIRE(iso.has_value());
  CHECK(*iso == std::vector<int>{2, 1, 0});
}

TEST_CASE("Birkhoff") {
  const auto A = birkhoff_analysis(make("A3", "1,2,3"));
  CHECK(A.join_irreducibles.size() == 6);
  CHECK(A.ideal_count == 14);
  CHECK(A.ideal_lattice_isomorphic);
  const auto B = birkhoff_analysis(make("B3", "1,2,3"));
  CHECK(B.join_irreducibles.size() == 9);
  CHECK(B.ideal_count == 20);
  CHECK(B.ideal_lattice_isomorphic);
  CHECK_FALSE(birkhoff_analysis(make("D4", "1,2,3,4")).ideal_lattice_isomorphic);
}
