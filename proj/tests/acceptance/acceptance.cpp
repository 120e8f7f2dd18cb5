// End-to-end acceptance run: one PASS/FAIL line per criterion.
// Usage: acceptance [--expect-fail N]...

#include "sortlat/oracle.hpp"
#include "sortlat/orient.hpp"

#include "support/figures.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <string>
#include <vector>

using namespace sortlat;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Group {
  std::string name;
  std::size_t catalan;
};

const std::vector<Group>& catalan_groups() {
  static const std::vector<Group> g = {
      {"A1", 2},     {"A2", 5},     {"A3", 14},    {"A4", 42},    {"B2", 6},     {"B3", 20},    {"D4", 50},
      {"F4", 105},   {"H3", 32},    {"H4", 280},   {"I2(5)", 7},  {"I2(6)", 8},  {"I2(7)", 9},  {"I2(8)", 10},
  };
  return g;
}

std::string gamma_text(const Word& w) {
  std::string s;
  for (Generator g : w) s += (s.empty() ? "" : ",") + std::to_string(g + 1);
  return s;
}

// Every Coxeter element of every group in the Catalan table, built once.
struct Built {
  std::string group;
  Word gamma;
  BruhatLattice lattice;
};

const std::vector<Built>& all_lattices() {
  static const std::vector<Built> all = [] {
    std::vector<Built> v;
    for (const auto& g : catalan_groups()) {
      const CoxeterDiagram d = parse_diagram(g.name);
      for (const auto& e : enumerate_coxeter_elements(d))
        v.push_back({g.name, e.word, BruhatLattice::build(GammaContext(CoxeterGroup::create(d), e.word))});
    }
    return v;
  }();
  return all;
}

Word letters_of(const std::string& sorting_word) {
  Word w;
  for (std::size_t i = 0; i < sorting_word.size(); ++i)
    if (sorting_word[i] == 's') w.push_back(std::stoi(sorting_word.substr(i + 1)) - 1);
  return w;
}

Outcome compare_figure(const figures::Figure& fig) {
  const auto L = BruhatLattice::build(GammaContext::parse(fig.diagram, fig.gamma),
                                      fig.cap < 0 ? std::nullopt : std::optional<int>(fig.cap));
  std::set<std::string> drawn_nodes(fig.nodes.begin(), fig.nodes.end()), built_nodes;
  for (std::size_t i = 0; i < L.size(); ++i) built_nodes.insert(L.word(static_cast<int>(i)));
  using E = std::tuple<std::string, std::string, std::string>;
  std::set<E> drawn_edges, built_edges;
  for (const auto& e : fig.edges)
    drawn_edges.emplace(fig.nodes[static_cast<std::size_t>(e.from - 1)], fig.nodes[static_cast<std::size_t>(e.to - 1)],
                        e.label);
  for (const Cover& c : hasse(L)) built_edges.emplace(L.word(c.lower), L.word(c.upper), format_generator(c.label.letter));

  std::ostringstream d;
  std::size_t nodes_present = 0, edges_present = 0;
  for (const auto& n : drawn_nodes) nodes_present += built_nodes.count(n);
  for (const auto& e : drawn_edges) edges_present += built_edges.count(e);
  d << nodes_present << "/" << drawn_nodes.size() << " drawn elements, " << edges_present << "/"
    << drawn_edges.size() << " drawn labeled edges";
  for (const auto& n : drawn_nodes)
    if (!built_nodes.count(n)) {
      const Word w = letters_of(n);
      d << "; missing " << n << " (letters reduce to length "
        << L.context().group().reduce_word(w).length() << " < " << w.size() << ", not a reduced word)";
    }
  std::size_t extra_nodes = 0, extra_edges = 0;
  for (const auto& n : built_nodes) extra_nodes += !drawn_nodes.count(n);
  for (const auto& e : built_edges) extra_edges += !drawn_edges.count(e);
  d << "; " << extra_nodes << " undrawn elements, " << extra_edges << " undrawn edges";
  return {built_nodes == drawn_nodes && built_edges == drawn_edges, d.str()};
}

Outcome criterion_1() { return compare_figure(figures::a3()); }

Outcome criterion_2() { return compare_figure(figures::tc2()); }

Outcome criterion_3() {
  std::ostringstream d;
  bool ok = true;
  std::size_t checked = 0;
  std::map<std::string, std::set<std::size_t>> seen;
  for (const auto& b : all_lattices()) {
    const CoxeterGroup& W = b.lattice.context().group();
    const auto naive = oracle::naive_sortables(W.enumerate(kDefaultScanOrderLimit), b.gamma);
    std::set<std::string> naive_words, lib_words;
    for (const auto& s : naive) naive_words.insert(s.word);
    for (std::size_t i = 0; i < b.lattice.size(); ++i) lib_words.insert(b.lattice.word(static_cast<int>(i)));
    const std::size_t expected =
        std::find_if(catalan_groups().begin(), catalan_groups().end(), [&](const Group& g) { return g.name == b.group; })
            ->catalan;
    if (naive.size() != expected || lib_words != naive_words) {
      ok = false;
      d << b.group << " gamma=" << gamma_text(b.gamma) << ": " << b.lattice.size() << " vs oracle " << naive.size()
        << " vs " << expected << "; ";
    }
    seen[b.group].insert(b.lattice.size());
    ++checked;
  }
  d << checked << " Coxeter elements:";
  for (const auto& g : catalan_groups()) d << " " << g.name << "=" << *seen[g.name].begin();
  return {ok, d.str()};
}

template <class F>
Outcome over_all(const char* what, F&& check) {
  std::ostringstream d;
  bool ok = true;
  std::size_t checked = 0;
  for (const auto& b : all_lattices()) {
    std::string why;
    if (!check(b.lattice, why)) {
      ok = false;
      d << b.group << " gamma=" << gamma_text(b.gamma) << ": " << why << "; ";
    }
    ++checked;
  }
  d << checked << " lattices " << what;
  return {ok, d.str()};
}

Outcome criterion_4() {
  std::size_t diamonds = 0;
  Outcome o = over_all("with zero SB violations", [&](const BruhatLattice& L, std::string& why) {
    const SbReport r = verify_sb(L);
    diamonds += r.diamonds;
    why = std::to_string(r.violations.size()) + " violations";
    return r.ok();
  });
  const auto C = BruhatLattice::build(GammaContext::parse("tC2", "1,3,2"), 7);
  const SbReport c = verify_sb(C);
  o.pass = o.pass && c.ok();
  o.detail += " (" + std::to_string(diamonds) + " diamonds); capped tC2: " + std::to_string(c.violations.size()) +
              " violations over " + std::to_string(c.diamonds - c.inconclusive) + " in-cap diamonds";
  return o;
}

Outcome criterion_5() {
  std::map<int, std::size_t> total;
  Outcome o = over_all("with mu in {-1,0,1}", [&](const BruhatLattice& L, std::string& why) {
    bool ok = true;
    for (const auto& [v, c] : MobiusTable(L).histogram()) {
      total[v] += c;
      if (v < -1 || v > 1) {
        ok = false;
        why = "mu=" + std::to_string(v);
      }
    }
    return ok;
  });
  o.detail += " (histogram";
  for (const auto& [v, c] : total) o.detail += " " + std::to_string(v) + ":" + std::to_string(c);
  o.detail += ")";
  return o;
}

Outcome criterion_6() {
  return over_all("upper semimodular, meet-semidistributive, antimatroid, four-element diamonds",
                  [](const BruhatLattice& L, std::string& why) {
                    const LatticeProperties p = lattice_properties(L);
                    const AntimatroidReport a = antimatroid_check(L);
                    why = std::string("usm=") + (p.upper_semimodular ? "y" : "n") +
                          " msd=" + (p.meet_semidistributive ? "y" : "n") + " antimatroid=" + (a.ok() ? "y" : "n") +
                          " diamonds=" + (p.diamonds_four ? "y" : "n");
                    return p.upper_semimodular && p.meet_semidistributive && p.join_distributive && a.ok() &&
                           p.diamonds_four && p.graded;
                  });
}

Outcome criterion_7() {
  std::ostringstream d;
  bool ok = true;
  for (int p = 1; p <= 7; ++p) {
    const Embedding e = default_embedding(p);
    const ReplayResult r = replay_counterexamples(p);
    ok = ok && r.matches_printed;
    d << "(" << pattern_name(p) << ") " << e.diagram << " " << (r.matches_printed ? "ok" : "MISMATCH");
    if (!r.matches_printed)
      for (const auto& s : r.steps)
        if (!s.ok) d << " [" << s.name << ": " << s.actual << " != " << s.expected << "]";
    d << (p < 7 ? ", " : "");
  }
  return {ok, d.str()};
}

// Pattern and, where the text fixes it, witness attributed to each orientation.
struct Expectation {
  int pattern;
  std::vector<Generator> witness;  // empty when only the case is named
};

Expectation expected_d4(const OrientedDiagram& o) {
  int out = 0;
  for (Generator v : {0, 2, 3}) out += o.points(1, v);
  return {out >= 2 ? 1 : out == 1 ? 3 : 4, {}};
}

Expectation expected_f4_h4(const OrientedDiagram& o, bool h4) {
  const bool a = o.points(0, 1), b = o.points(1, 2), c = o.points(2, 3);
  if ((!a && b) || (!b && c)) return {1, {}};  // s2 or s3 is a source of its two edges
  if (a && b && c) return h4 ? Expectation{6, {0, 1, 2, 3}} : Expectation{2, {3, 2, 1}};
  if (!a && !b && !c) return h4 ? Expectation{2, {1, 2, 3}} : Expectation{2, {0, 1, 2}};
  if (a && b && !c) return h4 ? Expectation{7, {0, 1, 2, 3}} : Expectation{5, {0, 1, 2, 3}};
  return h4 ? Expectation{2, {1, 2, 3}} : Expectation{5, {3, 2, 1, 0}};  // a && !b && !c
}

Outcome criterion_8() {
  std::ostringstream d;
  bool ok = true;
  for (const char* g : {"D4", "F4", "H4"}) {
    const ScanReport r = scan_conjecture(parse_diagram(g));
    std::size_t good = 0;
    for (const ScanRow& row : r.rows) {
      const Expectation e =
          std::string(g) == "D4" ? expected_d4(row.orientation) : expected_f4_h4(row.orientation, std::string(g) == "H4");
      bool row_ok = !row.distributive && row.match && row.match->pattern == e.pattern;
      if (!e.witness.empty()) row_ok = row_ok && matches_pattern(row.orientation, e.pattern, e.witness);
      if (row_ok)
        ++good;
      else
        d << g << " " << row.orientation.describe() << " expected (" << pattern_name(e.pattern) << "); ";
      ok = ok && row_ok;
    }
    d << g << " " << good << "/" << r.rows.size() << " non-distributive with the attributed case"
      << (std::string(g) == "H4" ? "" : ", ");
  }
  return {ok, d.str()};
}

Outcome criterion_9() {
  std::ostringstream d;
  bool ok = true;
  auto linear = [](int n) {
    Word w;
    for (int i = 0; i < n; ++i) w.push_back(i);
    return w;
  };
  for (auto [type, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}}) {
    const std::string name = std::string(1, type) + std::to_string(n);
    const auto L = BruhatLattice::build(GammaContext(CoxeterGroup::create(parse_diagram(name)), linear(n)));
    const FinitePoset roots = oracle::root_poset(type, n).as_poset();
    const BirkhoffReport b = birkhoff_analysis(L, &roots);
    const bool dist = lattice_properties(L).distributive;
    const bool row = dist && b.ideal_lattice_isomorphic && b.reference_isomorphic.value_or(false);
    ok = ok && row;
    d << name << (row ? " ok" : " FAILED") << " (" << b.join_irreducibles.size() << " join-irreducibles), ";
  }
  const auto H = BruhatLattice::build(GammaContext::parse("H3", "1,2,3"));
  const bool h3 = lattice_properties(H).distributive;
  ok = ok && h3;
  d << "H3 linear " << (h3 ? "distributive" : "NOT distributive");
  for (int k = 5; k <= 8; ++k) {
    const std::string name = "I2(" + std::to_string(k) + ")";
    for (const auto& g : {"1,2", "2,1"}) {
      const bool dist = lattice_properties(BruhatLattice::build(GammaContext::parse(name, g))).distributive;
      ok = ok && dist;
      if (!dist) d << ", " << name << " gamma=" << g << " NOT distributive";
    }
  }
  d << ", I2(5..8) both Coxeter elements " << (ok ? "distributive" : "checked");
  return {ok, d.str()};
}

Outcome criterion_10() {
  std::ostringstream d;
  bool ok = true;
  for (const char* g : {"A3", "A4", "B2", "B3", "H3", "D4", "F4", "H4", "I2(5)", "I2(6)", "I2(7)", "I2(8)"}) {
    const ScanReport r = scan_conjecture(parse_diagram(g));
    const bool row = r.sound() && r.consistent() && (std::string(g) != "B3" || r.distributive_count() == 2);
    ok = ok && row;
    d << g << " " << r.distributive_count() << "/" << r.rows.size() << (row ? "" : " INCONSISTENT") << " ";
  }
  d << "distributive; sound and consistent";
  return {ok, d.str()};
}

Outcome criterion_11() {
  std::ostringstream d;
  bool ok = true;
  std::size_t pairs = 0;
  for (const char* g : {"A3", "B2", "B3", "H3"})
    for (const auto& e : enumerate_coxeter_elements(parse_diagram(g))) {
      const auto L = BruhatLattice::build(GammaContext(CoxeterGroup::create(parse_diagram(g)), e.word));
      const auto order = oracle::naive_order(L);
      const int n = static_cast<int>(L.size());
      std::size_t bad = 0;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          bad += order[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] != L.leq(u, v);
          bad += oracle::naive_meet(L, order, u, v) != L.meet(u, v);
          ++pairs;
        }
      if (bad) {
        ok = false;
        d << g << " gamma=" << gamma_text(e.word) << ": " << bad << " mismatches; ";
      }
    }
  d << pairs << " pairs over every Coxeter element of A3, B2, B3, H3: order and meet agree with the subword oracle";
  return {ok, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expect_fail;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--expect-fail" && i + 1 < argc) {
      expect_fail.insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--expect-fail N]...\n";
      return 2;
    }
  }

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"A3 Hasse diagram reproduction", criterion_1},
      {"tC2 first seven ranks reproduction", criterion_2},
      {"sortable counts are W-Catalan numbers", criterion_3},
      {"SB labeling", criterion_4},
      {"Mobius range", criterion_5},
      {"join-distributivity", criterion_6},
      {"counterexample replays", criterion_7},
      {"D4, F4, H4 orientations", criterion_8},
      {"coincidental types", criterion_9},
      {"conjecture scan", criterion_10},
      {"oracle equivalence", criterion_11},
  };

  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << criteria[i].first << ": " << o.detail << " ["
              << std::fixed;
    std::cout.precision(2);
    std::cout << secs << "s]";
    if (expect_fail.count(id)) std::cout << (o.pass ? " (unexpected pass)" : " (expected failure)");
    std::cout << "\n";
    if (o.pass == static_cast<bool>(expect_fail.count(id))) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
