#include "sortlat/orient.hpp"

#include "sortlat/errors.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace sortlat {

OrientedDiagram::OrientedDiagram(CoxeterDiagram diagram, std::vector<Arrow> arrows)
    : diagram_(std::move(diagram)), arrows_(std::move(arrows)) {
  const int n = diagram_.rank();
  auto key = [](const Arrow& a) { return std::pair{std::min(a.from, a.to), std::max(a.from, a.to)}; };
  std::sort(arrows_.begin(), arrows_.end(), [&](const Arrow& a, const Arrow& b) { return key(a) < key(b); });
  std::vector<std::pair<Generator, Generator>> seen;
  for (const auto& a : arrows_) {
    if (a.from < 0 || a.to < 0 || a.from >= n || a.to >= n || !diagram_.is_edge(a.from, a.to))
      throw InvalidArgument("arrow " + format_generator(a.from) + "→" + format_generator(a.to) + " is not a diagram edge");
    seen.push_back(key(a));
  }
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw InvalidArgument("an edge is oriented twice");
  if (seen != diagram_.edges()) throw InvalidArgument("every diagram edge needs exactly one direction");
  if (static_cast<int>(canonical_word().size()) != n) throw InvalidArgument("orientation has a directed cycle");
}

bool OrientedDiagram::points(Generator i, Generator j) const {
  return std::any_of(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.from == i && a.to == j; });
}

Word OrientedDiagram::canonical_word() const {
  const int n = diagram_.rank();
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  for (const auto& a : arrows_) ++indegree[static_cast<std::size_t>(a.to)];
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  Word out;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v)
      if (!done[static_cast<std::size_t>(v)] && indegree[static_cast<std::size_t>(v)] == 0) pick = v;
    if (pick < 0) break;
    done[static_cast<std::size_t>(pick)] = true;
    out.push_back(pick);
    for (const auto& a : arrows_)
      if (a.from == pick) --indegree[static_cast<std::size_t>(a.to)];
  }
  return out;
}

std::string OrientedDiagram::describe() const {
  if (arrows_.empty()) return "(no edges)";
  std::string out;
  for (const auto& a : arrows_) {
    if (!out.empty()) out += ' ';
    if (a.from < a.to)
      out += format_generator(a.from) + "→" + format_generator(a.to);
    else
      out += format_generator(a.to) + "←" + format_generator(a.from);
  }
  return out;
}

bool operator==(const OrientedDiagram& a, const OrientedDiagram& b) {
  if (!(a.diagram_ == b.diagram_) || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i)
    if (a.arrows_[i].from != b.arrows_[i].from || a.arrows_[i].to != b.arrows_[i].to) return false;
  return true;
}

OrientedDiagram orientation_from_word(const CoxeterDiagram& diagram, std::span<const Generator> word) {
  const int n = diagram.rank();
  std::vector<int> at(static_cast<std::size_t>(n), -1);
  if (static_cast<int>(word.size()) != n) throw InvalidArgument("a Coxeter element word uses every generator once");
  for (std::size_t k = 0; k < word.size(); ++k) {
    const Generator s = word[k];
    if (s < 0 || s >= n || at[static_cast<std::size_t>(s)] >= 0)
      throw InvalidArgument("a Coxeter element word uses every generator once");
    at[static_cast<std::size_t>(s)] = static_cast<int>(k);
  }
  std::vector<Arrow> arrows;
  for (auto [i, j] : diagram.edges())
    arrows.push_back(at[static_cast<std::size_t>(i)] < at[static_cast<std::size_t>(j)] ? Arrow{i, j} : Arrow{j, i});
  return OrientedDiagram(diagram, std::move(arrows));
}

OrientedDiagram orientation_from_word(const GammaContext& ctx) {
  return orientation_from_word(ctx.diagram(), ctx.gamma_word());
}

std::vector<CoxeterElementEntry> enumerate_coxeter_elements(const CoxeterDiagram& diagram) {
  const auto edges = diagram.edges();
  if (edges.size() > 30) throw LimitExceeded("too many diagram edges to enumerate orientations");
  std::vector<CoxeterElementEntry> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::vector<Arrow> arrows;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [i, j] = edges[e];
      arrows.push_back(((mask >> e) & 1U) != 0 ? Arrow{j, i} : Arrow{i, j});
    }
    try {
      OrientedDiagram o(diagram, std::move(arrows));
      Word w = o.canonical_word();
      out.push_back({std::move(o), std::move(w)});
    } catch (const InvalidArgument&) {
      // cyclic
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.word < b.word; });
  return out;
}

// ---------------------------------------------------------------------------
// Patterns

namespace {

struct PatternEdge {
  int from;
  int to;
  Label min_label;
};

struct PatternSpec {
  int size;
  std::vector<PatternEdge> edges;
};

// Slots are 0-based: slot k holds i_{k+1}.
const std::array<PatternSpec, 7>& patterns() {
  static const std::array<PatternSpec, 7> table{{
      {3, {{1, 0, 3}, {1, 2, 3}}},
      {3, {{1, 0, 3}, {2, 1, 4}}},
      {4, {{0, 1, 3}, {3, 1, 3}, {1, 2, 3}}},
      {4, {{0, 1, 3}, {3, 1, 3}, {2, 1, 3}}},
      {4, {{0, 1, 3}, {1, 2, 4}, {3, 2, 3}}},
      {4, {{0, 1, 3}, {1, 2, 3}, {2, 3, 5}}},
      {4, {{0, 1, 3}, {1, 2, 3}, {3, 2, 5}}},
  }};
  return table;
}

const PatternSpec& spec(int pattern) {
  if (pattern < 1 || pattern > 7) throw InvalidArgument("pattern ids run from 1 to 7");
  return patterns()[static_cast<std::size_t>(pattern - 1)];
}

const PatternEdge* edge_between(const PatternSpec& p, int a, int b) {
  for (const auto& e : p.edges)
    if ((e.from == a && e.to == b) || (e.from == b && e.to == a)) return &e;
  return nullptr;
}

// Constraints between slot t and every earlier slot.
bool consistent_slot(const OrientedDiagram& o, const PatternSpec& p, std::span<const Generator> w, int t) {
  const auto& d = o.diagram();
  for (int u = 0; u < t; ++u) {
    const Generator a = w[static_cast<std::size_t>(u)];
    const Generator b = w[static_cast<std::size_t>(t)];
    if (a == b) return false;
    const PatternEdge* e = edge_between(p, u, t);
    if (!e) {
      if (d.is_edge(a, b)) return false;
      continue;
    }
    const Generator from = w[static_cast<std::size_t>(e->from)];
    const Generator to = w[static_cast<std::size_t>(e->to)];
    if (!o.points(from, to) || d.label(from, to) < e->min_label) return false;
  }
  return true;
}

PatternMatch make_match(const OrientedDiagram& o, int pattern, std::vector<Generator> witness) {
  PatternMatch m{pattern, std::move(witness), {}};
  for (const auto& e : spec(pattern).edges)
    m.edge_labels.push_back(o.diagram().label(m.witness[static_cast<std::size_t>(e.from)], m.witness[static_cast<std::size_t>(e.to)]));
  return m;
}

}  // namespace

std::string pattern_name(int pattern) {
  static const char* names[] = {"i", "ii", "iii", "iv", "v", "vi", "vii"};
  if (pattern < 1 || pattern > 7) throw InvalidArgument("pattern ids run from 1 to 7");
  return names[pattern - 1];
}

bool matches_pattern(const OrientedDiagram& oriented, int pattern, std::span<const Generator> witness) {
  const PatternSpec& p = spec(pattern);
  if (static_cast<int>(witness.size()) != p.size) return false;
  for (auto s : witness)
    if (s < 0 || s >= oriented.diagram().rank()) return false;
  for (int t = 1; t < p.size; ++t)
    if (!consistent_slot(oriented, p, witness, t)) return false;
  return true;
}

std::optional<PatternMatch> find_forbidden(const OrientedDiagram& oriented) {
  const int n = oriented.diagram().rank();
  for (int pattern = 1; pattern <= 7; ++pattern) {
    const PatternSpec& p = spec(pattern);
    if (p.size > n) continue;
    std::vector<Generator> w(static_cast<std::size_t>(p.size), -1);
    // Candidates for slot t: neighbours of an earlier slot joined to t, else every vertex.
    auto candidates = [&](int t) {
      for (int u = 0; u < t; ++u)
        if (edge_between(p, u, t)) return oriented.diagram().neighbours(w[static_cast<std::size_t>(u)]);
      std::vector<Generator> all(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
      return all;
    };
    auto search = [&](auto&& self, int t) -> bool {
      if (t == p.size) return true;
      for (Generator v : candidates(t)) {
        w[static_cast<std::size_t>(t)] = v;
        if (consistent_slot(oriented, p, w, t) && self(self, t + 1)) return true;
      }
      return false;
    };
    if (search(search, 0)) return make_match(oriented, pattern, w);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Counterexample replays

namespace {

using Blocks = std::vector<std::vector<int>>;  // letters are pattern slots 1..4

Blocks rep(std::vector<int> block, int times, Blocks tail = {}) {
  Blocks out(static_cast<std::size_t>(times), block);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

struct CaseSpec {
  Blocks x, y, z, y_join_z, lhs, x_meet_y, x_meet_z, rhs;
};

const CaseSpec& case_spec(int pattern) {
  static const std::array<CaseSpec, 7> cases{{
      {{{2, 1}, {2}}, {{2, 1, 3}}, {{2, 3}, {2}}, {{2, 1, 3}, {2}}, {{2, 1}, {2}}, {{2, 1}}, {{2}}, {{2, 1}}},
      {{{2, 1}, {2}}, {{3, 2, 1}}, {{3, 2}, {3, 2}}, {{3, 2, 1}, {3, 2}}, {{2, 1}, {2}}, {{2, 1}}, {{2}}, {{2, 1}}},
      {{{4, 2, 3}, {2}},
       {{1, 4, 2, 3}},
       {{1, 4, 2}, {1, 4, 2}},
       {{1, 4, 2, 3}, {1, 4, 2}},
       {{4, 2, 3}, {2}},
       {{4, 2, 3}},
       {{4, 2}},
       {{4, 2, 3}}},
      {{{1, 3, 2}, {1, 3, 2}},
       {{1, 4, 2}, {1, 4, 2}},
       {{3, 4, 2}, {3, 4, 2}},
       {{1, 3, 4, 2}, {1, 3, 4, 2}},
       {{1, 3, 2}, {1, 3, 2}},
       {{1, 2}, {1}},
       {{3, 2}, {3}},
       {{1, 3, 2}, {1, 3}}},
      {{{2, 4, 3}, {2, 4, 3}, {2}},
       {{4, 3}, {4}},
       {{1, 2, 3}, {1, 2, 3}, {1, 2}},
       {{1, 2, 4, 3}, {1, 2, 4, 3}, {1, 2}},
       {{2, 4, 3}, {2, 4, 3}, {2}},
       {{4, 3}, {4}},
       {{2, 3}, {2, 3}},
       {{2, 4, 3}, {2, 4, 3}}},
      {rep({2, 3, 4}, 4, {{2, 3}}),
       rep({2, 3, 4}, 3, {{2, 3}, {2}}),
       rep({1, 2, 3, 4}, 4, {{3}}),
       rep({1, 2, 3, 4}, 4, {{2, 3}}),
       rep({2, 3, 4}, 4, {{2, 3}}),
       rep({2, 3, 4}, 3, {{2, 3}, {2}}),
       rep({2, 3, 4}, 4),
       rep({2, 3, 4}, 4, {{2}})},
      {rep({2, 4, 3}, 5),
       rep({2, 4, 3}, 4, {{2}}),
       rep({1, 2, 4, 3}, 4, {{4, 3}}),
       rep({1, 2, 4, 3}, 4, {{2, 4, 3}}),
       rep({2, 4, 3}, 5),
       rep({2, 4, 3}, 4, {{2}}),
       rep({2, 4, 3}, 4, {{4}}),
       rep({2, 4, 3}, 4, {{2, 4}})},
  }};
  if (pattern < 1 || pattern > 7) throw InvalidArgument("pattern ids run from 1 to 7");
  return cases[static_cast<std::size_t>(pattern - 1)];
}

PositionSet positions_of(const GammaContext& ctx, const Blocks& blocks, std::span<const Generator> witness) {
  PositionSet alpha;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int slot : blocks[b]) alpha.insert(ctx.slot(static_cast<int>(b) + 1, witness[static_cast<std::size_t>(slot - 1)]));
  return alpha;
}

}  // namespace

ReplayResult replay_counterexample(int pattern, const BruhatLattice& lattice, std::span<const Generator> witness) {
  const GammaContext& ctx = lattice.context();
  const OrientedDiagram oriented = orientation_from_word(ctx);
  if (!matches_pattern(oriented, pattern, witness))
    throw InvalidArgument("the orientation " + oriented.describe() + " does not contain pattern (" + pattern_name(pattern) +
                          ") at the given witness");
  const CaseSpec& c = case_spec(pattern);
  ReplayResult r;
  r.pattern = pattern;
  r.witness.assign(witness.begin(), witness.end());

  auto expected_word = [&](const Blocks& b) {
    return format_sorting_word(ctx, sorting_word_from_positions(ctx, positions_of(ctx, b, witness)));
  };
  auto record = [&](const std::string& name, const Blocks& expected, std::optional<int> actual) {
    const std::string want = expected_word(expected);
    const std::string got = actual ? lattice.word(*actual) : "(not sortable)";
    const bool ok = actual && lattice.alpha(*actual) == positions_of(ctx, expected, witness);
    r.steps.push_back({name, want, got, ok});
    return actual;
  };
  auto lookup = [&](const Blocks& b) { return lattice.index_of(positions_of(ctx, b, witness)); };

  const auto x = record("x", c.x, lookup(c.x));
  const auto y = record("y", c.y, lookup(c.y));
  const auto z = record("z", c.z, lookup(c.z));
  if (!x || !y || !z) return r;

  const int yz = *record("y ∨ z", c.y_join_z, lattice.join(*y, *z));
  const int lhs = *record("x ∧ (y ∨ z)", c.lhs, lattice.meet(*x, yz));
  const int xy = *record("x ∧ y", c.x_meet_y, lattice.meet(*x, *y));
  const int xz = *record("x ∧ z", c.x_meet_z, lattice.meet(*x, *z));
  const int rhs = *record("(x ∧ y) ∨ (x ∧ z)", c.rhs, lattice.join(xy, xz));
  r.lhs = lattice.word(lhs);
  r.rhs = lattice.word(rhs);
  r.matches_printed = lhs != rhs && std::all_of(r.steps.begin(), r.steps.end(), [](const ReplayStep& s) { return s.ok; });
  return r;
}

Embedding default_embedding(int pattern) {
  switch (pattern) {
    case 1: return {"A3", "2,1,3", {0, 1, 2}};
    case 2: return {"B3", "3,2,1", {0, 1, 2}};
    case 3: return {"D4", "1,3,2,4", {0, 1, 3, 2}};
    case 4: return {"D4", "1,3,4,2", {0, 1, 2, 3}};
    case 5: return {"F4", "1,2,4,3", {0, 1, 2, 3}};
    case 6: return {"H4", "1,2,3,4", {0, 1, 2, 3}};
    case 7: return {"H4", "1,2,4,3", {0, 1, 2, 3}};
    default: throw InvalidArgument("pattern ids run from 1 to 7");
  }
}

ReplayResult replay_counterexamples(int pattern) {
  const Embedding e = default_embedding(pattern);
  const auto lattice = BruhatLattice::build(GammaContext::parse(e.diagram, e.gamma));
  return replay_counterexample(pattern, lattice, e.witness);
}

// ---------------------------------------------------------------------------
// Scan

bool ScanReport::sound() const {
  return std::all_of(rows.begin(), rows.end(), [](const ScanRow& r) { return r.sound(); });
}

bool ScanReport::consistent() const {
  return std::all_of(rows.begin(), rows.end(), [](const ScanRow& r) { return r.consistent(); });
}

std::size_t ScanReport::distributive_count() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ScanRow& r) { return r.distributive; }));
}

ScanReport scan_conjecture(const CoxeterDiagram& diagram, std::size_t order_limit) {
  auto group = CoxeterGroup::create(diagram);
  if (!group->is_finite()) throw InvalidArgument("the conjecture scan needs a finite Coxeter group");
  if (!group->order(order_limit))
    throw LimitExceeded("group order exceeds the scan limit of " + std::to_string(order_limit));
  ScanReport report;
  report.group = diagram.name();
  for (auto& entry : enumerate_coxeter_elements(diagram)) {
    const auto lattice = BruhatLattice::build(GammaContext(group, entry.word));
    const bool distributive = lattice_properties(lattice).distributive;
    auto match = find_forbidden(entry.orientation);
    report.rows.push_back({std::move(entry.orientation), std::move(entry.word), std::move(match), distributive, lattice.size()});
  }
  return report;
}

std::string format_scan_table(const ScanReport& report) {
  std::vector<std::array<std::string, 4>> cells;
  cells.push_back({"orientation", "pattern", "distributive", "consistent"});
  for (const auto& row : report.rows) {
    std::string pattern = "—";
    if (row.match) {
      pattern = "(" + pattern_name(row.match->pattern) + ") ";
      for (std::size_t k = 0; k < row.match->witness.size(); ++k)
        pattern += (k ? "," : "") + format_generator(row.match->witness[k]);
    }
    cells.push_back({row.orientation.describe(), pattern, row.distributive ? "y" : "n", row.consistent() ? "y" : "n"});
  }
  // Width in code points so the arrows line up.
  auto width = [](const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) { return (ch & 0xC0) != 0x80; }));
  };
  std::array<std::size_t, 4> w{};
  for (const auto& row : cells)
    for (std::size_t c = 0; c < 4; ++c) w[c] = std::max(w[c], width(row[c]));
  std::ostringstream out;
  out << report.group << '\n';
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < 4; ++c) {
      out << row[c];
      if (c + 1 < 4) out << std::string(w[c] - width(row[c]) + 2, ' ');
    }
    out << '\n';
  }
  out << "distributive: " << report.distributive_count() << "/" << report.rows.size()
      << ", sound: " << (report.sound() ? "yes" : "no") << ", consistent: " << (report.consistent() ? "yes" : "no") << '\n';
  return out.str();
}

}  // namespace sortlat
