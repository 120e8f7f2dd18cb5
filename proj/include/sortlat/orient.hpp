#pragma once

// Coxeter elements as acyclic orientations of the diagram, the forbidden
// oriented subgraphs (i)-(vii), counterexample replays and the distributivity
// scan over all Coxeter elements of a finite group.

#include "sortlat/blattice.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sortlat {

struct Arrow {
  Generator from;
  Generator to;
};

class OrientedDiagram {
 public:
  /// Every edge (m >= 3) must be directed exactly once; the result must be acyclic.
  OrientedDiagram(CoxeterDiagram diagram, std::vector<Arrow> arrows);

  const CoxeterDiagram& diagram() const { return diagram_; }
  /// Sorted by the unordered edge {min, max}.
  const std::vector<Arrow>& arrows() const { return arrows_; }
  /// True iff the edge {i, j} exists and points i -> j.
  bool points(Generator i, Generator j) const;
  /// Linear extension choosing the smallest available generator first.
  Word canonical_word() const;
  /// "s1→s2 s3→s2"; "(no edges)" for an edgeless diagram.
  std::string describe() const;

  friend bool operator==(const OrientedDiagram& a, const OrientedDiagram& b);

 private:
  CoxeterDiagram diagram_;
  std::vector<Arrow> arrows_;
};

OrientedDiagram orientation_from_word(const GammaContext& ctx);
OrientedDiagram orientation_from_word(const CoxeterDiagram& diagram, std::span<const Generator> word);

struct CoxeterElementEntry {
  OrientedDiagram orientation;
  Word word;
};

/// One entry per acyclic orientation, sorted by canonical word.
std::vector<CoxeterElementEntry> enumerate_coxeter_elements(const CoxeterDiagram& diagram);

/// Roman numeral of a pattern id 1..7.
std::string pattern_name(int pattern);

struct PatternMatch {
  int pattern;                     // 1..7
  std::vector<Generator> witness;  // i_1, i_2, ...
  std::vector<Label> edge_labels;  // labels of the pattern edges, in pattern order
};

/// True iff the witness induces pattern `pattern` in `oriented`.
bool matches_pattern(const OrientedDiagram& oriented, int pattern, std::span<const Generator> witness);

/// First match by (pattern id, lexicographic witness).
std::optional<PatternMatch> find_forbidden(const OrientedDiagram& oriented);

struct ReplayStep {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok;
};

struct ReplayResult {
  int pattern = 0;
  std::vector<Generator> witness;
  std::vector<ReplayStep> steps;
  std::string lhs;  // x ^ (y v z)
  std::string rhs;  // (x ^ y) v (x ^ z)
  /// All intermediate words equal the printed ones and lhs != rhs.
  bool matches_printed = false;
};

/// Builds x, y, z of the given case at `witness` inside `lattice` and evaluates
/// both sides of the meet-distributive law. Throws InvalidArgument when the
/// lattice's orientation does not contain the pattern at the witness.
ReplayResult replay_counterexample(int pattern, const BruhatLattice& lattice, std::span<const Generator> witness);

struct Embedding {
  std::string diagram;
  std::string gamma;
  std::vector<Generator> witness;  // 0-based
};

/// A concrete group and Coxeter element containing each pattern.
Embedding default_embedding(int pattern);

/// Replays a case in its default embedding.
ReplayResult replay_counterexamples(int pattern);

struct ScanRow {
  OrientedDiagram orientation;
  Word word;
  std::optional<PatternMatch> match;
  bool distributive;
  std::size_t element_count;
  /// Pattern present iff not distributive.
  bool consistent() const { return match.has_value() != distributive; }
  /// Pattern present implies not distributive.
  bool sound() const { return !match || !distributive; }
};

struct ScanReport {
  std::string group;
  std::vector<ScanRow> rows;
  bool sound() const;
  bool consistent() const;
  std::size_t distributive_count() const;
};

inline constexpr std::size_t kDefaultScanOrderLimit = 100'000;

/// Builds B_gamma for every Coxeter element. Throws LimitExceeded when the group
/// order exceeds `order_limit` and InvalidArgument for infinite groups.
ScanReport scan_conjecture(const CoxeterDiagram& diagram, std::size_t order_limit = kDefaultScanOrderLimit);

/// Columns: orientation, pattern, distributive, consistent.
std::string format_scan_table(const ScanReport& report);

}  // namespace sortlat
