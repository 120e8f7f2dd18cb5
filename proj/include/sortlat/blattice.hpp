#pragma once

// The Bruhat lattice B_gamma of gamma-sortable elements, ordered by inclusion
// of filled-position sets.

#include "sortlat/sortable.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace sortlat {

struct EdgeLabel {
  int position;      // the single slot in alpha(v) \ alpha(u)
  Generator letter;  // slot letter of that position
};

struct Cover {
  int lower;
  int upper;
  EdgeLabel label;
};

class BruhatLattice {
 public:
  /// Builds B_gamma, truncated to length <= cap when given.
  static BruhatLattice build(GammaContext ctx, std::optional<int> cap = std::nullopt);

  const GammaContext& context() const { return ctx_; }
  std::optional<int> cap() const { return cap_; }
  std::size_t size() const { return elements_.size(); }

  /// Elements sorted by (length, alpha lexicographic); index 0 is the identity.
  const std::vector<SortableElement>& elements() const { return elements_; }
  const SortableElement& element(int i) const { return elements_.at(static_cast<std::size_t>(i)); }
  const PositionSet& alpha(int i) const { return element(i).sorting.positions; }
  std::size_t rank_of(int i) const { return alpha(i).size(); }
  std::string word(int i) const { return format_sorting_word(ctx_, element(i).sorting); }

  std::optional<int> index_of(const PositionSet& alpha) const;
  /// Index of the element with the given sorting word ("s1s2|s1", "ε").
  std::optional<int> find(std::string_view word) const;

  bool leq(int u, int v) const { return alpha(u).is_subset_of(alpha(v)); }
  bool is_cover(int u, int v) const { return rank_of(v) == rank_of(u) + 1 && leq(u, v); }
  /// alpha-union. Throws CapExceeded when the union lies beyond the cap.
  int join(int u, int v) const;
  /// Greatest lower bound, grown greedily inside alpha(u) & alpha(v).
  int meet(int u, int v) const;

  const std::vector<Cover>& covers() const { return covers_; }
  /// Indices into covers() of the edges above / below element u.
  const std::vector<int>& up_edges(int u) const { return up_[static_cast<std::size_t>(u)]; }
  const std::vector<int>& down_edges(int u) const { return down_[static_cast<std::size_t>(u)]; }

 private:
  BruhatLattice(GammaContext ctx, std::optional<int> cap) : ctx_(std::move(ctx)), cap_(cap) {}

  GammaContext ctx_;
  std::optional<int> cap_;
  std::vector<SortableElement> elements_;
  std::unordered_map<PositionSet, int, PositionSetHash> index_;
  std::vector<Cover> covers_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
};

/// Cover relations with labels, in (lower, upper) index order.
const std::vector<Cover>& hasse(const BruhatLattice& lattice);

/// Dense join/meet tables; join entries are -1 where the cap intervenes.
struct LatticeTables {
  std::size_t n = 0;
  std::vector<int> join;
  std::vector<int> meet;
  int j(int u, int v) const { return join[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)]; }
  int m(int u, int v) const { return meet[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)]; }
};
LatticeTables lattice_tables(const BruhatLattice& lattice);

class MobiusTable {
 public:
  explicit MobiusTable(const BruhatLattice& lattice);
  /// mu(u, v); requires u <= v.
  int value(int u, int v) const;
  /// Counts of mu over all comparable pairs, keyed by value.
  std::map<int, std::size_t> histogram() const;

 private:
  std::size_t n_;
  std::vector<bool> comparable_;
  std::vector<int> values_;
};

int mobius(const BruhatLattice& lattice, int u, int v);

using CoverLabeling = std::function<int(const Cover&)>;
/// The letter labeling b_gamma.
int letter_label(const Cover& c);

struct SbViolation {
  int p, p1, p2;
  int axiom;  // 1, 2 or 3
  std::string detail;
};

struct SbReport {
  std::size_t diamonds = 0;      // pairs of distinct upper covers examined
  std::size_t chains = 0;        // saturated chains enumerated
  std::size_t inconclusive = 0;  // pairs whose join lies beyond the cap
  std::vector<SbViolation> violations;
  bool ok() const { return violations.empty(); }
};

inline constexpr std::size_t kDefaultChainLimit = 1'000'000;

/// Checks the SB axioms for `labeling` (b_gamma by default). Throws
/// LimitExceeded when one interval has more than `chain_limit` chains.
SbReport verify_sb(const BruhatLattice& lattice, const CoverLabeling& labeling = letter_label,
                   std::size_t chain_limit = kDefaultChainLimit);

struct LatticeProperties {
  bool graded = false;
  bool upper_semimodular = false;
  bool meet_semidistributive = false;
  bool join_distributive = false;
  bool distributive = false;      // p ^ (q v r) = (p ^ q) v (p ^ r)
  bool distributive_dual = false; // p v (q ^ r) = (p v q) ^ (p v r)
  bool diamonds_four = false;     // |[p, p1 v p2]| = 4 for all p <. p1, p2
  std::optional<std::array<int, 3>> distributivity_witness;
};

/// Exhaustive checks on an uncapped lattice.
LatticeProperties lattice_properties(const BruhatLattice& lattice);
LatticeProperties lattice_properties(const BruhatLattice& lattice, const LatticeTables& tables);

struct AntimatroidReport {
  bool contains_empty = false;
  bool union_closed = false;
  bool accessible = false;
  bool exchange = false;
  std::vector<std::string> violations;  // first few, human readable
  bool ok() const { return contains_empty && union_closed && accessible && exchange; }
};

AntimatroidReport antimatroid_check(const BruhatLattice& lattice);

/// Finite poset as a reflexive order matrix.
struct FinitePoset {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq;
  std::size_t size() const { return labels.size(); }
};

/// Order ideals as sorted bitmasks (at most 64 elements). The second form
/// throws LimitExceeded once more than `limit` ideals exist.
std::vector<std::uint64_t> order_ideals(const FinitePoset& poset);
std::vector<std::uint64_t> order_ideals(const FinitePoset& poset, std::size_t limit);

/// Order isomorphism a -> b by backtracking, if any.
std::optional<std::vector<int>> find_isomorphism(const FinitePoset& a, const FinitePoset& b);

struct BirkhoffReport {
  std::vector<int> join_irreducibles;  // lattice indices
  FinitePoset poset;
  std::size_t ideal_count = 0;
  /// x -> {j <= x} is an isomorphism onto the ideal lattice.
  bool ideal_lattice_isomorphic = false;
  /// Set when a reference poset was supplied.
  std::optional<bool> reference_isomorphic;
};

BirkhoffReport birkhoff_analysis(const BruhatLattice& lattice, const FinitePoset* reference = nullptr);

}  // namespace sortlat
