#pragma once

// Brute-force reference implementations for tests. Deliberately naive and kept
// apart from the library's own algorithms: Cayley-table greedy sorting, subword
// Bruhat order, exhaustive meets, subset-based ideal counting and an
// all-injections pattern matcher.

#include "sortlat/blattice.hpp"
#include "sortlat/orient.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sortlat::oracle {

/// u <= v in Bruhat order: some subsequence of v's stored reduced word is a
/// reduced word for u.
bool naive_bruhat_leq(const CoxeterGroup& group, const GroupElement& u, const GroupElement& v);

/// Every reduced word of w.
std::vector<Word> all_reduced_words(const CoxeterGroup& group, const GroupElement& w);

/// Same as naive_bruhat_leq but tries every reduced word of v.
bool bruhat_leq_all_words(const CoxeterGroup& group, const GroupElement& u, const GroupElement& v);

struct NaiveSortable {
  int element;                 // index into the group table
  std::vector<int> positions;  // filled slots
  std::string word;            // blocks joined by '|'
};

/// Sortable elements found by filtering the whole Cayley table.
std::vector<NaiveSortable> naive_sortables(const GroupTable& table, const Word& gamma_word);
std::vector<NaiveSortable> naive_sortables(const CoxeterDiagram& diagram, const Word& gamma_word,
                                           std::size_t order_limit = 100'000);

/// Lexicographically first reduced subword of gamma^inf (first l(w) blocks)
/// spelling table element w, by memoized exhaustive search.
std::vector<int> exhaustive_sorting_positions(const GroupTable& table, const Word& gamma_word, int w);

/// Bruhat order on the lattice elements via naive_bruhat_leq.
std::vector<std::vector<bool>> naive_order(const BruhatLattice& lattice);

/// Maximum of the common lower bounds under `order`; throws InvariantViolation
/// when it does not exist.
int naive_meet(const BruhatLattice& lattice, const std::vector<std::vector<bool>>& order, int u, int v);
int naive_meet(const BruhatLattice& lattice, int u, int v);

struct RootPoset {
  std::vector<std::vector<int>> roots;  // coordinates in the simple-root basis
  FinitePoset as_poset() const;
};

/// Positive roots of A_n or B_n ('A' / 'B').
RootPoset root_poset(char type, int n);

/// Number of order ideals by testing every subset.
std::size_t count_ideals(const FinitePoset& poset);

/// First match by (pattern, lexicographic witness), trying every injective map.
std::optional<PatternMatch> brute_force_forbidden(const OrientedDiagram& oriented);

}  // namespace sortlat::oracle
