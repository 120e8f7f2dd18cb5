#pragma once

// Coxeter diagrams and the geometric representation of Coxeter groups.
//
// Generators are numbered from 0 internally and printed as s1, s2, ...
// The geometric representation acts on the simple-root basis alpha_1..alpha_n
// through s_i(v) = v - 2B(alpha_i, v) alpha_i with B_ij = -cos(pi/m_ij).
// Every entry of 2B lies in Z[c], so matrices stay integral over the field.

#include "sortlat/exactreal.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sortlat {

using Generator = int;
using Word = std::vector<Generator>;
using Label = unsigned;
inline constexpr Label kInfinity = std::numeric_limits<Label>::max();
inline constexpr int kMaxRank = 64;

/// Bitmask of generators (bit i = s_{i+1}).
using GeneratorSet = std::uint64_t;

inline bool contains(GeneratorSet set, Generator s) { return ((set >> s) & 1U) != 0; }
inline GeneratorSet with(GeneratorSet set, Generator s) { return set | (GeneratorSet{1} << s); }

/// "s1s2s3" (no separators); "ε" for the empty word.
std::string format_word(std::span<const Generator> word);
std::string format_generator(Generator s);

class CoxeterDiagram {
 public:
  /// Rank-n diagram with all off-diagonal labels 2 (no edges).
  explicit CoxeterDiagram(int rank);

  int rank() const { return rank_; }
  Label label(Generator i, Generator j) const;
  /// Sets m_ij = m_ji. Requires i != j and m >= 2 (kInfinity allowed).
  void set_label(Generator i, Generator j, Label m);

  bool is_edge(Generator i, Generator j) const { return i != j && label(i, j) >= 3; }
  /// Unordered edges (i < j) with label >= 3, sorted.
  std::vector<std::pair<Generator, Generator>> edges() const;
  std::vector<Generator> neighbours(Generator i) const;
  bool has_infinite_label() const;

  /// lcm of the finite labels >= 3 (1 when there are none).
  unsigned field_index() const;

  /// Diagram induced on J (relabelled 0..|J|-1 in the given order).
  CoxeterDiagram induced(std::span<const Generator> J) const;

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  friend bool operator==(const CoxeterDiagram& a, const CoxeterDiagram& b) {
    return a.rank_ == b.rank_ && a.labels_ == b.labels_;
  }

 private:
  int rank_;
  std::vector<Label> labels_;
  std::string name_;
};

/// Named finite and affine types with the vertex numbering of the standard
/// table: A n, B n (label 4 on s_{n-1}s_n), D n (s_{n-2} branches to s_{n-1}
/// and s_n), E6/E7/E8 (branch s_3 - s_n), F4 (4 on s2s3), H3 (5 on s2s3),
/// H4 (5 on s3s4), I2(k), and tC2 (s1 -4- s2 -4- s3).
CoxeterDiagram named_diagram(std::string_view family, int n, unsigned k = 0);

/// Parses `A3`, `B4`, `I2(7)`, `tC2`, or `rank=3; 1-2:3; 2-3:5`
/// (whitespace-insensitive, labels may be `inf`, `i-j` alone means label 3).
CoxeterDiagram parse_diagram(std::string_view text);

/// Comma-separated 1-based generator list, e.g. "1,3,2".
Word parse_word(std::string_view text, int rank);

/// n x n matrix over one field, row-major.
class FieldMatrix {
 public:
  FieldMatrix(const RealCycloField& field, int n);
  static FieldMatrix identity(const RealCycloField& field, int n);

  int size() const { return n_; }
  FieldElement& at(int i, int j) { return entries_[static_cast<std::size_t>(i * n_ + j)]; }
  const FieldElement& at(int i, int j) const { return entries_[static_cast<std::size_t>(i * n_ + j)]; }

  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) { return a.entries_ == b.entries_; }
  std::size_t hash() const;

 private:
  int n_;
  std::vector<FieldElement> entries_;
};

/// Coordinates in the simple-root basis.
using RootVector = std::vector<FieldElement>;

class GroupElement {
 public:
  const FieldMatrix& action() const { return action_; }
  const FieldMatrix& inverse_action() const { return inverse_; }
  const Word& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.action_ == b.action_; }
  std::size_t hash() const { return action_.hash(); }

 private:
  friend class CoxeterGroup;
  GroupElement(FieldMatrix action, FieldMatrix inverse, Word word)
      : action_(std::move(action)), inverse_(std::move(inverse)), word_(std::move(word)) {}

  FieldMatrix action_;
  FieldMatrix inverse_;
  Word word_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};

class CoxeterGroup;

/// Full multiplication table of a finite group, elements in BFS (length) order.
struct GroupTable {
  std::vector<GroupElement> elements;
  std::vector<std::vector<int>> left;   // left[w][s]  = index of s*w
  std::vector<std::vector<int>> right;  // right[w][s] = index of w*s
  std::size_t length(int w) const { return elements[static_cast<std::size_t>(w)].length(); }
};

class CoxeterGroup {
 public:
  explicit CoxeterGroup(CoxeterDiagram diagram);
  static std::shared_ptr<const CoxeterGroup> create(CoxeterDiagram diagram);

  const CoxeterDiagram& diagram() const { return diagram_; }
  int rank() const { return diagram_.rank(); }
  const RealCycloField& field() const { return *field_; }

  /// B_ij = -cos(pi/m_ij), -1 for m_ij = infinity.
  const FieldMatrix& bilinear_form() const { return form_; }
  /// True iff the bilinear form is positive definite (finite group).
  bool is_finite() const { return finite_; }

  GroupElement identity() const;
  GroupElement generator(Generator s) const;
  GroupElement left_multiply(Generator s, const GroupElement& w) const;
  GroupElement right_multiply(const GroupElement& w, Generator s) const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& w) const;
  /// Exact reduction of an arbitrary word via the exchange condition.
  GroupElement reduce_word(std::span<const Generator> word) const;
  /// Product of all generators in the given order; requires a permutation.
  GroupElement coxeter_element(std::span<const Generator> order) const;

  GeneratorSet left_descents(const GroupElement& w) const;
  GeneratorSet right_descents(const GroupElement& w) const;
  bool is_left_descent(Generator s, const GroupElement& w) const;
  bool is_right_descent(const GroupElement& w, Generator s) const;

  RootVector simple_root(Generator s) const;
  /// s(v) in place.
  void reflect(Generator s, RootVector& v) const;
  RootVector apply(const GroupElement& w, const RootVector& v) const;
  /// +1 for a positive root, -1 for a negative one. Throws InvariantViolation
  /// for zero or mixed-sign vectors.
  int root_sign(const RootVector& v) const;

  /// M <- M * s (column operation). Cheap building block for callers that
  /// track only one of the two matrices.
  void right_apply(FieldMatrix& m, Generator s) const;
  /// M <- s * M (row operation).
  void left_apply(FieldMatrix& m, Generator s) const;
  /// Sign of the root stored in column j of m.
  int column_sign(const FieldMatrix& m, int j) const;

  /// BFS over the Cayley graph. Throws LimitExceeded past `limit` elements.
  GroupTable enumerate(std::size_t limit) const;
  /// Number of elements, or nullopt if it exceeds `limit`.
  std::optional<std::size_t> order(std::size_t limit) const;

  void check_generator(Generator s) const;

 private:
  struct Neighbour {
    Generator other;
    FieldElement two_b;  // 2 B(alpha_s, alpha_other)
  };

  CoxeterDiagram diagram_;
  std::shared_ptr<const RealCycloField> field_;
  FieldMatrix form_;
  std::vector<std::vector<Neighbour>> neighbours_;
  bool finite_ = false;
};

}  // namespace sortlat
