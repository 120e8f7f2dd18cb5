#pragma once

// gamma-sorting words and gamma-sortable elements.
//
// Slot p >= 1 of the half-infinite word gamma^inf holds gamma_word[(p-1) mod n];
// slot (i-1)n + j is the j-th letter of block i.

#include "sortlat/coxgroup.hpp"
#include "sortlat/position_set.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sortlat {

class GammaContext {
 public:
  /// `gamma_word` must be a permutation of the generators.
  GammaContext(std::shared_ptr<const CoxeterGroup> group, Word gamma_word);
  static GammaContext parse(std::string_view diagram, std::string_view gamma);

  const CoxeterGroup& group() const { return *group_; }
  const std::shared_ptr<const CoxeterGroup>& group_ptr() const { return group_; }
  const CoxeterDiagram& diagram() const { return group_->diagram(); }
  int rank() const { return group_->rank(); }
  const Word& gamma_word() const { return gamma_word_; }

  Generator slot_letter(int position) const;
  /// Offset (0-based) of generator s inside gamma_word.
  int offset_of(Generator s) const { return offset_[static_cast<std::size_t>(s)]; }
  /// Slot holding s in block i (1-based).
  int slot(int block, Generator s) const { return (block - 1) * rank() + offset_of(s) + 1; }

 private:
  std::shared_ptr<const CoxeterGroup> group_;
  Word gamma_word_;
  std::vector<int> offset_;
};

struct SortingWord {
  std::vector<GeneratorSet> blocks;
  PositionSet positions;

  Word letters(const GammaContext& ctx) const;
  bool nested() const;
  std::size_t length() const { return positions.size(); }
};

/// Blocks joined by '|', letters inside a block in gamma order; "ε" when empty.
std::string format_sorting_word(const GammaContext& ctx, const SortingWord& w);

/// Sorting word whose filled positions are `alpha`.
SortingWord sorting_word_from_positions(const GammaContext& ctx, const PositionSet& alpha);

struct SortableElement {
  GroupElement element;
  SortingWord sorting;

  std::size_t length() const { return element.length(); }
};

SortingWord gamma_sorting_word(const GammaContext& ctx, const GroupElement& w);
bool is_sortable(const GammaContext& ctx, const GroupElement& w);
const PositionSet& alpha(const SortableElement& w);

/// All gamma-sortable elements, of length <= cap when given. Throws
/// CapRequired for infinite groups without a cap and InvariantViolation when a
/// candidate word disagrees with the greedy sorting word of its product.
std::vector<SortableElement> enumerate_sortables(const GammaContext& ctx, std::optional<int> cap = std::nullopt);

struct ParabolicRestriction {
  GammaContext ctx;
  std::vector<Generator> parent_generator;  // local index -> parent generator
};

/// Standard parabolic subgroup on J with gamma restricted to J.
ParabolicRestriction parabolic_restriction(const GammaContext& ctx, std::vector<Generator> J);

/// Re-numbers a restricted alpha-set in the parent's slot numbering.
PositionSet embed_alpha(const GammaContext& parent, const ParabolicRestriction& restriction, const PositionSet& alpha);

}  // namespace sortlat
