#include "sortlat/sortable.hpp"

#include "sortlat/errors.hpp"

#include <algorithm>

namespace sortlat {

GammaContext::GammaContext(std::shared_ptr<const CoxeterGroup> group, Word gamma_word)
    : group_(std::move(group)), gamma_word_(std::move(gamma_word)) {
  if (!group_) throw InvalidArgument("gamma context needs a group");
  const int n = group_->rank();
  if (static_cast<int>(gamma_word_.size()) != n)
    throw InvalidArgument("gamma word must list each of the " + std::to_string(n) + " generators exactly once");
  offset_.assign(static_cast<std::size_t>(n), -1);
  for (int j = 0; j < n; ++j) {
    const Generator s = gamma_word_[static_cast<std::size_t>(j)];
    group_->check_generator(s);
    if (offset_[static_cast<std::size_t>(s)] >= 0)
      throw InvalidArgument("gamma word repeats " + format_generator(s));
    offset_[static_cast<std::size_t>(s)] = j;
  }
}

GammaContext GammaContext::parse(std::string_view diagram, std::string_view gamma) {
  auto group = CoxeterGroup::create(parse_diagram(diagram));
  Word word = parse_word(gamma, group->rank());
  return GammaContext(std::move(group), std::move(word));
}

Generator GammaContext::slot_letter(int position) const {
  if (position < 1) throw InvalidArgument("slot positions start at 1");
  return gamma_word_[static_cast<std::size_t>((position - 1) % rank())];
}

Word SortingWord::letters(const GammaContext& ctx) const {
  Word out;
  for (int p : positions.to_vector()) out.push_back(ctx.slot_letter(p));
  return out;
}

bool SortingWord::nested() const {
  for (std::size_t i = 1; i < blocks.size(); ++i)
    if ((blocks[i] & ~blocks[i - 1]) != 0) return false;
  return true;
}

std::string format_sorting_word(const GammaContext& ctx, const SortingWord& w) {
  if (w.blocks.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < w.blocks.size(); ++i) {
    if (i > 0) out += '|';
    if (w.blocks[i] == 0) out += "ε";
    for (Generator s : ctx.gamma_word())
      if (contains(w.blocks[i], s)) out += format_generator(s);
  }
  return out;
}

SortingWord sorting_word_from_positions(const GammaContext& ctx, const PositionSet& alpha) {
  SortingWord w;
  w.positions = alpha;
  const int n = ctx.rank();
  for (int p : alpha.to_vector()) {
    const auto block = static_cast<std::size_t>((p - 1) / n);
    if (block >= w.blocks.size()) w.blocks.resize(block + 1, 0);
    w.blocks[block] = with(w.blocks[block], ctx.slot_letter(p));
  }
  return w;
}

SortingWord gamma_sorting_word(const GammaContext& ctx, const GroupElement& w) {
  const CoxeterGroup& g = ctx.group();
  FieldMatrix inv = w.inverse_action();
  std::size_t remaining = w.length();
  const int bound = static_cast<int>(remaining) * ctx.rank();
  PositionSet alpha;
  for (int p = 1; remaining > 0; ++p) {
    if (p > bound)
      throw InvariantViolation("sorting word of " + format_word(w.word()) + " does not fit in " +
                               std::to_string(w.length()) + " blocks");
    const Generator s = ctx.slot_letter(p);
    if (g.column_sign(inv, s) < 0) {
      g.right_apply(inv, s);
      alpha.insert(p);
      --remaining;
    }
  }
  return sorting_word_from_positions(ctx, alpha);
}

bool is_sortable(const GammaContext& ctx, const GroupElement& w) { return gamma_sorting_word(ctx, w).nested(); }

const PositionSet& alpha(const SortableElement& w) { return w.sorting.positions; }

namespace {

class SortableSearch {
 public:
  SortableSearch(const GammaContext& ctx, std::optional<int> cap) : ctx_(ctx), cap_(cap) {}

  std::vector<SortableElement> run() {
    SortableElement root{ctx_.group().identity(), SortingWord{}};
    visit(root, 0);
    return std::move(out_);
  }

 private:
  void visit(const SortableElement& node, int last) {
    out_.push_back(node);
    if (cap_ && static_cast<int>(node.length()) >= *cap_) return;
    const int n = ctx_.rank();
    const int top = static_cast<int>(node.sorting.blocks.size());
    const int stop = (top + 1) * n;
    for (int q = last + 1; q <= stop; ++q) {
      const int block = (q - 1) / n + 1;
      const Generator s = ctx_.slot_letter(q);
      if (block >= 2 && !contains(node.sorting.blocks[static_cast<std::size_t>(block - 2)], s)) continue;
      if (ctx_.group().column_sign(node.element.action(), s) < 0) continue;

      SortableElement child{ctx_.group().right_multiply(node.element, s), node.sorting};
      child.sorting.positions.insert(q);
      if (static_cast<int>(child.sorting.blocks.size()) < block) child.sorting.blocks.resize(static_cast<std::size_t>(block), 0);
      child.sorting.blocks.back() = with(child.sorting.blocks.back(), s);

      const SortingWord check = gamma_sorting_word(ctx_, child.element);
      if (!(check.positions == child.sorting.positions))
        throw InvariantViolation("nested reduced word " + format_sorting_word(ctx_, child.sorting) +
                                 " is not the sorting word of its product (" + format_sorting_word(ctx_, check) + ")");
      visit(child, q);
    }
  }

  const GammaContext& ctx_;
  std::optional<int> cap_;
  std::vector<SortableElement> out_;
};

}  // namespace

std::vector<SortableElement> enumerate_sortables(const GammaContext& ctx, std::optional<int> cap) {
  if (cap && *cap < 0) throw InvalidArgument("length cap must be nonnegative");
  if (!cap && !ctx.group().is_finite())
    throw CapRequired("a length cap is required for the infinite group " + ctx.diagram().name());
  return SortableSearch(ctx, cap).run();
}

ParabolicRestriction parabolic_restriction(const GammaContext& ctx, std::vector<Generator> J) {
  if (J.empty()) throw InvalidArgument("parabolic restriction needs a nonempty generator set");
  std::sort(J.begin(), J.end());
  if (std::adjacent_find(J.begin(), J.end()) != J.end()) throw InvalidArgument("parabolic restriction: repeated generator");
  for (auto s : J) ctx.group().check_generator(s);

  std::vector<int> local(static_cast<std::size_t>(ctx.rank()), -1);
  for (std::size_t i = 0; i < J.size(); ++i) local[static_cast<std::size_t>(J[i])] = static_cast<int>(i);
  Word gamma;
  for (Generator s : ctx.gamma_word())
    if (local[static_cast<std::size_t>(s)] >= 0) gamma.push_back(local[static_cast<std::size_t>(s)]);

  auto group = CoxeterGroup::create(ctx.diagram().induced(J));
  return ParabolicRestriction{GammaContext(std::move(group), std::move(gamma)), std::move(J)};
}

PositionSet embed_alpha(const GammaContext& parent, const ParabolicRestriction& restriction, const PositionSet& alpha) {
  const int k = restriction.ctx.rank();
  PositionSet out;
  for (int p : alpha.to_vector()) {
    const int block = (p - 1) / k + 1;
    const Generator s = restriction.parent_generator[static_cast<std::size_t>(restriction.ctx.slot_letter(p))];
    out.insert(parent.slot(block, s));
  }
  return out;
}

}  // namespace sortlat
