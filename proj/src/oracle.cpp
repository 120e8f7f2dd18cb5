#include "sortlat/oracle.hpp"

#include "sortlat/errors.hpp"

#include <algorithm>
#include <functional>

namespace sortlat::oracle {

namespace {

// Subsequence search on explicit matrices; usable for infinite groups.
bool subword_matrix(const CoxeterGroup& group, const Word& word, const GroupElement& target) {
  const std::size_t k = target.length();
  std::function<bool(std::size_t, const GroupElement&)> dfs = [&](std::size_t pos, const GroupElement& g) {
    const std::size_t taken = g.length();
    if (taken == k) return g == target;
    if (word.size() - pos < k - taken) return false;
    GroupElement next = group.right_multiply(g, word[pos]);
    if (next.length() == taken + 1 && dfs(pos + 1, next)) return true;
    return dfs(pos + 1, g);
  };
  return dfs(0, group.identity());
}

// Same search on Cayley table indices, with failed states memoized.
bool subword_table(const GroupTable& table, const Word& word, int target) {
  const std::size_t k = table.length(target);
  const std::size_t size = table.elements.size();
  std::vector<bool> failed((word.size() + 1) * size, false);
  std::function<bool(std::size_t, int)> dfs = [&](std::size_t pos, int g) {
    const std::size_t taken = table.length(g);
    if (taken == k) return g == target;
    if (word.size() - pos < k - taken) return false;
    const std::size_t key = pos * size + static_cast<std::size_t>(g);
    if (failed[key]) return false;
    const int next = table.right[static_cast<std::size_t>(g)][static_cast<std::size_t>(word[pos])];
    if (table.length(next) == taken + 1 && dfs(pos + 1, next)) return true;
    if (dfs(pos + 1, g)) return true;
    failed[key] = true;
    return false;
  };
  return dfs(0, 0);
}

int table_index(const GroupTable& table, const Word& word) {
  int g = 0;
  for (Generator s : word) g = table.right[static_cast<std::size_t>(g)][static_cast<std::size_t>(s)];
  return g;
}

}  // namespace

bool naive_bruhat_leq(const CoxeterGroup& group, const GroupElement& u, const GroupElement& v) {
  if (u.length() > v.length()) return false;
  return subword_matrix(group, v.word(), u);
}

std::vector<Word> all_reduced_words(const CoxeterGroup& group, const GroupElement& w) {
  if (w.is_identity()) return {Word{}};
  std::vector<Word> out;
  for (int s = 0; s < group.rank(); ++s) {
    if (!group.is_right_descent(w, s)) continue;
    for (Word prefix : all_reduced_words(group, group.right_multiply(w, s))) {
      prefix.push_back(s);
      out.push_back(std::move(prefix));
    }
  }
  return out;
}

bool bruhat_leq_all_words(const CoxeterGroup& group, const GroupElement& u, const GroupElement& v) {
  if (u.length() > v.length()) return false;
  bool any = false;
  for (const Word& word : all_reduced_words(group, v)) {
    const bool found = subword_matrix(group, word, u);
    if (found) any = true;
  }
  return any;
}

std::vector<NaiveSortable> naive_sortables(const GroupTable& table, const Word& gamma_word) {
  const std::size_t n = gamma_word.size();
  std::vector<NaiveSortable> out;
  for (std::size_t w = 0; w < table.elements.size(); ++w) {
    int u = static_cast<int>(w);
    std::vector<int> positions;
    const std::size_t bound = table.length(u) * n;
    for (std::size_t p = 1; table.length(u) > 0; ++p) {
      if (p > bound) throw InvariantViolation("oracle greedy ran past its block bound");
      const Generator s = gamma_word[(p - 1) % n];
      const int su = table.left[static_cast<std::size_t>(u)][static_cast<std::size_t>(s)];
      if (table.length(su) < table.length(u)) {
        positions.push_back(static_cast<int>(p));
        u = su;
      }
    }
    std::vector<std::vector<Generator>> blocks;
    for (int p : positions) {
      const auto b = static_cast<std::size_t>(p - 1) / n;
      if (blocks.size() <= b) blocks.resize(b + 1);
      blocks[b].push_back(gamma_word[static_cast<std::size_t>(p - 1) % n]);
    }
    bool nested = true;
    for (std::size_t b = 1; b < blocks.size() && nested; ++b)
      for (Generator s : blocks[b])
        if (std::find(blocks[b - 1].begin(), blocks[b - 1].end(), s) == blocks[b - 1].end()) nested = false;
    if (!nested) continue;
    std::string word;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (b) word += '|';
      for (Generator s : blocks[b]) word += "s" + std::to_string(s + 1);
    }
    out.push_back({static_cast<int>(w), std::move(positions), word.empty() ? "ε" : word});
  }
  return out;
}

std::vector<NaiveSortable> naive_sortables(const CoxeterDiagram& diagram, const Word& gamma_word, std::size_t order_limit) {
  const CoxeterGroup group(diagram);
  return naive_sortables(group.enumerate(order_limit), gamma_word);
}

std::vector<int> exhaustive_sorting_positions(const GroupTable& table, const Word& gamma_word, int w) {
  const std::size_t n = gamma_word.size();
  const std::size_t slots = table.length(w) * n;
  const std::size_t size = table.elements.size();
  std::vector<bool> failed((slots + 2) * size, false);
  std::vector<int> chosen;
  std::function<bool(std::size_t, int)> dfs = [&](std::size_t p, int g) {
    if (g == w) return true;
    if (p > slots) return false;
    const std::size_t key = p * size + static_cast<std::size_t>(g);
    if (failed[key]) return false;
    const int next = table.right[static_cast<std::size_t>(g)][static_cast<std::size_t>(gamma_word[(p - 1) % n])];
    if (table.length(next) == table.length(g) + 1) {
      chosen.push_back(static_cast<int>(p));
      if (dfs(p + 1, next)) return true;
      chosen.pop_back();
    }
    if (dfs(p + 1, g)) return true;
    failed[key] = true;
    return false;
  };
  if (!dfs(1, 0)) throw InvariantViolation("no reduced subword of the truncated word spells the element");
  return chosen;
}

std::vector<std::vector<bool>> naive_order(const BruhatLattice& lattice) {
  const std::size_t n = lattice.size();
  std::vector<std::vector<bool>> order(n, std::vector<bool>(n, false));
  const CoxeterGroup& group = lattice.context().group();
  if (group.is_finite()) {
    const GroupTable table = group.enumerate(100'000);
    std::vector<int> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = table_index(table, lattice.element(static_cast<int>(i)).element.word());
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        order[u][v] = table.length(idx[u]) <= table.length(idx[v]) &&
                      subword_table(table, lattice.element(static_cast<int>(v)).element.word(), idx[u]);
  } else {
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        order[u][v] = naive_bruhat_leq(group, lattice.element(static_cast<int>(u)).element,
                                       lattice.element(static_cast<int>(v)).element);
  }
  return order;
}

int naive_meet(const BruhatLattice& lattice, const std::vector<std::vector<bool>>& order, int u, int v) {
  const std::size_t n = lattice.size();
  std::vector<std::size_t> lower;
  for (std::size_t z = 0; z < n; ++z)
    if (order[z][static_cast<std::size_t>(u)] && order[z][static_cast<std::size_t>(v)]) lower.push_back(z);
  for (std::size_t m : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](std::size_t z) { return order[z][m]; })) return static_cast<int>(m);
  throw InvariantViolation("no greatest common lower bound of " + lattice.word(u) + " and " + lattice.word(v));
}

int naive_meet(const BruhatLattice& lattice, int u, int v) { return naive_meet(lattice, naive_order(lattice), u, v); }

FinitePoset RootPoset::as_poset() const {
  FinitePoset p;
  const std::size_t k = roots.size();
  p.leq.assign(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a) {
    std::string label;
    for (std::size_t i = 0; i < roots[a].size(); ++i) label += (i ? "," : "") + std::to_string(roots[a][i]);
    p.labels.push_back(label);
    for (std::size_t b = 0; b < k; ++b) {
      bool le = true;
      for (std::size_t i = 0; i < roots[a].size(); ++i) le = le && roots[a][i] <= roots[b][i];
      p.leq[a][b] = le;
    }
  }
  return p;
}

RootPoset root_poset(char type, int n) {
  RootPoset r;
  auto add = [&](int i, int j, int two_from) {  // ones on [i, j), twos on [two_from, n)
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    for (int k = i; k < j; ++k) v[static_cast<std::size_t>(k)] = 1;
    for (int k = two_from; k < n; ++k) v[static_cast<std::size_t>(k)] = 2;
    r.roots.push_back(std::move(v));
  };
  if (type == 'A') {
    if (n < 1) throw InvalidArgument("A_n needs n >= 1");
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) add(i, j, n);
  } else if (type == 'B') {
    if (n < 2) throw InvalidArgument("B_n needs n >= 2");
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) add(i, j, n);  // e_i - e_j
      for (int j = i + 1; j < n; ++j) add(i, j, j);  // e_i + e_j
      add(i, n, n);                                  // e_i
    }
  } else {
    throw InvalidArgument("root posets are provided for types A and B only");
  }
  return r;
}

std::size_t count_ideals(const FinitePoset& poset) {
  const std::size_t k = poset.size();
  if (k > 24) throw InvalidArgument("subset ideal counting is limited to 24 elements");
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
    bool ideal = true;
    for (std::size_t b = 0; b < k && ideal; ++b) {
      if (((mask >> b) & 1U) == 0) continue;
      for (std::size_t a = 0; a < k && ideal; ++a)
        if (poset.leq[a][b] && ((mask >> a) & 1U) == 0) ideal = false;
    }
    if (ideal) ++count;
  }
  return count;
}

namespace {

struct Arc {
  int from, to;
  Label min;
};

// Patterns transcribed independently of the main matcher: {vertex count, arcs}.
const std::vector<std::pair<int, std::vector<Arc>>>& pattern_table() {
  static const std::vector<std::pair<int, std::vector<Arc>>> t = {
      {3, {{2, 1, 3}, {2, 3, 3}}},
      {3, {{2, 1, 3}, {3, 2, 4}}},
      {4, {{1, 2, 3}, {4, 2, 3}, {2, 3, 3}}},
      {4, {{1, 2, 3}, {4, 2, 3}, {3, 2, 3}}},
      {4, {{1, 2, 3}, {2, 3, 4}, {4, 3, 3}}},
      {4, {{1, 2, 3}, {2, 3, 3}, {3, 4, 5}}},
      {4, {{1, 2, 3}, {2, 3, 3}, {4, 3, 5}}},
  };
  return t;
}

}  // namespace

std::optional<PatternMatch> brute_force_forbidden(const OrientedDiagram& oriented) {
  const auto& d = oriented.diagram();
  const int n = d.rank();
  for (std::size_t pid = 0; pid < pattern_table().size(); ++pid) {
    const auto& [k, arcs] = pattern_table()[pid];
    std::vector<Generator> w(static_cast<std::size_t>(k), 0);
    std::optional<PatternMatch> hit;
    std::function<void(int)> all = [&](int t) {
      if (hit) return;
      if (t == k) {
        for (int a = 0; a < k; ++a)
          for (int b = a + 1; b < k; ++b)
            if (w[static_cast<std::size_t>(a)] == w[static_cast<std::size_t>(b)]) return;
        std::vector<Label> labels;
        int edges = 0;
        for (const Arc& arc : arcs) {
          const Generator f = w[static_cast<std::size_t>(arc.from - 1)];
          const Generator g = w[static_cast<std::size_t>(arc.to - 1)];
          if (!oriented.points(f, g) || d.label(f, g) < arc.min) return;
          labels.push_back(d.label(f, g));
        }
        for (int a = 0; a < k; ++a)
          for (int b = a + 1; b < k; ++b)
            if (d.is_edge(w[static_cast<std::size_t>(a)], w[static_cast<std::size_t>(b)])) ++edges;
        if (edges != static_cast<int>(arcs.size())) return;
        hit = PatternMatch{static_cast<int>(pid) + 1, w, labels};
        return;
      }
      for (int v = 0; v < n && !hit; ++v) {
        w[static_cast<std::size_t>(t)] = v;
        all(t + 1);
      }
    };
    all(0);
    if (hit) return hit;
  }
  return std::nullopt;
}

}  // namespace sortlat::oracle
