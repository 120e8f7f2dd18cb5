#include "sortlat/blattice.hpp"

#include "sortlat/errors.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <limits>
#include <numeric>
#include <tuple>

namespace sortlat {

BruhatLattice BruhatLattice::build(GammaContext ctx, std::optional<int> cap) {
  BruhatLattice lat(std::move(ctx), cap);
  lat.elements_ = enumerate_sortables(lat.ctx_, cap);
  std::sort(lat.elements_.begin(), lat.elements_.end(), [](const SortableElement& a, const SortableElement& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.sorting.positions < b.sorting.positions;
  });
  const std::size_t n = lat.elements_.size();
  lat.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = lat.elements_[i];
    if (e.length() != e.sorting.positions.size())
      throw InvariantViolation("length of " + lat.word(static_cast<int>(i)) + " differs from its number of positions");
    if (!lat.index_.emplace(e.sorting.positions, static_cast<int>(i)).second)
      throw InvariantViolation("duplicate alpha-set for " + lat.word(static_cast<int>(i)));
  }

  for (std::size_t v = 0; v < n; ++v)
    for (int p : lat.alpha(static_cast<int>(v)).to_vector()) {
      PositionSet below = lat.alpha(static_cast<int>(v));
      below.erase(p);
      if (auto u = lat.index_of(below))
        lat.covers_.push_back({*u, static_cast<int>(v), {p, lat.ctx_.slot_letter(p)}});
    }
  std::sort(lat.covers_.begin(), lat.covers_.end(),
            [](const Cover& a, const Cover& b) { return std::tie(a.lower, a.upper) < std::tie(b.lower, b.upper); });
  lat.up_.assign(n, {});
  lat.down_.assign(n, {});
  for (std::size_t e = 0; e < lat.covers_.size(); ++e) {
    lat.up_[static_cast<std::size_t>(lat.covers_[e].lower)].push_back(static_cast<int>(e));
    lat.down_[static_cast<std::size_t>(lat.covers_[e].upper)].push_back(static_cast<int>(e));
  }
  return lat;
}

std::optional<int> BruhatLattice::index_of(const PositionSet& alpha) const {
  auto it = index_.find(alpha);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> BruhatLattice::find(std::string_view w) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (word(static_cast<int>(i)) == w) return static_cast<int>(i);
  return std::nullopt;
}

int BruhatLattice::join(int u, int v) const {
  const PositionSet un = alpha(u) | alpha(v);
  if (auto idx = index_of(un)) return *idx;
  if (cap_ && static_cast<int>(un.size()) > *cap_)
    throw CapExceeded("join of " + word(u) + " and " + word(v) + " has length " + std::to_string(un.size()) +
                      " beyond the cap " + std::to_string(*cap_));
  throw InvariantViolation("union of the alpha-sets of " + word(u) + " and " + word(v) + " is not sortable");
}

int BruhatLattice::meet(int u, int v) const {
  const PositionSet common = alpha(u) & alpha(v);
  int cur = 0;
  while (true) {
    int next = -1;
    int best = INT_MAX;
    for (int e : up_edges(cur)) {
      const Cover& c = covers_[static_cast<std::size_t>(e)];
      if (c.label.position < best && common.contains(c.label.position)) {
        best = c.label.position;
        next = c.upper;
      }
    }
    if (next < 0) return cur;
    cur = next;
  }
}

const std::vector<Cover>& hasse(const BruhatLattice& lattice) { return lattice.covers(); }

LatticeTables lattice_tables(const BruhatLattice& lattice) {
  LatticeTables t;
  t.n = lattice.size();
  t.join.assign(t.n * t.n, -1);
  t.meet.assign(t.n * t.n, -1);
  for (std::size_t u = 0; u < t.n; ++u)
    for (std::size_t v = u; v < t.n; ++v) {
      const int a = static_cast<int>(u);
      const int b = static_cast<int>(v);
      int j = -1;
      try {
        j = lattice.join(a, b);
      } catch (const CapExceeded&) {
      }
      const int m = lattice.meet(a, b);
      t.join[u * t.n + v] = t.join[v * t.n + u] = j;
      t.meet[u * t.n + v] = t.meet[v * t.n + u] = m;
    }
  return t;
}

// ---------------------------------------------------------------------------
// Möbius function

MobiusTable::MobiusTable(const BruhatLattice& lattice) : n_(lattice.size()) {
  comparable_.assign(n_ * n_, false);
  values_.assign(n_ * n_, 0);
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u; v < n_; ++v)
      comparable_[u * n_ + v] = lattice.leq(static_cast<int>(u), static_cast<int>(v));

  // Elements are sorted by length, so everything strictly below v precedes it.
  for (std::size_t u = 0; u < n_; ++u) {
    values_[u * n_ + u] = 1;
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (!comparable_[u * n_ + v]) continue;
      int sum = 0;
      for (std::size_t z = u; z < v; ++z)
        if (comparable_[u * n_ + z] && comparable_[z * n_ + v]) sum += values_[u * n_ + z];
      values_[u * n_ + v] = -sum;
    }
  }
}

int MobiusTable::value(int u, int v) const {
  const auto a = static_cast<std::size_t>(u);
  const auto b = static_cast<std::size_t>(v);
  if (a >= n_ || b >= n_ || a > b || !comparable_[a * n_ + b]) throw InvalidArgument("mobius(u, v) requires u <= v");
  return values_[a * n_ + b];
}

std::map<int, std::size_t> MobiusTable::histogram() const {
  std::map<int, std::size_t> h;
  for (std::size_t i = 0; i < comparable_.size(); ++i)
    if (comparable_[i]) ++h[values_[i]];
  return h;
}

int mobius(const BruhatLattice& lattice, int u, int v) {
  if (!lattice.leq(u, v)) throw InvalidArgument("mobius(u, v) requires u <= v");
  std::map<int, int> mu{{u, 1}};
  for (int z = u + 1; z <= v; ++z) {
    if (!lattice.leq(u, z) || !lattice.leq(z, v)) continue;
    int sum = 0;
    for (const auto& [y, m] : mu)
      if (lattice.leq(y, z)) sum += m;
    mu[z] = -sum;
  }
  return mu.at(v);
}

// ---------------------------------------------------------------------------
// SB labelings

int letter_label(const Cover& c) { return c.label.letter; }

namespace {

class ChainWalker {
 public:
  ChainWalker(const BruhatLattice& lat, const CoverLabeling& labeling, int top, std::size_t limit)
      : lat_(lat), labeling_(labeling), top_(top), limit_(limit) {}

  // Calls visit(labels) for every saturated chain from `from` to top.
  template <class Visit>
  void walk(int from, Visit&& visit) {
    if (from == top_) {
      if (++count_ > limit_)
        throw LimitExceeded("more than " + std::to_string(limit_) + " saturated chains below " + lat_.word(top_));
      visit(labels_);
      return;
    }
    for (int e : lat_.up_edges(from)) {
      const Cover& c = lat_.covers()[static_cast<std::size_t>(e)];
      if (!lat_.leq(c.upper, top_)) continue;
      labels_.push_back(labeling_(c));
      walk(c.upper, visit);
      labels_.pop_back();
    }
  }

  std::size_t count() const { return count_; }

 private:
  const BruhatLattice& lat_;
  const CoverLabeling& labeling_;
  int top_;
  std::size_t limit_;
  std::size_t count_ = 0;
  std::vector<int> labels_;
};

}  // namespace

SbReport verify_sb(const BruhatLattice& lattice, const CoverLabeling& labeling, std::size_t chain_limit) {
  SbReport report;
  for (std::size_t p = 0; p < lattice.size(); ++p) {
    const auto& ups = lattice.up_edges(static_cast<int>(p));
    for (std::size_t a = 0; a < ups.size(); ++a)
      for (std::size_t b = a + 1; b < ups.size(); ++b) {
        const Cover& c1 = lattice.covers()[static_cast<std::size_t>(ups[a])];
        const Cover& c2 = lattice.covers()[static_cast<std::size_t>(ups[b])];
        ++report.diamonds;
        const int l1 = labeling(c1);
        const int l2 = labeling(c2);
        const int ip = static_cast<int>(p);
        if (l1 == l2)
          report.violations.push_back({ip, c1.upper, c2.upper, 1, "both upper covers carry label " + std::to_string(l1)});

        int top = -1;
        try {
          top = lattice.join(c1.upper, c2.upper);
        } catch (const CapExceeded&) {
          ++report.inconclusive;
          continue;
        }
        bool missing = false;
        bool extra = false;
        ChainWalker walker(lattice, labeling, top, chain_limit);
        walker.walk(ip, [&](const std::vector<int>& labels) {
          const bool has1 = std::find(labels.begin(), labels.end(), l1) != labels.end();
          const bool has2 = std::find(labels.begin(), labels.end(), l2) != labels.end();
          const bool other = std::any_of(labels.begin(), labels.end(), [&](int l) { return l != l1 && l != l2; });
          if ((!has1 || !has2) && !missing) {
            missing = true;
            report.violations.push_back({ip, c1.upper, c2.upper, 2, "a saturated chain misses a bottom label"});
          }
          if (other && !extra) {
            extra = true;
            report.violations.push_back({ip, c1.upper, c2.upper, 3, "a saturated chain uses a foreign label"});
          }
        });
        report.chains += walker.count();
      }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Lattice properties

LatticeProperties lattice_properties(const BruhatLattice& lattice) {
  return lattice_properties(lattice, lattice_tables(lattice));
}

LatticeProperties lattice_properties(const BruhatLattice& lattice, const LatticeTables& t) {
  if (lattice.cap()) throw InvalidArgument("lattice properties need an uncapped lattice");
  const int n = static_cast<int>(lattice.size());
  LatticeProperties r;

  r.graded = true;
  for (int i = 0; i < n; ++i)
    if (lattice.element(i).length() != lattice.rank_of(i) || (i > 0 && lattice.down_edges(i).empty())) r.graded = false;

  r.upper_semimodular = true;
  for (int p = 0; p < n && r.upper_semimodular; ++p)
    for (int q = p + 1; q < n; ++q) {
      const int m = t.m(p, q);
      if (!lattice.is_cover(m, p) || !lattice.is_cover(m, q)) continue;
      const int j = t.j(p, q);
      if (!lattice.is_cover(p, j) || !lattice.is_cover(q, j)) {
        r.upper_semimodular = false;
        break;
      }
    }

  r.meet_semidistributive = true;
  r.distributive = true;
  r.distributive_dual = true;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int s = 0; s < n; ++s) {
        const int pq = t.m(p, q);
        const int ps = t.m(p, s);
        const int qs = t.j(q, s);
        if (pq == ps && pq != t.m(p, qs)) r.meet_semidistributive = false;
        if (r.distributive && t.m(p, qs) != t.j(pq, ps)) {
          r.distributive = false;
          r.distributivity_witness = std::array<int, 3>{p, q, s};
        }
        if (t.j(p, t.m(q, s)) != t.m(t.j(p, q), t.j(p, s))) r.distributive_dual = false;
      }
  r.join_distributive = r.upper_semimodular && r.meet_semidistributive;

  r.diamonds_four = true;
  for (int p = 0; p < n && r.diamonds_four; ++p) {
    const auto& ups = lattice.up_edges(p);
    for (std::size_t a = 0; a < ups.size(); ++a)
      for (std::size_t b = a + 1; b < ups.size(); ++b) {
        const int top = t.j(lattice.covers()[static_cast<std::size_t>(ups[a])].upper,
                            lattice.covers()[static_cast<std::size_t>(ups[b])].upper);
        int size = 0;
        for (int z = p; z <= top; ++z)
          if (lattice.leq(p, z) && lattice.leq(z, top)) ++size;
        if (size != 4) r.diamonds_four = false;
      }
  }
  return r;
}

AntimatroidReport antimatroid_check(const BruhatLattice& lattice) {
  if (lattice.cap()) throw InvalidArgument("antimatroid check needs an uncapped lattice");
  AntimatroidReport r;
  auto note = [&](std::string s) {
    if (r.violations.size() < 10) r.violations.push_back(std::move(s));
  };
  const int n = static_cast<int>(lattice.size());
  r.contains_empty = lattice.index_of(PositionSet{}).has_value();
  if (!r.contains_empty) note("the empty set is not feasible");

  r.union_closed = true;
  r.exchange = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const PositionSet& X = lattice.alpha(x);
      const PositionSet& Y = lattice.alpha(y);
      if (x < y && !lattice.index_of(X | Y)) {
        r.union_closed = false;
        note("union of " + lattice.word(x) + " and " + lattice.word(y) + " is not feasible");
      }
      if (Y.is_subset_of(X)) continue;
      bool found = false;
      for (int p : (Y - X).to_vector()) {
        PositionSet grown = X;
        grown.insert(p);
        if (lattice.index_of(grown)) {
          found = true;
          break;
        }
      }
      if (!found) {
        r.exchange = false;
        note("no element of " + lattice.word(y) + " extends " + lattice.word(x));
      }
    }

  r.accessible = true;
  for (int x = 1; x < n; ++x) {
    bool found = false;
    for (int p : lattice.alpha(x).to_vector()) {
      PositionSet shrunk = lattice.alpha(x);
      shrunk.erase(p);
      if (lattice.index_of(shrunk)) {
        found = true;
        break;
      }
    }
    if (!found) {
      r.accessible = false;
      note(lattice.word(x) + " has no removable position");
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Birkhoff analysis

std::vector<std::uint64_t> order_ideals(const FinitePoset& poset, std::size_t limit) {
  const std::size_t n = poset.size();
  if (n > 64) throw InvalidArgument("order ideals are limited to posets with at most 64 elements");
  // Linear extension: sort by number of elements below.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::uint64_t> below(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && poset.leq[j][i]) below[i] |= std::uint64_t{1} << j;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return std::popcount(below[a]) < std::popcount(below[b]); });

  std::vector<std::uint64_t> out;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t k, std::uint64_t ideal) {
    if (k == n) {
      if (out.size() >= limit) throw LimitExceeded("more than " + std::to_string(limit) + " order ideals");
      out.push_back(ideal);
      return;
    }
    const std::size_t x = order[k];
    rec(k + 1, ideal);
    if ((below[x] & ~ideal) == 0) rec(k + 1, ideal | (std::uint64_t{1} << x));
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> order_ideals(const FinitePoset& poset) {
  return order_ideals(poset, std::numeric_limits<std::size_t>::max());
}

std::optional<std::vector<int>> find_isomorphism(const FinitePoset& a, const FinitePoset& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  auto signature = [](const FinitePoset& p, std::size_t i) {
    int down = 0, up = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
      down += p.leq[j][i] ? 1 : 0;
      up += p.leq[i][j] ? 1 : 0;
    }
    return std::pair{down, up};
  };
  std::vector<std::pair<int, int>> sa(n), sb(n);
  for (std::size_t i = 0; i < n; ++i) {
    sa[i] = signature(a, i);
    sb[i] = signature(b, i);
  }
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || sa[i] != sb[c]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        const auto mk = static_cast<std::size_t>(map[k]);
        ok = a.leq[i][k] == b.leq[c][mk] && a.leq[k][i] == b.leq[mk][c];
      }
      if (!ok) continue;
      map[i] = static_cast<int>(c);
      used[c] = true;
      if (extend(i + 1)) return true;
      used[c] = false;
    }
    map[i] = -1;
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

BirkhoffReport birkhoff_analysis(const BruhatLattice& lattice, const FinitePoset* reference) {
  BirkhoffReport r;
  const int n = static_cast<int>(lattice.size());
  for (int x = 0; x < n; ++x)
    if (lattice.down_edges(x).size() == 1) r.join_irreducibles.push_back(x);
  const std::size_t k = r.join_irreducibles.size();
  r.poset.leq.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    r.poset.labels.push_back(lattice.word(r.join_irreducibles[i]));
    for (std::size_t j = 0; j < k; ++j) r.poset.leq[i][j] = lattice.leq(r.join_irreducibles[i], r.join_irreducibles[j]);
  }
  if (reference) r.reference_isomorphic = find_isomorphism(r.poset, *reference).has_value();

  if (k > 64) return r;
  std::vector<std::uint64_t> ideals;
  try {
    ideals = order_ideals(r.poset, lattice.size() + 1);
  } catch (const LimitExceeded&) {
    r.ideal_count = lattice.size() + 1;
    return r;
  }
  r.ideal_count = ideals.size();

  std::vector<std::uint64_t> image(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    for (std::size_t i = 0; i < k; ++i)
      if (lattice.leq(r.join_irreducibles[i], x)) image[static_cast<std::size_t>(x)] |= std::uint64_t{1} << i;
  std::vector<std::uint64_t> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  bool ok = sorted == ideals;
  for (int x = 0; x < n && ok; ++x)
    for (int y = 0; y < n && ok; ++y) {
      const auto ix = image[static_cast<std::size_t>(x)];
      const auto iy = image[static_cast<std::size_t>(y)];
      ok = lattice.leq(x, y) == ((ix & ~iy) == 0);
    }
  r.ideal_lattice_isomorphic = ok;
  return r;
}

}  // namespace sortlat
