#include "sortlat/coxgroup.hpp"

#include "sortlat/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <regex>
#include <unordered_map>

namespace sortlat {

std::string format_generator(Generator s) { return "s" + std::to_string(s + 1); }

std::string format_word(std::span<const Generator> word) {
  if (word.empty()) return "ε";
  std::string out;
  for (auto s : word) out += format_generator(s);
  return out;
}

// ---------------------------------------------------------------------------
// CoxeterDiagram

CoxeterDiagram::CoxeterDiagram(int rank) : rank_(rank) {
  if (rank < 1 || rank > kMaxRank)
    throw InvalidArgument("Coxeter diagram rank must be between 1 and " + std::to_string(kMaxRank));
  labels_.assign(static_cast<std::size_t>(rank * rank), 2);
  for (int i = 0; i < rank; ++i) labels_[static_cast<std::size_t>(i * rank + i)] = 1;
}

Label CoxeterDiagram::label(Generator i, Generator j) const {
  if (i < 0 || j < 0 || i >= rank_ || j >= rank_) throw InvalidArgument("generator index out of range");
  return labels_[static_cast<std::size_t>(i * rank_ + j)];
}

void CoxeterDiagram::set_label(Generator i, Generator j, Label m) {
  if (i < 0 || j < 0 || i >= rank_ || j >= rank_) throw InvalidArgument("generator index out of range");
  if (i == j) throw InvalidArgument("diagonal labels are fixed to 1");
  if (m < 2) throw InvalidArgument("off-diagonal labels must be at least 2");
  labels_[static_cast<std::size_t>(i * rank_ + j)] = m;
  labels_[static_cast<std::size_t>(j * rank_ + i)] = m;
}

std::vector<std::pair<Generator, Generator>> CoxeterDiagram::edges() const {
  std::vector<std::pair<Generator, Generator>> out;
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j)
      if (is_edge(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<Generator> CoxeterDiagram::neighbours(Generator i) const {
  std::vector<Generator> out;
  for (int j = 0; j < rank_; ++j)
    if (is_edge(i, j)) out.push_back(j);
  return out;
}

bool CoxeterDiagram::has_infinite_label() const {
  return std::find(labels_.begin(), labels_.end(), kInfinity) != labels_.end();
}

unsigned CoxeterDiagram::field_index() const {
  unsigned N = 1;
  for (auto m : labels_)
    if (m >= 3 && m != kInfinity) N = std::lcm(N, m);
  return N;
}

CoxeterDiagram CoxeterDiagram::induced(std::span<const Generator> J) const {
  if (J.empty()) throw InvalidArgument("induced diagram needs a nonempty generator set");
  CoxeterDiagram out(static_cast<int>(J.size()));
  for (std::size_t a = 0; a < J.size(); ++a)
    for (std::size_t b = a + 1; b < J.size(); ++b) {
      if (J[a] == J[b]) throw InvalidArgument("induced diagram: repeated generator");
      out.set_label(static_cast<int>(a), static_cast<int>(b), label(J[a], J[b]));
    }
  return out;
}

CoxeterDiagram named_diagram(std::string_view family, int n, unsigned k) {
  auto path = [](CoxeterDiagram& d, int upto) {
    for (int i = 0; i + 1 < upto; ++i) d.set_label(i, i + 1, 3);
  };
  auto bad = [&](const std::string& why) {
    return ParseError("invalid diagram " + std::string(family) + std::to_string(n) + ": " + why);
  };
  if (family == "A") {
    if (n < 1) throw bad("A_n needs n >= 1");
    CoxeterDiagram d(n);
    path(d, n);
    d.set_name("A" + std::to_string(n));
    return d;
  }
  if (family == "B") {
    if (n < 2) throw bad("B_n needs n >= 2");
    CoxeterDiagram d(n);
    path(d, n);
    d.set_label(n - 2, n - 1, 4);
    d.set_name("B" + std::to_string(n));
    return d;
  }
  if (family == "D") {
    if (n < 4) throw bad("D_n needs n >= 4");
    CoxeterDiagram d(n);
    path(d, n - 1);
    d.set_label(n - 3, n - 1, 3);
    d.set_name("D" + std::to_string(n));
    return d;
  }
  if (family == "E") {
    if (n < 6 || n > 8) throw bad("E_n needs n in {6,7,8}");
    CoxeterDiagram d(n);
    path(d, n - 1);
    d.set_label(2, n - 1, 3);
    d.set_name("E" + std::to_string(n));
    return d;
  }
  if (family == "F") {
    if (n != 4) throw bad("only F4 exists");
    CoxeterDiagram d(4);
    path(d, 4);
    d.set_label(1, 2, 4);
    d.set_name("F4");
    return d;
  }
  if (family == "H") {
    if (n != 3 && n != 4) throw bad("only H3 and H4 exist");
    CoxeterDiagram d(n);
    path(d, n);
    d.set_label(n - 2, n - 1, 5);
    d.set_name("H" + std::to_string(n));
    return d;
  }
  if (family == "I") {
    if (n != 2 || k < 2) throw ParseError("invalid diagram: I2(k) needs k >= 2");
    CoxeterDiagram d(2);
    d.set_label(0, 1, k);
    d.set_name("I2(" + std::to_string(k) + ")");
    return d;
  }
  if (family == "tC") {
    if (n != 2) throw bad("only tC2 is supported");
    CoxeterDiagram d(3);
    d.set_label(0, 1, 4);
    d.set_label(1, 2, 4);
    d.set_name("tC2");
    return d;
  }
  throw ParseError("unknown Coxeter type '" + std::string(family) + "'");
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

long parse_int(const std::string& s, const std::string& what) {
  long value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || s.empty()) throw ParseError("expected an integer for " + what + ", got '" + s + "'");
  return value;
}

}  // namespace

CoxeterDiagram parse_diagram(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty diagram specification");
  std::smatch m;
  static const std::regex named(R"(^(A|B|D|E|F|H)(\d+)$)");
  static const std::regex dihedral(R"(^I2\((\d+)\)$)");
  if (std::regex_match(s, m, named)) return named_diagram(m[1].str(), static_cast<int>(parse_int(m[2].str(), "rank")));
  if (std::regex_match(s, m, dihedral))
    return named_diagram("I", 2, static_cast<unsigned>(parse_int(m[1].str(), "dihedral label")));
  if (s == "tC2") return named_diagram("tC", 2);

  if (s.rfind("rank=", 0) != 0) throw ParseError("unrecognised diagram '" + std::string(text) + "'");
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t semi = s.find(';', start);
    const std::size_t stop = semi == std::string::npos ? s.size() : semi;
    if (stop > start) parts.push_back(s.substr(start, stop - start));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  const long rank = parse_int(parts.front().substr(5), "rank");
  if (rank < 1 || rank > kMaxRank) throw ParseError("rank out of range in '" + std::string(text) + "'");
  CoxeterDiagram d(static_cast<int>(rank));
  static const std::regex edge(R"(^(\d+)-(\d+)(?::(\d+|inf|∞))?$)");
  for (std::size_t p = 1; p < parts.size(); ++p) {
    if (!std::regex_match(parts[p], m, edge)) throw ParseError("malformed edge '" + parts[p] + "'");
    const long i = parse_int(m[1].str(), "edge endpoint");
    const long j = parse_int(m[2].str(), "edge endpoint");
    if (i < 1 || j < 1 || i > rank || j > rank || i == j) throw ParseError("edge endpoints out of range in '" + parts[p] + "'");
    Label label = 3;
    if (m[3].matched) {
      const std::string l = m[3].str();
      if (l == "inf" || l == "∞") {
        label = kInfinity;
      } else {
        const long v = parse_int(l, "edge label");
        if (v < 2) throw ParseError("edge labels must be at least 2 in '" + parts[p] + "'");
        label = static_cast<Label>(v);
      }
    }
    d.set_label(static_cast<int>(i - 1), static_cast<int>(j - 1), label);
  }
  return d;
}

Word parse_word(std::string_view text, int rank) {
  const std::string s = strip_spaces(text);
  Word out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!tok.empty() && (tok[0] == 's' || tok[0] == 'S')) tok.erase(0, 1);
    const long v = parse_int(tok, "generator");
    if (v < 1 || v > rank) throw ParseError("generator " + tok + " out of range 1.." + std::to_string(rank));
    out.push_back(static_cast<Generator>(v - 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// FieldMatrix

FieldMatrix::FieldMatrix(const RealCycloField& field, int n)
    : n_(n), entries_(static_cast<std::size_t>(n * n), field.zero()) {}

FieldMatrix FieldMatrix::identity(const RealCycloField& field, int n) {
  FieldMatrix m(field, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.n_ != b.n_) throw InvalidArgument("matrix size mismatch");
  FieldMatrix r(a.entries_.front().field(), a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      const FieldElement& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < a.n_; ++j) r.at(i, j) += x * b.at(k, j);
    }
  return r;
}

std::size_t FieldMatrix::hash() const {
  std::size_t h = static_cast<std::size_t>(n_);
  for (const auto& e : entries_) h ^= e.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// ---------------------------------------------------------------------------
// CoxeterGroup

namespace {

bool positive_definite(FieldMatrix m) {
  const int n = m.size();
  for (int k = 0; k < n; ++k) {
    if (m.at(k, k).sign() <= 0) return false;
    const FieldElement inv = m.at(k, k).inverse();
    for (int i = k + 1; i < n; ++i) {
      if (m.at(i, k).is_zero()) continue;
      const FieldElement f = m.at(i, k) * inv;
      for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return true;
}

}  // namespace

CoxeterGroup::CoxeterGroup(CoxeterDiagram diagram)
    : diagram_(std::move(diagram)),
      field_(RealCycloField::create(diagram_.field_index())),
      form_(*field_, diagram_.rank()) {
  const int n = rank();
  const unsigned N = field_->N();
  neighbours_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    form_.at(i, i) = field_->one();
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Label m = diagram_.label(i, j);
      if (m == 2) continue;
      // 2B_ij = -2cos(pi/m) = -embed_2cos(N/m); -2 for m = infinity.
      FieldElement two_b = m == kInfinity ? field_->constant(-2) : -field_->embed_2cos(N / m);
      form_.at(i, j) = two_b * field_->constant(mpq_class(1, 2));
      neighbours_[static_cast<std::size_t>(i)].push_back({j, std::move(two_b)});
    }
  }
  finite_ = !diagram_.has_infinite_label() && positive_definite(form_);
}

std::shared_ptr<const CoxeterGroup> CoxeterGroup::create(CoxeterDiagram diagram) {
  return std::make_shared<const CoxeterGroup>(std::move(diagram));
}

void CoxeterGroup::check_generator(Generator s) const {
  if (s < 0 || s >= rank())
    throw InvalidArgument("generator index " + std::to_string(s + 1) + " out of range 1.." + std::to_string(rank()));
}

void CoxeterGroup::left_apply(FieldMatrix& m, Generator s) const {
  // Row s of (s M): -M[s][j] - sum_k 2B_sk M[k][j].
  const int n = rank();
  for (int j = 0; j < n; ++j) {
    FieldElement v = -m.at(s, j);
    for (const auto& nb : neighbours_[static_cast<std::size_t>(s)]) {
      const FieldElement& x = m.at(nb.other, j);
      if (!x.is_zero()) v -= nb.two_b * x;
    }
    m.at(s, j) = std::move(v);
  }
}

void CoxeterGroup::right_apply(FieldMatrix& m, Generator s) const {
  // (M s) e_j = M e_j - 2B_sj M e_s, and (M s) e_s = -M e_s.
  const int n = rank();
  for (const auto& nb : neighbours_[static_cast<std::size_t>(s)])
    for (int i = 0; i < n; ++i) {
      const FieldElement& x = m.at(i, s);
      if (!x.is_zero()) m.at(i, nb.other) -= nb.two_b * x;
    }
  for (int i = 0; i < n; ++i) m.at(i, s) = -m.at(i, s);
}

int CoxeterGroup::column_sign(const FieldMatrix& m, int j) const {
  int sign = 0;
  for (int i = 0; i < rank(); ++i) {
    const int s = m.at(i, j).sign();
    if (s == 0) continue;
    if (sign != 0 && s != sign) throw InvariantViolation("column is not a root: mixed coordinate signs");
    sign = s;
  }
  if (sign == 0) throw InvariantViolation("column is not a root: zero vector");
  return sign;
}

RootVector CoxeterGroup::simple_root(Generator s) const {
  check_generator(s);
  RootVector v(static_cast<std::size_t>(rank()), field_->zero());
  v[static_cast<std::size_t>(s)] = field_->one();
  return v;
}

void CoxeterGroup::reflect(Generator s, RootVector& v) const {
  FieldElement x = -v[static_cast<std::size_t>(s)];
  for (const auto& nb : neighbours_[static_cast<std::size_t>(s)]) {
    const FieldElement& y = v[static_cast<std::size_t>(nb.other)];
    if (!y.is_zero()) x -= nb.two_b * y;
  }
  v[static_cast<std::size_t>(s)] = std::move(x);
}

RootVector CoxeterGroup::apply(const GroupElement& w, const RootVector& v) const {
  const int n = rank();
  RootVector out(static_cast<std::size_t>(n), field_->zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const FieldElement& x = v[static_cast<std::size_t>(j)];
      if (!x.is_zero()) out[static_cast<std::size_t>(i)] += w.action().at(i, j) * x;
    }
  return out;
}

int CoxeterGroup::root_sign(const RootVector& v) const {
  int sign = 0;
  for (const auto& x : v) {
    const int s = x.sign();
    if (s == 0) continue;
    if (sign != 0 && s != sign) throw InvariantViolation("not a root: mixed coordinate signs");
    sign = s;
  }
  if (sign == 0) throw InvariantViolation("not a root: zero vector");
  return sign;
}

namespace {

bool is_simple_root(const RootVector& v, Generator a) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (static_cast<Generator>(i) == a) {
      if (!v[i].is_one()) return false;
    } else if (!v[i].is_zero()) {
      return false;
    }
  }
  return true;
}

}  // namespace

GroupElement CoxeterGroup::identity() const {
  return GroupElement(FieldMatrix::identity(*field_, rank()), FieldMatrix::identity(*field_, rank()), {});
}

GroupElement CoxeterGroup::generator(Generator s) const { return left_multiply(s, identity()); }

GeneratorSet CoxeterGroup::left_descents(const GroupElement& w) const {
  GeneratorSet out = 0;
  for (int s = 0; s < rank(); ++s)
    if (column_sign(w.inverse_action(), s) < 0) out = with(out, s);
  return out;
}

GeneratorSet CoxeterGroup::right_descents(const GroupElement& w) const {
  GeneratorSet out = 0;
  for (int s = 0; s < rank(); ++s)
    if (column_sign(w.action(), s) < 0) out = with(out, s);
  return out;
}

bool CoxeterGroup::is_left_descent(Generator s, const GroupElement& w) const {
  check_generator(s);
  return column_sign(w.inverse_action(), s) < 0;
}

bool CoxeterGroup::is_right_descent(const GroupElement& w, Generator s) const {
  check_generator(s);
  return column_sign(w.action(), s) < 0;
}

GroupElement CoxeterGroup::left_multiply(Generator s, const GroupElement& w) const {
  check_generator(s);
  const bool descent = column_sign(w.inverse_action(), s) < 0;
  FieldMatrix action = w.action();
  FieldMatrix inverse = w.inverse_action();
  left_apply(action, s);
  right_apply(inverse, s);
  Word word;
  if (!descent) {
    word.reserve(w.length() + 1);
    word.push_back(s);
    word.insert(word.end(), w.word().begin(), w.word().end());
  } else {
    // s a_1...a_k deletes the first a_t with (a_{t-1}...a_1)(alpha_s) = alpha_{a_t}.
    RootVector v = simple_root(s);
    std::size_t t = 0;
    for (; t < w.length(); ++t) {
      const Generator a = w.word()[t];
      if (is_simple_root(v, a)) break;
      reflect(a, v);
    }
    if (t == w.length()) throw InvariantViolation("left_multiply: exchange position not found");
    word = w.word();
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(t));
  }
  return GroupElement(std::move(action), std::move(inverse), std::move(word));
}

GroupElement CoxeterGroup::right_multiply(const GroupElement& w, Generator s) const {
  check_generator(s);
  const bool descent = column_sign(w.action(), s) < 0;
  FieldMatrix action = w.action();
  FieldMatrix inverse = w.inverse_action();
  right_apply(action, s);
  left_apply(inverse, s);
  Word word;
  if (!descent) {
    word = w.word();
    word.push_back(s);
  } else {
    // a_1...a_k s deletes the last a_t with (a_{t+1}...a_k)(alpha_s) = alpha_{a_t}.
    RootVector v = simple_root(s);
    std::size_t t = w.length();
    for (; t-- > 0;) {
      const Generator a = w.word()[t];
      if (is_simple_root(v, a)) break;
      reflect(a, v);
    }
    if (t == static_cast<std::size_t>(-1)) throw InvariantViolation("right_multiply: exchange position not found");
    word = w.word();
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(t));
  }
  return GroupElement(std::move(action), std::move(inverse), std::move(word));
}

GroupElement CoxeterGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  GroupElement r = a;
  for (auto s : b.word()) r = right_multiply(r, s);
  return r;
}

GroupElement CoxeterGroup::inverse(const GroupElement& w) const {
  Word word(w.word().rbegin(), w.word().rend());
  return GroupElement(w.inverse_action(), w.action(), std::move(word));
}

GroupElement CoxeterGroup::reduce_word(std::span<const Generator> word) const {
  GroupElement r = identity();
  for (auto s : word) r = right_multiply(r, s);
  return r;
}

GroupElement CoxeterGroup::coxeter_element(std::span<const Generator> order) const {
  const int n = rank();
  if (static_cast<int>(order.size()) != n) throw InvalidArgument("Coxeter element word must use every generator exactly once");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (auto s : order) {
    check_generator(s);
    if (seen[static_cast<std::size_t>(s)]) throw InvalidArgument("Coxeter element word repeats generator " + format_generator(s));
    seen[static_cast<std::size_t>(s)] = true;
  }
  GroupElement g = reduce_word(order);
  if (static_cast<int>(g.length()) != n) throw InvariantViolation("Coxeter element is not reduced");
  return g;
}

GroupTable CoxeterGroup::enumerate(std::size_t limit) const {
  const int n = rank();
  GroupTable table;
  std::unordered_multimap<std::size_t, int> by_hash;
  auto find = [&](const FieldMatrix& action) -> int {
    const auto h = action.hash();
    auto [lo, hi] = by_hash.equal_range(h);
    for (auto it = lo; it != hi; ++it)
      if (table.elements[static_cast<std::size_t>(it->second)].action() == action) return it->second;
    return -1;
  };
  auto add = [&](GroupElement g) {
    if (table.elements.size() >= limit)
      throw LimitExceeded("group has more than " + std::to_string(limit) + " elements");
    const int idx = static_cast<int>(table.elements.size());
    by_hash.emplace(g.hash(), idx);
    table.elements.push_back(std::move(g));
    table.left.emplace_back(static_cast<std::size_t>(n), -1);
    table.right.emplace_back(static_cast<std::size_t>(n), -1);
    return idx;
  };
  add(identity());
  for (std::size_t w = 0; w < table.elements.size(); ++w) {
    for (int s = 0; s < n; ++s) {
      FieldMatrix action = table.elements[w].action();
      left_apply(action, s);
      int idx = find(action);
      if (idx < 0) idx = add(left_multiply(s, table.elements[w]));
      table.left[w][static_cast<std::size_t>(s)] = idx;
      table.left[static_cast<std::size_t>(idx)][static_cast<std::size_t>(s)] = static_cast<int>(w);
    }
  }
  for (std::size_t w = 0; w < table.elements.size(); ++w)
    for (int s = 0; s < n; ++s) {
      FieldMatrix action = table.elements[w].action();
      right_apply(action, s);
      const int idx = find(action);
      if (idx < 0) throw InvariantViolation("Cayley table is not closed under right multiplication");
      table.right[w][static_cast<std::size_t>(s)] = idx;
    }
  return table;
}

std::optional<std::size_t> CoxeterGroup::order(std::size_t limit) const {
  if (!finite_) return std::nullopt;
  try {
    return enumerate(limit).elements.size();
  } catch (const LimitExceeded&) {
    return std::nullopt;
  }
}

}  // namespace sortlat
