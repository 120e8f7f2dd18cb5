#include "sortlat/coxgroup.hpp"
#include "sortlat/errors.hpp"

#include <doctest.h>

#include <set>

using namespace sortlat;

namespace {

GroupElement from(const CoxeterGroup& W, std::initializer_list<int> one_based) {
  Word w;
  for (int s : one_based) w.push_back(s - 1);
  return W.reduce_word(w);
}

}  // namespace

TEST_CASE("bilinear form entries") {
  CoxeterGroup W(parse_diagram("rank=3; 1-2; 2-3:4"));
  const FieldMatrix& B = W.bilinear_form();
  const auto& F = W.field();
  CHECK(B.at(0, 0) == F.one());
  CHECK(B.at(0, 2).is_zero());
  CHECK(B.at(0, 1) == F.constant(mpq_class(-1, 2)));
  CHECK(B.at(1, 2) * B.at(1, 2) == F.constant(mpq_class(1, 2)));
  CHECK(B.at(1, 2).sign() == -1);
}

TEST_CASE("named diagrams follow the standard numbering") {
  CHECK(parse_diagram("B3").label(1, 2) == 4);
  CHECK(parse_diagram("D4").is_edge(1, 3));
  CHECK_FALSE(parse_diagram("D4").is_edge(2, 3));
  CHECK(parse_diagram("E6").is_edge(2, 5));
  CHECK(parse_diagram("F4").label(1, 2) == 4);
  CHECK(parse_diagram("H3").label(1, 2) == 5);
  CHECK(parse_diagram("H4").label(2, 3) == 5);
  CHECK(parse_diagram("I2(7)").label(0, 1) == 7);
  const CoxeterDiagram t = parse_diagram("tC2");
  CHECK(t.label(0, 1) == 4);
  CHECK(t.label(1, 2) == 4);
  CHECK(t.label(0, 2) == 2);
  CHECK(parse_diagram("rank=2; 1-2:inf").label(0, 1) == kInfinity);
}

TEST_CASE("diagram parse errors") {
  CHECK_THROWS_AS(parse_diagram("Z3"), ParseError);
  CHECK_THROWS_AS(parse_diagram("rank=2; 1-3"), ParseError);
  CHECK_THROWS_AS(parse_diagram("rank=2; 1-2:1"), ParseError);
  CHECK_THROWS_AS(parse_word("1,4", 3), ParseError);
  CHECK(parse_word("1,3,2", 3) == Word{0, 2, 1});
}

TEST_CASE("group orders") {
  CHECK(CoxeterGroup(parse_diagram("A3")).order(100000) == 24u);
  CHECK(CoxeterGroup(parse_diagram("B3")).order(100000) == 48u);
  CHECK(CoxeterGroup(parse_diagram("H3")).order(100000) == 120u);
  CHECK(CoxeterGroup(parse_diagram("D4")).order(100000) == 192u);
  CHECK(CoxeterGroup(parse_diagram("F4")).order(100000) == 1152u);
  CHECK(CoxeterGroup(parse_diagram("I2(7)")).order(100000) == 14u);
  CHECK(CoxeterGroup(parse_diagram("H4")).order(100000) == 14400u);
  const CoxeterGroup affine(parse_diagram("tC2"));
  CHECK_FALSE(affine.is_finite());
  CHECK_FALSE(affine.order(1000).has_value());
  CHECK_THROWS_AS(affine.enumerate(1000), LimitExceeded);
}

TEST_CASE("word reduction") {
  CoxeterGroup A2(parse_diagram("A2"));
  CHECK(from(A2, {1, 1}).is_identity());
  const GroupElement w = from(A2, {1, 2, 1, 2});
  CHECK(w.length() == 2);
  CHECK(w.word() == Word{1, 0});
  CoxeterGroup B2(parse_diagram("B2"));
  CHECK(from(B2, {1, 2, 1, 2}).length() == 4);
  CHECK(from(B2, {1, 2, 1, 2, 1}).length() == 3);
}

TEST_CASE("descents") {
  CoxeterGroup A2(parse_diagram("A2"));
  CHECK(A2.left_descents(A2.identity()) == 0);
  CHECK(A2.left_descents(from(A2, {1})) == 0b1);
  CHECK(A2.left_descents(from(A2, {1, 2})) == 0b1);
  CHECK(A2.right_descents(from(A2, {1, 2})) == 0b10);
  CHECK(A2.left_descents(from(A2, {1, 2, 1})) == 0b11);
}

TEST_CASE("Coxeter elements have length n") {
  CoxeterGroup W(parse_diagram("rank=1"));
  CHECK(W.coxeter_element(Word{0}).length() == 1);
  CoxeterGroup A3(parse_diagram("A3"));
  CHECK(A3.coxeter_element(Word{0, 1, 2}).length() == 3);
  CoxeterGroup C(parse_diagram("tC2"));
  CHECK(C.coxeter_element(Word{0, 2, 1}).length() == 3);
  CHECK_THROWS_AS(A3.coxeter_element(Word{0, 0, 1}), InvalidArgument);
}

TEST_CASE("Cayley table is consistent") {
  CoxeterGroup W(parse_diagram("B3"));
  const GroupTable t = W.enumerate(1000);
  REQUIRE(t.elements.size() == 48);
  CHECK(t.elements[0].is_identity());
  std::set<std::size_t> lengths;
  for (std::size_t w = 0; w < t.elements.size(); ++w)
    for (int s = 0; s < 3; ++s) {
      const int ws = t.right[w][static_cast<std::size_t>(s)];
      CHECK(t.right[static_cast<std::size_t>(ws)][static_cast<std::size_t>(s)] == static_cast<int>(w));
      CHECK(t.elements[static_cast<std::size_t>(ws)] == W.right_multiply(t.elements[w], s));
      CHECK(t.elements[static_cast<std::size_t>(t.left[w][static_cast<std::size_t>(s)])] ==
            W.left_multiply(s, t.elements[w]));
      lengths.insert(t.length(static_cast<int>(w)));
    }
  CHECK(*lengths.rbegin() == 9);
}

TEST_CASE("inverse and multiplication") {
  CoxeterGroup W(parse_diagram("H3"));
  const GroupElement a = from(W, {1, 2, 3, 2});
  const GroupElement b = from(W, {2, 3, 1});
  CHECK(W.multiply(a, W.inverse(a)).is_identity());
  CHECK(W.multiply(a, b) == W.reduce_word(Word{0, 1, 2, 1, 1, 2, 0}));
  CHECK(W.inverse(W.multiply(a, b)) == W.multiply(W.inverse(b), W.inverse(a)));
}

TEST_CASE("roots") {
  CoxeterGroup W(parse_diagram("A3"));
  RootVector v = W.simple_root(0);
  CHECK(W.root_sign(v) == 1);
  W.reflect(0, v);
  CHECK(W.root_sign(v) == -1);
  const GroupElement w = from(W, {2, 1});
  CHECK(W.root_sign(W.apply(w, W.simple_root(0))) == -1);
  CHECK(W.root_sign(W.apply(w, W.simple_root(2))) == 1);
}
