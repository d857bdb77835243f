#include <doctest.h>

#include "fixcheck/valuation.hpp"
#include "support.hpp"

using namespace fixcheck;
using fixcheck::testing::Rng;

static const MVAlgebra I = real_interval(1);

TEST_CASE("finite sets") {
  FiniteSet s({"a", "b", "c"});
  CHECK(s.contains("b"));
  CHECK(!s.contains("d"));
  CHECK(s.index_of("c") == 2);
  CHECK_THROWS_AS(s.index_of("d"), Error);
  CHECK_THROWS_AS(FiniteSet({"a", "a"}), Error);
  CHECK(s.same_elements(FiniteSet({"c", "a", "b"})));
  CHECK(!(s == FiniteSet({"c", "a", "b"})));
  CHECK(s.disjoint_from(FiniteSet({"d", "e"})));
  CHECK(!s.disjoint_from(FiniteSet({"c", "d"})));

  auto u = set_union_disjoint(s, FiniteSet({"d"}));
  CHECK(u.elems == std::vector<Element>{"a", "b", "c", "d"});
  CHECK_THROWS_AS(set_union_disjoint(s, s), Error);
  CHECK(set_difference(s, FiniteSet({"b"})).elems == std::vector<Element>{"a", "c"});
  auto p = set_product(FiniteSet({"a", "b"}), FiniteSet({"x"}));
  CHECK(p.elems == std::vector<Element>{"(a,x)", "(b,x)"});
}

TEST_CASE("valuations") {
  FiniteSet s({"a", "b", "c"});
  Valuation v(s, {mv(I, Rational(1, 2)), mv(I, 0), mv(I, 1)});
  CHECK(v.at("a").value == Rational(1, 2));
  CHECK(v.at(2).value == 1);
  CHECK_THROWS_AS(v.at("d"), Error);
  CHECK(norm(v).value == 1);
  CHECK(support_nonzero(v).members == std::set<Element>{"a", "c"});
  CHECK(v == Valuation(FiniteSet({"c", "a", "b"}), {mv(I, 1), mv(I, Rational(1, 2)), mv(I, 0)}));
  CHECK(zeros(s, I).at("b").value == 0);
  CHECK(ones(s, I).at("b").value == 1);

  CHECK_THROWS_AS(Valuation(s, {mv(I, 0)}), Error);  // arity mismatch
  CHECK_THROWS_AS(Subset(s, {"d"}), Error);
}

TEST_CASE("pointwise operations and deltas") {
  FiniteSet s({"a", "b"});
  Valuation v(s, {mv(I, Rational(3, 4)), mv(I, Rational(1, 4))});
  Valuation w(s, {mv(I, Rational(1, 2)), mv(I, Rational(1, 2))});
  CHECK(pointwise_oplus(v, w).at("a").value == 1);
  CHECK(pointwise_ominus(v, w).at("b").value == 0);
  CHECK(pointwise_complement(v).at("a").value == Rational(1, 4));
  CHECK(!pointwise_leq(v, w));
  CHECK(pointwise_leq(w, pointwise_oplus(v, w)));
  CHECK(disagreement(v, w) == std::set<Element>{"a", "b"});
  CHECK(disagreement(v, v).empty());

  auto d = delta_on(Subset(s, {"a"}), mv(I, Rational(1, 2)), I);
  CHECK(d.at("a").value == Rational(1, 2));
  CHECK(d.at("b").value == 0);
  // a - delta_Y' only touches Y'
  auto dec = pointwise_ominus(v, d);
  CHECK(dec.at("a").value == Rational(1, 4));
  CHECK(dec.at("b").value == Rational(1, 4));
}

TEST_CASE("pointwise laws on random valuations") {
  Rng rng(23);
  FiniteSet s({"a", "b", "c", "d"});
  for (const auto& alg : {real_interval(1), finite_chain(3)}) {
    for (int i = 0; i < 100; ++i) {
      auto v = rng.valuation(s, alg), w = rng.valuation(s, alg);
      CHECK(pointwise_leq(pointwise_ominus(v, w), v));
      CHECK(pointwise_leq(v, pointwise_oplus(v, w)));
      CHECK(pointwise_complement(pointwise_complement(v)) == v);
      // residuation: v - w <= u iff v <= w + u, spot checked with u = v - w
      auto u = pointwise_ominus(v, w);
      CHECK(pointwise_leq(v, pointwise_oplus(w, u)));
    }
  }
}
