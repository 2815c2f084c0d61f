#include "doctest.h"

#include <random>

#include "oracle.hpp"
#include "qo.hpp"

using namespace wqo;

TEST_CASE("closure") {
  QO anti = QO::closure({"a", "b"}, {});
  CHECK(anti.incomparable(0, 1));
  QO chain = QO::closure({"a", "b"}, {{0, 1}});
  CHECK(chain.le(0, 1));
  CHECK_FALSE(chain.le(1, 0));
  QO three = QO::closure({"a", "b", "c"}, {{0, 1}, {1, 2}});
  CHECK(three.le(0, 2));  // transitivity
  CHECK_THROWS_AS(QO::closure({"a", "a"}, {}), DomainError);
}

TEST_CASE("builtins and labels") {
  CHECK(builtinQO("1").size() == 1);
  CHECK(builtinQO("chain3").le(0, 2));
  CHECK(builtinQO("anti3").incomparable(0, 2));
  CHECK_THROWS_AS(builtinQO("chain0"), DomainError);
  CHECK_THROWS_AS(builtinQO("nope"), DomainError);
  QO c2 = builtinQO("chain2");
  CHECK(resolveLabel(c2, "a") == 0);
  CHECK(resolveLabel(c2, "1") == 1);  // decimal index fallback
  CHECK_THROWS_AS(resolveLabel(c2, "z"), ParseError);
  CHECK_THROWS_AS(resolveLabel(c2, "7"), ParseError);
}

TEST_CASE("disjoint union and product") {
  QO u = disjointUnion(builtinQO("anti2"), builtinQO("1"));
  CHECK(u.size() == 3);
  CHECK(otype(u) == 3);
  QO diamond = product(builtinQO("chain2"), builtinQO("chain2"));
  CHECK(diamond.size() == 4);
  CHECK(otype(diamond) == 4);
  CHECK(heightOf(diamond) == 3);
  CHECK(widthOf(diamond) == 2);
  QO same = product(builtinQO("1"), builtinQO("chain3"));
  CHECK(otype(same) == otype(builtinQO("chain3")));
}

TEST_CASE("finite powerset under domination") {
  QO p1 = powersetF(builtinQO("1"), 1);
  CHECK(p1.size() == 2);  // empty set below the singleton
  CHECK(otype(p1) == 2);
  CHECK(otype(powersetF(builtinQO("anti2"), 2)) == 4);
  QO c2 = builtinQO("chain2");
  QO pc2 = powersetF(c2, 2);
  int sa = pc2.indexOf("{a}"), sb = pc2.indexOf("{b}");
  REQUIRE(sa >= 0);
  REQUIRE(sb >= 0);
  CHECK(pc2.le(sa, sb));
  CHECK_FALSE(pc2.le(sb, sa));
}

TEST_CASE("multiset term ordering") {
  QO c2 = builtinQO("chain2");
  CHECK(multisetLe(c2, {{0, 1}}, {{0, 2}}));
  CHECK_FALSE(multisetLe(c2, {{0, 2}}, {{0, 1}}));
  CHECK(multisetLe(c2, {{0, 1}, {1, 1}}, {{1, 2}}));
  CHECK_FALSE(multisetLe(builtinQO("anti2"), {{0, 1}}, {{1, 3}}));
  CHECK(multisetLe(c2, {}, {{0, 1}}));
}

TEST_CASE("L-set suborders") {
  QO c2 = builtinQO("chain2");
  CHECK(lSet(c2, 0).size() == 0);  // minimum element: L is empty
  CHECK(lSet(c2, 1).size() == 1);
  CHECK(lIncomp(builtinQO("anti2"), 0).size() == 1);
  CHECK(lLe(builtinQO("chain3"), 1).size() == 2);
  CHECK_THROWS_AS(lSet(c2, 5), DomainError);
}

TEST_CASE("invariants on small instances") {
  CHECK(otype(builtinQO("anti2")) == 2);
  CHECK(heightOf(builtinQO("chain3")) == 3);
  CHECK(widthOf(builtinQO("chain3")) == 1);
  QO equiv = QO::closure({"a", "b"}, {{0, 1}, {1, 0}});
  CHECK(equiv.equivClassCount() == 1);
  CHECK(otype(equiv) == 1);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    QO q = randomQO(rng, 1 + static_cast<int>(rng() % 5));
    int o = otype(q), h = heightOf(q), w = widthOf(q);
    CHECK(o == bruteOtype(q));
    CHECK(o == q.equivClassCount());
    CHECK(std::max(h, w) <= o);
    CHECK(o <= h * w);
  }
}

TEST_CASE("parse and print round trip") {
  const char* text =
      "# a three-element vee\n"
      "elem a\nelem b\nelem c\n"
      "le a b\nle a c\n";
  QO q = parseQO(text);
  CHECK(q.size() == 3);
  CHECK(q.le(0, 1));
  CHECK(q.le(0, 2));
  CHECK(q.incomparable(1, 2));
  QO back = parseQO(printQO(q));
  REQUIRE(back.size() == q.size());
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j)
      CHECK(back.le(back.indexOf(q.name(i)), back.indexOf(q.name(j))) == q.le(i, j));
  CHECK_THROWS_AS(parseQO("le a b\n"), ParseError);
  CHECK_THROWS_AS(parseQO("elem a\nwhat\n"), ParseError);
}

TEST_CASE("print/parse round trip on random instances") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    QO q = randomQO(rng, 1 + static_cast<int>(rng() % 5));
    QO back = parseQO(printQO(q));
    REQUIRE(back.size() == q.size());
    for (int a = 0; a < q.size(); ++a)
      for (int b = 0; b < q.size(); ++b)
        CHECK(back.le(back.indexOf(q.name(a)), back.indexOf(q.name(b))) ==
              q.le(a, b));
  }
}
