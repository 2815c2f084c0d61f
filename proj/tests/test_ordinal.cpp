#include "doctest.h"

#include <vector>

#include "ordinal.hpp"

using namespace wqo;

namespace {

Ordinal ord(const char* s) { return parseOrdinal(s); }

// Small pool used for the algebraic-law checks.
std::vector<Ordinal> pool() {
  return {ord("0"), ord("1"), ord("2"),      ord("5"),     ord("w"),
          ord("w+3"), ord("w*2"), ord("w^2"), ord("w^2+w"), ord("w^w"),
          ord("w^(w+1)*2 + w^3 + 4")};
}

}  // namespace

TEST_CASE("compare") {
  CHECK(compare(ord("w^2"), ord("w*5")) > 0);
  CHECK(compare(ord("0"), ord("0")) == 0);
  CHECK(compare(ord("w+3"), ord("w+4")) < 0);
  CHECK(ord("w") < ord("w^2"));
}

TEST_CASE("compare is a total order on the pool") {
  auto xs = pool();
  for (const auto& a : xs)
    for (const auto& b : xs) {
      int ab = compare(a, b), ba = compare(b, a);
      CHECK(ab == -ba);
      CHECK(((ab == 0) == (a == b)));
      for (const auto& c : xs)
        if (ab < 0 && compare(b, c) < 0) CHECK(compare(a, c) < 0);
    }
}

TEST_CASE("ordinal sum") {
  CHECK(add(ord("1"), ord("w")) == ord("w"));
  CHECK(add(ord("w"), ord("1")) == ord("w+1"));
  CHECK(add(ord("w^2"), add(ord("w^2"), ord("w"))) == ord("w^2*2+w"));
  auto xs = pool();
  for (const auto& a : xs)
    for (const auto& b : xs)
      for (const auto& c : xs)
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
}

TEST_CASE("natural sum and product") {
  CHECK(natAdd(ord("1"), ord("w")) == ord("w+1"));
  CHECK(natMul(ord("2"), ord("3")) == ord("6"));
  CHECK(natMul(ord("w*2"), ord("w")) == ord("w^2*2"));
  auto xs = pool();
  for (const auto& a : xs)
    for (const auto& b : xs) {
      CHECK(natAdd(a, b) == natAdd(b, a));
      CHECK(natMul(a, b) == natMul(b, a));
      for (const auto& c : xs) {
        CHECK(natAdd(natAdd(a, b), c) == natAdd(a, natAdd(b, c)));
        CHECK(natMul(natMul(a, b), c) == natMul(a, natMul(b, c)));
        CHECK(natMul(a, natAdd(b, c)) == natAdd(natMul(a, b), natMul(a, c)));
      }
    }
}

TEST_CASE("omega exponentiation") {
  CHECK(omegaPow(ord("0")) == ord("1"));
  CHECK(omegaPow(ord("1")) == ord("w"));
  CHECK(omegaPow(ord("w")) == ord("w^w"));
  for (const auto& a : pool()) CHECK(compare(a, omegaPow(a)) < 0);
}

TEST_CASE("right multiplication by omega") {
  CHECK(mulOmega(ord("1")) == ord("w"));
  CHECK(mulOmega(ord("w+1")) == ord("w^2"));
  CHECK(mulOmega(ord("w^2*3+5")) == ord("w^3"));
  CHECK_THROWS_AS(mulOmega(ord("0")), DomainError);
  for (const auto& a : pool())
    if (!a.isZero())
      CHECK(mulOmega(a) == omegaPow(add(a.leadingExponent(), ord("1"))));
}

TEST_CASE("minus2Plus") {
  CHECK(minus2Plus(ord("2")) == ord("0"));
  CHECK(minus2Plus(ord("5")) == ord("3"));
  CHECK(minus2Plus(ord("w")) == ord("w"));
  CHECK(minus2Plus(ord("w^2+1")) == ord("w^2+1"));
  CHECK_THROWS_AS(minus2Plus(ord("1")), DomainError);
}

TEST_CASE("finite values agree with integer arithmetic") {
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      Ordinal oa = Ordinal::fromNat(a), ob = Ordinal::fromNat(b);
      CHECK(natAdd(oa, ob) == Ordinal::fromNat(a + b));
      CHECK(add(oa, ob) == Ordinal::fromNat(a + b));
      CHECK(natMul(oa, ob) == Ordinal::fromNat(a * b));
      CHECK(compare(oa, ob) == (a < b ? -1 : a > b ? 1 : 0));
    }
}

TEST_CASE("print/parse round trip") {
  for (const char* s : {"0", "1", "42", "w", "w+1", "w*3", "w^2*2 + w + 3",
                        "w^w", "w^(w^2+1)*5 + w^2"}) {
    Ordinal a = ord(s);
    CHECK(parseOrdinal(toString(a)) == a);
  }
  CHECK(toString(ord("w^1")) == "w");
  CHECK_THROWS_AS(ord("w^"), ParseError);
  CHECK_THROWS_AS(ord("+"), ParseError);
  CHECK_THROWS_AS(ord("w w"), ParseError);
}
