#include "ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wqo {

Ordinal Ordinal::fromNat(const BigNat& n) {
  Ordinal r;
  if (n > 0) r.terms_.push_back({Ordinal(), n});
  return r;
}

Ordinal Ordinal::omega() { return omegaTerm(fromNat(1)); }

Ordinal Ordinal::omegaTerm(Ordinal exponent, BigNat coeff) {
  if (coeff < 1) throw DomainError("ordinal term coefficient must be >= 1");
  Ordinal r;
  r.terms_.push_back({std::move(exponent), std::move(coeff)});
  return r;
}

bool Ordinal::isFinite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.isZero());
}

BigNat Ordinal::finiteValue() const {
  if (!isFinite()) throw DomainError("finiteValue on infinite ordinal");
  return terms_.empty() ? BigNat(0) : terms_[0].coeff;
}

const Ordinal& Ordinal::leadingExponent() const {
  if (terms_.empty()) throw DomainError("leading exponent of 0");
  return terms_[0].exponent;
}

Ordinal Ordinal::fromTerms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare(a.exponent, b.exponent) > 0;
  });
  Ordinal r;
  for (auto& t : terms) {
    if (t.coeff == 0) continue;
    if (!r.terms_.empty() && r.terms_.back().exponent == t.exponent)
      r.terms_.back().coeff += t.coeff;
    else
      r.terms_.push_back(std::move(t));
  }
  return r;
}

int compare(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    int c = compare(ta[i].exponent, tb[i].exponent);
    if (c != 0) return c;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff ? -1 : 1;
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  return 0;
}

bool operator==(const Ordinal& a, const Ordinal& b) { return compare(a, b) == 0; }

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.isZero()) return a;
  const Ordinal& e = b.terms()[0].exponent;
  std::vector<Ordinal::Term> out;
  for (const auto& t : a.terms()) {
    if (compare(t.exponent, e) > 0)
      out.push_back(t);
    else
      break;
  }
  out.insert(out.end(), b.terms().begin(), b.terms().end());
  // merge the boundary term of a if it matches b's leading exponent
  for (const auto& t : a.terms())
    if (t.exponent == e) {
      out[out.size() - b.terms().size()].coeff += t.coeff;
      break;
    }
  return Ordinal::fromTerms(std::move(out));
}

Ordinal natAdd(const Ordinal& a, const Ordinal& b) {
  std::vector<Ordinal::Term> out(a.terms());
  out.insert(out.end(), b.terms().begin(), b.terms().end());
  return Ordinal::fromTerms(std::move(out));
}

Ordinal natMul(const Ordinal& a, const Ordinal& b) {
  std::vector<Ordinal::Term> out;
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms())
      out.push_back({natAdd(ta.exponent, tb.exponent), ta.coeff * tb.coeff});
  return Ordinal::fromTerms(std::move(out));
}

Ordinal omegaPow(const Ordinal& a) { return Ordinal::omegaTerm(a); }

Ordinal mulOmega(const Ordinal& a) {
  if (a.isZero()) throw DomainError("mulOmega on 0");
  return omegaPow(add(a.leadingExponent(), Ordinal::fromNat(1)));
}

Ordinal minus2Plus(const Ordinal& a) {
  if (a.isFinite()) {
    BigNat v = a.finiteValue();
    if (v < 2) throw DomainError("minus2Plus requires a >= 2");
    return Ordinal::fromNat(v - 2);
  }
  return a;
}

namespace {

bool atomicExponent(const Ordinal& e) {
  if (e.isFinite()) return true;
  return e == Ordinal::omega();
}

}  // namespace

std::string toString(const Ordinal& a) {
  if (a.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) os << " + ";
    first = false;
    if (t.exponent.isZero()) {
      os << t.coeff;
      continue;
    }
    if (t.exponent == Ordinal::fromNat(1)) {
      os << "w";
    } else {
      std::string e = toString(t.exponent);
      os << "w^" << (atomicExponent(t.exponent) ? e : "(" + e + ")");
    }
    if (t.coeff != 1) os << "*" << t.coeff;
  }
  return os.str();
}

namespace {

struct OrdParser {
  std::string_view s;
  size_t pos = 0;

  void skipWs() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skipWs();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("ordinal: " + msg + " at position " + std::to_string(pos));
  }

  BigNat parseNat() {
    skipWs();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected number");
    return BigNat(std::string(s.substr(start, pos - start)));
  }

  // a single `w[^E][*c]` or natural
  Ordinal::Term parseTerm() {
    skipWs();
    if (pos >= s.size()) fail("expected term");
    if (s[pos] == 'w') {
      ++pos;
      Ordinal exponent = Ordinal::fromNat(1);
      if (eat('^')) exponent = parseExponent();
      BigNat coeff = 1;
      if (eat('*')) coeff = parseNat();
      if (coeff < 1) fail("coefficient must be >= 1");
      return {std::move(exponent), std::move(coeff)};
    }
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) return {Ordinal(), parseNat()};
    fail("expected 'w' or number");
  }

  Ordinal parseExponent() {
    skipWs();
    if (pos >= s.size()) fail("expected exponent");
    if (s[pos] == '(') {
      ++pos;
      Ordinal e = parseSum();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (s[pos] == 'w') {
      ++pos;
      if (eat('^')) return omegaPow(parseExponent());
      return Ordinal::omega();
    }
    return Ordinal::fromNat(parseNat());
  }

  Ordinal parseSum() {
    std::vector<Ordinal::Term> terms;
    terms.push_back(parseTerm());
    while (eat('+')) terms.push_back(parseTerm());
    // require strictly descending exponents (no silent reordering)
    for (size_t i = 0; i + 1 < terms.size(); ++i)
      if (compare(terms[i].exponent, terms[i + 1].exponent) <= 0)
        fail("terms not strictly descending");
    Ordinal r = Ordinal::fromTerms(std::move(terms));
    if (r.terms().size() == 1 && r.terms()[0].exponent.isZero() && r.terms()[0].coeff == 0)
      return Ordinal();
    return r;
  }
};

}  // namespace

Ordinal parseOrdinal(std::string_view text) {
  OrdParser p{text};
  p.skipWs();
  if (p.pos < text.size() && text[p.pos] == '0') {
    size_t save = p.pos;
    ++p.pos;
    p.skipWs();
    if (p.pos == text.size()) return Ordinal();
    p.pos = save;
  }
  Ordinal r = p.parseSum();
  p.skipWs();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

}  // namespace wqo
