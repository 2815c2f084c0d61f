#include "eps.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wqo {

unsigned EpsTerm::nodeCount() const {
  unsigned n = 1;
  for (const auto& p : parts_) n += p.nodeCount();
  return n;
}

bool operator==(const EpsTerm& a, const EpsTerm& b) { return epsCompare(a, b) == 0; }

int epsCompare(const EpsTerm& s, const EpsTerm& t) {
  using Kind = EpsTerm::Kind;
  bool sc = s.kind() != Kind::Seq;
  bool tc = t.kind() != Kind::Seq;
  if (sc && tc) {
    auto rank = [](const EpsTerm& x) {
      switch (x.kind()) {
        case Kind::Zero: return 0u;
        case Kind::Omega: return 1u;
        default: return 2u + x.epsIndex();
      }
    };
    unsigned rs = rank(s), rt = rank(t);
    return rs < rt ? -1 : rs > rt ? 1 : 0;
  }
  // constant vs composite: compare the constant with the leading part;
  // if c <= t_0 then c < t, if t_0 < c then t < c
  if (sc) {
    int c = epsCompare(s, t.parts()[0]);
    return c <= 0 ? -1 : 1;
  }
  if (tc) {
    int c = epsCompare(t, s.parts()[0]);
    return c <= 0 ? 1 : -1;
  }
  // composite vs composite: lexicographic, a strict prefix is smaller
  const auto& ps = s.parts();
  const auto& pt = t.parts();
  for (size_t i = 0; i < std::min(ps.size(), pt.size()); ++i) {
    int c = epsCompare(ps[i], pt[i]);
    if (c != 0) return c;
  }
  if (ps.size() != pt.size()) return ps.size() < pt.size() ? -1 : 1;
  return 0;
}

std::string validateDiag(const EpsTerm& t, OmegaOrder omega) {
  using Kind = EpsTerm::Kind;
  switch (t.kind()) {
    case Kind::Zero:
    case Kind::Omega:
      return "";
    case Kind::Eps:
      if (t.epsIndex() >= omega.size)
        return "clause (1): epsilon index " + std::to_string(t.epsIndex()) +
               " outside the index order";
      return "";
    case Kind::Seq: {
      const auto& ps = t.parts();
      if (ps.empty()) return "clause (2): composite term needs k >= 1 components";
      if (ps.size() == 1 &&
          (ps[0].kind() == Kind::Omega || ps[0].kind() == Kind::Eps))
        return "clause (2): singleton <" + toString(ps[0]) + "> is not in normal form";
      for (size_t i = 0; i + 1 < ps.size(); ++i)
        if (epsCompare(ps[i], ps[i + 1]) <= 0)
          return "clause (2): components not strictly decreasing";
      for (const auto& p : ps) {
        std::string d = validateDiag(p, omega);
        if (!d.empty()) return d;
      }
      return "";
    }
  }
  return "unreachable";
}

bool validate(const EpsTerm& t, OmegaOrder omega) { return validateDiag(t, omega).empty(); }

bool epsIsFinite(const EpsTerm& t) {
  return epsCompare(t, EpsTerm::omega()) < 0;
}

BigNat epsValue(const EpsTerm& t) {
  if (!epsIsFinite(t)) throw DomainError("epsValue on non-finite term");
  if (t.kind() == EpsTerm::Kind::Zero) return 0;
  BigNat v = 0;
  for (const auto& p : t.parts()) {
    BigNat e = epsValue(p);
    if (e > 1'000'000) throw LimitError("epsValue exponent too large");
    v += BigNat(1) << static_cast<unsigned>(e);
  }
  return v;
}

std::vector<EpsTerm> enumerateEps(OmegaOrder omega, unsigned maxNodes) {
  if (maxNodes < 1) throw DomainError("enumerateEps requires maxNodes >= 1");
  // levels[n] = valid terms with exactly n+1 nodes
  std::vector<std::vector<EpsTerm>> levels(maxNodes);
  levels[0].push_back(EpsTerm::zero());
  levels[0].push_back(EpsTerm::omega());
  for (unsigned i = 0; i < omega.size; ++i) levels[0].push_back(EpsTerm::eps(i));

  for (unsigned n = 2; n <= maxNodes; ++n) {
    // pool of candidate components, descending, with node counts
    std::vector<const EpsTerm*> pool;
    for (unsigned m = 0; m + 1 < n; ++m)
      for (const auto& t : levels[m]) pool.push_back(&t);
    std::sort(pool.begin(), pool.end(),
              [](const EpsTerm* a, const EpsTerm* b) { return epsCompare(*a, *b) > 0; });

    std::vector<EpsTerm> parts;
    auto emit = [&] {
      if (parts.size() == 1 && (parts[0].kind() == EpsTerm::Kind::Omega ||
                                parts[0].kind() == EpsTerm::Kind::Eps))
        return;
      levels[n - 1].push_back(EpsTerm::seq(parts));
    };
    // choose strictly decreasing components with node budget exactly n-1
    auto rec = [&](auto&& self, size_t from, unsigned budget) -> void {
      if (budget == 0) {
        if (!parts.empty()) emit();
        return;
      }
      for (size_t i = from; i < pool.size(); ++i) {
        unsigned nodes = pool[i]->nodeCount();
        if (nodes > budget) continue;
        parts.push_back(*pool[i]);
        self(self, i + 1, budget - nodes);
        parts.pop_back();
      }
    };
    rec(rec, 0, n - 1);
  }

  std::vector<EpsTerm> all;
  for (auto& lvl : levels)
    for (auto& t : lvl) all.push_back(std::move(t));
  std::sort(all.begin(), all.end(),
            [](const EpsTerm& a, const EpsTerm& b) { return epsCompare(a, b) < 0; });
  return all;
}

std::string toString(const EpsTerm& t) {
  using Kind = EpsTerm::Kind;
  switch (t.kind()) {
    case Kind::Zero: return "0";
    case Kind::Omega: return "w";
    case Kind::Eps: return "e(" + std::to_string(t.epsIndex()) + ")";
    case Kind::Seq: {
      std::ostringstream os;
      os << "<";
      for (size_t i = 0; i < t.parts().size(); ++i) {
        if (i) os << ", ";
        os << toString(t.parts()[i]);
      }
      os << ">";
      return os.str();
    }
  }
  return "";
}

namespace {

struct EpsParser {
  std::string_view s;
  OmegaOrder omega;
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
    throw ParseError("epsilon term: " + msg + " at position " + std::to_string(pos));
  }

  EpsTerm parse() {
    skipWs();
    if (pos >= s.size()) fail("expected term");
    char c = s[pos];
    if (c == '0') {
      ++pos;
      return EpsTerm::zero();
    }
    if (c == 'w') {
      ++pos;
      return EpsTerm::omega();
    }
    if (c == 'e') {
      ++pos;
      if (!eat('(')) fail("expected '(' after 'e'");
      skipWs();
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) fail("expected epsilon index");
      unsigned idx = static_cast<unsigned>(std::stoul(std::string(s.substr(start, pos - start))));
      if (!eat(')')) fail("expected ')'");
      return EpsTerm::eps(idx);
    }
    if (c == '<') {
      ++pos;
      std::vector<EpsTerm> parts;
      parts.push_back(parse());
      while (eat(',')) parts.push_back(parse());
      if (!eat('>')) fail("expected '>'");
      return EpsTerm::seq(std::move(parts));
    }
    fail("expected '0', 'w', 'e(..)' or '<'");
  }
};

}  // namespace

EpsTerm parseEps(std::string_view text, OmegaOrder omega) {
  EpsParser p{text, omega};
  EpsTerm t = p.parse();
  p.skipWs();
  if (p.pos != text.size()) p.fail("trailing input");
  std::string diag = validateDiag(t, omega);
  if (!diag.empty()) throw ParseError("epsilon term: " + diag);
  return t;
}

}  // namespace wqo
