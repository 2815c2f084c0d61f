#include "seq.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace wqo {

SeqExpr SeqExpr::concat(std::vector<SeqExpr> parts) {
  if (parts.size() < 2) throw DomainError("concat needs >= 2 parts");
  return {Kind::Concat, -1, std::move(parts), 0};
}

SeqExpr SeqExpr::finPow(SeqExpr body, int k) {
  if (k < 1) throw DomainError("finite power needs k >= 1");
  return {Kind::FinPow, -1, {std::move(body)}, k};
}

Indec Indec::makePow(std::vector<Indec> body) {
  if (body.empty()) throw DomainError("w-power needs a nonempty body");
  return {false, -1, std::move(body)};
}

bool operator==(const Indec& a, const Indec& b) {
  if (a.atom != b.atom) return false;
  return a.atom ? a.label == b.label : a.body == b.body;
}

bool operator==(const NormalSeq& a, const NormalSeq& b) {
  return a.components == b.components;
}

NormalSeq normalize(const SeqExpr& e) {
  switch (e.kind) {
    case SeqExpr::Kind::Atom:
      return {{Indec::makeAtom(e.label)}};
    case SeqExpr::Kind::Concat: {
      NormalSeq out;
      for (const auto& p : e.parts) {
        NormalSeq n = normalize(p);
        out.components.insert(out.components.end(), n.components.begin(),
                              n.components.end());
      }
      return out;
    }
    case SeqExpr::Kind::OmegaPow:
      return {{Indec::makePow(normalize(e.parts[0]).components)}};
    case SeqExpr::Kind::FinPow: {
      NormalSeq body = normalize(e.parts[0]);
      NormalSeq out;
      for (int i = 0; i < e.power; ++i)
        out.components.insert(out.components.end(), body.components.begin(),
                              body.components.end());
      return out;
    }
  }
  throw DomainError("unreachable");
}

Ordinal seqLength(const Indec& c) {
  if (c.atom) return Ordinal::fromNat(1);
  Ordinal sum;
  for (const auto& b : c.body) sum = add(sum, seqLength(b));
  return mulOmega(sum);
}

Ordinal seqLength(const NormalSeq& s) {
  Ordinal sum;
  for (const auto& c : s.components) sum = add(sum, seqLength(c));
  return sum;
}

Ordinal seqLength(const SeqExpr& e) {
  switch (e.kind) {
    case SeqExpr::Kind::Atom:
      return Ordinal::fromNat(1);
    case SeqExpr::Kind::Concat: {
      Ordinal sum;
      for (const auto& p : e.parts) sum = add(sum, seqLength(p));
      return sum;
    }
    case SeqExpr::Kind::OmegaPow:
      return mulOmega(seqLength(e.parts[0]));
    case SeqExpr::Kind::FinPow: {
      Ordinal sum;
      for (int i = 0; i < e.power; ++i) sum = add(sum, seqLength(e.parts[0]));
      return sum;
    }
  }
  throw DomainError("unreachable");
}

namespace {

void collectRange(const Indec& c, std::set<int>& out) {
  if (c.atom)
    out.insert(c.label);
  else
    for (const auto& b : c.body) collectRange(b, out);
}

}  // namespace

std::set<int> seqRange(const SeqExpr& e) { return seqRange(normalize(e)); }

std::set<int> seqRange(const NormalSeq& s) {
  std::set<int> out;
  for (const auto& c : s.components) collectRange(c, out);
  return out;
}

bool indEmbeds(const QO& q, const Indec& s, const Indec& t) {
  if (s.atom && t.atom) return q.le(s.label, t.label);
  if (s.atom) {
    for (const auto& e : t.body)
      if (indEmbeds(q, s, e)) return true;
    return false;
  }
  if (t.atom) return false;
  for (const auto& d : s.body) {
    bool covered = false;
    for (const auto& e : t.body)
      if (indEmbeds(q, d, e)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

namespace {

std::string memoKey(const QO& q, const std::vector<Indec>& v) {
  std::ostringstream os;
  for (const auto& c : v) os << printIndec(q, c) << "|";
  return os.str();
}

// Right-to-left concatenation decision: the last remaining component of
// s must embed into some t_j; everything before it recurses into the
// prefix t_0..t_{j-1} extended by a bounded expansion of t_j's body.
bool embedsRec(const QO& q, const std::vector<Indec>& s, const std::vector<Indec>& t,
               int widthDelta, std::map<std::pair<std::string, std::string>, bool>& memo) {
  if (s.empty()) return true;
  if (s.size() == 1) {
    // an indecomposable embeds into a concatenation iff into a component
    for (const auto& tc : t)
      if (indEmbeds(q, s[0], tc)) return true;
    return false;
  }
  auto key = std::make_pair(memoKey(q, s), memoKey(q, t));
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  bool result = false;
  const Indec& last = s.back();
  std::vector<Indec> sPrefix(s.begin(), s.end() - 1);
  for (size_t j = 0; j < t.size() && !result; ++j) {
    if (!indEmbeds(q, last, t[j])) continue;
    std::vector<Indec> target(t.begin(), t.begin() + j);
    if (!t[j].atom) {
      int copies = static_cast<int>(sPrefix.size()) + widthDelta;
      for (int c = 0; c < copies; ++c)
        target.insert(target.end(), t[j].body.begin(), t[j].body.end());
    }
    if (embedsRec(q, sPrefix, target, widthDelta, memo)) result = true;
  }
  memo.emplace(key, result);
  return result;
}

}  // namespace

bool embedsExpansion(const QO& q, const NormalSeq& s, const NormalSeq& t, int widthDelta) {
  std::map<std::pair<std::string, std::string>, bool> memo;
  return embedsRec(q, s.components, t.components, widthDelta, memo);
}

bool embeds(const QO& q, const NormalSeq& s, const NormalSeq& t) {
  return embedsExpansion(q, s, t, 0);
}

std::vector<Indec> maximalIndecs(const QO& q, const std::vector<Indec>& xs) {
  std::vector<Indec> out;
  for (size_t i = 0; i < xs.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < xs.size() && !dominated; ++j)
      if (j != i && indEmbeds(q, xs[i], xs[j]) && !indEmbeds(q, xs[j], xs[i]))
        dominated = true;
    if (dominated) continue;
    bool duplicate = false;
    for (const auto& kept : out)
      if (indEmbeds(q, xs[i], kept) && indEmbeds(q, kept, xs[i])) {
        duplicate = true;
        break;
      }
    if (!duplicate) out.push_back(xs[i]);
  }
  return out;
}

std::vector<Indec> factors(const QO& q, const NormalSeq& s) {
  if (s.components.size() != 1 || s.components[0].atom)
    throw DomainError("factors: input must be a single w-power component");
  return maximalIndecs(q, s.components[0].body);
}

bool isIndecomposable(const SeqExpr& e) { return normalize(e).components.size() == 1; }

namespace {

Indec canonicalizeIndec(const QO& q, const Indec& c) {
  if (c.atom) return c;
  std::vector<Indec> body;
  for (const auto& b : c.body) body.push_back(canonicalizeIndec(q, b));
  return Indec::makePow(maximalIndecs(q, body));
}

}  // namespace

NormalSeq canonicalize(const QO& q, const NormalSeq& s) {
  NormalSeq out;
  for (const auto& c : s.components) out.components.push_back(canonicalizeIndec(q, c));
  return out;
}

namespace {

struct SeqParser {
  const QO& q;
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
    throw ParseError("sequence: " + msg + " at position " + std::to_string(pos));
  }

  SeqExpr parseTerm() {
    skipWs();
    if (pos >= s.size()) fail("expected term");
    if (s[pos] == '(') {
      ++pos;
      SeqExpr body = parseSum();
      if (!eat(')')) fail("expected ')'");
      if (!eat('^')) fail("expected '^' after power body");
      skipWs();
      if (pos < s.size() && s[pos] == 'w') {
        ++pos;
        return SeqExpr::omegaPow(std::move(body));
      }
      size_t ks = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == ks) fail("expected 'w' or a finite power");
      int k = std::stoi(std::string(s.substr(ks, pos - ks)));
      if (k < 1) fail("finite power must be >= 1");
      return SeqExpr::finPow(std::move(body), k);
    }
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                              s[pos] == '_' || s[pos] == '.'))
      ++pos;
    if (pos == start) fail("expected label");
    return SeqExpr::atom(resolveLabel(q, s.substr(start, pos - start)));
  }

  SeqExpr parseSum() {
    std::vector<SeqExpr> parts;
    parts.push_back(parseTerm());
    while (eat('+')) parts.push_back(parseTerm());
    if (parts.size() == 1) return std::move(parts[0]);
    return SeqExpr::concat(std::move(parts));
  }
};

}  // namespace

SeqExpr parseSeq(const QO& q, std::string_view text) {
  SeqParser p{q, text};
  SeqExpr e = p.parseSum();
  p.skipWs();
  if (p.pos != text.size()) p.fail("trailing input");
  return e;
}

std::string printIndec(const QO& q, const Indec& c) {
  if (c.atom) return q.name(c.label);
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c.body.size(); ++i) {
    if (i) os << " + ";
    os << printIndec(q, c.body[i]);
  }
  os << ")^w";
  return os.str();
}

std::string printSeq(const QO& q, const NormalSeq& s) {
  std::ostringstream os;
  for (size_t i = 0; i < s.components.size(); ++i) {
    if (i) os << " + ";
    os << printIndec(q, s.components[i]);
  }
  return os.str();
}

}  // namespace wqo
