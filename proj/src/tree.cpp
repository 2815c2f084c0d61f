#include "tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace wqo {

int Tree::height() const {
  if (isLeaf()) return 0;
  int h = 0;
  for (const auto& c : children_) h = std::max(h, c.height());
  return 1 + h;
}

int Tree::vertexCount() const {
  int n = 1;
  for (const auto& c : children_) n += c.vertexCount();
  return n;
}

bool operator==(const Tree& a, const Tree& b) {
  if (a.isLeaf() != b.isLeaf()) return false;
  if (a.isLeaf()) return a.label() == b.label();
  return a.children() == b.children();
}

Tree spine(int label, int k) {
  if (k < 1) throw DomainError("spine requires k >= 1");
  Tree t = Tree::leaf(label);
  for (int i = 1; i < k; ++i) t = Tree::node({std::move(t)});
  return t;
}

namespace {

// Memoized pairwise decision over subtree addresses; valid for the
// lifetime of one top-level call, during which the trees are pinned.
struct PairMemo {
  std::map<std::pair<const Tree*, const Tree*>, bool> cache;

  template <typename F>
  bool get(const Tree& s, const Tree& t, F&& compute) {
    auto key = std::make_pair(&s, &t);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    bool r = compute();
    cache.emplace(key, r);
    return r;
  }
};

bool leTRec(const QO& q, const Tree& s, const Tree& t, PairMemo& memo) {
  return memo.get(s, t, [&] {
    if (s.isLeaf() && t.isLeaf()) return q.le(s.label(), t.label());
    if (s.isLeaf()) {
      for (const auto& tc : t.children())
        if (leTRec(q, s, tc, memo)) return true;
      return false;
    }
    if (t.isLeaf()) return false;
    for (const auto& sc : s.children()) {
      bool covered = false;
      for (const auto& tc : t.children())
        if (leTRec(q, sc, tc, memo)) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
    return true;
  });
}

bool injectiveChildMatching(const QO& q, const Tree& s, const Tree& t, PairMemo& memo,
                            bool (*rec)(const QO&, const Tree&, const Tree&, PairMemo&)) {
  const auto& sc = s.children();
  const auto& tc = t.children();
  if (sc.size() > tc.size()) return false;
  std::vector<int> matchRight(tc.size(), -1);
  std::vector<char> used;
  std::function<bool(size_t)> tryAugment = [&](size_t l) -> bool {
    for (size_t r = 0; r < tc.size(); ++r) {
      if (used[r] || !rec(q, sc[l], tc[r], memo)) continue;
      used[r] = 1;
      if (matchRight[r] == -1 || tryAugment(static_cast<size_t>(matchRight[r]))) {
        matchRight[r] = static_cast<int>(l);
        return true;
      }
    }
    return false;
  };
  for (size_t l = 0; l < sc.size(); ++l) {
    used.assign(tc.size(), 0);
    if (!tryAugment(l)) return false;
  }
  return true;
}

bool leKRec(const QO& q, const Tree& s, const Tree& t, PairMemo& memo) {
  return memo.get(s, t, [&] {
    if (t.isLeaf()) return s.isLeaf() && q.le(s.label(), t.label());
    for (const auto& tc : t.children())
      if (leKRec(q, s, tc, memo)) return true;
    if (s.isLeaf()) return false;
    return injectiveChildMatching(q, s, t, memo, leKRec);
  });
}

}  // namespace

bool leT(const QO& q, const Tree& s, const Tree& t) {
  PairMemo memo;
  return leTRec(q, s, t, memo);
}

bool leK(const QO& q, const Tree& s, const Tree& t) {
  PairMemo memo;
  return leKRec(q, s, t, memo);
}

Tree embedDesc(int i, int j) {
  if (j >= i || j < 0) throw DomainError("embedDesc requires 0 <= j < i");
  return Tree::node({spine(0, i + 3), Tree::node({Tree::leaf(1), spine(0, j + 2)})});
}

QO epsLabelQO(OmegaOrder omega) {
  std::vector<std::string> names = {"0", "1"};
  for (unsigned i = 0; i < omega.size; ++i) names.push_back("e" + std::to_string(i));
  std::vector<std::pair<int, int>> pairs;
  for (size_t i = 0; i + 1 < names.size(); ++i)
    pairs.emplace_back(static_cast<int>(i), static_cast<int>(i) + 1);
  return QO::closure(std::move(names), pairs);
}

Tree epsToTree(const EpsTerm& t, OmegaOrder omega) {
  std::string diag = validateDiag(t, omega);
  if (!diag.empty()) throw DomainError("epsToTree: " + diag);
  if (epsIsFinite(t)) {
    BigNat v = epsValue(t);
    if (v > 100000) throw LimitError("epsToTree: finite value too large");
    int n = static_cast<int>(v);
    return Tree::node({Tree::leaf(1), spine(0, n + 2)});
  }
  switch (t.kind()) {
    case EpsTerm::Kind::Omega:
      return spine(1, 3);
    case EpsTerm::Kind::Eps:
      return Tree::leaf(2 + static_cast<int>(t.epsIndex()));
    default:
      break;
  }
  // composite with at least one infinite component; components are
  // strictly decreasing, so the finite ones form a suffix <t_k, ...>
  const auto& parts = t.parts();
  size_t k = 0;
  while (k < parts.size() && !epsIsFinite(parts[k])) ++k;
  std::vector<Tree> children;
  int running = 0;  // m_i, the running sum of ht(h(t_j)) + 2
  for (size_t i = 0; i < k; ++i) {
    Tree img = epsToTree(parts[i], omega);
    running += img.height() + 2;
    children.push_back(Tree::node({std::move(img), spine(0, running)}));
  }
  if (k < parts.size()) {
    EpsTerm tf = EpsTerm::seq(std::vector<EpsTerm>(parts.begin() + k, parts.end()));
    BigNat v = epsValue(tf);
    if (v > 100000) throw LimitError("epsToTree: finite tail too large");
    int n = static_cast<int>(v);
    int mf = running + n + 4;
    children.push_back(Tree::node({Tree::node({Tree::leaf(1), spine(0, n + 2)}), spine(0, mf)}));
  }
  return Tree::node(std::move(children));
}

bool operator==(const SymbolicOrdinal& a, const SymbolicOrdinal& b) {
  if (a.kind != b.kind) return false;
  if (a.kind != SymbolicOrdinal::Kind::Eps) return true;
  return a.epsIndex == b.epsIndex;
}

SymbolicOrdinal gType(const Ordinal& a) {
  if (a.isZero()) return {SymbolicOrdinal::Kind::Zero, {}};
  if (a == Ordinal::fromNat(1)) return {SymbolicOrdinal::Kind::Omega, {}};
  // the fixed-point branch of the fixed-point-free epsilon function is
  // unreachable for indices below epsilon_0
  return {SymbolicOrdinal::Kind::Eps, minus2Plus(a)};
}

std::string toString(const SymbolicOrdinal& s) {
  switch (s.kind) {
    case SymbolicOrdinal::Kind::Zero: return "0";
    case SymbolicOrdinal::Kind::Omega: return "w";
    case SymbolicOrdinal::Kind::Eps: return "e_" + toString(s.epsIndex);
  }
  return "";
}

namespace {

struct TreeParser {
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
    throw ParseError("tree: " + msg + " at position " + std::to_string(pos));
  }

  Tree parse() {
    skipWs();
    if (pos >= s.size()) fail("expected tree");
    if (s[pos] == '(') {
      ++pos;
      std::vector<Tree> children;
      children.push_back(parse());
      while (eat(',')) children.push_back(parse());
      if (!eat(')')) fail("expected ')'");
      return Tree::node(std::move(children));
    }
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                              s[pos] == '_' || s[pos] == '.'))
      ++pos;
    if (pos == start) fail("expected label");
    int label = resolveLabel(q, s.substr(start, pos - start));
    if (eat('^')) {
      skipWs();
      size_t ks = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == ks) fail("expected spine height after '^'");
      int k = std::stoi(std::string(s.substr(ks, pos - ks)));
      if (k < 1) fail("spine height must be >= 1");
      return spine(label, k);
    }
    return Tree::leaf(label);
  }
};

}  // namespace

Tree parseTree(const QO& q, std::string_view text) {
  TreeParser p{q, text};
  Tree t = p.parse();
  p.skipWs();
  if (p.pos != text.size()) p.fail("trailing input");
  return t;
}

std::string printTree(const QO& q, const Tree& t) {
  if (t.isLeaf()) return q.name(t.label());
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < t.children().size(); ++i) {
    if (i) os << ", ";
    os << printTree(q, t.children()[i]);
  }
  os << ")";
  return os.str();
}

}  // namespace wqo
