#include "qo.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>

namespace wqo {

QO QO::closure(std::vector<std::string> names,
               const std::vector<std::pair<int, int>>& pairs) {
  int n = static_cast<int>(names.size());
  {
    std::set<std::string> seen(names.begin(), names.end());
    if (static_cast<int>(seen.size()) != n) throw DomainError("duplicate element names");
  }
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) rel[i][i] = true;
  for (auto [i, j] : pairs) {
    if (i < 0 || i >= n || j < 0 || j >= n) throw DomainError("pair index out of range");
    rel[i][j] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (rel[i][k])
        for (int j = 0; j < n; ++j)
          if (rel[k][j]) rel[i][j] = true;
  return fromRelation(std::move(names), std::move(rel));
}

QO QO::fromRelation(std::vector<std::string> names, std::vector<std::vector<bool>> rel) {
  QO q;
  q.names_ = std::move(names);
  q.rel_ = std::move(rel);
  return q;
}

int QO::indexOf(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

int QO::equivClassCount() const {
  int n = size(), count = 0;
  for (int i = 0; i < n; ++i) {
    bool first = true;
    for (int j = 0; j < i; ++j)
      if (equiv(i, j)) first = false;
    if (first) ++count;
  }
  return count;
}

QO disjointUnion(const QO& p, const QO& q) {
  int n = p.size(), m = q.size();
  std::vector<std::string> names;
  bool collide = false;
  for (int i = 0; i < n; ++i)
    if (q.indexOf(p.name(i)) >= 0) collide = true;
  for (int i = 0; i < n; ++i) names.push_back(collide ? "l." + p.name(i) : p.name(i));
  for (int j = 0; j < m; ++j) names.push_back(collide ? "r." + q.name(j) : q.name(j));
  std::vector<std::vector<bool>> rel(n + m, std::vector<bool>(n + m, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rel[i][j] = p.le(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) rel[n + i][n + j] = q.le(i, j);
  return QO::fromRelation(std::move(names), std::move(rel));
}

QO product(const QO& p, const QO& q) {
  int n = p.size(), m = q.size();
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) names.push_back("(" + p.name(i) + "," + q.name(j) + ")");
  std::vector<std::vector<bool>> rel(n * m, std::vector<bool>(n * m, false));
  for (int a = 0; a < n * m; ++a)
    for (int b = 0; b < n * m; ++b)
      rel[a][b] = p.le(a / m, b / m) && q.le(a % m, b % m);
  return QO::fromRelation(std::move(names), std::move(rel));
}

namespace {

std::string subsetName(const QO& q, uint64_t mask) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < q.size(); ++i)
    if (mask >> i & 1) {
      if (!first) s += ",";
      first = false;
      s += q.name(i);
    }
  return s + "}";
}

}  // namespace

QO powersetF(const QO& q, int maxCard) {
  int n = q.size();
  if (n > 20) throw LimitError("powersetF: base order too large");
  std::vector<uint64_t> subsets;
  for (uint64_t m = 0; m < (uint64_t(1) << n); ++m)
    if (std::popcount(m) <= maxCard) subsets.push_back(m);
  int k = static_cast<int>(subsets.size());
  std::vector<std::string> names;
  for (auto m : subsets) names.push_back(subsetName(q, m));
  std::vector<std::vector<bool>> rel(k, std::vector<bool>(k, false));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      bool dom = true;
      for (int x = 0; x < n && dom; ++x) {
        if (!(subsets[a] >> x & 1)) continue;
        bool found = false;
        for (int y = 0; y < n && !found; ++y)
          if ((subsets[b] >> y & 1) && q.le(x, y)) found = true;
        dom = found;
      }
      rel[a][b] = dom;
    }
  return QO::fromRelation(std::move(names), std::move(rel));
}

namespace {

// Kuhn's augmenting-path matching; adj[l] lists right nodes usable by left l.
bool perfectLeftMatching(const std::vector<std::vector<int>>& adj, int rightCount) {
  int L = static_cast<int>(adj.size());
  std::vector<int> matchRight(rightCount, -1);
  std::vector<char> used;
  std::function<bool(int)> tryAugment = [&](int l) -> bool {
    for (int r : adj[l]) {
      if (used[r]) continue;
      used[r] = 1;
      if (matchRight[r] == -1 || tryAugment(matchRight[r])) {
        matchRight[r] = l;
        return true;
      }
    }
    return false;
  };
  for (int l = 0; l < L; ++l) {
    used.assign(rightCount, 0);
    if (!tryAugment(l)) return false;
  }
  return true;
}

}  // namespace

bool multisetLe(const QO& q, const Multiset& s, const Multiset& t) {
  std::vector<int> left, right;
  for (auto [x, c] : s) {
    if (c < 1 || x < 0 || x >= q.size()) throw DomainError("bad multiset entry");
    for (int i = 0; i < c; ++i) left.push_back(x);
  }
  for (auto [y, c] : t) {
    if (c < 1 || y < 0 || y >= q.size()) throw DomainError("bad multiset entry");
    for (int i = 0; i < c; ++i) right.push_back(y);
  }
  std::vector<std::vector<int>> adj(left.size());
  for (size_t l = 0; l < left.size(); ++l)
    for (size_t r = 0; r < right.size(); ++r)
      if (q.le(left[l], right[r])) adj[l].push_back(static_cast<int>(r));
  return perfectLeftMatching(adj, static_cast<int>(right.size()));
}

namespace {

QO induced(const QO& q, const std::vector<int>& keep) {
  std::vector<std::string> names;
  for (int i : keep) names.push_back(q.name(i));
  int k = static_cast<int>(keep.size());
  std::vector<std::vector<bool>> rel(k, std::vector<bool>(k, false));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) rel[a][b] = q.le(keep[a], keep[b]);
  return QO::fromRelation(std::move(names), std::move(rel));
}

void checkElem(const QO& q, int x) {
  if (x < 0 || x >= q.size()) throw DomainError("element index out of range");
}

}  // namespace

QO lSet(const QO& q, int x) {
  checkElem(q, x);
  std::vector<int> keep;
  for (int y = 0; y < q.size(); ++y)
    if (!q.le(x, y)) keep.push_back(y);
  return induced(q, keep);
}

QO lLe(const QO& q, int x) {
  checkElem(q, x);
  std::vector<int> keep;
  for (int y = 0; y < q.size(); ++y)
    if (q.le(y, x)) keep.push_back(y);
  return induced(q, keep);
}

QO lIncomp(const QO& q, int x) {
  checkElem(q, x);
  std::vector<int> keep;
  for (int y = 0; y < q.size(); ++y)
    if (q.incomparable(x, y)) keep.push_back(y);
  return induced(q, keep);
}

namespace {

// Shared recursion skeleton over subsets of surviving elements, memoized
// on the subset bitmask. `survivors(x, mask)` selects the sub-mask that
// the recursion descends into for element x.
template <typename F>
int maskRecursion(const QO& q, F&& survivors) {
  if (q.size() > 63) throw LimitError("invariant recursion: order too large");
  std::unordered_map<uint64_t, int> memo;
  std::function<int(uint64_t)> rec = [&](uint64_t mask) -> int {
    if (mask == 0) return 0;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int best = 0;
    for (int x = 0; x < q.size(); ++x)
      if (mask >> x & 1) best = std::max(best, rec(survivors(x, mask)) + 1);
    memo.emplace(mask, best);
    return best;
  };
  return rec(q.size() == 0 ? 0 : (~uint64_t(0) >> (64 - q.size())));
}

}  // namespace

int otype(const QO& q) {
  return maskRecursion(q, [&](int x, uint64_t mask) {
    uint64_t sub = 0;
    for (int y = 0; y < q.size(); ++y)
      if ((mask >> y & 1) && !q.le(x, y)) sub |= uint64_t(1) << y;
    return sub;
  });
}

int heightOf(const QO& q) {
  // height descends into the strict down-set so the recursion is
  // well-founded; equivalent elements do not stack
  return maskRecursion(q, [&](int x, uint64_t mask) {
    uint64_t sub = 0;
    for (int y = 0; y < q.size(); ++y)
      if ((mask >> y & 1) && q.le(y, x) && !q.le(x, y)) sub |= uint64_t(1) << y;
    return sub;
  });
}

int widthOf(const QO& q) {
  return maskRecursion(q, [&](int x, uint64_t mask) {
    uint64_t sub = 0;
    for (int y = 0; y < q.size(); ++y)
      if ((mask >> y & 1) && q.incomparable(x, y)) sub |= uint64_t(1) << y;
    return sub;
  });
}

QO parseQO(std::string_view text) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> lePairs;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "elem") {
      std::string name;
      if (!(ls >> name)) throw ParseError("qo line " + std::to_string(lineNo) + ": elem needs a name");
      names.push_back(name);
    } else if (kw == "le") {
      std::string a, b;
      if (!(ls >> a >> b)) throw ParseError("qo line " + std::to_string(lineNo) + ": le needs two names");
      lePairs.emplace_back(a, b);
    } else {
      throw ParseError("qo line " + std::to_string(lineNo) + ": unknown keyword '" + kw + "'");
    }
    std::string extra;
    if (ls >> extra) throw ParseError("qo line " + std::to_string(lineNo) + ": trailing tokens");
  }
  std::vector<std::pair<int, int>> pairs;
  auto lookup = [&](const std::string& n) {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return static_cast<int>(i);
    throw ParseError("qo: unknown element '" + n + "'");
  };
  for (auto& [a, b] : lePairs) pairs.emplace_back(lookup(a), lookup(b));
  return QO::closure(std::move(names), pairs);
}

std::string printQO(const QO& q) {
  std::ostringstream os;
  for (int i = 0; i < q.size(); ++i) os << "elem " << q.name(i) << "\n";
  int n = q.size();
  // representative per equivalence class: smallest index
  std::vector<int> rep(n);
  for (int i = 0; i < n; ++i) {
    rep[i] = i;
    for (int j = 0; j < i; ++j)
      if (q.equiv(i, j)) {
        rep[i] = rep[j];
        break;
      }
  }
  // cycles restore equivalences under closure
  for (int i = 0; i < n; ++i)
    if (rep[i] != i) os << "le " << q.name(rep[i]) << " " << q.name(i) << "\n"
                       << "le " << q.name(i) << " " << q.name(rep[i]) << "\n";
  // transitive reduct on class representatives
  for (int i = 0; i < n; ++i) {
    if (rep[i] != i) continue;
    for (int j = 0; j < n; ++j) {
      if (rep[j] != j || i == j || !q.le(i, j) || q.le(j, i)) continue;
      bool redundant = false;
      for (int k = 0; k < n && !redundant; ++k) {
        if (rep[k] != k || k == i || k == j) continue;
        if (q.le(i, k) && !q.le(k, i) && q.le(k, j) && !q.le(j, k)) redundant = true;
      }
      if (!redundant) os << "le " << q.name(i) << " " << q.name(j) << "\n";
    }
  }
  return os.str();
}

QO builtinQO(std::string_view name) {
  auto make = [](int n, bool chain) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    std::vector<std::pair<int, int>> pairs;
    if (chain)
      for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return QO::closure(std::move(names), pairs);
  };
  if (name == "1") return make(1, true);
  auto parseCount = [&](std::string_view prefix) -> int {
    if (name.substr(0, prefix.size()) != prefix) return -1;
    auto rest = name.substr(prefix.size());
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        }))
      return -1;
    int n = std::stoi(std::string(rest));
    if (n < 1 || n > 26) throw DomainError("builtin qo size out of range");
    return n;
  };
  if (int n = parseCount("chain"); n > 0) return make(n, true);
  if (int n = parseCount("anti"); n > 0) return make(n, false);
  throw DomainError("unknown builtin qo '" + std::string(name) + "'");
}

int resolveLabel(const QO& q, std::string_view token) {
  int i = q.indexOf(token);
  if (i >= 0) return i;
  if (!token.empty() && std::all_of(token.begin(), token.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      })) {
    int idx = std::stoi(std::string(token));
    if (idx < q.size()) return idx;
  }
  throw ParseError("unknown label '" + std::string(token) + "'");
}

}  // namespace wqo
