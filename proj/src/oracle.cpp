#include "oracle.hpp"

#include <algorithm>

namespace wqo {

namespace {

// Preorder flattening with explicit parent links; vertex 0 is the root.
struct Flat {
  std::vector<int> parent;  // -1 for root
  std::vector<int> depth;
  std::vector<int> label;   // -1 for internal vertices

  int add(const Tree& t, int par) {
    int id = static_cast<int>(parent.size());
    parent.push_back(par);
    depth.push_back(par < 0 ? 0 : depth[par] + 1);
    label.push_back(t.isLeaf() ? t.label() : -1);
    for (const auto& c : t.children()) add(c, id);
    return id;
  }

  int size() const { return static_cast<int>(parent.size()); }

  bool strictAncestor(int a, int b) const {
    while (b >= 0) {
      b = parent[b];
      if (b == a) return true;
    }
    return false;
  }

  int lca(int a, int b) const {
    while (depth[a] > depth[b]) a = parent[a];
    while (depth[b] > depth[a]) b = parent[b];
    while (a != b) {
      a = parent[a];
      b = parent[b];
    }
    return a;
  }
};

constexpr int kBruteTreeCap = 8;

// Backtracking over vertex maps in preorder: each vertex goes to a
// strict descendant of its parent's image, leaves to leaves with a
// smaller-or-equal label. `checkInf` adds pairwise LCA preservation.
struct MapSearch {
  const QO& q;
  const Flat& s;
  const Flat& t;
  bool checkInf;
  std::vector<int> img;

  bool feasible(int x, int v) const {
    if (s.label[x] >= 0) {
      if (t.label[v] < 0 || !q.le(s.label[x], t.label[v])) return false;
    } else {
      if (t.label[v] >= 0) return false;  // internal vertices have children
    }
    if (s.parent[x] >= 0 && !t.strictAncestor(img[s.parent[x]], v)) return false;
    if (checkInf)
      for (int y = 0; y < x; ++y)
        if (img[s.lca(x, y)] != t.lca(v, img[y])) return false;
    return true;
  }

  bool search(int x) {
    if (x == s.size()) return true;
    for (int v = 0; v < t.size(); ++v) {
      if (!feasible(x, v)) continue;
      img[x] = v;
      if (search(x + 1)) return true;
    }
    return false;
  }

  bool run() {
    img.assign(s.size(), -1);
    return search(0);
  }
};

void capTrees(const Tree& s, const Tree& t) {
  if (s.vertexCount() > kBruteTreeCap || t.vertexCount() > kBruteTreeCap)
    throw LimitError("brute tree comparison capped at " +
                     std::to_string(kBruteTreeCap) + " vertices");
}

}  // namespace

bool bruteLeT(const QO& q, const Tree& s, const Tree& t) {
  capTrees(s, t);
  Flat fs, ft;
  fs.add(s, -1);
  ft.add(t, -1);
  MapSearch m{q, fs, ft, false, {}};
  return m.run();
}

bool bruteLeK(const QO& q, const Tree& s, const Tree& t) {
  capTrees(s, t);
  Flat fs, ft;
  fs.add(s, -1);
  ft.add(t, -1);
  MapSearch m{q, fs, ft, true, {}};
  return m.run();
}

int bruteOtype(const QO& q) {
  if (q.size() > 7) throw LimitError("brute otype capped at 7 elements");
  if (q.size() == 0) return 0;
  int best = 0;
  for (int x = 0; x < q.size(); ++x)
    best = std::max(best, bruteOtype(lSet(q, x)) + 1);
  return best;
}

bool higmanEmbeds(const QO& q, const std::vector<int>& u, const std::vector<int>& v) {
  size_t j = 0;
  for (int a : u) {
    while (j < v.size() && !q.le(a, v[j])) ++j;
    if (j == v.size()) return false;
    ++j;
  }
  return true;
}

namespace {

void collectSub(const Indec& c, std::vector<Indec>& out) {
  out.push_back(c);
  if (!c.atom)
    for (const auto& b : c.body) collectSub(b, out);
}

}  // namespace

std::vector<Indec> factorSearch(const QO& q, const NormalSeq& s) {
  std::vector<Indec> cands;
  for (const auto& c : s.components) collectSub(c, cands);
  for (int a : seqRange(s)) cands.push_back(Indec::makeAtom(a));
  std::vector<Indec> hits;
  for (const auto& c : cands) {
    NormalSeq pw{{Indec::makePow({c})}};
    if (embeds(q, pw, s)) hits.push_back(c);
  }
  return maximalIndecs(q, hits);
}

std::vector<Tree> enumerateTrees(const QO& q, int maxVertices) {
  std::vector<Tree> all;
  std::vector<int> vcount;
  for (int l = 0; l < q.size(); ++l) {
    all.push_back(Tree::leaf(l));
    vcount.push_back(1);
  }
  for (int n = 2; n <= maxVertices; ++n) {
    // children as a non-decreasing index sequence summing to n-1 vertices
    std::vector<int> pick;
    auto dfs = [&](auto&& self, int minIdx, int remaining) -> void {
      if (remaining == 0) {
        if (pick.empty()) return;
        std::vector<Tree> children;
        for (int i : pick) children.push_back(all[i]);
        all.push_back(Tree::node(std::move(children)));
        vcount.push_back(n);
        return;
      }
      // vcount is non-decreasing, so the size cutoff terminates the scan
      for (size_t i = minIdx; i < all.size() && vcount[i] <= remaining; ++i) {
        pick.push_back(static_cast<int>(i));
        self(self, static_cast<int>(i), remaining - vcount[i]);
        pick.pop_back();
      }
    };
    dfs(dfs, 0, n - 1);
  }
  return all;
}

QO randomQO(std::mt19937_64& rng, int n) {
  if (n < 1 || n > 26) throw DomainError("randomQO: n must be in 1..26");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && rng() % 4 == 0) pairs.emplace_back(i, j);
  return QO::closure(std::move(names), pairs);
}

Tree randomTree(std::mt19937_64& rng, const QO& q, int maxHeight) {
  if (maxHeight <= 0 || rng() % 3 == 0)
    return Tree::leaf(static_cast<int>(rng() % q.size()));
  int k = 1 + static_cast<int>(rng() % 3);
  std::vector<Tree> children;
  for (int i = 0; i < k; ++i) children.push_back(randomTree(rng, q, maxHeight - 1));
  return Tree::node(std::move(children));
}

Indec randomIndec(std::mt19937_64& rng, const QO& q, int maxDepth) {
  if (maxDepth <= 0 || rng() % 2 == 0)
    return Indec::makeAtom(static_cast<int>(rng() % q.size()));
  int k = 1 + static_cast<int>(rng() % 3);
  std::vector<Indec> body;
  for (int i = 0; i < k; ++i) body.push_back(randomIndec(rng, q, maxDepth - 1));
  return Indec::makePow(std::move(body));
}

NormalSeq randomNormalSeq(std::mt19937_64& rng, const QO& q, int maxDepth,
                          int maxComponents) {
  int k = 1 + static_cast<int>(rng() % maxComponents);
  NormalSeq s;
  for (int i = 0; i < k; ++i) s.components.push_back(randomIndec(rng, q, maxDepth));
  return s;
}

}  // namespace wqo
