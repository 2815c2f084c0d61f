// Acceptance gate: runs every top-level criterion and prints one
// PASS/FAIL line each. Usage: acceptance <path-to-cli>.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "checks.hpp"
#include "correspond.hpp"
#include "eps.hpp"
#include "oracle.hpp"
#include "qo.hpp"
#include "seq.hpp"
#include "tree.hpp"

using namespace wqo;

namespace {

int g_failures = 0;

void report(int n, const char* what, bool ok, double seconds) {
  std::printf("criterion %2d: %s  %-55s (%.1fs)\n", n, ok ? "PASS" : "FAIL", what,
              seconds);
  if (!ok) ++g_failures;
}

template <typename F>
void criterion(int n, const char* what, F&& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "criterion %d threw: %s\n", n, e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
  report(n, what, ok, secs);
}

struct CmdResult {
  std::string out;
  int exitCode = -1;
};

CmdResult run(const std::string& cli, const std::string& args) {
  CmdResult r;
  std::string cmd = "'" + cli + "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];

  // Criteria 1 and 2 share the enumeration, so compute both in one pass.
  bool agreeT = true, agreeK = true;
  {
    auto start = std::chrono::steady_clock::now();
    for (const char* name : {"1", "chain2", "anti2"}) {
      QO q = builtinQO(name);
      auto trees = enumerateTrees(q, 6);
      for (const auto& s : trees)
        for (const auto& t : trees) {
          bool ft = leT(q, s, t), fk = leK(q, s, t);
          if (ft != bruteLeT(q, s, t)) agreeT = false;
          if (fk != bruteLeK(q, s, t) || (fk && !ft)) agreeK = false;
        }
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(1, "le_t matches the exhaustive oracle (<= 6 vertices)", agreeT, secs / 2);
    report(2, "le_k matches its oracle and implies le_t", agreeK, secs / 2);
  }

  criterion(3, "finite invariants o, h, w and the union/product laws", [] {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 600; ++i) {
      QO q = randomQO(rng, 1 + static_cast<int>(rng() % 5));
      int o = otype(q), h = heightOf(q), w = widthOf(q);
      if (o != bruteOtype(q) || o != q.equivClassCount()) return false;
      if (std::max(h, w) > o || o > h * w) return false;
    }
    for (int i = 0; i < 200; ++i) {
      QO p = randomQO(rng, 1 + static_cast<int>(rng() % 4));
      QO q = randomQO(rng, 1 + static_cast<int>(rng() % 4));
      if (otype(disjointUnion(p, q)) != otype(p) + otype(q)) return false;
      if (otype(product(p, q)) != otype(p) * otype(q)) return false;
    }
    return true;
  });

  criterion(4, "powerset order-type bounds and o(P_f(antichain n)) = 2^n", [] {
    std::mt19937_64 rng(202);
    for (int i = 0; i < 300; ++i) {
      QO q = randomQO(rng, 1 + static_cast<int>(rng() % 4));
      int o = otype(q);
      int op = otype(powersetF(q, q.size()));
      if (1 + o > op || op > (1 << o)) return false;
    }
    for (int n = 1; n <= 4; ++n) {
      QO anti = builtinQO("anti" + std::to_string(n));
      if (otype(powersetF(anti, n)) != (1 << n)) return false;
    }
    return true;
  });

  criterion(5, "P_f(S) isomorphic to the node closure of S under le_t", [] {
    QO c2 = builtinQO("chain2");
    auto pool = enumerateTrees(c2, 3);
    int p = static_cast<int>(pool.size());
    std::vector<int> pick;
    auto checkSet = [&](const std::vector<int>& sel) {
      int k = static_cast<int>(sel.size());
      // the quasi-order S inherited from le_t
      std::vector<std::string> names;
      std::vector<std::vector<bool>> rel(k, std::vector<bool>(k));
      for (int i = 0; i < k; ++i) names.push_back("t" + std::to_string(i));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) rel[i][j] = leT(c2, pool[sel[i]], pool[sel[j]]);
      QO qs = QO::fromRelation(names, rel);
      QO ps = powersetF(qs, k);
      for (int a = 1; a < (1 << k); ++a)
        for (int b = 1; b < (1 << k); ++b) {
          std::vector<Tree> ca, cb;
          std::string na = "{", nb = "{";
          for (int i = 0; i < k; ++i) {
            if (a >> i & 1) {
              if (na.size() > 1) na += ",";
              na += names[i];
              ca.push_back(pool[sel[i]]);
            }
            if (b >> i & 1) {
              if (nb.size() > 1) nb += ",";
              nb += names[i];
              cb.push_back(pool[sel[i]]);
            }
          }
          int ia = ps.indexOf(na + "}"), ib = ps.indexOf(nb + "}");
          if (ia < 0 || ib < 0) return false;
          bool dom = ps.le(ia, ib);
          bool tree = leT(c2, Tree::node(ca), Tree::node(cb));
          if (dom != tree) return false;
        }
      // the empty set sits strictly below every nonempty subset
      int ie = ps.indexOf("{}");
      if (ie < 0) return false;
      for (int a = 1; a < (1 << k); ++a) {
        std::string na = "{";
        for (int i = 0; i < k; ++i)
          if (a >> i & 1) {
            if (na.size() > 1) na += ",";
            na += names[i];
          }
        int ia = ps.indexOf(na + "}");
        if (!ps.le(ie, ia) || ps.le(ia, ie)) return false;
      }
      return true;
    };
    std::function<bool(int, int)> rec = [&](int from, int left) -> bool {
      if (!pick.empty() && !checkSet(pick)) return false;
      if (left == 0) return true;
      for (int i = from; i < p; ++i) {
        pick.push_back(i);
        bool ok = rec(i + 1, left - 1);
        pick.pop_back();
        if (!ok) return false;
      }
      return true;
    };
    return rec(0, 4);
  });

  criterion(6, "f embeds trees into sequences order-faithfully", [] {
    for (const char* name : {"chain1", "chain2", "chain3", "anti2", "anti3"}) {
      QO q = builtinQO(name);
      auto trees = enumerateTrees(q, 5);
      for (const auto& s : trees)
        for (const auto& t : trees)
          if (leT(q, s, t) != embeds(q, treeToSeq(s), treeToSeq(t))) return false;
    }
    return true;
  });

  criterion(7, "round trips f(g(s)) == s and g(f(t)) == t up to equivalence", [] {
    CheckConfig cfg;
    cfg.seed = 42;
    cfg.cases = 500;
    CheckResult r = checkCorrespondence(cfg);
    return r.pass() && r.total >= 500;
  });

  criterion(8, "the descending-pair embedding and the incomparable spine", [] {
    QO c2 = builtinQO("chain2");
    Tree ones = spine(1, 4);
    for (int i = 1; i <= 6; ++i)
      for (int j = 0; j < i; ++j) {
        for (int i2 = 1; i2 <= 6; ++i2)
          for (int j2 = 0; j2 < i2; ++j2) {
            bool coord = i <= i2 && j <= j2;
            if (leT(c2, embedDesc(i, j), embedDesc(i2, j2)) != coord) return false;
          }
        if (leT(c2, ones, embedDesc(i, j)) || leT(c2, embedDesc(i, j), ones))
          return false;
      }
    return true;
  });

  criterion(9, "epsilon terms: linearity, values, order-reflecting tree map", [] {
    for (unsigned omega = 0; omega <= 2; ++omega) {
      CheckConfig cfg;
      cfg.maxSize = 5;
      cfg.omega = omega;
      if (!checkEpsilon(cfg).pass()) return false;
    }
    return true;
  });

  criterion(10, "symbolic g point values", [] {
    return toString(gType(parseOrdinal("0"))) == "0" &&
           toString(gType(parseOrdinal("1"))) == "w" &&
           toString(gType(parseOrdinal("2"))) == "e_0" &&
           toString(gType(parseOrdinal("5"))) == "e_3" &&
           toString(gType(parseOrdinal("w"))) == "e_w" &&
           toString(gType(parseOrdinal("w^w"))) == "e_w^w";
  });

  criterion(11, "sequence decision sanity on 1000 random pairs", [] {
    CheckConfig cfg;
    cfg.seed = 1;
    cfg.cases = 1000;
    CheckResult r = checkSequences(cfg);
    return r.pass() && r.total >= 1000;
  });

  criterion(12, "documented CLI commands reproduce their output", [&] {
    struct Doc {
      const char* args;
      const char* out;
      int exitCode;
    };
    const Doc docs[] = {
        {"otype --qo chain2 tf", "e_0\n", 0},
        {"otype --qo 1 tf", "w\n", 0},
        {"otype --qo anti3 seq", "e_1\n", 0},
        {"qo stats --qo chain3", "size 3\nclasses 3\notype 3\nheight 3\nwidth 1\n", 0},
        {"tree cmp --qo chain2 a '(a)'", "true\n", 0},
        {"tree cmp --qo chain2 '0^4' '(1, 0^2)'", "false\n", 1},
        {"tree cmp --kruskal --qo chain2 '(a, a)' '(a)'", "false\n", 1},
        {"seq cmp --qo chain2 'a + a' '(a)^w'", "true\n", 0},
        {"convert --qo anti2 tree2seq '(a, b)'", "(a + b)^w\n", 0},
        {"convert --qo anti2 seq2tree '(a + b)^w'", "(a, b)\n", 0},
        {"eps cmp --omega 1 w 'e(0)'", "less\n", 0},
        {"eps totree --omega 1 w", "((1))\n", 0},
        {"check correspondence --seed 1 --cases 100", "100/100 ok\n", 0},
        {"check sequences --seed 1 --cases 250", "250/250 ok\n", 0},
    };
    for (const auto& d : docs) {
      CmdResult first = run(cli, d.args);
      CmdResult second = run(cli, d.args);
      if (first.out != d.out || first.exitCode != d.exitCode ||
          second.out != first.out || second.exitCode != first.exitCode) {
        std::fprintf(stderr, "command '%s': got exit %d, output:\n%s", d.args,
                     first.exitCode, first.out.c_str());
        return false;
      }
    }
    return true;
  });

  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", g_failures);
  return 1;
}
