// Command-line front end for libwqo. Talks to the library exclusively
// through the C interface in wqo/wqo.h.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wqo/wqo.h"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

[[noreturn]] void die(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(kExitError);
}

[[noreturn]] void dieLast() { die(wqo_last_error()); }

// --qo accepts a builtin name or a file in the qo text format.
wqo_qo* openQO(const std::string& spec) {
  wqo_qo* q = nullptr;
  if (wqo_qo_open_builtin(spec.c_str(), &q) == WQO_OK) return q;
  std::ifstream in(spec);
  if (!in) die("--qo: no builtin or readable file named '" + spec + "'");
  std::ostringstream text;
  text << in.rdbuf();
  if (wqo_qo_open_text(text.str().c_str(), &q) != WQO_OK) dieLast();
  return q;
}

struct QOGuard {
  wqo_qo* q;
  ~QOGuard() { wqo_qo_close(q); }
};

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { wqo_string_free(s); }
};

int boolVerdict(int value) {
  std::cout << (value ? "true" : "false") << "\n";
  return value ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wqo: embeddability orders on finite trees and transfinite sequences"};
  app.require_subcommand(1);

  std::string qoSpec = "1";
  std::string expr1, expr2, direction, target, suite, epsTerm1, epsTerm2;
  bool kruskal = false;
  uint64_t seed = 1;
  int cases = 100;
  int maxSize = 6;
  unsigned omega = 1;

  auto* qoCmd = app.add_subcommand("qo", "quasi-order utilities");
  auto* qoStats = qoCmd->add_subcommand("stats", "print size, classes, otype, height, width");
  qoStats->add_option("--qo", qoSpec, "builtin name or file path");

  auto* treeCmd = app.add_subcommand("tree", "tree order decisions");
  auto* treeCmp = treeCmd->add_subcommand("cmp", "decide tree1 <= tree2");
  treeCmp->add_option("tree1", expr1)->required();
  treeCmp->add_option("tree2", expr2)->required();
  treeCmp->add_option("--qo", qoSpec, "builtin name or file path");
  treeCmp->add_flag("--kruskal", kruskal, "use the inf-preserving order");

  auto* seqCmd = app.add_subcommand("seq", "sequence order decisions");
  auto* seqCmp = seqCmd->add_subcommand("cmp", "decide seq1 embeds into seq2");
  seqCmp->add_option("seq1", expr1)->required();
  seqCmp->add_option("seq2", expr2)->required();
  seqCmp->add_option("--qo", qoSpec, "builtin name or file path");

  auto* convert = app.add_subcommand("convert", "map between trees and sequences");
  convert->add_option("direction", direction, "tree2seq or seq2tree")->required();
  convert->add_option("expr", expr1)->required();
  convert->add_option("--qo", qoSpec, "builtin name or file path");

  auto* otype = app.add_subcommand("otype", "order-type invariants");
  otype->add_option("target", target, "qo, tf, or seq")->required();
  otype->add_option("--qo", qoSpec, "builtin name or file path");

  auto* eps = app.add_subcommand("eps", "epsilon-notation terms");
  auto* epsCmp = eps->add_subcommand("cmp", "compare two terms");
  epsCmp->add_option("term1", epsTerm1)->required();
  epsCmp->add_option("term2", epsTerm2)->required();
  epsCmp->add_option("--omega", omega, "length of the index chain");
  auto* epsTotree = eps->add_subcommand("totree", "print the tree image of a term");
  epsTotree->add_option("term", epsTerm1)->required();
  epsTotree->add_option("--omega", omega, "length of the index chain");

  auto* check = app.add_subcommand("check", "run a property suite");
  check->add_option("suite", suite, "trees, sequences, correspondence, or epsilon")
      ->required();
  check->add_option("--seed", seed, "RNG seed for the randomized suites");
  check->add_option("--cases", cases, "number of random cases");
  check->add_option("--max-size", maxSize, "size cap (tree vertices / term nodes)");
  check->add_option("--omega", omega, "length of the epsilon index chain");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  if (qoStats->parsed()) {
    QOGuard q{openQO(qoSpec)};
    StringGuard s;
    if (wqo_qo_stats(q.q, &s.s) != WQO_OK) dieLast();
    std::cout << s.s;
    return kExitTrue;
  }
  if (treeCmp->parsed()) {
    QOGuard q{openQO(qoSpec)};
    int res = 0;
    if (wqo_tree_cmp(q.q, expr1.c_str(), expr2.c_str(), kruskal ? 1 : 0, &res) != WQO_OK)
      dieLast();
    return boolVerdict(res);
  }
  if (seqCmp->parsed()) {
    QOGuard q{openQO(qoSpec)};
    int res = 0;
    if (wqo_seq_cmp(q.q, expr1.c_str(), expr2.c_str(), &res) != WQO_OK) dieLast();
    return boolVerdict(res);
  }
  if (convert->parsed()) {
    QOGuard q{openQO(qoSpec)};
    StringGuard s;
    if (wqo_convert(q.q, direction.c_str(), expr1.c_str(), &s.s) != WQO_OK) dieLast();
    std::cout << s.s << "\n";
    return kExitTrue;
  }
  if (otype->parsed()) {
    QOGuard q{openQO(qoSpec)};
    StringGuard s;
    if (wqo_otype(q.q, target.c_str(), &s.s) != WQO_OK) dieLast();
    std::cout << s.s << "\n";
    return kExitTrue;
  }
  if (epsCmp->parsed()) {
    int res = 0;
    if (wqo_eps_cmp(omega, epsTerm1.c_str(), epsTerm2.c_str(), &res) != WQO_OK)
      dieLast();
    std::cout << (res < 0 ? "less" : res > 0 ? "greater" : "equal") << "\n";
    return kExitTrue;
  }
  if (epsTotree->parsed()) {
    StringGuard s;
    if (wqo_eps_to_tree(omega, epsTerm1.c_str(), &s.s) != WQO_OK) dieLast();
    std::cout << s.s << "\n";
    return kExitTrue;
  }
  if (check->parsed()) {
    int passed = 0;
    StringGuard s;
    if (wqo_run_check(suite.c_str(), seed, cases, maxSize, omega, &passed, &s.s) !=
        WQO_OK)
      dieLast();
    std::cout << s.s;
    return passed ? kExitTrue : kExitFalse;
  }
  die("no subcommand");
}
