#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qo.hpp"
#include "seq.hpp"
#include "tree.hpp"

namespace wqo {

// Leaf -> atom; node -> w-power of the concatenated child images.
// The result has length w^height(t).
NormalSeq treeToSeq(const Tree& t);
Indec treeToIndec(const Tree& t);

// Atom -> leaf; w-power -> node over the images of its cofinal factors.
// pre: s is a single indecomposable component.
Tree seqToTree(const QO& q, const NormalSeq& s);

/// Round-trip equivalence report: one case per sampled tree or sequence,
/// checking mutual le_T / mutual embeddability after the round trip.
struct EquivReport {
  struct Case {
    int index;
    std::string direction;  // "tree" or "seq"
    bool ok;
  };
  std::vector<Case> cases;
  uint64_t seed = 0;
  int okCount() const;
  int total() const { return static_cast<int>(cases.size()); }
  std::string text() const;
};

EquivReport checkEquivalence(const QO& q, const std::vector<Tree>& trees,
                             const std::vector<NormalSeq>& seqs);

}  // namespace wqo
