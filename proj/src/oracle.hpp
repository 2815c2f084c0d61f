#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qo.hpp"
#include "seq.hpp"
#include "tree.hpp"

namespace wqo {

// Brute-force references for validation only. All are exponential or
// factorial by design and enforce hard size caps (LimitError).

// Exhaustive search over ancestor-preserving, label-respecting vertex
// maps; trees capped at 8 vertices each.
bool bruteLeT(const QO& q, const Tree& s, const Tree& t);
// Same search, additionally requiring infimum (LCA) preservation for
// every vertex pair.
bool bruteLeK(const QO& q, const Tree& s, const Tree& t);

// Maximum chain length over all permutation-induced strict linear
// extensions of Q modulo equivalence; |Q| capped at 7.
int bruteOtype(const QO& q);

// Greedy leftmost subsequence embedding of words over Q (exact for the
// Higman order on finite words).
bool higmanEmbeds(const QO& q, const std::vector<int>& u, const std::vector<int>& v);

// Definition-based cofinal-factor search: candidates are sub-components
// of s plus atoms over its range, kept when candidate^w embeds into s,
// reduced to maximal representatives.
std::vector<Indec> factorSearch(const QO& q, const NormalSeq& s);

// Test-harness generators (deterministic).
// All trees over q with at most maxVertices vertices, children in
// canonical (index-sorted multiset) order.
std::vector<Tree> enumerateTrees(const QO& q, int maxVertices);
// Random reflexive-transitive relation on n named elements.
QO randomQO(std::mt19937_64& rng, int n);
// Random tree with height <= maxHeight and bounded branching.
Tree randomTree(std::mt19937_64& rng, const QO& q, int maxHeight);
// Random normal form with w-power nesting depth <= maxDepth.
NormalSeq randomNormalSeq(std::mt19937_64& rng, const QO& q, int maxDepth,
                          int maxComponents);
Indec randomIndec(std::mt19937_64& rng, const QO& q, int maxDepth);

}  // namespace wqo
