#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordinal.hpp"

namespace wqo {

/// Explicit finite quasi-order: named elements and a reflexive-transitive
/// boolean relation. Immutable after construction.
class QO {
 public:
  QO() = default;

  // Smallest reflexive-transitive relation containing the given pairs.
  static QO closure(std::vector<std::string> names,
                    const std::vector<std::pair<int, int>>& pairs);
  // Relation assumed already closed (used by combinators).
  static QO fromRelation(std::vector<std::string> names,
                         std::vector<std::vector<bool>> rel);

  int size() const { return static_cast<int>(names_.size()); }
  bool le(int a, int b) const { return rel_[a][b]; }
  bool equiv(int a, int b) const { return rel_[a][b] && rel_[b][a]; }
  bool incomparable(int a, int b) const { return !rel_[a][b] && !rel_[b][a]; }
  const std::string& name(int i) const { return names_[i]; }
  // -1 when absent
  int indexOf(std::string_view name) const;

  int equivClassCount() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> rel_;
};

// multiplicity map, element index -> count >= 1
using Multiset = std::map<int, int>;

QO disjointUnion(const QO& p, const QO& q);
QO product(const QO& p, const QO& q);
// All subsets of cardinality <= maxCard (including the empty set) under
// the domination ordering.
QO powersetF(const QO& q, int maxCard);
// Term ordering on finite multisets, decided by bipartite matching.
bool multisetLe(const QO& q, const Multiset& s, const Multiset& t);

// Induced suborders: L(x) = {y | x !<= y}, L_<=(x) = {y | y <= x},
// L_incomp(x) = {y | x incomparable with y}.
QO lSet(const QO& q, int x);
QO lLe(const QO& q, int x);
QO lIncomp(const QO& q, int x);

// Ordinal invariants on finite instances (naturals).
int otype(const QO& q);
int heightOf(const QO& q);
int widthOf(const QO& q);

// Line-based text format: `elem NAME` then `le NAME NAME`; `#` comments.
QO parseQO(std::string_view text);
// Emits the same format with the transitive reduct.
std::string printQO(const QO& q);

// `1`, `chain2`, `chain3`, `anti2`, `anti3` (and chainN/antiN generally),
// elements named a, b, c, ...; throws DomainError for unknown names.
QO builtinQO(std::string_view name);

// Resolves a label token against a QO: by name, or by decimal index.
int resolveLabel(const QO& q, std::string_view token);

}  // namespace wqo
