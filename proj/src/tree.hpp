#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eps.hpp"
#include "ordinal.hpp"
#include "qo.hpp"

namespace wqo {

/// Finite leaf-labelled tree: a leaf carrying a label index into the
/// ambient QO, or an internal node with >= 1 children. Child order
/// carries no semantics.
class Tree {
 public:
  static Tree leaf(int label) {
    Tree t;
    t.label_ = label;
    return t;
  }
  static Tree node(std::vector<Tree> children) {
    if (children.empty()) throw DomainError("tree node needs >= 1 children");
    Tree t;
    t.children_ = std::move(children);
    return t;
  }

  bool isLeaf() const { return children_.empty(); }
  int label() const { return label_; }
  const std::vector<Tree>& children() const { return children_; }

  int height() const;
  int vertexCount() const;

 private:
  Tree() = default;
  int label_ = -1;
  std::vector<Tree> children_;
};

bool operator==(const Tree& a, const Tree& b);
inline bool operator!=(const Tree& a, const Tree& b) { return !(a == b); }

// Non-branching tree with a single leaf at depth k-1; pre: k >= 1.
Tree spine(int label, int k);

// Tree-homomorphism order: inductive forall/exists decision, memoized.
bool leT(const QO& q, const Tree& s, const Tree& t);
// Kruskal (homeomorphic, inf-preserving) order: recursive decision with
// injective child assignment by augmenting-path matching.
bool leK(const QO& q, const Tree& s, const Tree& t);

// The width lower-bound construction over labels {0,1}: pre j < i.
Tree embedDesc(int i, int j);

// Label order 0 < 1 < e0 < e1 < ... for the epsilon-to-tree map.
QO epsLabelQO(OmegaOrder omega);
// Order-reflecting map from the epsilon notation system into trees over
// epsLabelQO(omega); pre: t valid over omega.
Tree epsToTree(const EpsTerm& t, OmegaOrder omega);

/// Symbolic maximal order type: 0, w, or an epsilon number with a
/// CNF index below epsilon_0.
struct SymbolicOrdinal {
  enum class Kind { Zero, Omega, Eps };
  Kind kind;
  Ordinal epsIndex;  // meaningful for Kind::Eps
};

bool operator==(const SymbolicOrdinal& a, const SymbolicOrdinal& b);
// Maximal order type of trees over labels of order type `a`.
SymbolicOrdinal gType(const Ordinal& a);
std::string toString(const SymbolicOrdinal& s);

// Grammar: leaf = label; node = `(T1, T2, ...)`; spine sugar `label^k`.
Tree parseTree(const QO& q, std::string_view text);
std::string printTree(const QO& q, const Tree& t);

}  // namespace wqo
