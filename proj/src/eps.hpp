#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ordinal.hpp"

namespace wqo {

/// Finite chain of epsilon indices 0 < 1 < ... < size-1.
struct OmegaOrder {
  unsigned size = 0;
};

/// Terms of the epsilon-number notation system over an index chain:
/// constants 0, w, e(a), and base-2 normal-form composites
/// <t_0, ..., t_{k-1}> with t_0 > t_1 > ... > t_{k-1}.
class EpsTerm {
 public:
  enum class Kind { Zero, Omega, Eps, Seq };

  static EpsTerm zero() { return EpsTerm(Kind::Zero); }
  static EpsTerm omega() { return EpsTerm(Kind::Omega); }
  static EpsTerm eps(unsigned index) {
    EpsTerm t(Kind::Eps);
    t.index_ = index;
    return t;
  }
  static EpsTerm seq(std::vector<EpsTerm> parts) {
    EpsTerm t(Kind::Seq);
    t.parts_ = std::move(parts);
    return t;
  }

  Kind kind() const { return kind_; }
  unsigned epsIndex() const { return index_; }
  const std::vector<EpsTerm>& parts() const { return parts_; }
  unsigned nodeCount() const;

 private:
  explicit EpsTerm(Kind k) : kind_(k) {}
  Kind kind_;
  unsigned index_ = 0;
  std::vector<EpsTerm> parts_;
};

// Empty string when valid; otherwise a diagnostic naming the violated clause.
std::string validateDiag(const EpsTerm& t, OmegaOrder omega);
bool validate(const EpsTerm& t, OmegaOrder omega);

// Strict linear order on valid terms; -1, 0, 1. Equality is syntactic.
int epsCompare(const EpsTerm& s, const EpsTerm& t);

// t < w, i.e. t denotes a natural number.
bool epsIsFinite(const EpsTerm& t);
// pre: epsIsFinite(t)
BigNat epsValue(const EpsTerm& t);

// All valid terms with at most maxNodes constructor nodes, sorted ascending.
std::vector<EpsTerm> enumerateEps(OmegaOrder omega, unsigned maxNodes);

std::string toString(const EpsTerm& t);
// Syntax: `0`, `w`, `e(i)`, `<t0, t1, ...>`. Rejects invalid normal forms.
EpsTerm parseEps(std::string_view text, OmegaOrder omega);

bool operator==(const EpsTerm& a, const EpsTerm& b);
inline bool operator!=(const EpsTerm& a, const EpsTerm& b) { return !(a == b); }

}  // namespace wqo
