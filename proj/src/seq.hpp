#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ordinal.hpp"
#include "qo.hpp"

namespace wqo {

/// Parse-level expression for a finitary transfinite sequence of length
/// below w^w: atoms, concatenation, w-power, and finite-power sugar.
struct SeqExpr {
  enum class Kind { Atom, Concat, OmegaPow, FinPow };
  Kind kind;
  int label = -1;               // Atom
  std::vector<SeqExpr> parts;   // Concat (>= 2) / OmegaPow / FinPow body
  int power = 0;                // FinPow, >= 1

  static SeqExpr atom(int label) { return {Kind::Atom, label, {}, 0}; }
  static SeqExpr concat(std::vector<SeqExpr> parts);
  static SeqExpr omegaPow(SeqExpr body) {
    return {Kind::OmegaPow, -1, {std::move(body)}, 0};
  }
  static SeqExpr finPow(SeqExpr body, int k);
};

/// Indecomposable component of a normal form: an atom, or an w-power of
/// a nonempty body of indecomposables (length w^m, m >= 1).
struct Indec {
  bool atom;
  int label = -1;
  std::vector<Indec> body;

  static Indec makeAtom(int label) { return {true, label, {}}; }
  static Indec makePow(std::vector<Indec> body);
};

/// Concatenation of indecomposables; every sequence expression
/// normalizes to one.
struct NormalSeq {
  std::vector<Indec> components;
};

bool operator==(const Indec& a, const Indec& b);
bool operator==(const NormalSeq& a, const NormalSeq& b);

NormalSeq normalize(const SeqExpr& e);

Ordinal seqLength(const SeqExpr& e);
Ordinal seqLength(const Indec& c);
Ordinal seqLength(const NormalSeq& s);

std::set<int> seqRange(const SeqExpr& e);
std::set<int> seqRange(const NormalSeq& s);

// Embeddability between single indecomposables.
bool indEmbeds(const QO& q, const Indec& s, const Indec& t);
// Full embeddability decision on normal forms.
bool embeds(const QO& q, const NormalSeq& s, const NormalSeq& t);
// Variant used by the expansion-width stability property: the number of
// body copies expanded per consumed w-power is (remaining + widthDelta).
bool embedsExpansion(const QO& q, const NormalSeq& s, const NormalSeq& t, int widthDelta);

// Maximal distinct representatives of the body of a single w-power
// component; pre: s = [Pow(...)].
std::vector<Indec> factors(const QO& q, const NormalSeq& s);
// Maximal elements modulo mutual embeddability, first occurrence kept.
std::vector<Indec> maximalIndecs(const QO& q, const std::vector<Indec>& xs);

bool isIndecomposable(const SeqExpr& e);

// Replaces every w-power body by its cofinal factors, recursively;
// result mutually embeddable with the input.
NormalSeq canonicalize(const QO& q, const NormalSeq& s);

// Grammar: atom = label; `+` concatenation; `(E)^w`; `(E)^k`.
SeqExpr parseSeq(const QO& q, std::string_view text);
std::string printSeq(const QO& q, const NormalSeq& s);
std::string printIndec(const QO& q, const Indec& c);

}  // namespace wqo
