#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wqo {

using BigNat = boost::multiprecision::cpp_int;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ordinals below epsilon_0 in Cantor normal form: a finite sum
/// w^e_0*c_0 + ... + w^e_{k-1}*c_{k-1} with e_0 > e_1 > ... and c_i >= 1.
/// The empty sum is 0. Representation is canonical, so equality is
/// structural.
struct OrdinalTerm;

class Ordinal {
 public:
  using Term = OrdinalTerm;

  Ordinal() = default;  // zero

  static Ordinal fromNat(const BigNat& n);
  static Ordinal omega();
  // w^e * c, c >= 1
  static Ordinal omegaTerm(Ordinal exponent, BigNat coeff = 1);

  bool isZero() const { return terms_.empty(); }
  bool isFinite() const;
  // pre: isFinite()
  BigNat finiteValue() const;
  const std::vector<Term>& terms() const { return terms_; }
  const Ordinal& leadingExponent() const;

  // Builds from an arbitrary term list; sorts and merges into CNF.
  static Ordinal fromTerms(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;
};

struct OrdinalTerm {
  Ordinal exponent;
  BigNat coeff;
};

// -1, 0, 1
int compare(const Ordinal& a, const Ordinal& b);
bool operator==(const Ordinal& a, const Ordinal& b);
inline bool operator!=(const Ordinal& a, const Ordinal& b) { return !(a == b); }
inline bool operator<(const Ordinal& a, const Ordinal& b) { return compare(a, b) < 0; }
inline bool operator<=(const Ordinal& a, const Ordinal& b) { return compare(a, b) <= 0; }

// Ordinal sum (non-commutative).
Ordinal add(const Ordinal& a, const Ordinal& b);
// Hessenberg sum and product (commutative).
Ordinal natAdd(const Ordinal& a, const Ordinal& b);
Ordinal natMul(const Ordinal& a, const Ordinal& b);
// w^a
Ordinal omegaPow(const Ordinal& a);
// a * w; pre: a > 0
Ordinal mulOmega(const Ordinal& a);
// -2 + a; pre: a >= 2
Ordinal minus2Plus(const Ordinal& a);

std::string toString(const Ordinal& a);
// Syntax: `0`, decimal naturals, `w`, `w^E`, `w^E*c`, `+`-separated
// descending terms; compound exponents parenthesized.
Ordinal parseOrdinal(std::string_view text);

}  // namespace wqo
