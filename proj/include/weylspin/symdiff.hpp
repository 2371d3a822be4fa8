#pragma once
// Exact symbolic expression engine: the fraction field of sparse multivariate
// polynomials over Q, extended by exponentials exp(p) of polynomials, closed
// under partial differentiation.
//
// Representation layers:
//   PurePoly  - sparse polynomial, graded-lex ordered monomials, variables
//               indexed 0,1,2,...; exponent vectors store no trailing zeros.
//   EPoly     - finite sum  sum_k P_k * exp(Q_k)  with distinct polynomial
//               exponents Q_k and nonzero polynomial coefficients P_k.
//               Products merge by exponent addition, so the zero test
//               (no parts left) is both sound and complete: exponentials of
//               distinct polynomials are linearly independent over the
//               polynomial ring.
//   DiffExpr  - quotient of two EPolys with a nonzero denominator and a
//               pragmatic canonicalization (exponential units moved out of
//               the denominator, content-normalized denominator, exact
//               polynomial division when it succeeds).  is_zero() reads the
//               numerator and is exact.
//
// Values with no free variables double as the exact evaluation field used by
// the holonomy computations: after substituting a rational point, every part
// collapses to c * exp(q) with rational c, q, and distinct rational q stay
// linearly independent over Q (Lindemann-Weierstrass), so zero tests remain
// exact without any floating point.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylspin/exact_scalar.hpp"  // for Rational = mpq_class

namespace weylspin::symdiff {

using Exponents = std::vector<unsigned>;  // trailing zeros trimmed

// Graded lexicographic order on exponent vectors.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class PurePoly {
public:
  using TermMap = std::map<Exponents, Rational, GradedLexLess>;

  PurePoly() = default;
  static PurePoly constant(const Rational& c);
  static PurePoly variable(unsigned index);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Requires is_constant().
  Rational constant_value() const;
  unsigned total_degree() const;  // 0 for the zero polynomial
  // Largest variable index appearing, or nullopt for constants.
  std::optional<unsigned> max_variable() const;
  const TermMap& terms() const { return terms_; }

  PurePoly operator-() const;
  PurePoly& operator+=(const PurePoly& o);
  PurePoly& operator-=(const PurePoly& o);
  PurePoly& operator*=(const PurePoly& o);
  PurePoly& operator*=(const Rational& c);
  friend PurePoly operator+(PurePoly l, const PurePoly& r) { return l += r; }
  friend PurePoly operator-(PurePoly l, const PurePoly& r) { return l -= r; }
  friend PurePoly operator*(PurePoly l, const PurePoly& r) { return l *= r; }
  friend PurePoly operator*(PurePoly l, const Rational& c) { return l *= c; }

  PurePoly derivative(unsigned index) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  // Exact multivariate division: quotient such that *this == q * divisor,
  // or nullopt when the division does not come out exact.
  std::optional<PurePoly> divided_by(const PurePoly& divisor) const;

  // gcd of all coefficients with the sign of the graded-lex leading one;
  // zero polynomial has content 0.
  Rational content() const;

  // Total order usable as a map key; equality agrees with ==.
  static int compare(const PurePoly& a, const PurePoly& b);
  friend bool operator==(const PurePoly& a, const PurePoly& b) { return compare(a, b) == 0; }
  friend bool operator!=(const PurePoly& a, const PurePoly& b) { return compare(a, b) != 0; }

  std::string str(const std::vector<std::string>& names) const;

  void add_term(const Exponents& e, const Rational& c);  // accumulate, erase zeros

private:
  TermMap terms_;
};

struct PurePolyLess {
  bool operator()(const PurePoly& a, const PurePoly& b) const {
    return PurePoly::compare(a, b) < 0;
  }
};

class EPoly {
public:
  using PartMap = std::map<PurePoly, PurePoly, PurePolyLess>;  // Q -> P

  EPoly() = default;
  static EPoly from_poly(PurePoly p);
  // 1 * exp(q); exp(0) folds to the constant 1.
  static EPoly exponential(PurePoly q);

  bool is_zero() const { return parts_.empty(); }
  // True when the value lies in the plain polynomial ring (zero or a single
  // part with exponent 0).
  bool is_poly() const;
  // Requires is_poly(); returns the polynomial (zero when empty).
  PurePoly poly() const;
  const PartMap& parts() const { return parts_; }
  std::optional<unsigned> max_variable() const;

  EPoly operator-() const;
  EPoly& operator+=(const EPoly& o);
  EPoly& operator-=(const EPoly& o);
  EPoly& operator*=(const EPoly& o);
  EPoly& operator*=(const Rational& c);
  friend EPoly operator+(EPoly l, const EPoly& r) { return l += r; }
  friend EPoly operator-(EPoly l, const EPoly& r) { return l -= r; }
  friend EPoly operator*(EPoly l, const EPoly& r) { return l *= r; }
  friend EPoly operator*(EPoly l, const Rational& c) { return l *= c; }

  EPoly derivative(unsigned index) const;
  // Substitutes a rational point; the result has no free variables (each
  // part becomes c * exp(q) with constant polynomials).
  EPoly evaluate(const std::vector<Rational>& point) const;

  friend bool operator==(const EPoly& a, const EPoly& b);
  friend bool operator!=(const EPoly& a, const EPoly& b) { return !(a == b); }
  static int compare(const EPoly& a, const EPoly& b);

  std::string str(const std::vector<std::string>& names) const;

  void add_part(PurePoly q, PurePoly p);  // accumulate, erase zeros

private:
  PartMap parts_;
};

class PoleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DiffExpr {
public:
  DiffExpr() : num_(), den_(EPoly::from_poly(PurePoly::constant(1))) {}
  DiffExpr(int v) : DiffExpr(Rational(v)) {}  // NOLINT(google-explicit-*)
  DiffExpr(const Rational& v);                // NOLINT(google-explicit-*)
  static DiffExpr variable(unsigned index);
  static DiffExpr from_epoly(EPoly e);
  static DiffExpr exponential(PurePoly q) { return from_epoly(EPoly::exponential(std::move(q))); }
  // Throws PoleError when den is (identically) zero.
  static DiffExpr fraction(EPoly num, EPoly den);

  const EPoly& num() const { return num_; }
  const EPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  // True when the expression is a plain polynomial in canonical form.
  bool is_poly() const { return den_.is_poly() && den_.poly().is_constant() && num_.is_poly(); }
  std::optional<unsigned> max_variable() const;

  DiffExpr operator-() const;
  DiffExpr& operator+=(const DiffExpr& o);
  DiffExpr& operator-=(const DiffExpr& o);
  DiffExpr& operator*=(const DiffExpr& o);
  DiffExpr& operator/=(const DiffExpr& o);  // throws PoleError on zero divisor
  friend DiffExpr operator+(DiffExpr l, const DiffExpr& r) { return l += r; }
  friend DiffExpr operator-(DiffExpr l, const DiffExpr& r) { return l -= r; }
  friend DiffExpr operator*(DiffExpr l, const DiffExpr& r) { return l *= r; }
  friend DiffExpr operator/(DiffExpr l, const DiffExpr& r) { return l /= r; }
  friend bool operator==(const DiffExpr& a, const DiffExpr& b) { return (a - b).is_zero(); }
  friend bool operator!=(const DiffExpr& a, const DiffExpr& b) { return !(a == b); }

  DiffExpr derivative(unsigned index) const;

  // Exact substitution of a rational point: the result has no free variables
  // but keeps unevaluated exponentials exact.  Throws PoleError when the
  // denominator vanishes at the point (decided exactly).
  DiffExpr substitute(const std::vector<Rational>& point) const;

  struct Evaluation {
    bool exact = false;
    Rational value;        // set when exact
    Rational lo, hi;       // enclosing interval, always set (lo == hi when exact)
  };
  // Exact rational when no exponential survives at the point; otherwise an
  // interval of width at most `width` computed with directed rounding.
  Evaluation evaluate(const std::vector<Rational>& point, const Rational& width) const;

  std::string str(const std::vector<std::string>& names) const;

private:
  void reduce();

  EPoly num_, den_;
};

inline DiffExpr pow_int(DiffExpr base, long e) {
  if (e < 0) return DiffExpr(1) / pow_int(std::move(base), -e);
  DiffExpr acc(1);
  while (e > 0) {
    acc *= base;
    --e;
  }
  return acc;
}

// ADL hook for the elimination templates in linalg.hpp.
inline bool field_is_zero(const DiffExpr& e) { return e.is_zero(); }

// Coordinate chart v, x1, ..., xn, u; variable indices 0, 1..n, n+1.
class CoordChart {
public:
  explicit CoordChart(unsigned n);
  unsigned n() const { return n_; }
  unsigned dim() const { return n_ + 2; }
  unsigned index_v() const { return 0; }
  unsigned index_x(unsigned i) const;  // 1-based i in [1, n]
  unsigned index_u() const { return n_ + 1; }
  const std::string& name(unsigned index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<unsigned> index_of(const std::string& name) const;

private:
  unsigned n_;
  std::vector<std::string> names_;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Grammar: rational literals, coordinate names, + - * / ^ (integer powers),
// exp(<polynomial>), parentheses.  Throws ParseError with the offending
// position; exp arguments must reduce to polynomials.
DiffExpr parse_expr(const std::string& text, const CoordChart& chart);

}  // namespace weylspin::symdiff
