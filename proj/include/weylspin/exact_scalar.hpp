#pragma once
// Exact arithmetic in the number field Q(i, sqrt(2)).
//
// Every value is stored as  a + b*i + c*s + d*i*s  with rational coordinates
// (a,b,c,d) and s = sqrt(2).  This field contains every scalar the spinor
// machinery needs: Clifford matrix entries (units and i), the Witt frame
// coefficients 1/sqrt(2), and Hermitian-form values.  All operations are
// exact; equality is decidable coordinatewise.

#include <gmpxx.h>

#include <array>
#include <iosfwd>
#include <string>

namespace weylspin {

using Rational = mpq_class;

class ExactScalar {
public:
  ExactScalar() = default;
  ExactScalar(int v) : a_(v) {}  // NOLINT(google-explicit-*)
  // mpq_class values built from a (num, den) pair are not canonicalized by
  // gmpxx, and GMP arithmetic silently assumes canonical form, so these
  // constructors canonicalize defensively.
  ExactScalar(const Rational& v) : a_(v) { a_.canonicalize(); }  // NOLINT
  ExactScalar(Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    a_.canonicalize();
    b_.canonicalize();
    c_.canonicalize();
    d_.canonicalize();
  }

  static ExactScalar i() { return {0, 1, 0, 0}; }
  static ExactScalar sqrt2() { return {0, 0, 1, 0}; }
  static ExactScalar inv_sqrt2() { return {0, 0, Rational(1, 2), 0}; }

  const Rational& re_rat() const { return a_; }   // coefficient of 1
  const Rational& im_rat() const { return b_; }   // coefficient of i
  const Rational& re_s() const { return c_; }     // coefficient of sqrt(2)
  const Rational& im_s() const { return d_; }     // coefficient of i*sqrt(2)

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
  bool is_real() const { return b_ == 0 && d_ == 0; }
  bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }

  // Exact sign of a real value a + c*sqrt(2); must not be called otherwise.
  int sign_real() const;

  ExactScalar conj() const { return {a_, -b_, c_, -d_}; }        // i -> -i
  ExactScalar conj_sqrt2() const { return {a_, b_, -c_, -d_}; }  // s -> -s

  ExactScalar operator-() const { return {-a_, -b_, -c_, -d_}; }
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar l, const ExactScalar& r) { return l += r; }
  friend ExactScalar operator-(ExactScalar l, const ExactScalar& r) { return l -= r; }
  friend ExactScalar operator*(ExactScalar l, const ExactScalar& r) { return l *= r; }
  friend ExactScalar operator/(ExactScalar l, const ExactScalar& r) { return l /= r; }
  friend bool operator==(const ExactScalar& l, const ExactScalar& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_ && l.d_ == r.d_;
  }
  friend bool operator!=(const ExactScalar& l, const ExactScalar& r) { return !(l == r); }

  ExactScalar inverse() const;  // throws std::domain_error on zero

  // |z|^2 = z * conj(z); real by construction.
  ExactScalar norm_squared() const { return *this * conj(); }

  std::string str() const;

private:
  Rational a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& v);

// Exact square root of a nonnegative rational inside Q(i, sqrt2) when one
// exists: r = s^2 or r = 2*s^2 with s rational.  Returns false otherwise.
bool sqrt_in_field(const Rational& r, ExactScalar* out);

}  // namespace weylspin
