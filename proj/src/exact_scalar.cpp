#include "weylspin/exact_scalar.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace weylspin {

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  // (z1 + w1 s)(z2 + w2 s) = (z1 z2 + 2 w1 w2) + (z1 w2 + w1 z2) s
  // with z = a + b i, w = c + d i and s^2 = 2.
  if (is_zero()) return *this;
  if (o.is_zero()) {
    *this = ExactScalar();
    return *this;
  }
  Rational a = a_ * o.a_ - b_ * o.b_ + 2 * (c_ * o.c_ - d_ * o.d_);
  Rational b = a_ * o.b_ + b_ * o.a_ + 2 * (c_ * o.d_ + d_ * o.c_);
  Rational c = a_ * o.c_ - b_ * o.d_ + c_ * o.a_ - d_ * o.b_;
  Rational d = a_ * o.d_ + b_ * o.c_ + c_ * o.b_ + d_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  c_ = std::move(c);
  d_ = std::move(d);
  return *this;
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw std::domain_error("ExactScalar: division by zero");
  // First clear sqrt(2): multiply by the sqrt(2)-conjugate, giving a value in
  // Q(i); then clear i with the complex conjugate, giving a rational norm.
  ExactScalar s_conj = conj_sqrt2();
  ExactScalar in_qi = *this * s_conj;  // lies in Q(i): c = d = 0
  Rational nrm = in_qi.a_ * in_qi.a_ + in_qi.b_ * in_qi.b_;
  ExactScalar num = s_conj * in_qi.conj();
  Rational inv_n = Rational(1) / nrm;
  return {num.a_ * inv_n, num.b_ * inv_n, num.c_ * inv_n, num.d_ * inv_n};
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) { return *this *= o.inverse(); }

int ExactScalar::sign_real() const {
  if (b_ != 0 || d_ != 0) throw std::domain_error("sign_real on non-real value");
  int sa = sgn(a_), sc = sgn(c_);
  if (sc == 0) return sa;
  if (sa == 0) return sc;
  if (sa == sc) return sa;
  // a and c*sqrt(2) have opposite signs: compare a^2 with 2 c^2.
  Rational a2 = a_ * a_, c2 = 2 * c_ * c_;
  if (a2 == c2) return 0;  // cannot happen (sqrt2 irrational) but keep exactness
  return a2 > c2 ? sa : sc;
}

std::string ExactScalar::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& v) {
  if (v.is_zero()) return os << "0";
  bool first = true;
  auto piece = [&](const Rational& q, const char* unit) {
    if (q == 0) return;
    if (!first) os << (q > 0 ? " + " : " - ");
    Rational aq = q > 0 || !first ? (q > 0 ? q : Rational(-q)) : q;
    first = false;
    if (unit[0] == '\0') {
      os << aq;
    } else if (aq == 1) {
      os << unit;
    } else if (aq == -1) {
      os << "-" << unit;
    } else {
      os << aq << "*" << unit;
    }
  };
  piece(v.re_rat(), "");
  piece(v.im_rat(), "i");
  piece(v.re_s(), "sqrt2");
  piece(v.im_s(), "i*sqrt2");
  return os;
}

namespace {
bool rational_sqrt(const Rational& r, Rational* out) {
  if (r < 0) return false;
  mpz_class num = r.get_num(), den = r.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  *out = Rational(sn) / Rational(sd);
  return true;
}
}  // namespace

bool sqrt_in_field(const Rational& r, ExactScalar* out) {
  if (r < 0) return false;
  Rational s;
  if (rational_sqrt(r, &s)) {
    *out = ExactScalar(s);
    return true;
  }
  if (rational_sqrt(r / 2, &s)) {
    *out = ExactScalar(s) * ExactScalar::sqrt2();
    return true;
  }
  return false;
}

}  // namespace weylspin
