#include "weylspin/symdiff.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace weylspin::symdiff {

namespace {

unsigned degree_of(const Exponents& e) {
  unsigned d = 0;
  for (unsigned k : e) d += k;
  return d;
}

// Three-way graded-lex comparison (positive when a is the larger monomial).
int cmp_exponents(const Exponents& a, const Exponents& b) {
  unsigned da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db ? -1 : 1;
  const std::size_t m = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < m; ++i) {
    unsigned ea = i < a.size() ? a[i] : 0;
    unsigned eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return 0;
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// a - b componentwise, or nullopt when some component would go negative.
std::optional<Exponents> sub_exponents(const Exponents& a, const Exponents& b) {
  if (b.size() > a.size()) {
    for (std::size_t i = a.size(); i < b.size(); ++i)
      if (b[i] != 0) return std::nullopt;
  }
  Exponents out = a;
  for (std::size_t i = 0; i < b.size() && i < a.size(); ++i) {
    if (b[i] > a[i]) return std::nullopt;
    out[i] -= b[i];
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  // gcd(p1/q1, p2/q2) = gcd(p1, p2) / lcm(q1, q2); always nonnegative.
  mpz_class gn, gl;
  mpz_gcd(gn.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
  mpz_lcm(gl.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  Rational out(gn);
  out /= Rational(gl);
  return out;
}

const PurePoly& zero_poly() {
  static const PurePoly z;
  return z;
}

}  // namespace

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  return cmp_exponents(a, b) < 0;
}

// ---------------------------------------------------------------------------
// PurePoly

PurePoly PurePoly::constant(const Rational& c) {
  PurePoly p;
  p.add_term({}, c);
  return p;
}

PurePoly PurePoly::variable(unsigned index) {
  PurePoly p;
  Exponents e(index + 1, 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

void PurePoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  Exponents key = e;
  while (!key.empty() && key.back() == 0) key.pop_back();
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool PurePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational PurePoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("constant_value on a non-constant polynomial");
  return terms_.begin()->second;
}

unsigned PurePoly::total_degree() const {
  if (terms_.empty()) return 0;
  return degree_of(terms_.rbegin()->first);  // graded order: last key has max degree
}

std::optional<unsigned> PurePoly::max_variable() const {
  std::optional<unsigned> out;
  for (const auto& [e, c] : terms_) {
    if (e.empty()) continue;
    unsigned last = static_cast<unsigned>(e.size()) - 1;  // trailing zeros trimmed
    if (!out || last > *out) out = last;
  }
  return out;
}

PurePoly PurePoly::operator-() const {
  PurePoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

PurePoly& PurePoly::operator+=(const PurePoly& o) {
  if (this == &o) return *this *= Rational(2);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PurePoly& PurePoly::operator-=(const PurePoly& o) {
  if (this == &o) {
    terms_.clear();
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

PurePoly& PurePoly::operator*=(const PurePoly& o) {
  PurePoly out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) out.add_term(add_exponents(ea, eb), ca * cb);
  *this = std::move(out);
  return *this;
}

PurePoly& PurePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

PurePoly PurePoly::derivative(unsigned index) const {
  PurePoly out;
  for (const auto& [e, c] : terms_) {
    if (index >= e.size() || e[index] == 0) continue;
    Exponents de = e;
    de[index] -= 1;
    out.add_term(de, c * Rational(e[index]));
  }
  return out;
}

Rational PurePoly::evaluate(const std::vector<Rational>& point) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i >= point.size())
        throw std::invalid_argument("evaluation point has fewer coordinates than the expression");
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    }
    acc += term;
  }
  return acc;
}

std::optional<PurePoly> PurePoly::divided_by(const PurePoly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  PurePoly rem = *this;
  PurePoly quot;
  const auto& lt_d = *divisor.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& lt_r = *rem.terms_.rbegin();
    auto e = sub_exponents(lt_r.first, lt_d.first);
    if (!e) return std::nullopt;
    Rational c = lt_r.second / lt_d.second;
    PurePoly mono;
    mono.add_term(*e, c);
    quot += mono;
    rem -= mono * divisor;
  }
  return quot;
}

Rational PurePoly::content() const {
  if (terms_.empty()) return Rational(0);
  Rational g(0);
  for (const auto& [e, c] : terms_) g = rational_gcd(g, c);
  if (terms_.rbegin()->second < 0) g = -g;
  return g;
}

int PurePoly::compare(const PurePoly& a, const PurePoly& b) {
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    int ce = cmp_exponents(ia->first, ib->first);
    if (ce != 0) return ce;
    int cc = cmp(ia->second, ib->second);
    if (cc != 0) return cc;
  }
  if (ia != a.terms_.end()) return 1;
  if (ib != b.terms_.end()) return -1;
  return 0;
}

std::string PurePoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    if (!first) {
      os << (c > 0 ? " + " : " - ");
      if (c < 0) c = -c;
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : ("z" + std::to_string(i));
      if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
    }
    if (mono.empty()) {
      os << c.get_str();
    } else if (c == 1) {
      os << mono;
    } else if (c == -1) {
      os << "-" << mono;
    } else {
      os << c.get_str() << "*" << mono;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// EPoly

EPoly EPoly::from_poly(PurePoly p) {
  EPoly out;
  out.add_part(PurePoly(), std::move(p));
  return out;
}

EPoly EPoly::exponential(PurePoly q) {
  EPoly out;
  out.add_part(std::move(q), PurePoly::constant(1));
  return out;
}

void EPoly::add_part(PurePoly q, PurePoly p) {
  if (p.is_zero()) return;
  auto [it, inserted] = parts_.try_emplace(std::move(q), std::move(p));
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) parts_.erase(it);
  }
}

bool EPoly::is_poly() const {
  return parts_.empty() || (parts_.size() == 1 && parts_.begin()->first.is_zero());
}

PurePoly EPoly::poly() const {
  if (parts_.empty()) return PurePoly();
  if (!is_poly()) throw std::logic_error("poly() on an exponential expression");
  return parts_.begin()->second;
}

std::optional<unsigned> EPoly::max_variable() const {
  std::optional<unsigned> out;
  auto feed = [&](const std::optional<unsigned>& v) {
    if (v && (!out || *v > *out)) out = v;
  };
  for (const auto& [q, p] : parts_) {
    feed(q.max_variable());
    feed(p.max_variable());
  }
  return out;
}

EPoly EPoly::operator-() const {
  EPoly out = *this;
  for (auto& [q, p] : out.parts_) p = -p;
  return out;
}

EPoly& EPoly::operator+=(const EPoly& o) {
  if (this == &o) return *this *= Rational(2);
  for (const auto& [q, p] : o.parts_) add_part(q, p);
  return *this;
}

EPoly& EPoly::operator-=(const EPoly& o) {
  if (this == &o) {
    parts_.clear();
    return *this;
  }
  for (const auto& [q, p] : o.parts_) add_part(q, -p);
  return *this;
}

EPoly& EPoly::operator*=(const EPoly& o) {
  EPoly out;
  for (const auto& [qa, pa] : parts_)
    for (const auto& [qb, pb] : o.parts_) out.add_part(qa + qb, pa * pb);
  *this = std::move(out);
  return *this;
}

EPoly& EPoly::operator*=(const Rational& c) {
  if (c == 0) {
    parts_.clear();
    return *this;
  }
  for (auto& [q, p] : parts_) p *= c;
  return *this;
}

EPoly EPoly::derivative(unsigned index) const {
  EPoly out;
  for (const auto& [q, p] : parts_) {
    // d(P e^Q) = (P' + P Q') e^Q
    PurePoly np = p.derivative(index);
    np += p * q.derivative(index);
    out.add_part(q, std::move(np));
  }
  return out;
}

EPoly EPoly::evaluate(const std::vector<Rational>& point) const {
  EPoly out;
  for (const auto& [q, p] : parts_)
    out.add_part(PurePoly::constant(q.evaluate(point)), PurePoly::constant(p.evaluate(point)));
  return out;
}

int EPoly::compare(const EPoly& a, const EPoly& b) {
  auto ia = a.parts_.begin(), ib = b.parts_.begin();
  for (; ia != a.parts_.end() && ib != b.parts_.end(); ++ia, ++ib) {
    int cq = PurePoly::compare(ia->first, ib->first);
    if (cq != 0) return cq;
    int cp = PurePoly::compare(ia->second, ib->second);
    if (cp != 0) return cp;
  }
  if (ia != a.parts_.end()) return 1;
  if (ib != b.parts_.end()) return -1;
  return 0;
}

bool operator==(const EPoly& a, const EPoly& b) { return EPoly::compare(a, b) == 0; }

std::string EPoly::str(const std::vector<std::string>& names) const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [q, p] : parts_) {
    if (!first) os << " + ";
    first = false;
    if (q.is_zero()) {
      os << p.str(names);
    } else if (p == PurePoly::constant(1)) {
      os << "exp(" << q.str(names) << ")";
    } else {
      os << "(" << p.str(names) << ")*exp(" << q.str(names) << ")";
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// DiffExpr

DiffExpr::DiffExpr(const Rational& v)
    : num_(EPoly::from_poly(PurePoly::constant(v))),
      den_(EPoly::from_poly(PurePoly::constant(1))) {}

DiffExpr DiffExpr::variable(unsigned index) {
  DiffExpr e;
  e.num_ = EPoly::from_poly(PurePoly::variable(index));
  return e;
}

DiffExpr DiffExpr::from_epoly(EPoly e) {
  DiffExpr out;
  out.num_ = std::move(e);
  out.reduce();
  return out;
}

DiffExpr DiffExpr::fraction(EPoly num, EPoly den) {
  if (den.is_zero()) throw PoleError("division by an identically zero expression");
  DiffExpr out;
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  out.reduce();
  return out;
}

std::optional<unsigned> DiffExpr::max_variable() const {
  auto a = num_.max_variable();
  auto b = den_.max_variable();
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

void DiffExpr::reduce() {
  if (num_.is_zero()) {
    den_ = EPoly::from_poly(PurePoly::constant(1));
    return;
  }
  // Shift a common exponential unit out of the denominator: exp(q0) is a
  // unit of the ring, so multiplying both parts of the fraction by exp(-q0)
  // preserves the value and leaves the denominator with an exponent-0 part.
  const PurePoly& q0 = den_.parts().begin()->first;
  if (!q0.is_zero()) {
    EPoly shift = EPoly::exponential(-q0);
    num_ *= shift;
    den_ *= shift;
  }
  if (den_.is_poly()) {
    PurePoly d = den_.poly();
    if (d.is_constant()) {
      Rational c = d.constant_value();
      if (c != 1) num_ *= Rational(1) / c;
      den_ = EPoly::from_poly(PurePoly::constant(1));
      return;
    }
    EPoly quotient;
    bool divides = true;
    for (const auto& [q, p] : num_.parts()) {
      auto qq = p.divided_by(d);
      if (!qq) {
        divides = false;
        break;
      }
      quotient.add_part(q, std::move(*qq));
    }
    if (divides) {
      num_ = std::move(quotient);
      den_ = EPoly::from_poly(PurePoly::constant(1));
      return;
    }
  }
  // Content-normalize the denominator (positive leading coefficient on its
  // exponent-0 part, coefficients with gcd 1 across all parts).
  Rational c(0);
  for (const auto& [q, p] : den_.parts()) {
    Rational pc = p.content();
    c = rational_gcd(c, pc < 0 ? Rational(-pc) : pc);
  }
  auto zero_part = den_.parts().find(zero_poly());
  const PurePoly& sign_part =
      zero_part != den_.parts().end() ? zero_part->second : den_.parts().begin()->second;
  if (sign_part.content() < 0) c = -c;
  if (c != 1 && c != 0) {
    Rational inv = Rational(1) / c;
    num_ *= inv;
    den_ *= inv;
  }
}

DiffExpr DiffExpr::operator-() const {
  DiffExpr out = *this;
  out.num_ = -out.num_;
  return out;
}

DiffExpr& DiffExpr::operator+=(const DiffExpr& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  if (EPoly::compare(den_, o.den_) == 0) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  reduce();
  return *this;
}

DiffExpr& DiffExpr::operator-=(const DiffExpr& o) { return *this += -o; }

DiffExpr& DiffExpr::operator*=(const DiffExpr& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) {
    *this = DiffExpr();
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

DiffExpr& DiffExpr::operator/=(const DiffExpr& o) {
  if (o.is_zero()) throw PoleError("division by an identically zero expression");
  if (this == &o) {
    *this = DiffExpr(1);
    return *this;
  }
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

DiffExpr DiffExpr::derivative(unsigned index) const {
  if (den_.is_poly() && den_.poly().is_constant()) {
    // Canonical form makes the constant 1; differentiate the numerator only.
    return from_epoly(num_.derivative(index));
  }
  EPoly n = num_.derivative(index) * den_ - num_ * den_.derivative(index);
  return fraction(std::move(n), den_ * den_);
}

DiffExpr DiffExpr::substitute(const std::vector<Rational>& point) const {
  EPoly n = num_.evaluate(point);
  EPoly d = den_.evaluate(point);
  if (d.is_zero()) throw PoleError("denominator vanishes at the evaluation point");
  return fraction(std::move(n), std::move(d));
}

namespace {

class Mpfr {
public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

private:
  mpfr_t v_;
};

// Certified enclosure of sum_k c_k * e^{q_k} at the given working precision.
std::pair<Rational, Rational> sum_interval(const std::vector<std::pair<Rational, Rational>>& terms,
                                           mpfr_prec_t prec) {
  Mpfr lo(prec), hi(prec), e_lo(prec), e_hi(prec), c_dir(prec), t(prec);
  mpfr_set_zero(lo.get(), 1);
  mpfr_set_zero(hi.get(), 1);
  for (const auto& [c, q] : terms) {
    mpfr_set_q(t.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_exp(e_lo.get(), t.get(), MPFR_RNDD);
    mpfr_set_q(t.get(), q.get_mpq_t(), MPFR_RNDU);
    mpfr_exp(e_hi.get(), t.get(), MPFR_RNDU);
    if (c > 0) {
      mpfr_set_q(c_dir.get(), c.get_mpq_t(), MPFR_RNDD);
      mpfr_mul(t.get(), c_dir.get(), e_lo.get(), MPFR_RNDD);
      mpfr_add(lo.get(), lo.get(), t.get(), MPFR_RNDD);
      mpfr_set_q(c_dir.get(), c.get_mpq_t(), MPFR_RNDU);
      mpfr_mul(t.get(), c_dir.get(), e_hi.get(), MPFR_RNDU);
      mpfr_add(hi.get(), hi.get(), t.get(), MPFR_RNDU);
    } else {
      mpfr_set_q(c_dir.get(), c.get_mpq_t(), MPFR_RNDD);
      mpfr_mul(t.get(), c_dir.get(), e_hi.get(), MPFR_RNDD);
      mpfr_add(lo.get(), lo.get(), t.get(), MPFR_RNDD);
      mpfr_set_q(c_dir.get(), c.get_mpq_t(), MPFR_RNDU);
      mpfr_mul(t.get(), c_dir.get(), e_lo.get(), MPFR_RNDU);
      mpfr_add(hi.get(), hi.get(), t.get(), MPFR_RNDU);
    }
  }
  Rational rlo, rhi;
  mpfr_get_q(rlo.get_mpq_t(), lo.get());
  mpfr_get_q(rhi.get_mpq_t(), hi.get());
  return {rlo, rhi};
}

std::vector<std::pair<Rational, Rational>> constant_terms(const EPoly& e) {
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(e.parts().size());
  for (const auto& [q, p] : e.parts()) out.push_back({p.constant_value(), q.constant_value()});
  return out;
}

}  // namespace

DiffExpr::Evaluation DiffExpr::evaluate(const std::vector<Rational>& point,
                                        const Rational& width) const {
  if (width <= 0) throw std::invalid_argument("interval width must be positive");
  DiffExpr sub = substitute(point);  // throws PoleError when undefined
  Evaluation out;
  if (sub.num_.is_poly() && sub.den_.is_poly()) {
    Rational v = sub.num_.poly().constant_value();
    Rational d = sub.den_.poly().constant_value();  // canonical form: d == 1
    out.exact = true;
    out.value = v / d;
    out.lo = out.hi = out.value;
    return out;
  }
  auto nterms = constant_terms(sub.num_);
  auto dterms = constant_terms(sub.den_);
  for (mpfr_prec_t prec = 96; prec <= 1 << 15; prec *= 2) {
    auto [nlo, nhi] = sum_interval(nterms, prec);
    auto [dlo, dhi] = sum_interval(dterms, prec);
    if (sgn(dlo) <= 0 && sgn(dhi) >= 0) continue;  // enclosure straddles zero; refine
    Rational q1 = nlo / dlo, q2 = nlo / dhi, q3 = nhi / dlo, q4 = nhi / dhi;
    Rational lo = std::min(std::min(q1, q2), std::min(q3, q4));
    Rational hi = std::max(std::max(q1, q2), std::max(q3, q4));
    if (hi - lo <= width) {
      out.exact = false;
      out.lo = lo;
      out.hi = hi;
      return out;
    }
  }
  throw std::runtime_error("interval evaluation did not reach the requested width");
}

std::string DiffExpr::str(const std::vector<std::string>& names) const {
  if (den_.is_poly() && den_.poly().is_constant()) return num_.str(names);
  return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
}

// ---------------------------------------------------------------------------
// CoordChart

CoordChart::CoordChart(unsigned n) : n_(n) {
  names_.reserve(n + 2);
  names_.push_back("v");
  for (unsigned i = 1; i <= n; ++i) names_.push_back("x" + std::to_string(i));
  names_.push_back("u");
}

unsigned CoordChart::index_x(unsigned i) const {
  if (i == 0 || i > n_) throw std::out_of_range("coordinate index");
  return i;
}

std::optional<unsigned> CoordChart::index_of(const std::string& name) const {
  for (unsigned k = 0; k < names_.size(); ++k)
    if (names_[k] == name) return k;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Parser

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

namespace {

struct Parser {
  const std::string& text;
  const CoordChart& chart;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) { throw ParseError(msg, at); }

  DiffExpr parse_expression() {
    DiffExpr acc = parse_term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos;
        acc += parse_term();
      } else if (c == '-') {
        ++pos;
        acc -= parse_term();
      } else {
        return acc;
      }
    }
  }

  DiffExpr parse_term() {
    DiffExpr acc = parse_unary();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos;
        acc *= parse_unary();
      } else if (c == '/') {
        std::size_t at = pos;
        ++pos;
        DiffExpr divisor = parse_unary();
        try {
          acc /= divisor;
        } catch (const PoleError&) {
          fail("division by zero expression", at);
        }
      } else {
        return acc;
      }
    }
  }

  DiffExpr parse_unary() {
    int sign = 1;
    while (true) {
      char c = peek();
      if (c == '-') {
        sign = -sign;
        ++pos;
      } else if (c == '+') {
        ++pos;
      } else {
        break;
      }
    }
    DiffExpr e = parse_power();
    return sign < 0 ? -e : e;
  }

  DiffExpr parse_power() {
    DiffExpr base = parse_atom();
    if (peek() == '^') {
      std::size_t at = pos;
      ++pos;
      long k = parse_int_literal();
      try {
        return pow_int(std::move(base), k);
      } catch (const PoleError&) {
        fail("negative power of a zero expression", at);
      }
    }
    return base;
  }

  long parse_int_literal() {
    skip_ws();
    std::size_t at = pos;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected an integer exponent", at);
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000) fail("exponent too large", at);
      ++pos;
    }
    return neg ? -v : v;
  }

  DiffExpr parse_atom() {
    char c = peek();
    std::size_t at = pos;
    if (c == '(') {
      ++pos;
      DiffExpr e = parse_expression();
      if (peek() != ')') fail("expected ')'", pos);
      ++pos;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        digits += text[pos++];
      return DiffExpr(Rational(mpz_class(digits)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string ident;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ident += text[pos++];
      if (ident == "exp") {
        if (peek() != '(') fail("expected '(' after exp", pos);
        ++pos;
        std::size_t arg_at = pos;
        DiffExpr arg = parse_expression();
        if (peek() != ')') fail("expected ')'", pos);
        ++pos;
        if (!arg.is_poly())
          fail("exp argument must be a polynomial", arg_at);
        PurePoly q = arg.num().poly();
        // Canonical form scales the denominator to 1, so num is the value.
        return DiffExpr::exponential(std::move(q));
      }
      auto idx = chart.index_of(ident);
      if (!idx) fail("unknown identifier '" + ident + "'", at);
      return DiffExpr::variable(*idx);
    }
    fail("expected a number, coordinate, or parenthesized expression", at);
  }
};

}  // namespace

DiffExpr parse_expr(const std::string& text, const CoordChart& chart) {
  Parser p{text, chart};
  DiffExpr e = p.parse_expression();
  if (!p.at_end()) p.fail("unexpected trailing input", p.pos);
  return e;
}

}  // namespace weylspin::symdiff
