#include "weylspin/lie_spin.hpp"

#include <stdexcept>

namespace weylspin {

namespace {
const ExactScalar kHalf(Rational(1, 2));
const ExactScalar kInvSqrt2 = ExactScalar::inv_sqrt2();
}  // namespace

Bivector zero_bivector(unsigned n) { return Bivector(n, n); }

void set_bivector(Bivector* beta, unsigned a, unsigned b, const ExactScalar& v) {
  if (a == 0 || b == 0 || a >= b || b > beta->rows())
    throw std::invalid_argument("set_bivector: need 1 <= a < b <= n");
  (*beta)(a - 1, b - 1) = v;
  (*beta)(b - 1, a - 1) = -v;
}

Matrix<ExactScalar> so_matrix_from_bivector(const Signature& sig, const Bivector& beta) {
  const unsigned n = sig.dim();
  if (beta.rows() != n || beta.cols() != n)
    throw std::invalid_argument("bivector dimension mismatch");
  Matrix<ExactScalar> m(n, n);
  // (e_a ^ e_b) e_c = g_aa delta_ac e_b - g_bb delta_bc e_a.
  for (unsigned a = 1; a <= n; ++a)
    for (unsigned b = a + 1; b <= n; ++b) {
      const ExactScalar& v = beta(a - 1, b - 1);
      if (v.is_zero()) continue;
      m(b - 1, a - 1) += ExactScalar(sig.r >= a ? -1 : 1) * v;
      m(a - 1, b - 1) -= ExactScalar(sig.r >= b ? -1 : 1) * v;
    }
  return m;
}

Bivector bivector_from_so_matrix(const Signature& sig, const Matrix<ExactScalar>& m) {
  const unsigned n = sig.dim();
  if (m.rows() != n || m.cols() != n) throw std::invalid_argument("so matrix shape");
  // Validate g-antisymmetry: (g m)^t = -(g m) with g = diag(metric signs).
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      ExactScalar ga(a < sig.r ? -1 : 1), gb(b < sig.r ? -1 : 1);
      if (ga * m(b, a) + gb * m(a, b) != ExactScalar(0))
        throw std::invalid_argument("matrix is not g-antisymmetric");
    }
  Bivector beta = zero_bivector(n);
  for (unsigned a = 1; a <= n; ++a)
    for (unsigned b = a + 1; b <= n; ++b) {
      ExactScalar ka(a <= sig.r ? -1 : 1);
      set_bivector(&beta, a, b, ka * m(b - 1, a - 1));
    }
  return beta;
}

Bivector bivector_bracket(const Signature& sig, const Bivector& b1, const Bivector& b2) {
  return bivector_from_so_matrix(
      sig, commutator(so_matrix_from_bivector(sig, b1), so_matrix_from_bivector(sig, b2)));
}

SpinorMatrix lambda_star(const CliffordRep& rep, const Bivector& beta) {
  const unsigned n = rep.n();
  if (beta.rows() != n) throw std::invalid_argument("bivector dimension mismatch");
  SpinorMatrix acc(rep.spinor_dim(), rep.spinor_dim());
  for (unsigned a = 1; a <= n; ++a)
    for (unsigned b = a + 1; b <= n; ++b) {
      const ExactScalar& v = beta(a - 1, b - 1);
      if (v.is_zero()) continue;
      // For a != b the generators anticommute, so (G_a G_b - G_b G_a)/4
      // equals G_a G_b / 2.
      acc += (kHalf * v) * (rep.gamma(a) * rep.gamma(b));
    }
  return acc;
}

const CliffordRep& LorentzRep::horizontal_clifford() const {
  if (n_ == 0) throw std::logic_error("no horizontal factor for n == 0");
  return horizontal_rep_;
}

const SpinorMatrix& LorentzRep::horizontal_gamma(unsigned i) const {
  if (i == 0 || i > n_) throw std::out_of_range("horizontal index");
  return rep_.gamma(2 + i);
}

LorentzRep build_lorentz_rep(unsigned n) {
  LorentzRep out;
  out.n_ = n;
  out.rep_ = build_clifford_rep({1, n + 1});
  if (n >= 1) out.horizontal_rep_ = build_clifford_rep({0, n});
  const unsigned total = n + 2;
  out.frame_.p.assign(total, ExactScalar(0));
  out.frame_.q.assign(total, ExactScalar(0));
  out.frame_.p[0] = kInvSqrt2;  // e_- component
  out.frame_.p[1] = kInvSqrt2;  // e_+ component
  out.frame_.q[0] = -kInvSqrt2;
  out.frame_.q[1] = kInvSqrt2;
  out.phi_p_ = vector_matrix(out.rep_, out.frame_.p);
  out.phi_q_ = vector_matrix(out.rep_, out.frame_.q);
  return out;
}

Matrix<Rational> co_matrix(const COElement& e) {
  const unsigned n = e.A.rows();
  Matrix<Rational> m(n + 2, n + 2);
  m(0, 0) = e.b + e.a;
  m(n + 1, n + 1) = e.b - e.a;
  for (unsigned i = 0; i < n; ++i) {
    m(0, 1 + i) = e.X[i];
    m(1 + i, n + 1) = -e.X[i];
    m(1 + i, 0) = -e.Y[i];
    m(n + 1, 1 + i) = e.Y[i];
    m(1 + i, 1 + i) = e.b + e.A(i, i);
    for (unsigned j = 0; j < n; ++j)
      if (j != i) m(1 + i, 1 + j) = e.A(i, j);
  }
  return m;
}

COElement co_from_matrix(const Matrix<Rational>& m) {
  if (m.rows() != m.cols() || m.rows() < 2) throw std::invalid_argument("co matrix shape");
  const unsigned n = static_cast<unsigned>(m.rows()) - 2;
  COElement e(n);
  // b from the trace of b Id + (traceless so part).
  Rational tr(0);
  for (unsigned k = 0; k < n + 2; ++k) tr += m(k, k);
  e.b = tr / Rational(n + 2);
  e.a = m(0, 0) - e.b;
  for (unsigned i = 0; i < n; ++i) {
    e.X[i] = m(0, 1 + i);
    e.Y[i] = m(n + 1, 1 + i);
    for (unsigned j = 0; j < n; ++j)
      e.A(i, j) = m(1 + i, 1 + j) - (i == j ? e.b : Rational(0));
  }
  if (co_matrix(e) != m)
    throw std::invalid_argument("matrix is not of the null-line form");
  return e;
}

Bivector bivector_from_co(const COElement& e) {
  const unsigned n = e.A.rows();
  Bivector beta = zero_bivector(n + 2);
  if (e.a != 0) set_bivector(&beta, 1, 2, ExactScalar(-e.a));  // -a e_- ^ e_+
  for (unsigned i = 0; i < n; ++i) {
    // -X_i p ^ e_i = -X_i (e_- ^ e_i + e_+ ^ e_i)/sqrt2
    // +Y_i e_i ^ q = (Y_i/sqrt2)(e_- ^ e_i - e_+ ^ e_i)
    ExactScalar xs = ExactScalar(e.X[i]) * kInvSqrt2;
    ExactScalar ys = ExactScalar(e.Y[i]) * kInvSqrt2;
    if (!(xs.is_zero() && ys.is_zero())) {
      set_bivector(&beta, 1, 2 + i + 1, -xs + ys);
      set_bivector(&beta, 2, 2 + i + 1, -xs - ys);
    }
    // The block A is the endomorphism (column action), so the wedge
    // coefficient on e_i ^ e_j is the coefficient of e_j in the image of
    // e_i, i.e. the (j, i) entry.
    for (unsigned j = i + 1; j < n; ++j)
      if (e.A(j, i) != 0) set_bivector(&beta, 2 + i + 1, 2 + j + 1, ExactScalar(e.A(j, i)));
  }
  return beta;
}

WeightedSpinorOp weighted_rep(const LorentzRep& lrep, const Rational& w,
                              const COElement& e) {
  const unsigned n = lrep.horizontal_dim();
  if (e.A.rows() != n) throw std::invalid_argument("co element dimension mismatch");
  const std::size_t d = lrep.clifford().spinor_dim();
  SpinorMatrix op(d, d);
  if (w * e.b != 0) op += ExactScalar(w * e.b) * SpinorMatrix::identity(d);
  if (e.a != 0) op += ExactScalar(e.a) * (lrep.phi_p() * lrep.phi_q());
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = i + 1; j <= n; ++j)
      if (e.A(i - 1, j - 1) != 0)
        op += ExactScalar(e.A(i - 1, j - 1)) *
              (lrep.horizontal_gamma(i) * lrep.horizontal_gamma(j));
    if (e.X[i - 1] != 0)
      op += ExactScalar(e.X[i - 1]) * (lrep.horizontal_gamma(i) * lrep.phi_p());
    if (e.Y[i - 1] != 0)
      op += ExactScalar(e.Y[i - 1]) * (lrep.horizontal_gamma(i) * lrep.phi_q());
  }
  return {w, std::move(op)};
}

SpinorVector embed_horizontal_spinor(const LorentzRep& lrep, const SpinorVector& psi) {
  const std::size_t d = lrep.clifford().spinor_dim();
  if (psi.size() * 2 != d) throw std::invalid_argument("horizontal spinor size");
  SpinorVector out(d, ExactScalar(0));
  for (std::size_t t = 0; t < psi.size(); ++t) out[2 * t] = psi[t];
  return out;
}

std::pair<SpinorVector, SpinorVector> horizontal_components(const LorentzRep& lrep,
                                                            const SpinorVector& Psi) {
  const std::size_t d = lrep.clifford().spinor_dim();
  if (Psi.size() != d) throw std::invalid_argument("spinor size");
  SpinorVector plus(d / 2), minus(d / 2);
  for (std::size_t t = 0; t < d / 2; ++t) {
    plus[t] = Psi[2 * t];
    minus[t] = Psi[2 * t + 1];
  }
  return {std::move(plus), std::move(minus)};
}

}  // namespace weylspin
