#pragma once
// The pseudo-orthogonal Lie algebra, its bivector model, and its two spinor
// realizations.
//
// Bivectors: beta = sum_{a<b} beta_ab e_a ^ e_b over the orthonormal basis,
// acting on vectors by (x ^ y) z = g(x,z) y - g(y,z) x.  so_matrix_from_
// bivector realizes that action as a matrix; lambda_star realizes the same
// algebra on spinors through
//
//     lambda(e_a ^ e_b) = (G_a G_b - G_b G_a) / 4 ,
//
// the unique normalization making it a Lie algebra homomorphism (it halves
// the plain product G_a G_b for a != b).
//
// Lorentzian structures: for R^{1,n+1} with orthonormal basis
// (e_-, e_+, e_1..e_n) the null pair p = (e_- + e_+)/sqrt2,
// q = (e_+ - e_-)/sqrt2 satisfies g(p,q) = 1, and the subalgebra preserving
// the null line R p is parametrized as (b, a, A, X) in R + R + so(n) + R^n,
// extended here with an optional Y in R^n for the q-direction wedges.  In the
// frame (p, e_1..e_n, q) such an element acts as
//
//     b Id + [ a   X^t   0  ]
//            [ -Y   A   -X  ]
//            [ 0   Y^t   -a ] .
//
// weighted_rep carries these elements to spinor operators by the transfer
// rules (full Clifford products of the null vectors, not the homomorphism
// normalization; this map is linear but deliberately NOT a Lie algebra
// homomorphism — it is the operator family whose simultaneous kernels are
// the invariant spinor spaces of the holonomy catalog):
//
//     (b,a,A,X,Y) |-> w b Id + a G(p) G(q) + sum_{i<j} A_ij G_i G_j
//                     + sum_i X_i G_i G(p) + sum_i Y_i G_i G(q) ,
//
// where w is the scaling weight.  Under the wedge correspondence
// (0,a,A,X) <-> -a p^q + A - p^X the translation operator realizes
// (e_i ^ p) psi = G_i G(p) psi, and the a = -1 operator realizes
// (p ^ q)(psi x u(+1)) = 2 psi x u(+1) on horizontal spinors.
//
// The spinor module splits as D_{1,n+1} = D_n x D_{1,1} with the 2x2 factor
// last; a horizontal spinor psi embeds as psi x u(+1) at even coordinates.

#include <utility>

#include "weylspin/clifford.hpp"

namespace weylspin {

using Bivector = Matrix<ExactScalar>;  // antisymmetric coefficient matrix

Bivector zero_bivector(unsigned n);
// Sets beta_ab = v (and beta_ba = -v); requires a < b, 1-based.
void set_bivector(Bivector* beta, unsigned a, unsigned b, const ExactScalar& v);

Matrix<ExactScalar> so_matrix_from_bivector(const Signature& sig, const Bivector& beta);
// Inverse of the above; validates that m is g-antisymmetric.
Bivector bivector_from_so_matrix(const Signature& sig, const Matrix<ExactScalar>& m);
// Lie bracket pulled back through the matrix realization.
Bivector bivector_bracket(const Signature& sig, const Bivector& b1, const Bivector& b2);

// Homomorphism normalization: lambda(beta) = 1/2 sum_{a<b} beta_ab G_a G_b.
SpinorMatrix lambda_star(const CliffordRep& rep, const Bivector& beta);

struct WittFrame {
  std::vector<ExactScalar> p, q;  // coordinates in the orthonormal basis
};

class LorentzRep {
public:
  unsigned horizontal_dim() const { return n_; }
  const CliffordRep& clifford() const { return rep_; }
  const CliffordRep& horizontal_clifford() const;
  const WittFrame& frame() const { return frame_; }
  const SpinorMatrix& phi_p() const { return phi_p_; }
  const SpinorMatrix& phi_q() const { return phi_q_; }
  // Clifford generator of the horizontal e_i (1-based i in [1, n]).
  const SpinorMatrix& horizontal_gamma(unsigned i) const;

  friend LorentzRep build_lorentz_rep(unsigned n);

private:
  unsigned n_ = 0;
  CliffordRep rep_;             // signature (1, n+1), basis e_-, e_+, e_1..e_n
  CliffordRep horizontal_rep_;  // signature (0, n); empty when n == 0
  WittFrame frame_;
  SpinorMatrix phi_p_, phi_q_;
};

LorentzRep build_lorentz_rep(unsigned n);

struct COElement {
  Rational b, a;
  Matrix<Rational> A;       // n x n antisymmetric
  std::vector<Rational> X;  // length n
  std::vector<Rational> Y;  // length n; zero for the null-line stabilizer

  explicit COElement(unsigned n = 0)
      : b(0), a(0), A(n, n), X(n, Rational(0)), Y(n, Rational(0)) {}
};

// (n+2)x(n+2) matrix in the frame (p, e_1..e_n, q).
Matrix<Rational> co_matrix(const COElement& e);
// Inverse; validates the block pattern (throws std::invalid_argument).
COElement co_from_matrix(const Matrix<Rational>& m);

// Orthonormal-basis bivector of the wedge -a p^q + A - p^X + sum Y_i e_i^q.
Bivector bivector_from_co(const COElement& e);

struct WeightedSpinorOp {
  Rational w;
  SpinorMatrix op;
};

WeightedSpinorOp weighted_rep(const LorentzRep& lrep, const Rational& w,
                              const COElement& e);

// psi x u(+1): horizontal spinor at even coordinates.
SpinorVector embed_horizontal_spinor(const LorentzRep& lrep, const SpinorVector& psi);
// Splits Psi = psi_plus x u(+1) + psi_minus x u(-1).
std::pair<SpinorVector, SpinorVector> horizontal_components(const LorentzRep& lrep,
                                                            const SpinorVector& Psi);

}  // namespace weylspin
