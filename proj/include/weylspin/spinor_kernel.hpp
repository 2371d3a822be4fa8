#pragma once
// Invariant-spinor computations: joint kernels of spinor operator families
// with exact dimension certificates, the invariant Hermitian form on the
// Lorentzian spinor module, Dirac currents, and the cross-check of the
// catalog's closed-form spinor dimension counts against exact kernels.
//
// Conventions.  The Hermitian form is  <psi, phi> = psi^dagger B phi  with
// B = G(e_-) (the timelike generator, a real symmetric matrix squaring to
// the identity); Clifford multiplication by real vectors is then
// self-adjoint.  The Dirac current of psi is the vector V with
// g(V, X) = -<psi, X . psi>; its components are returned against the Witt
// frame (p, e_1..e_n, q).  For a horizontal spinor psi x u(+1) the current
// is a nonnegative multiple of p.

#include <vector>

#include "weylspin/catalog.hpp"
#include "weylspin/lie_spin.hpp"
#include "weylspin/riemannian.hpp"

namespace weylspin::spin {

// Basis of the simultaneous kernel of all operators (right null space of
// the stacked matrix).  All operators must share the column count `dim`;
// an empty list yields the standard basis.
std::vector<SpinorVector> joint_kernel(const std::vector<SpinorMatrix>& ops, std::size_t dim);
unsigned joint_kernel_dimension(const std::vector<SpinorMatrix>& ops, std::size_t dim);

// B with <psi, phi> = psi^dagger B phi invariant under the real Clifford
// action: B is Hermitian, B^2 = Id, and B G(x) is Hermitian for every real
// vector x.
SpinorMatrix invariant_hermitian_form(const LorentzRep& lrep);

// Pairing <psi, phi> = psi^dagger B phi (conjugate-linear in psi).
ExactScalar hermitian_pairing(const LorentzRep& lrep, const SpinorVector& psi,
                              const SpinorVector& phi);

struct DiracCurrent {
  // Components against (p, e_1..e_n, q): V = witt[0] p + sum witt[i] e_i
  //                                        + witt[n+1] q.
  std::vector<ExactScalar> witt;
  ExactScalar norm;  // g(V, V)

  bool is_real() const;
  bool is_null() const { return norm == ExactScalar(0); }
  // Nonzero p-component and nothing else.
  bool is_positive_multiple_of_p() const;
};

DiracCurrent dirac_current(const LorentzRep& lrep, const SpinorVector& psi);

// Spinor operator of an so(n) matrix A on the horizontal module:
// sum_{i<j} A_ij G_i G_j (twice the homomorphism normalization; same
// kernel).
SpinorMatrix horizontal_rotation_op(const CliffordRep& rep, const Matrix<Rational>& A);

// Dimension of the space of spinors annihilated by a Riemannian holonomy
// algebra acting on its own spinor module (Euclidean signature (0, n)).
unsigned riemannian_annihilator_dimension(const riemannian::RiemannianHolonomy& h);

struct DimensionCheck {
  unsigned computed = 0;  // exact joint kernel of the weighted operators
  catalog::SpinorDimensionFormula formula;
  bool matches_predicted = false;
  bool matches_alternate = false;
};

// Builds the spinor operators of the variant's generators at its weight and
// compares the exact kernel dimension with the closed-form count.
DimensionCheck verify_catalog_dimension(const catalog::WeylHolonomyVariant& v);

}  // namespace weylspin::spin
