#pragma once
// Catalog of the classified Lorentzian Weyl holonomy families, produced as
// generator sets of null-line-stabilizer elements (b, a, A, X, Y):
//
//   decomposable families (preserve an orthogonal splitting
//   R^{1,n+1} = R^{1,k+1} + R^{n-k}):
//     g^{dec,1} = R id + so(1,k+1) + so(n-k),            -1 <= k <= n-1
//     g^{dec,2} = R(1,-1,0,0) + (kk + so(n-k)) |x R^k,    0 <= k <= n-1
//     g^{dec,3} = {(b,a,0,0)} + (kk + so(n-k)) |x R^k,    1 <= k <= n-1
//
//   indecomposable null-line families (h in so(n) a Riemannian holonomy,
//   theta, phi : h -> R linear with theta=phi=0 on [h,h], phi != 0, and
//   beta != 0 or theta != 0 where marked):
//     g^{R,1,h}            = {(b,a,0,0)} + h |x R^n
//     g^{R,2,h}            = {(b,0,0,0)} + h |x R^n
//     g^{R,3,h,phi}        = {(b, phi(A), A, 0)} |x R^n
//     g^{beta,theta,1,h}   = {(beta a + theta(A), a, A, 0)} |x R^n
//     g^{theta,2,h}        = {(theta(A), 0, A, 0)} |x R^n
//     g^{theta,3,h,phi}    = {(theta(A), phi(A), A, 0)} |x R^n
//
//   spinor-carrying families (h, kk Riemannian holonomies with invariant
//   spinors):
//     g^{w,h} = R(1, w/2, 0, 0) + h |x R^n        (any weight w)
//     g^k     = R(1, -1, 0, 0) + kk |x R^{n-1}    (weight -2 only)
//
// The invariant-spinor dimension formula for g^k depends on a parity
// multiplicity; the two possible conventions disagree, so both are reported
// along with a flag (see formula_spinor_dimension).

#include <string>
#include <vector>

#include "weylspin/lie_spin.hpp"
#include "weylspin/riemannian.hpp"

namespace weylspin::catalog {

enum class VariantTag {
  kDecomposable1,
  kDecomposable2,
  kDecomposable3,
  kR1,
  kR2,
  kR3Phi,
  kBetaTheta1,
  kTheta2,
  kTheta3Phi,
  kSpinorW,
  kSpinorK,
};

struct WeylHolonomyVariant {
  VariantTag tag = VariantTag::kSpinorW;
  unsigned n = 0;  // horizontal dimension; the algebra sits in co(1, n+1)
  riemannian::RiemannianHolonomy h;  // block: so(n) for the indecomposable
                                     // families, so(k) for g^{dec,2/3},
                                     // so(n-1) for g^k; unused for g^{dec,1}
  int split_k = 0;                   // k of the decomposable splitting
  Rational w = Rational(0);          // weight (g^{w,h}; g^k fixes -2)
  Rational beta = Rational(0);
  std::vector<Rational> theta;  // functional coordinates on the h generators
  std::vector<Rational> phi;

  static WeylHolonomyVariant decomposable1(unsigned n, int k);
  static WeylHolonomyVariant decomposable2(unsigned n, unsigned k,
                                           riemannian::RiemannianHolonomy kk);
  static WeylHolonomyVariant decomposable3(unsigned n, unsigned k,
                                           riemannian::RiemannianHolonomy kk);
  static WeylHolonomyVariant r1(unsigned n, riemannian::RiemannianHolonomy h);
  static WeylHolonomyVariant r2(unsigned n, riemannian::RiemannianHolonomy h);
  static WeylHolonomyVariant r3(unsigned n, riemannian::RiemannianHolonomy h,
                                std::vector<Rational> phi);
  static WeylHolonomyVariant beta_theta1(unsigned n, riemannian::RiemannianHolonomy h,
                                         Rational beta, std::vector<Rational> theta);
  static WeylHolonomyVariant theta2(unsigned n, riemannian::RiemannianHolonomy h,
                                    std::vector<Rational> theta);
  static WeylHolonomyVariant theta3(unsigned n, riemannian::RiemannianHolonomy h,
                                    std::vector<Rational> theta, std::vector<Rational> phi);
  static WeylHolonomyVariant spinor_w(unsigned n, riemannian::RiemannianHolonomy h,
                                      Rational w);
  static WeylHolonomyVariant spinor_k(unsigned n, riemannian::RiemannianHolonomy kk);

  // Weight the variant's spinor operators act with: w for g^{w,h}, -2 for
  // g^k, the stored w (default 0) otherwise.
  Rational weight() const;
  std::string family() const;  // e.g. "g^{w,h}"
  std::string name() const;    // family plus concrete parameters
  // Lie algebra dimension of the variant.
  unsigned dimension() const;
};

// Generators as (b, a, A, X, Y) elements.  Throws std::invalid_argument on
// constraint violations: mismatched block dimensions, theta or phi nonzero
// on the derived subalgebra, phi = 0 for a phi-family, theta = 0 (and
// beta = 0) where a nonzero functional is required.
std::vector<COElement> weyl_holonomy_generators(const WeylHolonomyVariant& v);

// True when the functional (given by its coordinates against the generator
// list) vanishes on the span of all commutators of the generators.
bool vanishes_on_derived(const std::vector<Matrix<Rational>>& gens,
                         const std::vector<Rational>& theta);

struct SpinorDimensionFormula {
  unsigned predicted = 0;  // dimension-consistent parity rule
  unsigned alternate = 0;  // the opposite parity convention
  bool rules_disagree = false;
};
// Closed-form invariant-spinor dimension from the annihilator dimension of
// the Riemannian block: g^{w,h} -> h_ann_dim; g^k -> multiplicity *
// h_ann_dim with multiplicity 2 for even n under the dimension-consistent
// rule (the alternate rule swaps the parity); all other families -> 0.
SpinorDimensionFormula formula_spinor_dimension(unsigned h_ann_dim, unsigned n,
                                                VariantTag tag);

// Deterministic enumeration used by the CLI catalog and the selftests.
std::vector<WeylHolonomyVariant> standard_catalog(unsigned max_n);

}  // namespace weylspin::catalog
