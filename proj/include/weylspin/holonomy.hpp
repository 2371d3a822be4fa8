#pragma once
// Infinitesimal holonomy of the Weyl connection of a Walker structure at
// its rational basepoint: the span of the curvature endomorphisms and
// their iterated covariant derivatives, evaluated at the basepoint and
// expressed in the null frame (p, X_1..X_n, q).
//
//  * p = d_v; the X_i orthonormalize the spatial block through an exact
//    rational LDL^T factorization of h(basepoint) (every pivot must be the
//    square of a rational, otherwise a domain_error explains the
//    obstruction); q = d_u - (H(basepoint)/2) d_v.
//  * Entries live in the exact constant field generated by the rationals
//    and any exponential values surviving substitution; the span rank is
//    computed with the symbolic zero test, so no floating point is
//    involved anywhere.
//  * The derivative order is raised until the rank is unchanged for two
//    consecutive orders (or max_order is reached); `stabilized` records
//    which exit happened.

#include <vector>

#include "weylspin/catalog.hpp"
#include "weylspin/clifford.hpp"
#include "weylspin/kundt.hpp"
#include "weylspin/lie_spin.hpp"
#include "weylspin/matrix.hpp"
#include "weylspin/symdiff.hpp"

namespace weylspin::holonomy {

using kundt::KundtStructure;
using symdiff::DiffExpr;

struct HolonomyResult {
  unsigned n = 0;
  Rational w = Rational(0);
  // Frame endomorphisms spanning the algebra; constant-field entries.
  std::vector<Matrix<DiffExpr>> basis;
  // Span rank after incorporating each derivative order 0, 1, ...
  std::vector<unsigned> ranks_by_order;
  unsigned orders_computed = 0;
  bool stabilized = false;
};

// Throws std::invalid_argument for non-Walker structures and
// std::domain_error when the frame orthonormalization needs an irrational
// square root.
HolonomyResult infinitesimal_holonomy(const KundtStructure& s, unsigned max_order = 4);

// True when every basis entry is a plain rational (no exponential values
// survived the substitution at the basepoint).
bool is_rational_span(const HolonomyResult& hol);

// Basis as (b, a, A, X, Y) stabilizer elements.  Requires a rational span;
// otherwise throws std::domain_error suggesting a basepoint where the
// exponentials evaluate to rationals.
std::vector<COElement> co_elements(const HolonomyResult& hol);

// rank(variant generators) == rank(variant generators U holonomy basis).
bool contained_in(const HolonomyResult& hol, const catalog::WeylHolonomyVariant& v);

struct ParallelSpinorResult {
  unsigned dimension = 0;
  std::vector<SpinorVector> basis;
  bool stabilized = false;  // copied from the holonomy result
};

// Joint kernel of the holonomy basis acting on weight-w spinors through
// the transfer map; requires a rational span (std::domain_error otherwise).
ParallelSpinorResult parallel_spinor_dimension(const HolonomyResult& hol);

// The orthonormalizing column matrix C with C^T h C = id, h rational
// positive definite; exposed for tests.  Throws std::domain_error when a
// pivot of the LDL^T factorization is not a rational square.
Matrix<Rational> orthonormal_columns(const Matrix<Rational>& h);

}  // namespace weylspin::holonomy
