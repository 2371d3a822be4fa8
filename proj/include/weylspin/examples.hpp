#pragma once

// Pre-validated families of Walker Weyl structures.  Each factory checks the
// family's defining constraints symbolically before handing back the
// structure, and throws std::invalid_argument naming the violated constraint
// (with the offending residual printed) when the parameters fall outside the
// family.  All expressions live on the chart (v, x1..xn, u) of the given n.

#include <vector>

#include "weylspin/exact_scalar.hpp"
#include "weylspin/kundt.hpp"
#include "weylspin/symdiff.hpp"

namespace weylspin::examples {

// Warped product: h = id_{n-1} (+) exp(-2F) (dx^n)^2, f = d_u F, H = 0.
// F must be a polynomial, independent of v, with d_xi d_u F != 0 for some i
// (so the scale 1-form f du is genuinely non-closed).  The weight defaults
// to -2, the value for which this family carries weighted parallel spinors;
// other weights give the same geometry with a rescaled line-bundle action.
kundt::KundtStructure warped_product(unsigned n, const symdiff::DiffExpr& F,
                                     const Rational& w = Rational(-2),
                                     std::vector<Rational> basepoint = {});

// Flat spatial metric with f solved from the spinor-family equation
// (2+w) f = d_v H.  Requires w != -2.
kundt::KundtStructure generic_spinor_family(unsigned n, const Rational& w,
                                            const symdiff::DiffExpr& H,
                                            std::vector<Rational> basepoint = {});

// Flat spatial metric, H = n f v + H0, weight w = n-2.  Constraints checked
// symbolically: f and H0 independent of v, f spatially harmonic, and
//   2n(n-2) f^2 + 4n d_u f + 2 Lap(H0) = 0.
// Every structure in this family is Einstein-Weyl with vanishing scale.
kundt::KundtStructure flat_einstein_weyl(unsigned n, const symdiff::DiffExpr& f,
                                         const symdiff::DiffExpr& H0,
                                         std::vector<Rational> basepoint = {});

// One-parameter subfamily of flat_einstein_weyl with an explicit u-scaling:
// for n >= 3,
//   f  = -2 c x1 / ((n-2) u),
//   H0 = -(n c^2 (x1)^4 / 3 + (2 n c / 3) (x1)^3) / ((n-2) u^2),
// anchored at u = 1 to stay clear of the pole; for n = 2 the scaling
// degenerates and the family continues as f = c x1 with the harmonic
// H0 = c ((x1)^2 - (x2)^2).
kundt::KundtStructure u_scaled_einstein_weyl(unsigned n, const Rational& c);

}  // namespace weylspin::examples
