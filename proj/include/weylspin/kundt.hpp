#pragma once
// Kundt and Walker structures: the geometric input type of the curvature
// engine, with exact validation and a JSON file format.
//
// Coordinates are (v, x^1..x^n, u).  The metric is
//
//     g = 2 dv du + h_ij dx^i dx^j + 2 A_i dx^i du + H (du)^2
//
// with h symmetric, v-independent, and positive definite at the chosen
// basepoint.  The Weyl 1-form omega is stored as a full covector; the
// Walker specialization is A = 0 together with omega = f du.  Every scalar
// entry is a DiffExpr over the chart.
//
// JSON schema (all expressions are strings in the symdiff grammar):
//   {
//     "n": 2,
//     "h": [["1","0"],["0","1"]],
//     "A": ["0","0"],                      // optional, defaults to zero
//     "H": "2*x1*v + x1^2 - x2^2",
//     "omega": {"f": "x1"}                 // Walker form, or a full
//                                          // covector ["0","0","0","x1"]
//     "w": "0",                            // rational (string or integer)
//     "basepoint": ["0","1","1","0"],      // v, x^1..x^n, u
//     "exp_generators": ["-2*x3*u"]        // optional; must be polynomials
//   }

#include <string>
#include <vector>

#include "weylspin/matrix.hpp"
#include "weylspin/symdiff.hpp"

#include "json.hpp"

namespace weylspin::kundt {

using symdiff::CoordChart;
using symdiff::DiffExpr;

struct KundtStructure {
  unsigned n = 0;
  CoordChart chart{0};
  Matrix<DiffExpr> h;           // n x n, symmetric, v-independent
  std::vector<DiffExpr> A;      // n entries
  DiffExpr H;
  std::vector<DiffExpr> omega;  // covector, n + 2 entries (v, x^i, u)
  Rational w = Rational(0);
  std::vector<Rational> basepoint;  // n + 2 rationals
  std::vector<symdiff::PurePoly> exp_generators;  // advisory, see schema

  // A == 0 and omega = f du.
  bool is_walker() const;
  // The u-component of omega; requires is_walker().
  const DiffExpr& f() const;

  // (n+2) x (n+2) coordinate metric matrix.
  Matrix<DiffExpr> metric_matrix() const;
  // Exact inverse metric; denominators come only from inverting h.
  Matrix<DiffExpr> inverse_metric() const;
  // Exact inverse of the h block.
  Matrix<DiffExpr> h_inverse() const;

  // h evaluated at the basepoint (requires exact rational values there).
  Matrix<Rational> h_at_basepoint() const;
};

// Validating constructors.  Throw std::invalid_argument on structural
// violations (sizes, asymmetry, v-dependence of h, h not positive definite
// at the basepoint, non-rational h at the basepoint) and propagate
// symdiff::PoleError when an entry has a pole at the basepoint.
KundtStructure make_kundt(unsigned n, Matrix<DiffExpr> h, std::vector<DiffExpr> A,
                          std::vector<DiffExpr> omega, DiffExpr H, Rational w,
                          std::vector<Rational> basepoint);
// Walker convenience: A = 0, omega = f du.
KundtStructure make_walker(unsigned n, Matrix<DiffExpr> h, DiffExpr f, DiffExpr H, Rational w,
                           std::vector<Rational> basepoint);
// Flat-h Walker convenience: h = identity.
KundtStructure make_flat_walker(unsigned n, DiffExpr f, DiffExpr H, Rational w,
                                std::vector<Rational> basepoint);

// Default basepoint v = 0, x = (1,...,1), u = 0.
std::vector<Rational> default_basepoint(unsigned n);

// JSON (de)serialization.  from-json throws std::invalid_argument on schema
// violations and symdiff::ParseError (with position) on bad expressions.
nlohmann::json structure_to_json(const KundtStructure& s);
KundtStructure structure_from_json(const nlohmann::json& j);
// File wrappers; load throws std::invalid_argument when the file is missing
// or not valid JSON.
KundtStructure load_structure(const std::string& path);
void save_structure(const KundtStructure& s, const std::string& path);

}  // namespace weylspin::kundt
