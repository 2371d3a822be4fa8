#pragma once
// The curvature engine for Kundt/Walker Weyl structures: Christoffel
// symbols of the Levi-Civita and Weyl connections, compatibility
// measurement, the full coordinate curvature tensor, recurrence and
// null-line curvature conditions, symmetric Ricci with its Levi-Civita /
// Weyl-correction split, the Einstein-Weyl equation, its normal form, and
// the screen-bundle (quotient) connection.
//
// Conventions, fixed once for the whole artifact:
//  * The Weyl connection is nabla = nabla^g + K with
//        K^c_{ab} = delta^c_b omega_a + delta^c_a omega_b - g_ab omega^#c.
//    The resulting compatibility sign is MEASURED by
//    verify_compatibility; with this K it comes out as nabla g = -2 omega x g.
//  * Curvature:  R(d_a, d_b) d_c = R^d_{cab} d_d,
//        R^d_{cab} = da Gamma^d_{bc} - db Gamma^d_{ac}
//                    + Gamma^e_{bc} Gamma^d_{ae} - Gamma^e_{ac} Gamma^d_{be}.
//  * Ricci: Ric_{bc} = R^a_{cba}, then symmetrized.  This is the unique
//    trace convention consistent with the closed-form component lists the
//    engine cross-checks.
//
// Coordinate indices run (v, x^1..x^n, u) = (0, 1..n, n+1) as in the chart.

#include <string>
#include <vector>

#include "weylspin/kundt.hpp"
#include "weylspin/matrix.hpp"
#include "weylspin/symdiff.hpp"

namespace weylspin::curvature {

using kundt::KundtStructure;
using symdiff::DiffExpr;

class ChristoffelTable {
public:
  explicit ChristoffelTable(unsigned dim = 0) : dim_(dim), data_(dim * dim * dim) {}
  unsigned dim() const { return dim_; }
  // Gamma^c_{ab}
  const DiffExpr& at(unsigned c, unsigned a, unsigned b) const {
    return data_[(c * dim_ + a) * dim_ + b];
  }
  DiffExpr& at(unsigned c, unsigned a, unsigned b) { return data_[(c * dim_ + a) * dim_ + b]; }

private:
  unsigned dim_;
  std::vector<DiffExpr> data_;
};

class CurvatureTensor {
public:
  explicit CurvatureTensor(unsigned dim = 0)
      : dim_(dim), data_(dim * dim * dim * dim) {}
  unsigned dim() const { return dim_; }
  // R^d_{cab}
  const DiffExpr& at(unsigned d, unsigned c, unsigned a, unsigned b) const {
    return data_[((d * dim_ + c) * dim_ + a) * dim_ + b];
  }
  DiffExpr& at(unsigned d, unsigned c, unsigned a, unsigned b) {
    return data_[((d * dim_ + c) * dim_ + a) * dim_ + b];
  }

private:
  unsigned dim_;
  std::vector<DiffExpr> data_;
};

// Levi-Civita Christoffels of the structure's metric.
ChristoffelTable levi_civita_christoffels(const KundtStructure& s);
// Weyl-connection Christoffels (Levi-Civita + K).
ChristoffelTable weyl_christoffels(const KundtStructure& s);

// True iff Gamma^c_{ab} == Gamma^c_{ba} for all indices.
bool is_torsion_free(const ChristoffelTable& gamma);

struct CompatibilityReport {
  bool omega_zero = false;         // nabla g = 0: the closed/exact case
  bool has_consistent_sign = false;
  int epsilon = 0;                 // the measured sign in nabla g = eps omega x g
  bool residual_v_trace = false;   // 2 omega(d_v) + Gamma^v_{vv} == 0
  bool residual_h_scaling = false; // d_v h_ij == 2 omega(d_v) h_ij
};
CompatibilityReport verify_compatibility(const KundtStructure& s);

// Curvature of a Christoffel table (any torsion-free connection).
CurvatureTensor curvature_of(const KundtStructure& s, const ChristoffelTable& gamma);
// Curvature of the structure's Weyl connection.
CurvatureTensor weyl_curvature(const KundtStructure& s);

// R^d_{cab} == -R^d_{cba} for all indices.
bool is_antisymmetric(const CurvatureTensor& r);
// Cyclic sum over (c, a, b) vanishes (first Bianchi, torsion-free).
bool satisfies_first_bianchi(const CurvatureTensor& r);

struct RecurrenceReport {
  bool recurrent = false;           // nabla d_v = rho x d_v
  std::string failing_component;    // set when not recurrent
  std::vector<DiffExpr> rho;        // rho_a = Gamma^v_{a v}
  bool null_line_curvature = false; // R^v_{vvi} == 0 and R^v_{vij} == 0
};
RecurrenceReport check_recurrence(const KundtStructure& s);

// Polarized projection compatibility for the weighted spinor family:
//   (2+w) [sum_k (R^k_{iab} h_kj + R^k_{jab} h_ki)] - 4 R^v_{vab} h_ij == 0
// for all frame pairs (a,b) and all i <= j.  Requires the Walker form.
bool check_projection_condition(const KundtStructure& s);

struct RicciDecomposition {
  Matrix<DiffExpr> ric_s;    // symmetrized Ricci of the Weyl connection
  Matrix<DiffExpr> ric_bar;  // symmetrized Ricci of the Levi-Civita connection
  Matrix<DiffExpr> ric_hat;  // difference (the omega-dependent part)
  bool closed_form_ok = true;
  std::vector<std::string> closed_form_failures;
};
// Walker-only closed-form cross-check; the decomposition itself is general.
RicciDecomposition ricci_symmetric(const KundtStructure& s);

struct EinsteinWeylReport {
  bool is_einstein_weyl = false;
  DiffExpr lambda;  // candidate from the ij-trace: Lambda = d_v f
  std::vector<std::string> residual_components;
};
// Requires the Walker form.
EinsteinWeylReport einstein_weyl_check(const KundtStructure& s);

struct NormalFormReport {
  bool normal_form_ok = false;  // n f == d_v H
  bool weight_ok = false;       // w == n - 2
  bool equation_ok = false;     // the H-equation residual vanishes
  bool closed_weyl = false;     // d omega == 0
  bool geometry_pass = false;   // normal_form_ok && equation_ok
  bool pass = false;            // geometry_pass plus the weight gate
  DiffExpr equation_residual;
};
// Einstein-Weyl normal-form characterization (Walker only):
//   omega = (1/n) d_v H du,  w = n - 2,  and
//   (2(n-2)/n)(d_v H)^2 - 2 H d_v^2 H + 4 du dv H + 2 Lap H
//     - h^{ij} h^{kl} hdot_ik hdot_jl + 2 h^{ij} hddot_ij
//     + h^{ij} hdot_ij d_v H = 0,
// where Lap is the Laplace-Beltrami operator of the u-family h.
NormalFormReport einstein_weyl_normal_form(const KundtStructure& s);

struct QuotientReport {
  bool v_rows_zero = false;    // Gamma^i_{vj} == Gammabar^i_{vj} == 0
  bool spatial_match = false;  // Gamma^i_{kj} == Gammabar^i_{kj}
  bool u_shift_match = false;  // Gamma^i_{uj} == Gammabar^i_{uj} + f delta^i_j
  bool pass = false;
  // quotient coefficients Gamma^i_{aj}, indexed [a][i][j] with a in 0..n+1
  std::vector<Matrix<DiffExpr>> coefficients;
};
// Screen-bundle connection extracted from the Weyl connection (Walker only).
QuotientReport quotient_connection(const KundtStructure& s);

// True iff d omega == 0 (all antisymmetrized coordinate derivatives vanish).
bool omega_is_closed(const KundtStructure& s);

// Laplace-Beltrami operator of the u-family h applied to a scalar.
DiffExpr spatial_laplacian(const KundtStructure& s, const DiffExpr& scalar);

}  // namespace weylspin::curvature
