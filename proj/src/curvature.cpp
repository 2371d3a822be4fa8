#include "weylspin/curvature.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace weylspin::curvature {

namespace {

std::string coord_label(const KundtStructure& s, unsigned idx) {
  if (idx == 0) return "v";
  if (idx == s.n + 1) return "u";
  return "x" + std::to_string(idx);
}

const DiffExpr& half() {
  static const DiffExpr h = DiffExpr(Rational(1)) / DiffExpr(2);
  return h;
}

const DiffExpr& quarter() {
  static const DiffExpr q = DiffExpr(Rational(1)) / DiffExpr(4);
  return q;
}

void require_walker(const KundtStructure& s, const char* what) {
  if (!s.is_walker())
    throw std::invalid_argument(std::string(what) + " requires a Walker structure");
}

// Symmetrized Ricci of the connection given by `gamma`.
Matrix<DiffExpr> symmetric_ricci_of(const KundtStructure& s, const ChristoffelTable& gamma) {
  const unsigned dim = gamma.dim();
  CurvatureTensor r = curvature_of(s, gamma);
  Matrix<DiffExpr> ric(dim, dim);
  for (unsigned b = 0; b < dim; ++b)
    for (unsigned c = 0; c < dim; ++c) {
      DiffExpr sum;
      for (unsigned a = 0; a < dim; ++a) sum += r.at(a, c, b, a);
      ric(b, c) = sum;
    }
  Matrix<DiffExpr> sym(dim, dim);
  for (unsigned b = 0; b < dim; ++b)
    for (unsigned c = b; c < dim; ++c) {
      DiffExpr v = half() * (ric(b, c) + ric(c, b));
      sym(b, c) = v;
      sym(c, b) = v;
    }
  return sym;
}

// h^{ij} hdot_ij
DiffExpr trace_hdot(const KundtStructure& s, const Matrix<DiffExpr>& hinv) {
  const unsigned n = s.n;
  const unsigned u = s.chart.index_u();
  DiffExpr out;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) out += hinv(i, j) * s.h(i, j).derivative(u);
  return out;
}

// h^{ij} hddot_ij
DiffExpr trace_hddot(const KundtStructure& s, const Matrix<DiffExpr>& hinv) {
  const unsigned n = s.n;
  const unsigned u = s.chart.index_u();
  DiffExpr out;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      out += hinv(i, j) * s.h(i, j).derivative(u).derivative(u);
  return out;
}

// h^{ij} h^{kl} hdot_ik hdot_jl
DiffExpr double_trace_hdot(const KundtStructure& s, const Matrix<DiffExpr>& hinv) {
  const unsigned n = s.n;
  const unsigned u = s.chart.index_u();
  Matrix<DiffExpr> hdot(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) hdot(i, j) = s.h(i, j).derivative(u);
  DiffExpr out;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (unsigned k = 0; k < n; ++k)
        for (unsigned l = 0; l < n; ++l)
          out += hinv(i, j) * hinv(k, l) * hdot(i, k) * hdot(j, l);
  return out;
}

bool h_is_x_independent(const KundtStructure& s) {
  for (unsigned i = 0; i < s.n; ++i)
    for (unsigned j = 0; j < s.n; ++j)
      for (unsigned k = 1; k <= s.n; ++k)
        if (!s.h(i, j).derivative(s.chart.index_x(k)).is_zero()) return false;
  return true;
}

}  // namespace

ChristoffelTable levi_civita_christoffels(const KundtStructure& s) {
  const unsigned dim = s.n + 2;
  const Matrix<DiffExpr> g = s.metric_matrix();
  const Matrix<DiffExpr> ginv = s.inverse_metric();
  // dg[c](a,b) = d_c g_ab
  std::vector<Matrix<DiffExpr>> dg(dim, Matrix<DiffExpr>(dim, dim));
  for (unsigned c = 0; c < dim; ++c)
    for (unsigned a = 0; a < dim; ++a)
      for (unsigned b = 0; b < dim; ++b) dg[c](a, b) = g(a, b).derivative(c);
  ChristoffelTable gamma(dim);
  for (unsigned c = 0; c < dim; ++c)
    for (unsigned a = 0; a < dim; ++a)
      for (unsigned b = a; b < dim; ++b) {
        DiffExpr sum;
        for (unsigned d = 0; d < dim; ++d) {
          if (ginv(c, d).is_zero()) continue;
          sum += ginv(c, d) * (dg[a](d, b) + dg[b](d, a) - dg[d](a, b));
        }
        DiffExpr value = half() * sum;
        gamma.at(c, a, b) = value;
        gamma.at(c, b, a) = std::move(value);
      }
  return gamma;
}

ChristoffelTable weyl_christoffels(const KundtStructure& s) {
  const unsigned dim = s.n + 2;
  ChristoffelTable gamma = levi_civita_christoffels(s);
  const Matrix<DiffExpr> g = s.metric_matrix();
  const Matrix<DiffExpr> ginv = s.inverse_metric();
  // omega^#c = g^{cd} omega_d
  std::vector<DiffExpr> sharp(dim);
  for (unsigned c = 0; c < dim; ++c)
    for (unsigned d = 0; d < dim; ++d) sharp[c] += ginv(c, d) * s.omega[d];
  for (unsigned c = 0; c < dim; ++c)
    for (unsigned a = 0; a < dim; ++a)
      for (unsigned b = 0; b < dim; ++b) {
        DiffExpr k;
        if (c == b) k += s.omega[a];
        if (c == a) k += s.omega[b];
        k -= g(a, b) * sharp[c];
        gamma.at(c, a, b) += k;
      }
  return gamma;
}

bool is_torsion_free(const ChristoffelTable& gamma) {
  const unsigned dim = gamma.dim();
  for (unsigned c = 0; c < dim; ++c)
    for (unsigned a = 0; a < dim; ++a)
      for (unsigned b = a + 1; b < dim; ++b)
        if (!(gamma.at(c, a, b) - gamma.at(c, b, a)).is_zero()) return false;
  return true;
}

CompatibilityReport verify_compatibility(const KundtStructure& s) {
  const unsigned dim = s.n + 2;
  const Matrix<DiffExpr> g = s.metric_matrix();
  const ChristoffelTable gamma = weyl_christoffels(s);
  CompatibilityReport rep;

  bool omega_zero = true;
  for (const DiffExpr& w : s.omega)
    if (!w.is_zero()) omega_zero = false;
  rep.omega_zero = omega_zero;

  bool plus_ok = true;
  bool minus_ok = true;
  for (unsigned a = 0; a < dim; ++a)
    for (unsigned b = 0; b < dim; ++b)
      for (unsigned c = b; c < dim; ++c) {
        DiffExpr nabla = g(b, c).derivative(a);
        for (unsigned d = 0; d < dim; ++d)
          nabla -= gamma.at(d, a, b) * g(d, c) + gamma.at(d, a, c) * g(b, d);
        const DiffExpr base = DiffExpr(2) * s.omega[a] * g(b, c);
        if (plus_ok && !(nabla - base).is_zero()) plus_ok = false;
        if (minus_ok && !(nabla + base).is_zero()) minus_ok = false;
      }
  if (omega_zero) {
    rep.has_consistent_sign = plus_ok && minus_ok;  // both reduce to nabla g = 0
    rep.epsilon = 0;
  } else if (minus_ok && !plus_ok) {
    rep.has_consistent_sign = true;
    rep.epsilon = -2;
  } else if (plus_ok && !minus_ok) {
    rep.has_consistent_sign = true;
    rep.epsilon = 2;
  } else {
    rep.has_consistent_sign = false;
    rep.epsilon = 0;
  }

  rep.residual_v_trace = (DiffExpr(2) * s.omega[0] + gamma.at(0, 0, 0)).is_zero();
  bool scaling = true;
  for (unsigned i = 0; i < s.n && scaling; ++i)
    for (unsigned j = 0; j < s.n && scaling; ++j)
      if (!(s.h(i, j).derivative(0) - DiffExpr(2) * s.omega[0] * s.h(i, j)).is_zero())
        scaling = false;
  rep.residual_h_scaling = scaling;
  return rep;
}

CurvatureTensor curvature_of(const KundtStructure& s, const ChristoffelTable& gamma) {
  (void)s;
  const unsigned dim = gamma.dim();
  // dgam[e][c][a][b] = d_e Gamma^c_{ab}
  std::vector<DiffExpr> dgam(static_cast<std::size_t>(dim) * dim * dim * dim);
  auto dg = [&](unsigned e, unsigned c, unsigned a, unsigned b) -> DiffExpr& {
    return dgam[((static_cast<std::size_t>(e) * dim + c) * dim + a) * dim + b];
  };
  for (unsigned e = 0; e < dim; ++e)
    for (unsigned c = 0; c < dim; ++c)
      for (unsigned a = 0; a < dim; ++a)
        for (unsigned b = a; b < dim; ++b) {
          DiffExpr d = gamma.at(c, a, b).derivative(e);
          dg(e, c, b, a) = d;
          dg(e, c, a, b) = std::move(d);
        }
  CurvatureTensor r(dim);
  for (unsigned a = 0; a < dim; ++a)
    for (unsigned b = a + 1; b < dim; ++b)
      for (unsigned d = 0; d < dim; ++d)
        for (unsigned c = 0; c < dim; ++c) {
          DiffExpr val = dg(a, d, b, c) - dg(b, d, a, c);
          for (unsigned e = 0; e < dim; ++e)
            val += gamma.at(e, b, c) * gamma.at(d, a, e) - gamma.at(e, a, c) * gamma.at(d, b, e);
          r.at(d, c, b, a) = -val;
          r.at(d, c, a, b) = std::move(val);
        }
  return r;
}

CurvatureTensor weyl_curvature(const KundtStructure& s) {
  return curvature_of(s, weyl_christoffels(s));
}

bool is_antisymmetric(const CurvatureTensor& r) {
  const unsigned dim = r.dim();
  for (unsigned d = 0; d < dim; ++d)
    for (unsigned c = 0; c < dim; ++c)
      for (unsigned a = 0; a < dim; ++a)
        for (unsigned b = a; b < dim; ++b)
          if (!(r.at(d, c, a, b) + r.at(d, c, b, a)).is_zero()) return false;
  return true;
}

bool satisfies_first_bianchi(const CurvatureTensor& r) {
  const unsigned dim = r.dim();
  for (unsigned d = 0; d < dim; ++d)
    for (unsigned c = 0; c < dim; ++c)
      for (unsigned a = 0; a < dim; ++a)
        for (unsigned b = 0; b < dim; ++b) {
          DiffExpr cyc = r.at(d, c, a, b) + r.at(d, a, b, c) + r.at(d, b, c, a);
          if (!cyc.is_zero()) return false;
        }
  return true;
}

RecurrenceReport check_recurrence(const KundtStructure& s) {
  const unsigned dim = s.n + 2;
  const ChristoffelTable gamma = weyl_christoffels(s);
  RecurrenceReport rep;
  rep.recurrent = true;
  for (unsigned a = 0; a < dim && rep.recurrent; ++a)
    for (unsigned c = 1; c < dim; ++c)
      if (!gamma.at(c, a, 0).is_zero()) {
        rep.recurrent = false;
        rep.failing_component =
            "Gamma^" + coord_label(s, c) + "_{" + coord_label(s, a) + " v}";
        break;
      }
  for (unsigned a = 0; a < dim; ++a) rep.rho.push_back(gamma.at(0, a, 0));

  const CurvatureTensor r = curvature_of(s, gamma);
  rep.null_line_curvature = true;
  for (unsigned i = 1; i <= s.n; ++i)
    if (!r.at(0, 0, 0, i).is_zero()) rep.null_line_curvature = false;
  for (unsigned i = 1; i <= s.n; ++i)
    for (unsigned j = i + 1; j <= s.n; ++j)
      if (!r.at(0, 0, i, j).is_zero()) rep.null_line_curvature = false;
  return rep;
}

bool check_projection_condition(const KundtStructure& s) {
  require_walker(s, "check_projection_condition");
  const unsigned n = s.n;
  const unsigned dim = n + 2;
  const CurvatureTensor r = weyl_curvature(s);
  const DiffExpr factor = DiffExpr(2) + DiffExpr(s.w);
  for (unsigned a = 0; a < dim; ++a)
    for (unsigned b = a + 1; b < dim; ++b) {
      // g(R(d_a,d_b) p, q) with p = d_v, q = d_u - (H/2) d_v
      const DiffExpr g_rpq =
          r.at(0, 0, a, b) + half() * s.H * r.at(dim - 1, 0, a, b);
      for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i; j <= n; ++j) {
          DiffExpr sym;
          for (unsigned k = 1; k <= n; ++k)
            sym += r.at(k, i, a, b) * s.h(k - 1, j - 1) +
                   r.at(k, j, a, b) * s.h(k - 1, i - 1);
          const DiffExpr residual =
              factor * sym - DiffExpr(4) * g_rpq * s.h(i - 1, j - 1);
          if (!residual.is_zero()) return false;
        }
    }
  return true;
}

RicciDecomposition ricci_symmetric(const KundtStructure& s) {
  const unsigned dim = s.n + 2;
  RicciDecomposition out;
  out.ric_s = symmetric_ricci_of(s, weyl_christoffels(s));
  out.ric_bar = symmetric_ricci_of(s, levi_civita_christoffels(s));
  out.ric_hat = Matrix<DiffExpr>(dim, dim);
  for (unsigned a = 0; a < dim; ++a)
    for (unsigned b = 0; b < dim; ++b) out.ric_hat(a, b) = out.ric_s(a, b) - out.ric_bar(a, b);

  if (!s.is_walker()) return out;  // closed forms below are Walker-specific

  const unsigned n = s.n;
  const unsigned u = s.chart.index_u();
  const DiffExpr& f = s.f();
  const DiffExpr fv = f.derivative(0);
  const DiffExpr fu = f.derivative(u);
  const DiffExpr hv = s.H.derivative(0);
  const DiffExpr hvv = hv.derivative(0);
  const Matrix<DiffExpr> hinv = s.h_inverse();

  auto expect = [&out](const DiffExpr& got, const DiffExpr& want, std::string name) {
    if (!(got - want).is_zero()) {
      out.closed_form_ok = false;
      out.closed_form_failures.push_back(std::move(name));
    }
  };

  // The omega-dependent part, in closed form (exact, assumption-free).
  expect(out.ric_hat(0, 0), DiffExpr(0), "hat_vv");
  for (unsigned i = 1; i <= n; ++i)
    expect(out.ric_hat(0, i), DiffExpr(0), "hat_vx(" + std::to_string(i) + ")");
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i; j <= n; ++j)
      expect(out.ric_hat(i, j), s.h(i - 1, j - 1) * fv,
             "hat_xx(" + std::to_string(i) + "," + std::to_string(j) + ")");
  expect(out.ric_hat(0, dim - 1), (DiffExpr(static_cast<int>(n) + 2) / DiffExpr(2)) * fv,
         "hat_vu");
  for (unsigned i = 1; i <= n; ++i)
    expect(out.ric_hat(i, dim - 1),
           (DiffExpr(static_cast<int>(n)) / DiffExpr(2)) * f.derivative(i),
           "hat_xu(" + std::to_string(i) + ")");
  expect(out.ric_hat(dim - 1, dim - 1),
         DiffExpr(static_cast<int>(n)) * fu - DiffExpr(static_cast<int>(n)) * f * f +
             s.H * fv + (DiffExpr(static_cast<int>(n)) / DiffExpr(2)) * f * hv,
         "hat_uu");

  // Levi-Civita part: rows that are exact for every Walker structure.
  expect(out.ric_bar(0, 0), DiffExpr(0), "bar_vv");
  for (unsigned i = 1; i <= n; ++i)
    expect(out.ric_bar(0, i), DiffExpr(0), "bar_vx(" + std::to_string(i) + ")");
  expect(out.ric_bar(0, dim - 1), -(half() * hvv), "bar_vu");

  // Rows checked relative to the H = 0 baseline of the same h.
  KundtStructure base = kundt::make_walker(n, s.h, DiffExpr(0), DiffExpr(0), s.w, s.basepoint);
  const Matrix<DiffExpr> bar0 = symmetric_ricci_of(base, levi_civita_christoffels(base));
  for (unsigned i = 1; i <= n; ++i)
    expect(out.ric_bar(i, dim - 1) - bar0(i, dim - 1), -(half() * hv.derivative(i)),
           "bar_xu_rel(" + std::to_string(i) + ")");
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i; j <= n; ++j)
      expect(out.ric_bar(i, j) - bar0(i, j), DiffExpr(0),
             "bar_xx_rel(" + std::to_string(i) + "," + std::to_string(j) + ")");
  const DiffExpr lap_h = spatial_laplacian(s, s.H);
  const DiffExpr tr_hdot = trace_hdot(s, hinv);
  expect(out.ric_bar(dim - 1, dim - 1) - bar0(dim - 1, dim - 1),
         -(half() * s.H * hvv) + half() * lap_h + quarter() * tr_hdot * hv, "bar_uu_rel");

  // Absolute closed forms on the x-independent-h subclass.
  if (h_is_x_independent(s)) {
    for (unsigned i = 1; i <= n; ++i)
      expect(out.ric_bar(i, dim - 1), -(half() * hv.derivative(i)),
             "bar_xu_abs(" + std::to_string(i) + ")");
    for (unsigned i = 1; i <= n; ++i)
      for (unsigned j = i; j <= n; ++j)
        expect(out.ric_bar(i, j), DiffExpr(0),
               "bar_xx_abs(" + std::to_string(i) + "," + std::to_string(j) + ")");
    expect(out.ric_bar(dim - 1, dim - 1),
           -(half() * s.H * hvv) + half() * lap_h -
               quarter() * double_trace_hdot(s, hinv) + half() * trace_hddot(s, hinv) +
               quarter() * tr_hdot * hv,
           "bar_uu_abs");
  }
  return out;
}

EinsteinWeylReport einstein_weyl_check(const KundtStructure& s) {
  require_walker(s, "einstein_weyl_check");
  const unsigned dim = s.n + 2;
  const Matrix<DiffExpr> ric_s = symmetric_ricci_of(s, weyl_christoffels(s));
  const Matrix<DiffExpr> g = s.metric_matrix();
  EinsteinWeylReport rep;
  rep.lambda = s.f().derivative(0);
  for (unsigned b = 0; b < dim; ++b)
    for (unsigned c = b; c < dim; ++c) {
      if ((ric_s(b, c) - rep.lambda * g(b, c)).is_zero()) continue;
      rep.residual_components.push_back("Ric_s(" + coord_label(s, b) + "," +
                                        coord_label(s, c) + ")");
    }
  rep.is_einstein_weyl = rep.residual_components.empty();
  return rep;
}

NormalFormReport einstein_weyl_normal_form(const KundtStructure& s) {
  require_walker(s, "einstein_weyl_normal_form");
  const long n = static_cast<long>(s.n);
  const DiffExpr& f = s.f();
  const DiffExpr hv = s.H.derivative(0);
  NormalFormReport rep;
  rep.normal_form_ok = (DiffExpr(static_cast<int>(n)) * f - hv).is_zero();
  rep.weight_ok = (s.w == Rational(n - 2));
  const Matrix<DiffExpr> hinv = s.h_inverse();
  const DiffExpr hvv = hv.derivative(0);
  const DiffExpr huv = hv.derivative(s.chart.index_u());
  rep.equation_residual =
      (DiffExpr(static_cast<int>(2 * (n - 2))) / DiffExpr(static_cast<int>(n))) * hv * hv -
      DiffExpr(2) * s.H * hvv + DiffExpr(4) * huv +
      DiffExpr(2) * spatial_laplacian(s, s.H) - double_trace_hdot(s, hinv) +
      DiffExpr(2) * trace_hddot(s, hinv) + trace_hdot(s, hinv) * hv;
  rep.equation_ok = rep.equation_residual.is_zero();
  rep.closed_weyl = omega_is_closed(s);
  rep.geometry_pass = rep.normal_form_ok && rep.equation_ok;
  rep.pass = rep.geometry_pass && (rep.weight_ok || f.derivative(0).is_zero());
  return rep;
}

QuotientReport quotient_connection(const KundtStructure& s) {
  require_walker(s, "quotient_connection");
  const unsigned n = s.n;
  const unsigned dim = n + 2;
  const ChristoffelTable gw = weyl_christoffels(s);
  const ChristoffelTable glc = levi_civita_christoffels(s);
  QuotientReport rep;
  rep.v_rows_zero = true;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j)
      if (!gw.at(i, 0, j).is_zero() || !glc.at(i, 0, j).is_zero()) rep.v_rows_zero = false;
  rep.spatial_match = true;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned k = 1; k <= n; ++k)
      for (unsigned j = 1; j <= n; ++j)
        if (!(gw.at(i, k, j) - glc.at(i, k, j)).is_zero()) rep.spatial_match = false;
  rep.u_shift_match = true;
  const DiffExpr& f = s.f();
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j) {
      DiffExpr want = glc.at(i, dim - 1, j);
      if (i == j) want += f;
      if (!(gw.at(i, dim - 1, j) - want).is_zero()) rep.u_shift_match = false;
    }
  rep.pass = rep.v_rows_zero && rep.spatial_match && rep.u_shift_match;
  rep.coefficients.assign(dim, Matrix<DiffExpr>(n, n));
  for (unsigned a = 0; a < dim; ++a)
    for (unsigned i = 1; i <= n; ++i)
      for (unsigned j = 1; j <= n; ++j) rep.coefficients[a](i - 1, j - 1) = gw.at(i, a, j);
  return rep;
}

bool omega_is_closed(const KundtStructure& s) {
  const unsigned dim = s.n + 2;
  for (unsigned a = 0; a < dim; ++a)
    for (unsigned b = a + 1; b < dim; ++b)
      if (!(s.omega[b].derivative(a) - s.omega[a].derivative(b)).is_zero()) return false;
  return true;
}

DiffExpr spatial_laplacian(const KundtStructure& s, const DiffExpr& scalar) {
  const unsigned n = s.n;
  const Matrix<DiffExpr> hinv = s.h_inverse();
  // Christoffels of the u-family h (x-derivatives only).
  auto dx = [&](unsigned i) { return s.chart.index_x(i); };
  std::vector<DiffExpr> tilde(static_cast<std::size_t>(n) * n * n);
  auto gt = [&](unsigned k, unsigned i, unsigned j) -> DiffExpr& {
    return tilde[(static_cast<std::size_t>(k) * n + i) * n + j];
  };
  for (unsigned k = 1; k <= n; ++k)
    for (unsigned i = 1; i <= n; ++i)
      for (unsigned j = i; j <= n; ++j) {
        DiffExpr sum;
        for (unsigned l = 1; l <= n; ++l) {
          if (hinv(k - 1, l - 1).is_zero()) continue;
          sum += hinv(k - 1, l - 1) * (s.h(l - 1, j - 1).derivative(dx(i)) +
                                       s.h(l - 1, i - 1).derivative(dx(j)) -
                                       s.h(i - 1, j - 1).derivative(dx(l)));
        }
        DiffExpr value = half() * sum;
        gt(k - 1, i - 1, j - 1) = value;
        gt(k - 1, j - 1, i - 1) = std::move(value);
      }
  DiffExpr out;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j) {
      if (hinv(i - 1, j - 1).is_zero()) continue;
      DiffExpr hess = scalar.derivative(dx(i)).derivative(dx(j));
      for (unsigned k = 1; k <= n; ++k)
        hess -= gt(k - 1, i - 1, j - 1) * scalar.derivative(dx(k));
      out += hinv(i - 1, j - 1) * hess;
    }
  return out;
}

}  // namespace weylspin::curvature
