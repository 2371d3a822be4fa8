#include "weylspin/examples.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace weylspin::examples {

using kundt::KundtStructure;
using symdiff::CoordChart;
using symdiff::DiffExpr;

namespace {

void require_v_independent(const DiffExpr& e, const CoordChart& chart,
                           const std::string& what) {
  if (!e.derivative(chart.index_v()).is_zero())
    throw std::invalid_argument(what + " must not depend on v; d_v(" + what +
                                ") = " + e.derivative(chart.index_v()).str(chart.names()));
}

std::vector<Rational> resolve_basepoint(unsigned n, std::vector<Rational> basepoint) {
  if (basepoint.empty()) return kundt::default_basepoint(n);
  if (basepoint.size() != static_cast<std::size_t>(n) + 2)
    throw std::invalid_argument("basepoint must have n + 2 entries");
  return basepoint;
}

// Flat-metric spatial Laplacian: sum of the second x-derivatives.
DiffExpr flat_laplacian(const DiffExpr& e, const CoordChart& chart) {
  DiffExpr lap(0);
  for (unsigned i = 1; i <= chart.n(); ++i)
    lap += e.derivative(chart.index_x(i)).derivative(chart.index_x(i));
  return lap;
}

}  // namespace

KundtStructure warped_product(unsigned n, const DiffExpr& F, const Rational& w,
                              std::vector<Rational> basepoint) {
  if (n < 1) throw std::invalid_argument("warped_product requires n >= 1");
  CoordChart chart(n);
  require_v_independent(F, chart, "warp exponent");
  if (!F.is_poly())
    throw std::invalid_argument("warp exponent must be a polynomial expression");
  bool couples = false;
  for (unsigned i = 1; i <= n && !couples; ++i)
    couples = !F.derivative(chart.index_x(i)).derivative(chart.index_u()).is_zero();
  if (!couples)
    throw std::invalid_argument(
        "warp exponent must couple a spatial coordinate with u "
        "(otherwise the scale 1-form is closed and the family degenerates)");
  const Rational den_c = F.den().poly().constant_value();
  const symdiff::PurePoly q = F.num().poly() * (Rational(-2) / den_c);
  Matrix<DiffExpr> h(n, n);
  for (unsigned i = 0; i + 1 < n; ++i) h(i, i) = DiffExpr(1);
  h(n - 1, n - 1) = DiffExpr::exponential(q);
  const DiffExpr f = F.derivative(chart.index_u());
  KundtStructure s = kundt::make_walker(n, std::move(h), f, DiffExpr(0), w,
                                        resolve_basepoint(n, std::move(basepoint)));
  s.exp_generators.push_back(q);
  return s;
}

KundtStructure generic_spinor_family(unsigned n, const Rational& w, const DiffExpr& H,
                                     std::vector<Rational> basepoint) {
  if (w == Rational(-2))
    throw std::invalid_argument(
        "generic_spinor_family is defined for w != -2 (f = d_v H / (2 + w))");
  CoordChart chart(n);
  DiffExpr f = H.derivative(chart.index_v());
  f /= DiffExpr(Rational(2) + w);
  return kundt::make_flat_walker(n, f, H, w, resolve_basepoint(n, std::move(basepoint)));
}

KundtStructure flat_einstein_weyl(unsigned n, const DiffExpr& f, const DiffExpr& H0,
                                  std::vector<Rational> basepoint) {
  if (n < 2) throw std::invalid_argument("flat_einstein_weyl requires n >= 2");
  CoordChart chart(n);
  require_v_independent(f, chart, "f");
  require_v_independent(H0, chart, "H0");
  const DiffExpr lap_f = flat_laplacian(f, chart);
  if (!lap_f.is_zero())
    throw std::invalid_argument("f must be spatially harmonic; Lap(f) = " +
                                lap_f.str(chart.names()));
  const Rational nn(n);
  DiffExpr residual = DiffExpr(Rational(2) * nn * (nn - 2)) * f * f;
  residual += DiffExpr(Rational(4) * nn) * f.derivative(chart.index_u());
  residual += DiffExpr(2) * flat_laplacian(H0, chart);
  if (!residual.is_zero())
    throw std::invalid_argument(
        "parameters violate 2n(n-2) f^2 + 4n d_u f + 2 Lap(H0) = 0; residual = " +
        residual.str(chart.names()));
  const DiffExpr H = DiffExpr(Rational(n)) * f * DiffExpr::variable(chart.index_v()) + H0;
  return kundt::make_flat_walker(n, f, H, Rational(n) - 2,
                                 resolve_basepoint(n, std::move(basepoint)));
}

KundtStructure u_scaled_einstein_weyl(unsigned n, const Rational& c) {
  if (n < 2) throw std::invalid_argument("u_scaled_einstein_weyl requires n >= 2");
  CoordChart chart(n);
  const DiffExpr x1 = DiffExpr::variable(chart.index_x(1));
  if (n == 2) {
    const DiffExpr x2 = DiffExpr::variable(chart.index_x(2));
    const DiffExpr f = DiffExpr(c) * x1;
    const DiffExpr h0 = DiffExpr(c) * (x1 * x1 - x2 * x2);
    return flat_einstein_weyl(2, f, h0);
  }
  const Rational nn(n);
  const DiffExpr u = DiffExpr::variable(chart.index_u());
  DiffExpr f = DiffExpr(Rational(-2) * c / (nn - 2)) * x1;
  f /= u;
  DiffExpr h0 = DiffExpr(nn * c * c / 3) * x1 * x1 * x1 * x1;
  h0 += DiffExpr(2 * nn * c / 3) * x1 * x1 * x1;
  h0 *= DiffExpr(Rational(-1) / (nn - 2));
  h0 /= u * u;
  // Anchor at u = 1: the family has a pole along u = 0.
  std::vector<Rational> basepoint = kundt::default_basepoint(n);
  basepoint.back() = Rational(1);
  return flat_einstein_weyl(n, f, h0, std::move(basepoint));
}

}  // namespace weylspin::examples
