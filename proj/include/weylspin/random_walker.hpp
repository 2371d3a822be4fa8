#pragma once
// Deterministic pseudo-random polynomial Kundt/Walker structures for
// property tests.  Perturbations of h vanish at the basepoint so the
// positive-definiteness validation always passes with h(basepoint) = id.

#include <random>
#include <vector>

#include "weylspin/kundt.hpp"
#include "weylspin/symdiff.hpp"

namespace weylspin::sampling {

// Random polynomial: up to `max_terms` monomials of total degree <= max_degree
// with small rational coefficients.  Coordinates drawn from the chart; v is
// included only when allow_v is set.
inline symdiff::DiffExpr random_poly(std::mt19937& rng, const symdiff::CoordChart& chart,
                                     unsigned max_degree, unsigned max_terms, bool allow_v) {
  std::uniform_int_distribution<int> coef_dist(-2, 2);
  std::uniform_int_distribution<int> den_dist(1, 2);
  std::uniform_int_distribution<unsigned> term_dist(0, max_terms);
  const unsigned terms = term_dist(rng);
  symdiff::DiffExpr out;
  for (unsigned t = 0; t < terms; ++t) {
    int c = coef_dist(rng);
    if (c == 0) continue;
    Rational coef(c, den_dist(rng));
    coef.canonicalize();
    symdiff::DiffExpr mono{coef};
    unsigned degree_left = max_degree;
    const unsigned first = allow_v ? 0 : 1;
    for (unsigned idx = first; idx <= chart.index_u() && degree_left > 0; ++idx) {
      std::uniform_int_distribution<unsigned> e_dist(0, degree_left > 2 ? 2 : degree_left);
      const unsigned e = e_dist(rng);
      if (e == 0) continue;
      mono *= symdiff::pow_int(symdiff::DiffExpr::variable(idx), static_cast<long>(e));
      degree_left -= e;
    }
    out += mono;
  }
  return out;
}

// Random Walker structure: h = id + diagonal perturbation vanishing at the
// basepoint, omega = f du, polynomial f and H.  allow_v_in_f controls
// whether the Weyl 1-form may depend on v.  The spatial block stays diagonal
// and low-degree: polynomial off-diagonal entries mix into det(h), whose
// reciprocal compounds through the exact fraction field (no multivariate
// gcd) into minute-scale Ricci computations; f and H carry the full
// requested degree, and off-diagonal coverage lives in fixed fixtures.
inline kundt::KundtStructure random_walker(std::mt19937& rng, unsigned n, unsigned max_degree,
                                           bool allow_v_in_f = true) {
  using symdiff::DiffExpr;
  const symdiff::CoordChart chart(n);
  const std::vector<Rational> bp = kundt::default_basepoint(n);
  // Factor vanishing at the basepoint (x^1 - 1 or u), used to pin h there.
  std::uniform_int_distribution<int> pick(0, 1);
  Matrix<DiffExpr> h(n, n);
  for (unsigned i = 0; i < n; ++i) h(i, i) = DiffExpr(1);
  for (unsigned i = 0; i < n; ++i) {
    if (pick(rng) == 0) continue;  // leave roughly half the diagonal flat
    DiffExpr vanish = pick(rng) == 0 ? DiffExpr::variable(chart.index_x(1)) - DiffExpr(1)
                                     : DiffExpr::variable(chart.index_u());
    h(i, i) += vanish * random_poly(rng, chart, 1, 1, false);
  }
  DiffExpr f = random_poly(rng, chart, max_degree, 2, allow_v_in_f);
  DiffExpr big_h = random_poly(rng, chart, max_degree, 3, true);
  std::uniform_int_distribution<int> w_dist(-2, 3);
  const Rational w(w_dist(rng));
  return kundt::make_walker(n, std::move(h), std::move(f), std::move(big_h), w, bp);
}

}  // namespace weylspin::sampling
