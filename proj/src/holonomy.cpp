#include "weylspin/holonomy.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weylspin/curvature.hpp"
#include "weylspin/linalg.hpp"
#include "weylspin/spinor_kernel.hpp"

namespace weylspin::holonomy {

namespace {

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  const mpz_class num = r.get_num();
  const mpz_class den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  Rational out(sn, sd);
  out.canonicalize();
  return out;
}

bool rational_value(const DiffExpr& e, Rational* out) {
  if (!e.is_poly()) return false;
  const symdiff::PurePoly num = e.num().poly();
  const symdiff::PurePoly den = e.den().poly();
  if (!num.is_constant() || !den.is_constant()) return false;
  Rational v = num.constant_value() / den.constant_value();
  v.canonicalize();
  *out = v;
  return true;
}

std::vector<DiffExpr> flatten(const Matrix<DiffExpr>& m) {
  std::vector<DiffExpr> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

// Frame columns (p, X_1..X_n, q) in coordinate components.
Matrix<DiffExpr> frame_columns(const KundtStructure& s) {
  const unsigned n = s.n;
  const unsigned dim = n + 2;
  Matrix<DiffExpr> frame(dim, dim);
  frame(0, 0) = DiffExpr(1);
  const Matrix<Rational> c = orthonormal_columns(s.h_at_basepoint());
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) frame(1 + i, 1 + j) = DiffExpr(c(i, j));
  frame(0, dim - 1) =
      -(DiffExpr(1) / DiffExpr(2)) * s.H.substitute(s.basepoint);
  frame(dim - 1, dim - 1) = DiffExpr(1);
  return frame;
}

}  // namespace

Matrix<Rational> orthonormal_columns(const Matrix<Rational>& h) {
  const std::size_t n = h.rows();
  if (h.cols() != n) throw std::invalid_argument("orthonormal_columns: non-square input");
  // h = L D L^T with unit lower-triangular L.
  Matrix<Rational> l(n, n);
  std::vector<Rational> d(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rational pivot = h(j, j);
    for (std::size_t k = 0; k < j; ++k) pivot -= l(j, k) * l(j, k) * d[k];
    if (sgn(pivot) <= 0)
      throw std::domain_error("orthonormal_columns: input is not positive definite");
    d[j] = pivot;
    l(j, j) = Rational(1);
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational v = h(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= l(i, k) * l(j, k) * d[k];
      l(i, j) = v / d[j];
    }
  }
  // S = L sqrt(D); the frame change is C = (S^T)^{-1}.
  Matrix<Rational> st(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::optional<Rational> root = rational_sqrt(d[j]);
    if (!root)
      throw std::domain_error(
          "orthonormal_columns: LDL^T pivot " + std::to_string(j + 1) +
          " of h at the basepoint is not the square of a rational; choose a basepoint "
          "where h is a rational congruence of the identity");
    for (std::size_t i = j; i < n; ++i) st(j, i) = l(i, j) * *root;
  }
  return matrix_inverse(st);
}

HolonomyResult infinitesimal_holonomy(const KundtStructure& s, unsigned max_order) {
  if (!s.is_walker())
    throw std::invalid_argument("infinitesimal_holonomy requires a Walker structure");
  const unsigned n = s.n;
  const unsigned dim = n + 2;
  const std::size_t dim2 = static_cast<std::size_t>(dim) * dim;

  HolonomyResult result;
  result.n = n;
  result.w = s.w;

  const Matrix<DiffExpr> frame = frame_columns(s);
  const Matrix<DiffExpr> frame_inv = matrix_inverse(frame);
  const curvature::ChristoffelTable gamma = curvature::weyl_christoffels(s);

  SpanAccumulator<DiffExpr> span(dim2);
  auto insert_endo = [&](const Matrix<DiffExpr>& endo_coord) {
    Matrix<DiffExpr> m = frame_inv * endo_coord * frame;
    if (span.insert(flatten(m))) result.basis.push_back(std::move(m));
  };

  // Order 0: the curvature tensor, lower indices (c, a, b).
  const curvature::CurvatureTensor r0 = curvature::curvature_of(s, gamma);
  std::size_t lower_count = dim2 * dim;  // dim^3
  std::vector<DiffExpr> cur(dim * lower_count);
  auto cur_at = [&](unsigned d, std::size_t lower) -> DiffExpr& {
    return cur[static_cast<std::size_t>(d) * lower_count + lower];
  };
  for (unsigned d = 0; d < dim; ++d)
    for (unsigned c = 0; c < dim; ++c)
      for (unsigned a = 0; a < dim; ++a)
        for (unsigned b = 0; b < dim; ++b)
          cur_at(d, (static_cast<std::size_t>(c) * dim + a) * dim + b) = r0.at(d, c, a, b);

  unsigned lower_rank = 3;  // number of lower indices of `cur`
  // Insert the endomorphism slices of `cur` evaluated at the basepoint:
  // the trailing (lower_rank - 1) indices enumerate (a, b, derivative...).
  auto insert_slices = [&]() {
    const std::size_t tail = lower_count / dim;  // dim^(lower_rank - 1)
    for (std::size_t rest = 0; rest < tail; ++rest) {
      Matrix<DiffExpr> endo(dim, dim);
      bool nonzero = false;
      for (unsigned d = 0; d < dim; ++d)
        for (unsigned c = 0; c < dim; ++c) {
          const DiffExpr val =
              cur[static_cast<std::size_t>(d) * lower_count + c * tail + rest].substitute(
                  s.basepoint);
          if (!val.is_zero()) nonzero = true;
          endo(d, c) = val;
        }
      if (nonzero) insert_endo(endo);
    }
  };

  insert_slices();
  result.ranks_by_order.push_back(static_cast<unsigned>(span.rank()));
  result.orders_computed = 0;

  for (unsigned order = 1; order <= max_order; ++order) {
    const std::size_t prev_count = lower_count;
    const std::size_t next_count = lower_count * dim;
    std::vector<DiffExpr> next(static_cast<std::size_t>(dim) * next_count);
    // Precompute digit weights of the previous lower index block.
    std::vector<std::size_t> weight(lower_rank);
    weight[lower_rank - 1] = 1;
    for (unsigned i = lower_rank - 1; i > 0; --i) weight[i - 1] = weight[i] * dim;
    std::vector<unsigned> digits(lower_rank);
    for (std::size_t lower = 0; lower < prev_count; ++lower) {
      std::size_t rem = lower;
      for (unsigned i = 0; i < lower_rank; ++i) {
        digits[i] = static_cast<unsigned>(rem / weight[i]);
        rem %= weight[i];
      }
      for (unsigned d = 0; d < dim; ++d) {
        const DiffExpr& base = cur_at(d, lower);
        for (unsigned e = 0; e < dim; ++e) {
          DiffExpr val = base.derivative(e);
          for (unsigned fidx = 0; fidx < dim; ++fidx) {
            const DiffExpr& g_up = gamma.at(d, e, fidx);
            if (!g_up.is_zero()) val += g_up * cur_at(fidx, lower);
          }
          for (unsigned slot = 0; slot < lower_rank; ++slot) {
            const unsigned orig = digits[slot];
            for (unsigned fidx = 0; fidx < dim; ++fidx) {
              const DiffExpr& g_dn = gamma.at(fidx, e, orig);
              if (g_dn.is_zero()) continue;
              const std::size_t moved =
                  lower - static_cast<std::size_t>(orig) * weight[slot] +
                  static_cast<std::size_t>(fidx) * weight[slot];
              val -= g_dn * cur_at(d, moved);
            }
          }
          next[(static_cast<std::size_t>(d) * next_count) + lower * dim + e] = std::move(val);
        }
      }
    }
    cur = std::move(next);
    lower_count = next_count;
    ++lower_rank;
    insert_slices();
    result.ranks_by_order.push_back(static_cast<unsigned>(span.rank()));
    result.orders_computed = order;
    const std::size_t k = result.ranks_by_order.size();
    if (k >= 3 && result.ranks_by_order[k - 1] == result.ranks_by_order[k - 2] &&
        result.ranks_by_order[k - 2] == result.ranks_by_order[k - 3]) {
      result.stabilized = true;
      break;
    }
  }
  return result;
}

bool is_rational_span(const HolonomyResult& hol) {
  Rational scratch;
  for (const Matrix<DiffExpr>& m : hol.basis)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!rational_value(m(i, j), &scratch)) return false;
  return true;
}

std::vector<COElement> co_elements(const HolonomyResult& hol) {
  if (!is_rational_span(hol))
    throw std::domain_error(
        "holonomy span has transcendental entries (exponentials evaluated away from "
        "zero); choose a basepoint where the exponential arguments vanish");
  std::vector<COElement> out;
  out.reserve(hol.basis.size());
  for (const Matrix<DiffExpr>& m : hol.basis) {
    Matrix<Rational> q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        Rational v;
        rational_value(m(i, j), &v);
        q(i, j) = v;
      }
    out.push_back(co_from_matrix(q));
  }
  return out;
}

bool contained_in(const HolonomyResult& hol, const catalog::WeylHolonomyVariant& v) {
  if (v.n != hol.n) return false;
  const unsigned dim = hol.n + 2;
  SpanAccumulator<DiffExpr> span(static_cast<std::size_t>(dim) * dim);
  for (const COElement& e : catalog::weyl_holonomy_generators(v)) {
    const Matrix<Rational> m = co_matrix(e);
    std::vector<DiffExpr> flat;
    flat.reserve(static_cast<std::size_t>(dim) * dim);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) flat.emplace_back(m(i, j));
    span.insert(std::move(flat));
  }
  const std::size_t base_rank = span.rank();
  for (const Matrix<DiffExpr>& b : hol.basis)
    if (span.insert(flatten(b))) return false;
  return span.rank() == base_rank;
}

ParallelSpinorResult parallel_spinor_dimension(const HolonomyResult& hol) {
  const std::vector<COElement> elems = co_elements(hol);
  const LorentzRep lrep = build_lorentz_rep(hol.n);
  std::vector<SpinorMatrix> ops;
  ops.reserve(elems.size());
  for (const COElement& e : elems) ops.push_back(weighted_rep(lrep, hol.w, e).op);
  ParallelSpinorResult out;
  out.basis = spin::joint_kernel(ops, lrep.clifford().spinor_dim());
  out.dimension = static_cast<unsigned>(out.basis.size());
  out.stabilized = hol.stabilized;
  return out;
}

}  // namespace weylspin::holonomy
