#include "weylspin/spinor_kernel.hpp"

#include <stdexcept>

#include "weylspin/linalg.hpp"

namespace weylspin::spin {

namespace {

SpinorMatrix stack(const std::vector<SpinorMatrix>& ops, std::size_t dim) {
  SpinorMatrix m(ops.size() * dim, dim);
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (ops[k].rows() != dim || ops[k].cols() != dim)
      throw std::invalid_argument("joint_kernel: operator size mismatch");
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) m(k * dim + i, j) = ops[k](i, j);
  }
  return m;
}

}  // namespace

std::vector<SpinorVector> joint_kernel(const std::vector<SpinorMatrix>& ops, std::size_t dim) {
  if (ops.empty()) {
    std::vector<SpinorVector> basis;
    for (std::size_t j = 0; j < dim; ++j) {
      SpinorVector v(dim, ExactScalar(0));
      v[j] = ExactScalar(1);
      basis.push_back(std::move(v));
    }
    return basis;
  }
  return kernel_basis(stack(ops, dim));
}

unsigned joint_kernel_dimension(const std::vector<SpinorMatrix>& ops, std::size_t dim) {
  return static_cast<unsigned>(joint_kernel(ops, dim).size());
}

SpinorMatrix invariant_hermitian_form(const LorentzRep& lrep) {
  return lrep.clifford().gamma(1);  // the timelike generator e_-
}

ExactScalar hermitian_pairing(const LorentzRep& lrep, const SpinorVector& psi,
                              const SpinorVector& phi) {
  const SpinorMatrix b = invariant_hermitian_form(lrep);
  const std::size_t d = b.rows();
  if (psi.size() != d || phi.size() != d)
    throw std::invalid_argument("hermitian_pairing: size mismatch");
  ExactScalar out(0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out += psi[i].conj() * b(i, j) * phi[j];
  return out;
}

bool DiracCurrent::is_real() const {
  for (const auto& c : witt)
    if (!c.is_real()) return false;
  return true;
}

bool DiracCurrent::is_positive_multiple_of_p() const {
  if (witt.empty() || !witt[0].is_real() || witt[0].sign_real() <= 0) return false;
  for (std::size_t i = 1; i < witt.size(); ++i)
    if (!witt[i].is_zero()) return false;
  return true;
}

DiracCurrent dirac_current(const LorentzRep& lrep, const SpinorVector& psi) {
  const unsigned n = lrep.horizontal_dim();
  const SpinorMatrix b = invariant_hermitian_form(lrep);
  const std::size_t d = b.rows();
  if (psi.size() != d) throw std::invalid_argument("dirac_current: size mismatch");

  auto component = [&](const SpinorMatrix& gamma) {
    // -<psi, gamma psi> = -psi^dagger B gamma psi
    SpinorVector gp(d, ExactScalar(0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) gp[i] += gamma(i, j) * psi[j];
    ExactScalar out(0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) out += psi[i].conj() * b(i, j) * gp[j];
    return -out;
  };

  DiracCurrent cur;
  cur.witt.assign(n + 2, ExactScalar(0));
  // g(V, X) = component(X); raising indices in the Witt frame pairs p with q.
  cur.witt[0] = component(lrep.phi_q());  // coefficient of p
  for (unsigned i = 1; i <= n; ++i) cur.witt[i] = component(lrep.clifford().gamma(2 + i));
  cur.witt[n + 1] = component(lrep.phi_p());  // coefficient of q

  cur.norm = ExactScalar(2) * cur.witt[0] * cur.witt[n + 1];
  for (unsigned i = 1; i <= n; ++i) cur.norm += cur.witt[i] * cur.witt[i];
  return cur;
}

SpinorMatrix horizontal_rotation_op(const CliffordRep& rep, const Matrix<Rational>& A) {
  const unsigned n = rep.n();
  if (A.rows() != n || A.cols() != n)
    throw std::invalid_argument("horizontal_rotation_op: block size mismatch");
  const std::size_t d = rep.spinor_dim();
  SpinorMatrix out(d, d);
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j) {
      const Rational& c = A(i - 1, j - 1);
      if (c == 0) continue;
      out += ExactScalar(c) * (rep.gamma(i) * rep.gamma(j));
    }
  return out;
}

unsigned riemannian_annihilator_dimension(const riemannian::RiemannianHolonomy& h) {
  if (h.n == 0) return 1;  // one-dimensional spinor module, trivial action
  const auto gens = riemannian::riemannian_generators(h);
  const CliffordRep rep = build_clifford_rep({0, h.n});
  if (gens.empty()) return static_cast<unsigned>(rep.spinor_dim());
  std::vector<SpinorMatrix> ops;
  ops.reserve(gens.size());
  for (const auto& a : gens) ops.push_back(horizontal_rotation_op(rep, a));
  return joint_kernel_dimension(ops, rep.spinor_dim());
}

DimensionCheck verify_catalog_dimension(const catalog::WeylHolonomyVariant& v) {
  const LorentzRep lrep = build_lorentz_rep(v.n);
  const Rational w = v.weight();
  std::vector<SpinorMatrix> ops;
  for (const auto& e : catalog::weyl_holonomy_generators(v))
    ops.push_back(weighted_rep(lrep, w, e).op);

  DimensionCheck out;
  out.computed = joint_kernel_dimension(ops, lrep.clifford().spinor_dim());
  const bool spinor_family = v.tag == catalog::VariantTag::kSpinorW ||
                             v.tag == catalog::VariantTag::kSpinorK;
  const unsigned h_ann = spinor_family ? riemannian_annihilator_dimension(v.h) : 0;
  out.formula = catalog::formula_spinor_dimension(h_ann, v.n, v.tag);
  out.matches_predicted = out.computed == out.formula.predicted;
  out.matches_alternate = out.computed == out.formula.alternate;
  return out;
}

}  // namespace weylspin::spin
