#include "weylspin/clifford.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace weylspin {

namespace {

SpinorMatrix make2(const ExactScalar& a00, const ExactScalar& a01, const ExactScalar& a10,
                   const ExactScalar& a11) {
  SpinorMatrix m(2, 2);
  m(0, 0) = a00;
  m(0, 1) = a01;
  m(1, 0) = a10;
  m(1, 1) = a11;
  return m;
}

const ExactScalar kI = ExactScalar::i();

}  // namespace

SpinorMatrix factor_E() { return make2(1, 0, 0, 1); }
SpinorMatrix factor_T() { return make2(-1, 0, 0, 1); }
SpinorMatrix factor_U() { return make2(0, kI, kI, 0); }
SpinorMatrix factor_V() { return make2(0, -1, 1, 0); }

const SpinorMatrix& CliffordRep::gamma(unsigned a) const {
  if (a == 0 || a > gamma_.size()) throw std::out_of_range("generator index");
  return gamma_[a - 1];
}

namespace {

// tau E x ... x E x letter x T x ... x T  (k-1 trailing T factors, m total).
SpinorMatrix even_generator(unsigned m, unsigned pair_k, const SpinorMatrix& letter,
                            const ExactScalar& tau) {
  SpinorMatrix acc = tau * SpinorMatrix::identity(1);
  for (unsigned slot = 1; slot <= m; ++slot) {
    const unsigned letter_slot = m - pair_k + 1;
    if (slot < letter_slot)
      acc = kron(acc, factor_E());
    else if (slot == letter_slot)
      acc = kron(acc, letter);
    else
      acc = kron(acc, factor_T());
  }
  return acc;
}

std::vector<SpinorMatrix> build_generators(Signature sig) {
  const unsigned n = sig.dim();
  if (n % 2 == 0) {
    const unsigned m = n / 2;
    std::vector<SpinorMatrix> gens;
    gens.reserve(n);
    for (unsigned a = 1; a <= n; ++a) {
      const unsigned k = (a + 1) / 2;
      const ExactScalar tau = (a <= sig.r) ? kI : ExactScalar(1);
      gens.push_back(even_generator(m, k, a % 2 == 1 ? factor_U() : factor_V(), tau));
    }
    return gens;
  }
  // Odd n: the first n-1 vectors carry the signature with one fewer vector of
  // the kind e_n is; reuse that even-dimensional construction and append the
  // pure-T generator for e_n.
  Signature base = sig.s >= 1 ? Signature{sig.r, sig.s - 1} : Signature{sig.r - 1, 0};
  std::vector<SpinorMatrix> gens = build_generators(base);
  const bool last_spacelike = sig.s >= 1;
  SpinorMatrix last = (last_spacelike ? kI : ExactScalar(1)) * SpinorMatrix::identity(1);
  for (unsigned slot = 0; slot < (n - 1) / 2; ++slot) last = kron(last, factor_T());
  gens.push_back(std::move(last));
  return gens;
}

}  // namespace

CliffordRep build_clifford_rep(Signature sig) {
  const unsigned n = sig.dim();
  if (n == 0 || n > 12)
    throw std::invalid_argument("build_clifford_rep: dimension must be in [1, 12]");
  CliffordRep rep;
  rep.sig_ = sig;
  rep.gamma_ = build_generators(sig);
  return rep;
}

SpinorMatrix vector_matrix(const CliffordRep& rep, const std::vector<ExactScalar>& x) {
  if (x.size() != rep.n()) throw std::invalid_argument("vector length");
  SpinorMatrix acc(rep.spinor_dim(), rep.spinor_dim());
  for (unsigned a = 1; a <= rep.n(); ++a) {
    if (x[a - 1].is_zero()) continue;
    acc += x[a - 1] * rep.gamma(a);
  }
  return acc;
}

SpinorVector vector_action(const CliffordRep& rep, const std::vector<ExactScalar>& x,
                           const SpinorVector& psi) {
  return vector_matrix(rep, x).apply(psi);
}

CliffordCheck check_clifford_relations(const CliffordRep& rep) {
  CliffordCheck out;
  const std::size_t d = rep.spinor_dim();
  for (unsigned a = 1; a <= rep.n(); ++a) {
    for (unsigned b = a; b <= rep.n(); ++b) {
      SpinorMatrix lhs = anticommutator(rep.gamma(a), rep.gamma(b));
      SpinorMatrix rhs(d, d);
      if (a == b) rhs = ExactScalar(-2 * rep.metric_sign(a)) * SpinorMatrix::identity(d);
      if (lhs != rhs) {
        out.ok = false;
        std::ostringstream os;
        os << "anticommutator(" << a << "," << b << ") != -2 g_" << a << b << " Id";
        out.violations.push_back(os.str());
      }
    }
  }
  return out;
}

HalfSpinorSplit half_spinor_projection(const CliffordRep& rep) {
  if (rep.n() % 2 != 0)
    throw std::invalid_argument("half_spinor_projection: defined for even dimension only");
  HalfSpinorSplit split;
  for (std::size_t idx = 0; idx < rep.spinor_dim(); ++idx) {
    const bool even_sign_flips = std::popcount(idx) % 2 == 0;
    (even_sign_flips ? split.plus_indices : split.minus_indices).push_back(idx);
  }
  return split;
}

}  // namespace weylspin
