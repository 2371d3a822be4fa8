#pragma once
// Exact complex Clifford algebra representations.
//
// For the pseudo-Euclidean space R^{r,s} (basis e_1..e_n, the first r vectors
// timelike: g(e_a,e_a) = -1 for a <= r, +1 after) this builds generator
// matrices G_a on the spinor module of dimension 2^floor(n/2) satisfying
//
//     G_a G_b + G_b G_a = -2 g_ab Id .
//
// The module carries the standard tensor-product basis u(eps_k,...,eps_1)
// with eps_j in {+1,-1}; coordinates are stored in that basis, with basis
// index sum_j bit_j 2^(j-1) where bit_j = (1-eps_j)/2 and j = 1 refers to the
// LAST Kronecker factor.  In this basis the four 2x2 building blocks act as
//
//     E = id,   T u(e) = -e u(e),   U u(e) = i u(-e),   V u(e) = e u(-e),
//
// and satisfy T^2 = -V^2 = -U^2 = E, U T = -i V, V T = i U, U V = -i T.
// Even n uses generators tau_a E x..x E x (U or V) x T x..x T; odd n reuses
// the even construction on e_1..e_(n-1) and adds lambda T x..x T for e_n,
// lambda = i when e_n is spacelike and 1 when timelike (so that the square
// matches -g_nn).  Where a construction admits a two-component variant for
// odd n, the first component is used throughout.

#include <cstdint>
#include <string>
#include <vector>

#include "weylspin/matrix.hpp"

namespace weylspin {

struct Signature {
  unsigned r = 0;  // timelike directions
  unsigned s = 0;  // spacelike directions
  unsigned dim() const { return r + s; }
};

using SpinorVector = std::vector<ExactScalar>;
using SpinorMatrix = Matrix<ExactScalar>;

// The 2x2 building blocks in the u(eps) basis (u(+1) first).
SpinorMatrix factor_E();
SpinorMatrix factor_T();
SpinorMatrix factor_U();
SpinorMatrix factor_V();

class CliffordRep {
public:
  const Signature& signature() const { return sig_; }
  unsigned n() const { return sig_.dim(); }
  std::size_t spinor_dim() const { return gamma_.empty() ? 0 : gamma_[0].rows(); }

  // Generator matrix of e_a, 1-based a in [1, n].
  const SpinorMatrix& gamma(unsigned a) const;
  // g(e_a, e_a) as an integer (+1 or -1), 1-based.
  int metric_sign(unsigned a) const { return a <= sig_.r ? -1 : 1; }

  friend CliffordRep build_clifford_rep(Signature sig);

private:
  Signature sig_;
  std::vector<SpinorMatrix> gamma_;
};

// Builds the representation; n must be in [1, 12] (matrix size cap 2^6).
CliffordRep build_clifford_rep(Signature sig);

// Matrix of Clifford multiplication by the vector sum_a x_a e_a.
SpinorMatrix vector_matrix(const CliffordRep& rep, const std::vector<ExactScalar>& x);
// x . psi
SpinorVector vector_action(const CliffordRep& rep, const std::vector<ExactScalar>& x,
                           const SpinorVector& psi);

struct CliffordCheck {
  bool ok = true;
  std::vector<std::string> violations;  // human-readable, empty when ok
};
// Verifies G_a G_b + G_b G_a = -2 g_ab Id for all pairs.
CliffordCheck check_clifford_relations(const CliffordRep& rep);

struct HalfSpinorSplit {
  // Basis indices of the two half-spinor subspaces.  A basis vector
  // u(eps_k,...,eps_1) lies in the "+" space when the product of its eps
  // equals +1 (even number of -1 entries), otherwise in the "-" space; this
  // is the grading preserved by all even Clifford products.
  std::vector<std::size_t> plus_indices;
  std::vector<std::size_t> minus_indices;
};
// Only defined for even n (the module is irreducible for odd n).
HalfSpinorSplit half_spinor_projection(const CliffordRep& rep);

}  // namespace weylspin
