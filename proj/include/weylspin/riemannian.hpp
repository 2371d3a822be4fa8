#pragma once
// Generator sets for the Riemannian holonomy algebras used as building
// blocks: trivial, so(n), su(m) in so(2m), sp(m) in so(4m), g2 in so(7),
// spin7 in so(8), and direct sums of these placed in consecutive blocks.
//
// All generators are exact antisymmetric n x n rational matrices.  su(m)
// realifies anti-Hermitian traceless complex matrices with interleaved
// coordinates (z_k = x_{2k-1} + i x_{2k}); sp(m) realifies quaternionic
// anti-Hermitian matrices; g2 is computed as the stabilizer of the standard
// octonionic 3-form inside so(7); spin7 is spanned by the composed right
// multiplications R_i R_j on the octonions.

#include <string>
#include <utility>
#include <vector>

#include "weylspin/exact_scalar.hpp"
#include "weylspin/matrix.hpp"

namespace weylspin::riemannian {

enum class HolonomyKind { kTrivial, kFullSO, kSU, kSp, kG2, kSpin7, kSum };

struct RiemannianHolonomy {
  HolonomyKind kind = HolonomyKind::kTrivial;
  unsigned n = 0;  // ambient orthogonal dimension of this node
  unsigned m = 0;  // rank parameter for su/sp
  std::vector<RiemannianHolonomy> summands;  // kSum only; consecutive blocks

  static RiemannianHolonomy trivial(unsigned n0);
  static RiemannianHolonomy full_so(unsigned n);
  static RiemannianHolonomy su(unsigned m);  // acts on R^{2m}
  static RiemannianHolonomy sp(unsigned m);  // acts on R^{4m}
  static RiemannianHolonomy g2();            // acts on R^7
  static RiemannianHolonomy spin7();         // acts on R^8
  static RiemannianHolonomy direct_sum(std::vector<RiemannianHolonomy> parts);

  // Lie algebra dimension of the descriptor (sum over summands).
  unsigned dimension() const;
  std::string str() const;
};

// Spanning set of antisymmetric n x n matrices; its span has dimension
// exactly RiemannianHolonomy::dimension().  Throws std::invalid_argument on
// a malformed descriptor (zero blocks inside sums, nested sums are fine).
std::vector<Matrix<Rational>> riemannian_generators(const RiemannianHolonomy& desc);

// Dimension of the center of the span of the given matrices (elements of the
// span commuting with every generator).
unsigned center_dimension(const std::vector<Matrix<Rational>>& gens);

// Octonion arithmetic on the basis 1 = e_0, e_1, ..., e_7 used by the g2 and
// spin7 constructions; exposed for direct testing.
// Returns (k, s) with e_i * e_j = s * e_k.
std::pair<unsigned, int> octonion_unit_product(unsigned i, unsigned j);
// 8 x 8 matrix of x -> x * e_i for i in 1..7; antisymmetric.
Matrix<Rational> octonion_right_mult(unsigned i);

}  // namespace weylspin::riemannian
