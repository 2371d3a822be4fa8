#include "doctest.h"
#include "weylspin/lie_spin.hpp"
#include "weylspin/linalg.hpp"

#include <random>

using namespace weylspin;

namespace {

const ExactScalar kOne(1);
const ExactScalar kZero(0);

Bivector random_bivector(std::mt19937_64& rng, unsigned n) {
  std::uniform_int_distribution<int> num(-3, 3);
  auto beta = zero_bivector(n);
  for (unsigned a = 1; a <= n; ++a)
    for (unsigned b = a + 1; b <= n; ++b)
      set_bivector(&beta, a, b, ExactScalar(num(rng)));
  return beta;
}

SpinorVector random_spinor(std::mt19937_64& rng, unsigned dim) {
  std::uniform_int_distribution<int> num(-3, 3);
  SpinorVector psi(dim, kZero);
  for (auto& c : psi) c = ExactScalar(Rational(num(rng)), Rational(num(rng)), Rational(0), Rational(0));
  return psi;
}

Matrix<ExactScalar> to_exact(const Matrix<Rational>& m) {
  Matrix<ExactScalar> out(m.rows(), m.cols());
  for (unsigned i = 0; i < m.rows(); ++i)
    for (unsigned j = 0; j < m.cols(); ++j) out(i, j) = ExactScalar(m(i, j));
  return out;
}

}  // namespace

TEST_CASE("wedge matrices: round trip and the so(3) bracket table") {
  std::mt19937_64 rng(5);
  for (Signature sig : {Signature{0, 4}, Signature{1, 3}, Signature{2, 2}}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto beta = random_bivector(rng, sig.dim());
      auto m = so_matrix_from_bivector(sig, beta);
      CHECK(bivector_from_so_matrix(sig, m) == beta);
    }
  }
  // [e1^e2, e2^e3] = -(e1^e3) in so(3).
  Signature so3{0, 3};
  auto b12 = zero_bivector(3), b23 = zero_bivector(3), b13 = zero_bivector(3);
  set_bivector(&b12, 1, 2, kOne);
  set_bivector(&b23, 2, 3, kOne);
  set_bivector(&b13, 1, 3, -kOne);
  CHECK(bivector_bracket(so3, b12, b23) == b13);
}

TEST_CASE("lambda is a lie algebra homomorphism") {
  std::mt19937_64 rng(17);
  for (Signature sig : {Signature{0, 3}, Signature{1, 3}, Signature{2, 2}}) {
    auto rep = build_clifford_rep(sig);
    for (int trial = 0; trial < 8; ++trial) {
      auto b1 = random_bivector(rng, sig.dim());
      auto b2 = random_bivector(rng, sig.dim());
      auto lhs = commutator(lambda_star(rep, b1), lambda_star(rep, b2));
      auto rhs = lambda_star(rep, bivector_bracket(sig, b1, b2));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("witt frame: null vectors, pairing, and spinor actions") {
  for (unsigned n : {0u, 1u, 2u, 3u}) {
    auto lrep = build_lorentz_rep(n);
    const auto& rep = lrep.clifford();
    auto id = SpinorMatrix::identity(rep.spinor_dim());
    const auto& P = lrep.phi_p();
    const auto& Q = lrep.phi_q();
    CHECK(P == vector_matrix(rep, lrep.frame().p));
    CHECK(Q == vector_matrix(rep, lrep.frame().q));
    // p, q are null and g(p, q) = 1:  PQ + QP = -2 Id.
    CHECK((P * P).is_zero());
    CHECK((Q * Q).is_zero());
    CHECK(anticommutator(P, Q) == ExactScalar(-2) * id);
    // e_- generator is hermitian, e_+ anti-hermitian.
    CHECK(dagger(rep.gamma(1)) == rep.gamma(1));
    CHECK(dagger(rep.gamma(2)) == -kOne * rep.gamma(2));

    unsigned half = rep.spinor_dim() / 2;
    std::mt19937_64 rng(31 + n);
    auto psi = random_spinor(rng, half);
    auto embedded = embed_horizontal_spinor(lrep, psi);
    // Clifford action of p kills psi x u(+1); q sends it to sqrt2 psi x u(-1).
    SpinorVector zero_half(half, kZero);
    CHECK(P.apply(embedded) == SpinorVector(rep.spinor_dim(), kZero));
    auto [qplus, qminus] = horizontal_components(lrep, Q.apply(embedded));
    CHECK(qplus == zero_half);
    for (unsigned t = 0; t < half; ++t) CHECK(qminus[t] == ExactScalar::sqrt2() * psi[t]);
    // P * Q acts as -2 on the u(+1) part and 0 on the u(-1) part.
    auto pq = P * Q;
    SpinorVector minus2(rep.spinor_dim(), kZero);
    for (unsigned t = 0; t < rep.spinor_dim(); ++t) minus2[t] = ExactScalar(-2) * embedded[t];
    CHECK(pq.apply(embedded) == minus2);
    for (unsigned t = 0; t < half; ++t) {
      SpinorVector odd(rep.spinor_dim(), kZero);
      odd[2 * t + 1] = kOne;
      CHECK(pq.apply(odd) == SpinorVector(rep.spinor_dim(), kZero));
    }
  }
}

TEST_CASE("co elements: matrix block pattern and round trip") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> num(-4, 4);
  for (unsigned n : {1u, 2u, 4u}) {
    for (int trial = 0; trial < 10; ++trial) {
      COElement e(n);
      e.b = Rational(num(rng));
      e.a = Rational(num(rng));
      for (unsigned i = 0; i < n; ++i) {
        e.X[i] = Rational(num(rng));
        e.Y[i] = Rational(num(rng));
        for (unsigned j = i + 1; j < n; ++j) {
          e.A(i, j) = Rational(num(rng));
          e.A(j, i) = -e.A(i, j);
        }
      }
      auto m = co_matrix(e);
      // Conformal antisymmetry: G m + m^T G = 2 b G for the witt-frame metric.
      Matrix<Rational> G(n + 2, n + 2);
      G(0, n + 1) = G(n + 1, 0) = Rational(1);
      for (unsigned i = 1; i <= n; ++i) G(i, i) = Rational(1);
      CHECK(G * m + m.transpose() * G == (Rational(2) * e.b) * G);
      auto back = co_from_matrix(m);
      CHECK(back.b == e.b);
      CHECK(back.a == e.a);
      CHECK(back.A == e.A);
      CHECK(back.X == e.X);
      CHECK(back.Y == e.Y);
    }
  }
}

TEST_CASE("co bivector matches the orthonormal change of frame") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> num(-3, 3);
  for (unsigned n : {1u, 3u}) {
    Signature sig{1, n + 1};
    // D: witt frame (p, e_1..e_n, q) written in the orthonormal basis
    // (e_-, e_+, e_1..e_n); C is its inverse.
    Matrix<ExactScalar> D(n + 2, n + 2), C(n + 2, n + 2);
    auto h = ExactScalar::inv_sqrt2();
    D(0, 0) = h;
    D(1, 0) = h;
    D(0, n + 1) = -h;
    D(1, n + 1) = h;
    C(0, 0) = h;
    C(n + 1, 0) = -h;
    C(0, 1) = h;
    C(n + 1, 1) = h;
    for (unsigned i = 1; i <= n; ++i) {
      D(1 + i, i) = kOne;
      C(i, 1 + i) = kOne;
    }
    REQUIRE(D * C == Matrix<ExactScalar>::identity(n + 2));
    for (int trial = 0; trial < 8; ++trial) {
      COElement e(n);
      e.a = Rational(num(rng));
      for (unsigned i = 0; i < n; ++i) {
        e.X[i] = Rational(num(rng));
        e.Y[i] = Rational(num(rng));
        for (unsigned j = i + 1; j < n; ++j) {
          e.A(i, j) = Rational(num(rng));
          e.A(j, i) = -e.A(i, j);
        }
      }
      auto expected = D * to_exact(co_matrix(e)) * C;  // b = 0, pure so part
      CHECK(so_matrix_from_bivector(sig, bivector_from_co(e)) == expected);
    }
  }
}

TEST_CASE("weighted representation: scaling family and boost eigenvalues") {
  for (unsigned n : {0u, 2u, 3u}) {
    auto lrep = build_lorentz_rep(n);
    unsigned dim = lrep.clifford().spinor_dim();
    unsigned half = dim / 2;
    std::mt19937_64 rng(41 + n);
    auto psi = random_spinor(rng, half);
    auto embedded = embed_horizontal_spinor(lrep, psi);

    for (Rational w : {Rational(0), Rational(-2), Rational(3)}) {
      // rho_w(b=1, a=w/2) kills every psi x u(+1).
      COElement scale(n);
      scale.b = Rational(1);
      scale.a = w / Rational(2);
      auto op = weighted_rep(lrep, w, scale);
      CHECK(op.op.apply(embedded) == SpinorVector(dim, kZero));

      // rho_w(b=1, a=-1) acts as w+2 on u(+1) parts and w on u(-1) parts.
      COElement boost(n);
      boost.b = Rational(1);
      boost.a = Rational(-1);
      auto op2 = weighted_rep(lrep, w, boost).op;
      for (unsigned t = 0; t < dim; ++t) {
        SpinorVector basis(dim, kZero);
        basis[t] = kOne;
        auto image = op2.apply(basis);
        ExactScalar eigen = (t % 2 == 0) ? ExactScalar(w + 2) : ExactScalar(w);
        SpinorVector expect(dim, kZero);
        expect[t] = eigen;
        CHECK(image == expect);
      }
    }
  }
}

TEST_CASE("weighted representation: horizontal action formula on u(+1)") {
  // With Y = 0, rho_w(b, a, A, X) restricted to psi x u(+1) equals
  // ((w b - 2 a) psi + sum_{i<j} A_ij G_i G_j psi) x u(+1).
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> num(-3, 3);
  for (unsigned n : {2u, 3u}) {
    auto lrep = build_lorentz_rep(n);
    const auto& hrep = lrep.horizontal_clifford();
    unsigned half = lrep.clifford().spinor_dim() / 2;
    for (int trial = 0; trial < 6; ++trial) {
      COElement e(n);
      e.b = Rational(num(rng));
      e.a = Rational(num(rng));
      for (unsigned i = 0; i < n; ++i) {
        e.X[i] = Rational(num(rng));
        for (unsigned j = i + 1; j < n; ++j) {
          e.A(i, j) = Rational(num(rng));
          e.A(j, i) = -e.A(i, j);
        }
      }
      Rational w(num(rng));
      auto psi = random_spinor(rng, half);
      auto image = weighted_rep(lrep, w, e).op.apply(embed_horizontal_spinor(lrep, psi));
      auto [plus, minus] = horizontal_components(lrep, image);
      CHECK(minus == SpinorVector(half, kZero));
      SpinorVector expect(half, kZero);
      ExactScalar c(w * e.b - Rational(2) * e.a);
      for (unsigned t = 0; t < half; ++t) expect[t] = c * psi[t];
      for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i + 1; j <= n; ++j) {
          if (e.A(i - 1, j - 1) == Rational(0)) continue;
          auto gg = hrep.gamma(i) * hrep.gamma(j);
          auto term = gg.apply(psi);
          for (unsigned t = 0; t < half; ++t) expect[t] += ExactScalar(e.A(i - 1, j - 1)) * term[t];
        }
      CHECK(plus == expect);
    }
  }
}

TEST_CASE("weighted representation: the X part raises u(-1) to u(+1)") {
  // rho(0,0,0, X = e_k, 0) maps psi x u(-1) to sqrt2 (G_k psi) x u(+1)
  // and kills psi x u(+1).
  for (unsigned n : {2u, 3u}) {
    auto lrep = build_lorentz_rep(n);
    const auto& hrep = lrep.horizontal_clifford();
    unsigned dim = lrep.clifford().spinor_dim();
    unsigned half = dim / 2;
    std::mt19937_64 rng(67 + n);
    auto psi = random_spinor(rng, half);
    for (unsigned k = 1; k <= n; ++k) {
      COElement e(n);
      e.X[k - 1] = Rational(1);
      auto op = weighted_rep(lrep, Rational(0), e).op;
      // Kills u(+1):
      CHECK(op.apply(embed_horizontal_spinor(lrep, psi)) == SpinorVector(dim, kZero));
      // Raises u(-1):
      SpinorVector from_minus(dim, kZero);
      for (unsigned t = 0; t < half; ++t) from_minus[2 * t + 1] = psi[t];
      auto [plus, minus] = horizontal_components(lrep, op.apply(from_minus));
      CHECK(minus == SpinorVector(half, kZero));
      auto gk = hrep.gamma(k).apply(psi);
      for (unsigned t = 0; t < half; ++t) CHECK(plus[t] == ExactScalar::sqrt2() * gk[t]);
    }
  }
}
