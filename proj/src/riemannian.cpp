#include "weylspin/riemannian.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "weylspin/linalg.hpp"

namespace weylspin::riemannian {

namespace {

using RatMatrix = Matrix<Rational>;

std::vector<Rational> flatten(const RatMatrix& m) {
  std::vector<Rational> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

// --- complex and quaternionic realifications -------------------------------

// 2x2 block of z = a + b i as a real matrix acting on (re, im).
void put_complex_block(RatMatrix* out, unsigned row, unsigned col, const Rational& a,
                       const Rational& b) {
  (*out)(2 * row, 2 * col) += a;
  (*out)(2 * row + 1, 2 * col + 1) += a;
  (*out)(2 * row, 2 * col + 1) += -b;
  (*out)(2 * row + 1, 2 * col) += b;
}

// 4x4 block of left multiplication by q = a + b i + c j + d k on (1, i, j, k).
void put_quaternion_block(RatMatrix* out, unsigned row, unsigned col, const Rational& a,
                          const Rational& b, const Rational& c, const Rational& d) {
  const std::array<std::array<Rational, 4>, 4> l = {{{a, -b, -c, -d},
                                                     {b, a, -d, c},
                                                     {c, d, a, -b},
                                                     {d, -c, b, a}}};
  for (unsigned r = 0; r < 4; ++r)
    for (unsigned s = 0; s < 4; ++s) (*out)(4 * row + r, 4 * col + s) += l[r][s];
}

std::vector<RatMatrix> su_generators(unsigned m) {
  if (m == 0) throw std::invalid_argument("su(0)");
  const unsigned n = 2 * m;
  std::vector<RatMatrix> gens;
  const Rational one(1);
  for (unsigned j = 0; j < m; ++j) {
    for (unsigned k = j + 1; k < m; ++k) {
      // E_jk - E_kj  (real antisymmetric)
      RatMatrix g1(n, n);
      put_complex_block(&g1, j, k, one, Rational(0));
      put_complex_block(&g1, k, j, -one, Rational(0));
      gens.push_back(std::move(g1));
      // i (E_jk + E_kj)
      RatMatrix g2(n, n);
      put_complex_block(&g2, j, k, Rational(0), one);
      put_complex_block(&g2, k, j, Rational(0), one);
      gens.push_back(std::move(g2));
    }
  }
  for (unsigned j = 0; j + 1 < m; ++j) {
    // i (E_jj - E_{j+1,j+1})  (traceless diagonal)
    RatMatrix g(n, n);
    put_complex_block(&g, j, j, Rational(0), one);
    put_complex_block(&g, j + 1, j + 1, Rational(0), -one);
    gens.push_back(std::move(g));
  }
  return gens;
}

std::vector<RatMatrix> sp_generators(unsigned m) {
  if (m == 0) throw std::invalid_argument("sp(0)");
  const unsigned n = 4 * m;
  std::vector<RatMatrix> gens;
  const Rational one(1), zero(0);
  auto unit = [&](unsigned which) {
    std::array<Rational, 4> q{zero, zero, zero, zero};
    q[which] = one;
    return q;
  };
  for (unsigned j = 0; j < m; ++j) {
    for (unsigned k = j + 1; k < m; ++k) {
      // E_jk - E_kj with a real entry
      RatMatrix g(n, n);
      put_quaternion_block(&g, j, k, one, zero, zero, zero);
      put_quaternion_block(&g, k, j, -one, zero, zero, zero);
      gens.push_back(std::move(g));
      // q (E_jk + E_kj) for q in {i, j, k}
      for (unsigned w = 1; w < 4; ++w) {
        auto q = unit(w);
        RatMatrix gq(n, n);
        put_quaternion_block(&gq, j, k, q[0], q[1], q[2], q[3]);
        put_quaternion_block(&gq, k, j, q[0], q[1], q[2], q[3]);
        gens.push_back(std::move(gq));
      }
    }
  }
  for (unsigned j = 0; j < m; ++j) {
    for (unsigned w = 1; w < 4; ++w) {
      auto q = unit(w);
      RatMatrix g(n, n);
      put_quaternion_block(&g, j, j, q[0], q[1], q[2], q[3]);
      gens.push_back(std::move(g));
    }
  }
  return gens;
}

// --- octonions --------------------------------------------------------------

struct OctonionTable {
  // mult[i][j] = {index, sign} with e_i e_j = sign * e_index
  std::array<std::array<std::pair<unsigned, int>, 8>, 8> mult{};

  OctonionTable() {
    for (unsigned j = 0; j < 8; ++j) {
      mult[0][j] = {j, 1};
      mult[j][0] = {j, 1};
    }
    for (unsigned i = 1; i < 8; ++i) mult[i][i] = {0, -1};
    struct Line {
      unsigned a, b, c;
      int s;
    };
    const Line lines[] = {{1, 2, 3, 1}, {1, 4, 5, 1}, {1, 6, 7, 1}, {2, 4, 6, 1},
                          {2, 5, 7, -1}, {3, 4, 7, -1}, {3, 5, 6, -1}};
    for (const Line& l : lines) {
      mult[l.a][l.b] = {l.c, l.s};
      mult[l.b][l.c] = {l.a, l.s};
      mult[l.c][l.a] = {l.b, l.s};
      mult[l.b][l.a] = {l.c, -l.s};
      mult[l.c][l.b] = {l.a, -l.s};
      mult[l.a][l.c] = {l.b, -l.s};
    }
  }
};

const OctonionTable& octonions() {
  static const OctonionTable table;
  return table;
}

std::vector<RatMatrix> spin7_generators() {
  std::vector<RatMatrix> gens;
  for (unsigned i = 1; i < 8; ++i)
    for (unsigned j = i + 1; j < 8; ++j)
      gens.push_back(octonion_right_mult(i) * octonion_right_mult(j));
  return gens;
}

std::vector<RatMatrix> g2_generators() {
  // so(7) basis indexed by pairs (a, b), a < b, as E_ab - E_ba on R^7
  // (coordinates 0..6 here correspond to the imaginary units e_1..e_7).
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned a = 0; a < 7; ++a)
    for (unsigned b = a + 1; b < 7; ++b) pairs.push_back({a, b});

  // Standard 3-form from the octonion table: phi(x, y, z) = <x y, z>.
  auto phi = [&](unsigned a, unsigned b, unsigned c) -> int {
    auto [idx, s] = octonions().mult[a + 1][b + 1];
    return idx == c + 1 ? s : 0;
  };

  // Action of A in so(7) on phi: (A.phi)_{ijk} =
  //   -sum_l (A_{li} phi_{ljk} + A_{lj} phi_{ilk} + A_{lk} phi_{ijl}).
  // For A = E_ab - E_ba:  A_{li} = delta_{la} delta_{ib} - delta_{lb} delta_{ia}.
  std::vector<std::array<unsigned, 3>> triples;
  for (unsigned i = 0; i < 7; ++i)
    for (unsigned j = i + 1; j < 7; ++j)
      for (unsigned k = j + 1; k < 7; ++k) triples.push_back({i, j, k});

  Matrix<Rational> action(triples.size(), pairs.size());
  for (std::size_t col = 0; col < pairs.size(); ++col) {
    auto [a, b] = pairs[col];
    for (std::size_t row = 0; row < triples.size(); ++row) {
      auto [i, j, k] = triples[row];
      long v = 0;
      // slot 1: l runs over {a, b}
      if (i == b) v -= phi(a, j, k);
      if (i == a) v += phi(b, j, k);
      // slot 2
      if (j == b) v -= phi(i, a, k);
      if (j == a) v += phi(i, b, k);
      // slot 3
      if (k == b) v -= phi(i, j, a);
      if (k == a) v += phi(i, j, b);
      action(row, col) = Rational(v);
    }
  }

  auto null_combos = kernel_basis(action);
  std::vector<RatMatrix> gens;
  for (const auto& combo : null_combos) {
    RatMatrix g(7, 7);
    for (std::size_t col = 0; col < pairs.size(); ++col) {
      if (combo[col] == 0) continue;
      auto [a, b] = pairs[col];
      g(a, b) += combo[col];
      g(b, a) -= combo[col];
    }
    gens.push_back(std::move(g));
  }
  return gens;
}

void embed_block(const RatMatrix& small, unsigned offset, RatMatrix* big) {
  for (std::size_t i = 0; i < small.rows(); ++i)
    for (std::size_t j = 0; j < small.cols(); ++j)
      if (small(i, j) != 0) (*big)(offset + i, offset + j) = small(i, j);
}

}  // namespace

RiemannianHolonomy RiemannianHolonomy::trivial(unsigned n0) {
  RiemannianHolonomy h;
  h.kind = HolonomyKind::kTrivial;
  h.n = n0;
  return h;
}

RiemannianHolonomy RiemannianHolonomy::full_so(unsigned n) {
  RiemannianHolonomy h;
  h.kind = HolonomyKind::kFullSO;
  h.n = n;
  return h;
}

RiemannianHolonomy RiemannianHolonomy::su(unsigned m) {
  RiemannianHolonomy h;
  h.kind = HolonomyKind::kSU;
  h.n = 2 * m;
  h.m = m;
  return h;
}

RiemannianHolonomy RiemannianHolonomy::sp(unsigned m) {
  RiemannianHolonomy h;
  h.kind = HolonomyKind::kSp;
  h.n = 4 * m;
  h.m = m;
  return h;
}

RiemannianHolonomy RiemannianHolonomy::g2() {
  RiemannianHolonomy h;
  h.kind = HolonomyKind::kG2;
  h.n = 7;
  return h;
}

RiemannianHolonomy RiemannianHolonomy::spin7() {
  RiemannianHolonomy h;
  h.kind = HolonomyKind::kSpin7;
  h.n = 8;
  return h;
}

RiemannianHolonomy RiemannianHolonomy::direct_sum(std::vector<RiemannianHolonomy> parts) {
  RiemannianHolonomy h;
  h.kind = HolonomyKind::kSum;
  h.summands = std::move(parts);
  for (const auto& p : h.summands) h.n += p.n;
  return h;
}

unsigned RiemannianHolonomy::dimension() const {
  switch (kind) {
    case HolonomyKind::kTrivial:
      return 0;
    case HolonomyKind::kFullSO:
      return n * (n - 1) / 2;
    case HolonomyKind::kSU:
      return m * m - 1;
    case HolonomyKind::kSp:
      return m * (2 * m + 1);
    case HolonomyKind::kG2:
      return 14;
    case HolonomyKind::kSpin7:
      return 21;
    case HolonomyKind::kSum: {
      unsigned d = 0;
      for (const auto& p : summands) d += p.dimension();
      return d;
    }
  }
  return 0;
}

std::string RiemannianHolonomy::str() const {
  switch (kind) {
    case HolonomyKind::kTrivial:
      return "trivial(" + std::to_string(n) + ")";
    case HolonomyKind::kFullSO:
      return "so(" + std::to_string(n) + ")";
    case HolonomyKind::kSU:
      return "su(" + std::to_string(m) + ")";
    case HolonomyKind::kSp:
      return "sp(" + std::to_string(m) + ")";
    case HolonomyKind::kG2:
      return "g2";
    case HolonomyKind::kSpin7:
      return "spin7";
    case HolonomyKind::kSum: {
      std::ostringstream os;
      for (std::size_t i = 0; i < summands.size(); ++i) {
        if (i) os << "+";
        os << summands[i].str();
      }
      return os.str();
    }
  }
  return "?";
}

std::vector<Matrix<Rational>> riemannian_generators(const RiemannianHolonomy& desc) {
  switch (desc.kind) {
    case HolonomyKind::kTrivial:
      return {};
    case HolonomyKind::kFullSO: {
      std::vector<RatMatrix> gens;
      for (unsigned a = 0; a < desc.n; ++a)
        for (unsigned b = a + 1; b < desc.n; ++b) {
          RatMatrix g(desc.n, desc.n);
          g(a, b) = Rational(1);
          g(b, a) = Rational(-1);
          gens.push_back(std::move(g));
        }
      return gens;
    }
    case HolonomyKind::kSU:
      return su_generators(desc.m);
    case HolonomyKind::kSp:
      return sp_generators(desc.m);
    case HolonomyKind::kG2:
      return g2_generators();
    case HolonomyKind::kSpin7:
      return spin7_generators();
    case HolonomyKind::kSum: {
      if (desc.summands.empty()) throw std::invalid_argument("empty direct sum");
      std::vector<RatMatrix> gens;
      unsigned offset = 0;
      for (const auto& part : desc.summands) {
        if (part.n == 0 && part.kind != HolonomyKind::kTrivial)
          throw std::invalid_argument("zero-dimensional summand block");
        for (const auto& small : riemannian_generators(part)) {
          RatMatrix big(desc.n, desc.n);
          embed_block(small, offset, &big);
          gens.push_back(std::move(big));
        }
        offset += part.n;
      }
      return gens;
    }
  }
  throw std::invalid_argument("malformed holonomy descriptor");
}

unsigned center_dimension(const std::vector<Matrix<Rational>>& gens) {
  if (gens.empty()) return 0;
  const std::size_t n = gens[0].rows();
  // Independent subset spanning the algebra.
  std::vector<RatMatrix> basis;
  SpanAccumulator<Rational> acc(n * n);
  for (const auto& g : gens)
    if (acc.insert(flatten(g))) basis.push_back(g);
  const std::size_t d = basis.size();
  // X = sum x_k B_k with [X, B_l] = 0 for all l.
  Matrix<Rational> sys(d * n * n, d);
  for (std::size_t l = 0; l < d; ++l) {
    for (std::size_t k = 0; k < d; ++k) {
      RatMatrix c = commutator(basis[k], basis[l]);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sys(l * n * n + i * n + j, k) = c(i, j);
    }
  }
  return static_cast<unsigned>(kernel_basis(sys).size());
}

std::pair<unsigned, int> octonion_unit_product(unsigned i, unsigned j) {
  if (i > 7 || j > 7) throw std::out_of_range("octonion unit index");
  return octonions().mult[i][j];
}

Matrix<Rational> octonion_right_mult(unsigned i) {
  if (i == 0 || i > 7) throw std::out_of_range("octonion unit index");
  Matrix<Rational> r(8, 8);
  for (unsigned k = 0; k < 8; ++k) {
    auto [idx, s] = octonions().mult[k][i];
    r(idx, k) = Rational(s);
  }
  return r;
}

}  // namespace weylspin::riemannian
