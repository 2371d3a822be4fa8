#include <set>
#include <vector>

#include "doctest.h"
#include "weylspin/catalog.hpp"
#include "weylspin/linalg.hpp"

using weylspin::COElement;
using weylspin::co_matrix;
using weylspin::Matrix;
using weylspin::Rational;
using weylspin::SpanAccumulator;
using weylspin::riemannian::RiemannianHolonomy;
using namespace weylspin::catalog;

namespace {

std::vector<Rational> flatten(const Matrix<Rational>& m) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

unsigned matrix_span_dim(const std::vector<Matrix<Rational>>& mats) {
  if (mats.empty()) return 0;
  SpanAccumulator<Rational> acc(mats[0].rows() * mats[0].cols());
  for (const auto& m : mats) acc.insert(flatten(m));
  return static_cast<unsigned>(acc.rank());
}

std::vector<Matrix<Rational>> co_matrices(const WeylHolonomyVariant& v) {
  std::vector<Matrix<Rational>> mats;
  for (const auto& e : weyl_holonomy_generators(v)) mats.push_back(co_matrix(e));
  return mats;
}

bool bracket_closed(const std::vector<Matrix<Rational>>& mats) {
  SpanAccumulator<Rational> acc(mats[0].rows() * mats[0].cols());
  for (const auto& m : mats) acc.insert(flatten(m));
  for (const auto& a : mats)
    for (const auto& b : mats)
      if (!acc.contains(flatten(commutator(a, b)))) return false;
  return true;
}

}  // namespace

TEST_CASE("catalog generator examples match the defining tuples") {
  // g^{w,h} with trivial h, n = 2: one scaling element plus two translations.
  auto v = WeylHolonomyVariant::spinor_w(2, RiemannianHolonomy::trivial(2), Rational(3));
  auto gens = weyl_holonomy_generators(v);
  REQUIRE(gens.size() == 3);
  CHECK(gens[0].b == 1);
  CHECK(gens[0].a == Rational(3, 2));
  CHECK(gens[0].A.is_zero());
  CHECK(gens[1].X[0] == 1);
  CHECK(gens[1].X[1] == 0);
  CHECK(gens[2].X[1] == 1);
  for (const auto& g : gens)
    for (const auto& y : g.Y) CHECK(y == 0);

  // g^k with trivial k in so(2), n = 3: (1,-1,0,0) plus translations e_1, e_2.
  auto vk = WeylHolonomyVariant::spinor_k(3, RiemannianHolonomy::trivial(2));
  auto gk = weyl_holonomy_generators(vk);
  REQUIRE(gk.size() == 3);
  CHECK(gk[0].b == 1);
  CHECK(gk[0].a == -1);
  CHECK(gk[1].X[0] == 1);
  CHECK(gk[2].X[1] == 1);
  CHECK(gk[1].X[2] == 0);
  CHECK(gk[2].X[2] == 0);
  CHECK(vk.weight() == -2);

  // g^{R,2,h} contains the pure scaling (1,0,0,0).
  auto v2 = WeylHolonomyVariant::r2(2, RiemannianHolonomy::full_so(2));
  auto g2 = weyl_holonomy_generators(v2);
  CHECK(g2[0].b == 1);
  CHECK(g2[0].a == 0);
  CHECK(g2[0].A.is_zero());
}

TEST_CASE("spans have the predicted Lie algebra dimensions and close") {
  auto check = [](const WeylHolonomyVariant& v) {
    CAPTURE(v.name());
    auto mats = co_matrices(v);
    CHECK(matrix_span_dim(mats) == v.dimension());
    CHECK(mats.size() == v.dimension());  // generator lists are independent
    CHECK(bracket_closed(mats));
  };
  check(WeylHolonomyVariant::decomposable1(3, -1));
  check(WeylHolonomyVariant::decomposable1(3, 0));
  check(WeylHolonomyVariant::decomposable1(3, 1));
  check(WeylHolonomyVariant::decomposable1(4, 2));
  check(WeylHolonomyVariant::decomposable2(3, 2, RiemannianHolonomy::full_so(2)));
  check(WeylHolonomyVariant::decomposable2(3, 0, RiemannianHolonomy::trivial(0)));
  check(WeylHolonomyVariant::decomposable3(4, 2, RiemannianHolonomy::trivial(2)));
  check(WeylHolonomyVariant::r1(3, RiemannianHolonomy::full_so(3)));
  check(WeylHolonomyVariant::r2(3, RiemannianHolonomy::full_so(3)));
  check(WeylHolonomyVariant::r3(2, RiemannianHolonomy::full_so(2), {Rational(1)}));
  check(WeylHolonomyVariant::beta_theta1(2, RiemannianHolonomy::trivial(2), Rational(1), {}));
  check(WeylHolonomyVariant::beta_theta1(2, RiemannianHolonomy::full_so(2), Rational(0),
                                         {Rational(1)}));
  check(WeylHolonomyVariant::theta2(2, RiemannianHolonomy::full_so(2), {Rational(1)}));
  check(WeylHolonomyVariant::theta3(2, RiemannianHolonomy::full_so(2), {Rational(1)},
                                    {Rational(2)}));
  check(WeylHolonomyVariant::spinor_w(4, RiemannianHolonomy::su(2), Rational(0)));
  check(WeylHolonomyVariant::spinor_w(4, RiemannianHolonomy::su(2), Rational(-2)));
  check(WeylHolonomyVariant::spinor_k(4, RiemannianHolonomy::trivial(3)));
  check(WeylHolonomyVariant::spinor_k(5, RiemannianHolonomy::su(2)));
}

TEST_CASE("dimension arithmetic on sample variants") {
  CHECK(WeylHolonomyVariant::decomposable1(3, -1).dimension() == 7);   // 1 + so(4)
  CHECK(WeylHolonomyVariant::decomposable1(3, 1).dimension() == 5);    // 1 + so(1,2) + so(2)
  CHECK(WeylHolonomyVariant::r1(3, RiemannianHolonomy::full_so(3)).dimension() == 8);
  CHECK(WeylHolonomyVariant::spinor_w(4, RiemannianHolonomy::su(2), Rational(0)).dimension() ==
        8);
  CHECK(WeylHolonomyVariant::spinor_k(4, RiemannianHolonomy::trivial(3)).dimension() == 4);
}

TEST_CASE("decomposable families preserve their splitting") {
  // k = -1: every generator annihilates or scales the timelike direction
  // p - q = (1, 0, ..., 0, -1) in the frame (p, e_1..e_n, q).
  auto v = WeylHolonomyVariant::decomposable1(3, -1);
  for (const auto& m : co_matrices(v)) {
    const std::size_t d = m.rows();
    std::vector<Rational> image(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i) image[i] = m(i, 0) - m(i, d - 1);
    // image must be proportional to (1, 0, ..., 0, -1)
    CHECK(image[0] == -image[d - 1]);
    for (std::size_t i = 1; i + 1 < d; ++i) CHECK(image[i] == 0);
  }
  // k >= 0: matrices are block diagonal between {p, e_1..e_k, q} and the rest.
  auto v2 = WeylHolonomyVariant::decomposable1(4, 1);
  for (const auto& m : co_matrices(v2)) {
    const std::size_t d = m.rows();            // 6: indices 0,1 | 2,3 | 5 split
    const std::vector<std::size_t> lor = {0, 1, d - 1};
    const std::vector<std::size_t> rest = {2, 3, 4};
    for (std::size_t i : lor)
      for (std::size_t j : rest) {
        CHECK(m(i, j) == 0);
        CHECK(m(j, i) == 0);
      }
  }
}

TEST_CASE("null line families keep Y = 0 and preserve the p-line") {
  for (const auto& v : standard_catalog(4)) {
    if (v.tag == VariantTag::kDecomposable1) continue;
    for (const auto& g : weyl_holonomy_generators(v))
      for (const auto& y : g.Y) CHECK(y == 0);
    for (const auto& m : co_matrices(v)) {
      // column of p has no entries outside row 0
      for (std::size_t i = 1; i < m.rows(); ++i) CHECK(m(i, 0) == 0);
    }
  }
}

TEST_CASE("functional constraints are enforced") {
  // so(3) is its own derived algebra: no nonzero theta is admissible.
  CHECK_THROWS_AS(weyl_holonomy_generators(WeylHolonomyVariant::theta2(
                      3, RiemannianHolonomy::full_so(3), {Rational(1), Rational(0), Rational(0)})),
                  std::invalid_argument);
  // phi must be nonzero for the phi-families.
  CHECK_THROWS_AS(weyl_holonomy_generators(WeylHolonomyVariant::r3(
                      2, RiemannianHolonomy::full_so(2), {Rational(0)})),
                  std::invalid_argument);
  // beta and theta cannot both vanish.
  CHECK_THROWS_AS(weyl_holonomy_generators(WeylHolonomyVariant::beta_theta1(
                      2, RiemannianHolonomy::full_so(2), Rational(0), {Rational(0)})),
                  std::invalid_argument);
  // wrong functional length
  CHECK_THROWS_AS(weyl_holonomy_generators(WeylHolonomyVariant::theta2(
                      2, RiemannianHolonomy::full_so(2), {Rational(1), Rational(1)})),
                  std::invalid_argument);
  // block size mismatches caught by the factories
  CHECK_THROWS_AS(WeylHolonomyVariant::spinor_w(3, RiemannianHolonomy::su(2), Rational(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(WeylHolonomyVariant::spinor_k(3, RiemannianHolonomy::trivial(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(WeylHolonomyVariant::decomposable1(3, 3), std::invalid_argument);

  // vanishes_on_derived: abelian algebras accept anything, so(3) only zero.
  auto so2 = weylspin::riemannian::riemannian_generators(RiemannianHolonomy::full_so(2));
  CHECK(vanishes_on_derived(so2, {Rational(5)}));
  auto so3 = weylspin::riemannian::riemannian_generators(RiemannianHolonomy::full_so(3));
  CHECK(vanishes_on_derived(so3, {Rational(0), Rational(0), Rational(0)}));
  CHECK_FALSE(vanishes_on_derived(so3, {Rational(0), Rational(1), Rational(0)}));
}

TEST_CASE("dimension formula and parity conventions") {
  auto f = formula_spinor_dimension(2, 4, VariantTag::kSpinorW);
  CHECK(f.predicted == 2);
  CHECK(f.alternate == 2);
  CHECK_FALSE(f.rules_disagree);

  // g^k at n = 3 (odd): single copy under the consistent rule.
  auto f3 = formula_spinor_dimension(2, 3, VariantTag::kSpinorK);
  CHECK(f3.predicted == 2);
  CHECK(f3.alternate == 4);
  CHECK(f3.rules_disagree);

  // g^k at n = 4 (even): doubled under the consistent rule.
  auto f4 = formula_spinor_dimension(2, 4, VariantTag::kSpinorK);
  CHECK(f4.predicted == 4);
  CHECK(f4.alternate == 2);
  CHECK(f4.rules_disagree);

  // zero annihilator: both rules agree on zero
  auto f0 = formula_spinor_dimension(0, 4, VariantTag::kSpinorK);
  CHECK(f0.predicted == 0);
  CHECK_FALSE(f0.rules_disagree);

  // non-spinor families predict zero
  CHECK(formula_spinor_dimension(7, 4, VariantTag::kR1).predicted == 0);
}

TEST_CASE("standard catalog is well formed and deterministic") {
  auto cat = standard_catalog(5);
  CHECK_FALSE(cat.empty());
  std::set<std::string> names;
  for (const auto& v : cat) {
    CAPTURE(v.name());
    CHECK(names.insert(v.name()).second);  // unique names
    auto gens = weyl_holonomy_generators(v);
    CHECK(gens.size() == v.dimension());
  }
  // the criterion families are present
  CHECK(names.count("g^{w,h}[n=4,h=su(2),w=0]") == 1);
  CHECK(names.count("g^k[n=3,k=trivial(2)]") == 1);
  CHECK(names.count("g^k[n=4,k=trivial(3)]") == 1);
  // deterministic: same call gives same list
  auto cat2 = standard_catalog(5);
  REQUIRE(cat.size() == cat2.size());
  for (std::size_t i = 0; i < cat.size(); ++i) CHECK(cat[i].name() == cat2[i].name());
}
