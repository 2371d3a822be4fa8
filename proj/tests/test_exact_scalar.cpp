#include "doctest.h"
#include "weylspin/exact_scalar.hpp"

#include <random>

using namespace weylspin;

namespace {
ExactScalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  auto q = [&] {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
  };
  return {q(), q(), q(), q()};
}
}  // namespace

TEST_CASE("field axioms and basic identities") {
  ExactScalar i = ExactScalar::i();
  ExactScalar s = ExactScalar::sqrt2();
  CHECK(i * i == ExactScalar(-1));
  CHECK(s * s == ExactScalar(2));
  CHECK(ExactScalar::inv_sqrt2() * s == ExactScalar(1));
  CHECK((i * s) * (i * s) == ExactScalar(-2));
  CHECK(i.conj() == -i);
  CHECK(s.conj() == s);
  CHECK((i * s).conj() == -(i * s));
}

TEST_CASE("inverses over random elements") {
  std::mt19937_64 rng(42);
  int tested = 0;
  while (tested < 200) {
    ExactScalar v = random_scalar(rng);
    if (v.is_zero()) continue;
    ++tested;
    CHECK(v * v.inverse() == ExactScalar(1));
    CHECK((ExactScalar(1) / v) * v == ExactScalar(1));
  }
  CHECK_THROWS_AS(ExactScalar(0).inverse(), std::domain_error);
}

TEST_CASE("norm squared is real and multiplicative") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 100; ++k) {
    ExactScalar v = random_scalar(rng), w = random_scalar(rng);
    CHECK(v.norm_squared().is_real());
    CHECK((v * w).norm_squared() == v.norm_squared() * w.norm_squared());
    if (!v.is_zero()) CHECK(v.norm_squared().sign_real() == 1);
  }
}

TEST_CASE("exact sign of real values") {
  // 3 - 2*sqrt2 > 0 (since 9 > 8) while 2 - 2*sqrt2 < 0.
  CHECK(ExactScalar(3, 0, -2, 0).sign_real() == 1);
  CHECK(ExactScalar(2, 0, -2, 0).sign_real() == -1);
  CHECK(ExactScalar(0).sign_real() == 0);
  CHECK(ExactScalar(-1, 0, 1, 0).sign_real() == 1);   // sqrt2 > 1
  CHECK(ExactScalar(-3, 0, 2, 0).sign_real() == -1);  // 2 sqrt2 < 3
  CHECK_THROWS_AS(ExactScalar::i().sign_real(), std::domain_error);
}

TEST_CASE("square roots inside the field") {
  ExactScalar out;
  REQUIRE(sqrt_in_field(Rational(9, 4), &out));
  CHECK(out == ExactScalar(Rational(3, 2)));
  REQUIRE(sqrt_in_field(Rational(2), &out));
  CHECK(out == ExactScalar::sqrt2());
  REQUIRE(sqrt_in_field(Rational(8), &out));  // 8 = 2 * 2^2
  CHECK(out * out == ExactScalar(8));
  CHECK_FALSE(sqrt_in_field(Rational(3), &out));
  CHECK_FALSE(sqrt_in_field(Rational(-4), &out));
}
