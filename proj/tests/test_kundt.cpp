#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "weylspin/kundt.hpp"
#include "weylspin/linalg.hpp"

using namespace weylspin;
using namespace weylspin::kundt;
using symdiff::CoordChart;
using symdiff::parse_expr;

namespace {

DiffExpr pe(const std::string& text, unsigned n) { return parse_expr(text, CoordChart(n)); }

KundtStructure sample_n2() {
  return make_flat_walker(2, pe("x1", 2), pe("2*x1*v + x1^2 - x2^2", 2), Rational(0),
                          default_basepoint(2));
}

}  // namespace

TEST_CASE("construction validates the structure") {
  CHECK_NOTHROW(sample_n2());

  // v-dependent h rejected
  Matrix<DiffExpr> hv(1, 1);
  hv(0, 0) = pe("1 + v", 1);
  CHECK_THROWS_AS(make_walker(1, hv, DiffExpr(0), DiffExpr(0), Rational(0),
                              default_basepoint(1)),
                  std::invalid_argument);

  // asymmetric h rejected
  Matrix<DiffExpr> ha(2, 2);
  ha(0, 0) = DiffExpr(1);
  ha(1, 1) = DiffExpr(1);
  ha(0, 1) = pe("x1", 2);
  CHECK_THROWS_AS(make_walker(2, ha, DiffExpr(0), DiffExpr(0), Rational(0),
                              default_basepoint(2)),
                  std::invalid_argument);

  // not positive definite at the basepoint
  Matrix<DiffExpr> hneg(2, 2);
  hneg(0, 0) = DiffExpr(1);
  hneg(1, 1) = DiffExpr(-1);
  CHECK_THROWS_AS(make_walker(2, hneg, DiffExpr(0), DiffExpr(0), Rational(0),
                              default_basepoint(2)),
                  std::invalid_argument);
  Matrix<DiffExpr> hsemi(2, 2);  // [[1,2],[2,1]] has negative determinant
  hsemi(0, 0) = DiffExpr(1);
  hsemi(0, 1) = DiffExpr(2);
  hsemi(1, 0) = DiffExpr(2);
  hsemi(1, 1) = DiffExpr(1);
  CHECK_THROWS_AS(make_walker(2, hsemi, DiffExpr(0), DiffExpr(0), Rational(0),
                              default_basepoint(2)),
                  std::invalid_argument);

  // pole at the basepoint
  CHECK_THROWS_AS(make_flat_walker(1, pe("1/u", 1), DiffExpr(0), Rational(0),
                                   default_basepoint(1)),
                  symdiff::PoleError);
  // moving the basepoint off the pole fixes it
  auto bp = default_basepoint(1);
  bp[2] = 1;
  CHECK_NOTHROW(make_flat_walker(1, pe("1/u", 1), DiffExpr(0), Rational(0), bp));

  // positive definite only at the basepoint is acceptable
  Matrix<DiffExpr> hx(1, 1);
  hx(0, 0) = pe("x1", 1);  // degenerates at x1 = 0, fine at x1 = 1
  CHECK_NOTHROW(make_walker(1, hx, DiffExpr(0), DiffExpr(0), Rational(0),
                            default_basepoint(1)));
}

TEST_CASE("walker detection and f accessor") {
  auto s = sample_n2();
  CHECK(s.is_walker());
  CHECK(s.f() == pe("x1", 2));

  // general omega is not walker
  std::vector<DiffExpr> omega(4);
  omega[1] = DiffExpr(1);  // dx^1 component
  Matrix<DiffExpr> h = Matrix<DiffExpr>(2, 2);
  h(0, 0) = DiffExpr(1);
  h(1, 1) = DiffExpr(1);
  auto gen = make_kundt(2, h, std::vector<DiffExpr>(2), omega, DiffExpr(0), Rational(0),
                        default_basepoint(2));
  CHECK_FALSE(gen.is_walker());
  CHECK_THROWS_AS(gen.f(), std::logic_error);

  // nonzero A is not walker either
  std::vector<DiffExpr> a(2);
  a[0] = pe("x2", 2);
  auto withA = make_kundt(2, h, a, std::vector<DiffExpr>(4), DiffExpr(0), Rational(0),
                          default_basepoint(2));
  CHECK_FALSE(withA.is_walker());
}

TEST_CASE("metric matrix and exact inverse") {
  // non-diagonal h plus nonzero A exercises the block inverse
  Matrix<DiffExpr> h(2, 2);
  h(0, 0) = pe("2", 2);
  h(0, 1) = pe("u", 2);
  h(1, 0) = pe("u", 2);
  h(1, 1) = pe("1 + x1^2", 2);
  std::vector<DiffExpr> a(2);
  a[0] = pe("x2", 2);
  a[1] = pe("v", 2);
  std::vector<DiffExpr> omega(4);
  omega[3] = pe("x1", 2);
  auto s = make_kundt(2, h, a, omega, pe("v^2 + u", 2), Rational(1), default_basepoint(2));

  auto g = s.metric_matrix();
  CHECK(g(0, 3) == DiffExpr(1));
  CHECK(g(1, 3) == pe("x2", 2));
  CHECK(g(3, 3) == pe("v^2 + u", 2));
  CHECK(g(0, 0).is_zero());
  CHECK(g(0, 1).is_zero());

  auto ginv = s.inverse_metric();
  auto prod = g * ginv;
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 4; ++j) CHECK(prod(i, j) == (i == j ? DiffExpr(1) : DiffExpr(0)));
  // denominators only from h: the u-row of the inverse is constant
  CHECK(ginv(3, 3).is_zero());
  CHECK(ginv(3, 0) == DiffExpr(1));
  CHECK(ginv(3, 1).is_zero());

  auto hinv = s.h_inverse();
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j < 2; ++j) {
      DiffExpr acc;
      for (unsigned k = 0; k < 2; ++k) acc += h(i, k) * hinv(k, j);
      CHECK(acc == (i == j ? DiffExpr(1) : DiffExpr(0)));
    }
}

TEST_CASE("json round trip") {
  auto s = sample_n2();
  auto j = structure_to_json(s);
  auto s2 = structure_from_json(j);
  CHECK(s2.n == s.n);
  CHECK(s2.H == s.H);
  CHECK(s2.f() == s.f());
  CHECK(s2.w == s.w);
  CHECK(s2.basepoint == s.basepoint);
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned k = 0; k < 2; ++k) CHECK(s2.h(i, k) == s.h(i, k));

  // general covector + A + exp_generators round trip
  nlohmann::json raw = {
      {"n", 1},
      {"h", {{"1"}}},
      {"A", {"u"}},
      {"H", "v*u"},
      {"omega", {"0", "x1", "u"}},
      {"w", "-2/3"},
      {"basepoint", {"0", 1, "2"}},
      {"exp_generators", {"-2*x1*u"}},
  };
  auto sg = structure_from_json(raw);
  CHECK_FALSE(sg.is_walker());
  CHECK(sg.w == Rational(-2, 3));
  CHECK(sg.omega[1] == pe("x1", 1));
  REQUIRE(sg.exp_generators.size() == 1);
  auto j2 = structure_to_json(sg);
  auto sg2 = structure_from_json(j2);
  CHECK(sg2.omega[1] == sg.omega[1]);
  CHECK(sg2.A[0] == sg.A[0]);
  CHECK(sg2.exp_generators.size() == 1);
  CHECK(symdiff::PurePoly::compare(sg2.exp_generators[0], sg.exp_generators[0]) == 0);
}

TEST_CASE("json schema violations are rejected") {
  nlohmann::json base;
  base["n"] = 2;
  base["h"] = nlohmann::json::array(
      {nlohmann::json::array({"1", "0"}), nlohmann::json::array({"0", "1"})});
  base["H"] = "0";
  base["omega"] = nlohmann::json{{"f", "x1"}};
  base["w"] = 0;
  base["basepoint"] = nlohmann::json::array({"0", "1", "1", "0"});
  CHECK_NOTHROW(structure_from_json(base));

  auto missing = base;
  missing.erase("H");
  CHECK_THROWS_AS(structure_from_json(missing), std::invalid_argument);

  auto badh = base;
  badh["h"] = {{"1", "0"}};
  CHECK_THROWS_AS(structure_from_json(badh), std::invalid_argument);

  auto badw = base;
  badw["w"] = "not-a-number";
  CHECK_THROWS_AS(structure_from_json(badw), std::invalid_argument);

  auto badbp = base;
  badbp["basepoint"] = {"0", "1", "1"};
  CHECK_THROWS_AS(structure_from_json(badbp), std::invalid_argument);

  auto badomega = base;
  badomega["omega"] = {{"g", "x1"}};
  CHECK_THROWS_AS(structure_from_json(badomega), std::invalid_argument);

  auto badexpr = base;
  badexpr["H"] = "2*q";
  CHECK_THROWS_AS(structure_from_json(badexpr), symdiff::ParseError);

  auto badexp = base;
  badexp["exp_generators"] = {"1/(1+v)"};
  CHECK_THROWS_AS(structure_from_json(badexp), std::invalid_argument);
}

TEST_CASE("structure file loading") {
  auto s = load_structure(std::string(WEYLSPIN_TEST_DATA_DIR) + "/walker_n2.json");
  CHECK(s.n == 2);
  CHECK(s.is_walker());
  CHECK(s.f() == pe("x1", 2));
  CHECK(s.H == pe("2*x1*v + x1^2 - x2^2", 2));
  CHECK(s.w == 0);
  CHECK(s.basepoint[1] == 1);

  CHECK_THROWS_AS(load_structure("/nonexistent/file.json"), std::invalid_argument);

  // malformed JSON file
  const std::string tmp = "/tmp/weylspin_bad.json";
  {
    std::ofstream out(tmp);
    out << "{ not json";
  }
  CHECK_THROWS_AS(load_structure(tmp), std::invalid_argument);
  std::remove(tmp.c_str());

  // save -> load round trip
  const std::string tmp2 = "/tmp/weylspin_roundtrip.json";
  save_structure(s, tmp2);
  auto s2 = load_structure(tmp2);
  CHECK(s2.H == s.H);
  CHECK(s2.f() == s.f());
  std::remove(tmp2.c_str());
}
