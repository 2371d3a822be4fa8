#include "weylspin/kundt.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "weylspin/linalg.hpp"

namespace weylspin::kundt {

namespace {

Rational rational_from_json(const nlohmann::json& j, const char* what) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      Rational r(j.get<std::string>());
      r.canonicalize();
      return r;
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": invalid rational literal '" +
                                  j.get<std::string>() + "'");
    }
  }
  throw std::invalid_argument(std::string(what) +
                              ": expected an integer or a rational string");
}

std::string expr_from_json_checked(const nlohmann::json& j, const char* what) {
  if (!j.is_string())
    throw std::invalid_argument(std::string(what) + ": expected an expression string");
  return j.get<std::string>();
}

void check_no_pole_at_basepoint(const DiffExpr& e, const std::vector<Rational>& basepoint,
                                const char* what) {
  try {
    (void)e.substitute(basepoint);
  } catch (const symdiff::PoleError&) {
    throw symdiff::PoleError(std::string(what) + " has a pole at the basepoint");
  }
}

}  // namespace

bool KundtStructure::is_walker() const {
  for (const auto& a : A)
    if (!a.is_zero()) return false;
  for (unsigned c = 0; c + 1 < omega.size(); ++c)
    if (!omega[c].is_zero()) return false;
  return true;
}

const DiffExpr& KundtStructure::f() const {
  if (!is_walker())
    throw std::logic_error("f() requires the Walker specialization (A = 0, omega = f du)");
  return omega[chart.index_u()];
}

Matrix<DiffExpr> KundtStructure::metric_matrix() const {
  Matrix<DiffExpr> g(n + 2, n + 2);
  g(0, n + 1) = DiffExpr(1);
  g(n + 1, 0) = DiffExpr(1);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) g(1 + i, 1 + j) = h(i, j);
  for (unsigned i = 0; i < n; ++i) {
    g(1 + i, n + 1) = A[i];
    g(n + 1, 1 + i) = A[i];
  }
  g(n + 1, n + 1) = H;
  return g;
}

Matrix<DiffExpr> KundtStructure::h_inverse() const { return matrix_inverse(h); }

Matrix<DiffExpr> KundtStructure::inverse_metric() const {
  // Block inverse of [[0,0,1],[0,h,A],[1,A^t,H]]: only h is inverted.
  //   g^{vv} = A^t h^{-1} A - H,  g^{v i} = -(h^{-1}A)_i,  g^{vu} = 1,
  //   g^{ij} = h^{ij},            g^{iu} = 0,              g^{uu} = 0.
  const Matrix<DiffExpr> hinv = h_inverse();
  Matrix<DiffExpr> ginv(n + 2, n + 2);
  std::vector<DiffExpr> hinv_a(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) hinv_a[i] += hinv(i, j) * A[j];
  DiffExpr vv = -H;
  for (unsigned i = 0; i < n; ++i) vv += A[i] * hinv_a[i];
  ginv(0, 0) = vv;
  for (unsigned i = 0; i < n; ++i) {
    ginv(0, 1 + i) = -hinv_a[i];
    ginv(1 + i, 0) = -hinv_a[i];
    for (unsigned j = 0; j < n; ++j) ginv(1 + i, 1 + j) = hinv(i, j);
  }
  ginv(0, n + 1) = DiffExpr(1);
  ginv(n + 1, 0) = DiffExpr(1);
  return ginv;
}

Matrix<Rational> KundtStructure::h_at_basepoint() const {
  Matrix<Rational> hb(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      auto ev = h(i, j).evaluate(basepoint, Rational(1, 1000));
      if (!ev.exact)
        throw std::invalid_argument(
            "h is not exactly rational at the basepoint (entry " + std::to_string(i + 1) +
            "," + std::to_string(j + 1) + ")");
      hb(i, j) = ev.value;
    }
  return hb;
}

KundtStructure make_kundt(unsigned n, Matrix<DiffExpr> h, std::vector<DiffExpr> A,
                          std::vector<DiffExpr> omega, DiffExpr H, Rational w,
                          std::vector<Rational> basepoint) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (h.rows() != n || h.cols() != n) throw std::invalid_argument("h must be n x n");
  if (A.size() != n) throw std::invalid_argument("A must have n entries");
  if (omega.size() != n + 2) throw std::invalid_argument("omega must have n + 2 components");
  if (basepoint.size() != n + 2)
    throw std::invalid_argument("basepoint must have n + 2 coordinates");
  w.canonicalize();
  for (auto& b : basepoint) b.canonicalize();

  KundtStructure s;
  s.n = n;
  s.chart = CoordChart(n);
  s.h = std::move(h);
  s.A = std::move(A);
  s.H = std::move(H);
  s.omega = std::move(omega);
  s.w = std::move(w);
  s.basepoint = std::move(basepoint);

  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      if (s.h(i, j) != s.h(j, i)) throw std::invalid_argument("h must be symmetric");
      if (!s.h(i, j).derivative(s.chart.index_v()).is_zero())
        throw std::invalid_argument("h must not depend on v");
      check_no_pole_at_basepoint(s.h(i, j), s.basepoint, "h");
    }
  for (const auto& a : s.A) check_no_pole_at_basepoint(a, s.basepoint, "A");
  for (const auto& o : s.omega) check_no_pole_at_basepoint(o, s.basepoint, "omega");
  check_no_pole_at_basepoint(s.H, s.basepoint, "H");

  // Positive definiteness at the basepoint: leading principal minors > 0.
  const Matrix<Rational> hb = s.h_at_basepoint();
  for (unsigned k = 1; k <= n; ++k) {
    Matrix<Rational> lead(k, k);
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = 0; j < k; ++j) lead(i, j) = hb(i, j);
    if (!(determinant(lead) > 0))
      throw std::invalid_argument("h is not positive definite at the basepoint (minor " +
                                  std::to_string(k) + ")");
  }
  return s;
}

KundtStructure make_walker(unsigned n, Matrix<DiffExpr> h, DiffExpr f, DiffExpr H, Rational w,
                           std::vector<Rational> basepoint) {
  std::vector<DiffExpr> omega(n + 2);
  omega[n + 1] = std::move(f);
  return make_kundt(n, std::move(h), std::vector<DiffExpr>(n), std::move(omega), std::move(H),
                    std::move(w), std::move(basepoint));
}

KundtStructure make_flat_walker(unsigned n, DiffExpr f, DiffExpr H, Rational w,
                                std::vector<Rational> basepoint) {
  Matrix<DiffExpr> h(n, n);
  for (unsigned i = 0; i < n; ++i) h(i, i) = DiffExpr(1);
  return make_walker(n, std::move(h), std::move(f), std::move(H), std::move(w),
                     std::move(basepoint));
}

std::vector<Rational> default_basepoint(unsigned n) {
  std::vector<Rational> p(n + 2, Rational(0));
  for (unsigned i = 1; i <= n; ++i) p[i] = 1;
  return p;
}

nlohmann::json structure_to_json(const KundtStructure& s) {
  const auto& names = s.chart.names();
  nlohmann::json j;
  j["n"] = s.n;
  nlohmann::json hj = nlohmann::json::array();
  for (unsigned i = 0; i < s.n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (unsigned k = 0; k < s.n; ++k) row.push_back(s.h(i, k).str(names));
    hj.push_back(std::move(row));
  }
  j["h"] = std::move(hj);
  bool a_zero = true;
  for (const auto& a : s.A) a_zero = a_zero && a.is_zero();
  if (!a_zero) {
    nlohmann::json aj = nlohmann::json::array();
    for (const auto& a : s.A) aj.push_back(a.str(names));
    j["A"] = std::move(aj);
  }
  j["H"] = s.H.str(names);
  if (s.is_walker()) {
    j["omega"] = nlohmann::json{{"f", s.omega[s.chart.index_u()].str(names)}};
  } else {
    nlohmann::json oj = nlohmann::json::array();
    for (const auto& o : s.omega) oj.push_back(o.str(names));
    j["omega"] = std::move(oj);
  }
  j["w"] = s.w.get_str();
  nlohmann::json bj = nlohmann::json::array();
  for (const auto& b : s.basepoint) bj.push_back(b.get_str());
  j["basepoint"] = std::move(bj);
  if (!s.exp_generators.empty()) {
    nlohmann::json ej = nlohmann::json::array();
    for (const auto& e : s.exp_generators) ej.push_back(e.str(names));
    j["exp_generators"] = std::move(ej);
  }
  return j;
}

KundtStructure structure_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("structure: expected a JSON object");
  for (const char* req : {"n", "h", "H", "omega", "w", "basepoint"})
    if (!j.contains(req))
      throw std::invalid_argument(std::string("structure: missing field '") + req + "'");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() <= 0)
    throw std::invalid_argument("n: expected a positive integer");
  const unsigned n = static_cast<unsigned>(j["n"].get<long long>());
  const CoordChart chart(n);
  auto parse = [&](const nlohmann::json& node, const char* what) {
    return symdiff::parse_expr(expr_from_json_checked(node, what), chart);
  };

  if (!j["h"].is_array() || j["h"].size() != n)
    throw std::invalid_argument("h: expected an n x n array of expression strings");
  Matrix<DiffExpr> h(n, n);
  for (unsigned i = 0; i < n; ++i) {
    const auto& row = j["h"][i];
    if (!row.is_array() || row.size() != n)
      throw std::invalid_argument("h: expected an n x n array of expression strings");
    for (unsigned k = 0; k < n; ++k) h(i, k) = parse(row[k], "h");
  }

  std::vector<DiffExpr> a(n);
  if (j.contains("A")) {
    if (!j["A"].is_array() || j["A"].size() != n)
      throw std::invalid_argument("A: expected n expression strings");
    for (unsigned i = 0; i < n; ++i) a[i] = parse(j["A"][i], "A");
  }

  DiffExpr bigH = parse(j["H"], "H");

  std::vector<DiffExpr> omega(n + 2);
  const auto& oj = j["omega"];
  if (oj.is_object()) {
    if (!oj.contains("f") || oj.size() != 1)
      throw std::invalid_argument("omega: object form must be {\"f\": expr}");
    omega[chart.index_u()] = parse(oj["f"], "omega.f");
  } else if (oj.is_array()) {
    if (oj.size() != n + 2)
      throw std::invalid_argument("omega: covector form needs n + 2 components");
    for (unsigned c = 0; c < n + 2; ++c) omega[c] = parse(oj[c], "omega");
  } else {
    throw std::invalid_argument("omega: expected {\"f\": expr} or a covector array");
  }

  Rational w = rational_from_json(j["w"], "w");

  if (!j["basepoint"].is_array() || j["basepoint"].size() != n + 2)
    throw std::invalid_argument("basepoint: expected n + 2 rationals");
  std::vector<Rational> basepoint;
  for (const auto& b : j["basepoint"]) basepoint.push_back(rational_from_json(b, "basepoint"));

  KundtStructure s = make_kundt(n, std::move(h), std::move(a), std::move(omega),
                                std::move(bigH), std::move(w), std::move(basepoint));

  if (j.contains("exp_generators")) {
    if (!j["exp_generators"].is_array())
      throw std::invalid_argument("exp_generators: expected an array");
    for (const auto& node : j["exp_generators"]) {
      DiffExpr e = parse(node, "exp_generators");
      if (!e.is_poly())
        throw std::invalid_argument("exp_generators: entries must be polynomials");
      symdiff::PurePoly p = e.num().poly();
      p *= Rational(1) / e.den().poly().constant_value();
      s.exp_generators.push_back(std::move(p));
    }
  }
  return s;
}

KundtStructure load_structure(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open structure file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument("structure file is not valid JSON: " + std::string(err.what()));
  }
  return structure_from_json(j);
}

void save_structure(const KundtStructure& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << structure_to_json(s).dump(2) << "\n";
}

}  // namespace weylspin::kundt
