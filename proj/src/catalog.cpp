#include "weylspin/catalog.hpp"

#include <sstream>
#include <stdexcept>

#include "weylspin/linalg.hpp"

namespace weylspin::catalog {

namespace {

using riemannian::RiemannianHolonomy;

std::vector<Rational> flatten(const Matrix<Rational>& m) {
  std::vector<Rational> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

// A-block embedding of a small antisymmetric matrix at a coordinate offset.
void embed_rotation(const Matrix<Rational>& small, unsigned offset, COElement* out) {
  for (std::size_t i = 0; i < small.rows(); ++i)
    for (std::size_t j = 0; j < small.cols(); ++j)
      if (small(i, j) != 0) out->A(offset + i, offset + j) = small(i, j);
}

COElement scaling_element(unsigned n, const Rational& b, const Rational& a) {
  COElement e(n);
  e.b = b;
  e.a = a;
  return e;
}

COElement translation_element(unsigned n, unsigned i) {  // X = e_{i+1}
  COElement e(n);
  e.X[i] = Rational(1);
  return e;
}

void append_so_block(unsigned n, const RiemannianHolonomy& h, unsigned offset,
                     std::vector<COElement>* out, const std::vector<Rational>* theta,
                     const std::vector<Rational>* phi) {
  auto gens = riemannian::riemannian_generators(h);
  if ((theta && theta->size() != gens.size()) || (phi && phi->size() != gens.size()))
    throw std::invalid_argument("functional coordinate count does not match the generators");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    COElement e(n);
    embed_rotation(gens[i], offset, &e);
    if (theta) e.b = (*theta)[i];
    if (phi) e.a = (*phi)[i];
    out->push_back(std::move(e));
  }
}

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

void require_functional_ok(const RiemannianHolonomy& h, const std::vector<Rational>& f,
                           const char* which, bool must_be_nonzero) {
  auto gens = riemannian::riemannian_generators(h);
  if (f.size() != gens.size())
    throw std::invalid_argument(std::string(which) +
                                " must have one coordinate per generator");
  if (must_be_nonzero && all_zero(f))
    throw std::invalid_argument(std::string(which) + " must be nonzero for this family");
  if (!vanishes_on_derived(gens, f))
    throw std::invalid_argument(std::string(which) +
                                " does not vanish on the derived subalgebra");
}

std::string rational_str(const Rational& r) { return r.get_str(); }

std::string functional_str(const std::vector<Rational>& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += rational_str(f[i]);
  }
  return s + ")";
}

}  // namespace

WeylHolonomyVariant WeylHolonomyVariant::decomposable1(unsigned n, int k) {
  if (k < -1 || k > static_cast<int>(n) - 1)
    throw std::invalid_argument("splitting parameter out of range");
  WeylHolonomyVariant v;
  v.tag = VariantTag::kDecomposable1;
  v.n = n;
  v.split_k = k;
  return v;
}

WeylHolonomyVariant WeylHolonomyVariant::decomposable2(unsigned n, unsigned k,
                                                       RiemannianHolonomy kk) {
  if (k > n - 1) throw std::invalid_argument("splitting parameter out of range");
  if (kk.n != k) throw std::invalid_argument("Riemannian block must act on R^k");
  WeylHolonomyVariant v;
  v.tag = VariantTag::kDecomposable2;
  v.n = n;
  v.split_k = static_cast<int>(k);
  v.h = std::move(kk);
  v.w = Rational(-2);
  return v;
}

WeylHolonomyVariant WeylHolonomyVariant::decomposable3(unsigned n, unsigned k,
                                                       RiemannianHolonomy kk) {
  if (k < 1 || k > n - 1) throw std::invalid_argument("splitting parameter out of range");
  if (kk.n != k) throw std::invalid_argument("Riemannian block must act on R^k");
  WeylHolonomyVariant v;
  v.tag = VariantTag::kDecomposable3;
  v.n = n;
  v.split_k = static_cast<int>(k);
  v.h = std::move(kk);
  return v;
}

WeylHolonomyVariant WeylHolonomyVariant::r1(unsigned n, RiemannianHolonomy h) {
  if (h.n != n) throw std::invalid_argument("Riemannian block must act on R^n");
  WeylHolonomyVariant v;
  v.tag = VariantTag::kR1;
  v.n = n;
  v.h = std::move(h);
  return v;
}

WeylHolonomyVariant WeylHolonomyVariant::r2(unsigned n, RiemannianHolonomy h) {
  if (h.n != n) throw std::invalid_argument("Riemannian block must act on R^n");
  WeylHolonomyVariant v;
  v.tag = VariantTag::kR2;
  v.n = n;
  v.h = std::move(h);
  return v;
}

WeylHolonomyVariant WeylHolonomyVariant::r3(unsigned n, RiemannianHolonomy h,
                                            std::vector<Rational> phi) {
  if (h.n != n) throw std::invalid_argument("Riemannian block must act on R^n");
  WeylHolonomyVariant v;
  v.tag = VariantTag::kR3Phi;
  v.n = n;
  v.h = std::move(h);
  v.phi = std::move(phi);
  return v;
}

WeylHolonomyVariant WeylHolonomyVariant::beta_theta1(unsigned n, RiemannianHolonomy h,
                                                     Rational beta,
                                                     std::vector<Rational> theta) {
  if (h.n != n) throw std::invalid_argument("Riemannian block must act on R^n");
  WeylHolonomyVariant v;
  v.tag = VariantTag::kBetaTheta1;
  v.n = n;
  v.h = std::move(h);
  v.beta = std::move(beta);
  v.theta = std::move(theta);
  return v;
}

WeylHolonomyVariant WeylHolonomyVariant::theta2(unsigned n, RiemannianHolonomy h,
                                                std::vector<Rational> theta) {
  if (h.n != n) throw std::invalid_argument("Riemannian block must act on R^n");
  WeylHolonomyVariant v;
  v.tag = VariantTag::kTheta2;
  v.n = n;
  v.h = std::move(h);
  v.theta = std::move(theta);
  return v;
}

WeylHolonomyVariant WeylHolonomyVariant::theta3(unsigned n, RiemannianHolonomy h,
                                                std::vector<Rational> theta,
                                                std::vector<Rational> phi) {
  if (h.n != n) throw std::invalid_argument("Riemannian block must act on R^n");
  WeylHolonomyVariant v;
  v.tag = VariantTag::kTheta3Phi;
  v.n = n;
  v.h = std::move(h);
  v.theta = std::move(theta);
  v.phi = std::move(phi);
  return v;
}

WeylHolonomyVariant WeylHolonomyVariant::spinor_w(unsigned n, RiemannianHolonomy h,
                                                  Rational w) {
  if (h.n != n) throw std::invalid_argument("Riemannian block must act on R^n");
  WeylHolonomyVariant v;
  v.tag = VariantTag::kSpinorW;
  v.n = n;
  v.h = std::move(h);
  v.w = std::move(w);
  return v;
}

WeylHolonomyVariant WeylHolonomyVariant::spinor_k(unsigned n, RiemannianHolonomy kk) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (kk.n != n - 1) throw std::invalid_argument("Riemannian block must act on R^{n-1}");
  WeylHolonomyVariant v;
  v.tag = VariantTag::kSpinorK;
  v.n = n;
  v.h = std::move(kk);
  v.w = Rational(-2);
  return v;
}

Rational WeylHolonomyVariant::weight() const {
  if (tag == VariantTag::kSpinorK) return Rational(-2);
  return w;
}

std::string WeylHolonomyVariant::family() const {
  switch (tag) {
    case VariantTag::kDecomposable1:
      return "g^{dec,1}";
    case VariantTag::kDecomposable2:
      return "g^{dec,2}";
    case VariantTag::kDecomposable3:
      return "g^{dec,3}";
    case VariantTag::kR1:
      return "g^{R,1,h}";
    case VariantTag::kR2:
      return "g^{R,2,h}";
    case VariantTag::kR3Phi:
      return "g^{R,3,h,phi}";
    case VariantTag::kBetaTheta1:
      return "g^{beta,theta,1,h}";
    case VariantTag::kTheta2:
      return "g^{theta,2,h}";
    case VariantTag::kTheta3Phi:
      return "g^{theta,3,h,phi}";
    case VariantTag::kSpinorW:
      return "g^{w,h}";
    case VariantTag::kSpinorK:
      return "g^k";
  }
  return "?";
}

std::string WeylHolonomyVariant::name() const {
  std::ostringstream os;
  os << family() << "[n=" << n;
  switch (tag) {
    case VariantTag::kDecomposable1:
      os << ",k=" << split_k;
      break;
    case VariantTag::kDecomposable2:
    case VariantTag::kDecomposable3:
      os << ",k=" << split_k << ",kk=" << h.str();
      break;
    case VariantTag::kR1:
    case VariantTag::kR2:
      os << ",h=" << h.str();
      break;
    case VariantTag::kR3Phi:
      os << ",h=" << h.str() << ",phi=" << functional_str(phi);
      break;
    case VariantTag::kBetaTheta1:
      os << ",h=" << h.str() << ",beta=" << rational_str(beta)
         << ",theta=" << functional_str(theta);
      break;
    case VariantTag::kTheta2:
      os << ",h=" << h.str() << ",theta=" << functional_str(theta);
      break;
    case VariantTag::kTheta3Phi:
      os << ",h=" << h.str() << ",theta=" << functional_str(theta)
         << ",phi=" << functional_str(phi);
      break;
    case VariantTag::kSpinorW:
      os << ",h=" << h.str() << ",w=" << rational_str(w);
      break;
    case VariantTag::kSpinorK:
      os << ",k=" << h.str();
      break;
  }
  os << "]";
  return os.str();
}

unsigned WeylHolonomyVariant::dimension() const {
  auto so_dim = [](unsigned m) { return m * (m - 1) / 2; };
  const unsigned k = split_k < 0 ? 0u : static_cast<unsigned>(split_k);
  switch (tag) {
    case VariantTag::kDecomposable1: {
      // 1 (scaling) + so(1, k+1) + so(n-k); so(1,0) is trivial at k = -1.
      unsigned lorentz = split_k < 0 ? 0u : (k + 2) * (k + 1) / 2;
      unsigned rest = static_cast<unsigned>(static_cast<int>(n) - split_k);
      return 1 + lorentz + so_dim(rest);
    }
    case VariantTag::kDecomposable2:
      return 1 + h.dimension() + so_dim(n - k) + k;
    case VariantTag::kDecomposable3:
      return 2 + h.dimension() + so_dim(n - k) + k;
    case VariantTag::kR1:
      return 2 + h.dimension() + n;
    case VariantTag::kR2:
    case VariantTag::kR3Phi:
    case VariantTag::kBetaTheta1:
    case VariantTag::kSpinorW:
      return 1 + h.dimension() + n;
    case VariantTag::kTheta2:
    case VariantTag::kTheta3Phi:
      return h.dimension() + n;
    case VariantTag::kSpinorK:
      return 1 + h.dimension() + (n - 1);
  }
  return 0;
}

bool vanishes_on_derived(const std::vector<Matrix<Rational>>& gens,
                         const std::vector<Rational>& theta) {
  if (gens.empty()) return true;
  const std::size_t nn = gens[0].rows() * gens[0].cols();
  Matrix<Rational> cols(nn, gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    auto f = flatten(gens[k]);
    for (std::size_t r = 0; r < nn; ++r) cols(r, k) = f[r];
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      auto c = flatten(commutator(gens[i], gens[j]));
      auto x = solve_linear(cols, c);
      if (!x) throw std::invalid_argument("generator set is not closed under brackets");
      Rational val(0);
      for (std::size_t k = 0; k < theta.size(); ++k) val += theta[k] * (*x)[k];
      if (val != 0) return false;
    }
  }
  return true;
}

std::vector<COElement> weyl_holonomy_generators(const WeylHolonomyVariant& v) {
  const unsigned n = v.n;
  std::vector<COElement> out;
  switch (v.tag) {
    case VariantTag::kDecomposable1: {
      out.push_back(scaling_element(n, Rational(1), Rational(0)));
      if (v.split_k < 0) {
        // so(n+1) acting on span{e_+, e_1..e_n}: rotations plus the mixed
        // wedges e_+ ^ e_i, which have X = Y = e_i in this parametrization.
        for (unsigned a = 0; a < n; ++a)
          for (unsigned b = a + 1; b < n; ++b) {
            COElement e(n);
            e.A(a, b) = Rational(1);
            e.A(b, a) = Rational(-1);
            out.push_back(std::move(e));
          }
        for (unsigned a = 0; a < n; ++a) {
          COElement e(n);
          e.X[a] = Rational(1);
          e.Y[a] = Rational(1);
          out.push_back(std::move(e));
        }
      } else {
        const unsigned k = static_cast<unsigned>(v.split_k);
        // so(1, k+1) on span{p, e_1..e_k, q}: boost, rotations, and both
        // null translation directions.
        out.push_back(scaling_element(n, Rational(0), Rational(1)));
        for (unsigned a = 0; a < k; ++a)
          for (unsigned b = a + 1; b < k; ++b) {
            COElement e(n);
            e.A(a, b) = Rational(1);
            e.A(b, a) = Rational(-1);
            out.push_back(std::move(e));
          }
        for (unsigned a = 0; a < k; ++a) {
          out.push_back(translation_element(n, a));
          COElement e(n);
          e.Y[a] = Rational(1);
          out.push_back(std::move(e));
        }
        // so(n-k) on the complementary block.
        for (unsigned a = k; a < n; ++a)
          for (unsigned b = a + 1; b < n; ++b) {
            COElement e(n);
            e.A(a, b) = Rational(1);
            e.A(b, a) = Rational(-1);
            out.push_back(std::move(e));
          }
      }
      return out;
    }
    case VariantTag::kDecomposable2:
    case VariantTag::kDecomposable3: {
      const unsigned k = static_cast<unsigned>(v.split_k);
      if (v.h.n != k) throw std::invalid_argument("Riemannian block must act on R^k");
      if (v.tag == VariantTag::kDecomposable2) {
        out.push_back(scaling_element(n, Rational(1), Rational(-1)));
      } else {
        out.push_back(scaling_element(n, Rational(1), Rational(0)));
        out.push_back(scaling_element(n, Rational(0), Rational(1)));
      }
      append_so_block(n, v.h, 0, &out, nullptr, nullptr);
      for (unsigned a = k; a < n; ++a)
        for (unsigned b = a + 1; b < n; ++b) {
          COElement e(n);
          e.A(a, b) = Rational(1);
          e.A(b, a) = Rational(-1);
          out.push_back(std::move(e));
        }
      for (unsigned a = 0; a < k; ++a) out.push_back(translation_element(n, a));
      return out;
    }
    case VariantTag::kR1:
      out.push_back(scaling_element(n, Rational(1), Rational(0)));
      out.push_back(scaling_element(n, Rational(0), Rational(1)));
      append_so_block(n, v.h, 0, &out, nullptr, nullptr);
      for (unsigned a = 0; a < n; ++a) out.push_back(translation_element(n, a));
      return out;
    case VariantTag::kR2:
      out.push_back(scaling_element(n, Rational(1), Rational(0)));
      append_so_block(n, v.h, 0, &out, nullptr, nullptr);
      for (unsigned a = 0; a < n; ++a) out.push_back(translation_element(n, a));
      return out;
    case VariantTag::kR3Phi:
      require_functional_ok(v.h, v.phi, "phi", /*must_be_nonzero=*/true);
      out.push_back(scaling_element(n, Rational(1), Rational(0)));
      append_so_block(n, v.h, 0, &out, nullptr, &v.phi);
      for (unsigned a = 0; a < n; ++a) out.push_back(translation_element(n, a));
      return out;
    case VariantTag::kBetaTheta1:
      require_functional_ok(v.h, v.theta, "theta", /*must_be_nonzero=*/false);
      if (v.beta == 0 && all_zero(v.theta))
        throw std::invalid_argument("beta and theta cannot both vanish for this family");
      out.push_back(scaling_element(n, v.beta, Rational(1)));
      append_so_block(n, v.h, 0, &out, &v.theta, nullptr);
      for (unsigned a = 0; a < n; ++a) out.push_back(translation_element(n, a));
      return out;
    case VariantTag::kTheta2:
      require_functional_ok(v.h, v.theta, "theta", /*must_be_nonzero=*/true);
      append_so_block(n, v.h, 0, &out, &v.theta, nullptr);
      for (unsigned a = 0; a < n; ++a) out.push_back(translation_element(n, a));
      return out;
    case VariantTag::kTheta3Phi:
      require_functional_ok(v.h, v.theta, "theta", /*must_be_nonzero=*/true);
      require_functional_ok(v.h, v.phi, "phi", /*must_be_nonzero=*/true);
      append_so_block(n, v.h, 0, &out, &v.theta, &v.phi);
      for (unsigned a = 0; a < n; ++a) out.push_back(translation_element(n, a));
      return out;
    case VariantTag::kSpinorW: {
      Rational half_w = v.w / 2;
      out.push_back(scaling_element(n, Rational(1), half_w));
      append_so_block(n, v.h, 0, &out, nullptr, nullptr);
      for (unsigned a = 0; a < n; ++a) out.push_back(translation_element(n, a));
      return out;
    }
    case VariantTag::kSpinorK: {
      if (v.h.n != n - 1)
        throw std::invalid_argument("Riemannian block must act on R^{n-1}");
      out.push_back(scaling_element(n, Rational(1), Rational(-1)));
      append_so_block(n, v.h, 0, &out, nullptr, nullptr);
      for (unsigned a = 0; a + 1 < n; ++a) out.push_back(translation_element(n, a));
      return out;
    }
  }
  throw std::invalid_argument("unknown variant");
}

SpinorDimensionFormula formula_spinor_dimension(unsigned h_ann_dim, unsigned n,
                                                VariantTag tag) {
  SpinorDimensionFormula f;
  if (tag == VariantTag::kSpinorW) {
    f.predicted = h_ann_dim;
    f.alternate = h_ann_dim;
    return f;
  }
  if (tag == VariantTag::kSpinorK) {
    const unsigned mult_consistent = n % 2 == 0 ? 2 : 1;
    const unsigned mult_alternate = n % 2 == 0 ? 1 : 2;
    f.predicted = mult_consistent * h_ann_dim;
    f.alternate = mult_alternate * h_ann_dim;
    f.rules_disagree = f.predicted != f.alternate;
    return f;
  }
  return f;  // non-spinor families carry no invariant spinors
}

std::vector<WeylHolonomyVariant> standard_catalog(unsigned max_n) {
  using RH = RiemannianHolonomy;
  std::vector<WeylHolonomyVariant> out;
  for (unsigned n = 2; n <= max_n; ++n) {
    out.push_back(WeylHolonomyVariant::spinor_w(n, RH::trivial(n), Rational(0)));
    if (n % 2 == 0 && n >= 4)
      out.push_back(WeylHolonomyVariant::spinor_w(n, RH::su(n / 2), Rational(0)));
    if (n % 4 == 0 && n >= 8)
      out.push_back(WeylHolonomyVariant::spinor_w(n, RH::sp(n / 4), Rational(0)));
    if (n == 7) out.push_back(WeylHolonomyVariant::spinor_w(7, RH::g2(), Rational(0)));
    if (n == 8) out.push_back(WeylHolonomyVariant::spinor_w(8, RH::spin7(), Rational(0)));

    out.push_back(WeylHolonomyVariant::spinor_k(n, RH::trivial(n - 1)));
    if ((n - 1) % 2 == 0 && n - 1 >= 4)
      out.push_back(WeylHolonomyVariant::spinor_k(n, RH::su((n - 1) / 2)));

    out.push_back(WeylHolonomyVariant::r1(n, RH::full_so(n)));
    out.push_back(WeylHolonomyVariant::r2(n, RH::full_so(n)));
    {
      auto habelian = n == 2 ? RH::full_so(2)
                             : RH::direct_sum({RH::full_so(2), RH::trivial(n - 2)});
      std::vector<Rational> one{Rational(1)};
      out.push_back(WeylHolonomyVariant::r3(n, habelian, one));
      out.push_back(WeylHolonomyVariant::theta2(n, habelian, one));
      out.push_back(WeylHolonomyVariant::theta3(n, habelian, one, one));
    }
    out.push_back(
        WeylHolonomyVariant::beta_theta1(n, RH::trivial(n), Rational(1), {}));

    out.push_back(WeylHolonomyVariant::decomposable1(n, -1));
    out.push_back(WeylHolonomyVariant::decomposable1(n, static_cast<int>(n) - 1));
    out.push_back(WeylHolonomyVariant::decomposable2(n, 0, RH::trivial(0)));
    out.push_back(WeylHolonomyVariant::decomposable2(n, n - 1, RH::trivial(n - 1)));
    out.push_back(WeylHolonomyVariant::decomposable3(n, 1, RH::trivial(1)));
  }
  return out;
}

}  // namespace weylspin::catalog
