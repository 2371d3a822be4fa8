#include "weylspin/report.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "weylspin/catalog.hpp"
#include "weylspin/clifford.hpp"
#include "weylspin/curvature.hpp"
#include "weylspin/holonomy.hpp"
#include "weylspin/kundt.hpp"
#include "weylspin/lie_spin.hpp"
#include "weylspin/random_walker.hpp"
#include "weylspin/riemannian.hpp"
#include "weylspin/spinor_kernel.hpp"
#include "weylspin/symdiff.hpp"

namespace weylspin::report {

using nlohmann::json;
using symdiff::DiffExpr;

namespace {

std::string rat(const Rational& r) { return r.get_str(); }

json expr_json(const DiffExpr& e, const symdiff::CoordChart& chart) {
  return e.str(chart.names());
}

bool selected(const std::vector<std::string>& suites, const std::string& name) {
  return suites.empty() || std::find(suites.begin(), suites.end(), name) != suites.end();
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kFlagged:
      return "flagged";
  }
  return "unknown";
}

void Report::sort_records() {
  std::sort(records.begin(), records.end(),
            [](const Record& a, const Record& b) { return a.name < b.name; });
}

bool Report::all_pass() const { return count(Status::kFail) == 0; }

unsigned Report::count(Status s) const {
  unsigned c = 0;
  for (const Record& r : records)
    if (r.status == s) ++c;
  return c;
}

json Report::to_json() const {
  json recs = json::array();
  for (const Record& r : records)
    recs.push_back(json{{"name", r.name},
                        {"status", to_string(r.status)},
                        {"rule", r.rule},
                        {"detail", r.detail}});
  return json{{"command", command},
              {"conventions", conventions()},
              {"summary",
               {{"pass", count(Status::kPass)},
                {"fail", count(Status::kFail)},
                {"flagged", count(Status::kFlagged)}}},
              {"records", recs}};
}

std::string Report::render_text() const {
  std::ostringstream out;
  for (const Record& r : records) {
    std::string status = to_string(r.status);
    status.resize(7, ' ');
    out << "[" << status << "] " << r.name;
    if (r.detail.contains("note")) out << "  -- " << r.detail["note"].get<std::string>();
    out << "\n";
  }
  out << command << ": " << count(Status::kPass) << " pass, " << count(Status::kFail)
      << " fail, " << count(Status::kFlagged) << " flagged\n";
  return out.str();
}

json conventions() {
  return json{
      {"scalar_field",
       "Q(i, sqrt2) for spinor computations; exact rational functions of "
       "polynomials and exponentials for geometry"},
      {"clifford_relation", "G_a G_b + G_b G_a = -2 g_ab Id"},
      {"weyl_connection",
       "nabla = Levi-Civita + K with K_X Y = omega(X) Y + omega(Y) X - g(X,Y) omega#"},
      {"compatibility_sign",
       "measured, not assumed: the implemented K yields nabla g = -2 omega x g "
       "(epsilon = -2)"},
      {"curvature_convention", "R(d_a, d_b) d_c = R^d_{cab} d_d"},
      {"ricci_convention", "Ric_{bc} = sum_a R^a_{cba}, then symmetrized"},
      {"hermitian_form",
       "B = G(e_minus): <psi, phi> = psi^dagger B phi; Clifford multiplication by "
       "real vectors is self-adjoint"},
      {"odd_dimension_component",
       "odd-dimensional Clifford modules use the first of the two inequivalent "
       "irreducible components (G_n = +lambda T x ... x T)"},
      {"spinor_count_parity_rule",
       "the fixed-weight family's closed-form count multiplies the block "
       "annihilator dimension by 2 exactly when the horizontal dimension is even; "
       "the opposite parity convention is evaluated alongside and disagreements "
       "are flagged, never silently corrected"},
      {"dirac_current",
       "g(V_psi, X) = -<psi, X . psi> with components against the frame "
       "(p, e_1..e_n, q)"},
  };
}

// ---------------------------------------------------------------------------
// catalog

Report cmd_catalog(const std::string& filter, unsigned max_n) {
  Report rep;
  rep.command = "catalog";
  unsigned matched = 0;
  for (const catalog::WeylHolonomyVariant& v : catalog::standard_catalog(max_n)) {
    if (!filter.empty() && v.family() != filter &&
        v.name().find(filter) == std::string::npos)
      continue;
    ++matched;
    const spin::DimensionCheck check = spin::verify_catalog_dimension(v);
    Record r;
    r.name = v.name();
    r.rule = "catalog.dimension-table";
    if (check.matches_predicted)
      r.status = check.formula.rules_disagree ? Status::kFlagged : Status::kPass;
    else if (check.matches_alternate)
      r.status = Status::kFlagged;
    else
      r.status = Status::kFail;
    r.detail = json{{"family", v.family()},
                    {"n", v.n},
                    {"weight", rat(v.weight())},
                    {"algebra_dimension", v.dimension()},
                    {"generator_count", catalog::weyl_holonomy_generators(v).size()},
                    {"spinor_dimension_computed", check.computed},
                    {"spinor_dimension_formula", check.formula.predicted},
                    {"spinor_dimension_alternate_rule", check.formula.alternate},
                    {"parity_rules_disagree", check.formula.rules_disagree}};
    if (check.formula.rules_disagree)
      r.detail["note"] = "parity conventions disagree; computed kernel adjudicates";
    rep.add(std::move(r));
  }
  if (!filter.empty() && matched == 0)
    throw std::invalid_argument("catalog filter matched no variant: " + filter);
  rep.sort_records();
  return rep;
}

// ---------------------------------------------------------------------------
// check

namespace {

json rho_json(const curvature::RecurrenceReport& rr, const symdiff::CoordChart& chart) {
  json out = json::array();
  for (const DiffExpr& e : rr.rho) out.push_back(expr_json(e, chart));
  return out;
}

Record walker_only_skip(const std::string& name, const std::string& rule) {
  Record r;
  r.name = name;
  r.rule = rule;
  r.status = Status::kFlagged;
  r.detail["note"] = "skipped: requires the Walker form (A = 0, omega = f du)";
  return r;
}

}  // namespace

Report cmd_check(const CheckConfig& config) {
  kundt::KundtStructure s = kundt::load_structure(config.structure_path);
  if (!config.basepoint_override.empty()) {
    kundt::KundtStructure moved = kundt::make_kundt(s.n, s.h, s.A, s.omega, s.H, s.w,
                                                    config.basepoint_override);
    moved.exp_generators = s.exp_generators;
    s = std::move(moved);
  }
  const symdiff::CoordChart& chart = s.chart;
  const bool walker = s.is_walker();

  Report rep;
  rep.command = "check";

  if (selected(config.suites, "compatibility")) {
    const curvature::CompatibilityReport c = curvature::verify_compatibility(s);
    Record r;
    r.name = "compatibility";
    r.rule = "check.compatibility";
    r.status = c.has_consistent_sign ? Status::kPass : Status::kFail;
    r.detail = json{{"epsilon", c.epsilon},
                    {"omega_zero", c.omega_zero},
                    {"v_trace_residual_zero", c.residual_v_trace},
                    {"h_scaling_residual_zero", c.residual_h_scaling}};
    if (c.omega_zero)
      r.detail["note"] = "omega = 0: metric connection, both signs fit vacuously";
    rep.add(std::move(r));
  }

  if (selected(config.suites, "recurrence") ||
      selected(config.suites, "null-line-curvature")) {
    const curvature::RecurrenceReport rr = curvature::check_recurrence(s);
    if (selected(config.suites, "recurrence")) {
      Record r;
      r.name = "recurrence";
      r.rule = "check.recurrence";
      r.status = rr.recurrent ? Status::kPass : Status::kFail;
      r.detail["rho"] = rho_json(rr, chart);
      if (!rr.recurrent) r.detail["failing_component"] = rr.failing_component;
      rep.add(std::move(r));
    }
    if (selected(config.suites, "null-line-curvature")) {
      Record r;
      r.name = "null-line-curvature";
      r.rule = "check.null-line-curvature";
      r.status = rr.null_line_curvature ? Status::kPass : Status::kFail;
      rep.add(std::move(r));
    }
  }

  if (selected(config.suites, "projection-condition")) {
    if (!walker) {
      rep.add(walker_only_skip("projection-condition", "check.projection-condition"));
    } else {
      Record r;
      r.name = "projection-condition";
      r.rule = "check.projection-condition";
      r.status = curvature::check_projection_condition(s) ? Status::kPass : Status::kFail;
      r.detail["weight"] = rat(s.w);
      rep.add(std::move(r));
    }
  }

  if (selected(config.suites, "ricci-closed-forms")) {
    const curvature::RicciDecomposition rd = curvature::ricci_symmetric(s);
    Record r;
    r.name = "ricci-closed-forms";
    r.rule = "check.ricci-closed-forms";
    if (!walker) {
      r.status = Status::kFlagged;
      r.detail["note"] = "closed-form cross-check runs only in the Walker form";
    } else {
      r.status = rd.closed_form_ok ? Status::kPass : Status::kFail;
      r.detail["failures"] = rd.closed_form_failures;
    }
    rep.add(std::move(r));
  }

  bool ew_known = false;
  bool ew_value = false;
  if (walker && (selected(config.suites, "einstein-weyl") ||
                 selected(config.suites, "einstein-weyl-normal-form"))) {
    const curvature::EinsteinWeylReport ew = curvature::einstein_weyl_check(s);
    ew_known = true;
    ew_value = ew.is_einstein_weyl;
    if (selected(config.suites, "einstein-weyl")) {
      Record r;
      r.name = "einstein-weyl";
      r.rule = "check.einstein-weyl";
      r.status = ew.is_einstein_weyl ? Status::kPass : Status::kFlagged;
      r.detail = json{{"is_einstein_weyl", ew.is_einstein_weyl},
                      {"lambda", expr_json(ew.lambda, chart)},
                      {"residual_components", ew.residual_components}};
      if (!ew.is_einstein_weyl)
        r.detail["note"] = "structure is not Einstein-Weyl (classification, not an error)";
      rep.add(std::move(r));
    }
  } else {
    if (selected(config.suites, "einstein-weyl"))
      rep.add(walker_only_skip("einstein-weyl", "check.einstein-weyl"));
  }

  if (selected(config.suites, "einstein-weyl-normal-form")) {
    if (!walker) {
      rep.add(walker_only_skip("einstein-weyl-normal-form",
                               "check.einstein-weyl-normal-form"));
    } else {
      const curvature::NormalFormReport nf = curvature::einstein_weyl_normal_form(s);
      Record r;
      r.name = "einstein-weyl-normal-form";
      r.rule = "check.einstein-weyl-normal-form";
      if (nf.pass)
        r.status = Status::kPass;
      else if (ew_known && nf.geometry_pass != ew_value)
        r.status = Status::kFail;  // normal form and direct check must agree
      else
        r.status = Status::kFlagged;
      r.detail = json{{"normal_form_ok", nf.normal_form_ok},
                      {"weight_ok", nf.weight_ok},
                      {"equation_ok", nf.equation_ok},
                      {"closed_weyl", nf.closed_weyl},
                      {"geometry_pass", nf.geometry_pass},
                      {"pass", nf.pass}};
      if (!nf.equation_ok)
        r.detail["equation_residual"] = expr_json(nf.equation_residual, chart);
      rep.add(std::move(r));
    }
  }

  const bool want_holonomy = selected(config.suites, "holonomy-span");
  const bool want_spinors = selected(config.suites, "parallel-spinors");
  if (want_holonomy || want_spinors) {
    if (!walker) {
      if (want_holonomy) rep.add(walker_only_skip("holonomy-span", "check.holonomy-span"));
      if (want_spinors)
        rep.add(walker_only_skip("parallel-spinors", "check.parallel-spinors"));
    } else {
      try {
        const holonomy::HolonomyResult hol =
            holonomy::infinitesimal_holonomy(s, config.max_order);
        if (want_holonomy) {
          Record r;
          r.name = "holonomy-span";
          r.rule = "check.holonomy-span";
          r.status = hol.stabilized ? Status::kPass : Status::kFlagged;
          json contained = json::array();
          const auto trivial_w = catalog::WeylHolonomyVariant::spinor_w(
              s.n, riemannian::RiemannianHolonomy::trivial(s.n), s.w);
          if (holonomy::contained_in(hol, trivial_w)) contained.push_back(trivial_w.name());
          if (s.n >= 2) {
            const auto trivial_k = catalog::WeylHolonomyVariant::spinor_k(
                s.n, riemannian::RiemannianHolonomy::trivial(s.n - 1));
            if (holonomy::contained_in(hol, trivial_k))
              contained.push_back(trivial_k.name());
          }
          r.detail = json{{"ranks_by_order", hol.ranks_by_order},
                          {"dimension", hol.basis.size()},
                          {"stabilized", hol.stabilized},
                          {"rational_span", holonomy::is_rational_span(hol)},
                          {"contained_in", contained}};
          if (!hol.stabilized)
            r.detail["note"] = "span still growing at max order; raise --max-order";
          rep.add(std::move(r));
        }
        if (want_spinors) {
          Record r;
          r.name = "parallel-spinors";
          r.rule = "check.parallel-spinors";
          if (!holonomy::is_rational_span(hol)) {
            r.status = Status::kFlagged;
            r.detail["note"] =
                "span has transcendental entries at this basepoint; choose a "
                "basepoint where the exponential arguments vanish";
          } else {
            const holonomy::ParallelSpinorResult ps =
                holonomy::parallel_spinor_dimension(hol);
            r.status = ps.stabilized ? Status::kPass : Status::kFlagged;
            r.detail["dimension"] = ps.dimension;
            r.detail["stabilized"] = ps.stabilized;
            const LorentzRep lrep = build_lorentz_rep(s.n);
            json currents = json::array();
            for (const SpinorVector& psi : ps.basis) {
              const spin::DiracCurrent dc = spin::dirac_current(lrep, psi);
              currents.push_back(json{{"real", dc.is_real()},
                                      {"null", dc.is_null()},
                                      {"along_p", dc.is_positive_multiple_of_p()}});
            }
            r.detail["dirac_currents"] = currents;
          }
          rep.add(std::move(r));
        }
      } catch (const std::domain_error& e) {
        Record r;
        r.name = want_holonomy ? "holonomy-span" : "parallel-spinors";
        r.rule = "check.holonomy-span";
        r.status = Status::kFlagged;
        r.detail["note"] = std::string("holonomy unavailable here: ") + e.what();
        rep.add(std::move(r));
        if (want_holonomy && want_spinors) {
          Record r2;
          r2.name = "parallel-spinors";
          r2.rule = "check.parallel-spinors";
          r2.status = Status::kFlagged;
          r2.detail["note"] = "holonomy span unavailable (see holonomy-span)";
          rep.add(std::move(r2));
        }
      }
    }
  }

  rep.sort_records();
  return rep;
}

// ---------------------------------------------------------------------------
// selftest

namespace {

Bivector random_bivector(std::mt19937& rng, unsigned n) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 2);
  Bivector b = zero_bivector(n);
  for (unsigned a = 1; a <= n; ++a)
    for (unsigned c = a + 1; c <= n; ++c) {
      Rational v(num(rng), den(rng));
      v.canonicalize();
      set_bivector(&b, a, c, ExactScalar(v));
    }
  return b;
}

bool all_zero(const SpinorVector& v) {
  for (const ExactScalar& x : v)
    if (!(x == ExactScalar(0))) return false;
  return true;
}

}  // namespace

Report cmd_selftest(const SelftestConfig& config) {
  Report rep;
  rep.command = "selftest";
  std::mt19937 rng(static_cast<std::mt19937::result_type>(config.seed));

  {  // Clifford relations over every signature
    Record r;
    r.name = "clifford-relations";
    r.rule = "selftest.clifford-relations";
    unsigned checked = 0;
    json violations = json::array();
    for (unsigned rr = 0; rr <= config.max_signature; ++rr)
      for (unsigned ss = 0; rr + ss <= config.max_signature; ++ss) {
        if (rr + ss == 0) continue;
        const CliffordRep crep = build_clifford_rep(Signature{rr, ss});
        const CliffordCheck chk = check_clifford_relations(crep);
        ++checked;
        for (const std::string& v : chk.violations) violations.push_back(v);
      }
    r.status = violations.empty() ? Status::kPass : Status::kFail;
    r.detail = json{{"signatures_checked", checked}, {"violations", violations}};
    rep.add(std::move(r));
  }

  {  // bivector homomorphism: lambda([x,y]) = [lambda(x), lambda(y)]
    Record r;
    r.name = "bivector-homomorphism";
    r.rule = "selftest.bivector-homomorphism";
    unsigned checked = 0, failures = 0;
    for (unsigned rr = 0; rr <= config.max_signature; ++rr)
      for (unsigned ss = 0; rr + ss <= config.max_signature; ++ss) {
        if (rr + ss < 2) continue;
        const Signature sig{rr, ss};
        const CliffordRep crep = build_clifford_rep(sig);
        for (unsigned k = 0; k < config.bivector_pairs; ++k) {
          const Bivector b1 = random_bivector(rng, sig.dim());
          const Bivector b2 = random_bivector(rng, sig.dim());
          const SpinorMatrix l1 = lambda_star(crep, b1);
          const SpinorMatrix l2 = lambda_star(crep, b2);
          const SpinorMatrix lhs = l1 * l2 - l2 * l1;
          const SpinorMatrix rhs = lambda_star(crep, bivector_bracket(sig, b1, b2));
          ++checked;
          if (!(lhs == rhs)) ++failures;
        }
      }
    r.status = failures == 0 ? Status::kPass : Status::kFail;
    r.detail = json{{"commutators_checked", checked}, {"failures", failures}};
    rep.add(std::move(r));
  }

  if (config.max_signature >= 3) {  // split-frame identities
    Record r;
    r.name = "split-frame-identities";
    r.rule = "selftest.split-frame-identities";
    unsigned checked = 0, failures = 0;
    const unsigned max_n = std::min(6u, config.max_signature - 2);
    for (unsigned n = 1; n <= max_n; ++n) {
      const LorentzRep lrep = build_lorentz_rep(n);
      const std::size_t dim = lrep.clifford().spinor_dim();
      const std::size_t half = dim / 2;
      const CliffordRep& hrep = lrep.horizontal_clifford();
      // scaling part: the a = -1 element doubles embedded spinors
      COElement scale(n);
      scale.a = Rational(-1);
      const SpinorMatrix scale_op = weighted_rep(lrep, Rational(0), scale).op;
      for (std::size_t t = 0; t < half; ++t) {
        SpinorVector psi(half, ExactScalar(0));
        psi[t] = ExactScalar(1);
        const SpinorVector emb = embed_horizontal_spinor(lrep, psi);
        const SpinorVector image = scale_op.apply(emb);
        ++checked;
        for (std::size_t c = 0; c < dim; ++c)
          if (!(image[c] == ExactScalar(2) * emb[c])) {
            ++failures;
            break;
          }
      }
      // translation part: X = e_k kills psi x u(+1) and maps psi x u(-1)
      // to sqrt2 (G_k psi) x u(+1)
      for (unsigned k = 1; k <= n; ++k) {
        COElement tr(n);
        tr.X[k - 1] = Rational(1);
        const SpinorMatrix op = weighted_rep(lrep, Rational(0), tr).op;
        for (std::size_t t = 0; t < half; ++t) {
          SpinorVector psi(half, ExactScalar(0));
          psi[t] = ExactScalar(1);
          ++checked;
          if (!all_zero(op.apply(embed_horizontal_spinor(lrep, psi)))) {
            ++failures;
            continue;
          }
          SpinorVector from_minus(dim, ExactScalar(0));
          for (std::size_t c = 0; c < half; ++c) from_minus[2 * c + 1] = psi[c];
          const SpinorVector image = op.apply(from_minus);
          const auto [plus, minus] = horizontal_components(lrep, image);
          const SpinorVector gk = hrep.gamma(k).apply(psi);
          bool ok = all_zero(minus);
          for (std::size_t c = 0; c < half && ok; ++c)
            ok = plus[c] == ExactScalar::sqrt2() * gk[c];
          if (!ok) ++failures;
        }
      }
    }
    r.status = failures == 0 ? Status::kPass : Status::kFail;
    r.detail = json{{"identities_checked", checked}, {"failures", failures}};
    rep.add(std::move(r));
  }

  {  // catalog dimension table
    Record r;
    r.name = "dimension-table";
    r.rule = "selftest.dimension-table";
    using RH = riemannian::RiemannianHolonomy;
    using catalog::WeylHolonomyVariant;
    std::vector<std::pair<WeylHolonomyVariant, unsigned>> table;
    for (unsigned n : {2u, 3u, 4u})
      if (n + 2 <= config.max_signature)
        table.emplace_back(WeylHolonomyVariant::spinor_w(n, RH::trivial(n), Rational(0)),
                           1u << (n / 2));
    if (6 <= config.max_signature)
      table.emplace_back(WeylHolonomyVariant::spinor_w(4, RH::su(2), Rational(0)), 2);
    if (8 <= config.max_signature)
      table.emplace_back(WeylHolonomyVariant::spinor_w(6, RH::su(3), Rational(0)), 2);
    if (5 <= config.max_signature)
      table.emplace_back(WeylHolonomyVariant::spinor_k(3, RH::trivial(2)), 2);
    if (6 <= config.max_signature)
      table.emplace_back(WeylHolonomyVariant::spinor_k(4, RH::trivial(3)), 4);
    json rows = json::array();
    bool any_fail = false, any_flag = false;
    for (const auto& [variant, expected] : table) {
      const spin::DimensionCheck chk = spin::verify_catalog_dimension(variant);
      const bool ok = chk.computed == expected && chk.matches_predicted;
      if (!ok) any_fail = true;
      if (chk.formula.rules_disagree) any_flag = true;
      rows.push_back(json{{"variant", variant.name()},
                          {"computed", chk.computed},
                          {"expected", expected},
                          {"formula", chk.formula.predicted},
                          {"alternate_rule", chk.formula.alternate},
                          {"parity_rules_disagree", chk.formula.rules_disagree},
                          {"ok", ok}});
    }
    r.status = any_fail ? Status::kFail : any_flag ? Status::kFlagged : Status::kPass;
    r.detail["rows"] = rows;
    if (any_flag)
      r.detail["note"] =
          "parity conventions disagree on the fixed-weight family; the computed "
          "kernels adjudicate (multiplicity 2 for even horizontal dimension)";
    rep.add(std::move(r));
  }

  {  // closed-form agreement on random structures
    Record r;
    r.name = "closed-form-agreement";
    r.rule = "selftest.closed-form-agreement";
    unsigned instances = 0, failures = 0;
    json problems = json::array();
    for (unsigned k = 0; k < config.random_instances; ++k) {
      const unsigned n = 2 + (k % 2);
      const kundt::KundtStructure s = sampling::random_walker(rng, n, 3);
      ++instances;
      const curvature::CompatibilityReport comp = curvature::verify_compatibility(s);
      if (!comp.has_consistent_sign || (!comp.omega_zero && comp.epsilon != -2)) {
        ++failures;
        problems.push_back("compatibility sign drifted on a random instance");
        continue;
      }
      const curvature::RicciDecomposition rd = curvature::ricci_symmetric(s);
      if (!rd.closed_form_ok) {
        ++failures;
        for (const std::string& f : rd.closed_form_failures) problems.push_back(f);
      }
    }
    r.status = failures == 0 ? Status::kPass : Status::kFail;
    r.detail = json{{"instances", instances}, {"failures", problems}};
    rep.add(std::move(r));
  }

  rep.sort_records();
  return rep;
}

}  // namespace weylspin::report
