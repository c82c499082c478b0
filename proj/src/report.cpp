#include "effcone/report.hpp"

#include <string>

namespace effcone::report {

namespace {

std::string check_name(CheckKind k) { return k == CheckKind::multiple ? "multiple" : "non_multiple"; }

Json margin_row(const MarginRow& row) {
  return {{"classification", row.classification},
          {"family", std::string(to_string(row.family))},
          {"n", row.n},
          {"check", check_name(row.kind)},
          {"t", row.t},
          {"h0", row.h0},
          {"rhs", row.rhs},
          {"margin", row.margin}};
}

Json gamma_entry(const GammaEntry& e) {
  return {{"family", std::string(to_string(e.family))},
          {"n", e.n},
          {"h0", e.h0},
          {"nu", e.nu},
          {"value", rational(e.value)}};
}

}  // namespace

Json rational(const Rational& x) { return x.str(); }

Json surface(const WeightedSurface& s) {
  return {{"a", s.a()}, {"b", s.b()}, {"c", s.c()}, {"p", s.p()}, {"q", s.q()}};
}

Json classification(const Classification& c) {
  return {{"k", c.k},
          {"branch", std::string(to_string(c.branch))},
          {"m0", c.m0},
          {"family", std::string(to_string(c.family))},
          {"nu0", c.nu0},
          {"gamma_pred", rational(c.gamma_pred)}};
}

Json ehrhart(const EhrhartCoeffs& e, std::int64_t count) {
  return {{"family", std::string(to_string(e.family))},
          {"n", e.n},
          {"c2", rational(e.c2)},
          {"c1", rational(e.c1)},
          {"c0", rational(e.c0)},
          {"value", rational(e.value())},
          {"h0", count},
          {"exact", e.value() == Rational(count)}};
}

Json gamma(const WeightedSurface& s, const GammaSearch& g, std::int64_t n_max) {
  Json witnesses = Json::array();
  for (const auto& w : g.witnesses) witnesses.push_back(gamma_entry(w));
  Json table = Json::array();
  for (const auto& e : g.table) table.push_back(gamma_entry(e));
  return {{"surface", surface(s)},
          {"n_max", n_max},
          {"best", rational(g.best)},
          {"best_approx", g.best.approx()},
          {"witnesses", witnesses},
          {"table", table}};
}

Json reduction(const ReductionChain& chain, std::int64_t u0, const ReductionResult& r) {
  Json steps = Json::array();
  for (const auto& st : r.steps) {
    steps.push_back({{"alpha", st.link.alpha},
                     {"beta", st.link.beta},
                     {"sigma", st.link.sigma},
                     {"t", st.t},
                     {"u", st.u},
                     {"eps_without_delta", rational(st.eps_without_delta)},
                     {"delta_literal", st.delta_literal},
                     {"delta_calibrated", st.delta_calibrated},
                     {"eps", rational(st.eps)}});
  }
  return {{"alpha0", chain.alpha0()},
          {"beta0", chain.beta0()},
          {"u0", u0},
          {"steps", steps},
          {"u_terminal", r.u_terminal},
          {"terminal", rational(r.terminal)},
          {"total", rational(r.total)},
          {"direct", rational(r.direct)},
          {"identity_holds", r.total == r.direct}};
}

Json margin_report(const MarginReport& r) {
  Json classes = Json::array();
  for (const auto& c : r.classifications) classes.push_back(classification(c));
  Json rows = Json::array();
  for (const auto& row : r.rows) rows.push_back(margin_row(row));
  Json failures = Json::array();
  for (const auto& row : r.failures) failures.push_back(margin_row(row));
  return {{"surface", surface(r.surface)},
          {"classifications", classes},
          {"rows", rows},
          {"min_margin", r.min_margin},
          {"failures", failures},
          {"coherent", r.coherent},
          {"gamma_best", rational(r.gamma_best)},
          {"gamma_pred", rational(r.gamma_pred)},
          {"gamma_match", r.gamma_match},
          {"gamma_resolved", r.gamma_resolved},
          {"witness_at_m0", r.witness_at_m0}};
}

Json sweep(const SweepResult& r, std::int64_t n_max) {
  Json reports = Json::array();
  for (const auto& m : r.reports) reports.push_back(margin_report(m));
  Json out = {{"n_max", n_max},
              {"reports", reports},
              {"min_margin", r.min_margin},
              {"failing_surfaces", r.failing_surfaces}};
  out["passing_from_b"] = r.passing_from_b ? Json(*r.passing_from_b) : Json(nullptr);
  return out;
}

Json calibration(const DeltaCalibration& c) {
  Json matrix = Json::array();
  for (int sp = 1; sp >= 0; --sp) {
    for (int lit = 0; lit < 2; ++lit) {
      for (int tru = 0; tru < 2; ++tru) {
        matrix.push_back({{"sigma", sp ? 1 : -1},
                          {"delta_literal", lit},
                          {"delta_true", tru},
                          {"count", c.counts[sp][lit][tru]}});
      }
    }
  }
  Json dis = Json::array();
  for (const auto& d : c.disagreements) {
    dis.push_back({{"alpha0", d.alpha0},
                   {"beta0", d.beta0},
                   {"alpha1", d.alpha1},
                   {"beta1", d.beta1},
                   {"sigma", d.sigma},
                   {"u0", d.u0},
                   {"t1", d.t1},
                   {"u1", d.u1},
                   {"delta_literal", d.delta_literal},
                   {"delta_true", d.delta_true}});
  }
  return {{"beta_max", c.beta_max},
          {"instances", c.instances},
          {"matrix", matrix},
          {"disagreement_count", c.disagreements.size()},
          {"disagreements", dis}};
}

void gamma_csv(std::ostream& os, const GammaSearch& g) {
  os << "family,n,h0,nu,value,witness\n";
  for (const auto& e : g.table) {
    os << to_string(e.family) << ',' << e.n << ',' << e.h0 << ',' << e.nu << ',' << e.value.str()
       << ',' << (e.value == g.best ? 1 : 0) << '\n';
  }
}

void sweep_csv(std::ostream& os, const SweepResult& r) {
  os << "a,b,c,k,branch,family,n,check,t,h0,rhs,margin\n";
  for (const auto& rep : r.reports) {
    for (const auto& row : rep.rows) {
      const Classification& cls = rep.classifications[row.classification];
      os << rep.surface.a() << ',' << rep.surface.b() << ',' << rep.surface.c() << ',' << cls.k
         << ',' << to_string(cls.branch) << ',' << to_string(row.family) << ',' << row.n << ','
         << check_name(row.kind) << ',' << row.t << ',' << row.h0 << ',' << row.rhs << ','
         << row.margin << '\n';
    }
  }
}

void calibration_csv(std::ostream& os, const DeltaCalibration& c) {
  os << "alpha0,beta0,alpha1,beta1,sigma,u0,t1,u1,delta_literal,delta_true\n";
  for (const auto& d : c.disagreements) {
    os << d.alpha0 << ',' << d.beta0 << ',' << d.alpha1 << ',' << d.beta1 << ',' << d.sigma << ','
       << d.u0 << ',' << d.t1 << ',' << d.u1 << ',' << d.delta_literal << ',' << d.delta_true
       << '\n';
  }
}

}  // namespace effcone::report
