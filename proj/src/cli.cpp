#include "effcone/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "effcone/ehrhart.hpp"
#include "effcone/families.hpp"
#include "effcone/fracsum.hpp"
#include "effcone/lattice.hpp"
#include "effcone/parallel.hpp"
#include "effcone/report.hpp"
#include "effcone/surface.hpp"
#include "effcone/threshold.hpp"
#include "effcone/verify.hpp"

namespace effcone::cli {

namespace {

using report::Json;

struct Config {
  std::string format = "text";
  std::string output;
  int jobs = 0;

  std::vector<std::string> tri;
  std::string method = "both";
  std::vector<std::string> surfaces;
  std::string family = "B";
  std::int64_t n = 1;
  std::int64_t n_max = 20;
  std::int64_t b = 0;
  std::int64_t p = 0;
  std::string head;
  std::vector<std::string> links;
  int entry = 0;
  std::int64_t k = 0;
  bool c_case = false;
  std::int64_t u0 = 0;
  std::string delta = "calibrated";
  std::int64_t alpha = 1;
  std::int64_t beta = 1;
  int tau = 1;
  std::int64_t count = 1;
  std::string lo, hi;
  std::int64_t b_max = 0;
  std::vector<std::string> family_specs;
  bool pool = false;
  std::int64_t k_max = 6;
  std::int64_t per_side = 3;
  std::int64_t beta_max = 60;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::int64_t parse_int(const std::string& text) {
  const Rational r = Rational::parse(text);
  if (!r.is_integer()) throw PreconditionError("expected an integer, got '" + text + "'");
  return to_int64(r.numerator());
}

std::vector<std::int64_t> parse_ints(const std::string& text, std::size_t expected,
                                     const std::string& what) {
  const auto parts = split(text, ',');
  if (parts.size() != expected) {
    throw PreconditionError(what + " needs " + std::to_string(expected) +
                            " comma-separated integers, got '" + text + "'");
  }
  std::vector<std::int64_t> out;
  for (const auto& p : parts) out.push_back(parse_int(p));
  return out;
}

WeightedSurface parse_surface(const std::string& text) {
  const auto v = parse_ints(text, 3, "--surface");
  return make_surface(v[0], v[1], v[2]);
}

WeightedSurface single_surface(const Config& cfg) {
  if (cfg.surfaces.size() != 1) throw PreconditionError("exactly one --surface a,b,c is required");
  return parse_surface(cfg.surfaces.front());
}

RationalPoint parse_point(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw PreconditionError("a point is 'x,y', got '" + text + "'");
  return {Rational::parse(parts[0]), Rational::parse(parts[1])};
}

unsigned resolve_jobs(int flag) {
  if (flag > 0) return static_cast<unsigned>(flag);
  if (const char* env = std::getenv("EFFCONE_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return default_jobs();
}

// Writes one result in the selected format.
class Emitter {
 public:
  Emitter(const Config& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  void emit(const Json& json, const std::function<void(std::ostream&)>& text,
            const std::function<void(std::ostream&)>& csv = {}) {
    std::ostringstream buf;
    if (cfg_.format == "json") {
      buf << json.dump(2) << '\n';
    } else if (cfg_.format == "csv") {
      if (csv) {
        csv(buf);
      } else {
        buf << "key,value\n";
        for (const auto& [key, value] : json.items()) {
          if (!value.is_structured()) buf << key << ',' << scalar(value) << '\n';
        }
      }
    } else {
      text(buf);
    }
    if (cfg_.output.empty()) {
      out_ << buf.str();
    } else {
      std::ofstream file(cfg_.output);
      if (!file) throw PreconditionError("cannot write " + cfg_.output);
      file << buf.str();
    }
  }

 private:
  static std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

  const Config& cfg_;
  std::ostream& out_;
};

int cmd_count(const Config& cfg, Emitter& em) {
  if (cfg.tri.size() != 3) throw PreconditionError("--tri needs three points x,y");
  const RationalTriangle t{parse_point(cfg.tri[0]), parse_point(cfg.tri[1]), parse_point(cfg.tri[2])};
  Json j = {{"triangle", {cfg.tri[0], cfg.tri[1], cfg.tri[2]}}};
  std::optional<std::int64_t> rowscan, pick;
  if (cfg.method == "rowscan" || cfg.method == "both") rowscan = count_points_rowscan(t);
  if (cfg.method == "pick" || (cfg.method == "both" && is_integral(t) && !is_degenerate(t))) {
    pick = count_points_pick(t);
  }
  if (rowscan) j["rowscan"] = *rowscan;
  if (pick) j["pick"] = *pick;
  const bool agree = !(rowscan && pick) || *rowscan == *pick;
  j["agree"] = agree;
  em.emit(j, [&](std::ostream& os) {
    os << (rowscan ? *rowscan : *pick) << '\n';
    if (!agree) os << "mismatch: rowscan " << *rowscan << " vs pick " << *pick << '\n';
  });
  return agree ? kExitOk : kExitVerificationFailed;
}

int cmd_h0(const Config& cfg, Emitter& em, bool with_nu) {
  const WeightedSurface s = single_surface(cfg);
  const DivisorSpec d{parse_family(cfg.family), cfg.n};
  const std::int64_t h = h0(s, d);
  Json j = {{"surface", report::surface(s)}, {"family", cfg.family}, {"n", cfg.n}, {"h0", h}};
  if (with_nu) j["nu"] = nu_from_h0(h);
  em.emit(j, [&](std::ostream& os) {
    if (with_nu) {
      os << nu_from_h0(h) << '\n';
    } else {
      os << h << '\n';
    }
  });
  return kExitOk;
}

int cmd_ehrhart(const Config& cfg, Emitter& em) {
  const WeightedSurface s = single_surface(cfg);
  const EhrhartCoeffs e = coeffs(s, parse_family(cfg.family), cfg.n);
  const std::int64_t count = h0(s, {e.family, cfg.n});
  const Json j = report::ehrhart(e, count);
  em.emit(j, [&](std::ostream& os) {
    os << s.label() << " family " << to_string(e.family) << " n = " << e.n << '\n'
       << "c2 = " << e.c2 << "\nc1 = " << e.c1 << "\nc0 = " << e.c0 << '\n'
       << "c2 n^2 + c1 n + c0 = " << e.value() << ", lattice count = " << count
       << (e.value() == Rational(count) ? " (exact)" : " (MISMATCH)") << '\n';
  });
  return e.value() == Rational(count) ? kExitOk : kExitVerificationFailed;
}

int cmd_gamma(const Config& cfg, Emitter& em) {
  const WeightedSurface s = single_surface(cfg);
  const GammaSearch g = gamma_search(s, cfg.n_max, resolve_jobs(cfg.jobs));
  em.emit(
      report::gamma(s, g, cfg.n_max),
      [&](std::ostream& os) {
        os << s.label() << " n <= " << cfg.n_max << ": best = " << g.best << '\n';
        for (const auto& w : g.witnesses) {
          os << "  witness " << to_string(w.family) << " n = " << w.n << " h0 = " << w.h0
             << " nu = " << w.nu << '\n';
        }
      },
      [&](std::ostream& os) { report::gamma_csv(os, g); });
  return kExitOk;
}

int cmd_classify(const Config& cfg, Emitter& em) {
  std::int64_t b = cfg.b, p = cfg.p;
  if (!cfg.surfaces.empty()) {
    const WeightedSurface s = single_surface(cfg);
    b = s.b();
    p = s.p();
  }
  const auto classes = classify(b, p);
  Json arr = Json::array();
  for (const auto& c : classes) arr.push_back(report::classification(c));
  const Json j = {{"b", b}, {"p", p}, {"x", Rational(b, -p).str()}, {"classifications", arr}};
  em.emit(j, [&](std::ostream& os) {
    os << "b/(-p) = " << Rational(b, -p) << '\n';
    for (const auto& c : classes) {
      os << "k = " << c.k << " branch " << to_string(c.branch) << ": D0 = " << c.m0 << "*"
         << (c.family == Family::B ? "b" : "c") << "*D_x (family " << to_string(c.family)
         << "), nu0 = " << c.nu0 << ", gamma = " << c.gamma_pred << '\n';
    }
  });
  return kExitOk;
}

int cmd_lower_bound(const Config& cfg, Emitter& em) {
  const WeightedSurface s = single_surface(cfg);
  const Rational bound = lower_bound_small_a(s);
  const std::int64_t nu_az = nu(s, {Family::AZ, 1});
  const bool holds = nu_az >= small_a_nu_bound(s);
  const Json j = {{"surface", report::surface(s)},
                  {"lower_bound", report::rational(bound)},
                  {"nu_bound", small_a_nu_bound(s)},
                  {"nu_az", nu_az},
                  {"holds", holds}};
  em.emit(j, [&](std::ostream& os) {
    os << s.label() << ": gamma_expected >= " << bound << " (nu(a D_z) = " << nu_az
       << ", needs >= " << small_a_nu_bound(s) << ")\n";
  });
  return holds ? kExitOk : kExitVerificationFailed;
}

int cmd_reduce(const Config& cfg, Emitter& em) {
  const auto head = parse_ints(cfg.head, 2, "--head");
  std::vector<ChainLink> links;
  if (cfg.entry != 0) {
    if (!cfg.links.empty()) throw PreconditionError("use either --link or --entry, not both");
    links = standard_chain(cfg.entry, cfg.k, cfg.c_case);
  } else {
    for (const auto& text : cfg.links) {
      const auto v = parse_ints(text, 3, "--link");
      links.push_back({v[0], v[1], static_cast<int>(v[2])});
    }
  }
  if (cfg.delta != "literal" && cfg.delta != "calibrated") {
    throw PreconditionError("--delta must be literal or calibrated");
  }
  const DeltaPolicy policy = cfg.delta == "literal" ? DeltaPolicy::literal : DeltaPolicy::calibrated;
  const ReductionChain chain(head[0], head[1], links);
  const ReductionResult r = reduce_chain(chain, cfg.u0, policy);
  em.emit(report::reduction(chain, cfg.u0, r), [&](std::ostream& os) {
    os << "F(" << head[1] << ", " << cfg.u0 << ", " << head[0] << ") = " << r.direct << '\n';
    for (const auto& st : r.steps) {
      os << "  -> (" << st.link.alpha << ", " << st.link.beta << ") sigma " << st.link.sigma
         << ": t = " << st.t << ", u = " << st.u << ", eps = " << st.eps
         << " (delta literal " << st.delta_literal << ", calibrated " << st.delta_calibrated
         << ")\n";
    }
    os << "terminal = " << r.terminal << ", total = " << r.total
       << (r.total == r.direct ? " (identity holds)" : " (identity FAILS)") << '\n';
  });
  return r.total == r.direct ? kExitOk : kExitVerificationFailed;
}

int cmd_family(const Config& cfg, Emitter& em) {
  FamilyRequest req;
  req.alpha = cfg.alpha;
  req.beta = cfg.beta;
  req.tau = cfg.tau;
  req.count = cfg.count;
  if (!cfg.lo.empty() || !cfg.hi.empty()) {
    if (cfg.lo.empty() || cfg.hi.empty()) throw PreconditionError("--lo and --hi go together");
    req.interval_filter = ClosedInterval{Rational::parse(cfg.lo), Rational::parse(cfg.hi)};
  }
  if (cfg.b_max > 0) req.b_max = cfg.b_max;
  const auto surfaces = solve_family(req);
  Json arr = Json::array();
  for (const auto& s : surfaces) {
    Json item = report::surface(s);
    item["x"] = Rational(s.b(), -s.p()).str();
    arr.push_back(item);
  }
  em.emit(
      Json{{"alpha", cfg.alpha}, {"beta", cfg.beta}, {"tau", cfg.tau}, {"surfaces", arr}},
      [&](std::ostream& os) {
        for (const auto& s : surfaces) os << s.label() << "  b/(-p) = " << Rational(s.b(), -s.p()) << '\n';
      },
      [&](std::ostream& os) {
        os << "a,b,c,p,q\n";
        for (const auto& s : surfaces) {
          os << s.a() << ',' << s.b() << ',' << s.c() << ',' << s.p() << ',' << s.q() << '\n';
        }
      });
  return kExitOk;
}

int cmd_verify(const Config& cfg, Emitter& em) {
  std::vector<WeightedSurface> surfaces;
  for (const auto& text : cfg.surfaces) surfaces.push_back(parse_surface(text));
  for (const auto& spec : cfg.family_specs) {
    const auto v = parse_ints(spec, 4, "--family-request");
    FamilyRequest req;
    req.alpha = v[0];
    req.beta = v[1];
    req.tau = static_cast<int>(v[2]);
    req.count = v[3];
    for (auto& s : solve_family(req)) surfaces.push_back(s);
  }
  if (cfg.pool) {
    for (const auto& m : theorem_pool(cfg.k_max, cfg.b_max > 0 ? cfg.b_max : 400, cfg.per_side)) {
      surfaces.push_back(m.surface);
    }
  }
  const SweepResult r = sweep(surfaces, cfg.n_max, resolve_jobs(cfg.jobs));
  em.emit(
      report::sweep(r, cfg.n_max),
      [&](std::ostream& os) {
        for (const auto& rep : r.reports) {
          os << rep.surface.label() << ": min margin " << rep.min_margin << ", gamma "
             << rep.gamma_best << (rep.gamma_match ? " = " : " != ") << rep.gamma_pred
             << (rep.gamma_resolved ? "" : " (m0 beyond n-max)") << (rep.passed() ? "  ok" : "  FAIL") << '\n';
          for (const auto& f : rep.failures) {
            os << "    family " << to_string(f.family) << " n = " << f.n << ": h0 = " << f.h0
               << ", rhs = " << f.rhs << ", margin = " << f.margin << '\n';
          }
        }
        os << r.reports.size() << " surfaces, " << r.failing_surfaces << " failing, min margin "
           << r.min_margin << '\n';
      },
      [&](std::ostream& os) { report::sweep_csv(os, r); });
  return r.failing_surfaces == 0 ? kExitOk : kExitVerificationFailed;
}

int cmd_calibrate(const Config& cfg, Emitter& em) {
  const DeltaCalibration c = calibrate_delta(cfg.beta_max);
  em.emit(
      report::calibration(c),
      [&](std::ostream& os) {
        os << c.instances << " instances with beta0 <= " << c.beta_max << '\n';
        for (int sp = 1; sp >= 0; --sp) {
          for (int lit = 0; lit < 2; ++lit) {
            for (int tru = 0; tru < 2; ++tru) {
              os << "  sigma " << (sp ? "+1" : "-1") << " literal " << lit << " true " << tru
                 << ": " << c.counts[sp][lit][tru] << '\n';
            }
          }
        }
        os << c.disagreements.size() << " disagreements\n";
      },
      [&](std::ostream& os) { report::calibration_csv(os, c); });
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Lattice-count and expected-threshold toolkit for weighted projective planes",
               "effcone"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output", cfg.output, "Write the result to this file");
  app.add_option("--jobs", cfg.jobs, "Worker threads (default: EFFCONE_JOBS or all cores)");

  auto* count = app.add_subcommand("count", "Lattice points in a rational triangle");
  count->add_option("--tri", cfg.tri, "Three vertices x,y (rationals as n or n/d)")
      ->expected(3)
      ->required();
  count->add_option("--method", cfg.method, "rowscan, pick or both")
      ->check(CLI::IsMember({"rowscan", "pick", "both"}));

  auto add_divisor = [&](CLI::App* sub) {
    sub->add_option("--surface", cfg.surfaces, "Weights a,b,c")->required();
    sub->add_option("--family", cfg.family, "B, C or AZ");
    sub->add_option("--n", cfg.n, "Multiple n");
  };
  auto* h0_cmd = app.add_subcommand("h0", "Sections of n*delta*D");
  add_divisor(h0_cmd);
  auto* nu_cmd = app.add_subcommand("nu", "nu(D) from h0");
  add_divisor(nu_cmd);
  auto* ehr = app.add_subcommand("ehrhart", "Closed-form Ehrhart coefficients and exactness check");
  add_divisor(ehr);

  auto* gamma = app.add_subcommand("gamma", "Expected-threshold search over n <= N");
  gamma->add_option("--surface", cfg.surfaces, "Weights a,b,c")->required();
  gamma->add_option("--n-max", cfg.n_max, "N");

  auto* cls = app.add_subcommand("classify", "Interval classification of b/(-p)");
  cls->add_option("--b", cfg.b, "b");
  cls->add_option("--p", cfg.p, "p (negative)");
  cls->add_option("--surface", cfg.surfaces, "Weights 4,b,c instead of --b/--p");

  auto* lb = app.add_subcommand("lower-bound", "Lower bound for small a");
  lb->add_option("--surface", cfg.surfaces, "Weights a,b,c")->required();

  auto* red = app.add_subcommand("reduce", "Fractional-sum chain reduction trace");
  red->add_option("--head", cfg.head, "alpha0,beta0")->required();
  red->add_option("--link", cfg.links, "alpha,beta,sigma (repeatable)");
  red->add_option("--entry", cfg.entry, "Standard chain entry 1..4 instead of --link");
  red->add_option("--k", cfg.k, "k for --entry");
  red->add_flag("--c-case", cfg.c_case, "Flip the first sign of the standard chain");
  red->add_option("--u0", cfg.u0, "Starting index u0");
  red->add_option("--delta", cfg.delta, "literal or calibrated")
      ->check(CLI::IsMember({"literal", "calibrated"}));

  auto* fam = app.add_subcommand("family", "Surfaces with alpha*b - beta*(-p) = tau");
  fam->add_option("--alpha", cfg.alpha, "alpha")->required();
  fam->add_option("--beta", cfg.beta, "beta")->required();
  fam->add_option("--tau", cfg.tau, "+1 or -1");
  fam->add_option("--count", cfg.count, "Number of surfaces");
  fam->add_option("--lo", cfg.lo, "Filter lower end of b/(-p)");
  fam->add_option("--hi", cfg.hi, "Filter upper end of b/(-p)");
  fam->add_option("--b-max", cfg.b_max, "Stop scanning past this b");

  auto* ver = app.add_subcommand("verify", "Inequality margin sweep");
  ver->add_option("--surface", cfg.surfaces, "Weights 4,b,c (repeatable)");
  ver->add_option("--family-request", cfg.family_specs, "alpha,beta,tau,count (repeatable)");
  ver->add_flag("--pool", cfg.pool, "Add the endpoint pool for k <= --k-max");
  ver->add_option("--k-max", cfg.k_max, "Pool k range");
  ver->add_option("--b-max", cfg.b_max, "Pool b bound (default 400)");
  ver->add_option("--per-side", cfg.per_side, "Pool surfaces per endpoint side");
  ver->add_option("--n-max", cfg.n_max, "Largest n");

  auto* cal = app.add_subcommand("calibrate-delta", "Literal versus true crossing correction");
  cal->add_option("--beta-max", cfg.beta_max, "Largest beta0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  Emitter em(cfg, out);
  try {
    if (*count) return cmd_count(cfg, em);
    if (*h0_cmd) return cmd_h0(cfg, em, false);
    if (*nu_cmd) return cmd_h0(cfg, em, true);
    if (*ehr) return cmd_ehrhart(cfg, em);
    if (*gamma) return cmd_gamma(cfg, em);
    if (*cls) return cmd_classify(cfg, em);
    if (*lb) return cmd_lower_bound(cfg, em);
    if (*red) return cmd_reduce(cfg, em);
    if (*fam) return cmd_family(cfg, em);
    if (*ver) return cmd_verify(cfg, em);
    if (*cal) return cmd_calibrate(cfg, em);
  } catch (const DeltaModelViolation& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  err << "error: no subcommand\n";
  return kExitInvalidInput;
}

}  // namespace effcone::cli
