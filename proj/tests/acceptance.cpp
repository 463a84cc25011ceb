// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "abeta/abeta.hpp"
#include "abeta/cli.hpp"
#include "oracles.hpp"

using namespace abeta;

namespace {

/// Collects failures for one criterion.
class Verdict {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }

  void near(double got, double want, double tol, const std::string& what) {
    const double err = std::abs(got - want);
    char buf[160];
    std::snprintf(buf, sizeof buf, " got=%.17g want=%.17g err=%.3g tol=%.3g", got, want, err, tol);
    check(err <= tol, what + buf);
    worst_ = std::max(worst_, err);
  }

  bool ok() const { return failed_ == 0; }
  std::size_t checks() const { return checks_; }
  double worst() const { return worst_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  double worst_ = 0.0;
  std::vector<std::string> failures_;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

RadiusProblem make_problem(RadiusVariant v, double beta, int m, double p, int n_start,
                           std::vector<double> poly) {
  RadiusProblem pr;
  pr.variant = v;
  pr.beta = BetaParam(beta);
  pr.m = m;
  pr.p = p;
  pr.n_start = n_start;
  pr.area = AreaPolynomial(std::move(poly));
  return pr;
}

// 1. Closed forms at beta = 0.
void closed_forms(Verdict& v) {
  const BetaParam zero(0.0);
  v.near(eval_extremal(0.5, zero), 0.886294361119890618, 1e-9, "f~(0.5)");
  v.near(eval_extremal(0.5, zero), oracle::extremal_beta0(0.5), 1e-9, "f~(0.5) log form");
  v.near(extremal_at_minus_one(zero), 1.0 - 2.0 * std::numbers::ln2, 1e-9, "f~(-1)");
  v.near(area_majorant(0.5, zero), -0.75 - 4.0 * std::log(0.75), 1e-9, "area(0.5)");
}

// 2. Series against the hypergeometric representation.
void hypergeometric(Verdict& v) {
  const double betas[] = {0.0, 0.2, 0.35, 0.5};
  const double radii[] = {-0.6, 0.3, 0.85};
  for (double b : betas) {
    for (double r : radii) {
      v.near(eval_extremal(r, BetaParam(b)), oracle::extremal_hypergeometric(r, b), 1e-9,
             "beta=" + fmt(b) + " r=" + fmt(r));
    }
  }
}

// 3. Radius solver over the parameter grid.
void radius_solver(Verdict& v) {
  const std::vector<std::vector<double>> areas{{}, {0.5}, {0.0, 0.25}};
  for (int i = 0; i <= 9; ++i) {
    const double b = 0.1 * i;
    for (int m : {1, 2, 3}) {
      for (double p : {1.0, 2.0}) {
        for (const auto& poly : areas) {
          const RadiusEquation eq(make_problem(RadiusVariant::BohrSchwarz, b, m, p, 1, poly));
          const RootResult res = solve_radius(eq);
          const std::string tag = "beta=" + fmt(b) + " m=" + std::to_string(m) +
                                  " p=" + fmt(p) + " F=" + std::to_string(poly.size());
          v.check(std::abs(res.residual) <= 1e-9, tag + " residual " + fmt(res.residual));
          v.check(eq(res.lo) < 0.0 && eq(res.hi) > 0.0 && res.width() <= kDefaultRadiusTolerance,
                  tag + " bracket");
          if (p == 1.0 && poly.empty()) {
            v.near(res.root, baseline_bohr_radius(BetaParam(b), m).root, 1e-12,
                   tag + " baseline");
          }
        }
      }
    }
  }
  const double root = solve_radius(make_problem(RadiusVariant::BohrSchwarz, 0, 1, 1, 1, {})).root;
  v.near(root, oracle::bohr_radius_beta0(1), 1e-10, "beta=0 m=1 bisection oracle");
  v.near(root, 0.2852, 1e-4, "beta=0 m=1 reference");
}

// 4. The extremal function attains the bound exactly at the radius.
void sharpness(Verdict& v) {
  const auto attain = [&v](const RadiusProblem& pr, const std::string& tag) {
    const RadiusEquation eq(pr);
    const double root = solve_radius(eq).root;
    const ClassMember f = ClassMember::extremal(pr.beta);
    const auto at = check_bohr(f, eq, root);
    v.near(at.lhs, -eq.boundary_value(), 1e-6, tag + " at root");
    const auto above = check_bohr(f, eq, root + 1e-3);
    v.check(above.lhs > above.rhs, tag + " exceeds at root+1e-3");
  };
  for (double b : {0.0, 0.3, 0.6, 0.9}) {
    for (int m : {1, 2}) {
      const std::string base = "beta=" + fmt(b) + " m=" + std::to_string(m);
      attain(make_problem(RadiusVariant::BohrSchwarz, b, m, 1.0, 1, {}), base + " baseline Bohr");
      attain(make_problem(RadiusVariant::BohrSchwarz, b, m, 2.0, 1, {0.5, 0.25}),
             base + " general Bohr");
      for (int n : {1, 2, 3}) {
        attain(make_problem(RadiusVariant::BohrRogosinski, b, m, 1.0, n, {}),
               base + " baseline Rogosinski N=" + std::to_string(n));
        attain(make_problem(RadiusVariant::BohrRogosinski, b, m, 1.5, n, {0.5}),
               base + " general Rogosinski N=" + std::to_string(n));
      }
    }
  }
}

// 5. Monotonicity of the equations and of the roots.
void monotonicity(Verdict& v) {
  for (double b : {0.0, 0.45, 0.9}) {
    for (auto var : {RadiusVariant::BohrSchwarz, RadiusVariant::BohrRogosinski}) {
      for (int m : {1, 3}) {
        const RadiusEquation eq(make_problem(var, b, m, 1.5, 3, {0.5, 0.25}));
        double prev = eq(1e-3);
        bool ok = true;
        for (int i = 2; i <= 999; ++i) {
          const double cur = eq(i * 1e-3);
          ok = ok && cur > prev;
          prev = cur;
        }
        v.check(ok, std::string(variant_name(var)) + " beta=" + fmt(b) + " not increasing");
      }
    }
  }
  for (double b : {0.0, 0.5, 0.8}) {
    for (auto var : {RadiusVariant::BohrSchwarz, RadiusVariant::BohrRogosinski}) {
      const auto root = [&](int m, double p, std::vector<double> poly) {
        return solve_radius(make_problem(var, b, m, p, 2, std::move(poly))).root;
      };
      const std::string tag = std::string(variant_name(var)) + " beta=" + fmt(b);
      v.check(root(1, 1.0, {}) < root(1, 2.0, {}) && root(1, 2.0, {}) < root(1, 3.0, {}),
              tag + " root not increasing in p");
      v.check(root(1, 1.0, {}) < root(2, 1.0, {}) && root(2, 1.0, {}) < root(3, 1.0, {}),
              tag + " root not increasing in m");
      v.check(root(1, 1.0, {0.5}) < root(1, 1.0, {}) &&
                  root(1, 1.0, {1.0}) < root(1, 1.0, {0.5}) &&
                  root(1, 1.0, {0.5, 0.5}) < root(1, 1.0, {0.5}),
              tag + " root not decreasing in lambda");
    }
  }
}

// 6. Closed-form bound tables.
void bound_tables(Verdict& v) {
  v.near(fekete_szego_bound(1.0, BetaParam(0.0)), 2.0 / 3.0, 1e-12, "FS(1, 0)");
  v.near(fekete_szego_bound(-1.0, BetaParam(0.0)), 5.0 / 3.0, 1e-12, "FS(-1, 0)");
  const auto g = log_diff_bounds(BetaParam(0.0));
  v.near(g.lower, -1.0 / std::sqrt(5.0), 1e-12, "gamma lower");
  v.near(g.upper, 1.0 / 3.0, 1e-12, "gamma upper");
  const auto g0 = inverse_log_diff_bounds(BetaParam(0.0));
  v.near(g0.lower, -1.0 / 3.0, 1e-12, "Gamma lower beta=0");
  v.near(g0.upper, 1.0 / 3.0, 1e-12, "Gamma upper beta=0");
  const auto g1 = inverse_log_diff_bounds(BetaParam(1.0));
  v.near(g1.lower, -1.0 / std::sqrt(3.0), 1e-12, "Gamma lower beta=1");
  v.near(g1.upper, 1.0, 1e-12, "Gamma upper beta=1");
}

// 7. The bounds coincide with the lemma reductions.
void pipelines(Verdict& v) {
  for (int i = 0; i <= 20; ++i) {
    const BetaParam beta(0.05 * i);
    const double b = beta.value();
    const std::string tag = "beta=" + fmt(b);
    for (double mu : {-3.0, -1.0, -0.25, 0.0, 0.5, 1.0, 1.2, 2.0, 5.0}) {
      const double vv = mu * (3.0 - 2.0 * b) / ((2.0 - b) * (2.0 - b));
      v.near(fekete_szego_bound(mu, beta), ma_minda_bound(vv) / (3.0 - 2.0 * b), 1e-12,
             tag + " mu=" + fmt(mu));
    }
    const auto lg = psi_pipeline_bounds(log_diff_psi_inputs(beta), beta);
    const auto dg = log_diff_bounds(beta);
    v.near(lg.lower, dg.lower, 1e-12, tag + " gamma lower");
    v.near(lg.upper, dg.upper, 1e-12, tag + " gamma upper");
    const auto li = psi_pipeline_bounds(inverse_log_diff_psi_inputs(beta), beta);
    const auto di = inverse_log_diff_bounds(beta);
    v.near(li.lower, di.lower, 1e-12, tag + " Gamma lower");
    v.near(li.upper, di.upper, 1e-12, tag + " Gamma upper");
  }
}

// 8. Monte-Carlo search finds no violation.
void monte_carlo(Verdict& v) {
  SweepConfig cfg;
  cfg.samples = 1000;
  cfg.max_atoms = 8;
  cfg.seed = 20240611;
  cfg.n_max = 20;
  cfg.mu_grid = {-2.0, -1.0, 0.0, 0.5, 1.0, 2.0};
  cfg.radius_offset = 1e-3;
  cfg.check.slack = 1e-9;
  for (auto mode : {SchwarzMode::Monomial, SchwarzMode::Damped}) {
    for (int m : {1, 2}) {
      cfg.check.mode = mode;
      cfg.m = m;
      cfg.n_start = m + 1;
      cfg.p = m == 1 ? 1.0 : 2.0;
      cfg.area = m == 1 ? AreaPolynomial{} : AreaPolynomial({0.5, 0.25});
      const SweepSummary s = falsification_sweep({0.0, 0.25, 0.5, 0.75}, cfg);
      for (const auto& row : s.rows) {
        v.check(row.checks > 0 && row.violations == 0,
                row.inequality_id + " beta=" + fmt(row.beta) + " violations=" +
                    std::to_string(row.violations) + " max_excess=" + fmt(row.max_excess) +
                    " " + row.witness);
      }
    }
  }
}

// 9. The named presets attain the sharp constants.
void attainment(Verdict& v) {
  for (double b : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const BetaParam beta(b);
    const auto two = check_fs_and_log_bounds(ClassMember::two_atom(beta), {1.0});
    v.near(two[0].lhs, 2.0 / (3.0 - 2.0 * b), 1e-9, "two-atom FS beta=" + fmt(b));
    v.near(two[0].margin, 0.0, 1e-9, "two-atom FS margin beta=" + fmt(b));
    v.near(two[1].lhs, 1.0 / (3.0 - 2.0 * b), 1e-9, "two-atom gamma beta=" + fmt(b));
    v.near(two[1].margin, 0.0, 1e-9, "two-atom gamma margin beta=" + fmt(b));
    for (const auto& r : check_coefficient_bounds(ClassMember::extremal(beta), 20)) {
      v.near(r.margin, 0.0, 1e-9, "point mass " + r.witness);
    }
  }
  for (double b : {0.0, 0.5}) {
    const BetaParam beta(b);
    const auto f = ClassMember::log_lower_extremal(beta).coefficients(3);
    v.near(log_coeffs(f[2], f[3]).modulus_difference(),
           -1.0 / std::sqrt(5.0 - 6.0 * b + 2.0 * b * b), 1e-6, "gamma lower beta=" + fmt(b));
    const auto g = ClassMember::inverse_log_lower_extremal(beta).coefficients(3);
    v.near(inverse_log_coeffs(g[2], g[3]).modulus_difference(),
           -1.0 / std::sqrt(3.0 * (3.0 - 2.0 * b)), 1e-6, "Gamma lower beta=" + fmt(b));
  }
}

// 10. The CLI is deterministic and its sweep schema is fixed.
void cli_determinism(Verdict& v) {
  const auto invoke = [](std::vector<std::string> args, const char* threads) {
    args.insert(args.begin(), "abeta");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code =
        cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err, threads);
    return std::make_pair(code, out.str());
  };
  const std::vector<std::vector<std::string>> runs{
      {"verify", "--beta", "0.5", "--samples", "100", "--atoms", "4", "--seed", "42"},
      {"verify", "--beta-grid", "0:1.01:0.5", "--samples", "50", "--seed", "7", "--format",
       "csv"},
      {"sweep", "--beta-grid", "0:1:0.1", "--m", "1,2", "--p", "1,2", "--N", "1,2,3"},
      {"sweep", "--beta-grid", "0:1:0.25", "--format", "json"},
      {"radius", "--beta", "0", "--m", "1", "--p", "1", "--tol", "1e-10"},
      {"fs-bound", "--beta-grid", "0:1.01:0.25", "--mu-grid", "-2:2.01:0.5"},
      {"log-bounds", "--beta-grid", "0:1.01:0.05", "--format", "json"},
  };
  for (const auto& args : runs) {
    const auto a = invoke(args, "1");
    const auto b = invoke(args, "1");
    const auto c = invoke(args, "3");
    v.check(a.first == 0, args[0] + " exit " + std::to_string(a.first));
    v.check(a.second == b.second && a.second == c.second && !a.second.empty(),
            args[0] + " output differs between runs");
  }
  const auto sweep = invoke({"sweep", "--beta", "0.2"}, "1").second;
  v.check(sweep.substr(0, sweep.find('\n')) == "beta,m,p,N,variant,root,residual,iterations\r",
          "sweep header");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    void (*run)(Verdict&);
  };
  const Criterion criteria[] = {
      {1, "closed-form oracles at beta = 0", closed_forms},
      {2, "hypergeometric representation", hypergeometric},
      {3, "radius solver residual, bracket and baselines", radius_solver},
      {4, "sharpness attained by the extremal function", sharpness},
      {5, "monotonicity of equations and roots", monotonicity},
      {6, "closed-form bound tables", bound_tables},
      {7, "Ma-Minda and Psi pipeline identities", pipelines},
      {8, "Monte-Carlo zero violations", monte_carlo},
      {9, "extremal attainment of the presets", attainment},
      {10, "CLI determinism and sweep schema", cli_determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run(v);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = v.ok() && error.empty();
    failed += !ok;
    std::printf("[%s] criterion %2d: %s (%zu checks, worst error %.3g, %.2fs)\n",
                ok ? "PASS" : "FAIL", c.id, c.name, v.checks(), v.worst(), secs);
    if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
    for (const auto& f : v.failures()) std::printf("    %s\n", f.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
