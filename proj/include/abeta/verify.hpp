#ifndef ABETA_VERIFY_HPP
#define ABETA_VERIFY_HPP

// Monte-Carlo verification of the A_beta inequalities.
//
// Members of A_beta are generated from Caratheodory functions p with
// beta f(z)/z + (1 - beta) f'(z) = p(z). Finite atomic Herglotz measures
// mu = sum_j w_j delta_{theta_j} give p(z) = sum_j w_j (1 + e^{i theta_j} z) /
// (1 - e^{i theta_j} z), i.e. c_n = 2 sum_j w_j e^{i n theta_j}; rational p are
// used for the extremal functions that are not atomic.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "abeta/beta.hpp"
#include "abeta/bounds.hpp"
#include "abeta/errors.hpp"
#include "abeta/extremal.hpp"
#include "abeta/parallel.hpp"
#include "abeta/radii.hpp"
#include "abeta/series.hpp"

namespace abeta {

// ---------------------------------------------------------------------------
// Random numbers

/// SplitMix64; fully specified, so sampled members are identical on every
/// platform and standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  SplitMix64 a(seed);
  SplitMix64 b(a.next() ^ index);
  return b.next();
}

// ---------------------------------------------------------------------------
// Caratheodory sources

struct HerglotzAtom {
  double weight = 0.0;
  double angle = 0.0;  // in [0, 2 pi)

  friend bool operator==(const HerglotzAtom&, const HerglotzAtom&) = default;
};

/// Finite atomic probability measure on the unit circle.
class HerglotzMeasure {
 public:
  explicit HerglotzMeasure(std::vector<HerglotzAtom> atoms) : atoms_(std::move(atoms)) {
    validate();
  }

  /// Unit mass at angle 0: p(z) = (1 + z)/(1 - z), c_n = 2, giving f~.
  static HerglotzMeasure point_mass(double angle = 0.0) {
    return HerglotzMeasure({{1.0, angle}});
  }

  /// Masses 1/2 at 0 and pi: p(z) = (1 + z^2)/(1 - z^2), c_n = 1 + (-1)^n.
  static HerglotzMeasure two_atom_symmetric() {
    return HerglotzMeasure({{0.5, 0.0}, {0.5, std::numbers::pi}});
  }

  const std::vector<HerglotzAtom>& atoms() const noexcept { return atoms_; }

  void validate() const {
    if (atoms_.empty()) throw DomainError("HerglotzMeasure: needs at least one atom");
    double total = 0.0;
    for (const auto& a : atoms_) {
      if (!(a.weight >= 0.0)) throw DomainError("HerglotzMeasure: negative weight");
      if (!(a.angle >= 0.0 && a.angle < 2.0 * std::numbers::pi)) {
        throw DomainError("HerglotzMeasure: angle outside [0, 2 pi)");
      }
      total += a.weight;
    }
    if (std::abs(total - 1.0) > 1e-12) {
      throw DomainError("HerglotzMeasure: weights must sum to 1");
    }
  }

  friend bool operator==(const HerglotzMeasure&, const HerglotzMeasure&) = default;

 private:
  std::vector<HerglotzAtom> atoms_;
};

/// Deterministic measure with `num_atoms` atoms: weights uniform on the
/// simplex (normalized exponentials), angles uniform on [0, 2 pi).
inline HerglotzMeasure sample_measure(int num_atoms, std::uint64_t seed) {
  if (num_atoms < 1) throw DomainError("sample_measure: num_atoms must be >= 1");
  SplitMix64 rng(seed);
  std::vector<HerglotzAtom> atoms(static_cast<std::size_t>(num_atoms));
  double total = 0.0;
  for (auto& a : atoms) {
    a.weight = -std::log1p(-rng.uniform());
    a.angle = 2.0 * std::numbers::pi * rng.uniform();
    total += a.weight;
  }
  if (!(total > 0.0)) {
    for (auto& a : atoms) a.weight = 1.0;
    total = static_cast<double>(num_atoms);
  }
  for (auto& a : atoms) a.weight /= total;
  return HerglotzMeasure(std::move(atoms));
}

/// p = num/den for polynomials with num(0) = den(0) = 1.
struct RationalCaratheodory {
  std::vector<cplx> numerator;
  std::vector<cplx> denominator;

  friend bool operator==(const RationalCaratheodory&, const RationalCaratheodory&) = default;
};

using CaratheodorySource = std::variant<HerglotzMeasure, RationalCaratheodory>;

/// c_0 = 1, c_n = 2 sum_j w_j e^{i n theta_j}.
inline ComplexSeries measure_to_caratheodory(const HerglotzMeasure& mu, std::size_t order) {
  ComplexSeries c(order);
  c[0] = 1.0;
  for (const auto& atom : mu.atoms()) {
    for (std::size_t n = 1; n <= order; ++n) {
      c[n] += 2.0 * std::polar(atom.weight, static_cast<double>(n) * atom.angle);
    }
  }
  return c;
}

inline ComplexSeries caratheodory_series(const CaratheodorySource& src, std::size_t order) {
  if (const auto* mu = std::get_if<HerglotzMeasure>(&src)) {
    return measure_to_caratheodory(*mu, order);
  }
  const auto& rat = std::get<RationalCaratheodory>(src);
  return series_div(ComplexSeries::from_polynomial(rat.numerator, order),
                    ComplexSeries::from_polynomial(rat.denominator, order));
}

/// Direct evaluation of p(z) for |z| < 1.
inline cplx evaluate_caratheodory(const CaratheodorySource& src, cplx z) {
  if (const auto* mu = std::get_if<HerglotzMeasure>(&src)) {
    cplx acc{};
    for (const auto& atom : mu->atoms()) {
      const cplx u = std::polar(1.0, atom.angle) * z;
      acc += atom.weight * (1.0 + u) / (1.0 - u);
    }
    return acc;
  }
  const auto& rat = std::get<RationalCaratheodory>(src);
  const auto polyval = [z](const std::vector<cplx>& p) {
    cplx acc{};
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
    return acc;
  };
  return polyval(rat.numerator) / polyval(rat.denominator);
}

// ---------------------------------------------------------------------------
// Class members

/// A member f of A_beta generated by a Caratheodory function.
class ClassMember {
 public:
  ClassMember(BetaParam beta, CaratheodorySource source)
      : beta_(beta), source_(std::move(source)) {}

  /// f~, generated by the unit point mass at angle 0.
  static ClassMember extremal(BetaParam beta) {
    return {beta, HerglotzMeasure::point_mass()};
  }

  /// f(z) = z, generated by p = 1.
  static ClassMember identity(BetaParam beta) {
    return {beta, RationalCaratheodory{{1.0}, {1.0}}};
  }

  /// Generated by (1 + z^2)/(1 - z^2): a_2 = 0, a_3 = 2/(3 - 2 beta).
  static ClassMember two_atom(BetaParam beta) {
    return {beta, HerglotzMeasure::two_atom_symmetric()};
  }

  /// Attains the lower bound -1/sqrt(5 - 6 beta + 2 beta^2) of
  /// |gamma_2| - |gamma_1|: p(z) = (1 - z^2)/(1 - k z + z^2) with
  /// k = 2(2 - beta)/sqrt(5 - 6 beta + 2 beta^2).
  static ClassMember log_lower_extremal(BetaParam beta) {
    const double b = beta.value();
    const double k = 2.0 * (2.0 - b) / std::sqrt(5.0 - 6.0 * b + 2.0 * b * b);
    return {beta, RationalCaratheodory{{1.0, 0.0, -1.0}, {1.0, -k, 1.0}}};
  }

  /// Attains the lower bound -1/sqrt(3(3 - 2 beta)) of |Gamma_2| - |Gamma_1|:
  /// p(z) = (1 + k z + z^2)/(1 - z^2) with k = 2(2 - beta)/sqrt(3(3 - 2 beta)).
  static ClassMember inverse_log_lower_extremal(BetaParam beta) {
    const double b = beta.value();
    const double k = 2.0 * (2.0 - b) / std::sqrt(3.0 * (3.0 - 2.0 * b));
    return {beta, RationalCaratheodory{{1.0, k, 1.0}, {1.0, 0.0, -1.0}}};
  }

  BetaParam beta() const noexcept { return beta_; }
  const CaratheodorySource& source() const noexcept { return source_; }

  /// Taylor series of f up to z^order (f_0 = 0, f_1 = 1).
  ComplexSeries coefficients(std::size_t order) const {
    const std::size_t c_order = order > 0 ? order - 1 : 0;
    return caratheodory_to_member(caratheodory_series(source_, c_order), beta_);
  }

  /// beta f(z)/z + (1 - beta) f'(z), evaluated from the generating function.
  cplx generator_value(cplx z) const { return evaluate_caratheodory(source_, z); }

 private:
  BetaParam beta_;
  CaratheodorySource source_;
};

inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string describe(const CaratheodorySource& src) {
  std::string out;
  if (const auto* mu = std::get_if<HerglotzMeasure>(&src)) {
    out = "measure[";
    for (std::size_t j = 0; j < mu->atoms().size(); ++j) {
      if (j) out += ";";
      out += format_double(mu->atoms()[j].weight) + "@" + format_double(mu->atoms()[j].angle);
    }
    return out + "]";
  }
  const auto& rat = std::get<RationalCaratheodory>(src);
  const auto poly = [](const std::vector<cplx>& p) {
    std::string s;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j) s += ",";
      s += format_double(p[j].real());
      if (p[j].imag() != 0.0) s += (p[j].imag() < 0 ? "" : "+") + format_double(p[j].imag()) + "i";
    }
    return s;
  };
  return "rational[" + poly(rat.numerator) + "/" + poly(rat.denominator) + "]";
}

// ---------------------------------------------------------------------------
// Reports

inline constexpr double kDefaultSlack = 1e-9;

/// Outcome of one inequality check lhs <= rhs.
struct BoundReport {
  std::string inequality_id;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  bool pass = false;
  std::string witness;

  /// lhs - rhs; positive values are violations before slack.
  double excess() const noexcept { return -margin; }
};

inline BoundReport make_report(std::string id, double lhs, double rhs, double slack,
                               std::string witness) {
  BoundReport r;
  r.inequality_id = std::move(id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.pass = r.margin >= -slack;
  r.witness = std::move(witness);
  return r;
}

// ---------------------------------------------------------------------------
// Majorant sums

enum class SchwarzMode {
  Monomial,  // omega_n(z) = z^n
  Damped,    // omega_n(z) = z^n psi(z), psi(z) = (z + 1/2)/(1 + z/2)
};

inline cplx schwarz_damping(SchwarzMode mode, cplx z) {
  if (mode == SchwarzMode::Monomial) return 1.0;
  return (z + 0.5) / (1.0 + 0.5 * z);
}

inline constexpr double kTailTolerance = 1e-13;

/// Smallest order K >= minimum for which the coefficient and area tails past K
/// are below tol for every member of A_beta at radius r.
inline std::size_t certified_order(BetaParam beta, double r, double tol = kTailTolerance,
                                   std::size_t minimum = 64) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("certified_order: r must lie in [0, 1)");
  std::size_t k = std::max<std::size_t>(minimum, 2);
  constexpr std::size_t kCap = 1u << 24;
  while (extremal_tail_bound(static_cast<long>(k), beta, r) > tol ||
         area_tail_bound(static_cast<long>(k), beta, r) > tol) {
    k += k / 2;
    if (k > kCap) throw ConvergenceError("certified_order: radius too close to 1");
  }
  return k;
}

namespace detail {

inline double coefficient_majorant(const ComplexSeries& f, std::size_t from, double r,
                                   double damping) {
  double sum = 0.0;
  double power = std::pow(r, static_cast<double>(from));
  for (std::size_t n = from; n <= f.order(); ++n) {
    sum += std::abs(f[n]) * power;
    power *= r;
  }
  return damping * sum;
}

inline double area_sum(const ComplexSeries& f, double r) {
  double sum = 0.0;
  const double x = r * r;
  double power = x;
  for (std::size_t n = 1; n <= f.order(); ++n) {
    sum += static_cast<double>(n) * std::norm(f[n]) * power;
    power *= x;
  }
  return sum;
}

}  // namespace detail

/// S_r/pi = sum n |a_n|^2 r^{2n} from the member's own coefficients.
inline double normalized_area(const ClassMember& member, double r,
                              double tol = kTailTolerance) {
  const auto f = member.coefficients(certified_order(member.beta(), r, tol));
  return detail::area_sum(f, r);
}

/// |omega_m(z)|^p + sum_{n>=2} |a_n| |omega_n(z)| + F(S_r/pi) at z = r e^{i angle}.
inline double bohr_sum(const ClassMember& member, double r, int m, double p,
                       const AreaFunctional& area, SchwarzMode mode = SchwarzMode::Monomial,
                       double angle = 0.0, double tol = kTailTolerance) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("bohr_sum: r must lie in (0, 1)");
  if (m < 1 || !(p > 0.0)) throw DomainError("bohr_sum: need m >= 1 and p > 0");
  const auto f = member.coefficients(certified_order(member.beta(), r, tol));
  const double damping = std::abs(schwarz_damping(mode, std::polar(r, angle)));
  const double lead = std::pow(std::pow(r, m) * damping, p);
  return lead + detail::coefficient_majorant(f, 2, r, damping) + area(detail::area_sum(f, r));
}

/// |f(omega_m(z))|^p + sum_{n>=N} |a_n| |omega_n(z)| + F(S_r/pi) at z = r e^{i angle}.
inline double rogosinski_sum(const ClassMember& member, double r, int m, double p,
                             int n_start, const AreaFunctional& area,
                             SchwarzMode mode = SchwarzMode::Monomial, double angle = 0.0,
                             double tol = kTailTolerance) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("rogosinski_sum: r must lie in (0, 1)");
  if (m < 1 || !(p > 0.0) || n_start < 1) {
    throw DomainError("rogosinski_sum: need m >= 1, p > 0 and N >= 1");
  }
  const auto f = member.coefficients(certified_order(member.beta(), r, tol));
  const cplx z = std::polar(r, angle);
  const cplx psi = schwarz_damping(mode, z);
  const cplx w = std::pow(z, m) * psi;
  const double lead = std::pow(std::abs(f.evaluate(w)), p);
  return lead + detail::coefficient_majorant(f, static_cast<std::size_t>(n_start), r,
                                             std::abs(psi)) +
         area(detail::area_sum(f, r));
}

// ---------------------------------------------------------------------------
// Checks

struct CheckOptions {
  SchwarzMode mode = SchwarzMode::Monomial;
  int angles = 8;  // z = r e^{2 pi i k / angles}, k = 0..angles-1
  double slack = kDefaultSlack;
};

/// Majorant of the problem's variant at |z| = at, maximized over the angle
/// grid, against the class-level distance bound -f~(-1).
inline BoundReport check_bohr(const ClassMember& member, const RadiusEquation& eq, double at,
                              const CheckOptions& opt = {}) {
  const RadiusProblem& prob = eq.problem();
  if (!(member.beta() == prob.beta)) {
    throw DomainError("check_bohr: member and problem use different beta");
  }
  if (!(at > 0.0 && at < 1.0)) throw DomainError("check_bohr: radius must lie in (0, 1)");
  const int angles = opt.mode == SchwarzMode::Monomial &&
                             prob.variant == RadiusVariant::BohrSchwarz
                         ? 1
                         : std::max(1, opt.angles);
  double worst = -std::numeric_limits<double>::infinity();
  double worst_angle = 0.0;
  for (int k = 0; k < angles; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / angles;
    const double v =
        prob.variant == RadiusVariant::BohrSchwarz
            ? bohr_sum(member, at, prob.m, prob.p, prob.area, opt.mode, angle)
            : rogosinski_sum(member, at, prob.m, prob.p, prob.n_start, prob.area, opt.mode,
                             angle);
    if (v > worst) {
      worst = v;
      worst_angle = angle;
    }
  }
  const std::string id = prob.variant == RadiusVariant::BohrSchwarz ? "bohr" : "rogosinski";
  return make_report(id, worst, -eq.boundary_value(), opt.slack,
                     describe(member.source()) + " r=" + format_double(at) +
                         " angle=" + format_double(worst_angle));
}

inline BoundReport check_bohr(const ClassMember& member, const RadiusProblem& problem,
                              double at, const CheckOptions& opt = {}) {
  return check_bohr(member, RadiusEquation(problem), at, opt);
}

/// |a_n| <= 2/(n - beta(n-1)) for n = 2..n_max.
inline std::vector<BoundReport> check_coefficient_bounds(const ClassMember& member, int n_max,
                                                         double slack = kDefaultSlack) {
  std::vector<BoundReport> out;
  if (n_max < 2) return out;
  const auto f = member.coefficients(static_cast<std::size_t>(n_max));
  const std::string src = describe(member.source());
  for (int n = 2; n <= n_max; ++n) {
    out.push_back(make_report("coefficient_bound", std::abs(f[static_cast<std::size_t>(n)]),
                              extremal_coeff(n, member.beta()), slack,
                              src + " n=" + std::to_string(n)));
  }
  return out;
}

/// Fekete-Szego over mu_grid and both logarithmic-coefficient difference
/// bounds, for the member's a_2 and a_3.
inline std::vector<BoundReport> check_fs_and_log_bounds(const ClassMember& member,
                                                        const std::vector<double>& mu_grid,
                                                        double slack = kDefaultSlack) {
  std::vector<BoundReport> out;
  const auto f = member.coefficients(3);
  const cplx a2 = f[2];
  const cplx a3 = f[3];
  const BetaParam beta = member.beta();
  const std::string src = describe(member.source());
  for (double mu : mu_grid) {
    out.push_back(make_report("fekete_szego", std::abs(a3 - mu * a2 * a2),
                              fekete_szego_bound(mu, beta), slack,
                              src + " mu=" + format_double(mu)));
  }
  const double d = log_coeffs(a2, a3).modulus_difference();
  const BoundPair lb = log_diff_bounds(beta);
  out.push_back(make_report("log_diff_upper", d, lb.upper, slack, src));
  out.push_back(make_report("log_diff_lower", lb.lower, d, slack, src));
  const double di = inverse_log_coeffs(a2, a3).modulus_difference();
  const BoundPair ib = inverse_log_diff_bounds(beta);
  out.push_back(make_report("inv_log_diff_upper", di, ib.upper, slack, src));
  out.push_back(make_report("inv_log_diff_lower", ib.lower, di, slack, src));
  return out;
}

/// -f~(-r) <= |f(z)| <= f~(r) and S_r/pi <= area_majorant(r) on the given radii.
inline std::vector<BoundReport> check_growth_and_area(const ClassMember& member,
                                                      const std::vector<double>& radii,
                                                      int angles = 16,
                                                      double slack = kDefaultSlack) {
  std::vector<BoundReport> out;
  const BetaParam beta = member.beta();
  const std::string src = describe(member.source());
  for (double r : radii) {
    const auto f = member.coefficients(certified_order(beta, r));
    const GrowthEnvelope env = growth_envelope(r, beta);
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (int k = 0; k < angles; ++k) {
      const double v = std::abs(f.evaluate(std::polar(r, 2.0 * std::numbers::pi * k / angles)));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    const std::string at = src + " r=" + format_double(r);
    out.push_back(make_report("growth_upper", hi, env.upper, slack, at));
    out.push_back(make_report("growth_lower", env.lower, lo, slack, at));
    out.push_back(make_report("area_majorant", detail::area_sum(f, r), area_majorant(r, beta),
                              slack, at));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Falsification sweep

struct SweepConfig {
  int samples = 1000;
  int max_atoms = 8;
  std::uint64_t seed = 0;
  int n_max = 20;  // coefficient bound checked for 2 <= n <= n_max
  std::vector<double> mu_grid{-2.0, -1.0, 0.0, 0.5, 1.0, 2.0};
  std::vector<double> growth_radii{0.3, 0.6, 0.9};
  // Radius checks run at (solved radius - radius_offset) for these problems.
  int m = 1;
  double p = 1.0;
  int n_start = 2;
  AreaPolynomial area{};
  double radius_offset = 1e-3;
  CheckOptions check{};
  int refine_iterations = 0;  // coordinate-ascent rounds on the worst witness
  unsigned threads = 1;
};

/// Largest excess lhs - rhs seen for one inequality at one beta.
struct InequalitySummary {
  double beta = 0.0;
  std::string inequality_id;
  std::size_t checks = 0;
  std::size_t violations = 0;
  double max_excess = -std::numeric_limits<double>::infinity();
  std::string witness;

  bool pass() const noexcept { return violations == 0; }
};

struct SweepSummary {
  std::vector<InequalitySummary> rows;  // grid order, then fixed id order

  bool pass() const noexcept {
    return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass(); });
  }
};

inline const std::vector<std::string>& sweep_inequality_ids() {
  static const std::vector<std::string> ids{
      "coefficient_bound",        "fekete_szego",       "log_diff_upper",     "log_diff_lower",
      "inv_log_diff_upper", "inv_log_diff_lower", "growth_upper",   "growth_lower",
      "area_majorant",  "bohr",               "rogosinski"};
  return ids;
}

namespace detail {

struct SweepCell {
  BetaParam beta;
  const SweepConfig* cfg = nullptr;
  std::optional<RadiusEquation> bohr_eq;
  std::optional<RadiusEquation> rogosinski_eq;
  double bohr_at = 0.0;
  double rogosinski_at = 0.0;

  std::vector<BoundReport> evaluate(const ClassMember& member) const {
    const double slack = cfg->check.slack;
    std::vector<BoundReport> out = check_coefficient_bounds(member, cfg->n_max, slack);
    auto append = [&out](std::vector<BoundReport> more) {
      out.insert(out.end(), std::make_move_iterator(more.begin()),
                 std::make_move_iterator(more.end()));
    };
    append(check_fs_and_log_bounds(member, cfg->mu_grid, slack));
    append(check_growth_and_area(member, cfg->growth_radii, 16, slack));
    if (bohr_eq) out.push_back(check_bohr(member, *bohr_eq, bohr_at, cfg->check));
    if (rogosinski_eq) {
      out.push_back(check_bohr(member, *rogosinski_eq, rogosinski_at, cfg->check));
    }
    return out;
  }
};

inline double max_excess_for(const std::vector<BoundReport>& reports, const std::string& id) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& r : reports) {
    if (r.inequality_id == id) worst = std::max(worst, r.excess());
  }
  return worst;
}

/// Coordinate ascent on atom angles and pairwise weight transfers, maximizing
/// the excess of one inequality.
inline std::pair<HerglotzMeasure, double> refine_witness(const SweepCell& cell,
                                                         HerglotzMeasure start,
                                                         const std::string& id, int rounds) {
  const auto objective = [&](const HerglotzMeasure& mu) {
    return max_excess_for(cell.evaluate(ClassMember(cell.beta, mu)), id);
  };
  double best = objective(start);
  double angle_step = 0.25;
  double weight_step = 0.1;
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  for (int round = 0; round < rounds; ++round) {
    bool improved = false;
    const std::size_t k = start.atoms().size();
    for (std::size_t j = 0; j < k; ++j) {
      for (double dir : {1.0, -1.0}) {
        auto atoms = start.atoms();
        atoms[j].angle = std::fmod(atoms[j].angle + dir * angle_step + kTwoPi, kTwoPi);
        HerglotzMeasure trial(std::move(atoms));
        const double v = objective(trial);
        if (v > best) {
          best = v;
          start = std::move(trial);
          improved = true;
        }
      }
      if (k < 2) continue;
      for (double dir : {1.0, -1.0}) {
        auto atoms = start.atoms();
        const std::size_t other = (j + 1) % k;
        const double moved =
            dir > 0 ? std::min(weight_step, atoms[j].weight) : -std::min(weight_step, atoms[other].weight);
        atoms[j].weight -= moved;
        atoms[other].weight += moved;
        HerglotzMeasure trial(std::move(atoms));
        const double v = objective(trial);
        if (v > best) {
          best = v;
          start = std::move(trial);
          improved = true;
        }
      }
    }
    if (!improved) {
      angle_step *= 0.5;
      weight_step *= 0.5;
    }
  }
  return {std::move(start), best};
}

}  // namespace detail

/// Samples `samples` members per beta, checks every implemented inequality and
/// records the worst excess per inequality. Radius inequalities are skipped at
/// beta = 1, where the radius equations are undefined. Cells are independent
/// and may run concurrently; rows are merged in grid order.
inline SweepSummary falsification_sweep(const std::vector<double>& beta_grid,
                                        const SweepConfig& cfg) {
  if (cfg.samples < 0) throw DomainError("falsification_sweep: samples must be >= 0");
  if (cfg.max_atoms < 1) throw DomainError("falsification_sweep: max_atoms must be >= 1");
  std::vector<BetaParam> betas;
  betas.reserve(beta_grid.size());
  for (double b : beta_grid) betas.emplace_back(b);

  std::vector<std::vector<InequalitySummary>> cells(betas.size());
  parallel_for_index(betas.size(), cfg.threads, [&](std::size_t ci) {
    detail::SweepCell cell{betas[ci], &cfg, std::nullopt, std::nullopt, 0.0, 0.0};
    if (!betas[ci].is_one()) {
      RadiusProblem bohr;
      bohr.beta = betas[ci];
      bohr.m = cfg.m;
      bohr.p = cfg.p;
      bohr.area = cfg.area;
      cell.bohr_eq.emplace(bohr);
      cell.bohr_at = solve_radius(*cell.bohr_eq).root - cfg.radius_offset;

      RadiusProblem rog = bohr;
      rog.variant = RadiusVariant::BohrRogosinski;
      rog.n_start = cfg.n_start;
      cell.rogosinski_eq.emplace(rog);
      cell.rogosinski_at = solve_radius(*cell.rogosinski_eq).root - cfg.radius_offset;
      if (!(cell.bohr_at > 0.0)) cell.bohr_eq.reset();
      if (!(cell.rogosinski_at > 0.0)) cell.rogosinski_eq.reset();
    }

    std::vector<InequalitySummary> rows;
    for (const auto& id : sweep_inequality_ids()) {
      if ((id == "bohr" && !cell.bohr_eq) || (id == "rogosinski" && !cell.rogosinski_eq)) {
        continue;
      }
      InequalitySummary row;
      row.beta = betas[ci].value();
      row.inequality_id = id;
      rows.push_back(std::move(row));
    }
    std::vector<std::optional<HerglotzMeasure>> worst_measure(rows.size());

    for (int i = 0; i < cfg.samples; ++i) {
      const std::uint64_t s = mix_seed(cfg.seed, static_cast<std::uint64_t>(i));
      const int atoms = 1 + static_cast<int>(s % static_cast<std::uint64_t>(cfg.max_atoms));
      HerglotzMeasure mu = sample_measure(atoms, s);
      const auto reports = cell.evaluate(ClassMember(betas[ci], mu));
      for (std::size_t k = 0; k < rows.size(); ++k) {
        auto& row = rows[k];
        for (const auto& r : reports) {
          if (r.inequality_id != row.inequality_id) continue;
          ++row.checks;
          if (!r.pass) ++row.violations;
          if (r.excess() > row.max_excess) {
            row.max_excess = r.excess();
            row.witness = "sample=" + std::to_string(i) + " " + r.witness;
            worst_measure[k] = mu;
          }
        }
      }
    }

    if (cfg.refine_iterations > 0) {
      for (std::size_t k = 0; k < rows.size(); ++k) {
        if (!worst_measure[k]) continue;
        auto [mu, value] = detail::refine_witness(cell, *worst_measure[k],
                                                  rows[k].inequality_id, cfg.refine_iterations);
        ++rows[k].checks;
        if (value > cfg.check.slack) ++rows[k].violations;
        if (value > rows[k].max_excess) {
          rows[k].max_excess = value;
          rows[k].witness = "refined " + describe(CaratheodorySource(mu));
        }
      }
    }
    cells[ci] = std::move(rows);
  });

  SweepSummary summary;
  for (auto& c : cells) {
    summary.rows.insert(summary.rows.end(), std::make_move_iterator(c.begin()),
                        std::make_move_iterator(c.end()));
  }
  return summary;
}

}  // namespace abeta

#endif  // ABETA_VERIFY_HPP
