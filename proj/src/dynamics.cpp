#include "esolow/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace esolow {

namespace {

constexpr double kAlphaMatchTol = 1e-12;

bool is_quadratic_variant(const EnergyParams& params) {
  return std::abs(params.production.alpha - 2.0) <= kAlphaMatchTol;
}

double equality_tol(double root) { return 1e-9 * std::max(1.0, std::abs(root)); }

Stability stability_from_slope(double slope) {
  return slope < 0.0 ? Stability::stable : Stability::unstable;
}

}  // namespace

void EnergyParams::validate() const {
  production.validate();
  if (!(s > 0.0 && s <= 1.0) || !std::isfinite(s))
    throw std::invalid_argument("EnergyParams: s must lie in (0, 1]; s = 1 is demo-only");
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw std::invalid_argument("EnergyParams: delta must be positive and finite");
}

std::vector<std::string> EnergyParams::diagnostics() const {
  std::vector<std::string> notes;
  if (s == 1.0)
    notes.push_back("s = 1 reinvests all output; the model assumes 0 < s < 1 (demo setting)");
  return notes;
}

double net_flow(double E, const EnergyParams& params) {
  params.validate();
  return params.s * energy_production(E, params.production) - params.delta * E;
}

double net_flow_derivative(double E, const EnergyParams& params) {
  const double h = 6e-6 * std::max({std::abs(E), 0.01 * params.production.N2, 1e-8});
  if (E < h) return (net_flow(E + h, params) - net_flow(std::max(E, 0.0), params)) / h;
  return (net_flow(E + h, params) - net_flow(E - h, params)) / (2.0 * h);
}

SteadyStateReport steady_states_quadratic(const EnergyParams& params) {
  params.validate();
  if (!is_quadratic_variant(params))
    throw WrongVariantError(
        "steady_states_quadratic: requires alpha = 2; use steady_states_general");

  const double s = params.s;
  const double delta = params.delta;
  const double N1 = params.production.N1;
  const double N2 = params.production.N2;
  const double C = params.production.C;

  SteadyStateReport report;
  report.roots.push_back({0.0, stability_from_slope(net_flow_derivative(0.0, params))});

  const double disc = s * s * N1 * N1 + 4.0 * C * delta * N2 * (s * N1 - delta * N2);
  report.discriminant = disc;
  const double disc_scale = s * s * N1 * N1 + 4.0 * C * delta * N2 * (s * N1 + delta * N2);

  if (disc > 1e-14 * disc_scale) {
    const double denom = 2.0 * delta * (C + 1.0);
    const double sum = s * N1 + 2.0 * C * delta * N2;
    const double root = std::sqrt(disc);
    const double lo = (sum - root) / denom;
    const double hi = (sum + root) / denom;
    report.roots.push_back({lo, stability_from_slope(net_flow_derivative(lo, params))});
    report.roots.push_back({hi, stability_from_slope(net_flow_derivative(hi, params))});
    report.exists_nontrivial = true;
  } else if (disc >= -1e-14 * disc_scale) {
    // Tangency: the flow touches zero without crossing, so the repeated
    // root is not attracting from below.
    const double repeated = (s * N1 + 2.0 * C * delta * N2) / (2.0 * delta * (C + 1.0));
    report.roots.push_back({repeated, Stability::unstable});
    report.exists_nontrivial = true;
    report.tangency = true;
  }
  return report;
}

SteadyStateReport steady_states_general(const EnergyParams& params, int grid_points) {
  params.validate();
  if (grid_points < 2) throw std::invalid_argument("steady_states_general: grid_points < 2");

  const double N1 = params.production.N1;
  const double N2 = params.production.N2;
  const double e_max = std::max(4.0 * N2, 4.0 * params.s * N1 / params.delta);
  const double e_lo = 1e-9 * N2;
  const double ratio = std::pow(e_max / e_lo, 1.0 / (grid_points - 1));

  SteadyStateReport report;
  report.roots.push_back({0.0, stability_from_slope(net_flow_derivative(0.0, params))});

  std::vector<double> found;
  double x_prev = e_lo;
  double f_prev = net_flow(x_prev, params);
  const Tolerance refine{1e-12, 0.0, 200};
  for (int i = 1; i < grid_points; ++i) {
    const double x = (i == grid_points - 1) ? e_max : e_lo * std::pow(ratio, i);
    const double fx = net_flow(x, params);
    if (f_prev == 0.0) {
      found.push_back(x_prev);
    } else if (fx != 0.0 && (f_prev > 0.0) != (fx > 0.0)) {
      found.push_back(find_root([&](double e) { return net_flow(e, params); },
                                Bracket{x_prev, x}, refine));
    }
    x_prev = x;
    f_prev = fx;
  }
  if (f_prev == 0.0) found.push_back(x_prev);

  std::sort(found.begin(), found.end());
  double last = -1.0;
  for (double root : found) {
    if (last >= 0.0 && root - last <= equality_tol(root)) continue;
    report.roots.push_back({root, stability_from_slope(net_flow_derivative(root, params))});
    last = root;
  }
  report.exists_nontrivial = report.roots.size() > 1;
  return report;
}

SteadyStateReport steady_states(const EnergyParams& params) {
  return is_quadratic_variant(params) ? steady_states_quadratic(params)
                                      : steady_states_general(params);
}

bool existence_condition(const EnergyParams& params) {
  params.validate();
  if (!is_quadratic_variant(params))
    throw WrongVariantError("existence_condition: requires alpha = 2");
  const double sN1 = params.s * params.production.N1;
  const double dN2 = params.delta * params.production.N2;
  return 1.0 + sN1 / (4.0 * params.production.C * dN2) > dN2 / sN1;
}

double eroi(double E, const EnergyParams& params) {
  params.validate();
  if (!(E > 0.0) || !std::isfinite(E))
    throw std::domain_error("eroi: undefined at E <= 0 (no energy expended)");
  return params.s * energy_production(E, params.production) / (params.delta * E);
}

std::optional<std::pair<double, double>> eroi_above(double r, const EnergyParams& params) {
  params.validate();
  if (!(r > 0.0) || !std::isfinite(r))
    throw std::invalid_argument("eroi_above: threshold r must be positive");
  if (!is_quadratic_variant(params))
    throw WrongVariantError("eroi_above: requires alpha = 2; use eroi_above_scan");

  // EROI > r  <=>  r*delta*(C+1)*E^2 - (2*r*delta*C*N2 + s*N1)*E + r*delta*C*N2^2 < 0.
  const double delta = params.delta;
  const double C = params.production.C;
  const double N2 = params.production.N2;
  const double a = r * delta * (C + 1.0);
  const double b = -(2.0 * r * delta * C * N2 + params.s * params.production.N1);
  const double c = r * delta * C * N2 * N2;
  const double disc = b * b - 4.0 * a * c;
  if (disc <= 0.0) return std::nullopt;
  const double q = -0.5 * (b - std::sqrt(disc));  // b < 0, so q > 0
  return std::make_pair(c / q, q / a);
}

std::vector<std::pair<double, double>> eroi_above_scan(double r, const EnergyParams& params,
                                                       double e_max, int grid_points) {
  params.validate();
  if (!(r > 0.0) || !std::isfinite(r))
    throw std::invalid_argument("eroi_above_scan: threshold r must be positive");
  if (!(e_max > 0.0)) throw std::invalid_argument("eroi_above_scan: e_max must be positive");
  if (grid_points < 2) throw std::invalid_argument("eroi_above_scan: grid_points < 2");

  auto excess = [&](double E) { return eroi(E, params) - r; };
  const double e_lo = 1e-9 * std::min(params.production.N2, e_max);
  const double ratio = std::pow(e_max / e_lo, 1.0 / (grid_points - 1));
  const Tolerance refine{1e-12, 0.0, 200};

  std::vector<std::pair<double, double>> intervals;
  double x_prev = e_lo;
  double f_prev = excess(x_prev);
  std::optional<double> open_start;
  if (f_prev > 0.0) open_start = e_lo;
  for (int i = 1; i < grid_points; ++i) {
    const double x = (i == grid_points - 1) ? e_max : e_lo * std::pow(ratio, i);
    const double fx = excess(x);
    if ((f_prev > 0.0) != (fx > 0.0)) {
      const double crossing = find_root(excess, Bracket{x_prev, x}, refine);
      if (fx > 0.0) {
        open_start = crossing;
      } else if (open_start) {
        intervals.emplace_back(*open_start, crossing);
        open_start.reset();
      }
    }
    x_prev = x;
    f_prev = fx;
  }
  if (open_start) intervals.emplace_back(*open_start, e_max);
  return intervals;
}

double neg_closed_form(double E, const EnergyParams& params) {
  params.validate();
  if (!is_quadratic_variant(params) || std::abs(params.production.C - 1.0) > kAlphaMatchTol)
    throw WrongVariantError("neg_closed_form: requires alpha = 2 and C = 1; use neg_general");
  if (!(E >= 0.0) || !std::isfinite(E))
    throw std::domain_error("neg_closed_form: E must be non-negative");
  const double N1 = params.production.N1;
  const double N2 = params.production.N2;
  const double u = E / N2;
  const double log_term = std::log(std::abs(2.0 * u * u - 2.0 * u + 1.0));
  return (params.s * N1 * (N2 * log_term + 2.0 * E) - 2.0 * params.delta * E * E) / 4.0;
}

double neg_general(double e_from, double e_to, const EnergyParams& params) {
  params.validate();
  if (!(e_from >= 0.0) || !(e_to >= 0.0) || !std::isfinite(e_from) || !std::isfinite(e_to))
    throw std::domain_error("neg_general: energies must be non-negative and finite");
  if (e_from == e_to) return 0.0;
  const double lo = std::min(e_from, e_to);
  const double hi = std::max(e_from, e_to);
  const Tolerance quad{1e-12, 0.0, 48};
  const double value = quadrature([&](double e) { return net_flow(e, params); }, lo, hi, quad);
  return e_to >= e_from ? value : -value;
}

Trajectory simulate(double E0, double t_end, const EnergyParams& params,
                    const Tolerance& control) {
  params.validate();
  if (!(E0 >= 0.0) || !std::isfinite(E0))
    throw std::domain_error("simulate: E0 must be non-negative");
  if (!(t_end > 0.0)) throw std::invalid_argument("simulate: t_end must be positive");

  const auto report = steady_states(params);
  auto rhs = [&](double, double e) { return net_flow(std::max(e, 0.0), params); };
  OdePath path = integrate_ode(rhs, E0, 0.0, t_end, control);

  Trajectory trajectory;
  trajectory.t = std::move(path.t);
  trajectory.E = std::move(path.y);
  // Integration jitter around the E = 0 equilibrium is confined to the
  // error-control scale; snap it back onto the invariant manifold.
  for (double& e : trajectory.E)
    if (e < 0.0 && e > -1e3 * control.abs_tol) e = 0.0;
  trajectory.method = TrajectoryMethod::numeric;
  trajectory.regime = classify_regime(E0, report);
  return trajectory;
}

Regime classify_regime(double E0, const SteadyStateReport& report) {
  if (!(E0 >= 0.0) || !std::isfinite(E0))
    throw std::domain_error("classify_regime: E0 must be non-negative");
  for (const auto& root : report.roots)
    if (std::abs(E0 - root.value) <= equality_tol(root.value)) return Regime::at_steady_state;

  std::vector<double> nontrivial;
  for (const auto& root : report.roots)
    if (root.value > 0.0) nontrivial.push_back(root.value);
  if (nontrivial.empty()) return Regime::collapse;
  if (E0 < nontrivial.front()) return Regime::collapse;
  if (nontrivial.size() >= 2 && E0 < nontrivial.back()) return Regime::optimal;
  return Regime::overshoot;
}

double time_of_flight(double e_start, double e_target, const EnergyParams& params) {
  params.validate();
  if (!(e_start >= 0.0) || !(e_target >= 0.0) || !std::isfinite(e_start) ||
      !std::isfinite(e_target))
    throw std::domain_error("time_of_flight: energies must be non-negative and finite");
  if (e_start == e_target) return 0.0;

  const double lo = std::min(e_start, e_target);
  const double hi = std::max(e_start, e_target);
  for (const auto& root : steady_states(params).roots) {
    if (root.value >= lo - equality_tol(root.value) && root.value <= hi + equality_tol(root.value))
      throw DivergenceError("time_of_flight: steady state at E = " + std::to_string(root.value) +
                            " lies inside [" + std::to_string(lo) + ", " + std::to_string(hi) +
                            "]");
  }
  const Tolerance quad{1e-10, 0.0, 48};
  const double value =
      quadrature([&](double e) { return 1.0 / net_flow(e, params); }, lo, hi, quad);
  return e_target >= e_start ? value : -value;
}

namespace {

const double kSqrt46 = std::sqrt(46.0);
const double kImplicitRate = 7.0 * kSqrt46 / 50.0;

}  // namespace

double implicit_lhs(double E) {
  if (!(E > 0.0) || !std::isfinite(E)) throw std::domain_error("implicit_lhs: E must be positive");
  const double numer = 14.0 * E - 12.0 + kSqrt46;
  const double denom = 14.0 * E - 12.0 - kSqrt46;
  const double scale = std::abs(14.0 * E - 12.0) + kSqrt46;
  if (std::abs(numer) <= 1e-9 * scale || std::abs(denom) <= 1e-9 * scale)
    throw SingularityError("implicit_lhs: E = " + std::to_string(E) +
                           " sits at a nontrivial steady state of the reference flow");
  return numer / denom * std::pow(E, -kSqrt46 / 5.0);
}

double implicit_time_offset(double E0) { return std::log(std::abs(implicit_lhs(E0))) / kImplicitRate; }

double implicit_relation(double E, double t, double t0) {
  const double lhs = implicit_lhs(E);
  const double branch = lhs > 0.0 ? 1.0 : -1.0;
  return lhs * std::exp(-kImplicitRate * (t + t0)) - branch;
}

void ClassicParams::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("ClassicParams: alpha must lie in (0, 1)");
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("ClassicParams: s must lie in (0, 1)");
  if (!std::isfinite(n) || !std::isfinite(g) || !std::isfinite(delta))
    throw std::invalid_argument("ClassicParams: rates must be finite");
  if (!(n + g + delta > 0.0))
    throw std::invalid_argument("ClassicParams: n + g + delta must be positive");
}

ClassicSteadyState classic_steady_state(const ClassicParams& params) {
  params.validate();
  const double k_star = std::pow(params.s / (params.n + params.g + params.delta),
                                 1.0 / (1.0 - params.alpha));
  return {k_star, std::pow(k_star, params.alpha)};
}

Trajectory resample(const Trajectory& trajectory, const EnergyParams& params, int points) {
  if (points < 2) throw std::invalid_argument("resample: need at least 2 points");
  if (trajectory.t.size() < 2) throw std::invalid_argument("resample: trajectory too short");

  Trajectory out;
  out.method = trajectory.method;
  out.regime = trajectory.regime;
  out.t.reserve(points);
  out.E.reserve(points);

  const double t0 = trajectory.t.front();
  const double t1 = trajectory.t.back();
  std::size_t seg = 0;
  for (int i = 0; i < points; ++i) {
    const double t = t0 + (t1 - t0) * static_cast<double>(i) / (points - 1);
    while (seg + 2 < trajectory.t.size() && trajectory.t[seg + 1] <= t) ++seg;
    const double ta = trajectory.t[seg];
    const double tb = trajectory.t[seg + 1];
    const double ya = trajectory.E[seg];
    const double yb = trajectory.E[seg + 1];
    const double h = tb - ta;
    const double u = std::clamp((t - ta) / h, 0.0, 1.0);
    const double ma = net_flow(std::max(ya, 0.0), params);
    const double mb = net_flow(std::max(yb, 0.0), params);
    const double u2 = u * u;
    const double u3 = u2 * u;
    const double value = (2.0 * u3 - 3.0 * u2 + 1.0) * ya + (u3 - 2.0 * u2 + u) * h * ma +
                         (-2.0 * u3 + 3.0 * u2) * yb + (u3 - u2) * h * mb;
    out.t.push_back(t);
    out.E.push_back(std::max(value, 0.0));
  }
  return out;
}

}  // namespace esolow
