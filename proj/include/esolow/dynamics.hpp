#pragma once

// Energy accumulation dynamics dE/dt = s*X(E) - delta*E built on the
// single-input production function X: steady states and their stability,
// the existence condition, EROI and net-energy-gain analyses, numeric
// trajectories with regime classification, and the closed-form implicit
// time solution for the reference parameter set.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "esolow/numerics.hpp"
#include "esolow/production.hpp"

namespace esolow {

/// A closed-form shortcut was requested outside its parameter restriction.
class WrongVariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested motion crosses a steady state (infinite travel time).
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation at a singular point of a closed-form relation.
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnergyParams {
  double s;      // invested fraction of output, in (0, 1]; s == 1 is demo-only
  double delta;  // energy depreciation rate
  EnergyProductionParams production;

  void validate() const;
  /// Non-fatal notes, e.g. the s == 1 demo setting.
  std::vector<std::string> diagnostics() const;
};

enum class Stability { stable, unstable };

struct SteadyState {
  double value;
  Stability stability;
};

struct SteadyStateReport {
  std::vector<SteadyState> roots;  // ascending; E = 0 is always present
  bool exists_nontrivial{false};
  std::optional<double> discriminant;  // quadratic closed form only
  bool tangency{false};                // repeated nontrivial root
};

enum class Regime { collapse, optimal, overshoot, at_steady_state };
enum class TrajectoryMethod { closed_form, numeric };

struct Trajectory {
  std::vector<double> t;  // strictly increasing
  std::vector<double> E;  // non-negative
  TrajectoryMethod method{TrajectoryMethod::numeric};
  Regime regime{Regime::at_steady_state};
};

/// F(E) = s*X(E) - delta*E, the net energy flow.
double net_flow(double E, const EnergyParams& params);

/// dF/dE by centered finite differences (one-sided at the E = 0 boundary).
double net_flow_derivative(double E, const EnergyParams& params);

/// Closed-form steady states for alpha = 2, with the discriminant
/// s^2*N1^2 + 4*C*delta*N2*(s*N1 - delta*N2) and stability from the sign of
/// dF/dE. A zero discriminant collapses the pair to one flagged root.
SteadyStateReport steady_states_quadratic(const EnergyParams& params);

/// Steady states for any alpha > 0: sign changes of F bracketed on a
/// geometric grid over (1e-9*N2, max(4*N2, 4*s*N1/delta)] and refined.
SteadyStateReport steady_states_general(const EnergyParams& params, int grid_points = 512);

/// Dispatches to the quadratic closed form when alpha = 2.
SteadyStateReport steady_states(const EnergyParams& params);

/// 1 + s*N1/(4*C*delta*N2) > delta*N2/(s*N1), equivalent to a positive
/// discriminant (alpha = 2 only).
bool existence_condition(const EnergyParams& params);

/// s*X(E) / (delta*E); undefined at E = 0.
double eroi(double E, const EnergyParams& params);

/// Open interval where EROI exceeds r, from the explicit quadratic
/// inequality (alpha = 2 only); empty when the discriminant is negative.
std::optional<std::pair<double, double>> eroi_above(double r, const EnergyParams& params);

/// Grid scan + root refinement of EROI(E) = r for arbitrary alpha; returns
/// the intervals of (0, e_max] where EROI exceeds r.
std::vector<std::pair<double, double>> eroi_above_scan(double r, const EnergyParams& params,
                                                       double e_max, int grid_points = 512);

/// Net energy gain from 0 to E in closed form; requires alpha = 2, C = 1.
double neg_closed_form(double E, const EnergyParams& params);

/// Net energy gain between two energies by quadrature of the net flow.
double neg_general(double e_from, double e_to, const EnergyParams& params);

/// Integrates the energy ODE from E0 and labels the regime of E0.
Trajectory simulate(double E0, double t_end, const EnergyParams& params,
                    const Tolerance& control);

/// Position of E0 relative to the nontrivial steady states; equality is
/// detected within 1e-9*max(1, root).
Regime classify_regime(double E0, const SteadyStateReport& report);

/// Travel time between two energies in the same basin, by quadrature of
/// 1/F. Positive when the flow moves from e_start toward e_target.
double time_of_flight(double e_start, double e_target, const EnergyParams& params);

// Closed-form implicit time solution for the reference parameters
// s = 1, C = 1, N1 = N2 = 1, delta = 0.7, alpha = 2.

/// LHS(E) = (14E - 12 + sqrt(46)) / (14E - 12 - sqrt(46)) * E^(-sqrt(46)/5).
double implicit_lhs(double E);

/// t0 such that the implicit relation vanishes for a trajectory with
/// E(0) = E0.
double implicit_time_offset(double E0);

/// LHS(E) * exp(-(7*sqrt(46)/50)*(t + t0)) minus the branch sign; zero along
/// exact trajectories.
double implicit_relation(double E, double t, double t0);

/// Classic one-sector reduction parameters for dk/dt = s*k^alpha - (n+g+delta)*k.
struct ClassicParams {
  double alpha;  // output elasticity, in (0, 1)
  double s;      // investment rate, in (0, 1)
  double n;      // labor growth
  double g;      // technology growth
  double delta;  // capital depreciation

  void validate() const;
};

struct ClassicSteadyState {
  double k_star;  // capital intensity (s/(n+g+delta))^(1/(1-alpha))
  double y_star;  // output per effective worker, k_star^alpha
};

ClassicSteadyState classic_steady_state(const ClassicParams& params);

/// Resamples a trajectory onto a uniform grid with cubic Hermite segments
/// (slopes from the net flow).
Trajectory resample(const Trajectory& trajectory, const EnergyParams& params, int points);

}  // namespace esolow
