#pragma once

// Scalar numerical kernel: bracketed root refinement, adaptive quadrature,
// explicit ODE integration with step-doubling error control, and damped
// Gauss-Newton least squares. All routines are pure functions of their
// arguments and safe to call concurrently.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace esolow {

/// Shared accuracy/iteration budget. abs_tol bounds both residuals and
/// interval widths (same units as the quantity under test).
struct Tolerance {
  double abs_tol{1e-10};
  double rel_tol{0.0};
  int max_iter{100};

  void validate() const {
    if (!(abs_tol > 0.0) || !std::isfinite(abs_tol))
      throw std::invalid_argument("Tolerance: abs_tol must be positive and finite");
    if (!(rel_tol >= 0.0) || !std::isfinite(rel_tol))
      throw std::invalid_argument("Tolerance: rel_tol must be non-negative and finite");
    if (max_iter < 1) throw std::invalid_argument("Tolerance: max_iter must be at least 1");
  }
};

/// Interval [lo, hi] expected to straddle a sign change when used for roots.
struct Bracket {
  double lo;
  double hi;

  void validate() const {
    if (!std::isfinite(lo) || !std::isfinite(hi))
      throw std::invalid_argument("Bracket: endpoints must be finite");
    if (!(lo < hi)) throw std::invalid_argument("Bracket: lo must be strictly below hi");
  }
};

/// The bracket endpoints do not enclose a sign change.
class BracketError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Underdetermined problem or singular normal equations.
class RankError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iteration budget exhausted; carries the best estimate seen so far.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& msg, Eigen::VectorXd best, double residual)
      : std::runtime_error(msg), best_(std::move(best)), residual_(residual) {}

  const Eigen::VectorXd& best() const noexcept { return best_; }
  double residual() const noexcept { return residual_; }

 private:
  Eigen::VectorXd best_;
  double residual_;
};

/// Accepted samples of a scalar initial value problem.
struct OdePath {
  std::vector<double> t;
  std::vector<double> y;
};

/// Step size underflow (typically a finite-time blow-up); carries the
/// trajectory accepted so far.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& msg, OdePath partial)
      : std::runtime_error(msg), partial_(std::move(partial)) {}

  const OdePath& partial() const noexcept { return partial_; }

 private:
  OdePath partial_;
};

namespace detail {

inline Eigen::VectorXd scalar_vec(double x) {
  Eigen::VectorXd v(1);
  v(0) = x;
  return v;
}

template <class F>
double checked_eval(F&& f, double x, const char* who) {
  const double v = f(x);
  if (!std::isfinite(v))
    throw std::domain_error(std::string(who) + ": non-finite function value at x = " +
                            std::to_string(x));
  return v;
}

template <class F>
double rk4_step(F&& f, double t, double y, double h) {
  const double k1 = f(t, y);
  const double k2 = f(t + 0.5 * h, y + 0.5 * h * k1);
  const double k3 = f(t + 0.5 * h, y + 0.5 * h * k2);
  const double k4 = f(t + h, y + h * k3);
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

template <class F>
double adaptive_simpson(F&& f, double a, double fa, double b, double fb, double fm, double whole,
                        double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = checked_eval(f, lm, "quadrature");
  const double frm = checked_eval(f, rm, "quadrature");
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
  if (depth <= 0)
    throw ConvergenceError("quadrature: refinement depth exhausted on [" + std::to_string(a) +
                               ", " + std::to_string(b) + "]",
                           scalar_vec(left + right), std::abs(delta));
  return adaptive_simpson(f, a, fa, m, fm, flm, left, 0.5 * eps, depth - 1) +
         adaptive_simpson(f, m, fm, b, fb, frm, right, 0.5 * eps, depth - 1);
}

}  // namespace detail

/// Refines a bracketed root with Brent-style inverse-quadratic/secant steps
/// and a bisection fallback. Succeeds once |f| drops below
/// max(abs_tol, rel_tol*|f(lo)|) or the bracket narrows below abs_tol.
template <class F>
double find_root(F&& f, Bracket bracket, const Tolerance& tol) {
  bracket.validate();
  tol.validate();

  double a = bracket.lo;
  double b = bracket.hi;
  double fa = detail::checked_eval([&](double x) { return f(x); }, a, "find_root");
  double fb = detail::checked_eval([&](double x) { return f(x); }, b, "find_root");
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0))
    throw BracketError("find_root: no sign change over [" + std::to_string(a) + ", " +
                       std::to_string(b) + "]");

  const double f_goal = std::max(tol.abs_tol, tol.rel_tol * std::abs(fa));
  const double eps = std::numeric_limits<double>::epsilon();

  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 0; iter < tol.max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    // b is the best estimate; the root lies between b and c.
    const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * tol.abs_tol;
    const double xm = 0.5 * (c - b);
    if (std::abs(fb) <= f_goal || fb == 0.0 || std::abs(xm) <= tol1) return b;

    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      // Inverse quadratic interpolation, falling back to the secant step.
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = detail::checked_eval([&](double x) { return f(x); }, b, "find_root");
  }
  throw ConvergenceError("find_root: max_iter exceeded", detail::scalar_vec(b), std::abs(fb));
}

/// Integrates dy/dt = f(t, y) from t_start to t_end with classical RK4 and
/// step-doubling error control; samples are the accepted steps.
template <class F>
OdePath integrate_ode(F&& f, double y0, double t_start, double t_end, const Tolerance& control) {
  control.validate();
  if (!std::isfinite(t_start) || !std::isfinite(t_end) || !(t_end > t_start))
    throw std::invalid_argument("integrate_ode: need finite t_end > t_start");
  if (!std::isfinite(y0)) throw std::invalid_argument("integrate_ode: y0 must be finite");

  OdePath path;
  path.t.push_back(t_start);
  path.y.push_back(y0);

  const double span = t_end - t_start;
  const double h_min = span * 1e-14;
  double t = t_start;
  double y = y0;
  double h = span / 16.0;

  while (t < t_end) {
    const bool final_step = (t_end - t) <= h;
    if (final_step) h = t_end - t;

    int rejections = 0;
    for (;;) {
      const double full = detail::rk4_step(f, t, y, h);
      const double mid = detail::rk4_step(f, t, y, 0.5 * h);
      const double fine = detail::rk4_step(f, t + 0.5 * h, mid, 0.5 * h);
      const double err = std::abs(fine - full) / 15.0;
      const double scale =
          control.abs_tol + control.rel_tol * std::max(std::abs(y), std::abs(fine));
      if (std::isfinite(full) && std::isfinite(fine) && err <= scale) {
        t = final_step && h == t_end - t ? t_end : t + h;
        y = fine;
        path.t.push_back(t);
        path.y.push_back(y);
        if (err < scale / 64.0) h *= 2.0;
        break;
      }
      h *= 0.5;
      if (++rejections > control.max_iter || h < h_min)
        throw IntegrationError(
            "integrate_ode: step size underflow at t = " + std::to_string(t), std::move(path));
    }
  }
  return path;
}

/// Adaptive Simpson quadrature of f over [a, b] (a <= b). Exact for
/// polynomials up to degree three; the error budget is
/// max(abs_tol, rel_tol*|initial estimate|).
template <class F>
double quadrature(F&& f, double a, double b, const Tolerance& tol) {
  tol.validate();
  if (!std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("quadrature: bounds must be finite");
  if (a > b) throw std::invalid_argument("quadrature: need a <= b");
  if (a == b) return 0.0;

  const double fa = detail::checked_eval(f, a, "quadrature");
  const double fb = detail::checked_eval(f, b, "quadrature");
  const double fm = detail::checked_eval(f, 0.5 * (a + b), "quadrature");
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double eps = std::max(tol.abs_tol, tol.rel_tol * std::abs(whole));
  const int max_depth = std::min(tol.max_iter, 48);
  return detail::adaptive_simpson(f, a, fa, b, fb, fm, whole, eps, max_depth);
}

struct LeastSquaresFit {
  Eigen::VectorXd params;
  double residual_norm;  // 2-norm of model(params, t_i) - value_i
  int iterations;
};

/// Damped Gauss-Newton (Levenberg-Marquardt) descent for a scalar model
/// value = model(params, t). Accepted residuals are monotonically
/// non-increasing; the damping factor moves by x10 / x0.1.
template <class Model>
LeastSquaresFit least_squares(Model&& model, std::span<const double> t,
                              std::span<const double> value, const Eigen::VectorXd& init,
                              const Tolerance& tol) {
  tol.validate();
  if (t.size() != value.size())
    throw std::invalid_argument("least_squares: t and value sizes differ");
  const auto n = static_cast<Eigen::Index>(t.size());
  const Eigen::Index p = init.size();
  if (p < 1) throw std::invalid_argument("least_squares: empty parameter vector");
  if (n < p) throw RankError("least_squares: fewer data points than parameters");
  if (!init.allFinite()) throw std::invalid_argument("least_squares: init must be finite");

  auto residuals = [&](const Eigen::VectorXd& params) {
    Eigen::VectorXd r(n);
    for (Eigen::Index i = 0; i < n; ++i) r(i) = model(params, t[i]) - value[i];
    return r;
  };

  Eigen::VectorXd params = init;
  Eigen::VectorXd r = residuals(params);
  if (!r.allFinite())
    throw std::invalid_argument("least_squares: model not finite at the initial guess");
  double ssr = r.squaredNorm();
  double lambda = 1e-3;
  bool ever_accepted = false;
  const double fd_step = std::sqrt(std::numeric_limits<double>::epsilon());

  for (int iter = 1; iter <= tol.max_iter; ++iter) {
    if (ssr <= tol.abs_tol * tol.abs_tol)
      return {params, std::sqrt(ssr), iter - 1};

    // Forward-difference Jacobian of the residual vector.
    Eigen::MatrixXd J(n, p);
    for (Eigen::Index j = 0; j < p; ++j) {
      const double h = fd_step * std::max(1.0, std::abs(params(j)));
      Eigen::VectorXd shifted = params;
      shifted(j) += h;
      for (Eigen::Index i = 0; i < n; ++i)
        J(i, j) = (model(shifted, t[i]) - (r(i) + value[i])) / h;
    }
    if (!J.allFinite()) throw RankError("least_squares: non-finite Jacobian");

    const Eigen::MatrixXd normal = J.transpose() * J;
    const Eigen::VectorXd gradient = J.transpose() * r;

    for (;;) {
      Eigen::MatrixXd damped = normal;
      damped.diagonal().array() += lambda;
      const Eigen::VectorXd step = damped.ldlt().solve(-gradient);
      if (!step.allFinite()) throw RankError("least_squares: singular normal equations");

      const Eigen::VectorXd trial = params + step;
      const Eigen::VectorXd r_trial = residuals(trial);
      const double ssr_trial = r_trial.allFinite()
                                   ? r_trial.squaredNorm()
                                   : std::numeric_limits<double>::infinity();
      if (ssr_trial < ssr) {
        const double improvement = ssr - ssr_trial;
        params = trial;
        r = r_trial;
        ssr = ssr_trial;
        lambda = std::max(lambda * 0.1, 1e-14);
        ever_accepted = true;
        if (improvement <= tol.rel_tol * ssr + tol.abs_tol * tol.abs_tol ||
            step.norm() <= tol.abs_tol * (1.0 + params.norm()))
          return {params, std::sqrt(ssr), iter};
        break;
      }
      lambda *= 10.0;
      if (lambda > 1e12) {
        // No descent direction improves the fit at machine precision: if we
        // ever descended we are at a numerical local minimum.
        if (ever_accepted) return {params, std::sqrt(ssr), iter};
        throw ConvergenceError("least_squares: no descent step from the initial guess", params,
                               std::sqrt(ssr));
      }
    }
  }
  throw ConvergenceError("least_squares: max_iter exceeded", params, std::sqrt(ssr));
}

}  // namespace esolow
