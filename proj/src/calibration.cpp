#include "esolow/calibration.hpp"

#include <algorithm>
#include <cmath>

#include "esolow/csv.hpp"

namespace esolow {

void TimeSeries::validate() const {
  if (t.size() != value.size())
    throw std::invalid_argument("TimeSeries '" + label + "': t/value length mismatch");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!std::isfinite(t[i])) throw std::invalid_argument("TimeSeries '" + label + "': t not finite");
    if (i > 0 && !(t[i] > t[i - 1]))
      throw std::invalid_argument("TimeSeries '" + label + "': t must be strictly increasing");
    if (!(value[i] > 0.0) || !std::isfinite(value[i]))
      throw std::domain_error("TimeSeries '" + label + "': values must be positive");
  }
}

TimeSeries load_timeseries(const std::filesystem::path& path, const std::string& column) {
  const auto table = csv::read_table(path);
  if (table.columns.empty() || table.columns.front() != "t")
    throw csv::ParseError("first column of '" + path.string() + "' must be named 't'", 1);
  const auto index = table.column_index(column);
  if (!index)
    throw std::invalid_argument("column '" + column + "' not found in '" + path.string() + "'");

  TimeSeries series;
  series.label = column;
  series.t.reserve(table.rows.size());
  series.value.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    series.t.push_back(row.front());
    series.value.push_back(row[*index]);
  }
  series.validate();
  return series;
}

namespace {

void require_fit_size(const TimeSeries& series) {
  if (series.size() < 3)
    throw std::invalid_argument("fit on '" + series.label + "': need at least 3 points");
}

}  // namespace

FitResult fit_exponential(const TimeSeries& series) {
  // Degenerate abscissae first: they defeat any slope estimate.
  if (!series.t.empty() &&
      std::all_of(series.t.begin(), series.t.end(),
                  [&](double t) { return t == series.t.front(); }))
    throw RankError("fit_exponential on '" + series.label + "': all t values are equal");
  series.validate();
  require_fit_size(series);

  const auto n = static_cast<Eigen::Index>(series.size());
  Eigen::MatrixXd design(n, 2);
  Eigen::VectorXd log_values(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    design(i, 0) = 1.0;
    design(i, 1) = series.t[i];
    log_values(i) = std::log(series.value[i]);
  }
  const Eigen::Vector2d coef = design.colPivHouseholderQr().solve(log_values);

  FitResult result;
  result.rate = coef(1);
  result.initial_level = std::exp(coef(0));
  result.residual_norm = (design * coef - log_values).norm();
  result.method = FitMethod::log_linear;
  return result;
}

FitResult fit_logistic(const TimeSeries& series, const std::optional<FitResult>& init_guess) {
  series.validate();
  require_fit_size(series);

  const double max_value = *std::max_element(series.value.begin(), series.value.end());
  double rate0, level0, capacity0;
  if (init_guess) {
    rate0 = init_guess->rate;
    level0 = init_guess->initial_level;
    capacity0 = init_guess->capacity.value_or(2.0 * max_value);
  } else {
    const FitResult exp_fit = fit_exponential(series);
    rate0 = exp_fit.rate;
    level0 = exp_fit.initial_level;
    capacity0 = 2.0 * max_value;
  }
  level0 = std::clamp(level0, 1e-12 * max_value, 0.95 * capacity0);

  // Parameterized as (b, ln N, ln X0) so positivity needs no constraints.
  auto model = [](const Eigen::VectorXd& theta, double t) {
    const double b = theta(0);
    const double capacity = std::exp(theta(1));
    const double level = std::exp(theta(2));
    return capacity * level / (level + (capacity - level) * std::exp(-b * t));
  };
  Eigen::VectorXd init(3);
  init << rate0, std::log(capacity0), std::log(level0);

  const Tolerance tol{1e-10, 1e-12, 200};
  const LeastSquaresFit fit = least_squares(model, series.t, series.value, init, tol);

  FitResult result;
  result.rate = fit.params(0);
  result.capacity = std::exp(fit.params(1));
  result.initial_level = std::exp(fit.params(2));
  result.residual_norm = fit.residual_norm;
  result.method = FitMethod::nonlinear;
  result.capacity_identified = *result.capacity <= 100.0 * max_value;
  return result;
}

CdDerivation derive_cd_exponents(const FitResult& capital, const FitResult& labor,
                                 const FitResult& production) {
  const GrowthRates rates{capital.rate, labor.rate, production.rate};
  return {constant_returns_exponents(rates), rates, constant_returns_admissible(rates)};
}

}  // namespace esolow
