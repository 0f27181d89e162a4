#pragma once

// Time-series ingestion and growth-rate estimation: log-linear fits of the
// exponential system, nonlinear fits of the logistic system, and the
// production exponents they induce.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "esolow/growth.hpp"

namespace esolow {

struct TimeSeries {
  std::string label;
  std::vector<double> t;      // strictly increasing
  std::vector<double> value;  // positive

  std::size_t size() const { return t.size(); }
  void validate() const;
};

enum class FitMethod { log_linear, nonlinear };

struct FitResult {
  double rate{};                    // growth rate b
  double initial_level{};           // X0
  std::optional<double> capacity;   // carrying capacity N (logistic only)
  double residual_norm{};           // log space for log_linear, value space otherwise
  FitMethod method{FitMethod::log_linear};
  bool capacity_identified{true};   // false once N exceeds 100x the data range
};

/// Loads one named column of a CSV whose first column is `t`.
TimeSeries load_timeseries(const std::filesystem::path& path, const std::string& column);

/// Ordinary least squares on (t, ln value): slope = rate, intercept = ln X0.
FitResult fit_exponential(const TimeSeries& series);

/// Nonlinear least squares of the logistic closed form over (b, ln N, ln X0);
/// initialized from fit_exponential with N = 2*max(value) unless a guess is
/// supplied.
FitResult fit_logistic(const TimeSeries& series,
                       const std::optional<FitResult>& init_guess = std::nullopt);

struct CdDerivation {
  CdExponents exponents;
  GrowthRates rates;
  bool constant_returns_admissible{};  // b2 < b3 < b1
};

/// Constant-returns exponents induced by fitted capital/labor/production
/// growth rates.
CdDerivation derive_cd_exponents(const FitResult& capital, const FitResult& labor,
                                 const FitResult& production);

}  // namespace esolow
