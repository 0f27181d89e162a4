#include "esolow/production.hpp"

#include <cmath>
#include <stdexcept>

namespace esolow {

namespace {

void require_finite_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw std::invalid_argument(std::string(name) + " must be positive and finite");
}

void require_nonnegative(double v, const char* name) {
  if (!(v >= 0.0) || !std::isfinite(v))
    throw std::domain_error(std::string(name) + " must be non-negative and finite");
}

}  // namespace

void CobbDouglasParams::validate() const {
  require_finite_positive(A, "CobbDouglasParams: A");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("CobbDouglasParams: alpha must lie in (0, 1)");
  if (!(beta > 0.0 && beta < 1.0))
    throw std::invalid_argument("CobbDouglasParams: beta must lie in (0, 1)");
}

void GeneralizedTwoInputParams::validate() const {
  require_finite_positive(NY, "GeneralizedTwoInputParams: NY");
  require_finite_positive(NK, "GeneralizedTwoInputParams: NK");
  require_finite_positive(NL, "GeneralizedTwoInputParams: NL");
  require_finite_positive(C, "GeneralizedTwoInputParams: C");
  require_finite_positive(alpha, "GeneralizedTwoInputParams: alpha");
  require_finite_positive(beta, "GeneralizedTwoInputParams: beta");
}

void EnergyProductionParams::validate() const {
  require_finite_positive(N1, "EnergyProductionParams: N1");
  require_finite_positive(N2, "EnergyProductionParams: N2");
  require_finite_positive(C, "EnergyProductionParams: C");
  require_finite_positive(alpha, "EnergyProductionParams: alpha");
}

void SShapedParams::validate() const {
  require_finite_positive(A, "SShapedParams: A");
  require_finite_positive(B, "SShapedParams: B");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("SShapedParams: p must lie in (0, 1)");
}

double cobb_douglas(double K, double L, const CobbDouglasParams& params) {
  params.validate();
  require_nonnegative(K, "cobb_douglas: K");
  require_nonnegative(L, "cobb_douglas: L");
  return params.A * std::pow(K, params.alpha) * std::pow(L, params.beta);
}

double generalized_two_input(double K, double L, const GeneralizedTwoInputParams& params) {
  params.validate();
  require_nonnegative(K, "generalized_two_input: K");
  require_nonnegative(L, "generalized_two_input: L");
  if (K == 0.0 && L == 0.0) return 0.0;
  const double inputs = std::pow(L, params.alpha) * std::pow(K, params.beta);
  const double slack = params.C * std::pow(std::abs(params.NL - L), params.alpha) *
                       std::pow(std::abs(params.NK - K), params.beta);
  return params.NY * inputs / (slack + inputs);
}

double energy_production(double E, const EnergyProductionParams& params) {
  params.validate();
  require_nonnegative(E, "energy_production: E");
  if (E == 0.0) return 0.0;
  // Written as N1 / (C*|N2/E - 1|^alpha + 1) so large E cannot overflow.
  return params.N1 / (params.C * std::pow(std::abs(params.N2 / E - 1.0), params.alpha) + 1.0);
}

double s_shaped(double K, double L, const SShapedParams& params) {
  params.validate();
  require_nonnegative(K, "s_shaped: K");
  if (!(L > 0.0) || !std::isfinite(L)) throw std::domain_error("s_shaped: L must be positive");
  if (K == 0.0) return 0.0;
  const double ratio = std::pow(K / L, params.p);
  return params.A * ratio * L / (1.0 + params.B * ratio);
}

double two_input_constant_through(double K0, double L0, double Y0,
                                  const GeneralizedTwoInputParams& params) {
  require_finite_positive(K0, "two_input_constant_through: K0");
  require_finite_positive(L0, "two_input_constant_through: L0");
  require_finite_positive(Y0, "two_input_constant_through: Y0");
  if (!(K0 < params.NK && L0 < params.NL && Y0 < params.NY))
    throw std::domain_error("two_input_constant_through: anchor levels must lie below capacities");
  return std::pow(L0, params.alpha) * std::pow(K0, params.beta) * (params.NY - Y0) /
         (Y0 * std::pow(params.NL - L0, params.alpha) * std::pow(params.NK - K0, params.beta));
}

}  // namespace esolow
