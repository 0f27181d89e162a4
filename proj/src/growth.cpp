#include "esolow/growth.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace esolow {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw std::domain_error(std::string(name) + " must be positive and finite");
}

double logistic_component(double x0, double rate, double cap, double t) {
  return cap * x0 / (x0 + (cap - x0) * std::exp(-rate * t));
}

}  // namespace

void GrowthRates::validate() const {
  if (!std::isfinite(b1) || !std::isfinite(b2) || !std::isfinite(b3))
    throw std::invalid_argument("GrowthRates: rates must be finite");
}

void InitialLevels::validate() const {
  require_positive(K0, "InitialLevels: K0");
  require_positive(L0, "InitialLevels: L0");
  require_positive(Y0, "InitialLevels: Y0");
}

void CarryingCapacities::validate() const {
  require_positive(NK, "CarryingCapacities: NK");
  require_positive(NL, "CarryingCapacities: NL");
  require_positive(NY, "CarryingCapacities: NY");
}

void ExponentVector::validate() const {
  if (a1 == 0.0 || a2 == 0.0 || a3 == 0.0 || !std::isfinite(a1) || !std::isfinite(a2) ||
      !std::isfinite(a3))
    throw std::invalid_argument("ExponentVector: components must be finite and nonzero");
}

Levels solve_exponential(const GrowthRates& rates, const InitialLevels& init, double t) {
  rates.validate();
  init.validate();
  return {init.K0 * std::exp(rates.b1 * t), init.L0 * std::exp(rates.b2 * t),
          init.Y0 * std::exp(rates.b3 * t)};
}

Levels solve_logistic(const GrowthRates& rates, const InitialLevels& init,
                      const CarryingCapacities& caps, double t) {
  rates.validate();
  init.validate();
  caps.validate();
  if (!(init.K0 < caps.NK && init.L0 < caps.NL && init.Y0 < caps.NY))
    throw std::domain_error("solve_logistic: initial levels must lie strictly below capacities");
  return {logistic_component(init.K0, rates.b1, caps.NK, t),
          logistic_component(init.L0, rates.b2, caps.NL, t),
          logistic_component(init.Y0, rates.b3, caps.NY, t)};
}

bool orthogonality_holds(const ExponentVector& a, const GrowthRates& rates, const Tolerance& tol) {
  a.validate();
  rates.validate();
  tol.validate();
  return std::abs(a.a1 * rates.b1 + a.a2 * rates.b2 + a.a3 * rates.b3) <= tol.abs_tol;
}

double family_beta(double alpha, const GrowthRates& rates) {
  rates.validate();
  if (rates.b2 == 0.0) throw std::domain_error("family_beta: b2 must be nonzero");
  return rates.b3 / rates.b2 - alpha * rates.b1 / rates.b2;
}

bool constant_returns_admissible(const GrowthRates& rates) {
  rates.validate();
  return rates.b2 < rates.b3 && rates.b3 < rates.b1;
}

CdExponents constant_returns_exponents(const GrowthRates& rates) {
  rates.validate();
  if (rates.b1 == rates.b2)
    throw std::domain_error("constant_returns_exponents: degenerate rates with b1 == b2");
  const double denom = rates.b2 - rates.b1;
  return {(rates.b2 - rates.b3) / denom, (rates.b3 - rates.b1) / denom};
}

double exponential_invariant(double K, double L, double Y, const ExponentVector& a) {
  a.validate();
  require_positive(K, "exponential_invariant: K");
  require_positive(L, "exponential_invariant: L");
  require_positive(Y, "exponential_invariant: Y");
  return std::pow(K, a.a1) * std::pow(L, a.a2) * std::pow(Y, a.a3);
}

double logistic_invariant(double K, double L, double Y, const ExponentVector& a,
                          const CarryingCapacities& caps) {
  a.validate();
  caps.validate();
  require_positive(K, "logistic_invariant: K");
  require_positive(L, "logistic_invariant: L");
  require_positive(Y, "logistic_invariant: Y");
  if (!(K < caps.NK && L < caps.NL && Y < caps.NY))
    throw std::domain_error("logistic_invariant: levels must lie strictly below capacities");
  return std::pow(caps.NK * K / (caps.NK - K), a.a1) *
         std::pow(caps.NL * L / (caps.NL - L), a.a2) *
         std::pow(caps.NY * Y / (caps.NY - Y), a.a3);
}

double logistic_production(double K, double L, double alpha, const GrowthRates& rates,
                           const CarryingCapacities& caps, const InitialLevels& init) {
  caps.validate();
  init.validate();
  require_positive(K, "logistic_production: K");
  require_positive(L, "logistic_production: L");
  if (!(K < caps.NK && L < caps.NL))
    throw std::domain_error("logistic_production: levels must lie strictly below capacities");
  if (!(init.K0 < caps.NK && init.L0 < caps.NL && init.Y0 < caps.NY))
    throw std::domain_error(
        "logistic_production: anchor levels must lie strictly below capacities");
  const double beta = family_beta(alpha, rates);
  const double anchor = std::pow(caps.NK * init.K0 / (caps.NK - init.K0), -alpha) *
                        std::pow(caps.NL * init.L0 / (caps.NL - init.L0), -beta) *
                        (caps.NY * init.Y0 / (caps.NY - init.Y0));
  const double grown = anchor * std::pow(caps.NK * K / (caps.NK - K), alpha) *
                       std::pow(caps.NL * L / (caps.NL - L), beta);
  return caps.NY * grown / (caps.NY + grown);
}

Levels to_exponential_coords(const Levels& levels, const CarryingCapacities& caps) {
  caps.validate();
  require_positive(levels.K, "to_exponential_coords: K");
  require_positive(levels.L, "to_exponential_coords: L");
  require_positive(levels.Y, "to_exponential_coords: Y");
  return {caps.NK * levels.K / (caps.NK + levels.K), caps.NL * levels.L / (caps.NL + levels.L),
          caps.NY * levels.Y / (caps.NY + levels.Y)};
}

Levels to_logistic_coords(const Levels& levels, const CarryingCapacities& caps) {
  caps.validate();
  require_positive(levels.K, "to_logistic_coords: K");
  require_positive(levels.L, "to_logistic_coords: L");
  require_positive(levels.Y, "to_logistic_coords: Y");
  if (!(levels.K < caps.NK && levels.L < caps.NL && levels.Y < caps.NY))
    throw std::domain_error("to_logistic_coords: levels must lie strictly below capacities");
  return {caps.NK * levels.K / (caps.NK - levels.K), caps.NL * levels.L / (caps.NL - levels.L),
          caps.NY * levels.Y / (caps.NY - levels.Y)};
}

}  // namespace esolow
