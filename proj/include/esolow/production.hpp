#pragma once

// Production functions as pure evaluators: the classic Cobb-Douglas form,
// its logistic-growth two-input generalization, the single-input energy
// variant, and an S-shaped comparison function.

namespace esolow {

/// Y = A * K^alpha * L^beta.
struct CobbDouglasParams {
  double A;      // total factor productivity
  double alpha;  // capital elasticity, in (0, 1)
  double beta;   // labor elasticity, in (0, 1)

  void validate() const;
};

/// Y = NY * L^alpha * K^beta / (C*|NL - L|^alpha * |NK - K|^beta + L^alpha * K^beta).
/// Note the exponent pairing: alpha acts on labor, beta on capital.
struct GeneralizedTwoInputParams {
  double NY;  // production carrying capacity
  double NK;  // capital carrying capacity
  double NL;  // labor carrying capacity
  double C;   // positive shape constant
  double alpha;
  double beta;

  void validate() const;
};

/// X = N1 * E^alpha / (C*|N2 - E|^alpha + E^alpha).
struct EnergyProductionParams {
  double N1;  // production carrying capacity
  double N2;  // energy carrying capacity
  double C;   // positive shape constant
  double alpha;

  void validate() const;
};

/// Y = A * K^p * L^(1-p) / (1 + B * K^p * L^(-p)).
struct SShapedParams {
  double A;
  double B;
  double p;  // in (0, 1)

  void validate() const;
};

double cobb_douglas(double K, double L, const CobbDouglasParams& params);

/// Bounded output in [0, NY]; equals NY exactly at (NK, NL). Inputs beyond
/// the carrying capacities are legal (the absolute values are literal).
double generalized_two_input(double K, double L, const GeneralizedTwoInputParams& params);

/// Single-input variant: X(0) = 0, X(N2) = N1, X -> N1/(C+1) as E -> infinity.
double energy_production(double E, const EnergyProductionParams& params);

double s_shaped(double K, double L, const SShapedParams& params);

/// The C that makes the two-input generalization pass through (K0, L0, Y0)
/// for the given capacities and exponents (with alpha acting on labor).
double two_input_constant_through(double K0, double L0, double Y0,
                                  const GeneralizedTwoInputParams& params);

}  // namespace esolow
