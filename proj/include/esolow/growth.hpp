#pragma once

// Growth-system algebra: closed-form exponential and logistic growth
// solutions for (capital, labor, production), the orthogonality condition
// between exponent vectors and growth rates, the monomial invariants those
// define, the coordinate maps between the two systems, and the
// constant-returns exponent formulas.

#include "esolow/numerics.hpp"

namespace esolow {

/// Per-component growth rates of the (K, L, Y) system.
struct GrowthRates {
  double b1;  // capital
  double b2;  // labor
  double b3;  // production

  void validate() const;
};

struct InitialLevels {
  double K0;
  double L0;
  double Y0;

  void validate() const;
};

struct CarryingCapacities {
  double NK;
  double NL;
  double NY;

  void validate() const;
};

/// Exponents (a1, a2, a3) of the monomial K^a1 * L^a2 * Y^a3; all nonzero.
struct ExponentVector {
  double a1;
  double a2;
  double a3;

  void validate() const;
};

/// Cobb-Douglas exponent pair derived from growth rates.
struct CdExponents {
  double alpha;
  double beta;

  bool in_unit_interval() const { return alpha > 0.0 && alpha < 1.0 && beta > 0.0 && beta < 1.0; }
};

/// A (capital, labor, production) triple at one instant.
struct Levels {
  double K;
  double L;
  double Y;
};

/// Componentwise X0 * exp(b*t).
Levels solve_exponential(const GrowthRates& rates, const InitialLevels& init, double t);

/// Componentwise logistic solution N*x0 / (x0 + (N - x0)*exp(-b*t));
/// requires every initial level strictly below its capacity.
Levels solve_logistic(const GrowthRates& rates, const InitialLevels& init,
                      const CarryingCapacities& caps, double t);

/// True iff |a1*b1 + a2*b2 + a3*b3| <= tol.abs_tol.
bool orthogonality_holds(const ExponentVector& a, const GrowthRates& rates, const Tolerance& tol);

/// The labor exponent b3/b2 - alpha*b1/b2 that keeps K^alpha * L^beta an
/// invariant family member for a caller-chosen alpha.
double family_beta(double alpha, const GrowthRates& rates);

/// Ordering b2 < b3 < b1 under which the constant-returns member has both
/// exponents inside (0, 1).
bool constant_returns_admissible(const GrowthRates& rates);

/// alpha = (b2 - b3)/(b2 - b1), beta = (b3 - b1)/(b2 - b1); alpha + beta = 1.
CdExponents constant_returns_exponents(const GrowthRates& rates);

/// K^a1 * L^a2 * Y^a3 for positive levels.
double exponential_invariant(double K, double L, double Y, const ExponentVector& a);

/// The transformed monomial prod (N*x/(N - x))^a for levels strictly inside
/// (0, capacity).
double logistic_invariant(double K, double L, double Y, const ExponentVector& a,
                          const CarryingCapacities& caps);

/// Production implied by the logistic invariant family through
/// (K0, L0, Y0): returns Y0 at the anchor point by construction.
double logistic_production(double K, double L, double alpha, const GrowthRates& rates,
                           const CarryingCapacities& caps, const InitialLevels& init);

/// Forward map x -> N*x/(N + x) taking the logistic system onto the
/// exponential one.
Levels to_exponential_coords(const Levels& levels, const CarryingCapacities& caps);

/// Inverse map x -> N*x/(N - x); requires every level strictly below its
/// capacity.
Levels to_logistic_coords(const Levels& levels, const CarryingCapacities& caps);

}  // namespace esolow
