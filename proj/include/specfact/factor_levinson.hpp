#ifndef SPECFACT_FACTOR_LEVINSON_HPP
#define SPECFACT_FACTOR_LEVINSON_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "specfact/trig_poly.hpp"

namespace specfact {

/// Finite-section solution of min over P of integral |1 + P|^2 w, where P
/// ranges over polynomials in e^{ix}, ..., e^{inx}.
struct SzegoSection {
  int n = 0;
  /// Coefficients of 1 + H_n, leading 1, length n + 1.
  std::vector<Complex> predictor;
  /// Reflection coefficients kappa_1..kappa_n.
  std::vector<Complex> reflection;
  /// Prediction errors eps_0..eps_n (eps_p = minimum at order p); nonincreasing.
  std::vector<double> errors;
  /// eps_n = integral |1 + H_n|^2 w.
  double eps = 0.0;
  /// max / min over a 4096-point grid of |1 + H_n|^2 w; tends to 1.
  double flatness = 0.0;
};

/// w_0, ..., w_n: first row of the Hermitian Toeplitz Gram matrix
/// <e^{ijx}, e^{ikx}>_w = w_{k-j}. w must be real.
std::vector<Complex> toeplitz_moments(const TrigPoly& w, int n);

/// Levinson-Durbin recursion on the moments. Throws SingularToeplitz when a
/// reflection coefficient reaches modulus 1 - 1e-12 (or w_0 <= 0).
SzegoSection levinson_solve(std::span<const Complex> moments);

struct SzegoFactor {
  SzegoSection section;
  /// sqrt(eps_n) (1 + H_n)^{-1} re-analyzed on the grid; h_0 = sqrt(eps_n) exactly.
  TrigPoly h;
  double sqrt_eps = 0.0;
  /// Mahler measure of w by trapezoid quadrature (the infinite-section limit of eps_n).
  double mahler_w = 0.0;
  /// eps_n - M(w).
  double gap = 0.0;
  /// max over the grid of |w - |h|^2|.
  double residual = 0.0;
  /// min over the grid of |1 + H_n|.
  double min_abs_predictor = 0.0;
  /// Smallest root modulus of 1 + H_n (>= 1 - 1e-8 for a minimum-phase predictor).
  double min_root_modulus = 0.0;
};

struct LevinsonOptions {
  /// Section order; 0 picks 4 * degree(w) (at least 1).
  int order = 0;
  std::size_t grid = 4096;
  double nonneg_tol = 1e-9;
  double truncation = 1e-10;
};

SzegoFactor szego_factor(const TrigPoly& w, const LevinsonOptions& opts = {});

}  // namespace specfact

#endif  // SPECFACT_FACTOR_LEVINSON_HPP
