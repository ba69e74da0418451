#ifndef SPECFACT_FACTOR_ROOTS_HPP
#define SPECFACT_FACTOR_ROOTS_HPP

#include <vector>

#include "specfact/trig_poly.hpp"

namespace specfact {

/// Outer factor h of a nonnegative trigonometric polynomial w = |h|^2.
///
/// h has support in [0, d], H(z) = sum h_k z^k has no zeros in the open disk
/// and H(0) > 0.
struct RootFactorization {
  TrigPoly h;
  /// Roots of H; every one has modulus >= 1 - 1e-8.
  std::vector<Complex> roots;
  /// Constant c in H(z) = c * prod (z - root).
  Complex scale;
  /// max_k |(|h|^2)_k - w_k|.
  double residual = 0.0;
  /// Number of unit-circle root pairs merged into a single root of H.
  int boundary_pairs = 0;
  /// Minimum of w over the screening grid.
  double grid_min = 0.0;
};

struct FejerRieszOptions {
  /// w is rejected as NotNonnegative when its grid minimum is below -nonneg_tol.
  double nonneg_tol = 1e-9;
  /// Roots within this distance of the unit circle are paired with each other.
  double pair_tol = 1e-6;
  /// Apply one Newton step per root of the degree-2d polynomial.
  bool newton = false;
};

/// Fejer-Riesz factorization by root finding on P(z) = z^d w(z).
RootFactorization fejer_riesz(const TrigPoly& w, const FejerRieszOptions& opts = {});

/// Jensen's product: |h_d| prod max(1, |root|), equivalently
/// |h_0| prod max(1/|root|, 1) when h_0 != 0. Requires support in [0, d].
double mahler_jensen(const TrigPoly& h);

struct MahlerQuadrature {
  double value;
  /// Samples whose log|h| was clipped at -700.
  int clipped = 0;
};

/// exp of the trapezoid mean of log|h| over n uniform samples.
MahlerQuadrature mahler_quadrature(const TrigPoly& h, std::size_t n = 1u << 14);

struct OuterDiagnosis {
  /// |M(h) - |h_0|| <= tol (1 + |h_0|).
  bool jensen_outer;
  /// No root of H with modulus < 1 - tol.
  bool roots_outer;
  double mahler;
  double min_root_modulus;
};

OuterDiagnosis diagnose_outer(const TrigPoly& h, double tol = 1e-9);
/// The Jensen criterion of diagnose_outer.
bool is_outer(const TrigPoly& h, double tol = 1e-9);

/// h = inner * outer with |inner| = 1 on the circle.
///
/// The inner factor is inner_num / inner_den; inner_den is {0 -> 1} exactly when
/// h has no roots in the punctured open disk, i.e. when the inner factor is a
/// unimodular multiple of a monomial.
struct InnerOuter {
  TrigPoly outer;
  TrigPoly inner_num;
  TrigPoly inner_den;

  bool inner_is_polynomial() const;
  /// inner_num when the inner factor is a polynomial; throws NonpolynomialInner otherwise.
  TrigPoly inner_polynomial() const;
};

InnerOuter inner_outer_split(const TrigPoly& h);

}  // namespace specfact

#endif  // SPECFACT_FACTOR_ROOTS_HPP
