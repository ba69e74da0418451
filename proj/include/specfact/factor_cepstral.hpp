#ifndef SPECFACT_FACTOR_CEPSTRAL_HPP
#define SPECFACT_FACTOR_CEPSTRAL_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "specfact/ap_func.hpp"
#include "specfact/arch_order.hpp"
#include "specfact/trig_poly.hpp"

namespace specfact {

/// Regularization / smoothing schedule.
///
/// Stage i factors fejer_smooth(w, n_i) + 1/m_i. The m schedule is
/// 10, 100, ... up to m_max (m_max = 0: no regularization); the n schedule is
/// n_max/8, n_max/4, n_max/2, n_max (n_max = 0: no smoothing). The shorter
/// schedule is padded with its last entry.
struct Ladder {
  double m_max = 0.0;
  int n_max = 0;
};

struct LadderStage {
  /// 0 means no regularization term.
  double m = 0.0;
  /// 0 means no smoothing.
  int n = 0;
  double grid_min = 0.0;
  /// L2 distance to the previous stage's factor (0 for the first stage).
  double l2_delta = 0.0;
  /// min over the grid of |h_stage|.
  double min_abs_h = 0.0;
  /// Largest coefficient of 1/h_stage on the wrong side of the order, relative to its largest coefficient.
  double inverse_leak = 0.0;
  /// min_abs_h > 0 and inverse_leak <= 1e-8.
  bool invertible_certified = false;
};

struct CepstralOptions {
  std::size_t grid = 1024;
  Ladder ladder{};
  /// Input rejected as NotNonnegative when its grid minimum is below -nonneg_tol.
  double nonneg_tol = 1e-9;
  /// Coefficients of h below truncation * max|h_k| are dropped.
  double truncation = 1e-10;
  /// Aliasing limit: energy within two bins of Nyquist over total energy.
  double nyquist_energy = 1e-8;
};

/// Result of the exp-of-analytic-transform construction.
template <class Poly>
struct CepstralTrace {
  /// Samples of u = log(w_stage) / 2 for the final stage (row-major on the torus).
  std::vector<double> u;
  /// Coefficients of v = A(u) resolvable on the grid.
  Poly v;
  /// The factor after truncation.
  Poly h;
  std::vector<LadderStage> ladder;
  /// max over the grid of |w - |h|^2| against the unregularized input.
  double residual = 0.0;
  /// True when successive l2 deltas strictly decrease.
  bool ladder_monotone = true;
};

struct Containment {
  /// max |theta_hat| over the spectrum of w.
  double tau = 0.0;
  double min_freq = 0.0;
  double max_freq = 0.0;
  /// min(min_freq, tau - max_freq): negative when the spectrum leaves [0, tau].
  double margin = 0.0;
};

struct OrderedTrace : CepstralTrace<BivarPoly> {
  Containment containment;
  /// The factor moved to the line through the order.
  APFunc lifted;
};

CepstralTrace<TrigPoly> cepstral_factor_circle(const TrigPoly& w, const CepstralOptions& opts = {});

/// Same construction on an N x N torus grid with A defined by the order.
OrderedTrace cepstral_factor_ordered(const BivarPoly& w, const ArchOrder& ord, const CepstralOptions& opts = {});

/// Stage list expanded from a Ladder.
std::vector<LadderStage> expand_ladder(const Ladder& ladder);

struct HerglotzValue {
  Complex value;
  std::size_t samples = 0;
  /// Quadrature nodes at exact zeros of w that were moved by half a step.
  int nudged = 0;
};

/// exp of the Herglotz integral of log(w)/2 at radius r = 1 - 1/n:
/// (1/2pi) integral (e^{it} + r z) / (e^{it} - r z) log(w(t))/2 dt by the
/// trapezoid rule on at least 64 n nodes.
HerglotzValue herglotz_factor(const TrigPoly& w, Complex z, int n);

struct WienerCheck {
  double norm = 0.0;
  double exp_norm = 0.0;
  /// exp(norm)
  double bound = 0.0;
  bool holds = false;
};

/// ||exp f||_A against exp ||f||_A, with exp f computed on a grid.
WienerCheck wiener_norm_check(const TrigPoly& f);
WienerCheck wiener_norm_check(const BivarPoly& f);

}  // namespace specfact

#endif  // SPECFACT_FACTOR_CEPSTRAL_HPP
