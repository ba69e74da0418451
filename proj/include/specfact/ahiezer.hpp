#ifndef SPECFACT_AHIEZER_HPP
#define SPECFACT_AHIEZER_HPP

#include <optional>
#include <vector>

#include "specfact/ap_func.hpp"

namespace specfact {

/// Rectangle [x_min, x_max] x [y_min, y_max] in the upper half-plane.
struct Box {
  double x_min = -5.0;
  double x_max = 5.0;
  double y_min = 1e-3;
  double y_max = 5.0;
};

/// Entire function F = |h|^2 on the line together with its Ahiezer factor
/// S, F(z) = S(z) conj(S(conj z)), S of exponential type tau / 2.
struct AhiezerPair {
  APFunc F;
  APFunc S;
  double tau = 0.0;
  /// max over the 10 x 10 test grid |Re z| <= 5, |Im z| <= 2 of |F(z) - S(z) conj(S(conj z))|.
  double identity_residual = 0.0;
  /// Spectrum of S inside [-tau/2, tau/2] (within kFreqMergeTol).
  bool spectrum_contained = false;
  /// min over the spectrum of S of tau/2 - |omega|; negative when outside.
  double containment_margin = 0.0;
  /// Zeros of the extension of h inside the box; empty when the contour could not be resolved.
  std::optional<int> upper_zero_count;
};

/// Builds F = h conj(h), tau = exp_type(F) and S = h shifted by -tau/2, so that
/// h(x) = e^{i tau x / 2} S(x). Throws SpectrumNotOneSided unless the spectrum
/// of h is in [0, inf), ZeroFunction for h = 0, TypeMismatch if exp_type(F)
/// differs from bandwidth(F) / 2.
AhiezerPair ahiezer_from_factor(const APFunc& h, const Box& box = {});

/// Winding number of entire_extend(f, .) around 0 along the boundary of the
/// box, by phase increments refined until each is below pi/2. Requires
/// y_min > 0. If |f| <= 1e-8 somewhere on the contour the box is shifted left
/// and stretched in y, up to three times, before ZeroOnContour is thrown.
int upper_halfplane_zero_count(const APFunc& f, const Box& box, int samples = 256);

/// Height above which the extension cannot vanish: for c_0 != 0, the smallest
/// Y with sum_{w > 0} |c_w| e^{-w_min Y} < |c_0|. Requires a spectrum in [0, inf).
/// Returns nullopt when c_0 = 0 (the extension tends to 0 at i infinity).
std::optional<double> zero_free_height(const APFunc& f);

struct ZeroFreeCertificate {
  /// False when no height certificate exists (zero mean) or a zero was found.
  bool zero_free = false;
  int zero_count = 0;
  double y_certified = 0.0;
  std::vector<Box> boxes;
};

/// Zero count over the box family x in [x_min, x_max], y in [y_min, Y],
/// split into bands at y = 1e-3, 1e-1, 1, where Y comes from zero_free_height.
ZeroFreeCertificate certify_zero_free(const APFunc& f, double x_min, double x_max, double y_min = 1e-9);

}  // namespace specfact

#endif  // SPECFACT_AHIEZER_HPP
