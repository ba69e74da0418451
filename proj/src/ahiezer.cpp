#include "specfact/ahiezer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "specfact/error.hpp"

namespace specfact {
namespace {

constexpr double kContourFloor = 1e-8;
constexpr int kMaxBisections = 40;
constexpr int kNudges = 3;

struct ContourFailure {};

class PhaseWalker {
 public:
  explicit PhaseWalker(const APFunc& f) : f_(f) {}

  Complex value(Complex z) const {
    const Complex v = entire_extend(f_, z);
    if (!(std::abs(v) > kContourFloor)) throw ContourFailure{};
    return v;
  }

  // Accumulated arg change from a to b, bisecting until every step is below pi/2.
  double walk(Complex a, Complex b, Complex fa, Complex fb, int depth) const {
    const double step = std::arg(fb / fa);
    if (std::abs(step) < std::numbers::pi / 2) return step;
    if (depth >= kMaxBisections) throw ContourFailure{};
    const Complex mid = 0.5 * (a + b);
    const Complex fm = value(mid);
    return walk(a, mid, fa, fm, depth + 1) + walk(mid, b, fm, fb, depth + 1);
  }

 private:
  const APFunc& f_;
};

double max_abs_freq(const APFunc& f) {
  double m = 0.0;
  for (const auto& [omega, c] : f.coeffs()) m = std::max(m, std::abs(omega));
  return m;
}

int winding(const APFunc& f, const Box& b, int samples) {
  const PhaseWalker walker(f);
  const std::array<Complex, 5> corners{Complex{b.x_min, b.y_min}, Complex{b.x_max, b.y_min},
                                       Complex{b.x_max, b.y_max}, Complex{b.x_min, b.y_max},
                                       Complex{b.x_min, b.y_min}};
  const double omega = max_abs_freq(f);
  double total = 0.0;
  for (std::size_t e = 0; e < 4; ++e) {
    const Complex a = corners[e];
    const Complex d = corners[e + 1] - a;
    // Several samples per unit of phase rotation of the fastest term.
    const int count = std::max(samples, static_cast<int>(std::ceil(4.0 * std::abs(d) * (omega + 1.0))));
    Complex prev_z = a;
    Complex prev_f = walker.value(a);
    for (int i = 1; i <= count; ++i) {
      const Complex z = a + d * (static_cast<double>(i) / count);
      const Complex fz = walker.value(z);
      total += walker.walk(prev_z, z, prev_f, fz, 0);
      prev_z = z;
      prev_f = fz;
    }
  }
  const double turns = total / (2.0 * std::numbers::pi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 0.25) throw ContourFailure{};
  return static_cast<int>(rounded);
}

}  // namespace

int upper_halfplane_zero_count(const APFunc& f, const Box& box, int samples) {
  if (!(box.y_min > 0.0) || !(box.y_max > box.y_min) || !(box.x_max > box.x_min))
    throw Error(ErrorCode::InvalidArgument, "box must satisfy 0 < y_min < y_max and x_min < x_max");
  if (f.is_zero()) throw Error(ErrorCode::ZeroOnContour, "the zero function vanishes on every contour");
  const double scale = std::max(box.x_max - box.x_min, box.y_max - box.y_min);
  for (int attempt = 0; attempt <= kNudges; ++attempt) {
    Box b = box;
    if (attempt > 0) {
      const double delta = scale * std::pow(10.0, -7 + 2 * attempt);
      // Translate in x rather than widen, so a box one period wide still
      // counts each zero of a periodic pattern once.
      b.x_min -= delta;
      b.x_max -= delta;
      b.y_max += delta;
      b.y_min *= 1.0 - std::pow(10.0, -7 + 2 * attempt);
    }
    try {
      return winding(f, b, samples);
    } catch (const ContourFailure&) {
    }
  }
  throw Error(ErrorCode::ZeroOnContour, "|f| stays below 1e-8 on the contour after 3 nudges");
}

std::optional<double> zero_free_height(const APFunc& f) {
  for (const double omega : f.spectrum())
    if (omega < -kFreqMergeTol) throw Error(ErrorCode::SpectrumNotOneSided, "spectrum has negative frequencies");
  const double c0 = std::abs(bohr_mean(f));
  if (c0 == 0.0) return std::nullopt;
  double tail = 0.0;
  double omega_min = std::numeric_limits<double>::infinity();
  for (const auto& [omega, c] : f.coeffs()) {
    if (omega <= kFreqMergeTol || c == Complex{}) continue;
    tail += std::abs(c);
    omega_min = std::min(omega_min, omega);
  }
  if (tail == 0.0) return 0.0;
  // Above this height sum |c_w| e^{-w y} <= tail e^{-w_min y} < c0.
  return std::max(0.0, std::log(tail / c0) / omega_min) + 1.0;
}

ZeroFreeCertificate certify_zero_free(const APFunc& f, double x_min, double x_max, double y_min) {
  ZeroFreeCertificate out;
  const std::optional<double> height = zero_free_height(f);
  if (!height) return out;
  out.y_certified = *height;
  std::vector<double> cuts{y_min};
  for (const double y : {1e-3, 1e-1, 1.0})
    if (y > y_min && y < *height) cuts.push_back(y);
  if (*height > y_min) cuts.push_back(*height);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Box b{x_min, x_max, cuts[i], cuts[i + 1]};
    out.boxes.push_back(b);
    out.zero_count += upper_halfplane_zero_count(f, b);
  }
  out.zero_free = out.zero_count == 0;
  return out;
}

AhiezerPair ahiezer_from_factor(const APFunc& h, const Box& box) {
  const std::vector<double> spec = h.spectrum();
  if (spec.empty()) throw Error(ErrorCode::ZeroFunction, "ahiezer_from_factor of the zero function");
  if (spec.front() < -kFreqMergeTol)
    throw Error(ErrorCode::SpectrumNotOneSided, "factor spectrum must lie in [0, inf)");

  AhiezerPair out;
  out.F = ap_mul(h, conj(h)).pruned();
  out.tau = exp_type(out.F);
  const double half_band = out.F.bandwidth() / 2.0;
  if (std::abs(out.tau - half_band) > 1e-9 * (1.0 + out.tau))
    throw Error(ErrorCode::TypeMismatch, "exponential type " + std::to_string(out.tau) +
                                             " differs from half the bandwidth " + std::to_string(half_band));

  out.S = shift_frequency(h, -out.tau / 2.0).pruned();
  out.containment_margin = std::numeric_limits<double>::infinity();
  for (const double omega : out.S.spectrum())
    out.containment_margin = std::min(out.containment_margin, out.tau / 2.0 - std::abs(omega));
  out.spectrum_contained = out.containment_margin >= -kFreqMergeTol;

  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const Complex z{-5.0 + 10.0 * i / 9.0, -2.0 + 4.0 * j / 9.0};
      const Complex lhs = entire_extend(out.F, z);
      const Complex rhs = entire_extend(out.S, z) * std::conj(entire_extend(out.S, std::conj(z)));
      out.identity_residual = std::max(out.identity_residual, std::abs(lhs - rhs));
    }
  }

  try {
    out.upper_zero_count = upper_halfplane_zero_count(h, box);
  } catch (const Error&) {
    out.upper_zero_count.reset();
  }
  return out;
}

}  // namespace specfact
