// Random generators and reference computations shared by the test binaries.
// The references are written out directly from their definitions and do not
// call the library routine they are used to check.
#ifndef SPECFACT_TESTS_SUPPORT_HPP
#define SPECFACT_TESTS_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include "specfact/ap_func.hpp"
#include "specfact/trig_poly.hpp"

namespace testsupport {

using specfact::APFunc;
using specfact::BivarPoly;
using specfact::Complex;
using specfact::Lattice;
using specfact::TrigPoly;

inline constexpr double kPi = std::numbers::pi;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  Complex unit_box() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }
  Complex polar(double r_lo, double r_hi) { return std::polar(uniform(r_lo, r_hi), uniform(0.0, 2.0 * kPi)); }

 private:
  std::mt19937_64 gen_;
};

/// h with coefficients in the complex unit box on [0, d].
inline TrigPoly random_analytic(Rng& rng, int d) {
  TrigPoly h;
  for (int k = 0; k <= d; ++k) h.coeffs[k] = rng.unit_box();
  return h;
}

/// Ascending coefficients of prod (z - r_j), expanded term by term.
inline std::vector<Complex> expand_roots(const std::vector<Complex>& roots) {
  std::vector<Complex> c{Complex{1.0, 0.0}};
  for (const Complex& r : roots) {
    std::vector<Complex> next(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return c;
}

/// lead * prod (z - r_j) as a TrigPoly on [0, d].
inline TrigPoly from_roots(Complex lead, const std::vector<Complex>& roots) {
  TrigPoly h;
  const std::vector<Complex> c = expand_roots(roots);
  for (std::size_t k = 0; k < c.size(); ++k) h.coeffs[static_cast<int>(k)] = lead * c[k];
  return h;
}

/// Coefficients of |h|^2: (|h|^2)_k = sum_j h_{j+k} conj(h_j).
inline TrigPoly ref_squared_modulus(const TrigPoly& h) {
  TrigPoly w;
  for (const auto& [a, ca] : h.coeffs)
    for (const auto& [b, cb] : h.coeffs) w.coeffs[a - b] += ca * std::conj(cb);
  return w;
}

inline BivarPoly ref_squared_modulus(const BivarPoly& h) {
  BivarPoly w;
  for (const auto& [a, ca] : h.coeffs)
    for (const auto& [b, cb] : h.coeffs) w.coeffs[{a.first - b.first, a.second - b.second}] += ca * std::conj(cb);
  return w;
}

/// Direct sum f(x) = sum c_k e^{ikx}.
inline Complex ref_eval(const TrigPoly& p, double x) {
  Complex s{};
  for (const auto& [k, c] : p.coeffs) s += c * std::exp(Complex{0.0, k * x});
  return s;
}

inline Complex ref_eval(const BivarPoly& p, double x, double y) {
  Complex s{};
  for (const auto& [k, c] : p.coeffs) s += c * std::exp(Complex{0.0, k.first * x + k.second * y});
  return s;
}

inline Complex ref_eval(const APFunc& f, Complex z) {
  Complex s{};
  for (const auto& [w, c] : f.coeffs()) s += c * std::exp(Complex{0.0, w} * z);
  return s;
}

inline double max_abs_diff(const TrigPoly& a, const TrigPoly& b) {
  double m = 0.0;
  for (const auto& [k, c] : a.coeffs) m = std::max(m, std::abs(c - b[k]));
  for (const auto& [k, c] : b.coeffs) m = std::max(m, std::abs(c - a[k]));
  return m;
}

inline double max_abs_diff(const BivarPoly& a, const BivarPoly& b) {
  double m = 0.0;
  for (const auto& [k, c] : a.coeffs) m = std::max(m, std::abs(c - b[k]));
  for (const auto& [k, c] : b.coeffs) m = std::max(m, std::abs(c - a[k]));
  return m;
}

/// Real trigonometric polynomial of degree d: c_{-k} = conj(c_k) exactly, c_0 real.
inline TrigPoly random_real(Rng& rng, int d, double scale = 1.0) {
  TrigPoly w;
  w.coeffs[0] = Complex{scale * rng.uniform(-1.0, 1.0), 0.0};
  for (int k = 1; k <= d; ++k) {
    const Complex c = scale * rng.unit_box();
    w.coeffs[k] = c;
    w.coeffs[-k] = std::conj(c);
  }
  return w;
}

inline BivarPoly random_real(Rng& rng, int d, bool) {
  BivarPoly w;
  for (int m = -d; m <= d; ++m)
    for (int n = -d; n <= d; ++n) {
      const Lattice k{m, n}, mirror{-m, -n};
      if (k == Lattice{0, 0}) w.coeffs[k] = Complex{rng.uniform(-1.0, 1.0), 0.0};
      else if (mirror < k) w.coeffs[k] = std::conj(w.coeffs.at(mirror));
      else w.coeffs[k] = rng.unit_box();
    }
  return w;
}

/// |1 + a e^{ix}|^2.
inline TrigPoly one_plus(double a) { return {{-1, a}, {0, 1.0 + a * a}, {1, a}}; }

}  // namespace testsupport

#endif  // SPECFACT_TESTS_SUPPORT_HPP
