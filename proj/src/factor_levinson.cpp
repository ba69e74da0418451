#include "specfact/factor_levinson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "specfact/error.hpp"
#include "specfact/fft.hpp"
#include "specfact/poly_roots.hpp"

namespace specfact {
namespace {

constexpr double kReflectionLimit = 1.0 - 1e-12;
constexpr std::size_t kFlatnessGrid = 4096;

TrigPoly predictor_poly(std::span<const Complex> a) {
  TrigPoly p;
  for (std::size_t k = 0; k < a.size(); ++k) p.coeffs.emplace(static_cast<int>(k), a[k]);
  return p;
}

}  // namespace

std::vector<Complex> toeplitz_moments(const TrigPoly& w, int n) {
  require_real(w);
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "section order must be nonnegative");
  std::vector<Complex> r(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) r[static_cast<std::size_t>(k)] = w[k];
  return r;
}

SzegoSection levinson_solve(std::span<const Complex> moments) {
  if (moments.empty()) throw Error(ErrorCode::InvalidArgument, "no moments");
  const double r0 = moments[0].real();
  if (!(r0 > 0.0)) throw Error(ErrorCode::SingularToeplitz, "w_0 must be positive");

  SzegoSection s;
  s.n = static_cast<int>(moments.size()) - 1;
  std::vector<Complex> a{Complex{1.0, 0.0}};
  double err = r0;
  s.errors.push_back(err);
  for (std::size_t p = 1; p < moments.size(); ++p) {
    // sum_j a_j w_{l-j} = eps delta_{l0} for l = 0..p.
    Complex acc{};
    for (std::size_t j = 0; j < p; ++j) acc += a[j] * moments[p - j];
    const Complex kappa = -acc / err;
    if (std::abs(kappa) >= kReflectionLimit)
      throw Error(ErrorCode::SingularToeplitz, "reflection coefficient " + std::to_string(std::abs(kappa)) +
                                                   " at order " + std::to_string(p));
    a.push_back(Complex{});
    std::vector<Complex> next(a.size());
    for (std::size_t j = 0; j <= p; ++j) next[j] = a[j] + kappa * std::conj(a[p - j]);
    a = std::move(next);
    err *= 1.0 - std::norm(kappa);
    s.reflection.push_back(kappa);
    s.errors.push_back(err);
  }
  s.predictor = std::move(a);
  s.eps = err;

  // Flatness of |1 + H_n|^2 w; w is rebuilt from the moments by symmetry.
  TrigPoly w;
  w.coeffs.emplace(0, Complex{r0, 0.0});
  for (std::size_t k = 1; k < moments.size(); ++k) {
    w.coeffs.emplace(static_cast<int>(k), moments[k]);
    w.coeffs.emplace(-static_cast<int>(k), std::conj(moments[k]));
  }
  const std::size_t grid = std::max(kFlatnessGrid, fft::next_power_of_two(4 * moments.size()));
  const std::vector<Complex> ws = sample(w, grid);
  const std::vector<Complex> ps = sample(predictor_poly(s.predictor), grid);
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (std::size_t j = 0; j < grid; ++j) {
    const double v = std::norm(ps[j]) * ws[j].real();
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  s.flatness = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
  return s;
}

SzegoFactor szego_factor(const TrigPoly& w, const LevinsonOptions& opts) {
  require_real(w);
  if (w.is_zero()) throw Error(ErrorCode::AllCoefficientsZero, "szego_factor of the zero weight");
  const std::size_t n = opts.grid;
  if (!fft::is_power_of_two(n)) throw Error(ErrorCode::InvalidArgument, "grid size must be a power of two");
  if (min_on_grid(w, n) < -opts.nonneg_tol) throw Error(ErrorCode::NotNonnegative, "weight is negative on the grid");
  const int order = opts.order > 0 ? opts.order : std::max(1, 4 * w.degree());

  SzegoFactor out;
  out.section = levinson_solve(toeplitz_moments(w, order));
  out.sqrt_eps = std::sqrt(out.section.eps);

  // h = sqrt(eps) / (1 + H_n) on the grid; one-sided, so bin j is frequency j.
  const std::vector<Complex> ps = sample(predictor_poly(out.section.predictor), n);
  std::vector<Complex> hs(n);
  out.min_abs_predictor = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    out.min_abs_predictor = std::min(out.min_abs_predictor, std::abs(ps[j]));
    hs[j] = out.sqrt_eps / ps[j];
  }
  std::vector<Complex> h_hat = fft::forward(hs);
  double big = 0.0;
  for (Complex& c : h_hat) {
    c /= static_cast<double>(n);
    big = std::max(big, std::abs(c));
  }
  h_hat[0] = Complex{out.sqrt_eps, 0.0};
  for (std::size_t j = 0; j < n; ++j)
    if (std::abs(h_hat[j]) > opts.truncation * big) out.h.coeffs.emplace(static_cast<int>(j), h_hat[j]);

  const std::vector<Complex> ws = sample(w, n);
  const std::vector<Complex> fitted = sample(out.h, n);
  for (std::size_t j = 0; j < n; ++j)
    out.residual = std::max(out.residual, std::abs(ws[j].real() - std::norm(fitted[j])));

  // M(w) = M(sqrt w)^2; log w is integrated directly.
  double log_sum = 0.0;
  const std::size_t qn = std::max<std::size_t>(n, 1u << 14);
  for (const Complex& v : sample(w, qn)) log_sum += std::max(std::log(std::max(v.real(), 0.0)), -700.0);
  out.mahler_w = std::exp(log_sum / static_cast<double>(qn));
  out.gap = out.section.eps - out.mahler_w;

  double min_mod = std::numeric_limits<double>::infinity();
  for (const Complex& r : polynomial_roots(out.section.predictor)) min_mod = std::min(min_mod, std::abs(r));
  out.min_root_modulus = min_mod;
  return out;
}

}  // namespace specfact
