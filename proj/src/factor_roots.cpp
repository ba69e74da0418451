#include "specfact/factor_roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "specfact/error.hpp"
#include "specfact/fft.hpp"
#include "specfact/poly_roots.hpp"

namespace specfact {
namespace {

constexpr double kLeadingCoeffFloor = 1e-14;
constexpr double kLogClip = -700.0;

// Dense ascending coefficients of a polynomial supported in [0, d].
std::vector<Complex> analytic_coeffs(const TrigPoly& h, const char* what) {
  if (h.is_zero()) throw Error(ErrorCode::AllCoefficientsZero, what);
  if (h.min_freq() < 0) throw Error(ErrorCode::InvalidArgument, std::string(what) + ": support must lie in [0, d]");
  std::vector<Complex> a(static_cast<std::size_t>(h.max_freq()) + 1);
  for (const auto& [k, c] : h.coeffs) a[static_cast<std::size_t>(k)] += c;
  return a;
}

TrigPoly from_ascending(std::span<const Complex> a) {
  TrigPoly p;
  for (std::size_t k = 0; k < a.size(); ++k) p.coeffs.emplace(static_cast<int>(k), a[k]);
  return p;
}

}  // namespace

RootFactorization fejer_riesz(const TrigPoly& w, const FejerRieszOptions& opts) {
  require_real(w);
  if (w.is_zero()) throw Error(ErrorCode::AllCoefficientsZero, "fejer_riesz of the zero polynomial");
  const int d = w.degree();
  if (d > 0 && std::abs(w[d]) < kLeadingCoeffFloor)
    throw Error(ErrorCode::DegenerateLeadingCoeff, "leading coefficient below 1e-14");

  RootFactorization out;
  const std::size_t grid = fft::next_power_of_two(std::max<std::size_t>(1024, 16 * (static_cast<std::size_t>(d) + 1)));
  out.grid_min = min_on_grid(w, grid);
  if (out.grid_min < -opts.nonneg_tol)
    throw Error(ErrorCode::NotNonnegative, "grid minimum " + std::to_string(out.grid_min) + " is negative");

  if (d == 0) {
    const double w0 = w[0].real();
    if (!(w0 > 0.0)) throw Error(ErrorCode::NotNonnegative, "constant weight must be positive");
    out.h = TrigPoly{{0, std::sqrt(w0)}};
    out.scale = std::sqrt(w0);
    out.residual = max_coeff_diff(squared_modulus(out.h), w);
    return out;
  }

  // P(z) = sum_k w_k z^{k+d}: roots come in pairs (r, 1/conj r).
  std::vector<Complex> p(2 * static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= 2 * d; ++j) p[static_cast<std::size_t>(j)] = w[j - d];
  std::vector<Complex> roots = polynomial_roots(p);
  if (opts.newton) newton_polish(p, roots);

  std::vector<Complex> selected;
  std::vector<Complex> boundary;
  for (const Complex& r : roots) {
    const double mod = std::abs(r);
    if (std::abs(mod - 1.0) <= opts.pair_tol) boundary.push_back(r);
    else if (mod > 1.0) selected.push_back(r);
  }
  if (boundary.size() % 2 != 0)
    throw Error(ErrorCode::OddBoundaryCluster, std::to_string(boundary.size()) + " roots on the unit circle");

  // Greedy nearest-neighbour pairing; each pair is one double root of P and
  // contributes its midpoint to H.
  while (!boundary.empty()) {
    std::size_t bi = 0, bj = 1;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < boundary.size(); ++i)
      for (std::size_t j = i + 1; j < boundary.size(); ++j)
        if (const double dist = std::abs(boundary[i] - boundary[j]); dist < best) {
          best = dist;
          bi = i;
          bj = j;
        }
    if (best > opts.pair_tol)
      throw Error(ErrorCode::OddBoundaryCluster, "unit-circle roots cannot be paired within tolerance");
    selected.push_back(0.5 * (boundary[bi] + boundary[bj]));
    boundary.erase(boundary.begin() + static_cast<std::ptrdiff_t>(bj));
    boundary.erase(boundary.begin() + static_cast<std::ptrdiff_t>(bi));
    ++out.boundary_pairs;
  }
  if (selected.size() != static_cast<std::size_t>(d))
    throw Error(ErrorCode::UnbalancedRootSplit,
                std::to_string(selected.size()) + " roots selected for a degree-" + std::to_string(d) + " factor");

  // Monic Q, then |c|^2 sum |q_k|^2 = w_0 fixes the modulus and c q_0 > 0 the phase.
  const std::vector<Complex> q = poly_from_roots(selected);
  double energy = 0.0;
  for (const Complex& c : q) energy += std::norm(c);
  const double modulus = std::sqrt(w[0].real() / energy);
  const Complex phase = std::conj(q[0]) / std::abs(q[0]);
  out.scale = modulus * phase;
  for (std::size_t k = 0; k < q.size(); ++k) out.h.coeffs.emplace(static_cast<int>(k), out.scale * q[k]);
  out.h.coeffs[0] = Complex{out.h.coeffs[0].real(), 0.0};
  out.roots = std::move(selected);
  out.residual = max_coeff_diff(squared_modulus(out.h), w);
  return out;
}

double mahler_jensen(const TrigPoly& h) {
  const std::vector<Complex> a = analytic_coeffs(h, "mahler_jensen");
  double m = std::abs(a.back());
  for (const Complex& r : polynomial_roots(a)) m *= std::max(1.0, std::abs(r));
  return m;
}

MahlerQuadrature mahler_quadrature(const TrigPoly& h, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "quadrature needs samples");
  MahlerQuadrature out{0.0, 0};
  double sum = 0.0;
  for (const Complex& v : sample(h, n)) {
    const double mag = std::abs(v);
    double l = mag > 0.0 ? std::log(mag) : kLogClip;
    if (l < kLogClip) l = kLogClip;
    if (l == kLogClip) ++out.clipped;
    sum += l;
  }
  out.value = std::exp(sum / static_cast<double>(n));
  return out;
}

OuterDiagnosis diagnose_outer(const TrigPoly& h, double tol) {
  const std::vector<Complex> a = analytic_coeffs(h, "diagnose_outer");
  const std::vector<Complex> roots = polynomial_roots(a);
  double m = std::abs(a.back());
  double min_mod = std::numeric_limits<double>::infinity();
  for (const Complex& r : roots) {
    m *= std::max(1.0, std::abs(r));
    min_mod = std::min(min_mod, std::abs(r));
  }
  const double h0 = std::abs(a.front());
  return {std::abs(m - h0) <= tol * (1.0 + h0), !(min_mod < 1.0 - tol), m, min_mod};
}

bool is_outer(const TrigPoly& h, double tol) { return diagnose_outer(h, tol).jensen_outer; }

bool InnerOuter::inner_is_polynomial() const { return inner_den.pruned() == TrigPoly{{0, 1.0}}; }

TrigPoly InnerOuter::inner_polynomial() const {
  if (!inner_is_polynomial())
    throw Error(ErrorCode::NonpolynomialInner, "inner factor is a Blaschke product with nonzero roots");
  return inner_num;
}

InnerOuter inner_outer_split(const TrigPoly& h) {
  const std::vector<Complex> a = analytic_coeffs(h, "inner_outer_split");
  const std::vector<Complex> roots = polynomial_roots(a);

  int zero_roots = 0;
  std::vector<Complex> inside;
  std::vector<Complex> outer_roots;
  double modulus = std::abs(a.back());
  for (const Complex& r : roots) {
    if (r == Complex{}) {
      ++zero_roots;
    } else if (std::abs(r) < 1.0) {
      inside.push_back(r);
      outer_roots.push_back(1.0 / std::conj(r));
      modulus *= std::abs(r);
    } else {
      outer_roots.push_back(r);
    }
  }

  // On |z| = 1, |z - r| = |r| |z - 1/conj r|, so reflecting the inside roots
  // keeps |outer| = |h|. The phase makes outer(0) > 0.
  std::vector<Complex> outer = poly_from_roots(outer_roots);
  const Complex phase = std::conj(outer[0]) / std::abs(outer[0]);
  for (Complex& c : outer) c *= modulus * phase;
  outer[0] = Complex{outer[0].real(), 0.0};

  std::vector<Complex> num(static_cast<std::size_t>(zero_roots), Complex{});
  const std::vector<Complex> blaschke_num = poly_from_roots(inside);
  num.insert(num.end(), blaschke_num.begin(), blaschke_num.end());
  std::vector<Complex> den{Complex{1.0, 0.0}};
  for (const Complex& r : inside) {
    std::vector<Complex> next(den.size() + 1);
    for (std::size_t k = 0; k < den.size(); ++k) {
      next[k] += den[k];
      next[k + 1] -= std::conj(r) * den[k];
    }
    den = std::move(next);
  }

  // Unimodular constant from the best-conditioned of a few circle points.
  Complex unit{1.0, 0.0};
  double best = -1.0;
  for (int j = 0; j < 16; ++j) {
    const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * j / 16.0);
    const Complex denom = horner(num, z) * horner(outer, z);
    if (std::abs(denom) > best) {
      best = std::abs(denom);
      unit = horner(a, z) * horner(den, z) / denom;
    }
  }
  unit /= std::abs(unit);
  for (Complex& c : num) c *= unit;

  return {from_ascending(outer), from_ascending(num), from_ascending(den)};
}

}  // namespace specfact
