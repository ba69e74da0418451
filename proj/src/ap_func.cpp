#include "specfact/ap_func.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>

#include "specfact/error.hpp"

namespace specfact {

APFunc::APFunc(std::initializer_list<std::pair<double, Complex>> init) {
  for (const auto& [omega, c] : init) add(omega, c);
}

void APFunc::add(double omega, Complex c) {
  auto it = coeffs_.lower_bound(omega - kFreqMergeTol);
  if (it != coeffs_.end() && it->first <= omega + kFreqMergeTol) {
    it->second += c;
  } else {
    coeffs_.emplace(omega, c);
  }
}

Complex APFunc::at(double omega) const {
  auto it = coeffs_.lower_bound(omega - kFreqMergeTol);
  if (it != coeffs_.end() && it->first <= omega + kFreqMergeTol) return it->second;
  return {};
}

bool APFunc::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second == Complex{}; });
}

std::vector<double> APFunc::spectrum() const {
  std::vector<double> out;
  for (const auto& [omega, c] : coeffs_)
    if (c != Complex{}) out.push_back(omega);
  return out;
}

double APFunc::bandwidth() const {
  const auto s = spectrum();
  return s.empty() ? 0.0 : s.back() - s.front();
}

APFunc APFunc::pruned(double abs_tol) const {
  APFunc out;
  for (const auto& [omega, c] : coeffs_)
    if (std::abs(c) > abs_tol) out.coeffs_.emplace(omega, c);
  return out;
}

Complex eval(const APFunc& f, double x) {
  Complex sum{};
  for (const auto& [omega, c] : f.coeffs()) sum += c * std::polar(1.0, omega * x);
  return sum;
}

APFunc operator+(const APFunc& a, const APFunc& b) {
  APFunc out = a;
  for (const auto& [omega, c] : b.coeffs()) out.add(omega, c);
  return out;
}

APFunc operator*(Complex s, const APFunc& f) {
  APFunc out;
  for (const auto& [omega, c] : f.coeffs()) out.add(omega, s * c);
  return out;
}

APFunc ap_mul(const APFunc& f, const APFunc& g) {
  APFunc out;
  for (const auto& [a, ca] : f.coeffs())
    for (const auto& [b, cb] : g.coeffs()) out.add(a + b, ca * cb);
  return out;
}

APFunc conj(const APFunc& f) {
  APFunc out;
  for (const auto& [omega, c] : f.coeffs()) out.add(-omega, std::conj(c));
  return out;
}

APFunc shift_frequency(const APFunc& f, double shift) {
  APFunc out;
  for (const auto& [omega, c] : f.coeffs()) out.add(omega + shift, c);
  return out;
}

Complex bohr_mean(const APFunc& f) { return f.at(0.0); }

Complex bohr_mean_numeric(const APFunc& f, double half_length) {
  if (!(half_length > 0.0)) throw Error(ErrorCode::InvalidArgument, "bohr_mean_numeric needs L > 0");
  double omega_max = 0.0;
  for (const auto& [omega, c] : f.coeffs()) omega_max = std::max(omega_max, std::abs(omega));
  // 20-point Gauss-Legendre panels no wider than a quarter period.
  const double width = std::min(2.0 * half_length, std::numbers::pi / (2.0 * std::max(omega_max, 1e-3)));
  const auto panels = static_cast<long>(std::ceil(2.0 * half_length / width));
  const double h = 2.0 * half_length / static_cast<double>(panels);
  using Gauss = boost::math::quadrature::gauss<double, 20>;
  Complex total{};
  for (long p = 0; p < panels; ++p) {
    const double a = -half_length + static_cast<double>(p) * h;
    const double re = Gauss::integrate([&](double t) { return eval(f, t).real(); }, a, a + h);
    const double im = Gauss::integrate([&](double t) { return eval(f, t).imag(); }, a, a + h);
    total += Complex{re, im};
  }
  return total / (2.0 * half_length);
}

Complex poisson_extend(const APFunc& f, Complex z) {
  if (z.imag() < 0.0) throw Error(ErrorCode::InvalidArgument, "poisson_extend needs Im z >= 0");
  const Complex i{0.0, 1.0};
  Complex sum{};
  for (const auto& [omega, c] : f.coeffs()) {
    const Complex arg = omega < 0.0 ? std::conj(z) : z;
    sum += c * std::exp(i * omega * arg);
  }
  return sum;
}

Complex entire_extend(const APFunc& f, Complex z) {
  const Complex i{0.0, 1.0};
  Complex sum{};
  for (const auto& [omega, c] : f.coeffs()) sum += c * std::exp(i * omega * z);
  return sum;
}

double exp_type(const APFunc& f) {
  const auto s = f.spectrum();
  if (s.empty()) throw Error(ErrorCode::ZeroFunction, "exponential type of the zero function");
  return std::max(std::abs(s.front()), std::abs(s.back()));
}

PoissonIntegral poisson_kernel_mean(const APFunc& f, double x, double y, double cutoff) {
  if (!(y > 0.0) || !(cutoff > 0.0))
    throw Error(ErrorCode::InvalidArgument, "poisson_kernel_mean needs y > 0 and cutoff > 0");
  // s = y tan(phi) turns (y/pi) ds / (s^2 + y^2) into dphi / pi, so the kernel
  // peak disappears and only the oscillation of f remains to be resolved.
  // In phi the fastest term has local angular rate omega y / cos^2(phi);
  // panels cover at most a quarter of that period.
  double omega_max = 0.0;
  for (const auto& [omega, c] : f.coeffs()) omega_max = std::max(omega_max, std::abs(omega));
  const double phi_max = std::atan(cutoff / y);
  constexpr double kMaxPanel = 0.05;
  using Gauss = boost::math::quadrature::gauss<double, 20>;
  Complex total{};
  double a = -phi_max;
  while (a < phi_max) {
    const double edge = std::max(std::abs(a), std::abs(std::min(a + kMaxPanel, phi_max)));
    const double rate = omega_max * y / std::pow(std::cos(edge), 2);
    const double step = rate > 0.0 ? std::min(kMaxPanel, std::numbers::pi / (2.0 * rate)) : kMaxPanel;
    const double b = std::min(a + step, phi_max);
    total += Complex{Gauss::integrate([&](double phi) { return eval(f, x - y * std::tan(phi)).real(); }, a, b),
                     Gauss::integrate([&](double phi) { return eval(f, x - y * std::tan(phi)).imag(); }, a, b)};
    a = b;
  }
  double norm = 0.0;
  for (const auto& [omega, c] : f.coeffs()) norm += std::abs(c);
  const double outside_mass = 1.0 - 2.0 * phi_max / std::numbers::pi;
  return {total / std::numbers::pi, outside_mass * norm};
}

}  // namespace specfact
