#include "specfact/trig_poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "specfact/error.hpp"
#include "specfact/fft.hpp"

namespace specfact {
namespace {

template <class Map>
Map add_maps(const Map& a, const Map& b, double sign) {
  Map out = a;
  for (const auto& [k, c] : b) out[k] += sign * c;
  return out;
}

template <class Map>
double max_diff(const Map& a, const Map& b) {
  double worst = 0.0;
  for (const auto& [k, c] : a) {
    auto it = b.find(k);
    worst = std::max(worst, std::abs(c - (it == b.end() ? Complex{} : it->second)));
  }
  for (const auto& [k, c] : b) {
    if (!a.contains(k)) worst = std::max(worst, std::abs(c));
  }
  return worst;
}

double fejer_weight(int k, int n) {
  return std::max(0.0, 1.0 - static_cast<double>(std::abs(k)) / n);
}

}  // namespace

Complex TrigPoly::operator[](int k) const {
  auto it = coeffs.find(k);
  return it == coeffs.end() ? Complex{} : it->second;
}

bool TrigPoly::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const auto& kv) { return kv.second == Complex{}; });
}

int TrigPoly::degree() const {
  int d = 0;
  for (const auto& [k, c] : coeffs)
    if (c != Complex{}) d = std::max(d, std::abs(k));
  return d;
}

int TrigPoly::min_freq() const {
  for (const auto& [k, c] : coeffs)
    if (c != Complex{}) return k;
  throw Error(ErrorCode::AllCoefficientsZero, "min_freq of the zero polynomial");
}

int TrigPoly::max_freq() const {
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    if (it->second != Complex{}) return it->first;
  throw Error(ErrorCode::AllCoefficientsZero, "max_freq of the zero polynomial");
}

TrigPoly TrigPoly::pruned(double abs_tol) const {
  TrigPoly out;
  for (const auto& [k, c] : coeffs)
    if (std::abs(c) > abs_tol) out.coeffs.emplace(k, c);
  return out;
}

Complex BivarPoly::operator[](Lattice k) const {
  auto it = coeffs.find(k);
  return it == coeffs.end() ? Complex{} : it->second;
}

bool BivarPoly::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const auto& kv) { return kv.second == Complex{}; });
}

int BivarPoly::degree() const {
  int d = 0;
  for (const auto& [k, c] : coeffs)
    if (c != Complex{}) d = std::max({d, std::abs(k.first), std::abs(k.second)});
  return d;
}

BivarPoly BivarPoly::pruned(double abs_tol) const {
  BivarPoly out;
  for (const auto& [k, c] : coeffs)
    if (std::abs(c) > abs_tol) out.coeffs.emplace(k, c);
  return out;
}

Complex eval(const TrigPoly& p, double x) {
  Complex sum{};
  for (const auto& [k, c] : p.coeffs) sum += c * std::polar(1.0, k * x);
  return sum;
}

Complex eval(const BivarPoly& p, double x, double y) {
  Complex sum{};
  for (const auto& [k, c] : p.coeffs) sum += c * std::polar(1.0, k.first * x + k.second * y);
  return sum;
}

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) { return TrigPoly(add_maps(a.coeffs, b.coeffs, 1.0)); }
TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) { return TrigPoly(add_maps(a.coeffs, b.coeffs, -1.0)); }
BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) { return BivarPoly(add_maps(a.coeffs, b.coeffs, 1.0)); }
BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) { return BivarPoly(add_maps(a.coeffs, b.coeffs, -1.0)); }

TrigPoly operator*(Complex s, const TrigPoly& p) {
  TrigPoly out = p;
  for (auto& [k, c] : out.coeffs) c *= s;
  return out;
}

BivarPoly operator*(Complex s, const BivarPoly& p) {
  BivarPoly out = p;
  for (auto& [k, c] : out.coeffs) c *= s;
  return out;
}

TrigPoly mul(const TrigPoly& p, const TrigPoly& q) {
  TrigPoly out;
  for (const auto& [j, a] : p.coeffs)
    for (const auto& [k, b] : q.coeffs) out.coeffs[j + k] += a * b;
  return out;
}

BivarPoly mul(const BivarPoly& p, const BivarPoly& q) {
  BivarPoly out;
  for (const auto& [j, a] : p.coeffs)
    for (const auto& [k, b] : q.coeffs) out.coeffs[{j.first + k.first, j.second + k.second}] += a * b;
  return out;
}

TrigPoly conj_reflect(const TrigPoly& p) {
  TrigPoly out;
  for (const auto& [k, c] : p.coeffs) out.coeffs.emplace(-k, std::conj(c));
  return out;
}

BivarPoly conj_reflect(const BivarPoly& p) {
  BivarPoly out;
  for (const auto& [k, c] : p.coeffs) out.coeffs.emplace(Lattice{-k.first, -k.second}, std::conj(c));
  return out;
}

TrigPoly squared_modulus(const TrigPoly& h) {
  TrigPoly w = mul(h, conj_reflect(h));
  // The product is Hermitian up to rounding in the summation order; make the
  // reflection symmetry exact.
  for (auto& [k, c] : w.coeffs) {
    if (k == 0) c = Complex{c.real(), 0.0};
    else if (k < 0) c = std::conj(w.coeffs.at(-k));
  }
  return w;
}

BivarPoly squared_modulus(const BivarPoly& h) {
  BivarPoly w = mul(h, conj_reflect(h));
  for (auto& [k, c] : w.coeffs) {
    const Lattice mirror{-k.first, -k.second};
    if (k == Lattice{0, 0}) c = Complex{c.real(), 0.0};
    else if (k < mirror) c = std::conj(w.coeffs.at(mirror));
  }
  return w;
}

TrigPoly fejer_smooth(const TrigPoly& w, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "fejer_smooth needs n >= 1");
  TrigPoly out;
  for (const auto& [k, c] : w.coeffs) {
    const double weight = fejer_weight(k, n);
    if (weight > 0.0) out.coeffs.emplace(k, weight * c);
  }
  return out;
}

BivarPoly fejer_smooth(const BivarPoly& w, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "fejer_smooth needs n >= 1");
  BivarPoly out;
  for (const auto& [k, c] : w.coeffs) {
    const double weight = fejer_weight(k.first, n) * fejer_weight(k.second, n);
    if (weight > 0.0) out.coeffs.emplace(k, weight * c);
  }
  return out;
}

bool is_real(const TrigPoly& p, double tol) {
  for (const auto& [k, c] : p.coeffs)
    if (std::abs(p[-k] - std::conj(c)) > tol) return false;
  return true;
}

bool is_real(const BivarPoly& p, double tol) {
  for (const auto& [k, c] : p.coeffs)
    if (std::abs(p[{-k.first, -k.second}] - std::conj(c)) > tol) return false;
  return true;
}

void require_real(const TrigPoly& p, double tol) {
  if (!is_real(p, tol)) throw Error(ErrorCode::NotReal, "coefficients violate c_{-k} = conj(c_k)");
}

void require_real(const BivarPoly& p, double tol) {
  if (!is_real(p, tol)) throw Error(ErrorCode::NotReal, "coefficients violate c_{-m,-n} = conj(c_{m,n})");
}

std::vector<Complex> sample(const TrigPoly& p, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "sample grid must be nonempty");
  std::vector<Complex> folded(n);
  for (const auto& [k, c] : p.coeffs) folded[fft::bin(k, n)] += c;
  return fft::backward(folded);
}

std::vector<Complex> sample(const BivarPoly& p, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "sample grid must be nonempty");
  std::vector<Complex> folded(n * n);
  for (const auto& [k, c] : p.coeffs) folded[fft::bin(k.first, n) * n + fft::bin(k.second, n)] += c;
  return fft::backward2(folded, n, n);
}

double min_on_grid(const TrigPoly& w, std::size_t n) {
  require_real(w);
  if (n < 4 * (static_cast<std::size_t>(w.degree()) + 1))
    throw Error(ErrorCode::InvalidArgument, "grid of " + std::to_string(n) + " points is too coarse for degree " +
                                                std::to_string(w.degree()));
  double lo = std::numeric_limits<double>::infinity();
  for (const Complex& v : sample(w, n)) lo = std::min(lo, v.real());
  return lo;
}

double min_on_grid(const BivarPoly& w, std::size_t n) {
  require_real(w);
  if (n < 4 * (static_cast<std::size_t>(w.degree()) + 1))
    throw Error(ErrorCode::InvalidArgument, "grid of " + std::to_string(n) + " points per axis is too coarse");
  double lo = std::numeric_limits<double>::infinity();
  for (const Complex& v : sample(w, n)) lo = std::min(lo, v.real());
  return lo;
}

double wiener_norm(const TrigPoly& p) {
  double s = 0.0;
  for (const auto& [k, c] : p.coeffs) s += std::abs(c);
  return s;
}

double wiener_norm(const BivarPoly& p) {
  double s = 0.0;
  for (const auto& [k, c] : p.coeffs) s += std::abs(c);
  return s;
}

double max_coeff_diff(const TrigPoly& a, const TrigPoly& b) { return max_diff(a.coeffs, b.coeffs); }
double max_coeff_diff(const BivarPoly& a, const BivarPoly& b) { return max_diff(a.coeffs, b.coeffs); }

}  // namespace specfact
