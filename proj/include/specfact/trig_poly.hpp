#ifndef SPECFACT_TRIG_POLY_HPP
#define SPECFACT_TRIG_POLY_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

namespace specfact {

using Complex = std::complex<double>;

/// Absolute tolerance on |c_{-k} - conj(c_k)| for a polynomial to count as real-valued.
inline constexpr double kRealnessTol = 1e-12;

/// Trigonometric polynomial f(x) = sum_k c_k e^{ikx} on the circle, x in [0, 2pi).
///
/// Coefficients live in a sparse map; absent keys are zero. Stored zeros are
/// allowed but never count towards the degree or the spectrum.
struct TrigPoly {
  std::map<int, Complex> coeffs;

  TrigPoly() = default;
  TrigPoly(std::initializer_list<std::pair<const int, Complex>> init) : coeffs(init) {}
  explicit TrigPoly(std::map<int, Complex> c) : coeffs(std::move(c)) {}

  /// Coefficient at frequency k (zero when absent).
  Complex operator[](int k) const;

  bool is_zero() const;
  /// max |k| over nonzero coefficients; 0 for the zero polynomial.
  int degree() const;
  /// Smallest / largest frequency carrying a nonzero coefficient.
  int min_freq() const;
  int max_freq() const;

  /// Copy without coefficients of modulus <= abs_tol.
  TrigPoly pruned(double abs_tol = 0.0) const;

  friend bool operator==(const TrigPoly&, const TrigPoly&) = default;
};

using Lattice = std::pair<int, int>;

/// Trigonometric polynomial on the 2-torus: f(x, y) = sum c_{m,n} e^{i(mx + ny)}.
struct BivarPoly {
  std::map<Lattice, Complex> coeffs;

  BivarPoly() = default;
  BivarPoly(std::initializer_list<std::pair<const Lattice, Complex>> init) : coeffs(init) {}
  explicit BivarPoly(std::map<Lattice, Complex> c) : coeffs(std::move(c)) {}

  Complex operator[](Lattice k) const;

  bool is_zero() const;
  /// max(|m|, |n|) over nonzero coefficients.
  int degree() const;

  BivarPoly pruned(double abs_tol = 0.0) const;

  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;
};

Complex eval(const TrigPoly& p, double x);
Complex eval(const BivarPoly& p, double x, double y);

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b);
TrigPoly operator-(const TrigPoly& a, const TrigPoly& b);
TrigPoly operator*(Complex s, const TrigPoly& p);
BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
BivarPoly operator*(Complex s, const BivarPoly& p);

/// Coefficient convolution; eval(mul(p, q), x) == eval(p, x) * eval(q, x).
TrigPoly mul(const TrigPoly& p, const TrigPoly& q);
BivarPoly mul(const BivarPoly& p, const BivarPoly& q);

/// c_k -> conj(c_{-k}); the coefficient map of conj(f).
TrigPoly conj_reflect(const TrigPoly& p);
BivarPoly conj_reflect(const BivarPoly& p);

/// |h|^2 = h * conj(h), computed at coefficient level.
TrigPoly squared_modulus(const TrigPoly& h);
BivarPoly squared_modulus(const BivarPoly& h);

/// Multiplies c_k by the Fejer weight max(0, 1 - |k|/n) (per-axis product on the torus).
TrigPoly fejer_smooth(const TrigPoly& w, int n);
BivarPoly fejer_smooth(const BivarPoly& w, int n);

bool is_real(const TrigPoly& p, double tol = kRealnessTol);
bool is_real(const BivarPoly& p, double tol = kRealnessTol);
/// Throws Error(NotReal) unless is_real(p, tol).
void require_real(const TrigPoly& p, double tol = kRealnessTol);
void require_real(const BivarPoly& p, double tol = kRealnessTol);

/// Values at x_j = 2 pi j / n, j = 0..n-1. Folding coefficients into bins is
/// exact at the grid points, so any n works.
std::vector<Complex> sample(const TrigPoly& p, std::size_t n);
/// Row-major n x n samples; entry [i * n + j] is f(2 pi i / n, 2 pi j / n).
std::vector<Complex> sample(const BivarPoly& p, std::size_t n);

/// Minimum of Re f over n uniform samples. Requires a real polynomial and
/// n >= 4 (degree + 1).
double min_on_grid(const TrigPoly& w, std::size_t n);
double min_on_grid(const BivarPoly& w, std::size_t n);

/// Wiener-algebra norm: sum of coefficient moduli.
double wiener_norm(const TrigPoly& p);
double wiener_norm(const BivarPoly& p);

/// max_k |a_k - b_k| over the union of supports.
double max_coeff_diff(const TrigPoly& a, const TrigPoly& b);
double max_coeff_diff(const BivarPoly& a, const BivarPoly& b);

}  // namespace specfact

#endif  // SPECFACT_TRIG_POLY_HPP
