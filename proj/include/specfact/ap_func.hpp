#ifndef SPECFACT_AP_FUNC_HPP
#define SPECFACT_AP_FUNC_HPP

#include <complex>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

namespace specfact {

using Complex = std::complex<double>;

/// Frequencies closer than this are the same character.
inline constexpr double kFreqMergeTol = 1e-12;

/// Finite exponential sum f(x) = sum_w c_w e^{iwx} on the real line: a
/// trigonometric polynomial in the almost periodic sense.
///
/// Keys are real frequencies. add() merges a frequency into an existing key
/// within kFreqMergeTol, so products of incommensurable spectra stay
/// well-defined in floating point.
class APFunc {
 public:
  APFunc() = default;
  APFunc(std::initializer_list<std::pair<double, Complex>> init);

  /// Accumulates c at frequency omega (merging with a key within tolerance).
  void add(double omega, Complex c);
  /// Coefficient at omega (zero when no key lies within tolerance).
  Complex at(double omega) const;

  const std::map<double, Complex>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  /// Keys with nonzero coefficients, ascending.
  std::vector<double> spectrum() const;
  /// sup - inf of the spectrum; 0 for the zero function.
  double bandwidth() const;

  APFunc pruned(double abs_tol = 0.0) const;

  friend bool operator==(const APFunc&, const APFunc&) = default;

 private:
  std::map<double, Complex> coeffs_;
};

Complex eval(const APFunc& f, double x);

APFunc operator+(const APFunc& a, const APFunc& b);
APFunc operator*(Complex s, const APFunc& f);

/// Convolution over the Minkowski sum of spectra.
APFunc ap_mul(const APFunc& f, const APFunc& g);
/// Coefficient map of conj(f): c_w -> conj(c_{-w}).
APFunc conj(const APFunc& f);
/// Moves every coefficient from w to w + shift.
APFunc shift_frequency(const APFunc& f, double shift);

/// Bohr mean m(f): the coefficient at frequency zero.
Complex bohr_mean(const APFunc& f);

/// Validation mode for the Bohr mean: (2L)^{-1} times the integral of f over
/// [-L, L] by composite Gauss-Legendre quadrature. Differs from bohr_mean by at
/// most sum_{w != 0} |c_w| / (|w| L).
Complex bohr_mean_numeric(const APFunc& f, double half_length);

/// Half-plane extension F(z) = sum_{w<0} c_w e^{iw conj z} + c_0 + sum_{w>0} c_w e^{iwz}.
/// Harmonic in Im z > 0; holomorphic when the spectrum is in [0, inf).
/// Throws InvalidArgument for Im z < 0.
Complex poisson_extend(const APFunc& f, Complex z);

/// Entire extension F(z) = sum_w c_w e^{iwz}.
Complex entire_extend(const APFunc& f, Complex z);

/// Exponential type max(|inf spectrum|, |sup spectrum|). Throws ZeroFunction for f = 0.
double exp_type(const APFunc& f);

struct PoissonIntegral {
  Complex value;
  /// Poisson-kernel mass outside [-cutoff, cutoff] times sum |c_w|; bounds the truncation error.
  double truncation_bound;
};

/// (y/pi) * integral_{|s| <= cutoff} f(x - s) / (s^2 + y^2) ds on
/// Gauss-Legendre panels no wider than a quarter period of the fastest term.
PoissonIntegral poisson_kernel_mean(const APFunc& f, double x, double y, double cutoff);

}  // namespace specfact

#endif  // SPECFACT_AP_FUNC_HPP
