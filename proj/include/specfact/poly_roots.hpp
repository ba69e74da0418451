#ifndef SPECFACT_POLY_ROOTS_HPP
#define SPECFACT_POLY_ROOTS_HPP

#include <complex>
#include <span>
#include <vector>

namespace specfact {

using Complex = std::complex<double>;

/// Roots of p(z) = sum_k a[k] z^k, a given in ascending order.
///
/// Eigenvalues of the balanced companion matrix of the monic polynomial.
/// Exact zero low-order coefficients become roots at the origin; exact zero
/// high-order coefficients are dropped. A constant polynomial has no roots.
std::vector<Complex> polynomial_roots(std::span<const Complex> ascending);

/// p(z) by Horner's rule.
Complex horner(std::span<const Complex> ascending, Complex z);

/// Ascending coefficients of the monic polynomial prod_j (z - roots[j]).
std::vector<Complex> poly_from_roots(std::span<const Complex> roots);

/// One Newton step z <- z - p(z)/p'(z) per root, skipped where p'(z) vanishes.
void newton_polish(std::span<const Complex> ascending, std::span<Complex> roots);

}  // namespace specfact

#endif  // SPECFACT_POLY_ROOTS_HPP
