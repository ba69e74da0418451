#include "specfact/poly_roots.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "specfact/error.hpp"

namespace specfact {
namespace {

using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

// Parlett-Reinsch balancing with power-of-two scalings, so the similarity
// transform itself adds no rounding.
void balance(Matrix& a) {
  constexpr double kGamma = 0.95;
  const Eigen::Index n = a.rows();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      double row = 0.0, col = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        row += std::abs(a(i, j));
        col += std::abs(a(j, i));
      }
      if (row == 0.0 || col == 0.0) continue;
      int exponent = 0;
      std::frexp(row / col, &exponent);
      exponent /= 2;
      if (exponent == 0) continue;
      const double scaled_col = std::ldexp(col, exponent);
      const double scaled_row = std::ldexp(row, -exponent);
      if (scaled_col + scaled_row < kGamma * (col + row)) {
        changed = true;
        a.row(i) *= std::ldexp(1.0, -exponent);
        a.col(i) *= std::ldexp(1.0, exponent);
      }
    }
  }
}

}  // namespace

std::vector<Complex> polynomial_roots(std::span<const Complex> ascending) {
  std::size_t hi = ascending.size();
  while (hi > 0 && ascending[hi - 1] == Complex{}) --hi;
  if (hi == 0) throw Error(ErrorCode::AllCoefficientsZero, "roots of the zero polynomial");
  std::size_t lo = 0;
  while (ascending[lo] == Complex{}) ++lo;

  std::vector<Complex> roots(lo, Complex{});
  const std::size_t degree = hi - 1 - lo;
  if (degree == 0) return roots;

  const Complex lead = ascending[hi - 1];
  const auto n = static_cast<Eigen::Index>(degree);
  Matrix companion = Matrix::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) companion(i, n - 1) = -ascending[lo + static_cast<std::size_t>(i)] / lead;
  balance(companion);

  Eigen::ComplexEigenSolver<Matrix> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::InvalidArgument, "companion eigenvalue solver failed");
  for (Eigen::Index i = 0; i < n; ++i) roots.push_back(solver.eigenvalues()(i));
  return roots;
}

Complex horner(std::span<const Complex> ascending, Complex z) {
  Complex acc{};
  for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<Complex> poly_from_roots(std::span<const Complex> roots) {
  std::vector<Complex> p{Complex{1.0, 0.0}};
  for (const Complex& r : roots) {
    std::vector<Complex> next(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] -= r * p[k];
    }
    p = std::move(next);
  }
  return p;
}

void newton_polish(std::span<const Complex> ascending, std::span<Complex> roots) {
  std::vector<Complex> deriv;
  for (std::size_t k = 1; k < ascending.size(); ++k) deriv.push_back(static_cast<double>(k) * ascending[k]);
  for (Complex& z : roots) {
    const Complex d = horner(deriv, z);
    if (std::abs(d) == 0.0) continue;
    const Complex step = horner(ascending, z) / d;
    if (std::isfinite(step.real()) && std::isfinite(step.imag())) z -= step;
  }
}

}  // namespace specfact
