#ifndef SPECFACT_FFT_HPP
#define SPECFACT_FFT_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace specfact::fft {

using Complex = std::complex<double>;

// Unnormalized DFTs. Forward uses e^{-2πi jk/N}, backward e^{+2πi jk/N}, so
// backward() turns a folded coefficient array into samples on the uniform grid.
std::vector<Complex> forward(std::span<const Complex> x);
std::vector<Complex> backward(std::span<const Complex> x);

// Two-dimensional variants on a row-major rows x cols array.
std::vector<Complex> forward2(std::span<const Complex> x, std::size_t rows, std::size_t cols);
std::vector<Complex> backward2(std::span<const Complex> x, std::size_t rows, std::size_t cols);

bool is_power_of_two(std::size_t n) noexcept;
std::size_t next_power_of_two(std::size_t n) noexcept;

/// Maps an integer frequency to its bin on an n-point grid.
inline std::size_t bin(long k, std::size_t n) noexcept {
  const long m = static_cast<long>(n);
  return static_cast<std::size_t>(((k % m) + m) % m);
}

/// Symmetric frequency for bin j: [-n/2, n/2).
inline long symmetric_freq(std::size_t j, std::size_t n) noexcept {
  const long jj = static_cast<long>(j);
  const long m = static_cast<long>(n);
  return jj >= m / 2 ? jj - m : jj;
}

}  // namespace specfact::fft

#endif  // SPECFACT_FFT_HPP
