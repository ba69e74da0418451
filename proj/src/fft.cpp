#include "specfact/fft.hpp"

#include <fftw3.h>

#include <mutex>

#include "specfact/error.hpp"

namespace specfact::fft {
namespace {

// The FFTW planner is not reentrant; execution of a finished plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

std::vector<Complex> run(std::span<const Complex> x, int rank, const int* dims, int sign) {
  std::vector<Complex> out(x.begin(), x.end());
  if (out.empty()) return out;
  auto* buf = reinterpret_cast<fftw_complex*>(out.data());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft(rank, dims, buf, buf, sign, FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw Error(ErrorCode::InvalidArgument, "fftw could not plan transform");
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

}  // namespace

std::vector<Complex> forward(std::span<const Complex> x) {
  const int n = static_cast<int>(x.size());
  return run(x, 1, &n, FFTW_FORWARD);
}

std::vector<Complex> backward(std::span<const Complex> x) {
  const int n = static_cast<int>(x.size());
  return run(x, 1, &n, FFTW_BACKWARD);
}

std::vector<Complex> forward2(std::span<const Complex> x, std::size_t rows, std::size_t cols) {
  if (rows * cols != x.size()) throw Error(ErrorCode::InvalidArgument, "2-D transform shape mismatch");
  const int dims[2] = {static_cast<int>(rows), static_cast<int>(cols)};
  return run(x, 2, dims, FFTW_FORWARD);
}

std::vector<Complex> backward2(std::span<const Complex> x, std::size_t rows, std::size_t cols) {
  if (rows * cols != x.size()) throw Error(ErrorCode::InvalidArgument, "2-D transform shape mismatch");
  const int dims[2] = {static_cast<int>(rows), static_cast<int>(cols)};
  return run(x, 2, dims, FFTW_BACKWARD);
}

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) noexcept {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace specfact::fft
