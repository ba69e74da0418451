#ifndef SPECFACT_SAMPLES_HPP
#define SPECFACT_SAMPLES_HPP

#include <cstddef>
#include <filesystem>
#include <numbers>

#include "specfact/serialize.hpp"

namespace specfact {

/// Writes samples of f as CSV with a header row and %.17g values.
///
/// Circle: x_j = 2 pi j / n with columns x, re, im. Torus: n x n grid,
/// row-major, columns x, y, re. AP: x_j = length * j / n with columns x, re, im.
void emit_samples(const Function& f, std::size_t n, const std::filesystem::path& path,
                  double length = 2.0 * std::numbers::pi);

/// Circle only: columns x, w, h_sq with h_sq = |h(x)|^2, for checking a factor by eye.
void emit_fit(const TrigPoly& w, const TrigPoly& h, std::size_t n, const std::filesystem::path& path);

}  // namespace specfact

#endif  // SPECFACT_SAMPLES_HPP
