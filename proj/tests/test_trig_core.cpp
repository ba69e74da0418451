#include <cmath>

#include "doctest.h"
#include "specfact/error.hpp"
#include "specfact/trig_poly.hpp"
#include "support.hpp"

using namespace specfact;
using namespace testsupport;

namespace {

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("eval on small polynomials") {
  CHECK(close(eval(TrigPoly{{0, 1.0}}, 1.7), 1.0, 1e-15));
  CHECK(close(eval(TrigPoly{{1, 1.0}}, kPi), -1.0, 1e-15));
  CHECK(close(eval(TrigPoly{{-1, 1.0}, {0, 2.0}, {1, 1.0}}, 0.0), 4.0, 1e-15));
  CHECK(close(eval(BivarPoly{{{1, 0}, 1.0}, {{0, 1}, 1.0}}, kPi, 0.0), 0.0, 1e-15));
}

TEST_CASE("mul examples") {
  const TrigPoly q{{-2, Complex{0.5, 1.0}}, {3, 2.0}};
  CHECK(mul(TrigPoly{{0, 1.0}}, q) == q);
  CHECK(mul(TrigPoly{{0, 1.0}, {1, 1.0}}, TrigPoly{{-1, 1.0}, {0, 1.0}}) == TrigPoly{{-1, 1.0}, {0, 2.0}, {1, 1.0}});
  CHECK(mul(TrigPoly{{1, 1.0}}, TrigPoly{{-1, 1.0}}) == TrigPoly{{0, 1.0}});
}

TEST_CASE("squared_modulus examples") {
  CHECK(squared_modulus(TrigPoly{{0, 1.0}, {1, 1.0}}) == TrigPoly{{-1, 1.0}, {0, 2.0}, {1, 1.0}});
  const Complex c{0.6, -0.8};
  const TrigPoly w = squared_modulus(TrigPoly{{0, c}});
  CHECK(w.coeffs.size() == 1);
  CHECK(close(w[0], std::norm(c), 1e-15));
  CHECK(squared_modulus(TrigPoly{{0, 1.0}, {1, 0.5}}) == TrigPoly{{-1, 0.5}, {0, 1.25}, {1, 0.5}});
}

TEST_CASE("fejer_smooth examples") {
  CHECK(fejer_smooth(TrigPoly{{0, 2.0}}, 5) == TrigPoly{{0, 2.0}});
  CHECK(fejer_smooth(TrigPoly{{-1, 1.0}, {0, 2.0}, {1, 1.0}}, 2) == TrigPoly{{-1, 0.5}, {0, 2.0}, {1, 0.5}});
  // Weights tend to 1.
  Rng rng(11);
  const TrigPoly w = random_real(rng, 6);
  CHECK(max_abs_diff(fejer_smooth(w, 1000000), w) < 1e-5);
  // Frequencies at or beyond n are removed.
  CHECK(fejer_smooth(TrigPoly{{3, 1.0}, {0, 1.0}}, 3)[3] == Complex{});
  CHECK(code_of([] { fejer_smooth(TrigPoly{{0, 1.0}}, 0); }) == ErrorCode::InvalidArgument);
  // Torus: product of per-axis weights.
  const BivarPoly b = fejer_smooth(BivarPoly{{{1, 1}, 1.0}, {{0, 0}, 1.0}}, 2);
  CHECK(b[{1, 1}] == Complex{0.25, 0.0});
}

TEST_CASE("min_on_grid examples") {
  CHECK(min_on_grid(TrigPoly{{0, 1.0}}, 16) == doctest::Approx(1.0));
  for (std::size_t n : {64u, 256u, 1024u}) {
    const double m = min_on_grid(one_plus(1.0), n);
    CHECK(m >= -1e-14);
    CHECK(m <= 8.0 / static_cast<double>(n * n));
  }
  CHECK(min_on_grid(TrigPoly{{-1, 1.0}, {0, 1.0}, {1, 1.0}}, 64) == doctest::Approx(-1.0));
  CHECK(code_of([] { min_on_grid(TrigPoly{{1, 1.0}}, 64); }) == ErrorCode::NotReal);
  CHECK(code_of([] { min_on_grid(one_plus(1.0), 4); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("degree, spectrum bounds and pruning") {
  const TrigPoly p{{-3, 0.0}, {2, 1.0}, {-1, 1e-20}};
  CHECK(p.degree() == 2);
  CHECK(p.min_freq() == -1);
  CHECK(p.max_freq() == 2);
  CHECK(p.pruned(1e-15) == TrigPoly{{2, 1.0}});
  CHECK(TrigPoly{}.degree() == 0);
  CHECK(code_of([] { (void)TrigPoly{}.min_freq(); }) == ErrorCode::AllCoefficientsZero);
  CHECK(BivarPoly{{{-2, 1}, 1.0}, {{0, 3}, 0.0}}.degree() == 2);
}

TEST_CASE("realness") {
  CHECK(is_real(one_plus(0.3)));
  CHECK_FALSE(is_real(TrigPoly{{1, 1.0}}));
  CHECK_FALSE(is_real(TrigPoly{{0, Complex{1.0, 1e-9}}}));
  CHECK(is_real(BivarPoly{{{1, -1}, Complex{1.0, 2.0}}, {{-1, 1}, Complex{1.0, -2.0}}}));
  CHECK(code_of([] { require_real(BivarPoly{{{1, 0}, 1.0}}); }) == ErrorCode::NotReal);
}

TEST_CASE("property: eval is multiplicative under mul") {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    TrigPoly p, q;
    for (int k = -rng.integer(0, 16); k <= 16; ++k) p.coeffs[k] = rng.unit_box();
    for (int k = 0; k <= rng.integer(0, 16); ++k) q.coeffs[k - 8] = rng.unit_box();
    const TrigPoly pq = mul(p, q);
    for (int s = 0; s < 64; ++s) {
      const double x = rng.uniform(0.0, 2.0 * kPi);
      const Complex want = ref_eval(p, x) * ref_eval(q, x);
      CHECK(std::abs(eval(pq, x) - want) <= 1e-12 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("property: squared_modulus is exactly Hermitian and real on samples") {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const TrigPoly h = random_analytic(rng, rng.integer(0, 16));
    const TrigPoly w = squared_modulus(h);
    for (const auto& [k, c] : w.coeffs) CHECK(c == std::conj(w[-k]));
    CHECK(max_abs_diff(w, ref_squared_modulus(h)) <= 1e-13);
    for (const Complex& v : sample(w, 256)) CHECK(std::abs(v.imag()) <= 1e-12);
  }
  BivarPoly h;
  for (int m = 0; m <= 2; ++m)
    for (int n = -1; n <= 1; ++n) h.coeffs[{m, n}] = rng.unit_box();
  const BivarPoly w = squared_modulus(h);
  for (const auto& [k, c] : w.coeffs) CHECK(c == std::conj(w[{-k.first, -k.second}]));
  CHECK(max_abs_diff(w, ref_squared_modulus(h)) < 1e-14);
}

TEST_CASE("property: Fejer smoothing keeps nonnegative weights nonnegative") {
  Rng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const TrigPoly w = squared_modulus(random_analytic(rng, rng.integer(1, 16)));
    for (int n : {1, 2, 5, 9, 40}) CHECK(min_on_grid(fejer_smooth(w, n), 512) >= -1e-12);
  }
  BivarPoly g{{{0, 0}, 1.0}, {{1, 0}, 1.0}, {{0, 1}, -1.0}};
  const BivarPoly w = squared_modulus(g);
  for (int n : {1, 2, 3}) CHECK(min_on_grid(fejer_smooth(w, n), 32) >= -1e-12);
}

TEST_CASE("sampling agrees with direct sums") {
  Rng rng(15);
  TrigPoly p;
  for (int k = -20; k <= 20; ++k) p.coeffs[k] = rng.unit_box();
  // Grid smaller than the support: folding is still exact at the nodes.
  for (std::size_t n : {16u, 64u}) {
    const std::vector<Complex> s = sample(p, n);
    for (std::size_t j = 0; j < n; ++j) CHECK(std::abs(s[j] - ref_eval(p, 2.0 * kPi * j / n)) < 1e-12);
  }
  BivarPoly b;
  for (int m = -3; m <= 3; ++m)
    for (int n = -3; n <= 3; ++n) b.coeffs[{m, n}] = rng.unit_box();
  const std::size_t n = 16;
  const std::vector<Complex> s = sample(b, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      CHECK(std::abs(s[i * n + j] - ref_eval(b, 2.0 * kPi * i / n, 2.0 * kPi * j / n)) < 1e-12);
}

TEST_CASE("wiener norm and coefficient distance") {
  CHECK(wiener_norm(TrigPoly{{0, Complex{3.0, 4.0}}, {2, -1.0}}) == 6.0);
  CHECK(max_coeff_diff(TrigPoly{{0, 1.0}}, TrigPoly{{1, 2.0}}) == 2.0);
  CHECK(wiener_norm(BivarPoly{{{1, 1}, -2.0}}) == 2.0);
}
