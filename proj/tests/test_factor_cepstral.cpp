#include <cmath>

#include "doctest.h"
#include "specfact/arch_order.hpp"
#include "specfact/error.hpp"
#include "specfact/factor_cepstral.hpp"
#include "specfact/factor_roots.hpp"
#include "support.hpp"

using namespace specfact;
using namespace testsupport;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

CepstralOptions with_grid(std::size_t n) {
  CepstralOptions o;
  o.grid = n;
  return o;
}

// Real weight with grid minimum at least 0.1: a random real part lifted by its sampled minimum.
TrigPoly positive_weight(Rng& rng, int d) {
  TrigPoly w = random_real(rng, d, 1.0 / (d + 1));
  double lo = 1e9;
  for (int j = 0; j < 4096; ++j) lo = std::min(lo, ref_eval(w, 2.0 * kPi * j / 4096).real());
  w.coeffs[0] += 0.2 - lo;
  return w;
}

}  // namespace

TEST_CASE("cepstral circle examples") {
  const auto c = cepstral_factor_circle(TrigPoly{{0, 4.0}});
  CHECK(max_abs_diff(c.h, TrigPoly{{0, 2.0}}) < 1e-14);

  const auto t = cepstral_factor_circle(one_plus(0.5), with_grid(1024));
  CHECK(max_abs_diff(t.h, TrigPoly{{0, 1.0}, {1, 0.5}}) < 1e-9);
  CHECK(t.residual < 1e-9);
  CHECK(t.v[0].imag() == 0.0);
  // Cepstrum of 1 + z/2 is log(1 + z/2): coefficient k is -(-1/2)^k / k.
  for (int k = 1; k <= 10; ++k) CHECK(std::abs(t.v[k] + std::pow(-0.5, k) / k) < 1e-12);
}

TEST_CASE("cepstral ordered examples") {
  const ArchOrder ord(std::sqrt(2.0));
  const auto c = cepstral_factor_ordered(BivarPoly{{{0, 0}, 9.0}}, ord, with_grid(64));
  CHECK(max_abs_diff(c.h, BivarPoly{{{0, 0}, 3.0}}) < 1e-13);

  const BivarPoly g{{{0, 0}, 1.0}, {{1, 0}, 0.5}, {{0, 1}, 1.0 / 3.0}};
  const auto t = cepstral_factor_ordered(ref_squared_modulus(g), ord, with_grid(256));
  CHECK(max_abs_diff(t.h, g) < 1e-6);
  CHECK(t.containment.tau == doctest::Approx(std::sqrt(2.0)));
  CHECK(t.containment.min_freq >= -1e-8);
  CHECK(t.containment.max_freq <= std::sqrt(2.0) + 1e-8);
  CHECK(t.containment.margin >= -1e-8);
  CHECK(std::abs(eval(t.lifted, 0.7) - ref_eval(g, 0.7, std::sqrt(2.0) * 0.7)) < 1e-6);
}

TEST_CASE("cepstral errors") {
  // The boundary zero makes log w singular without regularization.
  CHECK(code_of([] { cepstral_factor_circle(one_plus(1.0), with_grid(256)); }) == ErrorCode::NonpositiveStage);
  CHECK(code_of([] { cepstral_factor_circle(one_plus(0.5), with_grid(100)); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { cepstral_factor_circle(one_plus(0.5), with_grid(8)); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { cepstral_factor_circle(TrigPoly{{-1, 1.0}, {0, 1.0}, {1, 1.0}}); }) ==
        ErrorCode::NotNonnegative);
  // A root very close to the circle gives a cepstrum that decays too slowly for the grid.
  CHECK(code_of([] { cepstral_factor_circle(one_plus(0.999), with_grid(64)); }) == ErrorCode::GridTooCoarse);
  CHECK(code_of([] { herglotz_factor(TrigPoly{{0, 1.0}}, Complex{1.0, 0.0}, 10); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { herglotz_factor(TrigPoly{{0, 1.0}}, Complex{}, 1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("herglotz examples") {
  CHECK(std::abs(herglotz_factor(TrigPoly{{0, 4.0}}, Complex{0.2, -0.4}, 50).value - 2.0) < 1e-12);
  const HerglotzValue z0 = herglotz_factor(one_plus(0.5), Complex{}, 1000);
  CHECK(std::abs(z0.value - 1.0) < 1e-3);
  CHECK(z0.samples >= 64000);
  CHECK(std::abs(herglotz_factor(one_plus(0.5), Complex{0.3, 0.0}, 1000).value - 1.15) < 1e-3);
  // Off the real axis the limit is 1 + z/2 as well.
  const Complex z{0.1, 0.4};
  CHECK(std::abs(herglotz_factor(one_plus(0.5), z, 1000).value - (1.0 + 0.5 * z)) < 1e-3);
}

TEST_CASE("herglotz nudges nodes at exact zeros") {
  // |1 + e^{ix}|^2 vanishes at x = pi, which is a node of every even grid.
  const HerglotzValue v = herglotz_factor(one_plus(1.0), Complex{}, 100);
  CHECK(v.nudged == 1);
  CHECK(std::isfinite(v.value.real()));
}

TEST_CASE("wiener_norm_check examples") {
  const WienerCheck zero = wiener_norm_check(TrigPoly{});
  CHECK(zero.norm == 0.0);
  CHECK(zero.exp_norm == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(zero.bound == 1.0);
  CHECK(zero.holds);

  const WienerCheck one = wiener_norm_check(TrigPoly{{1, 1.0}});
  double series = 0.0, fact = 1.0;
  for (int k = 0; k < 30; ++k) {
    series += 1.0 / fact;
    fact *= k + 1;
  }
  CHECK(one.exp_norm == doctest::Approx(series).epsilon(1e-12));
  CHECK(one.holds);

  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    CHECK(wiener_norm_check(random_real(rng, 4)).holds);
    CHECK(wiener_norm_check(random_real(rng, 2, true)).holds);
  }
}

TEST_CASE("expand_ladder schedules") {
  const auto none = expand_ladder({});
  REQUIRE(none.size() == 1);
  CHECK(none[0].m == 0.0);
  CHECK(none[0].n == 0);

  const auto m = expand_ladder({1e3, 0});
  REQUIRE(m.size() == 3);
  CHECK(m[0].m == 10.0);
  CHECK(m[2].m == doctest::Approx(1000.0));

  const auto both = expand_ladder({100.0, 64});
  REQUIRE(both.size() == 4);
  CHECK(both[0].n == 8);
  CHECK(both[3].n == 64);
  CHECK(both[3].m == doctest::Approx(100.0));
}

TEST_CASE("property: one-sided spectrum, positive mean and Mahler normalization") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const TrigPoly w = positive_weight(rng, rng.integer(1, 16));
    const auto t = cepstral_factor_circle(w, with_grid(4096));
    CHECK(t.h.min_freq() >= 0);
    CHECK(t.v.min_freq() >= 0);
    CHECK(t.h[0].real() > 0.0);
    CHECK(t.h[0].imag() == 0.0);
    // h_0 = exp(mean u) = sqrt(M(w)).
    double mean_log = 0.0;
    for (int j = 0; j < 8192; ++j) mean_log += std::log(ref_eval(w, 2.0 * kPi * (j + 0.5) / 8192).real());
    CHECK(std::abs(t.h[0].real() - std::exp(mean_log / 8192 / 2.0)) < 1e-6);
    // Agreement with the root-based factor.
    CHECK(max_coeff_diff(t.h, fejer_riesz(w).h) < 1e-7);
    // |h| = exp(u) on the grid.
    CHECK(t.residual < 1e-8);
  }
}

TEST_CASE("property: ladder deltas decrease and every stage is certified invertible") {
  Rng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const TrigPoly w = positive_weight(rng, rng.integer(1, 8));
    CepstralOptions o = with_grid(1024);
    o.ladder = {1e4, 64};
    const auto t = cepstral_factor_circle(w, o);
    CHECK(t.ladder.size() == 4);
    CHECK(t.ladder_monotone);
    for (std::size_t i = 2; i < t.ladder.size(); ++i) CHECK(t.ladder[i].l2_delta < t.ladder[i - 1].l2_delta);
    for (const LadderStage& st : t.ladder) {
      CHECK(st.min_abs_h > 0.0);
      CHECK(st.inverse_leak <= 1e-8);
      CHECK(st.invertible_certified);
    }
  }
}

TEST_CASE("property: bivariate factors stay inside the order interval") {
  Rng rng(13);
  const ArchOrder ord((1.0 + std::sqrt(5.0)) / 2.0);
  for (int trial = 0; trial < 5; ++trial) {
    BivarPoly g{{{0, 0}, 1.0}};
    for (int m = 0; m <= 1; ++m)
      for (int n = 0; n <= 1; ++n)
        if (m + n > 0) g.coeffs[{m, n}] = 0.3 * rng.unit_box();
    const auto t = cepstral_factor_ordered(ref_squared_modulus(g), ord, with_grid(128));
    for (const auto& [k, c] : t.h.coeffs) CHECK(order_sign(ord, k) >= 0);
    CHECK(t.containment.margin >= -1e-8);
    CHECK(max_abs_diff(t.h, g) < 1e-6);
  }
}
