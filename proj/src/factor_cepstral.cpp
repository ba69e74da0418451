#include "specfact/factor_cepstral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <type_traits>

#include "specfact/error.hpp"
#include "specfact/fft.hpp"

namespace specfact {
namespace {

constexpr double kInverseLeakLimit = 1e-8;

void check_grid(std::size_t n, int degree) {
  if (!fft::is_power_of_two(n)) throw Error(ErrorCode::InvalidArgument, "grid size must be a power of two");
  if (n < 8 * (static_cast<std::size_t>(degree) + 1))
    throw Error(ErrorCode::InvalidArgument,
                "grid of " + std::to_string(n) + " is below 8 (degree + 1) = " + std::to_string(8 * (degree + 1)));
}

template <class Poly>
Poly stage_weight(const Poly& w, const LadderStage& st) {
  Poly ws = st.n > 0 ? fejer_smooth(w, st.n) : w;
  if (st.m > 0.0) {
    if constexpr (std::is_same_v<Poly, TrigPoly>) ws.coeffs[0] += 1.0 / st.m;
    else ws.coeffs[{0, 0}] += 1.0 / st.m;
  }
  return ws;
}

// Energy near the Nyquist frequency along every axis, relative to the total.
double nyquist_ratio_1d(const std::vector<Complex>& coeffs) {
  const std::size_t n = coeffs.size();
  const long half = static_cast<long>(n / 2);
  double total = 0.0, edge = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double e = std::norm(coeffs[j]);
    total += e;
    if (std::abs(fft::symmetric_freq(j, n)) >= half - 2) edge += e;
  }
  return total > 0.0 ? edge / total : 0.0;
}

double nyquist_ratio_2d(const std::vector<Complex>& coeffs, std::size_t n) {
  const long half = static_cast<long>(n / 2);
  double total = 0.0, edge = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const bool edge_row = std::abs(fft::symmetric_freq(i, n)) >= half - 2;
    for (std::size_t j = 0; j < n; ++j) {
      const double e = std::norm(coeffs[i * n + j]);
      total += e;
      if (edge_row || std::abs(fft::symmetric_freq(j, n)) >= half - 2) edge += e;
    }
  }
  return total > 0.0 ? edge / total : 0.0;
}

void check_aliasing(double ratio, double limit, const char* what) {
  if (ratio > limit)
    throw Error(ErrorCode::GridTooCoarse, std::string(what) + " has " + std::to_string(ratio) +
                                              " of its energy near Nyquist");
}

double max_abs(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const Complex& c : v) m = std::max(m, std::abs(c));
  return m;
}

template <class Poly>
double l2_distance(const Poly& a, const Poly& b) {
  double s = 0.0;
  const Poly d = a - b;
  for (const auto& [k, c] : d.coeffs) s += std::norm(c);
  return std::sqrt(s);
}

template <class Trace>
void finish_ladder(Trace& trace) {
  for (std::size_t i = 2; i < trace.ladder.size(); ++i)
    if (!(trace.ladder[i].l2_delta < trace.ladder[i - 1].l2_delta)) trace.ladder_monotone = false;
}

void scale_in_place(std::vector<Complex>& v, double s) {
  for (Complex& c : v) c *= s;
}

}  // namespace

std::vector<LadderStage> expand_ladder(const Ladder& ladder) {
  std::vector<double> ms;
  if (ladder.m_max > 0.0) {
    for (double m = 10.0; m <= ladder.m_max * (1.0 + 1e-12); m *= 10.0) ms.push_back(m);
    if (ms.empty()) ms.push_back(ladder.m_max);
  } else {
    ms.push_back(0.0);
  }
  std::vector<int> ns;
  if (ladder.n_max > 0) {
    for (int div : {8, 4, 2, 1}) {
      const int n = ladder.n_max / div;
      if (n >= 1 && (ns.empty() || ns.back() != n)) ns.push_back(n);
    }
  } else {
    ns.push_back(0);
  }
  const std::size_t count = std::max(ms.size(), ns.size());
  std::vector<LadderStage> stages(count);
  for (std::size_t i = 0; i < count; ++i) {
    stages[i].m = ms[std::min(i, ms.size() - 1)];
    stages[i].n = ns[std::min(i, ns.size() - 1)];
  }
  return stages;
}

CepstralTrace<TrigPoly> cepstral_factor_circle(const TrigPoly& w, const CepstralOptions& opts) {
  require_real(w);
  const std::size_t n = opts.grid;
  check_grid(n, w.degree());
  if (min_on_grid(w, n) < -opts.nonneg_tol) throw Error(ErrorCode::NotNonnegative, "weight is negative on the grid");

  CepstralTrace<TrigPoly> trace;
  trace.ladder = expand_ladder(opts.ladder);
  const double inv_n = 1.0 / static_cast<double>(n);

  for (std::size_t s = 0; s < trace.ladder.size(); ++s) {
    LadderStage& st = trace.ladder[s];
    const std::vector<Complex> ws = sample(stage_weight(w, st), n);

    std::vector<Complex> u(n);
    st.grid_min = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      const double val = ws[j].real();
      st.grid_min = std::min(st.grid_min, val);
      u[j] = 0.5 * std::log(val);
    }
    if (!(st.grid_min > 0.0))
      throw Error(ErrorCode::NonpositiveStage, "stage weight reaches " + std::to_string(st.grid_min) +
                                                   " on the grid; regularize with the ladder");

    std::vector<Complex> u_hat = fft::forward(u);
    scale_in_place(u_hat, inv_n);
    check_aliasing(nyquist_ratio_1d(u_hat), opts.nyquist_energy, "log weight");

    // A: keep the mean, double positive frequencies, drop the rest.
    std::vector<Complex> v_hat(n);
    v_hat[0] = Complex{u_hat[0].real(), 0.0};
    for (std::size_t j = 1; j < n / 2; ++j) v_hat[j] = 2.0 * u_hat[j];

    std::vector<Complex> h_samples = fft::backward(v_hat);
    for (Complex& c : h_samples) c = std::exp(c);
    std::vector<Complex> h_hat = fft::forward(h_samples);
    scale_in_place(h_hat, inv_n);
    check_aliasing(nyquist_ratio_1d(h_hat), opts.nyquist_energy, "factor");
    h_hat[0] = Complex{std::exp(v_hat[0].real()), 0.0};

    // h is one-sided, so bin j is read as frequency j in [0, n).
    const double floor = opts.truncation * max_abs(h_hat);
    TrigPoly h;
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(h_hat[j]) > floor) h.coeffs.emplace(static_cast<int>(j), h_hat[j]);

    st.min_abs_h = std::numeric_limits<double>::infinity();
    std::vector<Complex> inv(n);
    for (std::size_t j = 0; j < n; ++j) {
      st.min_abs_h = std::min(st.min_abs_h, std::abs(h_samples[j]));
      inv[j] = 1.0 / h_samples[j];
    }
    std::vector<Complex> inv_hat = fft::forward(inv);
    double leak = 0.0;
    for (std::size_t j = n / 2; j < n; ++j) leak = std::max(leak, std::abs(inv_hat[j]));
    st.inverse_leak = leak / max_abs(inv_hat);
    st.invertible_certified = st.min_abs_h > 0.0 && st.inverse_leak <= kInverseLeakLimit;

    if (s > 0) st.l2_delta = l2_distance(h, trace.h);
    trace.h = std::move(h);

    if (s + 1 == trace.ladder.size()) {
      trace.u.resize(n);
      for (std::size_t j = 0; j < n; ++j) trace.u[j] = u[j].real();
      trace.v = TrigPoly{};
      for (std::size_t j = 0; j < n / 2; ++j)
        if (v_hat[j] != Complex{}) trace.v.coeffs.emplace(static_cast<int>(j), v_hat[j]);
    }
  }
  finish_ladder(trace);

  const std::vector<Complex> w_samples = sample(w, n);
  const std::vector<Complex> h_samples = sample(trace.h, n);
  for (std::size_t j = 0; j < n; ++j)
    trace.residual = std::max(trace.residual, std::abs(w_samples[j].real() - std::norm(h_samples[j])));
  return trace;
}

OrderedTrace cepstral_factor_ordered(const BivarPoly& w, const ArchOrder& ord, const CepstralOptions& opts) {
  require_real(w);
  const std::size_t n = opts.grid;
  check_grid(n, w.degree());
  if (min_on_grid(w, n) < -opts.nonneg_tol) throw Error(ErrorCode::NotNonnegative, "weight is negative on the grid");

  // Order sign of every resolvable character; throws on a collision.
  std::vector<int> sign(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sign[i * n + j] = order_sign(ord, {static_cast<int>(fft::symmetric_freq(i, n)),
                                         static_cast<int>(fft::symmetric_freq(j, n))});
  auto lattice = [n](std::size_t idx) {
    return Lattice{static_cast<int>(fft::symmetric_freq(idx / n, n)),
                   static_cast<int>(fft::symmetric_freq(idx % n, n))};
  };

  OrderedTrace trace;
  trace.ladder = expand_ladder(opts.ladder);
  const double inv_nn = 1.0 / static_cast<double>(n * n);

  for (std::size_t s = 0; s < trace.ladder.size(); ++s) {
    LadderStage& st = trace.ladder[s];
    const std::vector<Complex> ws = sample(stage_weight(w, st), n);

    std::vector<Complex> u(n * n);
    st.grid_min = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n * n; ++j) {
      const double val = ws[j].real();
      st.grid_min = std::min(st.grid_min, val);
      u[j] = 0.5 * std::log(val);
    }
    if (!(st.grid_min > 0.0))
      throw Error(ErrorCode::NonpositiveStage, "stage weight reaches " + std::to_string(st.grid_min) +
                                                   " on the grid; regularize with the ladder");

    std::vector<Complex> u_hat = fft::forward2(u, n, n);
    scale_in_place(u_hat, inv_nn);
    check_aliasing(nyquist_ratio_2d(u_hat, n), opts.nyquist_energy, "log weight");

    std::vector<Complex> v_hat(n * n);
    for (std::size_t j = 0; j < n * n; ++j) {
      if (sign[j] == 0) v_hat[j] = Complex{u_hat[j].real(), 0.0};
      else if (sign[j] > 0) v_hat[j] = 2.0 * u_hat[j];
    }

    std::vector<Complex> h_samples = fft::backward2(v_hat, n, n);
    for (Complex& c : h_samples) c = std::exp(c);
    std::vector<Complex> h_hat = fft::forward2(h_samples, n, n);
    scale_in_place(h_hat, inv_nn);
    check_aliasing(nyquist_ratio_2d(h_hat, n), opts.nyquist_energy, "factor");
    h_hat[0] = Complex{std::exp(v_hat[0].real()), 0.0};
    for (std::size_t j = 0; j < n * n; ++j)
      if (sign[j] < 0) h_hat[j] = Complex{};

    const double floor = opts.truncation * max_abs(h_hat);
    BivarPoly h;
    for (std::size_t j = 0; j < n * n; ++j)
      if (std::abs(h_hat[j]) > floor) h.coeffs.emplace(lattice(j), h_hat[j]);

    st.min_abs_h = std::numeric_limits<double>::infinity();
    std::vector<Complex> inv(n * n);
    for (std::size_t j = 0; j < n * n; ++j) {
      st.min_abs_h = std::min(st.min_abs_h, std::abs(h_samples[j]));
      inv[j] = 1.0 / h_samples[j];
    }
    const std::vector<Complex> inv_hat = fft::forward2(inv, n, n);
    double leak = 0.0;
    for (std::size_t j = 0; j < n * n; ++j)
      if (sign[j] < 0) leak = std::max(leak, std::abs(inv_hat[j]));
    st.inverse_leak = leak / max_abs(inv_hat);
    st.invertible_certified = st.min_abs_h > 0.0 && st.inverse_leak <= kInverseLeakLimit;

    if (s > 0) st.l2_delta = l2_distance(h, trace.h);
    trace.h = std::move(h);

    if (s + 1 == trace.ladder.size()) {
      trace.u.resize(n * n);
      for (std::size_t j = 0; j < n * n; ++j) trace.u[j] = u[j].real();
      trace.v = BivarPoly{};
      for (std::size_t j = 0; j < n * n; ++j)
        if (v_hat[j] != Complex{}) trace.v.coeffs.emplace(lattice(j), v_hat[j]);
    }
  }
  finish_ladder(trace);

  const std::vector<Complex> w_samples = sample(w, n);
  const std::vector<Complex> h_samples = sample(trace.h, n);
  for (std::size_t j = 0; j < n * n; ++j)
    trace.residual = std::max(trace.residual, std::abs(w_samples[j].real() - std::norm(h_samples[j])));

  Containment& c = trace.containment;
  for (const auto& [k, coef] : w.pruned().coeffs) c.tau = std::max(c.tau, std::abs(theta_hat(ord, k)));
  c.min_freq = std::numeric_limits<double>::infinity();
  c.max_freq = -std::numeric_limits<double>::infinity();
  for (const auto& [k, coef] : trace.h.coeffs) {
    c.min_freq = std::min(c.min_freq, theta_hat(ord, k));
    c.max_freq = std::max(c.max_freq, theta_hat(ord, k));
  }
  c.margin = std::min(c.min_freq, c.tau - c.max_freq);
  trace.lifted = lift(ord, trace.h);
  return trace;
}

HerglotzValue herglotz_factor(const TrigPoly& w, Complex z, int n) {
  if (!(std::abs(z) < 1.0)) throw Error(ErrorCode::InvalidArgument, "herglotz_factor needs |z| < 1");
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "herglotz_factor needs n >= 2");
  require_real(w);
  if (w.is_zero()) throw Error(ErrorCode::AllCoefficientsZero, "herglotz_factor of the zero weight");

  HerglotzValue out{};
  out.samples = fft::next_power_of_two(std::max<std::size_t>(1024, 64 * static_cast<std::size_t>(n)));
  const std::size_t m = out.samples;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
  const Complex rz = (1.0 - 1.0 / n) * z;
  const std::vector<Complex> ws = sample(w, m);

  Complex sum{};
  for (std::size_t j = 0; j < m; ++j) {
    double t = step * static_cast<double>(j);
    double val = ws[j].real();
    if (!(val > 0.0)) {
      t += 0.5 * step;
      val = eval(w, t).real();
      ++out.nudged;
      if (!(val > 0.0)) throw Error(ErrorCode::LogSingular, "weight vanishes at a quadrature node and its neighbour");
    }
    const Complex e = std::polar(1.0, t);
    sum += (e + rz) / (e - rz) * (0.5 * std::log(val));
  }
  out.value = std::exp(sum / static_cast<double>(m));
  return out;
}

namespace {

std::size_t wiener_grid(int degree, double norm) {
  const double need = 8.0 * (degree + 1) * std::ceil(norm + 4.0);
  return fft::next_power_of_two(std::max<std::size_t>(256, static_cast<std::size_t>(need)));
}

WienerCheck make_check(double norm, const std::vector<Complex>& hat) {
  WienerCheck out;
  out.norm = norm;
  const double floor = 1e-15 * max_abs(hat);
  for (const Complex& c : hat)
    if (std::abs(c) > floor) out.exp_norm += std::abs(c);
  out.bound = std::exp(norm);
  out.holds = out.exp_norm <= out.bound + 1e-8;
  return out;
}

}  // namespace

WienerCheck wiener_norm_check(const TrigPoly& f) {
  const double norm = wiener_norm(f);
  const std::size_t n = wiener_grid(f.degree(), norm);
  std::vector<Complex> s = sample(f, n);
  for (Complex& c : s) c = std::exp(c);
  std::vector<Complex> hat = fft::forward(s);
  scale_in_place(hat, 1.0 / static_cast<double>(n));
  return make_check(norm, hat);
}

WienerCheck wiener_norm_check(const BivarPoly& f) {
  const double norm = wiener_norm(f);
  const std::size_t n = wiener_grid(f.degree(), norm);
  std::vector<Complex> s = sample(f, n);
  for (Complex& c : s) c = std::exp(c);
  std::vector<Complex> hat = fft::forward2(s, n, n);
  scale_in_place(hat, 1.0 / static_cast<double>(n * n));
  return make_check(norm, hat);
}

}  // namespace specfact
