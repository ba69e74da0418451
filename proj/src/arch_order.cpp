#include "specfact/arch_order.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "specfact/error.hpp"

namespace specfact {
namespace {

// c * (-i s) for s in {-1, 0, 1}, written out so the result is exact.
Complex times_minus_i_sign(Complex c, int s) {
  if (s > 0) return {c.imag(), -c.real()};
  if (s < 0) return {-c.imag(), c.real()};
  return {};
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

void require_real_ap(const APFunc& f) {
  if (!is_real(f)) throw Error(ErrorCode::NotReal, "coefficients violate c_{-w} = conj(c_w)");
}

}  // namespace

ArchOrder::ArchOrder(double a, double fl, std::string t) : alpha(a), floor(fl), tag(std::move(t)) {
  if (!std::isfinite(alpha) || !(alpha > 0.0)) throw Error(ErrorCode::InvalidArgument, "order slope must be positive");
  if (!(floor > 0.0)) throw Error(ErrorCode::InvalidArgument, "order floor must be positive");
}

double theta_hat(const ArchOrder& ord, int m, int n) { return m + ord.alpha * n; }

int order_sign(const ArchOrder& ord, Lattice k) {
  if (k == Lattice{0, 0}) return 0;
  const double t = theta_hat(ord, k);
  if (std::abs(t) <= ord.floor) {
    std::ostringstream msg;
    msg << "character (" << k.first << "," << k.second << ") has |m + alpha n| = " << std::abs(t)
        << " below the floor " << ord.floor;
    throw Error(ErrorCode::OrderCollision, msg.str());
  }
  return sign_of(t);
}

bool order_leq(const ArchOrder& ord, Lattice a, Lattice b) {
  return order_sign(ord, {b.first - a.first, b.second - a.second}) >= 0;
}

double certify_injective(const ArchOrder& ord, const BivarPoly& p) {
  int m_lo = 0, m_hi = 0, n_lo = 0, n_hi = 0;
  bool any = false;
  for (const auto& [k, c] : p.coeffs) {
    if (c == Complex{}) continue;
    if (!any) {
      m_lo = m_hi = k.first;
      n_lo = n_hi = k.second;
      any = true;
    }
    m_lo = std::min(m_lo, k.first);
    m_hi = std::max(m_hi, k.first);
    n_lo = std::min(n_lo, k.second);
    n_hi = std::max(n_hi, k.second);
  }
  double margin = std::numeric_limits<double>::infinity();
  const int dm = m_hi - m_lo;
  const int dn = n_hi - n_lo;
  for (int m = -dm; m <= dm; ++m) {
    for (int n = -dn; n <= dn; ++n) {
      if (m == 0 && n == 0) continue;
      order_sign(ord, {m, n});
      margin = std::min(margin, std::abs(theta_hat(ord, m, n)));
    }
  }
  return margin;
}

APFunc lift(const ArchOrder& ord, const BivarPoly& p) {
  std::map<double, Lattice> seen;
  APFunc out;
  for (const auto& [k, c] : p.coeffs) {
    if (c == Complex{}) continue;
    const double omega = theta_hat(ord, k);
    auto it = seen.lower_bound(omega - kFreqMergeTol);
    if (it != seen.end() && it->first <= omega + kFreqMergeTol) {
      std::ostringstream msg;
      msg << "lattice points (" << k.first << "," << k.second << ") and (" << it->second.first << ","
          << it->second.second << ") lift to the same frequency";
      throw Error(ErrorCode::OrderCollision, msg.str());
    }
    seen.emplace(omega, k);
    out.add(omega, c);
  }
  return out;
}

APFunc lift(const TrigPoly& p) {
  APFunc out;
  for (const auto& [k, c] : p.coeffs)
    if (c != Complex{}) out.add(static_cast<double>(k), c);
  return out;
}

TrigPoly hilbert_transform(const TrigPoly& f) {
  require_real(f);
  TrigPoly out;
  for (const auto& [k, c] : f.coeffs)
    if (k != 0) out.coeffs.emplace(k, times_minus_i_sign(c, sign_of(k)));
  return out;
}

BivarPoly hilbert_transform(const ArchOrder& ord, const BivarPoly& f) {
  require_real(f);
  BivarPoly out;
  for (const auto& [k, c] : f.coeffs) {
    const int s = order_sign(ord, k);
    if (s != 0) out.coeffs.emplace(k, times_minus_i_sign(c, s));
  }
  return out;
}

APFunc hilbert_transform(const APFunc& f) {
  require_real_ap(f);
  APFunc out;
  for (const auto& [omega, c] : f.coeffs()) {
    const int s = std::abs(omega) <= kFreqMergeTol ? 0 : sign_of(omega);
    if (s != 0) out.add(omega, times_minus_i_sign(c, s));
  }
  return out;
}

TrigPoly analytic_transform(const TrigPoly& f) {
  require_real(f);
  TrigPoly out;
  for (const auto& [k, c] : f.coeffs) {
    if (k == 0) out.coeffs.emplace(k, c);
    else if (k > 0) out.coeffs.emplace(k, 2.0 * c);
  }
  return out;
}

BivarPoly analytic_transform(const ArchOrder& ord, const BivarPoly& f) {
  require_real(f);
  BivarPoly out;
  for (const auto& [k, c] : f.coeffs) {
    const int s = order_sign(ord, k);
    if (s == 0) out.coeffs.emplace(k, c);
    else if (s > 0) out.coeffs.emplace(k, 2.0 * c);
  }
  return out;
}

APFunc analytic_transform(const APFunc& f) {
  require_real_ap(f);
  APFunc out;
  for (const auto& [omega, c] : f.coeffs()) {
    if (std::abs(omega) <= kFreqMergeTol) out.add(omega, c);
    else if (omega > 0.0) out.add(omega, 2.0 * c);
  }
  return out;
}

bool is_real(const APFunc& f, double tol) {
  for (const auto& [omega, c] : f.coeffs())
    if (std::abs(f.at(-omega) - std::conj(c)) > tol) return false;
  return true;
}

}  // namespace specfact
