#ifndef SPECFACT_ARCH_ORDER_HPP
#define SPECFACT_ARCH_ORDER_HPP

#include <string>

#include "specfact/ap_func.hpp"
#include "specfact/trig_poly.hpp"

namespace specfact {

/// Archimedean order on the dual of the 2-torus induced by the winding line
/// t -> (t, alpha t): the character (m, n) sits at real frequency m + alpha n,
/// and characters are compared by that frequency.
///
/// alpha is assumed irrational. Floating point cannot check that, so every
/// operation certifies the order on the lattice points it actually touches:
/// a nonzero (m, n) with |m + alpha n| <= floor is an OrderCollision.
struct ArchOrder {
  double alpha;
  double floor = 1e-9;
  /// Optional exact description of alpha (e.g. "sqrt(2)"); informational only.
  std::string tag;

  explicit ArchOrder(double alpha, double floor = 1e-9, std::string tag = {});
};

/// m + alpha n.
double theta_hat(const ArchOrder& ord, int m, int n);
inline double theta_hat(const ArchOrder& ord, Lattice k) { return theta_hat(ord, k.first, k.second); }

/// Sign of the character in the order: -1, 0 (only for (0,0)) or +1.
int order_sign(const ArchOrder& ord, Lattice k);

/// a <= b in the order.
bool order_leq(const ArchOrder& ord, Lattice a, Lattice b);

/// Checks that theta_hat is injective on the bounding box of p's support
/// (every nonzero difference stays above the floor) and returns the smallest
/// |theta_hat| over those differences. Throws OrderCollision otherwise.
double certify_injective(const ArchOrder& ord, const BivarPoly& p);

/// The lift f -> f o theta: coefficient at (m, n) moves to frequency m + alpha n.
/// Throws OrderCollision if two support points land within kFreqMergeTol.
APFunc lift(const ArchOrder& ord, const BivarPoly& p);
/// Circle polynomials embed along the n = 0 axis: frequency k stays k.
APFunc lift(const TrigPoly& p);

// Hilbert transform: coefficient at chi times -i sign(chi). Inputs must be real.
TrigPoly hilbert_transform(const TrigPoly& f);
BivarPoly hilbert_transform(const ArchOrder& ord, const BivarPoly& f);
APFunc hilbert_transform(const APFunc& f);

// Analytic transform f + i H(f): positive coefficients doubled, negative dropped,
// the mean kept. Inputs must be real.
TrigPoly analytic_transform(const TrigPoly& f);
BivarPoly analytic_transform(const ArchOrder& ord, const BivarPoly& f);
APFunc analytic_transform(const APFunc& f);

bool is_real(const APFunc& f, double tol = kRealnessTol);

}  // namespace specfact

#endif  // SPECFACT_ARCH_ORDER_HPP
