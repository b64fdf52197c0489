#ifndef TWOPOINT_QUADRATURE_HPP
#define TWOPOINT_QUADRATURE_HPP

#include "twopoint/domain.hpp"
#include "twopoint/testlib.hpp"

namespace twopoint {

/// One evaluation of the expansion
///   rule_value = integral + correction + remainder.
/// The integral estimate is approx = rule_value - correction; its error is -remainder.
struct QuadratureResult {
  double rule = 0.0;
  double approx = 0.0;
  double correction = 0.0;
  double remainder = 0.0;
  double reference = 0.0;
  double identity_residual = 0.0;

  double tolerance() const noexcept;  // 1e-8 * (1 + |reference|)
  bool ok() const noexcept { return identity_residual <= tolerance(); }
};

/// (x-a) f(y) + (b-x) f(z).
double rule_value(const TestFunction& f, const NodeTriple& nodes, const Interval& iv);

/// sum_{k=2..n} (-1)^k/k! [((y-a)^k - (y-x)^k) f^(k-1)(y) + ((z-x)^k - (z-b)^k) f^(k-1)(z)]; 0 for n = 1.
double correction_sum(const TestFunction& f, int n, const NodeTriple& nodes, const Interval& iv);

/// (-1)^(n+1) * integral of S_n f^(n) over [a, b], split at y and z.
double remainder_numeric(const TestFunction& f, int n, const NodeTriple& nodes, const Interval& iv);

/// All terms of the expansion, with an oracle reference integral.
QuadratureResult expand(const TestFunction& f, int n, const NodeTriple& nodes, const Interval& iv);

/// f(y) + sum_{k=1..n} [(x-y)^k f^(k)(y) - (x-z)^k f^(k)(z)]/k! + (1/n!) int_y^z (x-t)^n f^(n+1)(t) dt,
/// which reproduces f(z).
double generalized_taylor(const TestFunction& f, int n, double y, double x, double z);

/// Mean value of f^(2n) implied by the even-order remainder:
///   -R_{2n} (2n+1)! / [(y-a)^{2n+1} + (x-y)^{2n+1} + (z-x)^{2n+1} + (b-z)^{2n+1}].
double mean_value_eta(const TestFunction& f, int n, const NodeTriple& nodes, const Interval& iv);

/// Composite rule of the given raw expansion order: uniform panels, pattern
/// (relative nodes in [0,1]) mapped affinely into each panel, approx summed
/// in panel order. Panels are evaluated with OpenMP when available.
double composite_integrate_order(const TestFunction& f, int order, int panels, const NodeTriple& pattern,
                                 const Interval& iv);
/// Single-threaded reference for composite_integrate_order; identical result.
double composite_integrate_order_serial(const TestFunction& f, int order, int panels, const NodeTriple& pattern,
                                        const Interval& iv);

/// Even-order composite construction: expansion order 2n, exact for
/// polynomials of degree <= 2n-1.
double composite_integrate(const TestFunction& f, int n, int panels, const NodeTriple& pattern, const Interval& iv);

/// Maps a relative pattern in [0,1]^3 into iv.
NodeTriple map_pattern(const NodeTriple& pattern, const Interval& iv);

}  // namespace twopoint

#endif  // TWOPOINT_QUADRATURE_HPP
