#ifndef TWOPOINT_BOUNDS_HPP
#define TWOPOINT_BOUNDS_HPP

#include <string>

#include "twopoint/domain.hpp"
#include "twopoint/fink.hpp"
#include "twopoint/testlib.hpp"

namespace twopoint {

/// One bound evaluated against the remainder it is meant to dominate.
struct BoundReport {
  std::string bound_name;
  int n = 1;
  NormSpec p = NormSpec::infinity();
  NodeTriple nodes{0.0, 0.0, 0.0};
  Interval iv{0.0, 1.0};
  double bound_value = 0.0;
  double remainder_abs = 0.0;
  bool satisfied = true;
  double tightness = 0.0;
  bool h_estimated = false;

  /// Fills satisfied and tightness from bound_value and remainder_abs.
  static BoundReport make(std::string name, int n, NormSpec p, NodeTriple nodes, Interval iv, double bound_value,
                          double remainder_abs, bool h_estimated = false);
};

/// remainder_abs <= bound * (1 + 1e-8) + 1e-12
bool dominates(double bound, double remainder_abs) noexcept;

/// (1/n!) [max{y-a, (z-y)/2 + |(y+z)/2 - x|, b-z}]^n * varval.
double bound_variation(int n, const NormSpec& p, const NodeTriple& nodes, const Interval& iv, double varval);

/// Kernel-norm bound on |R_n| given ||f^(n)||_p = normval: the conjugate norm of S_n times normval.
double bound_lp(int n, const NormSpec& p, const NodeTriple& nodes, const Interval& iv, double normval);

/// Function whose n-th derivative is sgn(S_n)|S_n|^(1/(p-1)) (sgn(S_n) for p = inf).
/// Lower derivatives come from nested oracle integration from a.
TestFunction extremal_f0(int n, const NormSpec& p, const NodeTriple& nodes, const Interval& iv);

/// Equality case of the companion representation: f^(n) = sgn(h)|h|^(1/(p-1))
/// with h(t) = (x-t)^(n-1) S(t,x).
TestFunction gs_extremal(int n, const NormSpec& p, double x, const Interval& iv);

enum class SpikeSide { left, right };

/// Function whose n-th derivative is 1/eps on the window [t0-eps, t0] (left)
/// or [t0, t0+eps] (right) and 0 elsewhere; its (n-1)-th derivative is the
/// unit ramp across the window.
TestFunction epsilon_spike(int n, double t0, double eps, SpikeSide side);

struct SpikeProbe {
  double t0;
  SpikeSide side;
  double tightness;  // |R_n(f_eps)| / bound_lp(p = 1, ||f_eps^(n)||_1)
};

/// Places the spike next to the kernel maximum (one of y-, y+, z-, z+) and
/// returns the tightness of the p = 1 bound.
SpikeProbe spike_probe(int n, const NodeTriple& nodes, const Interval& iv, double eps);

/// Hoelder bound on the tilde remainder. The norm selects the pairing applied
/// to |t - t0|^r: p = 1 pairs with ||S_{n-1}||_inf, 1 < p < inf with
/// ||S_{n-1}||_q, p = inf with ||S_{n-1}||_1.
double bound_holder(int n, const HolderSpec& spec, const NodeTriple& nodes, const Interval& iv, double t0,
                    const NormSpec& p);

/// H Gamma(1+r)/Gamma(1+n+r) [(x-a)^(r+n) + (b-x)^(r+n)], a bound on |R_n| at nodes (x, x, x).
double bound_holder_collapsed(int n, const HolderSpec& spec, double x, const Interval& iv);

/// (1/n) times sup |Q_{n-1} K|, (int |Q_{n-1} K|^q)^(1/q) or int |Q_{n-1} K|, times normval.
double bound_fink(const NormSpec& p, const FinkContext& ctx, double normval);

/// (1/n) sup|K| ||Q_{n-1}||_q normval.
double bound_fink_factored(const NormSpec& p, const FinkContext& ctx, double normval);

/// Closed-form companion constant as stated for the symmetric-node rule.
double gs_sharp_constant(int n, const NormSpec& p, double x, const Interval& iv);

/// 1/(n!(b-a)) ||(x-t)^(n-1) S(t,x)||_q computed numerically; the best
/// constant for the companion representation.
double gs_kernel_constant(int n, const NormSpec& p, double x, const Interval& iv);

/// (-1)^n int [f^(n-1)(t) - f^(n-1)(t0)] S_{n-1}(t) dt, split at y and z.
double tilde_remainder(int n, double t0, const NodeTriple& nodes, const Interval& iv, const TestFunction& f);

/// R_n minus the sum of the two node brackets and the tilde remainder:
///   R_n = (-1)^(n+1)/n! {[(y-a)^n - (y-x)^n] g(y) + [(z-x)^n - (z-b)^n] g(z)} + tilde,
/// g = f^(n-1) - f^(n-1)(t0). bracket_sign = -1 evaluates the brackets with (-1)^n instead.
double tilde_decomposition_residual(int n, double t0, const NodeTriple& nodes, const Interval& iv,
                                    const TestFunction& f, int bracket_sign = +1);

}  // namespace twopoint

#endif  // TWOPOINT_BOUNDS_HPP
