#ifndef TWOPOINT_KERNELS_HPP
#define TWOPOINT_KERNELS_HPP

#include <array>

#include "twopoint/domain.hpp"

namespace twopoint {

/// Peano kernel of order n >= 0 for the two-point rule:
/// (t-a)^n/n! on [a,y], (t-x)^n/n! on (y,z), (t-b)^n/n! on [z,b].
/// Order 0 is the constant 1. The closed outer branches win at t = y and t = z.
double eval_S(int n, double t, const NodeTriple& nodes, const Interval& iv);

/// First-order kernel without the factorial: t-a, t-x, t-b on the three branches.
double eval_K(double t, const NodeTriple& nodes, const Interval& iv);

/// Companion kernel K(t; x, (a+b)/2, a+b-x) for x in [a, (a+b)/2].
double eval_GS(double t, double x, const Interval& iv);

/// Breakpoints at which the kernel changes branch.
inline std::array<double, 2> kernel_breakpoints(const NodeTriple& nodes) { return {nodes.y, nodes.z}; }

/// Closed-form integral of S_n over [a, b].
double moment_S(int n, const NodeTriple& nodes, const Interval& iv);
/// Closed-form integral of |S_n|.
double abs_moment_S(int n, const NodeTriple& nodes, const Interval& iv);
/// Closed-form integral of |S_n|^q, q >= 1.
double q_moment_S(int n, double q, const NodeTriple& nodes, const Interval& iv);
/// sup |S_n| over [a, b].
double sup_abs_S(int n, const NodeTriple& nodes, const Interval& iv);
/// sup |K| = max{y-a, (z-y)/2 + |x-(y+z)/2|, b-z}.
double sup_abs_K(const NodeTriple& nodes, const Interval& iv);

/// ||S_n||_p from the closed forms above.
double kernel_norm(int n, const NormSpec& p, const NodeTriple& nodes, const Interval& iv);

/// Test hook: while active, eval_S and eval_K return the negated kernel.
/// Used only by negative-control tests.
class KernelSignFlip {
 public:
  KernelSignFlip();
  ~KernelSignFlip();
  KernelSignFlip(const KernelSignFlip&) = delete;
  KernelSignFlip& operator=(const KernelSignFlip&) = delete;

  static bool active() noexcept;
};

}  // namespace twopoint

#endif  // TWOPOINT_KERNELS_HPP
