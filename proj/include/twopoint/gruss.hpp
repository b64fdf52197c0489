#ifndef TWOPOINT_GRUSS_HPP
#define TWOPOINT_GRUSS_HPP

#include <optional>
#include <string>
#include <vector>

#include "twopoint/domain.hpp"
#include "twopoint/fink.hpp"
#include "twopoint/oracle.hpp"
#include "twopoint/testlib.hpp"

namespace twopoint {

struct Envelope {
  double lo;
  double hi;
  double width() const noexcept { return hi - lo; }
};

/// The two members of a Chebyshev functional, with whatever side data the
/// classical bounds need. Derivative handles are a.e. derivatives.
struct FunctionalPair {
  RealFn h1;
  RealFn h2;
  RealFn dh1;
  RealFn dh2;
  std::optional<Envelope> env1;
  std::optional<Envelope> env2;
  std::vector<double> breakpoints;

  /// Throws PreconditionError if a declared envelope is violated on a
  /// 1024-point grid.
  void validate(const Interval& iv) const;
};

/// mean(h1 h2) - mean(h1) mean(h2).
double chebyshev_T(const FunctionalPair& pair, const Interval& iv);

struct PreGruss {
  double lhs;  // |T(h1, h2)|
  double rhs;  // sqrt(T(h1, h1)) sqrt(T(h2, h2))
  bool holds() const noexcept { return lhs <= rhs * (1.0 + 1e-10) + 1e-15; }
};
PreGruss pre_gruss_check(const FunctionalPair& pair, const Interval& iv);

/// (Phi - phi)/2 sqrt(T(h2, h2)) where phi <= h1 <= Phi.
double ramified_bound(const FunctionalPair& pair, const Interval& iv, double phi, double Phi);

enum class ClassicalBranch { chebyshev, gruss, lupas, ostrowski };
const char* to_string(ClassicalBranch b);

/// chebyshev: (d-c)^2/12 sup|h1'| sup|h2'|; gruss: (M1-m1)(M2-m2)/4;
/// lupas: (d-c)/pi^2 ||h1'||_2 ||h2'||_2; ostrowski: (d-c)(M1-m1) sup|h2'|/8.
/// Throws PreconditionError when the pair lacks the data for the branch.
double classical_bound(const FunctionalPair& pair, const Interval& iv, ClassicalBranch which);

// -- functionals of the companion rule ------------------------------------

/// h1 = f^(n)/n!, h2 = (x-t)^(n-1) S(t,x).
FunctionalPair P_pair(const TestFunction& f, double x, int n, const Interval& iv);
/// h1 = f^(n)(t) S(t,x)/n!, h2 = (x-t)^(n-1).
FunctionalPair Q_pair(const TestFunction& f, double x, int n, const Interval& iv);
/// h1 = (-1)^(n-1) f^(n)/n, h2 = Q_{n-1}(t) S(t,x).
FunctionalPair L_pair(const FinkContext& ctx, const TestFunction& f, double x);

/// As stated: printed companion terms, and the subtracted product written as
/// 2/((n+1)! n (b-a)) [(x-a)^(n+1) + ((a+b)/2-x)^(n+1)] (f^(n-1)(b) - f^(n-1)(a))/(b-a).
double P_functional(const TestFunction& f, double x, int n, const Interval& iv);
/// T of P_pair in closed form: corrected companion terms, and mean(h2) from
/// the exact integral of (x-t)^(n-1) S(t,x).
double P_exact(const TestFunction& f, double x, int n, const Interval& iv);

/// As stated: printed companion terms minus
/// (1/n!) ((x-a)^n - (x-b)^n)/(n(b-a)) (f^(n)(x) + f^(n)(a+b-x))/2.
double Q_functional(const TestFunction& f, double x, int n, const Interval& iv);
/// T of Q_pair in closed form.
double Q_exact(const TestFunction& f, double x, int n, const Interval& iv);

/// ((-1)^(n-1)/(n(b-a))) int Q_{n-1} S f^(n)
///   - [(Q_n(x)+Q_n(a+b-x))/2 - (Q_{n+1}(b)-Q_{n+1}(a))/(b-a)] ((-1)^(n-1)/n) (f^(n-1)(b)-f^(n-1)(a))/(b-a).
/// Needs Q_0..Q_{n+1}; the context nodes are not used.
double L_functional(const FinkContext& ctx, const TestFunction& f, double x);

/// Data on f^(n) and f^(n+1) used by the branch bounds.
struct DerivativeData {
  double sup_next;  // sup |f^(n+1)|
  double l2_next;   // ||f^(n+1)||_2
  double lo;        // min f^(n)
  double hi;        // max f^(n)
};
DerivativeData derivative_data(const TestFunction& f, int n, const Interval& iv);

inline constexpr int kBranchCount = 5;

double bound_P_A(int n);
double bound_P_B(int n);
/// Branch 1..5 of the stated bound on |P|: sup f^(n+1); range of f^(n) with
/// (b-a)^(n-2); L2 of f^(n+1) with A(n), B(n); range of f^(n) with the
/// [(b-a)/4 + |x-(3a+b)/4|]^(n-1) factor; sup f^(n+1) with (b-a)^n. n >= 2.
double bound_P(const TestFunction& f, double x, int n, const Interval& iv, int branch);
double bound_P(const DerivativeData& d, double x, int n, const Interval& iv, int branch);

/// Kernel data of the L pairing.
struct LKernelData {
  double sup_combo;  // sup |Q_{n-1} + Q_{n-2} S(., x)|
  double D;          // (int |Q_{n-1} + Q_{n-2} S(., x)|^2)^(1/2)
  double m2;         // min Q_{n-1} S(., x)
  double M2;         // max Q_{n-1} S(., x)
};
LKernelData l_kernel_data(const FinkContext& ctx, double x);

/// Branch 1..5 of the stated bound on |L|. n >= 2.
double bound_L(const FinkContext& ctx, const TestFunction& f, double x, int branch);
double bound_L(const LKernelData& k, const DerivativeData& d, int n, const Interval& iv, int branch);

}  // namespace twopoint

#endif  // TWOPOINT_GRUSS_HPP
