#ifndef TWOPOINT_FINK_HPP
#define TWOPOINT_FINK_HPP

#include <memory>

#include "twopoint/algebra.hpp"
#include "twopoint/domain.hpp"
#include "twopoint/testlib.hpp"

namespace twopoint {

/// Harmonic sequence, order n, nodes and interval of one Fink representation.
/// The sequence must hold at least Q_0..Q_{n-1}.
class FinkContext {
 public:
  FinkContext(HarmonicSequence seq, int n, NodeTriple nodes, Interval iv);

  const HarmonicSequence& seq() const noexcept { return *seq_; }
  int n() const noexcept { return n_; }
  const NodeTriple& nodes() const noexcept { return nodes_; }
  const Interval& iv() const noexcept { return iv_; }

  /// Same sequence and nodes, different order.
  FinkContext with_order(int n) const;

 private:
  std::shared_ptr<const HarmonicSequence> seq_;
  int n_;
  NodeTriple nodes_;
  Interval iv_;
};

/// (-1)^k/(b-a) [(x-a) Q_k(y) f^(k)(y) + (b-x) Q_k(z) f^(k)(z)], 1 <= k <= n-1.
double T_k(const FinkContext& ctx, const TestFunction& f, int k);

/// (-1)^k (n-k)/(d-c) [Q_k(c) f^(k-1)(c) - Q_k(d) f^(k-1)(d)] on the
/// sub-interval [c, d] (defaults to the context interval), 1 <= k <= n-1.
double F_k(const FinkContext& ctx, const TestFunction& f, int k);
double F_k(const FinkContext& ctx, const TestFunction& f, int k, const Interval& sub);

/// (1/n)[rule/(b-a) + sum_k (T_k + F_k)] - mean of f.
double fink_lhs(const FinkContext& ctx, const TestFunction& f);
/// (-1)^(n-1)/(n(b-a)) int Q_{n-1} K f^(n), split at y and z.
double fink_rhs(const FinkContext& ctx, const TestFunction& f);

struct FinkQuadrature {
  double G;  // rule
  double E;  // error term; integral = G + E
};
FinkQuadrature fink_quadrature(const FinkContext& ctx, const TestFunction& f);

/// Companion-node T_k written with the single factor Q_k(h), valid when
/// Q_k(a+b-t) = (-1)^k Q_k(t): (-1)^k/2 Q_k(h) [f^(k)(h) + (-1)^k f^(k)(a+b-h)].
double T_k_symmetric(const FinkContext& ctx, const TestFunction& f, int k);

// -- expansion with Q_k(t) = (t - alpha)^k / k!, taken term by term ---------

/// Left side minus right side of the shifted-monomial expansion
///   (1/n)[rule/(b-a) + sum (T~_k + F~_k)] - mean = 1/(n!(b-a)) int (alpha-t)^(n-1) K f^(n).
double shifted_expansion_residual(int n, double alpha, const NodeTriple& nodes, const TestFunction& f,
                                  const Interval& iv);
/// The same expansion obtained from fink_lhs - fink_rhs with the shifted sequence.
double shifted_expansion_residual_via_sequence(int n, double alpha, const NodeTriple& nodes, const TestFunction& f,
                                               const Interval& iv);

/// Collapsed nodes y = x = z = alpha = x; the one-point Fink representation.
double milovanovic_pecaric_residual(double x, int n, const TestFunction& f, const Interval& iv);

// -- companion (symmetric node) representation ------------------------------

/// Companion term as printed:
/// (n-k)/(k!(b-a)) {(x-a)^k [f^(k-1)(a) + (-1)^(k+1) f^(k-1)(b)]
///                 + (1 + (-1)^(k+1)) ((a+b)/2 - x)^k f^(k-1)((a+b)/2)}.
double gs_G_k(double x, int k, int n, const TestFunction& f, const Interval& iv);

/// Companion term obtained from the shifted-monomial expansion with alpha = x:
/// (-1)^k (a+b-2x)^k/(2 k!) f^(k)(a+b-x)
///   + (n-k)/(k!(b-a)) [(x-a)^k f^(k-1)(a) + (-1)^(k+1) (b-x)^k f^(k-1)(b)].
double gs_companion_term(double x, int k, int n, const TestFunction& f, const Interval& iv);

/// (1/n)[(f(x)+f(a+b-x))/2 + sum_k gs_G_k] - mean of f.
double gs_lhs_printed(double x, int n, const TestFunction& f, const Interval& iv);
/// (1/n)[(f(x)+f(a+b-x))/2 + sum_k gs_companion_term] - mean of f.
double gs_lhs(double x, int n, const TestFunction& f, const Interval& iv);
/// 1/(n!(b-a)) int (x-t)^(n-1) S(t,x) f^(n)(t) dt.
double gs_rhs(double x, int n, const TestFunction& f, const Interval& iv);

/// |gs_lhs_printed - gs_rhs|.
double gs_identity_residual(double x, int n, const TestFunction& f, const Interval& iv);
/// |gs_lhs - gs_rhs|.
double gs_companion_residual(double x, int n, const TestFunction& f, const Interval& iv);

/// Throws unless x lies in [a, (a+b)/2].
void require_companion_x(double x, const Interval& iv);

}  // namespace twopoint

#endif  // TWOPOINT_FINK_HPP
