#include "twopoint/fink.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "twopoint/kernels.hpp"
#include "twopoint/oracle.hpp"

namespace twopoint {

namespace {

double sgn_pow(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

double mean_of(const TestFunction& f, const Interval& iv) {
  return oracle::integral([&](double t) { return f(t); }, iv, f.breakpoints()) / iv.length();
}

std::vector<double> cuts(const TestFunction& f, std::initializer_list<double> pts) {
  std::vector<double> out(pts);
  out.insert(out.end(), f.breakpoints().begin(), f.breakpoints().end());
  return out;
}

void require_k(const FinkContext& ctx, int k) {
  if (k < 1 || k > ctx.n() - 1)
    throw PreconditionError("term index k = " + std::to_string(k) + " outside 1..n-1 for n = " +
                            std::to_string(ctx.n()));
}

}  // namespace

FinkContext::FinkContext(HarmonicSequence seq, int n, NodeTriple nodes, Interval iv)
    : seq_(std::make_shared<const HarmonicSequence>(std::move(seq))), n_(n), nodes_(nodes), iv_(iv) {
  if (n_ < 1) throw PreconditionError("Fink order n must be >= 1");
  if (seq_->order() < n_ - 1) throw PreconditionError("harmonic sequence too short for order n");
  nodes_.require_admissible(iv_);
}

FinkContext FinkContext::with_order(int n) const {
  FinkContext copy = *this;
  if (n < 1 || seq_->order() < n - 1) throw PreconditionError("harmonic sequence too short for order n");
  copy.n_ = n;
  return copy;
}

double T_k(const FinkContext& ctx, const TestFunction& f, int k) {
  require_k(ctx, k);
  const auto& iv = ctx.iv();
  const auto [y, x, z] = ctx.nodes();
  const auto& Q = ctx.seq()[k];
  return sgn_pow(k) / iv.length() *
         ((x - iv.a()) * Q(y) * f.value_at(k, y) + (iv.b() - x) * Q(z) * f.value_at(k, z));
}

double F_k(const FinkContext& ctx, const TestFunction& f, int k) { return F_k(ctx, f, k, ctx.iv()); }

double F_k(const FinkContext& ctx, const TestFunction& f, int k, const Interval& sub) {
  require_k(ctx, k);
  const auto& Q = ctx.seq()[k];
  const double c = sub.a();
  const double d = sub.b();
  return sgn_pow(k) * (ctx.n() - k) / sub.length() *
         (Q(c) * f.value_at(k - 1, c) - Q(d) * f.value_at(k - 1, d));
}

double fink_lhs(const FinkContext& ctx, const TestFunction& f) {
  const auto& iv = ctx.iv();
  const auto [y, x, z] = ctx.nodes();
  double bracket = ((x - iv.a()) * f(y) + (iv.b() - x) * f(z)) / iv.length();
  for (int k = 1; k <= ctx.n() - 1; ++k) bracket += T_k(ctx, f, k) + F_k(ctx, f, k);
  return bracket / ctx.n() - mean_of(f, iv);
}

double fink_rhs(const FinkContext& ctx, const TestFunction& f) {
  const int n = ctx.n();
  f.require_order(n);
  const auto& iv = ctx.iv();
  const auto& nodes = ctx.nodes();
  const auto& Q = ctx.seq()[n - 1];
  const double integral = oracle::integral(
      [&](double t) { return Q(t) * eval_K(t, nodes, iv) * f.value_at(n, t); }, iv, cuts(f, {nodes.y, nodes.z}));
  return sgn_pow(n - 1) / (n * iv.length()) * integral;
}

FinkQuadrature fink_quadrature(const FinkContext& ctx, const TestFunction& f) {
  const int n = ctx.n();
  f.require_order(n);
  const auto& iv = ctx.iv();
  const auto& nodes = ctx.nodes();
  const auto [y, x, z] = nodes;
  double bracket = ((x - iv.a()) * f(y) + (iv.b() - x) * f(z)) / iv.length();
  for (int k = 1; k <= n - 1; ++k) bracket += T_k(ctx, f, k) + F_k(ctx, f, k);
  const auto& Q = ctx.seq()[n - 1];
  const double integral = oracle::integral(
      [&](double t) { return Q(t) * eval_K(t, nodes, iv) * f.value_at(n, t); }, iv, cuts(f, {y, z}));
  return {iv.length() / n * bracket, sgn_pow(n) / n * integral};
}

double T_k_symmetric(const FinkContext& ctx, const TestFunction& f, int k) {
  require_k(ctx, k);
  const auto& iv = ctx.iv();
  const double h = ctx.nodes().y;
  const double mirror = iv.mirror(h);
  return sgn_pow(k) / 2.0 * ctx.seq()[k](h) * (f.value_at(k, h) + sgn_pow(k) * f.value_at(k, mirror));
}

double shifted_expansion_residual(int n, double alpha, const NodeTriple& nodes, const TestFunction& f,
                                  const Interval& iv) {
  if (n < 1) throw PreconditionError("order n must be >= 1");
  nodes.require_admissible(iv);
  f.require_order(n);
  const auto [y, x, z] = nodes;
  const double L = iv.length();
  double bracket = ((x - iv.a()) * f(y) + (iv.b() - x) * f(z)) / L;
  for (int k = 1; k <= n - 1; ++k) {
    const double kf = factorial(k);
    const double t_term = ((x - iv.a()) * ipow(alpha - y, k) * f.value_at(k, y) +
                           sgn_pow(k) * (iv.b() - x) * ipow(z - alpha, k) * f.value_at(k, z)) /
                          (L * kf);
    const double f_term = (n - k) / (L * kf) *
                          (ipow(alpha - iv.a(), k) * f.value_at(k - 1, iv.a()) +
                           sgn_pow(k + 1) * ipow(iv.b() - alpha, k) * f.value_at(k - 1, iv.b()));
    bracket += t_term + f_term;
  }
  const double lhs = bracket / n - mean_of(f, iv);
  const double rhs =
      oracle::integral([&](double t) { return ipow(alpha - t, n - 1) * eval_K(t, nodes, iv) * f.value_at(n, t); },
                       iv, cuts(f, {y, z})) /
      (factorial(n) * L);
  return lhs - rhs;
}

double shifted_expansion_residual_via_sequence(int n, double alpha, const NodeTriple& nodes, const TestFunction& f,
                                               const Interval& iv) {
  const FinkContext ctx(HarmonicSequence::shifted_monomial(alpha, n), n, nodes, iv);
  return fink_lhs(ctx, f) - fink_rhs(ctx, f);
}

double milovanovic_pecaric_residual(double x, int n, const TestFunction& f, const Interval& iv) {
  return std::abs(shifted_expansion_residual(n, x, NodeTriple{x, x, x}, f, iv));
}

void require_companion_x(double x, const Interval& iv) {
  if (!(x >= iv.a() && x <= iv.midpoint()))
    throw PreconditionError("companion node x must lie in [a, (a+b)/2]");
}

double gs_G_k(double x, int k, int n, const TestFunction& f, const Interval& iv) {
  require_companion_x(x, iv);
  if (k < 1 || k > n - 1) throw PreconditionError("term index k outside 1..n-1");
  const double mid = iv.midpoint();
  const double outer = ipow(x - iv.a(), k) * (f.value_at(k - 1, iv.a()) + sgn_pow(k + 1) * f.value_at(k - 1, iv.b()));
  const double centre = (1.0 + sgn_pow(k + 1)) * ipow(mid - x, k) * f.value_at(k - 1, mid);
  return (n - k) / (factorial(k) * iv.length()) * (outer + centre);
}

double gs_companion_term(double x, int k, int n, const TestFunction& f, const Interval& iv) {
  require_companion_x(x, iv);
  if (k < 1 || k > n - 1) throw PreconditionError("term index k outside 1..n-1");
  const double kf = factorial(k);
  const double mirror = iv.mirror(x);
  const double node_term = sgn_pow(k) * ipow(mirror - x, k) / (2.0 * kf) * f.value_at(k, mirror);
  const double end_term = (n - k) / (kf * iv.length()) *
                          (ipow(x - iv.a(), k) * f.value_at(k - 1, iv.a()) +
                           sgn_pow(k + 1) * ipow(iv.b() - x, k) * f.value_at(k - 1, iv.b()));
  return node_term + end_term;
}

double gs_lhs_printed(double x, int n, const TestFunction& f, const Interval& iv) {
  require_companion_x(x, iv);
  double bracket = 0.5 * (f(x) + f(iv.mirror(x)));
  for (int k = 1; k <= n - 1; ++k) bracket += gs_G_k(x, k, n, f, iv);
  return bracket / n - mean_of(f, iv);
}

double gs_lhs(double x, int n, const TestFunction& f, const Interval& iv) {
  require_companion_x(x, iv);
  double bracket = 0.5 * (f(x) + f(iv.mirror(x)));
  for (int k = 1; k <= n - 1; ++k) bracket += gs_companion_term(x, k, n, f, iv);
  return bracket / n - mean_of(f, iv);
}

double gs_rhs(double x, int n, const TestFunction& f, const Interval& iv) {
  require_companion_x(x, iv);
  if (n < 1) throw PreconditionError("order n must be >= 1");
  f.require_order(n);
  const double integral = oracle::integral(
      [&](double t) { return ipow(x - t, n - 1) * eval_GS(t, x, iv) * f.value_at(n, t); }, iv,
      cuts(f, {x, iv.mirror(x)}));
  return integral / (factorial(n) * iv.length());
}

double gs_identity_residual(double x, int n, const TestFunction& f, const Interval& iv) {
  return std::abs(gs_lhs_printed(x, n, f, iv) - gs_rhs(x, n, f, iv));
}

double gs_companion_residual(double x, int n, const TestFunction& f, const Interval& iv) {
  return std::abs(gs_lhs(x, n, f, iv) - gs_rhs(x, n, f, iv));
}

}  // namespace twopoint
