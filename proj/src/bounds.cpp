#include "twopoint/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "twopoint/algebra.hpp"
#include "twopoint/kernels.hpp"
#include "twopoint/oracle.hpp"
#include "twopoint/quadrature.hpp"

namespace twopoint {

namespace {

void require_nonneg(double v, const char* what) {
  if (!(v >= 0.0)) throw PreconditionError(std::string(what) + " must be nonnegative");
}

double sgn(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

bool dominates(double bound, double remainder_abs) noexcept {
  return remainder_abs <= bound * (1.0 + 1e-8) + 1e-12;
}

BoundReport BoundReport::make(std::string name, int n, NormSpec p, NodeTriple nodes, Interval iv, double bound_value,
                              double remainder_abs, bool h_estimated) {
  BoundReport r;
  r.bound_name = std::move(name);
  r.n = n;
  r.p = p;
  r.nodes = nodes;
  r.iv = iv;
  r.bound_value = bound_value;
  r.remainder_abs = remainder_abs;
  r.satisfied = dominates(bound_value, remainder_abs);
  r.tightness = bound_value == 0.0 ? 0.0 : remainder_abs / bound_value;
  r.h_estimated = h_estimated;
  return r;
}

double bound_variation(int n, const NormSpec&, const NodeTriple& nodes, const Interval& iv, double varval) {
  require_nonneg(varval, "variation");
  return sup_abs_S(n, nodes, iv) * varval;
}

double bound_lp(int n, const NormSpec& p, const NodeTriple& nodes, const Interval& iv, double normval) {
  require_nonneg(normval, "norm value");
  return kernel_norm(n, p.conjugate(), nodes, iv) * normval;
}

namespace {

// f with f^(n) = top and f^(k)(t) = int_a^t (t-u)^(n-k-1)/(n-k-1)! top(u) du.
TestFunction from_top_derivative(std::string name, int n, std::function<double(double)> top, std::vector<double> cuts,
                                 const Interval& iv) {
  auto derivs = [=](int k, double t) {
    if (k == n) return top(t);
    if (t <= iv.a()) return 0.0;
    const int m = n - k;
    const Interval span(iv.a(), t);
    return oracle::integral([&](double u) { return ipow(t - u, m - 1) * top(u); }, span, cuts) / factorial(m - 1);
  };
  return TestFunction(std::move(name), n, derivs, {}, cuts);
}

// sgn(v)|v|^(1/(p-1)), or sgn(v) for p = inf: the Hoelder equality profile.
double equality_profile(double v, const NormSpec& p) {
  return p.is_infinite() ? sgn(v) : sgn(v) * std::pow(std::abs(v), 1.0 / (p.p() - 1.0));
}

}  // namespace

TestFunction extremal_f0(int n, const NormSpec& p, const NodeTriple& nodes, const Interval& iv) {
  if (n < 1) throw PreconditionError("order n must be >= 1");
  if (p.is_one()) throw PreconditionError("no extremal function for p = 1; use epsilon_spike");
  nodes.require_admissible(iv);
  auto top = [=](double t) { return equality_profile(eval_S(n, t, nodes, iv), p); };
  return from_top_derivative("extremal_f0", n, top, {nodes.y, nodes.x, nodes.z}, iv);
}

TestFunction gs_extremal(int n, const NormSpec& p, double x, const Interval& iv) {
  if (n < 1) throw PreconditionError("order n must be >= 1");
  if (p.is_one()) throw PreconditionError("no extremal function for p = 1");
  require_companion_x(x, iv);
  auto top = [=](double t) { return equality_profile(ipow(x - t, n - 1) * eval_GS(t, x, iv), p); };
  return from_top_derivative("gs_extremal", n, top, {x, iv.midpoint(), iv.mirror(x)}, iv);
}

TestFunction epsilon_spike(int n, double t0, double eps, SpikeSide side) {
  if (n < 1) throw PreconditionError("order n must be >= 1");
  if (!(eps > 0.0)) throw PreconditionError("spike width eps must be positive");
  const double lo = side == SpikeSide::left ? t0 - eps : t0;
  const double hi = side == SpikeSide::left ? t0 : t0 + eps;
  auto derivs = [=](int k, double t) {
    const int m = n - k;
    if (m == 0) return (t >= lo && t <= hi) ? 1.0 / eps : 0.0;
    auto plus = [m](double v) { return v > 0.0 ? ipow(v, m) : 0.0; };
    return (plus(t - lo) - plus(t - hi)) / (eps * factorial(m));
  };
  return TestFunction("epsilon_spike", n, derivs, {}, {lo, hi});
}

SpikeProbe spike_probe(int n, const NodeTriple& nodes, const Interval& iv, double eps) {
  nodes.require_admissible(iv);
  const auto [y, x, z] = nodes;
  struct Candidate {
    double t0;
    SpikeSide side;
    double limit;  // |S_n| approached from inside the window
    bool fits;
  };
  const Candidate candidates[] = {
      {y, SpikeSide::left, ipow(y - iv.a(), n), y - eps >= iv.a()},
      {y, SpikeSide::right, ipow(x - y, n), y + eps <= z},
      {z, SpikeSide::left, ipow(z - x, n), z - eps >= y},
      {z, SpikeSide::right, ipow(iv.b() - z, n), z + eps <= iv.b()},
  };
  const Candidate* best = nullptr;
  for (const auto& c : candidates)
    if (c.fits && (!best || c.limit > best->limit)) best = &c;
  if (!best) throw PreconditionError("spike window does not fit next to any kernel maximum");
  const TestFunction f = epsilon_spike(n, best->t0, eps, best->side);
  const double rem = std::abs(remainder_numeric(f, n, nodes, iv));
  const double bound = bound_lp(n, NormSpec(1.0), nodes, iv, lp_norm(f, n, NormSpec(1.0), iv));
  return {best->t0, best->side, bound == 0.0 ? 0.0 : rem / bound};
}

double bound_holder(int n, const HolderSpec& spec, const NodeTriple& nodes, const Interval& iv, double t0,
                    const NormSpec& p) {
  if (n < 1) throw PreconditionError("order n must be >= 1");
  if (!iv.contains(t0)) throw PreconditionError("t0 must lie in [a, b]");
  const double r = spec.r;
  const double right = iv.b() - t0;
  const double left = t0 - iv.a();
  if (p.is_one()) {
    const double weight = (std::pow(right, r + 1.0) + std::pow(left, r + 1.0)) / (r + 1.0);
    return spec.H * weight * kernel_norm(n - 1, NormSpec::infinity(), nodes, iv);
  }
  if (p.is_infinite()) {
    const double weight = std::pow(0.5 * iv.length() + std::abs(t0 - iv.midpoint()), r);
    return spec.H * weight * kernel_norm(n - 1, NormSpec(1.0), nodes, iv);
  }
  const double pr = p.p() * r;
  const double weight = std::pow((std::pow(right, pr + 1.0) + std::pow(left, pr + 1.0)) / (pr + 1.0), 1.0 / p.p());
  return spec.H * weight * kernel_norm(n - 1, p.conjugate(), nodes, iv);
}

double bound_holder_collapsed(int n, const HolderSpec& spec, double x, const Interval& iv) {
  if (!iv.contains(x)) throw PreconditionError("x must lie in [a, b]");
  const double e = spec.r + n;
  return spec.H * gamma_ratio(spec.r, n) * (std::pow(x - iv.a(), e) + std::pow(iv.b() - x, e));
}

namespace {

double fink_weight_norm(const NormSpec& p, const FinkContext& ctx) {
  const int n = ctx.n();
  const auto& iv = ctx.iv();
  const auto& nodes = ctx.nodes();
  const auto& Q = ctx.seq()[n - 1];
  auto g = [&](double t) { return std::abs(Q(t) * eval_K(t, nodes, iv)); };
  const std::vector<double> cuts{nodes.y, nodes.z};
  if (p.is_one()) {
    // sup over the branch closures: K jumps at y and z, so take one-sided limits too
    double best = oracle::grid_sup(g, iv);
    const double limits[] = {std::abs(Q(nodes.y) * (nodes.y - nodes.x)), std::abs(Q(nodes.z) * (nodes.z - nodes.x))};
    for (double v : limits) best = std::max(best, v);
    return best;
  }
  if (p.is_infinite()) return oracle::integral(g, iv, cuts);
  const double q = p.conjugate().p();
  return std::pow(oracle::integral([&](double t) { return std::pow(g(t), q); }, iv, cuts), 1.0 / q);
}

}  // namespace

double bound_fink(const NormSpec& p, const FinkContext& ctx, double normval) {
  require_nonneg(normval, "norm value");
  return fink_weight_norm(p, ctx) * normval / ctx.n();
}

double bound_fink_factored(const NormSpec& p, const FinkContext& ctx, double normval) {
  require_nonneg(normval, "norm value");
  const int n = ctx.n();
  const auto& iv = ctx.iv();
  const auto& Q = ctx.seq()[n - 1];
  const NormSpec q = p.conjugate();
  double qnorm;
  if (q.is_infinite())
    qnorm = oracle::grid_sup([&](double t) { return Q(t); }, iv);
  else if (q.is_one())
    qnorm = oracle::integral([&](double t) { return std::abs(Q(t)); }, iv);
  else
    qnorm = std::pow(oracle::integral([&](double t) { return std::pow(std::abs(Q(t)), q.p()); }, iv), 1.0 / q.p());
  return sup_abs_K(ctx.nodes(), iv) * qnorm * normval / n;
}

double gs_sharp_constant(int n, const NormSpec& p, double x, const Interval& iv) {
  if (n < 1) throw PreconditionError("order n must be >= 1");
  require_companion_x(x, iv);
  const double L = iv.length();
  if (p.is_one()) {
    const double shape = ipow((n - 1.0) / n, n - 1);  // 0^0 = 1 at n = 1
    const double reach = 0.25 * L + std::abs(x - 0.25 * (3.0 * iv.a() + iv.b()));
    return shape * ipow(reach, n) / (n * factorial(n) * L);
  }
  const double q = p.conjugate().p();
  const double e = n * q + 1.0;
  const double span = std::pow(x - iv.a(), e) + std::pow(iv.midpoint() - x, e);
  return std::pow(2.0, 1.0 / q) / (factorial(n) * L) * std::pow(span, 1.0 / q) *
         std::pow(beta((n - 1.0) * q + 1.0, q + 1.0), 1.0 / q);
}

double gs_kernel_constant(int n, const NormSpec& p, double x, const Interval& iv) {
  if (n < 1) throw PreconditionError("order n must be >= 1");
  require_companion_x(x, iv);
  const double mirror = iv.mirror(x);
  auto g = [&](double t) { return std::abs(ipow(x - t, n - 1) * eval_GS(t, x, iv)); };
  const std::vector<double> cuts{x, iv.midpoint(), mirror};
  const double scale = 1.0 / (factorial(n) * iv.length());
  if (p.is_one()) {
    double best = oracle::grid_sup(g, iv);
    // one-sided limits at the jumps of S(., x)
    const double limits[] = {std::abs(ipow(x - x, n - 1) * (x - iv.midpoint())),
                             std::abs(ipow(x - mirror, n - 1) * (mirror - iv.midpoint()))};
    for (double v : limits) best = std::max(best, v);
    return scale * best;
  }
  if (p.is_infinite()) return scale * oracle::integral(g, iv, cuts);
  const double q = p.conjugate().p();
  return scale * std::pow(oracle::integral([&](double t) { return std::pow(g(t), q); }, iv, cuts), 1.0 / q);
}

double tilde_remainder(int n, double t0, const NodeTriple& nodes, const Interval& iv, const TestFunction& f) {
  if (n < 1) throw PreconditionError("order n must be >= 1");
  if (!iv.contains(t0)) throw PreconditionError("t0 must lie in [a, b]");
  nodes.require_admissible(iv);
  f.require_order(n);
  const double anchor = f.value_at(n - 1, t0);
  std::vector<double> cuts{nodes.y, nodes.z};
  cuts.insert(cuts.end(), f.breakpoints().begin(), f.breakpoints().end());
  const double integral = oracle::integral(
      [&](double t) { return (f.value_at(n - 1, t) - anchor) * eval_S(n - 1, t, nodes, iv); }, iv, cuts);
  return ((n % 2 == 0) ? 1.0 : -1.0) * integral;
}

double tilde_decomposition_residual(int n, double t0, const NodeTriple& nodes, const Interval& iv,
                                    const TestFunction& f, int bracket_sign) {
  const auto [y, x, z] = nodes;
  const double anchor = f.value_at(n - 1, t0);
  const double gy = f.value_at(n - 1, y) - anchor;
  const double gz = f.value_at(n - 1, z) - anchor;
  const double brackets = (ipow(y - iv.a(), n) - ipow(y - x, n)) * gy + (ipow(z - x, n) - ipow(z - iv.b(), n)) * gz;
  const double sign = ((n % 2 == 1) ? 1.0 : -1.0) * (bracket_sign >= 0 ? 1.0 : -1.0);
  const double rebuilt = sign / factorial(n) * brackets + tilde_remainder(n, t0, nodes, iv, f);
  return std::abs(remainder_numeric(f, n, nodes, iv) - rebuilt);
}

}  // namespace twopoint
