#include "twopoint/quadrature.hpp"

#include <cmath>
#include <vector>

#include "twopoint/algebra.hpp"
#include "twopoint/kernels.hpp"
#include "twopoint/oracle.hpp"

namespace twopoint {

namespace {

void require_order(int n) {
  if (n < 1) throw PreconditionError("expansion order n must be >= 1");
}

std::vector<double> split_points(const TestFunction& f, const NodeTriple& nodes) {
  std::vector<double> pts{nodes.y, nodes.z};
  pts.insert(pts.end(), f.breakpoints().begin(), f.breakpoints().end());
  return pts;
}

}  // namespace

double QuadratureResult::tolerance() const noexcept { return 1e-8 * (1.0 + std::abs(reference)); }

double rule_value(const TestFunction& f, const NodeTriple& nodes, const Interval& iv) {
  nodes.require_admissible(iv);
  return (nodes.x - iv.a()) * f(nodes.y) + (iv.b() - nodes.x) * f(nodes.z);
}

double correction_sum(const TestFunction& f, int n, const NodeTriple& nodes, const Interval& iv) {
  require_order(n);
  nodes.require_admissible(iv);
  if (n >= 2) f.require_order(n - 1);
  const auto [y, x, z] = nodes;
  double sum = 0.0;
  for (int k = 2; k <= n; ++k) {
    const double left = (ipow(y - iv.a(), k) - ipow(y - x, k)) * f.value_at(k - 1, y);
    const double right = (ipow(z - x, k) - ipow(z - iv.b(), k)) * f.value_at(k - 1, z);
    sum += ((k % 2 == 0) ? 1.0 : -1.0) / factorial(k) * (left + right);
  }
  return sum;
}

double remainder_numeric(const TestFunction& f, int n, const NodeTriple& nodes, const Interval& iv) {
  require_order(n);
  nodes.require_admissible(iv);
  f.require_order(n);
  const auto pts = split_points(f, nodes);
  const double integral =
      oracle::integral([&](double t) { return eval_S(n, t, nodes, iv) * f.value_at(n, t); }, iv, pts);
  return ((n % 2 == 1) ? 1.0 : -1.0) * integral;
}

QuadratureResult expand(const TestFunction& f, int n, const NodeTriple& nodes, const Interval& iv) {
  QuadratureResult r;
  r.rule = rule_value(f, nodes, iv);
  r.correction = correction_sum(f, n, nodes, iv);
  r.remainder = remainder_numeric(f, n, nodes, iv);
  r.reference = oracle::integral([&](double t) { return f(t); }, iv, f.breakpoints());
  r.approx = r.rule - r.correction;
  r.identity_residual = std::abs(r.rule - (r.reference + r.correction + r.remainder));
  return r;
}

double generalized_taylor(const TestFunction& f, int n, double y, double x, double z) {
  require_order(n);
  if (!(y <= x && x <= z)) throw PreconditionError("generalized Taylor formula requires y <= x <= z");
  f.require_order(n + 1);
  double sum = f(y);
  for (int k = 1; k <= n; ++k)
    sum += (ipow(x - y, k) * f.value_at(k, y) - ipow(x - z, k) * f.value_at(k, z)) / factorial(k);
  if (z > y) {
    const double tail = oracle::integral([&](double t) { return ipow(x - t, n) * f.value_at(n + 1, t); },
                                         Interval(y, z), f.breakpoints());
    sum += tail / factorial(n);
  }
  return sum;
}

double mean_value_eta(const TestFunction& f, int n, const NodeTriple& nodes, const Interval& iv) {
  require_order(n);
  nodes.require_admissible(iv);
  const int m = 2 * n;
  const double bracket = ipow(nodes.y - iv.a(), m + 1) + ipow(nodes.x - nodes.y, m + 1) +
                         ipow(nodes.z - nodes.x, m + 1) + ipow(iv.b() - nodes.z, m + 1);
  if (!(bracket > 0.0)) throw PreconditionError("mean_value_eta: degenerate node configuration");
  return -remainder_numeric(f, m, nodes, iv) * factorial(m + 1) / bracket;
}

NodeTriple map_pattern(const NodeTriple& pattern, const Interval& iv) {
  pattern.require_admissible(Interval(0.0, 1.0));
  const double L = iv.length();
  return {iv.a() + pattern.y * L, iv.a() + pattern.x * L, iv.a() + pattern.z * L};
}

namespace {

double panel_approx(const TestFunction& f, int order, int i, int panels, const NodeTriple& pattern,
                    const Interval& iv) {
  const double h = iv.length() / panels;
  const double lo = iv.a() + i * h;
  const double hi = (i == panels - 1) ? iv.b() : lo + h;
  const Interval panel(lo, hi);
  const NodeTriple nodes = map_pattern(pattern, panel);
  return rule_value(f, nodes, panel) - correction_sum(f, order, nodes, panel);
}

void check_composite_args(const TestFunction& f, int order, int panels) {
  require_order(order);
  if (panels < 1) throw PreconditionError("panels must be >= 1");
  if (order >= 2) f.require_order(order - 1);
}

}  // namespace

double composite_integrate_order(const TestFunction& f, int order, int panels, const NodeTriple& pattern,
                                 const Interval& iv) {
  check_composite_args(f, order, panels);
  std::vector<double> parts(static_cast<std::size_t>(panels));
#pragma omp parallel for schedule(static)
  for (int i = 0; i < panels; ++i) parts[static_cast<std::size_t>(i)] = panel_approx(f, order, i, panels, pattern, iv);
  double sum = 0.0;
  for (double v : parts) sum += v;
  return sum;
}

double composite_integrate_order_serial(const TestFunction& f, int order, int panels, const NodeTriple& pattern,
                                        const Interval& iv) {
  check_composite_args(f, order, panels);
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) sum += panel_approx(f, order, i, panels, pattern, iv);
  return sum;
}

double composite_integrate(const TestFunction& f, int n, int panels, const NodeTriple& pattern, const Interval& iv) {
  require_order(n);
  return composite_integrate_order(f, 2 * n, panels, pattern, iv);
}

}  // namespace twopoint
