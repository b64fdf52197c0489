#include "twopoint/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "twopoint/algebra.hpp"

namespace twopoint {

namespace {

std::atomic<int> g_flip_depth{0};

double sign_of_hook() noexcept { return g_flip_depth.load(std::memory_order_relaxed) > 0 ? -1.0 : 1.0; }

void require_in(double t, const Interval& iv) {
  if (!iv.contains(t)) throw PreconditionError("kernel argument t must lie in [a, b]");
}

void require_order(int n) {
  if (n < 0) throw PreconditionError("kernel order must be >= 0");
}

// the four branch lengths y-a, x-y, z-x, b-z
std::array<double, 4> gaps(const NodeTriple& nodes, const Interval& iv) {
  nodes.require_admissible(iv);
  return {nodes.y - iv.a(), nodes.x - nodes.y, nodes.z - nodes.x, iv.b() - nodes.z};
}

double outer_middle_max(const NodeTriple& nodes, const Interval& iv) {
  nodes.require_admissible(iv);
  const double middle = 0.5 * (nodes.z - nodes.y) + std::abs(0.5 * (nodes.y + nodes.z) - nodes.x);
  return std::max({nodes.y - iv.a(), middle, iv.b() - nodes.z});
}

}  // namespace

KernelSignFlip::KernelSignFlip() { g_flip_depth.fetch_add(1); }
KernelSignFlip::~KernelSignFlip() { g_flip_depth.fetch_sub(1); }
bool KernelSignFlip::active() noexcept { return g_flip_depth.load() > 0; }

double eval_S(int n, double t, const NodeTriple& nodes, const Interval& iv) {
  require_order(n);
  require_in(t, iv);
  double base;
  if (t <= nodes.y)
    base = t - iv.a();
  else if (t >= nodes.z)
    base = t - iv.b();
  else
    base = t - nodes.x;
  return sign_of_hook() * ipow(base, n) / factorial(n);
}

double eval_K(double t, const NodeTriple& nodes, const Interval& iv) {
  require_in(t, iv);
  double base;
  if (t <= nodes.y)
    base = t - iv.a();
  else if (t >= nodes.z)
    base = t - iv.b();
  else
    base = t - nodes.x;
  return sign_of_hook() * base;
}

double eval_GS(double t, double x, const Interval& iv) {
  if (!(x >= iv.a() && x <= iv.midpoint()))
    throw PreconditionError("companion kernel requires x in [a, (a+b)/2]");
  return eval_K(t, NodeTriple{x, iv.midpoint(), iv.mirror(x)}, iv);
}

double moment_S(int n, const NodeTriple& nodes, const Interval& iv) {
  require_order(n);
  const auto g = gaps(nodes, iv);
  const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
  return (ipow(g[0], n + 1) + ipow(g[2], n + 1) + sgn * ipow(g[1], n + 1) + sgn * ipow(g[3], n + 1)) /
         factorial(n + 1);
}

double abs_moment_S(int n, const NodeTriple& nodes, const Interval& iv) {
  require_order(n);
  const auto g = gaps(nodes, iv);
  double sum = 0.0;
  for (double gap : g) sum += ipow(gap, n + 1);
  return sum / factorial(n + 1);
}

double q_moment_S(int n, double q, const NodeTriple& nodes, const Interval& iv) {
  require_order(n);
  if (!(q >= 1.0)) throw PreconditionError("q_moment_S requires q >= 1");
  const auto g = gaps(nodes, iv);
  const double e = n * q + 1.0;
  double sum = 0.0;
  for (double gap : g) sum += std::pow(gap, e);
  // the factorial enters raised to q: |S_n|^q = |t-c|^{nq} / (n!)^q
  return sum / (e * std::pow(factorial(n), q));
}

double sup_abs_S(int n, const NodeTriple& nodes, const Interval& iv) {
  require_order(n);
  return ipow(outer_middle_max(nodes, iv), n) / factorial(n);
}

double sup_abs_K(const NodeTriple& nodes, const Interval& iv) { return outer_middle_max(nodes, iv); }

double kernel_norm(int n, const NormSpec& p, const NodeTriple& nodes, const Interval& iv) {
  if (p.is_infinite()) return sup_abs_S(n, nodes, iv);
  if (p.is_one()) return abs_moment_S(n, nodes, iv);
  return std::pow(q_moment_S(n, p.p(), nodes, iv), 1.0 / p.p());
}

}  // namespace twopoint
