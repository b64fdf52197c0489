#include "twopoint/gruss.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "twopoint/algebra.hpp"
#include "twopoint/kernels.hpp"

namespace twopoint {

namespace {

double sgn_pow(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

std::vector<double> sorted_cuts(std::vector<double> pts, const Interval& iv) {
  std::erase_if(pts, [&](double t) { return !(t > iv.a() && t < iv.b()); });
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Grid extrema taken piece by piece, each piece shrunk by a hair so that
// one-sided limits at jumps are seen from both sides.
Envelope piecewise_extrema(const RealFn& g, const Interval& iv, const std::vector<double>& breakpoints) {
  std::vector<double> edges{iv.a()};
  for (double c : sorted_cuts(breakpoints, iv)) edges.push_back(c);
  edges.push_back(iv.b());
  const double nudge = 1e-13 * iv.length();
  Envelope env{kInf, -kInf};
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double lo = edges[i] + (i == 0 ? 0.0 : nudge);
    const double hi = edges[i + 1] - (i + 2 == edges.size() ? 0.0 : nudge);
    if (!(lo < hi)) continue;
    const auto [mn, mx] = oracle::grid_extrema(g, Interval(lo, hi), 1024);
    env.lo = std::min(env.lo, mn);
    env.hi = std::max(env.hi, mx);
  }
  return env;
}

double piecewise_sup(const RealFn& g, const Interval& iv, const std::vector<double>& breakpoints) {
  const Envelope e = piecewise_extrema(g, iv, breakpoints);
  return std::max(std::abs(e.lo), std::abs(e.hi));
}

double mean(const RealFn& g, const Interval& iv, const std::vector<double>& cuts) {
  return oracle::integral(g, iv, cuts) / iv.length();
}

Envelope scaled(std::pair<double, double> range, double s) {
  const double u = range.first * s;
  const double v = range.second * s;
  return {std::min(u, v), std::max(u, v)};
}

std::vector<double> companion_cuts(const TestFunction& f, double x, const Interval& iv) {
  std::vector<double> c{x, iv.midpoint(), iv.mirror(x)};
  c.insert(c.end(), f.breakpoints().begin(), f.breakpoints().end());
  return c;
}

void require_branch(int branch) {
  if (branch < 1 || branch > kBranchCount) throw PreconditionError("branch must be in 1..5");
}

void require_n2(int n) {
  if (n < 2) throw PreconditionError("branch bounds need n >= 2");
}

}  // namespace

void FunctionalPair::validate(const Interval& iv) const {
  auto check = [&](const RealFn& h, const std::optional<Envelope>& env, const char* which) {
    if (!env) return;
    const double slack = 1e-12 * (1.0 + std::abs(env->lo) + std::abs(env->hi));
    for (int i = 0; i < 1024; ++i) {
      const double t = iv.a() + iv.length() * i / 1023.0;
      const double v = h(t);
      if (v < env->lo - slack || v > env->hi + slack)
        throw PreconditionError(std::string("declared envelope of ") + which + " violated at t = " + std::to_string(t));
    }
  };
  check(h1, env1, "h1");
  check(h2, env2, "h2");
}

double chebyshev_T(const FunctionalPair& pair, const Interval& iv) {
  const auto& c = pair.breakpoints;
  const double both = mean([&](double t) { return pair.h1(t) * pair.h2(t); }, iv, c);
  return both - mean(pair.h1, iv, c) * mean(pair.h2, iv, c);
}

PreGruss pre_gruss_check(const FunctionalPair& pair, const Interval& iv) {
  auto variance = [&](const RealFn& h) {
    const double v = chebyshev_T(FunctionalPair{h, h, {}, {}, {}, {}, pair.breakpoints}, iv);
    if (v < 0.0) {
      if (v > -1e-12) return 0.0;
      throw std::runtime_error("negative variance " + std::to_string(v) + ": oracle failure");
    }
    return v;
  };
  return {std::abs(chebyshev_T(pair, iv)), std::sqrt(variance(pair.h1)) * std::sqrt(variance(pair.h2))};
}

double ramified_bound(const FunctionalPair& pair, const Interval& iv, double phi, double Phi) {
  if (!(phi <= Phi)) throw PreconditionError("envelope needs phi <= Phi");
  FunctionalPair probe = pair;
  probe.env1 = Envelope{phi, Phi};
  probe.env2.reset();
  probe.validate(iv);
  const double var2 = chebyshev_T(FunctionalPair{pair.h2, pair.h2, {}, {}, {}, {}, pair.breakpoints}, iv);
  return 0.5 * (Phi - phi) * std::sqrt(std::max(var2, 0.0));
}

const char* to_string(ClassicalBranch b) {
  switch (b) {
    case ClassicalBranch::chebyshev: return "chebyshev";
    case ClassicalBranch::gruss: return "gruss";
    case ClassicalBranch::lupas: return "lupas";
    case ClassicalBranch::ostrowski: return "ostrowski";
  }
  return "?";
}

double classical_bound(const FunctionalPair& pair, const Interval& iv, ClassicalBranch which) {
  const double L = iv.length();
  auto need = [](bool ok, const char* what) {
    if (!ok) throw PreconditionError(std::string("classical bound needs ") + what);
  };
  auto sup = [&](const RealFn& g) { return piecewise_sup(g, iv, pair.breakpoints); };
  auto l2 = [&](const RealFn& g) {
    return std::sqrt(oracle::integral([&](double t) { return g(t) * g(t); }, iv, pair.breakpoints));
  };
  switch (which) {
    case ClassicalBranch::chebyshev:
      need(pair.dh1 && pair.dh2, "both derivatives");
      return L * L / 12.0 * sup(pair.dh1) * sup(pair.dh2);
    case ClassicalBranch::gruss:
      need(pair.env1 && pair.env2, "both envelopes");
      return 0.25 * pair.env1->width() * pair.env2->width();
    case ClassicalBranch::lupas:
      need(pair.dh1 && pair.dh2, "both derivatives");
      return L / (std::numbers::pi * std::numbers::pi) * l2(pair.dh1) * l2(pair.dh2);
    case ClassicalBranch::ostrowski:
      need(pair.env1 && pair.dh2, "an envelope of h1 and the derivative of h2");
      return 0.125 * L * pair.env1->width() * sup(pair.dh2);
  }
  throw PreconditionError("unknown classical branch");
}

FunctionalPair P_pair(const TestFunction& f, double x, int n, const Interval& iv) {
  require_companion_x(x, iv);
  if (n < 1) throw PreconditionError("order n must be >= 1");
  f.require_order(n + 1);
  const double nf = factorial(n);
  FunctionalPair pair;
  pair.h1 = [f, n, nf](double t) { return f.value_at(n, t) / nf; };
  pair.dh1 = [f, n, nf](double t) { return f.value_at(n + 1, t) / nf; };
  pair.h2 = [x, n, iv](double t) { return ipow(x - t, n - 1) * eval_GS(t, x, iv); };
  pair.dh2 = [x, n, iv](double t) {
    const double tail = n >= 2 ? -(n - 1) * ipow(x - t, n - 2) * eval_GS(t, x, iv) : 0.0;
    return tail + ipow(x - t, n - 1);
  };
  pair.breakpoints = companion_cuts(f, x, iv);
  pair.env1 = scaled(extrema(f, n, iv), 1.0 / nf);
  pair.env2 = piecewise_extrema(pair.h2, iv, pair.breakpoints);
  return pair;
}

FunctionalPair Q_pair(const TestFunction& f, double x, int n, const Interval& iv) {
  require_companion_x(x, iv);
  if (n < 1) throw PreconditionError("order n must be >= 1");
  f.require_order(n + 1);
  const double nf = factorial(n);
  FunctionalPair pair;
  pair.h1 = [f, n, nf, x, iv](double t) { return f.value_at(n, t) * eval_GS(t, x, iv) / nf; };
  pair.dh1 = [f, n, nf, x, iv](double t) {
    return (f.value_at(n + 1, t) * eval_GS(t, x, iv) + f.value_at(n, t)) / nf;
  };
  pair.h2 = [x, n](double t) { return ipow(x - t, n - 1); };
  pair.dh2 = [x, n](double t) { return n >= 2 ? -(n - 1) * ipow(x - t, n - 2) : 0.0; };
  pair.breakpoints = companion_cuts(f, x, iv);
  pair.env1 = piecewise_extrema(pair.h1, iv, pair.breakpoints);
  pair.env2 = piecewise_extrema(pair.h2, iv, {});
  return pair;
}

FunctionalPair L_pair(const FinkContext& ctx, const TestFunction& f, double x) {
  const int n = ctx.n();
  const Interval iv = ctx.iv();
  require_companion_x(x, iv);
  f.require_order(n + 1);
  const double s = sgn_pow(n - 1) / n;
  const auto seq = std::make_shared<const HarmonicSequence>(ctx.seq());
  FunctionalPair pair;
  pair.h1 = [f, n, s](double t) { return s * f.value_at(n, t); };
  pair.dh1 = [f, n, s](double t) { return s * f.value_at(n + 1, t); };
  pair.h2 = [seq, n, x, iv](double t) { return (*seq)(n - 1, t) * eval_GS(t, x, iv); };
  pair.dh2 = [seq, n, x, iv](double t) {
    const double lower = n >= 2 ? (*seq)(n - 2, t) * eval_GS(t, x, iv) : 0.0;
    return lower + (*seq)(n - 1, t);
  };
  pair.breakpoints = companion_cuts(f, x, iv);
  pair.env1 = scaled(extrema(f, n, iv), s);
  pair.env2 = piecewise_extrema(pair.h2, iv, pair.breakpoints);
  return pair;
}

double P_functional(const TestFunction& f, double x, int n, const Interval& iv) {
  const double L = iv.length();
  const double spread = ipow(x - iv.a(), n + 1) + ipow(iv.midpoint() - x, n + 1);
  const double slope = (f.value_at(n - 1, iv.b()) - f.value_at(n - 1, iv.a())) / L;
  return gs_lhs_printed(x, n, f, iv) - 2.0 / (factorial(n + 1) * n * L) * spread * slope;
}

double P_exact(const TestFunction& f, double x, int n, const Interval& iv) {
  require_companion_x(x, iv);
  const double L = iv.length();
  const double kernel_mean =
      mean([&](double t) { return ipow(x - t, n - 1) * eval_GS(t, x, iv); }, iv, {x, iv.midpoint(), iv.mirror(x)});
  const double slope = (f.value_at(n - 1, iv.b()) - f.value_at(n - 1, iv.a())) / (factorial(n) * L);
  return gs_lhs(x, n, f, iv) - kernel_mean * slope;
}

double Q_functional(const TestFunction& f, double x, int n, const Interval& iv) {
  const double L = iv.length();
  const double weight = (ipow(x - iv.a(), n) - ipow(x - iv.b(), n)) / (n * L);
  const double ends = 0.5 * (f.value_at(n, x) + f.value_at(n, iv.mirror(x)));
  return gs_lhs_printed(x, n, f, iv) - weight * ends / factorial(n);
}

double Q_exact(const TestFunction& f, double x, int n, const Interval& iv) {
  require_companion_x(x, iv);
  const double L = iv.length();
  const double h2_mean = (ipow(x - iv.a(), n) - ipow(x - iv.b(), n)) / (n * L);
  // int f^(n) S(., x) = (b-a)/2 [g(x) + g(a+b-x)] - int g, with g = f^(n-1)
  const double g_sum = f.value_at(n - 1, x) + f.value_at(n - 1, iv.mirror(x));
  const double g_int = n >= 2 ? f.value_at(n - 2, iv.b()) - f.value_at(n - 2, iv.a())
                              : oracle::integral([&](double t) { return f(t); }, iv, f.breakpoints());
  const double h1_mean = (0.5 * g_sum - g_int / L) / factorial(n);
  return gs_rhs(x, n, f, iv) - h1_mean * h2_mean;
}

double L_functional(const FinkContext& ctx, const TestFunction& f, double x) {
  const int n = ctx.n();
  const Interval iv = ctx.iv();
  require_companion_x(x, iv);
  if (ctx.seq().order() < n + 1) throw PreconditionError("L functional needs Q_0..Q_{n+1}");
  f.require_order(n);
  const auto& seq = ctx.seq();
  const double L = iv.length();
  const double s = sgn_pow(n - 1) / n;
  const double weighted =
      oracle::integral([&](double t) { return seq(n - 1, t) * eval_GS(t, x, iv) * f.value_at(n, t); }, iv,
                       companion_cuts(f, x, iv)) /
      L;
  const double kernel_mean =
      0.5 * (seq(n, x) + seq(n, iv.mirror(x))) - (seq(n + 1, iv.b()) - seq(n + 1, iv.a())) / L;
  const double slope = (f.value_at(n - 1, iv.b()) - f.value_at(n - 1, iv.a())) / L;
  return s * weighted - kernel_mean * s * slope;
}

DerivativeData derivative_data(const TestFunction& f, int n, const Interval& iv) {
  f.require_order(n + 1);
  const auto [lo, hi] = extrema(f, n, iv);
  return {lp_norm(f, n + 1, NormSpec::infinity(), iv), lp_norm(f, n + 1, NormSpec(2.0), iv), lo, hi};
}

double bound_P_A(int n) {
  require_n2(n);
  return 2.0 * ipow(n - 1.0, 2) / ((2.0 * n - 1) * (2.0 * n - 2) * (2.0 * n - 3));
}

double bound_P_B(int n) {
  require_n2(n);
  const double num = ipow(2.0, 2 * n - 3) * (2.0 * n - 1) * (2.0 * n - 2) + 4.0 * n * (2.0 * n - 1) + 2.0 * n * n;
  return num / ((2.0 * n - 1) * (2.0 * n - 2) * (2.0 * n - 3));
}

double bound_P(const TestFunction& f, double x, int n, const Interval& iv, int branch) {
  return bound_P(derivative_data(f, n, iv), x, n, iv, branch);
}

double bound_P(const DerivativeData& d, double x, int n, const Interval& iv, int branch) {
  require_n2(n);
  require_branch(branch);
  require_companion_x(x, iv);
  const double L = iv.length();
  const double nf2 = ipow(factorial(n), 2);
  const double shape = ipow((n - 2.0) / n, n - 2) * (n * n - 2.0 * n + 2.0);  // 0^0 = 1 at n = 2
  const double reach = ipow(0.25 * L + std::abs(x - 0.25 * (3.0 * iv.a() + iv.b())), n - 1);
  const double dyadic = std::pow(2.0, -n - 2.0) - std::pow(2.0, -2.0 * n - 2.0);
  const double range = d.hi - d.lo;
  switch (branch) {
    case 1: return L * L * shape / (12.0 * n * nf2) * reach * d.sup_next;
    case 2: return shape / (4.0 * n * nf2) * dyadic * ipow(L, n - 2) * range;
    case 3: {
      const double inner = bound_P_A(n) * ipow(x - iv.a(), 2 * n - 1) +
                           bound_P_B(n) * ipow(iv.midpoint() - x, 2 * n - 1);
      return L / (nf2 * std::numbers::pi * std::numbers::pi) * std::sqrt(inner) * d.l2_next;
    }
    case 4: return L * shape / (8.0 * n * nf2) * reach * range;
    default: return shape / (8.0 * n * nf2) * dyadic * ipow(L, n) * d.sup_next;
  }
}

LKernelData l_kernel_data(const FinkContext& ctx, double x) {
  const int n = ctx.n();
  require_n2(n);
  const Interval iv = ctx.iv();
  require_companion_x(x, iv);
  const auto& seq = ctx.seq();
  const std::vector<double> cuts{x, iv.midpoint(), iv.mirror(x)};
  auto combo = [&](double t) { return seq(n - 1, t) + seq(n - 2, t) * eval_GS(t, x, iv); };
  auto weight = [&](double t) { return seq(n - 1, t) * eval_GS(t, x, iv); };
  const Envelope env = piecewise_extrema(weight, iv, cuts);
  const double D = std::sqrt(oracle::integral([&](double t) { return combo(t) * combo(t); }, iv, cuts));
  return {piecewise_sup(combo, iv, cuts), D, env.lo, env.hi};
}

double bound_L(const FinkContext& ctx, const TestFunction& f, double x, int branch) {
  return bound_L(l_kernel_data(ctx, x), derivative_data(f, ctx.n(), ctx.iv()), ctx.n(), ctx.iv(), branch);
}

double bound_L(const LKernelData& k, const DerivativeData& d, int n, const Interval& iv, int branch) {
  require_n2(n);
  require_branch(branch);
  const double L = iv.length();
  const double range1 = d.hi - d.lo;
  const double range2 = k.M2 - k.m2;
  switch (branch) {
    case 1: return L * L / (12.0 * n) * k.sup_combo * d.sup_next;
    case 2: return range1 * range2 / (4.0 * n);
    case 3: return L / (std::numbers::pi * std::numbers::pi * n) * k.D * d.l2_next;
    case 4: return L / (8.0 * n) * k.sup_combo * range1;
    default: return L / (8.0 * n) * range2 * d.sup_next;
  }
}

}  // namespace twopoint
