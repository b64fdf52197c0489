#include "twopoint/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace twopoint::oracle {

namespace {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK dqk21).
constexpr std::array<double, 11> kXgk{
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk{
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5, 7, 9.
constexpr std::array<double, 5> kWg{
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr int kMaxSegments = 4000;

struct Segment {
  double lo, hi, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

double checked(const RealFn& g, double t) {
  const double v = g(t);
  if (!std::isfinite(v))
    throw NonFiniteEvaluation("non-finite integrand value at t = " + std::to_string(t), t);
  return v;
}

Segment gk21(const RealFn& g, double lo, double hi) {
  const double centr = 0.5 * (lo + hi);
  const double hlgth = 0.5 * (hi - lo);
  const double fc = checked(g, centr);
  double resg = 0.0;
  double resk = kWgk[10] * fc;
  double resabs = std::abs(resk);
  std::array<double, 10> f1{}, f2{};
  for (int j = 0; j < 10; ++j) {
    const double dx = hlgth * kXgk[static_cast<std::size_t>(j)];
    const double v1 = checked(g, centr - dx);
    const double v2 = checked(g, centr + dx);
    f1[static_cast<std::size_t>(j)] = v1;
    f2[static_cast<std::size_t>(j)] = v2;
    const double w = kWgk[static_cast<std::size_t>(j)];
    resk += w * (v1 + v2);
    resabs += w * (std::abs(v1) + std::abs(v2));
    if (j % 2 == 1) resg += kWg[static_cast<std::size_t>(j / 2)] * (v1 + v2);
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fc - reskh);
  for (std::size_t j = 0; j < 10; ++j)
    resasc += kWgk[j] * (std::abs(f1[j] - reskh) + std::abs(f2[j] - reskh));

  const double ah = std::abs(hlgth);
  resk *= hlgth;
  resg *= hlgth;
  resabs *= ah;
  resasc *= ah;
  double err = std::abs(resk - resg);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
  return {lo, hi, resk, err};
}

IntegrationResult integrate_piece(const RealFn& g, double lo, double hi, double tol) {
  std::priority_queue<Segment> heap;
  Segment first = gk21(g, lo, hi);
  double total = first.value;
  double total_err = first.error;
  heap.push(first);
  int count = 1;
  while (total_err > tol && count < kMaxSegments) {
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) break;  // cannot split further
    heap.pop();
    const Segment left = gk21(g, worst.lo, mid);
    const Segment right = gk21(g, mid, worst.hi);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++count;
  }
  // re-sum to shed the drift of incremental updates
  total = 0.0;
  total_err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    total_err += heap.top().error;
    heap.pop();
  }
  return {total, total_err, total_err <= tol};
}

}  // namespace

double default_tolerance(const Interval& iv) {
  double base = 1e-12;
  if (const char* env = std::getenv("QUAD_ORACLE_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && std::isfinite(v) && v > 0.0) base = v;
  }
  return base * (1.0 + iv.length());
}

IntegrationResult integrate(const RealFn& g, const Interval& iv, std::span<const double> breakpoints,
                            double abs_tol) {
  const double tol = abs_tol > 0.0 ? abs_tol : default_tolerance(iv);
  std::vector<double> cuts{iv.a()};
  for (double p : breakpoints)
    if (p > iv.a() && p < iv.b()) cuts.push_back(p);
  cuts.push_back(iv.b());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  IntegrationResult out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    // tolerance shared in proportion to piece length
    const IntegrationResult piece = integrate_piece(g, lo, hi, tol * (hi - lo) / iv.length());
    out.value += piece.value;
    out.error += piece.error;
    out.converged = out.converged && piece.converged;
  }
  return out;
}

double integral(const RealFn& g, const Interval& iv, std::span<const double> breakpoints, double abs_tol) {
  return integrate(g, iv, breakpoints, abs_tol).value;
}

std::pair<double, double> grid_argmax(const RealFn& g, const Interval& iv, int points) {
  if (points < 2) points = 2;
  const double step = iv.length() / (points - 1);
  auto eval = [&](double t) {
    const double v = g(t);
    if (!std::isfinite(v)) throw NonFiniteEvaluation("non-finite value in grid search at t = " + std::to_string(t), t);
    return v;
  };
  int best = 0;
  double best_val = eval(iv.a());
  for (int i = 1; i < points; ++i) {
    const double t = i == points - 1 ? iv.b() : iv.a() + i * step;
    const double v = eval(t);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  double best_t = best == points - 1 ? iv.b() : iv.a() + best * step;

  double lo = std::max(iv.a(), best_t - step);
  double hi = std::min(iv.b(), best_t + step);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = eval(c);
  double fd = eval(d);
  for (int it = 0; it < 30; ++it) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = eval(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = eval(d);
    }
  }
  for (auto [t, v] : {std::pair{c, fc}, std::pair{d, fd}}) {
    if (v > best_val) {
      best_val = v;
      best_t = t;
    }
  }
  return {best_t, best_val};
}

double grid_sup(const RealFn& g, const Interval& iv, int points) {
  return grid_argmax([&](double t) { return std::abs(g(t)); }, iv, points).second;
}

std::pair<double, double> grid_extrema(const RealFn& g, const Interval& iv, int points) {
  const double hi = grid_argmax(g, iv, points).second;
  const double lo = -grid_argmax([&](double t) { return -g(t); }, iv, points).second;
  return {lo, hi};
}

}  // namespace twopoint::oracle
