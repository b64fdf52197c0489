#include "twopoint/testlib.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "twopoint/oracle.hpp"

namespace twopoint {

TestFunction::TestFunction(std::string name, int max_order, Derivatives derivs, ExactIntegral exact,
                           std::vector<double> breakpoints)
    : name_(std::move(name)),
      max_order_(max_order),
      derivs_(std::make_shared<const Derivatives>(std::move(derivs))),
      exact_(std::move(exact)),
      breakpoints_(std::move(breakpoints)) {
  if (max_order_ < 0) throw PreconditionError("max_order must be >= 0");
}

void TestFunction::require_order(int k) const {
  if (k < 0 || k > max_order_)
    throw DerivativeOrderError("function '" + name_ + "' provides derivatives up to order " +
                               std::to_string(max_order_) + ", requested " + std::to_string(k));
}

double TestFunction::value_at(int k, double t) const {
  require_order(k);
  return (*derivs_)(k, t);
}

std::optional<double> TestFunction::exact_integral(const Interval& iv) const {
  if (!exact_) return std::nullopt;
  return exact_(iv);
}

namespace {

constexpr int kRegistryOrder = 8;

TestFunction make_exp() {
  return {"exp", kRegistryOrder, [](int, double t) { return std::exp(t); },
          [](const Interval& iv) { return std::exp(iv.b()) - std::exp(iv.a()); }};
}

TestFunction make_sin() {
  return {"sin", kRegistryOrder, [](int k, double t) { return std::sin(t + k * std::numbers::pi / 2); },
          [](const Interval& iv) { return std::cos(iv.a()) - std::cos(iv.b()); }};
}

TestFunction make_cos() {
  return {"cos", kRegistryOrder, [](int k, double t) { return std::cos(t + k * std::numbers::pi / 2); },
          [](const Interval& iv) { return std::sin(iv.b()) - std::sin(iv.a()); }};
}

// 1/(1+t^2) = Im 1/(t-i), so the k-th derivative is (-1)^k k! Im (t-i)^{-(k+1)}.
TestFunction make_runge() {
  return {"runge", kRegistryOrder,
          [](int k, double t) {
            const std::complex<double> w = std::pow(std::complex<double>(t, -1.0), -(k + 1));
            return ((k % 2 == 0) ? 1.0 : -1.0) * factorial(k) * w.imag();
          },
          [](const Interval& iv) { return std::atan(iv.b()) - std::atan(iv.a()); }};
}

const std::map<std::string, std::vector<double>>& named_polynomials() {
  static const std::map<std::string, std::vector<double>> table{
      {"quadratic", {0.0, 0.0, 1.0}},
      {"cubic", {1.0, -2.0, 0.5, 1.0}},
      {"quintic", {0.5, 1.0, 0.0, -1.5, 0.0, 1.0}},
      {"octic", {1.0, -1.0, 0.5, 0.0, 2.0, 0.0, -1.0, 0.0, 0.25}},
  };
  return table;
}

std::string normalize_minus(std::string s) {
  // accept the Unicode minus sign U+2212 in literals
  const std::string uminus = "\xE2\x88\x92";
  for (std::size_t pos = s.find(uminus); pos != std::string::npos; pos = s.find(uminus, pos))
    s.replace(pos, uminus.size(), "-");
  return s;
}

Polynomial parse_poly_literal(const std::string& body) {
  std::vector<double> coeffs;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw PreconditionError("bad polynomial coefficient '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw PreconditionError("bad polynomial coefficient '" + item + "'");
    coeffs.push_back(v);
  }
  if (coeffs.empty()) throw PreconditionError("polynomial literal needs at least one coefficient");
  return Polynomial(std::move(coeffs));
}

}  // namespace

TestFunction make_polynomial_function(const Polynomial& p, std::string name) {
  std::vector<Polynomial> derivs{p};
  for (int k = 1; k <= kRegistryOrder; ++k) derivs.push_back(derivative(derivs.back()));
  if (name.empty()) {
    name = "poly:";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
      if (i) name += ',';
      std::ostringstream os;
      os << p.coeffs()[i];
      name += os.str();
    }
  }
  return {std::move(name), kRegistryOrder,
          [derivs](int k, double t) { return derivs[static_cast<std::size_t>(k)](t); },
          [p](const Interval& iv) { return definite_integral(p, iv.a(), iv.b()); }};
}

TestFunction make_function(const std::string& raw) {
  const std::string spec = normalize_minus(raw);
  if (spec == "exp") return make_exp();
  if (spec == "sin") return make_sin();
  if (spec == "cos") return make_cos();
  if (spec == "runge") return make_runge();
  if (auto it = named_polynomials().find(spec); it != named_polynomials().end())
    return make_polynomial_function(Polynomial(it->second), spec);
  if (spec.rfind("poly:", 0) == 0) return make_polynomial_function(parse_poly_literal(spec.substr(5)), spec);
  throw PreconditionError("unknown function '" + raw + "'");
}

const std::vector<std::string>& registry_names() {
  static const std::vector<std::string> names{"exp", "sin", "cos", "runge", "quadratic", "cubic", "quintic", "octic"};
  return names;
}

std::vector<TestFunction> registry() {
  std::vector<TestFunction> out;
  for (const auto& name : registry_names()) out.push_back(make_function(name));
  return out;
}

double lp_norm(const TestFunction& f, int k, const NormSpec& p, const Interval& iv) {
  f.require_order(k);
  auto g = [&](double t) { return f.value_at(k, t); };
  if (p.is_infinite()) return oracle::grid_sup(g, iv);
  const double e = p.p();
  const double integral = oracle::integral(
      [&](double t) { return e == 1.0 ? std::abs(g(t)) : std::pow(std::abs(g(t)), e); }, iv, f.breakpoints());
  return e == 1.0 ? integral : std::pow(integral, 1.0 / e);
}

double p_variation(const TestFunction& f, int k, const NormSpec& p, const Interval& iv) {
  f.require_order(k + 1);
  if (p.is_infinite()) {
    const auto [m, M] = extrema(f, k, iv);
    return M - m;
  }
  return lp_norm(f, k + 1, p, iv);
}

std::pair<double, double> extrema(const TestFunction& f, int k, const Interval& iv) {
  f.require_order(k);
  return oracle::grid_extrema([&](double t) { return f.value_at(k, t); }, iv);
}

double holder_estimate(const TestFunction& f, int k, double r, const Interval& iv, std::uint64_t seed) {
  if (!(r > 0.0 && r <= 1.0)) throw PreconditionError("Hoelder exponent r must lie in (0, 1]");
  f.require_order(k);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(iv.a(), iv.b());
  double best = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double s = u(rng);
    const double t = u(rng);
    if (s == t) continue;
    best = std::max(best, std::abs(f.value_at(k, s) - f.value_at(k, t)) / std::pow(std::abs(s - t), r));
  }
  return 1.05 * best;
}

double oracle::fd_derivative_check(const TestFunction& f, int k, int samples, const Interval& iv, double h,
                                   std::uint64_t seed) {
  if (k < 1) throw PreconditionError("fd_derivative_check requires k >= 1");
  f.require_order(k);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(iv.a(), iv.b());
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double t = u(rng);
    const double fd = (f.value_at(k - 1, t + h) - f.value_at(k - 1, t - h)) / (2.0 * h);
    const double exact = f.value_at(k, t);
    worst = std::max(worst, std::abs(fd - exact) / std::max(1.0, std::abs(exact)));
  }
  return worst;
}

}  // namespace twopoint
