#ifndef TWOPOINT_TESTLIB_HPP
#define TWOPOINT_TESTLIB_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twopoint/algebra.hpp"
#include "twopoint/domain.hpp"

namespace twopoint {

/// A real function with derivatives 0..max_order available analytically
/// (or, for constructed probes, numerically).
class TestFunction {
 public:
  using Derivatives = std::function<double(int, double)>;
  using ExactIntegral = std::function<double(const Interval&)>;

  TestFunction(std::string name, int max_order, Derivatives derivs, ExactIntegral exact = {},
               std::vector<double> breakpoints = {});

  const std::string& name() const noexcept { return name_; }
  int max_order() const noexcept { return max_order_; }

  /// k-th derivative at t; throws DerivativeOrderError when k > max_order.
  double value_at(int k, double t) const;
  double operator()(double t) const { return value_at(0, t); }

  bool has_exact_integral() const noexcept { return static_cast<bool>(exact_); }
  std::optional<double> exact_integral(const Interval& iv) const;

  /// Points where some derivative is not smooth (empty for registry functions).
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }

  void require_order(int k) const;

 private:
  std::string name_;
  int max_order_;
  std::shared_ptr<const Derivatives> derivs_;
  ExactIntegral exact_;
  std::vector<double> breakpoints_;
};

/// Polynomial test function with exact derivatives and integral.
TestFunction make_polynomial_function(const Polynomial& p, std::string name = {});

/// Looks up "exp", "sin", "cos", "runge", the named polynomials, or a literal
/// "poly:c0,c1,...". Throws PreconditionError for unknown names.
TestFunction make_function(const std::string& spec);

/// Names of the standard registry used by the sweeps.
const std::vector<std::string>& registry_names();

/// Every registry function, in registry_names() order.
std::vector<TestFunction> registry();

/// (integral |f^(k)|^p)^(1/p), or sup |f^(k)| for p = inf.
double lp_norm(const TestFunction& f, int k, const NormSpec& p, const Interval& iv);

/// Total p-variation of f^(k), computed as ||f^(k+1)||_p; for p = inf the
/// oscillation sup f^(k) - inf f^(k).
double p_variation(const TestFunction& f, int k, const NormSpec& p, const Interval& iv);

/// (min, max) of f^(k) on [a, b].
std::pair<double, double> extrema(const TestFunction& f, int k, const Interval& iv);

/// Sampled Hoelder constant of f^(k): max ratio over 10^4 seeded random
/// pairs, times 1.05. An estimate, not a certificate.
double holder_estimate(const TestFunction& f, int k, double r, const Interval& iv, std::uint64_t seed = 0x5eed);

namespace oracle {

/// Worst relative error between value_at(k, .) and the central difference of
/// value_at(k-1, .) with step h at `samples` seeded points of iv.
double fd_derivative_check(const TestFunction& f, int k, int samples, const Interval& iv = Interval(0.0, 1.0),
                           double h = 1e-5, std::uint64_t seed = 17);

}  // namespace oracle
}  // namespace twopoint

#endif  // TWOPOINT_TESTLIB_HPP
