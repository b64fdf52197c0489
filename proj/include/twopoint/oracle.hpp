#ifndef TWOPOINT_ORACLE_HPP
#define TWOPOINT_ORACLE_HPP

#include <functional>
#include <span>
#include <stdexcept>
#include <utility>

#include "twopoint/domain.hpp"

namespace twopoint {

using RealFn = std::function<double(double)>;

/// Raised when the integrand or a searched function returns NaN/inf.
class NonFiniteEvaluation : public std::runtime_error {
 public:
  NonFiniteEvaluation(const std::string& what, double where)
      : std::runtime_error(what), location(where) {}
  double location;
};

struct IntegrationResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;  // false when err_est > abs_tol (warning flag)
};

namespace oracle {

/// 1e-12 * (1 + length), or QUAD_ORACLE_TOL * (1 + length) if that variable is set.
double default_tolerance(const Interval& iv);

/// Globally adaptive Gauss-Kronrod 10/21 quadrature, run separately on each
/// piece delimited by `breakpoints` (points outside (a, b) are ignored).
/// abs_tol <= 0 selects default_tolerance(iv).
IntegrationResult integrate(const RealFn& g, const Interval& iv, std::span<const double> breakpoints = {},
                            double abs_tol = 0.0);

/// Shorthand returning only the value.
double integral(const RealFn& g, const Interval& iv, std::span<const double> breakpoints = {},
                double abs_tol = 0.0);

/// Location and value of the maximum of g over [a, b]: uniform grid, then
/// 30 golden-section steps on the bracket around the best grid point.
std::pair<double, double> grid_argmax(const RealFn& g, const Interval& iv, int points = 4096);

/// max |g| on [a, b], same search.
double grid_sup(const RealFn& g, const Interval& iv, int points = 4096);

/// (min g, max g) on [a, b], same search.
std::pair<double, double> grid_extrema(const RealFn& g, const Interval& iv, int points = 4096);

}  // namespace oracle
}  // namespace twopoint

#endif  // TWOPOINT_ORACLE_HPP
