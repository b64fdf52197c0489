#ifndef TWOPOINT_ALGEBRA_HPP
#define TWOPOINT_ALGEBRA_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace twopoint {

/// Real polynomial stored by ascending coefficient.
///
/// Leading coefficients with magnitude below 1e-14 are trimmed after every
/// arithmetic operation, so degree() is well defined. The zero polynomial
/// has degree 0 and the single coefficient 0.
class Polynomial {
 public:
  static constexpr double kTrimThreshold = 1e-14;

  Polynomial() : coeffs_{0.0} {}
  Polynomial(std::initializer_list<double> coeffs) : Polynomial(std::vector<double>(coeffs)) {}
  explicit Polynomial(std::vector<double> coeffs);

  /// (t - shift)^k, expanded.
  static Polynomial shifted_power(double shift, int k);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0.0; }
  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

  /// Horner evaluation.
  double operator()(double t) const noexcept;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(double s);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, double s) { return lhs *= s; }
  friend Polynomial operator*(double s, Polynomial rhs) { return rhs *= s; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<double> coeffs_;
};

Polynomial derivative(const Polynomial& p);
/// Antiderivative whose constant term is `constant`; derivative(antiderivative(p, c)) == p.
Polynomial antiderivative(const Polynomial& p, double constant);
/// Exact integral of p over [lo, hi].
double definite_integral(const Polynomial& p, double lo, double hi);

/// Appell sequence Q_0 = 1, Q_k' = Q_{k-1}.
class HarmonicSequence {
 public:
  /// Validates Q_0 == 1 and the Appell chain (1e-12 relative per coefficient).
  explicit HarmonicSequence(std::vector<Polynomial> polys);

  /// Q_k(t) = (t - alpha)^k / k!, k = 0..order.
  static HarmonicSequence shifted_monomial(double alpha, int order);
  /// Q_k = antiderivative(Q_{k-1}, constants[k-1]), k = 1..constants.size().
  static HarmonicSequence from_integration_constants(std::span<const double> constants);
  /// Non-monomial test family: integration constant 1/(k+3) at step k.
  static HarmonicSequence reference_non_monomial(int order);

  /// Highest index m available (the sequence holds Q_0..Q_m).
  int order() const noexcept { return static_cast<int>(polys_.size()) - 1; }
  const Polynomial& operator[](int k) const;
  double operator()(int k, double t) const { return (*this)[k](t); }

 private:
  std::vector<Polynomial> polys_;
};

/// Natural log of Gamma(x) for x > 0 (Lanczos approximation, g = 7, 9 terms).
double log_gamma(double x);
/// Gamma(x) for x > 0.
double gamma_function(double x);
/// Euler Beta function B(p, q) = Gamma(p)Gamma(q)/Gamma(p+q); p, q > 0.
double beta(double p, double q);
/// Gamma(1+r)/Gamma(1+n+r) for r in (0,1], n >= 1.
double gamma_ratio(double r, int n);

double factorial(int n);
/// Integer power with the convention 0^0 = 1.
double ipow(double base, int exponent);

}  // namespace twopoint

#endif  // TWOPOINT_ALGEBRA_HPP
