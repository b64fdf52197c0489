#include "twopoint/algebra.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "twopoint/domain.hpp"

namespace twopoint {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  trim();
}

void Polynomial::trim() {
  while (coeffs_.size() > 1 && std::abs(coeffs_.back()) < kTrimThreshold) coeffs_.pop_back();
  if (coeffs_.size() == 1 && std::abs(coeffs_[0]) < kTrimThreshold) coeffs_[0] = 0.0;
}

Polynomial Polynomial::shifted_power(double shift, int k) {
  if (k < 0) throw PreconditionError("shifted_power requires k >= 0");
  // binomial expansion of (t - shift)^k
  std::vector<double> c(static_cast<std::size_t>(k) + 1, 0.0);
  double binom = 1.0;
  for (int i = 0; i <= k; ++i) {
    c[static_cast<std::size_t>(i)] = binom * ipow(-shift, k - i);
    binom = binom * (k - i) / (i + 1);
  }
  return Polynomial(std::move(c));
}

double Polynomial::operator()(double t) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  std::vector<double> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial derivative(const Polynomial& p) {
  const auto c = p.coeffs();
  if (c.size() == 1) return Polynomial{0.0};
  std::vector<double> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = static_cast<double>(i) * c[i];
  return Polynomial(std::move(out));
}

Polynomial antiderivative(const Polynomial& p, double constant) {
  const auto c = p.coeffs();
  std::vector<double> out(c.size() + 1);
  out[0] = constant;
  for (std::size_t i = 0; i < c.size(); ++i) out[i + 1] = c[i] / static_cast<double>(i + 1);
  return Polynomial(std::move(out));
}

double definite_integral(const Polynomial& p, double lo, double hi) {
  const Polynomial anti = antiderivative(p, 0.0);
  return anti(hi) - anti(lo);
}

HarmonicSequence::HarmonicSequence(std::vector<Polynomial> polys) : polys_(std::move(polys)) {
  if (polys_.empty()) throw PreconditionError("harmonic sequence needs at least Q_0");
  if (!(polys_[0] == Polynomial{1.0})) throw PreconditionError("harmonic sequence requires Q_0 = 1");
  for (std::size_t k = 1; k < polys_.size(); ++k) {
    const Polynomial d = derivative(polys_[k]);
    const Polynomial& prev = polys_[k - 1];
    const std::size_t len = std::max(d.coeffs().size(), prev.coeffs().size());
    for (std::size_t i = 0; i < len; ++i) {
      const double lhs = d.coeff(i);
      const double rhs = prev.coeff(i);
      if (std::abs(lhs - rhs) > 1e-12 * std::max({1.0, std::abs(lhs), std::abs(rhs)}))
        throw PreconditionError("Appell condition Q_k' = Q_{k-1} fails at k = " + std::to_string(k));
    }
  }
}

HarmonicSequence HarmonicSequence::shifted_monomial(double alpha, int order) {
  if (order < 0) throw PreconditionError("sequence order must be >= 0");
  std::vector<Polynomial> polys;
  polys.reserve(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) polys.push_back(Polynomial::shifted_power(alpha, k) * (1.0 / factorial(k)));
  return HarmonicSequence(std::move(polys));
}

HarmonicSequence HarmonicSequence::from_integration_constants(std::span<const double> constants) {
  std::vector<Polynomial> polys{Polynomial{1.0}};
  for (double c : constants) polys.push_back(antiderivative(polys.back(), c));
  return HarmonicSequence(std::move(polys));
}

HarmonicSequence HarmonicSequence::reference_non_monomial(int order) {
  std::vector<double> constants;
  for (int k = 1; k <= order; ++k) constants.push_back(1.0 / (k + 3));
  return from_integration_constants(constants);
}

const Polynomial& HarmonicSequence::operator[](int k) const {
  if (k < 0 || k > order())
    throw PreconditionError("harmonic sequence index " + std::to_string(k) + " out of range");
  return polys_[static_cast<std::size_t>(k)];
}

namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("log_gamma requires x > 0");
  if (x < 0.5) {
    // reflection keeps the series in its accurate range
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
  }
  const double xm = x - 1.0;
  double series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) series += kLanczos[i] / (xm + static_cast<double>(i));
  const double t = xm + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (xm + 0.5) * std::log(t) - t + std::log(series);
}

double gamma_function(double x) {
  if (!(x > 0.0)) throw DomainError("gamma_function requires x > 0");
  return std::exp(log_gamma(x));
}

double beta(double p, double q) {
  if (!(p > 0.0) || !(q > 0.0)) throw DomainError("beta requires p > 0 and q > 0");
  return std::exp(log_gamma(p) + log_gamma(q) - log_gamma(p + q));
}

double gamma_ratio(double r, int n) {
  if (!(r > 0.0 && r <= 1.0)) throw DomainError("gamma_ratio requires r in (0, 1]");
  if (n < 1) throw DomainError("gamma_ratio requires n >= 1");
  // Gamma(1+r)/Gamma(1+n+r) = 1 / prod_{j=1..n} (j + r)
  double prod = 1.0;
  for (int j = 1; j <= n; ++j) prod *= (j + r);
  return 1.0 / prod;
}

double factorial(int n) {
  if (n < 0) throw PreconditionError("factorial of a negative number");
  double out = 1.0;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

double ipow(double base, int exponent) {
  if (exponent < 0) return 1.0 / ipow(base, -exponent);
  double out = 1.0;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace twopoint
