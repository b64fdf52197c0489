#ifndef TWOPOINT_DOMAIN_HPP
#define TWOPOINT_DOMAIN_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace twopoint {

/// Thrown when a caller violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an argument lies outside a mathematical domain (Gamma, Beta).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when a function does not provide the derivative order requested.
class DerivativeOrderError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Closed integration domain [a, b] with a < b.
class Interval {
 public:
  Interval(double a, double b) : a_(a), b_(b) {
    if (!(a < b)) throw PreconditionError("Interval requires a < b");
  }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double length() const noexcept { return b_ - a_; }
  double midpoint() const noexcept { return 0.5 * (a_ + b_); }
  bool contains(double t) const noexcept { return t >= a_ && t <= b_; }
  /// Reflection t -> a + b - t.
  double mirror(double t) const noexcept { return a_ + b_ - t; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double a_;
  double b_;
};

/// Evaluation nodes y, z and weight split point x of the two-point rule.
struct NodeTriple {
  double y;
  double x;
  double z;

  /// a <= y <= x <= z <= b
  bool admissible(const Interval& iv) const noexcept {
    return iv.a() <= y && y <= x && x <= z && z <= iv.b();
  }
  void require_admissible(const Interval& iv) const {
    if (!admissible(iv))
      throw PreconditionError("nodes must satisfy a <= y <= x <= z <= b");
  }

  /// Symmetric companion nodes (h, (a+b)/2, a+b-h).
  static NodeTriple symmetric(double h, const Interval& iv) {
    return {h, iv.midpoint(), iv.mirror(h)};
  }
  bool is_symmetric(const Interval& iv, double tol = 1e-12) const noexcept;

  friend bool operator==(const NodeTriple&, const NodeTriple&) = default;
};

inline bool NodeTriple::is_symmetric(const Interval& iv, double tol) const noexcept {
  const double scale = tol * (1.0 + iv.length());
  return y <= iv.midpoint() + scale && std::abs(x - iv.midpoint()) <= scale &&
         std::abs(z - iv.mirror(y)) <= scale;
}

/// Lebesgue exponent p in [1, inf].
class NormSpec {
 public:
  explicit NormSpec(double p) : p_(p) {
    if (!(p >= 1.0)) throw PreconditionError("norm exponent must satisfy p >= 1");
  }
  static NormSpec infinity() { return NormSpec(kInf); }

  double p() const noexcept { return p_; }
  bool is_infinite() const noexcept { return p_ == kInf; }
  bool is_one() const noexcept { return p_ == 1.0; }
  /// Hoelder conjugate p/(p-1), with 1 <-> inf.
  NormSpec conjugate() const noexcept {
    if (is_one()) return NormSpec(kInf);
    if (is_infinite()) return NormSpec(1.0);
    return NormSpec(p_ / (p_ - 1.0));
  }

  /// Wire spelling: "inf" or the shortest decimal form ("1", "2", "1.5").
  std::string to_string() const;
  /// Accepts "inf", "infinity" or a decimal number >= 1.
  static NormSpec parse(const std::string& text);

  friend bool operator==(const NormSpec&, const NormSpec&) = default;

 private:
  double p_;
};

/// Hoelder data |g(s) - g(t)| <= H |s - t|^r.
struct HolderSpec {
  double r;
  double H;

  HolderSpec(double r_, double H_) : r(r_), H(H_) {
    if (!(r > 0.0 && r <= 1.0)) throw PreconditionError("Hoelder exponent r must lie in (0, 1]");
    if (!(H >= 0.0)) throw PreconditionError("Hoelder constant H must be nonnegative");
  }
};

}  // namespace twopoint

#endif  // TWOPOINT_DOMAIN_HPP
