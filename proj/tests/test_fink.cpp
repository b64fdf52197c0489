#include <cmath>

#include "doctest.h"
#include "twopoint/fink.hpp"
#include "twopoint/oracle.hpp"
#include "twopoint/sweep.hpp"

using namespace twopoint;
using doctest::Approx;

namespace {
const Interval unit(0.0, 1.0);

double mean_abs(const TestFunction& f, const Interval& iv) {
  return std::abs(*f.exact_integral(iv)) / iv.length();
}
}  // namespace

TEST_SUITE("fink") {
  TEST_CASE("T_k and F_k examples") {
    const auto lin = make_function("poly:0,1");
    const FinkContext ctx(HarmonicSequence::shifted_monomial(0.5, 3), 2, {0.25, 0.5, 0.75}, unit);
    CHECK(T_k(ctx, lin, 1) == Approx(0.0));
    CHECK(F_k(ctx, lin, 1) == Approx(0.5));
    CHECK(T_k(ctx, make_function("poly:2"), 1) == 0.0);
    CHECK_THROWS_AS(F_k(ctx, lin, 2), PreconditionError);
    const FinkContext zero(HarmonicSequence::shifted_monomial(0.25, 3), 2, {0.25, 0.25, 0.25}, unit);
    CHECK(T_k(zero, make_function("exp"), 1) == 0.0);
  }

  TEST_CASE("context validation") {
    CHECK_THROWS_AS(FinkContext(HarmonicSequence::shifted_monomial(0.0, 1), 3, {0.2, 0.5, 0.8}, unit),
                    PreconditionError);
    CHECK_THROWS_AS(FinkContext(HarmonicSequence::shifted_monomial(0.0, 3), 2, {0.6, 0.5, 0.8}, unit),
                    PreconditionError);
  }

  TEST_CASE("identity over sequences, orders and functions") {
    for (const Interval& iv : standard_intervals()) {
      const auto triples = random_triples(20, iv, 31);
      for (const auto& f : registry())
        for (int n = 1; n <= 5; ++n)
          for (const auto& nodes : triples) {
            const double alphas[] = {iv.a(), nodes.x, iv.midpoint(), iv.b()};
            const double tol = 1e-8 * (1 + mean_abs(f, iv));
            for (double alpha : alphas) {
              const FinkContext ctx(HarmonicSequence::shifted_monomial(alpha, n), n, nodes, iv);
              REQUIRE(std::abs(fink_lhs(ctx, f) - fink_rhs(ctx, f)) <= tol);
            }
            const FinkContext app(HarmonicSequence::reference_non_monomial(n), n, nodes, iv);
            REQUIRE(std::abs(fink_lhs(app, f) - fink_rhs(app, f)) <= tol);
            const auto [G, E] = fink_quadrature(app, f);
            REQUIRE(std::abs(G + E - *f.exact_integral(iv)) <= 1e-8 * (1 + std::abs(*f.exact_integral(iv))));
          }
    }
  }

  TEST_CASE("quadrature examples") {
    const FinkContext ctx(HarmonicSequence::shifted_monomial(0.4, 3), 3, {0.2, 0.4, 0.9}, unit);
    const auto c = fink_quadrature(ctx, make_function("poly:2.5"));
    CHECK(c.G == Approx(2.5));
    CHECK(c.E == 0.0);
    const auto e = fink_quadrature(ctx, make_function("exp"));
    CHECK(std::abs(e.G + e.E - (std::exp(1.0) - 1.0)) <= 1e-8);
    const FinkContext one(HarmonicSequence::shifted_monomial(0.0, 0), 1, {0.2, 0.4, 0.9}, unit);
    CHECK(fink_quadrature(one, make_function("exp")).G == Approx(0.4 * std::exp(0.2) + 0.6 * std::exp(0.9)));
  }

  TEST_CASE("weight identity on sub-intervals") {
    for (const auto& nodes : random_triples(20, unit, 8)) {
      const FinkContext ctx(HarmonicSequence::reference_non_monomial(4), 4, nodes, unit);
      const auto f = make_function("sin");
      for (int k = 1; k <= 3; ++k) {
        const double x = nodes.x;
        if (x <= 0.0 || x >= 1.0) continue;
        const double lhs = x * F_k(ctx, f, k, Interval(0.0, x)) + (1 - x) * F_k(ctx, f, k, Interval(x, 1.0));
        CHECK(std::abs(lhs - F_k(ctx, f, k)) <= 1e-12);
      }
    }
  }

  TEST_CASE("companion parity collapses T_k") {
    const Interval iv(-1.0, 2.0);
    const auto seq = HarmonicSequence::shifted_monomial(iv.midpoint(), 5);
    for (double h : {-1.0, -0.4, 0.2, 0.5}) {
      const FinkContext ctx(seq, 5, NodeTriple::symmetric(h, iv), iv);
      for (int k = 1; k <= 4; ++k) {
        const double full = T_k(ctx, make_function("runge"), k);
        CHECK(std::abs(full - T_k_symmetric(ctx, make_function("runge"), k)) <= 1e-13);
      }
    }
  }

  TEST_CASE("shifted-monomial expansion, literal and via the sequence") {
    for (const auto& f : registry())
      for (int n = 1; n <= 5; ++n)
        for (const auto& nodes : random_triples(5, unit, 77 + n)) {
          const double tol = 1e-8 * (1 + mean_abs(f, unit));
          CHECK(std::abs(shifted_expansion_residual(n, 0.3, nodes, f, unit)) <= tol);
          CHECK(std::abs(shifted_expansion_residual_via_sequence(n, 0.3, nodes, f, unit)) <= tol);
        }
  }

  TEST_CASE("collapsed nodes") {
    for (const auto& f : registry())
      for (int n = 1; n <= 5; ++n)
        for (double x : {0.0, 0.3, 0.5, 1.0}) CHECK(milovanovic_pecaric_residual(x, n, f, unit) <= 1e-8);
  }

  TEST_CASE("companion identity: printed terms hold only at the midpoint") {
    const auto f = make_function("exp");
    CHECK(gs_G_k(0.0, 1, 2, make_function("poly:0,1"), unit) == Approx(0.5));
    CHECK(gs_G_k(0.2, 2, 3, make_function("poly:0"), unit) == 0.0);
    CHECK_THROWS_AS(gs_G_k(0.7, 1, 2, f, unit), PreconditionError);
    for (int n = 1; n <= 4; ++n) CHECK(gs_identity_residual(0.5, n, f, unit) <= 1e-8);
    CHECK(gs_identity_residual(0.0, 1, f, unit) <= 1e-8);
    CHECK(gs_identity_residual(0.0, 2, f, unit) > 0.1);
  }

  TEST_CASE("companion identity with corrected terms") {
    for (const Interval& iv : standard_intervals())
      for (const auto& f : registry())
        for (int n = 1; n <= 4; ++n)
          for (double x : {iv.a(), 0.25 * (3 * iv.a() + iv.b()), iv.midpoint(), iv.a() + 0.37 * iv.length() / 2}) {
            CHECK(gs_companion_residual(x, n, f, iv) <= 1e-8 * (1 + mean_abs(f, iv)));
            if (n == 1) CHECK(gs_identity_residual(x, n, f, iv) <= 1e-8 * (1 + mean_abs(f, iv)));
          }
  }

  TEST_CASE("low-degree polynomials give zero on both sides") {
    const auto q = make_function("quadratic");
    CHECK(std::abs(gs_rhs(0.2, 3, q, unit)) <= 1e-15);
    CHECK(std::abs(gs_lhs(0.2, 3, q, unit)) <= 1e-13);
  }
}
