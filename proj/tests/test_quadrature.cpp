#include <cmath>

#include "doctest.h"
#include "twopoint/kernels.hpp"
#include "twopoint/quadrature.hpp"
#include "twopoint/sweep.hpp"

using namespace twopoint;
using doctest::Approx;

namespace {
const Interval unit(0.0, 1.0);
}

TEST_SUITE("quadrature") {
  TEST_CASE("rule value") {
    CHECK(rule_value(make_function("poly:0,0,1"), {0.25, 0.5, 0.75}, unit) == Approx(0.3125));
    CHECK(rule_value(make_function("poly:-1,2"), {0.5, 0.5, 0.5}, unit) == Approx(0.0));
    CHECK(rule_value(make_function("poly:1"), {0.1, 0.3, 0.9}, unit) == Approx(1.0));
  }

  TEST_CASE("correction sum") {
    CHECK(correction_sum(make_function("exp"), 1, {0.1, 0.3, 0.9}, unit) == 0.0);
    CHECK(correction_sum(make_function("poly:0,0,1"), 2, {0.0, 0.5, 1.0}, unit) == Approx(0.25));
    CHECK(correction_sum(make_function("poly:3"), 2, {0.1, 0.3, 0.9}, unit) == 0.0);
  }

  TEST_CASE("remainder") {
    CHECK(remainder_numeric(make_function("poly:0,0,1"), 2, {0.0, 0.5, 1.0}, unit) == Approx(-1.0 / 12.0));
    CHECK(std::abs(remainder_numeric(make_function("poly:1,2,3"), 3, {0.2, 0.4, 0.7}, unit)) <= 1e-15);
  }

  TEST_CASE("expansion identity over the registry") {
    for (const Interval& iv : standard_intervals()) {
      const auto triples = random_triples(100, iv, 2024);
      for (const auto& f : registry())
        for (int n = 1; n <= 5; ++n)
          for (const auto& nodes : triples) {
            const auto q = expand(f, n, nodes, iv);
            REQUIRE_MESSAGE(q.ok(), f.name(), " n=", n);
          }
    }
  }

  TEST_CASE("generalized Taylor formula") {
    const auto sq = make_function("poly:0,0,1");
    CHECK(generalized_taylor(sq, 1, 0.0, 0.5, 1.0) == Approx(1.0));
    const auto cubic = make_function("cubic");
    CHECK(generalized_taylor(cubic, 3, 0.0, 0.0, 0.6) == Approx(cubic(0.6)));
    for (const auto& f : registry())
      for (int n = 1; n <= 4; ++n) {
        const double got = generalized_taylor(f, n, 0.1, 0.35, 0.8);
        CHECK(std::abs(got - f(0.8)) <= 1e-9 * (1 + std::abs(f(0.8))));
      }
  }

  TEST_CASE("mean value of the even-order remainder") {
    CHECK(std::abs(mean_value_eta(make_function("cubic"), 2, {0.2, 0.5, 0.9}, unit)) <= 1e-9);
    const double v = mean_value_eta(make_function("poly:0,0,0,0,1"), 1, {0.5, 0.5, 0.5}, unit);
    CHECK(v >= 0.0);
    CHECK(v <= 12.0);
    CHECK(mean_value_eta(make_function("poly:0,0,3.5"), 1, {0.1, 0.6, 0.7}, unit) == Approx(7.0));
    for (const auto& f : registry())
      for (int n = 1; n <= 3; ++n)
        for (const auto& nodes : random_triples(5, unit, 40 + n)) {
          const double eta = mean_value_eta(f, n, nodes, unit);
          const auto [m, M] = extrema(f, 2 * n, unit);
          CHECK(eta >= m - 1e-7 * (1 + std::abs(m)));
          CHECK(eta <= M + 1e-7 * (1 + std::abs(M)));
        }
    CHECK_THROWS_AS(mean_value_eta(make_function("exp"), 1, {0.0, 0.0, 0.0}, Interval(0.0, 1e-300)), PreconditionError);
  }

  TEST_CASE("composite rule exactness") {
    CHECK(composite_integrate(make_function("poly:2,3"), 1, 1, {0.5, 0.5, 0.5}, unit) == Approx(3.5).epsilon(1e-14));
    CHECK(std::abs(composite_integrate(make_function("poly:0,0,0,1"), 2, 1, {0.25, 0.5, 0.75}, unit) - 0.25) <= 1e-14);
    for (int n = 1; n <= 2; ++n)
      for (int deg = 0; deg <= 2 * n - 1; ++deg) {
        std::vector<double> c(deg + 1, 0.0);
        c[deg] = 1.0;
        const auto f = make_polynomial_function(Polynomial(c));
        for (const Interval& iv : standard_intervals())
          for (const NodeTriple pat : {NodeTriple{0.5, 0.5, 0.5}, NodeTriple{0.25, 0.5, 0.75}, NodeTriple{0.1, 0.3, 0.8}})
            CHECK(std::abs(composite_integrate(f, n, 4, pat, iv) - *f.exact_integral(iv)) <= 1e-10);
      }
  }

  TEST_CASE("composite convergence ratio") {
    const auto f = make_function("exp");
    const double ref = std::exp(1.0) - 1.0;
    const double e8 = std::abs(composite_integrate(f, 1, 8, {0.5, 0.5, 0.5}, unit) - ref);
    const double e16 = std::abs(composite_integrate(f, 1, 16, {0.5, 0.5, 0.5}, unit) - ref);
    CHECK(e8 / e16 == Approx(4.0).epsilon(0.02));
  }

  TEST_CASE("parallel and serial composite agree bit for bit") {
    for (const auto& f : registry())
      CHECK(composite_integrate_order(f, 3, 37, {0.2, 0.5, 0.7}, Interval(-1.0, 2.0)) ==
            composite_integrate_order_serial(f, 3, 37, {0.2, 0.5, 0.7}, Interval(-1.0, 2.0)));
  }
}
