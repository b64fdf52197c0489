#include <cmath>
#include <cstdlib>

#include "doctest.h"
#include "twopoint/kernels.hpp"
#include "twopoint/oracle.hpp"
#include "twopoint/testlib.hpp"

using namespace twopoint;

TEST_SUITE("oracle") {
  TEST_CASE("closed-form integrals") {
    const Interval u(0.0, 1.0);
    CHECK(std::abs(oracle::integral([](double t) { return t * t; }, u) - 1.0 / 3.0) <= 1e-13);
    CHECK(std::abs(oracle::integral([](double t) { return std::exp(t); }, u) - (std::exp(1.0) - 1.0)) <= 1e-12);
    const double cut[] = {0.3};
    CHECK(std::abs(oracle::integral([](double t) { return std::abs(t - 0.3); }, u, cut) - 0.29) <= 1e-13);
  }

  TEST_CASE("error estimate and convergence flag") {
    const auto r = oracle::integrate([](double t) { return std::sin(t); }, Interval(0.0, 3.0));
    CHECK(r.converged);
    CHECK(r.error <= oracle::default_tolerance(Interval(0.0, 3.0)));
  }

  TEST_CASE("non-finite integrand aborts with a location") {
    try {
      oracle::integral([](double t) { return 1.0 / (t - 0.5) / 0.0; }, Interval(0.0, 1.0));
      FAIL("expected NonFiniteEvaluation");
    } catch (const NonFiniteEvaluation& e) {
      CHECK(e.location >= 0.0);
      CHECK(e.location <= 1.0);
    }
  }

  TEST_CASE("grid supremum") {
    const Interval u(0.0, 1.0);
    CHECK(std::abs(oracle::grid_sup([](double t) { return t * (1 - t); }, u) - 0.25) <= 1e-10);
    const NodeTriple nodes{0.25, 0.5, 0.75};
    CHECK(std::abs(oracle::grid_sup([&](double t) { return eval_S(1, t, nodes, u); }, u) - 0.25) <= 1e-8);
    CHECK(oracle::grid_sup([](double) { return -3.5; }, u) == 3.5);
  }

  TEST_CASE("registry exact integrals are reproduced") {
    for (const auto& f : registry()) {
      for (const Interval iv : {Interval(0.0, 1.0), Interval(-1.0, 2.0)}) {
        const double tol = 10.0 * oracle::default_tolerance(iv);
        const double num = oracle::integral([&](double t) { return f(t); }, iv);
        CHECK_MESSAGE(std::abs(num - *f.exact_integral(iv)) <= tol * (1.0 + std::abs(num)), f.name());
      }
    }
  }

  TEST_CASE("splitting at breakpoints is harmless on smooth integrands") {
    const Interval u(-1.0, 2.0);
    auto g = [](double t) { return std::cos(3 * t) * std::exp(t); };
    const double cuts[] = {-0.2, 0.5, 1.7};
    const double split = oracle::integral(g, u, cuts);
    const double fine = oracle::integral(g, u, {}, 0.1 * oracle::default_tolerance(u));
    CHECK(std::abs(split - fine) <= 2.0 * oracle::default_tolerance(u));
  }

  TEST_CASE("finite-difference derivative check") {
    for (const auto& f : registry()) {
      const double worst = oracle::fd_derivative_check(f, 1, 16);
      if (f.name() == "exp" || f.name() == "sin" || f.name() == "cos" || f.name() == "runge")
        CHECK_MESSAGE(worst <= 1e-5, f.name());
      else
        CHECK_MESSAGE(worst <= 1e-8, f.name());
      for (int k = 2; k <= f.max_order(); ++k) CHECK_MESSAGE(oracle::fd_derivative_check(f, k, 16) <= 1e-5, f.name());
    }
    CHECK(oracle::fd_derivative_check(make_function("poly:3"), 1, 16) == 0.0);
  }
}
