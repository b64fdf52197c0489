#include <cmath>
#include <random>

#include "doctest.h"
#include "twopoint/algebra.hpp"
#include "twopoint/kernels.hpp"
#include "twopoint/oracle.hpp"
#include "twopoint/sweep.hpp"

using namespace twopoint;
using doctest::Approx;

namespace {
const Interval unit(0.0, 1.0);
}

TEST_SUITE("kernels") {
  TEST_CASE("branch values") {
    CHECK(eval_S(1, 0.25, {0.5, 0.5, 0.5}, unit) == Approx(0.25));
    CHECK(eval_S(2, 0.75, {0.0, 0.5, 1.0}, unit) == Approx(0.03125));
    CHECK(eval_S(1, 0.9, {0.25, 0.5, 0.75}, unit) == Approx(-0.1));
    CHECK(eval_K(0.5, {0.25, 0.5, 0.75}, unit) == 0.0);
    CHECK(eval_K(0.3, {0.0, 0.5, 1.0}, unit) == Approx(-0.2));
    CHECK(eval_S(0, 0.3, {0.25, 0.5, 0.75}, unit) == 1.0);
    CHECK_THROWS_AS(eval_S(1, 1.5, {0.25, 0.5, 0.75}, unit), PreconditionError);
  }

  TEST_CASE("closed outer branches win at y and z") {
    const NodeTriple nodes{0.25, 0.5, 0.75};
    CHECK(eval_K(0.25, nodes, unit) == Approx(0.25));
    CHECK(eval_K(0.75, nodes, unit) == Approx(-0.25));
  }

  TEST_CASE("K is S_1") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
      const NodeTriple nodes = random_triple(rng, unit);
      const double t = u(rng);
      CHECK(std::abs(eval_K(t, nodes, unit) - eval_S(1, t, nodes, unit)) <= 1e-15);
    }
  }

  TEST_CASE("companion kernel") {
    CHECK(eval_GS(0.5, 0.25, unit) == 0.0);
    CHECK(eval_GS(0.1, 0.25, unit) == Approx(0.1));
    CHECK_THROWS_AS(eval_GS(0.1, 0.75, unit), PreconditionError);
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
      const double x = 0.5 * u(rng);
      const double t = u(rng);
      if (std::abs(t - x) < 1e-9 || std::abs(t - (1 - x)) < 1e-9) continue;
      CHECK(std::abs(eval_GS(t, x, unit) + eval_GS(1.0 - t, x, unit)) <= 1e-15);
      CHECK(eval_GS(t, x, unit) == eval_K(t, NodeTriple{x, 0.5, 1.0 - x}, unit));
    }
  }

  TEST_CASE("collapsed nodes give the Montgomery kernel") {
    for (double x : {0.2, 0.5, 0.9})
      for (double t : {0.1, 0.4, 0.6, 0.95}) {
        const double peano = t <= x ? t : t - 1.0;
        CHECK(eval_S(1, t, {x, x, x}, unit) == Approx(peano));
      }
  }

  TEST_CASE("moments: examples") {
    CHECK(std::abs(moment_S(1, {0.5, 0.5, 0.5}, unit)) <= 1e-16);
    CHECK(moment_S(2, {0.0, 0.5, 1.0}, unit) == Approx(1.0 / 24.0));
    CHECK(std::abs(moment_S(1, {0.0, 0.5, 1.0}, unit)) <= 1e-16);
    CHECK(abs_moment_S(1, {0.5, 0.5, 0.5}, unit) == Approx(0.25));
    CHECK(abs_moment_S(2, {0.0, 0.5, 1.0}, unit) == Approx(1.0 / 24.0));
    CHECK(abs_moment_S(1, {0.0, 0.0, 0.0}, unit) == Approx(0.5));
    CHECK(q_moment_S(1, 2.0, {0.5, 0.5, 0.5}, unit) == Approx(0.25 / 3.0));
    CHECK_THROWS_AS(q_moment_S(1, 0.5, {0.5, 0.5, 0.5}, unit), PreconditionError);
  }

  TEST_CASE("suprema: examples") {
    CHECK(sup_abs_S(1, {0.25, 0.5, 0.75}, unit) == Approx(0.25));
    CHECK(sup_abs_S(2, {0.0, 0.5, 1.0}, unit) == Approx(0.125));
    CHECK(sup_abs_S(1, {0.0, 0.0, 0.0}, unit) == Approx(1.0));
    CHECK(sup_abs_K({0.25, 0.5, 0.75}, unit) == Approx(0.25));
    CHECK(sup_abs_K({0.0, 0.5, 1.0}, unit) == Approx(0.5));
  }

  TEST_CASE("closed forms agree with oracle integration and grid suprema") {
    for (const Interval iv : {Interval(0.0, 1.0), Interval(-1.0, 2.0)}) {
      const auto triples = random_triples(50, iv, 99);
      for (int n = 1; n <= 4; ++n) {
        for (const auto& nodes : triples) {
          const double cuts[] = {nodes.y, nodes.x, nodes.z};
          auto S = [&](double t) { return eval_S(n, t, nodes, iv); };
          CHECK(std::abs(moment_S(n, nodes, iv) - oracle::integral(S, iv, cuts)) <= 1e-10);
          CHECK(std::abs(abs_moment_S(n, nodes, iv) -
                         oracle::integral([&](double t) { return std::abs(S(t)); }, iv, cuts)) <= 1e-10);
          for (double q : {1.0, 1.5, 2.0, 3.0})
            CHECK(std::abs(q_moment_S(n, q, nodes, iv) -
                           oracle::integral([&](double t) { return std::pow(std::abs(S(t)), q); }, iv, cuts)) <= 1e-10);
          // the sup sits at a jump, approached from one side: compare against the branch-closure grid
          const double grid = std::max(oracle::grid_sup(S, iv),
                                       std::max(ipow(nodes.x - nodes.y, n), ipow(nodes.z - nodes.x, n)) / factorial(n));
          CHECK(std::abs(sup_abs_S(n, nodes, iv) - grid) <= 1e-8);
        }
      }
    }
  }

  TEST_CASE("q = 1 reduces to the absolute moment") {
    const auto triples = random_triples(10, unit, 3);
    for (const auto& nodes : triples)
      for (int n = 1; n <= 4; ++n) CHECK(std::abs(q_moment_S(n, 1.0, nodes, unit) - abs_moment_S(n, nodes, unit)) <= 1e-14);
  }

  TEST_CASE("kernel norm dispatch") {
    const NodeTriple nodes{0.1, 0.4, 0.8};
    CHECK(kernel_norm(2, NormSpec::infinity(), nodes, unit) == sup_abs_S(2, nodes, unit));
    CHECK(kernel_norm(2, NormSpec(1.0), nodes, unit) == abs_moment_S(2, nodes, unit));
    CHECK(kernel_norm(2, NormSpec(2.0), nodes, unit) == Approx(std::sqrt(q_moment_S(2, 2.0, nodes, unit))));
  }

  TEST_CASE("sign-flip hook is scoped") {
    const NodeTriple nodes{0.25, 0.5, 0.75};
    const double before = eval_S(2, 0.1, nodes, unit);
    {
      KernelSignFlip flip;
      CHECK(KernelSignFlip::active());
      CHECK(eval_S(2, 0.1, nodes, unit) == -before);
    }
    CHECK_FALSE(KernelSignFlip::active());
    CHECK(eval_S(2, 0.1, nodes, unit) == before);
  }
}
