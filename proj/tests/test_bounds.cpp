#include <cmath>

#include "doctest.h"
#include "twopoint/bounds.hpp"
#include "twopoint/kernels.hpp"
#include "twopoint/oracle.hpp"
#include "twopoint/quadrature.hpp"
#include "twopoint/sweep.hpp"

using namespace twopoint;
using doctest::Approx;

namespace {
const Interval unit(0.0, 1.0);
}

TEST_SUITE("bounds") {
  TEST_CASE("report bookkeeping") {
    const auto r = BoundReport::make("lp", 1, NormSpec(2.0), {0.5, 0.5, 0.5}, unit, 2.0, 1.0);
    CHECK(r.satisfied);
    CHECK(r.tightness == 0.5);
    CHECK(BoundReport::make("lp", 1, NormSpec(2.0), {0.5, 0.5, 0.5}, unit, 0.0, 0.0).tightness == 0.0);
    CHECK_FALSE(BoundReport::make("lp", 1, NormSpec(2.0), {0.5, 0.5, 0.5}, unit, 1.0, 1.001).satisfied);
    CHECK(dominates(1.0, 1.0 + 1e-9));
  }

  TEST_CASE("variation bound examples") {
    for (double x : {0.1, 0.5, 0.8})
      CHECK(bound_variation(1, NormSpec(1.0), {x, x, x}, unit, 1.0) == Approx(std::max(x, 1 - x)));
    CHECK(bound_variation(3, NormSpec(1.0), {0.2, 0.4, 0.9}, unit, 0.0) == 0.0);
    CHECK(bound_variation(1, NormSpec(1.0), {0.25, 0.5, 0.75}, unit, 1.0) == Approx(0.25));
    CHECK_THROWS_AS(bound_variation(1, NormSpec(1.0), {0.25, 0.5, 0.75}, unit, -1.0), PreconditionError);
  }

  TEST_CASE("kernel-norm bound examples") {
    const NodeTriple mid{0.5, 0.5, 0.5};
    CHECK(bound_lp(1, NormSpec::infinity(), mid, unit, 1.0) == Approx(0.25));
    CHECK(bound_lp(1, NormSpec(2.0), mid, unit, 1.0) == Approx(std::sqrt(0.25 / 3.0)).epsilon(1e-12));
    CHECK(bound_lp(2, NormSpec(1.0), mid, unit, 0.0) == 0.0);
    CHECK(bound_lp(2, NormSpec(1.0), {0.2, 0.4, 0.9}, unit, 1.0) == sup_abs_S(2, {0.2, 0.4, 0.9}, unit));
  }

  TEST_CASE("extremal functions attain the kernel-norm bound") {
    CHECK_THROWS_AS(extremal_f0(1, NormSpec(1.0), {0.5, 0.5, 0.5}, unit), PreconditionError);
    for (double p : {2.0, 3.0, kInf})
      for (int n = 1; n <= 3; ++n)
        for (const NodeTriple nodes : {NodeTriple{0.5, 0.5, 0.5}, NodeTriple{0.2, 0.45, 0.8}}) {
          const NormSpec ps(p);
          const auto f = extremal_f0(n, ps, nodes, unit);
          const double ratio =
              std::abs(remainder_numeric(f, n, nodes, unit)) / bound_lp(n, ps, nodes, unit, lp_norm(f, n, ps, unit));
          CHECK(ratio == Approx(1.0).epsilon(1e-6));
        }
    const auto f = extremal_f0(2, NormSpec::infinity(), {0.2, 0.45, 0.8}, unit);
    for (double t : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const double v = f.value_at(2, t);
      CHECK((v == -1.0 || v == 0.0 || v == 1.0));
    }
    CHECK(oracle::fd_derivative_check(f, 1, 8, unit, 1e-4) <= 1e-6);
  }

  TEST_CASE("spike family") {
    for (double eps : {1e-3, 0.05, 0.2}) {
      const auto f = epsilon_spike(2, 0.5, eps, SpikeSide::left);
      const double cuts[] = {0.5 - eps, 0.5};
      CHECK(oracle::integral([&](double t) { return f.value_at(2, t); }, unit, cuts) == Approx(1.0));
      CHECK(f.value_at(1, 0.9) == Approx(1.0));
      CHECK(f.value_at(1, 0.1) == 0.0);
    }
    const NodeTriple nodes{0.2, 0.45, 0.8};
    for (int n = 1; n <= 3; ++n) {
      const auto fine = spike_probe(n, nodes, unit, 1e-3);
      const auto coarse = spike_probe(n, nodes, unit, 0.1);
      CHECK(fine.tightness >= 0.99);
      CHECK(coarse.tightness < fine.tightness);
    }
  }

  TEST_CASE("Hoelder bounds") {
    const NodeTriple nodes{0.2, 0.45, 0.8};
    CHECK(bound_holder(2, HolderSpec(0.5, 0.0), nodes, unit, 0.3, NormSpec(1.0)) == 0.0);
    // symmetric nodes, t0 at the midpoint, p = 1 pairing: H (b-a)^(r+1)/(2^r (r+1)) sup|S_{n-1}|
    const double r = 0.5;
    const NodeTriple sym = NodeTriple::symmetric(0.2, unit);
    CHECK(bound_holder(2, HolderSpec(r, 1.0), sym, unit, 0.5, NormSpec(1.0)) ==
          Approx(1.0 / (std::pow(2.0, r) * (r + 1)) * sup_abs_S(1, sym, unit)));
    CHECK_THROWS_AS(bound_holder(2, HolderSpec(r, 1.0), sym, unit, 1.5, NormSpec(1.0)), PreconditionError);
  }

  TEST_CASE("collapsed Hoelder bound") {
    CHECK(bound_holder_collapsed(1, HolderSpec(1.0, 3.0), 0.5, unit) == Approx(0.75));
    CHECK(bound_holder_collapsed(3, HolderSpec(0.4, 0.0), 0.5, unit) == 0.0);
    CHECK(bound_holder_collapsed(2, HolderSpec(1.0, 1.0), 0.3, unit) ==
          Approx((std::pow(0.3, 3) + std::pow(0.7, 3)) / 6.0));
  }

  TEST_CASE("tilde remainder") {
    const NodeTriple nodes{0.2, 0.45, 0.8};
    CHECK(std::abs(tilde_remainder(3, 0.4, nodes, unit, make_function("quadratic"))) <= 1e-15);
    for (const auto& f : registry())
      for (int n = 1; n <= 4; ++n) {
        for (const auto& tr : random_triples(5, unit, 200 + n))
          for (double t0 : {tr.x, 0.5, 0.13}) CHECK(tilde_decomposition_residual(n, t0, tr, unit, f) <= 1e-8);
        CHECK(std::abs(tilde_remainder(n, 0.3, {0.3, 0.3, 0.3}, unit, f) -
                       remainder_numeric(f, n, {0.3, 0.3, 0.3}, unit)) <= 1e-10);
      }
    // with the bracket sign (-1)^n the decomposition breaks
    CHECK(tilde_decomposition_residual(2, 0.45, nodes, unit, make_function("exp"), -1) > 1e-3);
  }

  TEST_CASE("Fink bounds") {
    const NodeTriple nodes{0.2, 0.45, 0.8};
    const FinkContext one(HarmonicSequence::shifted_monomial(0.0, 0), 1, nodes, unit);
    CHECK(bound_fink(NormSpec(1.0), one, 1.0) == Approx(sup_abs_K(nodes, unit)));
    CHECK(bound_fink(NormSpec::infinity(), one, 1.0) == Approx(abs_moment_S(1, nodes, unit)));
    CHECK(bound_fink(NormSpec(2.0), one, 0.0) == 0.0);
    CHECK(bound_fink_factored(NormSpec(2.0), one, 0.0) == 0.0);
    const NodeTriple ends{0.0, 0.3, 1.0};
    CHECK(sup_abs_K(ends, unit) == Approx(0.5 + std::abs(0.3 - 0.5)));
    for (const auto& tr : random_triples(20, unit, 5))
      for (int n = 1; n <= 4; ++n)
        for (double p : {1.0, 2.0, 3.0, kInf}) {
          const FinkContext ctx(HarmonicSequence::reference_non_monomial(n), n, tr, unit);
          CHECK(bound_fink(NormSpec(p), ctx, 1.0) <= bound_fink_factored(NormSpec(p), ctx, 1.0) * (1 + 1e-10));
        }
  }

  TEST_CASE("companion constants at n = 1") {
    const double mid_case = gs_sharp_constant(1, NormSpec::infinity(), 0.0, unit);
    CHECK(mid_case == Approx(0.25).epsilon(1e-12));
    CHECK(gs_sharp_constant(1, NormSpec(1.0), 0.0, unit) == Approx(0.5).epsilon(1e-12));
    CHECK(gs_sharp_constant(1, NormSpec::infinity(), 0.5, unit) == Approx(0.25).epsilon(1e-12));
    CHECK(gs_sharp_constant(1, NormSpec::infinity(), 0.25, unit) == Approx(0.125).epsilon(1e-12));
    CHECK_THROWS_AS(gs_sharp_constant(1, NormSpec(2.0), 0.6, unit), PreconditionError);
    for (double x : {0.0, 0.1, 0.25, 0.4, 0.5})
      for (double p : {1.0, 2.0, 3.0, kInf})
        CHECK(gs_sharp_constant(1, NormSpec(p), x, unit) ==
              Approx(gs_kernel_constant(1, NormSpec(p), x, unit)).epsilon(1e-9));
  }

  TEST_CASE("companion constant differs from the kernel norm for n >= 2 off the midpoint") {
    CHECK(gs_sharp_constant(2, NormSpec(1.0), 0.25, unit) < 0.5 * gs_kernel_constant(2, NormSpec(1.0), 0.25, unit));
  }

  TEST_CASE("companion extremal attains the kernel constant") {
    for (double p : {2.0, kInf})
      for (int n = 1; n <= 3; ++n) {
        const double x = 0.2;
        const auto f = gs_extremal(n, NormSpec(p), x, unit);
        const double ratio = std::abs(gs_rhs(x, n, f, unit)) /
                             (gs_kernel_constant(n, NormSpec(p), x, unit) * lp_norm(f, n, NormSpec(p), unit));
        CHECK(ratio == Approx(1.0).epsilon(1e-6));
      }
  }
}
