#include "doctest.h"
#include "twopoint/sweep.hpp"

using namespace twopoint;

TEST_SUITE("sweep") {
  TEST_CASE("triples are admissible and seeded") {
    for (const Interval& iv : standard_intervals()) {
      const auto a = random_triples(50, iv, 3);
      const auto b = random_triples(50, iv, 3);
      REQUIRE(a.size() == 50);
      for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].admissible(iv));
        CHECK(a[i].y == b[i].y);
        CHECK(a[i].z == b[i].z);
      }
      CHECK(random_triples(1, iv, 4)[0].x != a[0].x);
    }
  }

  TEST_CASE("case generators do not depend on evaluation order") {
    auto r1 = case_rng(7, 3);
    auto r2 = case_rng(7, 3);
    CHECK(r1() == r2());
    CHECK(case_rng(7, 3)() != case_rng(7, 4)());
    CHECK(case_rng(7, 3, 1)() != case_rng(7, 3, 2)());
  }

  TEST_CASE("for_each_case visits every index and rethrows") {
    std::vector<int> hit(100, 0);
    for_each_case(100, true, [&](int i) { hit[i] += 1; });
    for (int h : hit) CHECK(h == 1);
    CHECK_THROWS_AS(for_each_case(10, true,
                                  [](int i) {
                                    if (i == 5) throw std::runtime_error("boom");
                                  }),
                    std::runtime_error);
  }

  TEST_CASE("suites are deterministic and parallel equals serial") {
    for (const auto& name : suite_names()) {
      const auto par = run_suite(name, 11, 12, true);
      const auto ser = run_suite(name, 11, 12, false);
      REQUIRE(par.cases.size() == 12);
      for (std::size_t i = 0; i < par.cases.size(); ++i) {
        CHECK(par.cases[i].label == ser.cases[i].label);
        CHECK(par.cases[i].residual == ser.cases[i].residual);
      }
    }
    CHECK_THROWS(run_suite("nope", 1, 1));
  }

  TEST_CASE("expansion and fink suites pass") {
    CHECK(run_suite("expansion", 7, 40).passed());
    CHECK(run_suite("fink", 7, 40).passed());
  }

  TEST_CASE("corrected forms are reported and hold") {
    for (const char* name : {"gs", "gruss"}) {
      const auto s = run_suite(name, 7, 30);
      for (const auto& c : s.cases) {
        if (std::isnan(c.corrected_residual)) continue;
        CHECK(c.corrected_residual <= c.tolerance);
      }
    }
  }

  TEST_CASE("small dominance sweep") {
    const auto tallies = dominance_sweep(5, 2, 2);
    REQUIRE_FALSE(tallies.empty());
    for (const auto& t : tallies) {
      CHECK(t.checked > 0);
      if (t.bound.rfind("gs-stated", 0) != 0) CHECK_MESSAGE(t.violated == 0, t.bound << " worst " << t.worst_label);
    }
  }
}
