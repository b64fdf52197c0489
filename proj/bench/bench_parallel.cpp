// Serial versus OpenMP timings for the sweep-shaped workloads.

#include <chrono>
#include <cstdio>
#include <functional>

#include "twopoint/quadrature.hpp"
#include "twopoint/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace twopoint;

namespace {

double time_it(const std::function<void()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %5.2f\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP\n");
#endif
  for (const auto& name : suite_names()) {
    const double s = time_it([&] { run_suite(name, 7, 200, false); });
    const double p = time_it([&] { run_suite(name, 7, 200, true); });
    row(("verify " + name).c_str(), s, p);
  }
  {
    const double s = time_it([] { dominance_sweep(1, 3, 3, false); });
    const double p = time_it([] { dominance_sweep(1, 3, 3, true); });
    row("dominance sweep", s, p);
  }
  {
    const auto f = make_function("runge");
    const Interval iv(-1.0, 2.0);
    volatile double sink = 0.0;
    const double s = time_it([&] { sink = composite_integrate_order_serial(f, 6, 200000, {0.2, 0.5, 0.8}, iv); });
    const double p = time_it([&] { sink = composite_integrate_order(f, 6, 200000, {0.2, 0.5, 0.8}, iv); });
    row("composite, 200000 panels", s, p);
    (void)sink;
  }
}
