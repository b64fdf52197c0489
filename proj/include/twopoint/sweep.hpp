#ifndef TWOPOINT_SWEEP_HPP
#define TWOPOINT_SWEEP_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "twopoint/domain.hpp"

namespace twopoint {

/// Sorted uniforms mapped into iv.
NodeTriple random_triple(std::mt19937_64& rng, const Interval& iv);
std::vector<NodeTriple> random_triples(int count, const Interval& iv, std::uint64_t seed);

/// Generator for configuration `index` of a seeded run; independent of the
/// order in which configurations are evaluated.
std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t index, std::uint64_t salt = 0);

/// Calls body(i) for i in [0, count), with OpenMP when parallel is set.
/// The first exception thrown by any iteration is rethrown.
void for_each_case(int count, bool parallel, const std::function<void(int)>& body);

struct CaseResult {
  std::string label;
  double residual = 0.0;
  double tolerance = 0.0;
  bool ok = true;
  /// Residual of the corrected form, when the suite checks a stated form
  /// that has one; NaN otherwise.
  double corrected_residual = std::numeric_limits<double>::quiet_NaN();
};

struct SuiteResult {
  std::string suite;
  std::vector<CaseResult> cases;
  bool passed() const;
  /// Case with the largest residual / tolerance.
  const CaseResult& worst() const;
};

/// "expansion", "fink", "gs", "gruss".
const std::vector<std::string>& suite_names();

/// One seeded identity suite; `trials` configurations.
///  expansion: rule - reference - correction - remainder.
///  fink:      Fink left side minus right side, random sequence.
///  gs:        companion identity with the stated terms (corrected residual alongside).
///  gruss:     T of the P, Q or L pairing minus the stated functional (exact form alongside).
SuiteResult run_suite(const std::string& suite, std::uint64_t seed, int trials, bool parallel = true);

/// Dominance counts for one bound family over a sweep.
struct DominanceTally {
  std::string bound;
  int checked = 0;
  int violated = 0;
  double max_tightness = 0.0;
  std::string worst_label;
};

/// Every registry function, n = 1..max_n, both standard intervals, `triples`
/// seeded triples per (function, n, interval). Checks the kernel-norm,
/// variation, Hoelder (three pairings, t0 in {x, midpoint, random}),
/// collapsed Hoelder, Fink and factored Fink bounds, and the companion
/// constants on symmetric nodes.
std::vector<DominanceTally> dominance_sweep(std::uint64_t seed, int triples, int max_n = 4, bool parallel = true);

/// [0, 1] and [-1, 2].
const std::vector<Interval>& standard_intervals();

}  // namespace twopoint

#endif  // TWOPOINT_SWEEP_HPP
