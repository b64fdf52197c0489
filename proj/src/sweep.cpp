#include "twopoint/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>

#include "twopoint/bounds.hpp"
#include "twopoint/fink.hpp"
#include "twopoint/gruss.hpp"
#include "twopoint/quadrature.hpp"
#include "twopoint/testlib.hpp"

namespace twopoint {

NodeTriple random_triple(std::mt19937_64& rng, const Interval& iv) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double r[3] = {u(rng), u(rng), u(rng)};
  std::sort(r, r + 3);
  return {iv.a() + r[0] * iv.length(), iv.a() + r[1] * iv.length(), iv.a() + r[2] * iv.length()};
}

std::vector<NodeTriple> random_triples(int count, const Interval& iv, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<NodeTriple> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(random_triple(rng, iv));
  return out;
}

std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t index, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    static_cast<std::uint32_t>(salt)};
  return std::mt19937_64(seq);
}

void for_each_case(int count, bool parallel, const std::function<void(int)>& body) {
  std::exception_ptr failure;
  std::mutex guard;
  auto run = [&](int i) {
    try {
      body(i);
    } catch (...) {
      std::lock_guard lock(guard);
      if (!failure) failure = std::current_exception();
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) run(i);
  } else {
    for (int i = 0; i < count; ++i) run(i);
  }
  if (failure) std::rethrow_exception(failure);
}

bool SuiteResult::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.ok; });
}

const CaseResult& SuiteResult::worst() const {
  if (cases.empty()) throw PreconditionError("suite has no cases");
  return *std::max_element(cases.begin(), cases.end(), [](const CaseResult& l, const CaseResult& r) {
    return l.residual / l.tolerance < r.residual / r.tolerance;
  });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"expansion", "fink", "gs", "gruss"};
  return names;
}

const std::vector<Interval>& standard_intervals() {
  static const std::vector<Interval> ivs{Interval(0.0, 1.0), Interval(-1.0, 2.0)};
  return ivs;
}

namespace {

std::string fmt_iv(const Interval& iv) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "[%g,%g]", iv.a(), iv.b());
  return buf;
}

std::string fmt_nodes(const NodeTriple& n) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.17g,%.17g,%.17g)", n.y, n.x, n.z);
  return buf;
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& items) {
  return items[std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng)];
}

int pick_int(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double mean_abs(const TestFunction& f, const Interval& iv) {
  return std::abs(oracle::integral([&](double t) { return f(t); }, iv, f.breakpoints()) / iv.length());
}

// Companion abscissa: one of a, (3a+b)/4, (a+b)/2, or uniform in [a, (a+b)/2].
double pick_companion_x(std::mt19937_64& rng, const Interval& iv) {
  switch (pick_int(rng, 0, 3)) {
    case 0: return iv.a();
    case 1: return 0.25 * (3.0 * iv.a() + iv.b());
    case 2: return iv.midpoint();
    default: return iv.a() + 0.5 * iv.length() * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  }
}

struct Draw {
  TestFunction f;
  int n;
  Interval iv;
};

Draw draw(std::mt19937_64& rng, const std::vector<TestFunction>& fns, int max_n) {
  const TestFunction& f = pick(rng, fns);
  const int n = pick_int(rng, 1, max_n);
  const Interval& iv = pick(rng, standard_intervals());
  return {f, n, iv};
}

std::string base_label(std::uint64_t seed, int trial, const Draw& d) {
  return "seed=" + std::to_string(seed) + " trial=" + std::to_string(trial) + " fn=" + d.f.name() +
         " n=" + std::to_string(d.n) + " iv=" + fmt_iv(d.iv);
}

CaseResult expansion_case(std::uint64_t seed, int trial, const std::vector<TestFunction>& fns) {
  auto rng = case_rng(seed, trial, 1);
  const Draw d = draw(rng, fns, 5);
  const NodeTriple nodes = random_triple(rng, d.iv);
  const QuadratureResult q = expand(d.f, d.n, nodes, d.iv);
  return {base_label(seed, trial, d) + " nodes=" + fmt_nodes(nodes), q.identity_residual, q.tolerance(), q.ok()};
}

CaseResult fink_case(std::uint64_t seed, int trial, const std::vector<TestFunction>& fns) {
  auto rng = case_rng(seed, trial, 2);
  const Draw d = draw(rng, fns, 5);
  const NodeTriple nodes = random_triple(rng, d.iv);
  std::string seq_name;
  HarmonicSequence seq = HarmonicSequence::reference_non_monomial(d.n);
  switch (pick_int(rng, 0, 4)) {
    case 0: seq = HarmonicSequence::shifted_monomial(d.iv.a(), d.n), seq_name = "alpha=a"; break;
    case 1: seq = HarmonicSequence::shifted_monomial(nodes.x, d.n), seq_name = "alpha=x"; break;
    case 2: seq = HarmonicSequence::shifted_monomial(d.iv.midpoint(), d.n), seq_name = "alpha=mid"; break;
    case 3: seq = HarmonicSequence::shifted_monomial(d.iv.b(), d.n), seq_name = "alpha=b"; break;
    default: seq_name = "appell"; break;
  }
  const FinkContext ctx(std::move(seq), d.n, nodes, d.iv);
  const double r = std::abs(fink_lhs(ctx, d.f) - fink_rhs(ctx, d.f));
  const double tol = 1e-8 * (1.0 + mean_abs(d.f, d.iv));
  return {base_label(seed, trial, d) + " nodes=" + fmt_nodes(nodes) + " seq=" + seq_name, r, tol, r <= tol};
}

CaseResult gs_case(std::uint64_t seed, int trial, const std::vector<TestFunction>& fns) {
  auto rng = case_rng(seed, trial, 3);
  const Draw d = draw(rng, fns, 4);
  const double x = pick_companion_x(rng, d.iv);
  const double tol = 1e-8 * (1.0 + mean_abs(d.f, d.iv));
  CaseResult c;
  c.label = base_label(seed, trial, d) + " x=" + std::to_string(x);
  c.residual = gs_identity_residual(x, d.n, d.f, d.iv);
  c.corrected_residual = gs_companion_residual(x, d.n, d.f, d.iv);
  c.tolerance = tol;
  c.ok = c.residual <= tol;
  return c;
}

CaseResult gruss_case(std::uint64_t seed, int trial, const std::vector<TestFunction>& fns) {
  auto rng = case_rng(seed, trial, 4);
  const Draw d = draw(rng, fns, 3);
  const double x = pick_companion_x(rng, d.iv);
  const double tol = 1e-8 * (1.0 + mean_abs(d.f, d.iv));
  CaseResult c;
  c.tolerance = tol;
  const std::string where = base_label(seed, trial, d) + " x=" + std::to_string(x);
  switch (trial % 3) {
    case 0: {
      const double T = chebyshev_T(P_pair(d.f, x, d.n, d.iv), d.iv);
      c.label = "P " + where;
      c.residual = std::abs(T - P_functional(d.f, x, d.n, d.iv));
      c.corrected_residual = std::abs(T - P_exact(d.f, x, d.n, d.iv));
      break;
    }
    case 1: {
      const double T = chebyshev_T(Q_pair(d.f, x, d.n, d.iv), d.iv);
      c.label = "Q " + where;
      c.residual = std::abs(T - Q_functional(d.f, x, d.n, d.iv));
      c.corrected_residual = std::abs(T - Q_exact(d.f, x, d.n, d.iv));
      break;
    }
    default: {
      const FinkContext ctx(HarmonicSequence::reference_non_monomial(d.n + 1), d.n,
                            NodeTriple{d.iv.a(), d.iv.midpoint(), d.iv.b()}, d.iv);
      c.label = "L " + where;
      c.residual = std::abs(chebyshev_T(L_pair(ctx, d.f, x), d.iv) - L_functional(ctx, d.f, x));
      c.corrected_residual = c.residual;
      break;
    }
  }
  c.ok = c.residual <= tol;
  return c;
}

}  // namespace

SuiteResult run_suite(const std::string& suite, std::uint64_t seed, int trials, bool parallel) {
  if (trials < 1) throw PreconditionError("trials must be >= 1");
  CaseResult (*one)(std::uint64_t, int, const std::vector<TestFunction>&) = nullptr;
  if (suite == "expansion") one = expansion_case;
  else if (suite == "fink") one = fink_case;
  else if (suite == "gs") one = gs_case;
  else if (suite == "gruss") one = gruss_case;
  else throw PreconditionError("unknown suite '" + suite + "'");
  const std::vector<TestFunction> fns = registry();
  SuiteResult out{suite, std::vector<CaseResult>(trials)};
  for_each_case(trials, parallel, [&](int i) { out.cases[i] = one(seed, i, fns); });
  return out;
}

// -- dominance sweep ------------------------------------------------------------

namespace {

struct Check {
  std::string bound;
  double value;
  double remainder;
};

std::vector<Check> dominance_checks(const TestFunction& f, int n, const Interval& iv, const NodeTriple& nodes,
                                    std::mt19937_64& rng) {
  std::vector<Check> out;
  const std::vector<NormSpec> norms{NormSpec(1.0), NormSpec(2.0), NormSpec(3.0), NormSpec::infinity()};
  const double rem = std::abs(remainder_numeric(f, n, nodes, iv));
  for (const auto& p : norms) {
    const std::string tag = " p=" + p.to_string();
    out.push_back({"lp" + tag, bound_lp(n, p, nodes, iv, lp_norm(f, n, p, iv)), rem});
    out.push_back({"variation" + tag, bound_variation(n, p, nodes, iv, p_variation(f, n - 1, p, iv)), rem});
  }

  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = u(rng) < 0.5 ? 1.0 : 0.5;
  const HolderSpec holder(r, holder_estimate(f, n - 1, r, iv));
  const double t0s[] = {nodes.x, iv.midpoint(), iv.a() + u(rng) * iv.length()};
  for (double t0 : t0s) {
    const double tilde = std::abs(tilde_remainder(n, t0, nodes, iv, f));
    for (const auto& p : {NormSpec(1.0), NormSpec(2.0), NormSpec::infinity()})
      out.push_back({"holder p=" + p.to_string(), bound_holder(n, holder, nodes, iv, t0, p), tilde});
  }
  const NodeTriple collapsed{nodes.x, nodes.x, nodes.x};
  out.push_back({"holder-collapsed", bound_holder_collapsed(n, holder, nodes.x, iv),
                 std::abs(remainder_numeric(f, n, collapsed, iv))});

  const bool appell = u(rng) < 0.5;
  const double alpha = iv.a() + u(rng) * iv.length();
  const FinkContext ctx(appell ? HarmonicSequence::reference_non_monomial(n) : HarmonicSequence::shifted_monomial(alpha, n),
                        n, nodes, iv);
  const double E = std::abs(fink_quadrature(ctx, f).E);
  for (const auto& p : norms) {
    const double norm = lp_norm(f, n, p, iv);
    out.push_back({"fink p=" + p.to_string(), bound_fink(p, ctx, norm), E});
    out.push_back({"fink-factored p=" + p.to_string(), bound_fink_factored(p, ctx, norm), E});
  }

  const double x = iv.a() + 0.5 * iv.length() * u(rng);
  const double gs = std::abs(gs_rhs(x, n, f, iv));
  for (const auto& p : norms) {
    const double norm = lp_norm(f, n, p, iv);
    out.push_back({"gs-stated p=" + p.to_string(), gs_sharp_constant(n, p, x, iv) * norm, gs});
    out.push_back({"gs-kernel p=" + p.to_string(), gs_kernel_constant(n, p, x, iv) * norm, gs});
  }
  return out;
}

}  // namespace

std::vector<DominanceTally> dominance_sweep(std::uint64_t seed, int triples, int max_n, bool parallel) {
  const std::vector<TestFunction> fns = registry();
  const auto& ivs = standard_intervals();
  const int per_fn = static_cast<int>(ivs.size()) * max_n * triples;
  const int total = static_cast<int>(fns.size()) * per_fn;
  std::vector<std::vector<Check>> results(total);
  std::vector<std::string> labels(total);
  for_each_case(total, parallel, [&](int i) {
    const TestFunction& f = fns[i / per_fn];
    const int rest = i % per_fn;
    const Interval& iv = ivs[rest / (max_n * triples)];
    const int n = 1 + (rest / triples) % max_n;
    auto rng = case_rng(seed, i, 5);
    const NodeTriple nodes = random_triple(rng, iv);
    labels[i] = "fn=" + f.name() + " n=" + std::to_string(n) + " iv=" + fmt_iv(iv) + " nodes=" + fmt_nodes(nodes);
    results[i] = dominance_checks(f, n, iv, nodes, rng);
  });

  std::vector<DominanceTally> tallies;
  for (int i = 0; i < total; ++i) {
    for (const auto& c : results[i]) {
      auto it = std::find_if(tallies.begin(), tallies.end(), [&](const auto& t) { return t.bound == c.bound; });
      if (it == tallies.end()) {
        tallies.push_back(DominanceTally{c.bound, 0, 0, 0.0, {}});
        it = tallies.end() - 1;
      }
      ++it->checked;
      if (!dominates(c.value, c.remainder)) ++it->violated;
      const double ratio = c.value > 0.0 ? c.remainder / c.value : (c.remainder > 1e-12 ? kInf : 0.0);
      if (ratio > it->max_tightness || it->worst_label.empty()) {
        it->max_tightness = std::max(it->max_tightness, ratio);
        it->worst_label = labels[i];
      }
    }
  }
  return tallies;
}

}  // namespace twopoint
