#include "twopoint/cli.hpp"

#include <cmath>
#include <cstdio>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twopoint/bounds.hpp"
#include "twopoint/fink.hpp"
#include "twopoint/kernels.hpp"
#include "twopoint/oracle.hpp"
#include "twopoint/quadrature.hpp"
#include "twopoint/report.hpp"
#include "twopoint/sweep.hpp"
#include "twopoint/testlib.hpp"

namespace twopoint {

namespace {

// A usage problem found after flag parsing (bad node list, asymmetric nodes...).
struct UsageError : PreconditionError {
  using PreconditionError::PreconditionError;
};

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("cannot parse ") + what + " entry '" + item + "'");
    }
  }
  return out;
}

NodeTriple parse_nodes(const std::string& text, const Interval& iv, const char* what = "nodes") {
  const auto v = parse_list(text, what);
  if (v.size() != 3) throw UsageError(std::string(what) + " needs three comma-separated values y,x,z");
  const NodeTriple nodes{v[0], v[1], v[2]};
  if (!nodes.admissible(iv)) throw UsageError(std::string(what) + " must satisfy a <= y <= x <= z <= b");
  return nodes;
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string g6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

enum class Format { text, json, csv };

void print_reports(const std::vector<BoundReport>& rows, Format fmt, std::ostream& out) {
  if (fmt == Format::json) {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    out << dump_json(arr) << "\n";
    return;
  }
  if (fmt == Format::csv) {
    out << csv_header() << "\n";
    for (const auto& r : rows) out << to_csv_row(r) << "\n";
    return;
  }
  for (const auto& r : rows) {
    out << r.bound_name << "  n=" << r.n << " p=" << r.p.to_string() << "  bound=" << g6(r.bound_value)
        << "  remainder=" << g6(r.remainder_abs) << "  tightness=" << g6(r.tightness)
        << (r.h_estimated ? "  (H estimated)" : "") << "  " << (r.satisfied ? "satisfied" : "VIOLATED") << "\n";
  }
}

// -- integrate ------------------------------------------------------------------

struct CommonArgs {
  std::string fn;
  double a = 0.0;
  double b = 1.0;
  int n = 1;
  std::string nodes;
};

void add_common(CLI::App* cmd, CommonArgs& c, bool need_nodes) {
  cmd->add_option("--fn", c.fn, "registry name or poly:c0,c1,...")->required();
  cmd->add_option("--a", c.a, "left end")->required();
  cmd->add_option("--b", c.b, "right end")->required();
  cmd->add_option("--n", c.n, "expansion order")->required()->check(CLI::PositiveNumber);
  auto* opt = cmd->add_option("--nodes", c.nodes, "y,x,z");
  if (need_nodes) opt->required();
}

int cmd_integrate(const CommonArgs& c, int panels, Format fmt, std::ostream& out, std::ostream& err) {
  const Interval iv(c.a, c.b);
  const TestFunction f = make_function(c.fn);
  const NodeTriple nodes = parse_nodes(c.nodes, iv);
  const QuadratureResult q = expand(f, c.n, nodes, iv);
  double composite = std::nan("");
  if (panels > 0) {
    const NodeTriple pattern{(nodes.y - iv.a()) / iv.length(), (nodes.x - iv.a()) / iv.length(),
                             (nodes.z - iv.a()) / iv.length()};
    composite = composite_integrate_order(f, c.n, panels, pattern, iv);
  }
  if (fmt == Format::json) {
    Json j;
    j["fn"] = f.name();
    j["n"] = c.n;
    j["nodes"] = Json::array({nodes.y, nodes.x, nodes.z});
    j["interval"] = Json::array({iv.a(), iv.b()});
    j["rule"] = q.rule;
    j["approx"] = q.approx;
    j["correction"] = q.correction;
    j["reference"] = q.reference;
    j["remainder"] = q.remainder;
    j["identity_residual"] = q.identity_residual;
    j["tolerance"] = q.tolerance();
    if (panels > 0) {
      j["panels"] = panels;
      j["composite"] = composite;
    }
    j["ok"] = q.ok();
    out << dump_json(j) << "\n";
  } else if (fmt == Format::csv) {
    out << "fn,n,approx,reference,remainder,identity_residual,tolerance,ok\n";
    out << f.name() << "," << c.n << "," << g17(q.approx) << "," << g17(q.reference) << "," << g17(q.remainder) << ","
        << g17(q.identity_residual) << "," << g17(q.tolerance()) << "," << (q.ok() ? "true" : "false") << "\n";
  } else {
    out << "fn=" << f.name() << " n=" << c.n << " interval=[" << g17(iv.a()) << "," << g17(iv.b()) << "] nodes=("
        << g17(nodes.y) << "," << g17(nodes.x) << "," << g17(nodes.z) << ")\n";
    out << "rule              " << g17(q.rule) << "\n";
    out << "correction        " << g17(q.correction) << "\n";
    out << "approx            " << g17(q.approx) << "\n";
    out << "reference         " << g17(q.reference) << "\n";
    out << "remainder         " << g17(q.remainder) << "\n";
    out << "identity_residual " << g17(q.identity_residual) << " (tolerance " << g6(q.tolerance()) << ")\n";
    if (panels > 0) out << "composite(" << panels << ")      " << g17(composite) << "\n";
  }
  if (!q.ok()) {
    err << "identity residual " << q.identity_residual << " exceeds " << q.tolerance() << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

// -- bounds ---------------------------------------------------------------------

struct BoundArgs {
  std::string which = "lp";
  std::string p = "inf";
  double t0 = std::nan("");
  double r = 1.0;
  double H = std::nan("");
  double alpha = std::nan("");
};

int cmd_bounds(const CommonArgs& c, const BoundArgs& ba, Format fmt, std::ostream& out, std::ostream& err) {
  const Interval iv(c.a, c.b);
  const TestFunction f = make_function(c.fn);
  const NodeTriple nodes = parse_nodes(c.nodes, iv);
  const NormSpec p = NormSpec::parse(ba.p);
  const int n = c.n;
  f.require_order(n);

  std::vector<std::string> kinds;
  {
    std::stringstream ss(ba.which);
    std::string item;
    while (std::getline(ss, item, ',')) kinds.push_back(item);
  }
  if (kinds.empty()) throw UsageError("--which needs at least one bound");
  for (const auto& k : kinds)
    if (k == "gs" && !nodes.is_symmetric(iv))
      throw UsageError("the gs bound needs symmetric nodes (h, (a+b)/2, a+b-h)");

  const double rem = std::abs(remainder_numeric(f, n, nodes, iv));
  std::vector<BoundReport> rows;
  for (const auto& k : kinds) {
    if (k == "variation") {
      rows.push_back(BoundReport::make(k, n, p, nodes, iv, bound_variation(n, p, nodes, iv, p_variation(f, n - 1, p, iv)),
                                       rem));
    } else if (k == "lp") {
      rows.push_back(BoundReport::make(k, n, p, nodes, iv, bound_lp(n, p, nodes, iv, lp_norm(f, n, p, iv)), rem));
    } else if (k == "holder") {
      const double t0 = std::isnan(ba.t0) ? nodes.x : ba.t0;
      const bool estimated = std::isnan(ba.H);
      const HolderSpec spec(ba.r, estimated ? holder_estimate(f, n - 1, ba.r, iv) : ba.H);
      rows.push_back(BoundReport::make(k, n, p, nodes, iv, bound_holder(n, spec, nodes, iv, t0, p),
                                       std::abs(tilde_remainder(n, t0, nodes, iv, f)), estimated));
    } else if (k == "fink" || k == "fink-factored") {
      const double alpha = std::isnan(ba.alpha) ? nodes.x : ba.alpha;
      const FinkContext ctx(HarmonicSequence::shifted_monomial(alpha, n), n, nodes, iv);
      const double E = std::abs(fink_quadrature(ctx, f).E);
      const double norm = lp_norm(f, n, p, iv);
      const double value = k == "fink" ? bound_fink(p, ctx, norm) : bound_fink_factored(p, ctx, norm);
      rows.push_back(BoundReport::make(k, n, p, nodes, iv, value, E));
    } else if (k == "gs") {
      const double x = nodes.y;
      const double value = gs_sharp_constant(n, p, x, iv) * lp_norm(f, n, p, iv);
      rows.push_back(BoundReport::make(k, n, p, nodes, iv, value, std::abs(gs_rhs(x, n, f, iv))));
    } else {
      throw UsageError("unknown bound '" + k + "' (variation, lp, holder, fink, fink-factored, gs)");
    }
  }
  print_reports(rows, fmt, out);
  bool all = true;
  for (const auto& r : rows) {
    if (!r.satisfied) {
      err << "bound " << r.bound_name << " violated: remainder " << r.remainder_abs << " > " << r.bound_value << "\n";
      all = false;
    }
  }
  return all ? kExitOk : kExitViolation;
}

// -- verify ---------------------------------------------------------------------

int cmd_verify(const std::string& suite, std::uint64_t seed, int trials, bool tamper, bool serial, std::ostream& out,
               std::ostream& err) {
  std::vector<std::string> suites;
  if (suite == "all") suites = suite_names();
  else suites.push_back(suite);
  std::unique_ptr<KernelSignFlip> flip;
  if (tamper) flip = std::make_unique<KernelSignFlip>();

  bool all = true;
  for (const auto& name : suites) {
    const SuiteResult res = run_suite(name, seed, trials, !serial);
    for (const auto& c : res.cases) {
      out << name << "  " << c.label << "  residual=" << g6(c.residual);
      if (!std::isnan(c.corrected_residual)) out << " corrected=" << g6(c.corrected_residual);
      out << " tol=" << g6(c.tolerance) << "  " << (c.ok ? "PASS" : "FAIL") << "\n";
    }
    const CaseResult& w = res.worst();
    out << "suite " << name << ": " << res.cases.size() << " cases, worst residual/tol = " << g6(w.residual / w.tolerance)
        << "  " << (res.passed() ? "PASS" : "FAIL") << "\n";
    if (!res.passed()) {
      err << "suite " << name << " failed; worst case: " << w.label << " residual=" << g17(w.residual) << "\n";
      all = false;
    }
  }
  return all ? kExitOk : kExitViolation;
}

// -- sharpness ------------------------------------------------------------------

double gs_spike_ratio(int n, double x, const Interval& iv, double eps) {
  auto h = [&](double t) { return ipow(x - t, n - 1) * eval_GS(t, x, iv); };
  std::vector<double> candidates{iv.a(), iv.b(), x, iv.midpoint(), iv.mirror(x),
                                 oracle::grid_argmax([&](double t) { return std::abs(h(t)); }, iv).first};
  double best = 0.0;
  for (double t0 : candidates) {
    for (SpikeSide side : {SpikeSide::left, SpikeSide::right}) {
      const double lo = side == SpikeSide::left ? t0 - eps : t0;
      const double hi = side == SpikeSide::left ? t0 : t0 + eps;
      if (lo < iv.a() || hi > iv.b()) continue;
      const TestFunction f = epsilon_spike(n, t0, eps, side);
      best = std::max(best, std::abs(gs_rhs(x, n, f, iv)) / gs_sharp_constant(n, NormSpec(1.0), x, iv));
    }
  }
  return best;
}

int cmd_sharpness(const std::string& which, const std::string& ptext, int n, const std::string& node_text, double a,
                  double b, double eps, std::ostream& out, std::ostream& err) {
  const Interval iv(a, b);
  const NormSpec p = NormSpec::parse(ptext);
  const NodeTriple nodes = parse_nodes(node_text, iv);
  if (n < 1) throw UsageError("--n must be >= 1");
  double ratio = 0.0;
  double threshold = p.is_one() ? 0.99 : 0.999;
  bool judged = true;
  if (which == "lp") {
    if (p.is_one()) {
      const SpikeProbe probe = spike_probe(n, nodes, iv, eps);
      ratio = probe.tightness;
      out << "spike t0=" << g17(probe.t0) << " side=" << (probe.side == SpikeSide::left ? "left" : "right")
          << " eps=" << g6(eps) << "\n";
      if (eps > 1e-3) {
        judged = false;
        const double reference = spike_probe(n, nodes, iv, 1e-3).tightness;
        out << "ratio at eps=1e-3: " << g17(reference) << "\n";
      }
    } else {
      const TestFunction f = extremal_f0(n, p, nodes, iv);
      ratio = std::abs(remainder_numeric(f, n, nodes, iv)) / bound_lp(n, p, nodes, iv, lp_norm(f, n, p, iv));
    }
  } else if (which == "gs") {
    if (!nodes.is_symmetric(iv)) throw UsageError("gs sharpness needs symmetric nodes (h, (a+b)/2, a+b-h)");
    const double x = nodes.y;
    if (p.is_one()) {
      ratio = gs_spike_ratio(n, x, iv, eps);
      if (eps > 1e-3) {
        judged = false;
        out << "ratio at eps=1e-3: " << g17(gs_spike_ratio(n, x, iv, 1e-3)) << "\n";
      }
    } else {
      const TestFunction f = gs_extremal(n, p, x, iv);
      const double rem = std::abs(gs_rhs(x, n, f, iv));
      const double norm = lp_norm(f, n, p, iv);
      ratio = rem / (gs_sharp_constant(n, p, x, iv) * norm);
      out << "ratio against numeric kernel constant: " << g17(rem / (gs_kernel_constant(n, p, x, iv) * norm)) << "\n";
    }
    out << "stated constant " << g17(gs_sharp_constant(n, p, x, iv)) << ", numeric kernel constant "
        << g17(gs_kernel_constant(n, p, x, iv)) << "\n";
  } else {
    throw UsageError("--which must be lp or gs");
  }
  out << "tightness " << g17(ratio) << (judged ? "" : " (reported only)") << "\n";
  if (judged && !(ratio >= threshold)) {
    err << "tightness " << ratio << " below " << threshold << "\n";
    return kExitViolation;
  }
  if (judged && ratio > 1.0 + 1e-6) {
    err << "tightness " << ratio << " above 1: the stated constant is too small\n";
    return kExitViolation;
  }
  return kExitOk;
}

// -- convergence ----------------------------------------------------------------

int cmd_convergence(const std::string& fn, int n, const std::string& pattern_text, const std::string& panels_text,
                    double a, double b, std::ostream& out, std::ostream& err) {
  const Interval iv(a, b);
  const TestFunction f = make_function(fn);
  if (n < 1) throw UsageError("--n must be >= 1");
  const NodeTriple pattern = parse_nodes(pattern_text, Interval(0.0, 1.0), "pattern");
  std::vector<int> panels;
  for (double v : parse_list(panels_text, "panels")) {
    if (!(v >= 1.0) || v != std::floor(v)) throw UsageError("panel counts must be positive integers");
    panels.push_back(static_cast<int>(v));
  }
  if (panels.size() < 2) throw UsageError("--panels needs at least two counts");
  const double reference = f.exact_integral(iv).value_or(oracle::integral([&](double t) { return f(t); }, iv));
  const double floor = 1e-13 * (1.0 + std::abs(reference));

  out << "panels  error                    observed_order\n";
  std::vector<double> lx, ly;
  double prev = 0.0;
  for (std::size_t i = 0; i < panels.size(); ++i) {
    const double e = std::abs(composite_integrate(f, n, panels[i], pattern, iv) - reference);
    char line[128];
    if (i == 0 || prev <= floor || e <= floor)
      std::snprintf(line, sizeof line, "%-7d %-24.17g -\n", panels[i], e);
    else
      std::snprintf(line, sizeof line, "%-7d %-24.17g %.4f\n", panels[i], e,
                    std::log(prev / e) / std::log(static_cast<double>(panels[i]) / panels[i - 1]));
    out << line;
    if (e > floor) {
      lx.push_back(std::log(static_cast<double>(panels[i])));
      ly.push_back(std::log(e));
    }
    prev = e;
  }
  if (lx.size() < 2) {
    out << "errors at rounding level; order check skipped\n";
    return kExitOk;
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) mx += lx[i], my += ly[i];
  mx /= lx.size();
  my /= ly.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) sxy += (lx[i] - mx) * (ly[i] - my), sxx += (lx[i] - mx) * (lx[i] - mx);
  const double order = -sxy / sxx;
  const double expected = 2.0 * n;
  out << "fitted order " << g6(order) << " (expected " << expected << ")\n";
  if (order < expected - 0.2) {
    err << "fitted order " << order << " below " << expected - 0.2 << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-point Ostrowski quadrature: expansions, error bounds and identity checks", "twopoint"};
  app.require_subcommand(1);

  CommonArgs common;
  int panels = 0;
  bool json = false, csv = false;
  auto* integrate = app.add_subcommand("integrate", "evaluate the expansion at one node triple");
  add_common(integrate, common, true);
  integrate->add_option("--panels", panels, "also report the composite rule on this many panels")
      ->check(CLI::PositiveNumber);
  auto* ij = integrate->add_flag("--json", json, "JSON output");
  integrate->add_flag("--csv", csv, "CSV output")->excludes(ij);

  BoundArgs ba;
  auto* bounds = app.add_subcommand("bounds", "evaluate error bounds against the remainder");
  add_common(bounds, common, true);
  bounds->add_option("--which", ba.which, "comma list of variation|lp|holder|fink|fink-factored|gs");
  bounds->add_option("--p", ba.p, "norm exponent, 1..inf");
  bounds->add_option("--t0", ba.t0, "Hoelder anchor (default x)");
  bounds->add_option("--r", ba.r, "Hoelder exponent");
  bounds->add_option("--H", ba.H, "Hoelder constant (default: sampled estimate)");
  bounds->add_option("--alpha", ba.alpha, "shift of the monomial sequence (default x)");
  auto* bj = bounds->add_flag("--json", json, "JSON output");
  bounds->add_flag("--csv", csv, "CSV output")->excludes(bj);

  std::string suite = "all";
  std::uint64_t seed = 7;
  int trials = 100;
  bool tamper = false, serial = false;
  auto* verify = app.add_subcommand("verify", "seeded identity-residual suites");
  verify->add_option("--suite", suite, "expansion|fink|gs|gruss|all")
      ->check(CLI::IsMember({"expansion", "fink", "gs", "gruss", "all"}));
  verify->add_option("--seed", seed, "seed");
  verify->add_option("--trials", trials, "configurations per suite")->check(CLI::PositiveNumber);
  verify->add_flag("--tamper-kernel", tamper, "test hook: negate the Peano kernels");
  verify->add_flag("--serial", serial, "single-threaded");

  std::string which_sharp, p_sharp = "inf", nodes_sharp;
  int n_sharp = 1;
  double a_sharp = 0.0, b_sharp = 1.0, eps = 1e-3;
  auto* sharp = app.add_subcommand("sharpness", "tightness of extremal functions");
  sharp->add_option("--which", which_sharp, "lp|gs")->required();
  sharp->add_option("--p", p_sharp, "norm exponent");
  sharp->add_option("--n", n_sharp, "order")->required();
  sharp->add_option("--nodes", nodes_sharp, "y,x,z")->required();
  sharp->add_option("--a", a_sharp, "left end");
  sharp->add_option("--b", b_sharp, "right end");
  sharp->add_option("--eps", eps, "spike width for p = 1")->check(CLI::PositiveNumber);

  std::string fn_conv, pattern = "0.5,0.5,0.5", panels_text = "8,16,32,64";
  int n_conv = 1;
  double a_conv = 0.0, b_conv = 1.0;
  auto* conv = app.add_subcommand("convergence", "composite error against panel count");
  conv->add_option("--fn", fn_conv, "function")->required();
  conv->add_option("--n", n_conv, "composite rule of order 2n")->required();
  conv->add_option("--pattern", pattern, "relative nodes y,x,z in [0,1]");
  conv->add_option("--panels", panels_text, "comma list of panel counts");
  conv->add_option("--a", a_conv, "left end");
  conv->add_option("--b", b_conv, "right end");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const Format fmt = json ? Format::json : csv ? Format::csv : Format::text;
  try {
    if (*integrate) return cmd_integrate(common, panels, fmt, out, err);
    if (*bounds) return cmd_bounds(common, ba, fmt, out, err);
    if (*verify) return cmd_verify(suite, seed, trials, tamper, serial, out, err);
    if (*sharp) return cmd_sharpness(which_sharp, p_sharp, n_sharp, nodes_sharp, a_sharp, b_sharp, eps, out, err);
    if (*conv) return cmd_convergence(fn_conv, n_conv, pattern, panels_text, a_conv, b_conv, out, err);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}

}  // namespace twopoint
