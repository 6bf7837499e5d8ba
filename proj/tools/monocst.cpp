// monocst: tabulate slice/axial coherent state transforms, plane waves,
// Cauchy-Kowalewski polynomials and run the verification suites.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "monocst/errors.hpp"
#include "monocst/parallel.hpp"
#include "monocst/radon.hpp"
#include "monocst/report.hpp"
#include "monocst/slice.hpp"
#include "monocst/specfun.hpp"
#include "monocst/verify.hpp"

using namespace monocst;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 2, kNoConvergence = 3, kUsage = 64 };

struct Axis {
  double lo = 0.0;
  double hi = 0.0;
  int n = 1;
  std::vector<double> points() const {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    return out;
  }
};

struct Grid {
  Axis x0{-2.0, 2.0, 11};
  Axis r{0.0, 2.0, 11};
};

struct RunConfig {
  std::vector<int> ms;
  std::string signal;
  std::string out;
  std::string format = "csv";
  std::string grid_text;
  std::optional<double> tol;
  int nodes = 0;
  int plane_nodes = 0;
  long long mc_samples = -1;
  std::uint64_t seed = QuadratureSpec{}.seed;
  bool self_check = false;
  bool timings = false;

  QuadratureSpec quadrature() const {
    QuadratureSpec q;
    if (nodes > 0) q.n_points = nodes;
    if (plane_nodes > 0) q.plane_nodes = plane_nodes;
    if (mc_samples >= 0) q.mc_samples = mc_samples;
    q.seed = seed;
    validate(q);
    return q;
  }

  int single_m(int fallback) const {
    if (ms.empty()) return fallback;
    if (ms.size() != 1) throw UsageError("this command takes a single --m");
    return ms.front();
  }
};

Axis parse_axis(const std::string& text, const std::string& name) {
  Axis a;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &a.lo, &a.hi, &a.n, &tail) != 3 || a.n < 1) {
    throw UsageError("bad --grid axis '" + name + "=" + text + "' (want a:b:n)");
  }
  return a;
}

Grid parse_grid(const std::string& text) {
  Grid g;
  if (text.empty()) return g;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw UsageError("bad --grid entry '" + part + "'");
    const std::string key = part.substr(0, eq);
    if (key == "x0") {
      g.x0 = parse_axis(part.substr(eq + 1), key);
    } else if (key == "r") {
      g.r = parse_axis(part.substr(eq + 1), key);
    } else {
      throw UsageError("unknown --grid key '" + key + "'");
    }
  }
  if (g.r.lo < 0.0 || g.r.hi < 0.0) throw UsageError("--grid r range must be nonnegative");
  return g;
}

std::vector<double> parse_point(const std::string& text, int m) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError("bad --point entry '" + part + "'");
    }
  }
  if (static_cast<int>(v.size()) != m + 1) {
    throw UsageError("--point needs m + 1 = " + std::to_string(m + 1) + " comma separated values");
  }
  return v;
}

void emit(const RunConfig& cfg, const Table& table, const std::string& kind) {
  const std::string text = cfg.format == "json" ? to_json(table, kind) : to_csv(table);
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
}

struct SelfCheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void self_check(bool ok, const std::string& what) {
  if (!ok) throw SelfCheckFailure("self-check failed: " + what);
}

// ---------------------------------------------------------------------------

int cmd_transform(const RunConfig& cfg, const std::string& kind) {
  if (cfg.signal.empty()) throw UsageError("transform needs --signal");
  const CliffordSignal f = load_signal(cfg.signal);
  if (!cfg.ms.empty() && cfg.single_m(f.m()) != f.m()) throw UsageError("--m does not match the signal file");
  QuadratureSpec q = cfg.quadrature();
  q.check_convergence = true;
  const Grid grid = parse_grid(cfg.grid_text);
  const int m = f.m();
  const auto xs = grid.x0.points();
  const auto rs = grid.r.points();

  std::vector<BladeMask> blades = f.blades();
  const bool empty = blades.empty();
  if (empty) blades = {0};

  Table t;
  const bool slice = kind == "slice";
  if (slice) {
    t.columns = {"x0", "r", "blade", "alpha_re", "alpha_im", "beta_re", "beta_im"};
  } else {
    t.columns = {"x0", "r", "blade", "B_re", "B_im", "C_re", "C_im"};
  }
  const std::size_t cells = xs.size() * rs.size();
  std::vector<std::vector<std::pair<cplx, cplx>>> values(cells);
  const SliceFunction us = u_s_field(f);
  const AxialFunction ua = u_a_field(f, q);
  parallel_for(cells, [&](std::size_t c) {
    const double x0 = xs[c / rs.size()], r = rs[c % rs.size()];
    auto& row = values[c];
    if (empty) {
      row.assign(1, {cplx{}, cplx{}});
    } else if (slice) {
      for (const auto& v : us.values(x0, r)) row.emplace_back(v.alpha, v.beta);
    } else {
      for (const auto& v : ua.values(x0, r)) row.emplace_back(v.B, v.C);
    }
  });
  for (std::size_t c = 0; c < cells; ++c) {
    for (std::size_t b = 0; b < blades.size(); ++b) {
      const auto [first, second] = values[c][b];
      t.rows.push_back({xs[c / rs.size()], rs[c % rs.size()], blade_label(blades[b], m), first.real(), first.imag(),
                        second.real(), second.imag()});
    }
  }

  if (cfg.self_check) {
    // Restriction row: r = 0 equals the heat-evolved signal.
    const CliffordSignal heated = heat_evolve(f);
    const double tol = cfg.tol.value_or(slice ? 1e-12 : 1e-9);
    for (double x0 : xs) {
      const Multivector want = heated.evaluate(x0);
      const Multivector got = slice ? us.at(AxialPoint{x0, 0.0, {}}) : ua.at(AxialPoint{x0, 0.0, {}});
      self_check((got - want).norm() <= tol * std::max(1.0, want.norm()), "restriction at x0 = " + std::to_string(x0));
    }
    if (!slice && !empty) {
      const double x0 = 0.5 * (grid.x0.lo + grid.x0.hi);
      const double r = std::max(0.5, 0.5 * (grid.r.lo + grid.r.hi));
      std::vector<double> res;
      for (double h : {4e-3, 2e-3, 1e-3}) res.push_back(vekua_residual(ua, AxialGrid{x0 - h, r - h, 3, 3}, h));
      const double order = std::min(std::log2(res[0] / res[1]), std::log2(res[1] / res[2]));
      self_check(order >= 1.9 || res[2] <= 1e-12, "Vekua residual order " + std::to_string(order));
    }
  }
  emit(cfg, t, slice ? "transform-slice" : "transform-axial");
  return kOk;
}

int cmd_planewave(const RunConfig& cfg, const std::string& kind, double p) {
  const int m = cfg.single_m(3);
  const Grid grid = parse_grid(cfg.grid_text);
  const bool slice = kind == "slice";
  Table t;
  if (slice) {
    t.columns = {"x0", "r", "blade", "alpha_re", "alpha_im", "beta_re", "beta_im"};
  } else {
    t.columns = {"x0", "r", "blade", "B_re", "B_im", "C_re", "C_im"};
  }
  for (double x0 : grid.x0.points()) {
    for (double r : grid.r.points()) {
      cplx a, b;
      if (slice) {
        const SliceValue v = slice_plane_wave_value(p, x0, r);
        a = v.alpha;
        b = v.beta;
      } else {
        const AxialValue v = axial_plane_wave_value(p, x0, r, m);
        a = v.B;
        b = v.C;
      }
      t.rows.push_back({x0, r, std::string("1"), a.real(), a.imag(), b.real(), b.imag()});
    }
  }
  if (cfg.self_check) {
    const double tol = cfg.tol.value_or(1e-12);
    for (double x0 : grid.x0.points()) {
      const cplx want = std::exp(cplx{0.0, p * x0});
      const cplx got = slice ? slice_plane_wave_value(p, x0, 0.0).alpha : axial_plane_wave_value(p, x0, 0.0, m).B;
      self_check(std::abs(got - want) <= tol, "plane wave restriction at x0 = " + std::to_string(x0));
    }
  }
  emit(cfg, t, slice ? "planewave-slice" : "planewave-axial");
  return kOk;
}

int cmd_ckpoly(const RunConfig& cfg, int j, const std::string& point_text) {
  const int m = cfg.single_m(3);
  if (j < 0) throw UsageError("--j must be nonnegative");
  const auto table = ck_coefficients(m, std::max(j, 1));
  Table t;
  if (!point_text.empty()) {
    const auto v = parse_point(point_text, m);
    Paravector p;
    p.x0 = v[0];
    p.xvec.assign(v.begin() + 1, v.end());
    const Multivector x = ck_polynomial(j, p, *table);
    t.columns = {"j", "point", "blade", "re", "im"};
    for (BladeMask b = 0; b < (BladeMask{1} << m); ++b) {
      if (x[b] == cplx{} && b != 0) continue;
      t.rows.push_back({std::int64_t{j}, point_text, blade_label(b, m), x[b].real(), x[b].imag()});
    }
  } else {
    const Grid grid = parse_grid(cfg.grid_text);
    t.columns = {"j", "x0", "r", "B_re", "B_im", "C_re", "C_im"};
    for (double x0 : grid.x0.points()) {
      for (double r : grid.r.points()) {
        const AxialValue v = ck_polynomial_value(j, x0, r, *table);
        t.rows.push_back({std::int64_t{j}, x0, r, v.B.real(), v.B.imag(), v.C.real(), v.C.imag()});
      }
    }
  }
  if (cfg.self_check) {
    // X_0^{(j)}(0, x) = x^j.
    std::mt19937_64 rng(cfg.seed);
    Paravector p;
    p.xvec = random_unit_vector(rng, m);
    for (auto& x : p.xvec) x *= 0.8;
    Multivector power = Multivector::scalar(m, 1.0);
    for (int k = 0; k < j; ++k) power = mv_product(power, p.embed());
    const Multivector got = ck_polynomial(j, p, *table);
    self_check((got - power).norm() <= cfg.tol.value_or(1e-12) * std::max(1.0, power.norm()),
               "X_0^(j)(0, x) = x^j");
  }
  emit(cfg, t, "ckpoly");
  return kOk;
}

int cmd_radon(const RunConfig& cfg, int kmax, const std::string& point_text) {
  const int m = cfg.single_m(3);
  if (kmax < 0) throw UsageError("--kmax must be nonnegative");
  const QuadratureSpec q = cfg.quadrature();
  const auto table = ck_coefficients(m, kmax);
  Paravector p;
  if (point_text.empty()) {
    p.x0 = 0.4;
    p.xvec.assign(m, 0.0);
    p.xvec[0] = 0.6;
    if (m > 1) p.xvec[1] = -0.5;
  } else {
    const auto v = parse_point(point_text, m);
    p.x0 = v[0];
    p.xvec.assign(v.begin() + 1, v.end());
  }
  const AxialPoint pt = AxialPoint::from_paravector(p);
  Table t;
  t.columns = {"k", "lambda", "cross_ladder", "measured_ratio", "ratio_over_lambda"};
  double worst = 0.0;
  for (int k = 0; k <= kmax; ++k) {
    PolySignal power(m);
    std::vector<cplx> c(k + 1, cplx{});
    c[k] = 1.0;
    power.set(0, c);
    const Multivector R = dual_radon(slice_extension(power), pt, q);
    const Multivector X = ck_polynomial(k, p, *table);
    const double ratio = (hermitian_inner(R, X) / hermitian_inner(X, X)).real();
    const double cross = 1.0 / (table->mu0[k] * gegenbauer(k, 0.5 * (m - 1.0), 1.0));
    const double lambda = table->lambda[k];
    worst = std::max(worst, std::abs(ratio / lambda - 1.0));
    t.rows.push_back({std::int64_t{k}, lambda, cross, ratio, ratio / lambda});
  }
  if (cfg.self_check) self_check(worst <= cfg.tol.value_or(1e-9), "ladder ratio deviates by " + std::to_string(worst));
  emit(cfg, t, "radon-ladder");
  return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::vector<std::string>& requested) {
  std::vector<std::string> suites;
  for (const auto& s : requested) {
    if (s == "all") {
      suites = suite_names();
      break;
    }
    const auto& known = suite_names();
    if (std::find(known.begin(), known.end(), s) == known.end()) throw UsageError("unknown suite '" + s + "'");
    suites.push_back(s);
  }
  if (suites.empty()) suites = suite_names();
  VerifyConfig vc;
  vc.ms = cfg.ms;
  for (int m : vc.ms) {
    if (m < kMinGenerators || m > kMaxGenerators) throw UsageError("--m outside 2..12");
  }
  vc.q = cfg.quadrature();
  vc.tolerance = cfg.tol;
  vc.timings = cfg.timings;
  std::vector<VerificationReport> reports;
  bool ok = true;
  for (const auto& s : suites) {
    reports.push_back(run_suite(s, vc));
    const auto& r = reports.back();
    std::fprintf(stderr, "%-14s %3zu checks, %zu failed\n", s.c_str(), r.checks.size(), r.failures());
    for (const auto& c : r.checks) {
      if (!c.pass) std::fprintf(stderr, "  FAIL %s err=%.3g tol=%.3g\n", c.id.c_str(), c.error(), c.tol);
    }
    ok = ok && r.passed();
  }
  emit(cfg, report_table(reports), "verify");
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slice and axial monogenic coherent state transforms"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--m", cfg.ms, "Generator count(s), comma separated for verify")->delimiter(',');
    sub->add_option("--out", cfg.out, "Output file (default stdout)");
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--grid", cfg.grid_text, "x0=a:b:n,r=a:b:n");
    sub->add_option("--tol", cfg.tol, "Tolerance override");
    sub->add_option("--nodes", cfg.nodes, "Nodes of the 1D rules");
    sub->add_option("--plane-nodes", cfg.plane_nodes, "Nodes per axis of the (x0, r) rule");
    sub->add_option("--mc-samples", cfg.mc_samples, "Monte Carlo samples");
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_flag("--self-check", cfg.self_check, "Re-derive a restriction row and abort on mismatch");
  };

  std::string kind = "slice";
  auto* transform = app.add_subcommand("transform", "Tabulate U_s or U_a of a signal on a grid");
  common(transform);
  transform->add_option("--signal", cfg.signal, "Signal JSON file")->required();
  transform->add_option("--kind", kind, "slice or axial")->check(CLI::IsMember({"slice", "axial"}));

  double p = 1.0;
  std::string pw_kind = "slice";
  auto* planewave = app.add_subcommand("planewave", "Tabulate slice or axial plane waves");
  common(planewave);
  planewave->add_option("--p", p, "Momentum")->required();
  planewave->add_option("--kind", pw_kind, "slice or axial")->check(CLI::IsMember({"slice", "axial"}));

  std::vector<std::string> suites;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  common(verify);
  verify->add_option("--suites", suites, "Comma separated suite names or 'all'")->delimiter(',');
  verify->add_flag("--timings", cfg.timings, "Record wall-clock seconds (breaks byte-identical reports)");

  int j = 0;
  std::string point;
  auto* ckpoly = app.add_subcommand("ckpoly", "Tabulate X_0^(j)");
  common(ckpoly);
  ckpoly->add_option("--j", j, "Degree")->required();
  ckpoly->add_option("--point", point, "x0,x1,...,xm");

  int kmax = 6;
  std::string radon_point;
  auto* radon = app.add_subcommand("radon", "Dual Radon ladder constants against quadrature");
  common(radon);
  radon->add_option("--kmax", kmax, "Largest power");
  radon->add_option("--point", radon_point, "x0,x1,...,xm");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*transform) return cmd_transform(cfg, kind);
    if (*planewave) return cmd_planewave(cfg, pw_kind, p);
    if (*verify) return cmd_verify(cfg, suites);
    if (*ckpoly) return cmd_ckpoly(cfg, j, point);
    if (*radon) return cmd_radon(cfg, kmax, radon_point);
  } catch (const QuadratureError& e) {
    std::fprintf(stderr, "monocst: numeric non-convergence: %s\n", e.what());
    return kNoConvergence;
  } catch (const SelfCheckFailure& e) {
    std::fprintf(stderr, "monocst: %s\n", e.what());
    return kVerifyFailed;
  } catch (const Error& e) {
    std::fprintf(stderr, "monocst: %s\n", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "monocst: %s\n", e.what());
    return 1;
  }
  return kUsage;
}
