#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "monocst/errors.hpp"
#include "monocst/nu_inner.hpp"
#include "monocst/report.hpp"
#include "monocst/verify.hpp"

using namespace monocst;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

VerifyConfig light(std::vector<int> ms = {}) {
  VerifyConfig c;
  c.ms = std::move(ms);
  return c;
}

}  // namespace

TEST_CASE("pass rule") {
  CHECK(make_check("s", "a", 1.0, 1.0 + 1e-9, 1e-8).pass);
  CHECK_FALSE(make_check("s", "a", 1.0, 1.1, 1e-8).pass);
  CHECK(make_check("s", "a", 2.0, 2.2, 0.15, Metric::Relative).pass);
  // mismatch controls pass only when the mismatch shows up
  CHECK(make_check("s", "a", 1.0, 2.0, 1e-8, Metric::Absolute, true).pass);
  CHECK_FALSE(make_check("s", "a", 1.0, 1.0, 1e-8, Metric::Absolute, true).pass);
  // order targets are one-sided
  CHECK(make_check("s", "a", 2.0, 2.7, 0.1, Metric::Order).pass);
  CHECK(make_check("s", "a", 2.0, 1.95, 0.1, Metric::Order).pass);
  CHECK_FALSE(make_check("s", "a", 2.0, 1.5, 0.1, Metric::Order).pass);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (auto metric : {Metric::Absolute, Metric::Relative, Metric::Order}) {
    CHECK_FALSE(make_check("s", "a", 2.0, nan, 0.1, metric).pass);
    CHECK_FALSE(make_check("s", "a", 2.0, nan, 0.1, metric, true).pass);
  }
}

TEST_CASE("cosh-Gaussian identity") {
  QuadratureSpec q;
  for (double p : {0.0, 0.5, 1.0, 2.0, 3.0}) {
    CHECK(cosh_gaussian_identity(p, q) < 1e-10);
    CHECK(cosh_gaussian_integral(p, q) ==
          doctest::Approx(0.5 * std::sqrt(std::numbers::pi) * std::exp(p * p)).epsilon(1e-10));
  }
}

TEST_CASE("classical transform is the heat-evolved signal at complex points") {
  QuadratureSpec q;
  for (const auto& f : default_corpus(2)) {
    const auto h = heat_evolve(f);
    for (BladeMask b : f.blades())
      for (cplx z : {cplx{0.3, 0.0}, cplx{-1.0, 0.8}, cplx{0.5, -1.7}})
        CHECK(std::abs(classical_cst_value(f, b, z, q) - h.component_value(b, z)) < 1e-9);
  }
}

TEST_CASE("whole-plane slice norm is sqrt(pi) times the L2 norm squared") {
  QuadratureSpec q;
  const auto corpus = default_corpus(2);
  for (std::size_t i : {0u, 2u, 5u}) {
    CliffordSignal scalar(2);
    for (const auto& p : corpus[i].components().begin()->second) scalar.add(0, p);
    const double l2 = l2_inner(scalar, scalar).real();
    CHECK(slice_plane_norm(scalar, q) / l2 == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-8));
  }
}

TEST_CASE("Monte Carlo over the raw measure guards the reduced d nu_m rule") {
  QuadratureSpec q;
  q.mc_samples = 200000;
  for (int m : {2, 3}) {
    const auto corpus = default_corpus(m);
    const CliffordSignal pair[] = {corpus[2], corpus[4]};
    const auto window = window_for(pair, q);
    const double tau = monte_carlo_radius_scale(pair);
    for (auto [a, b] : {std::pair{2, 2}, std::pair{2, 4}, std::pair{4, 4}}) {
      const auto fa = u_s_field(corpus[a]), fb = u_s_field(corpus[b]);
      const auto reduced = nu_m_inner(fa, fb, q, window);
      const auto mc = nu_m_inner_monte_carlo(fa, fb, q, window, tau);
      const double scale = std::max(1.0, l2_norm(corpus[a]) * l2_norm(corpus[b]));
      CHECK(std::abs(reduced - l2_inner(corpus[a], corpus[b])) < 1e-6 * scale);
      CHECK(std::abs(mc.value - reduced) < 3e-3 * scale);
      CHECK(mc.standard_error > 0.0);
    }
  }
}

TEST_CASE("light suites pass and are deterministic") {
  for (const char* name : {"cosh_gaussian", "restriction", "planewave", "ladder"}) {
    const auto a = run_suite(name, light());
    const auto b = run_suite(name, light());
    CHECK_MESSAGE(a.passed(), name);
    CHECK(!a.checks.empty());
    CHECK(to_csv(report_table({a})) == to_csv(report_table({b})));
  }
}

TEST_CASE("seed changes random draws") {
  auto c = light();
  const auto a = run_suite("restriction", c);
  c.q.seed += 1;
  const auto b = run_suite("restriction", c);
  CHECK(a.passed());
  CHECK(b.passed());
  CHECK(to_csv(report_table({a})) != to_csv(report_table({b})));
}

TEST_CASE("tolerance override and custom corpus") {
  auto c = light({2});
  c.q.mc_samples = 0;
  c.corpus = [](int m) {
    auto all = default_corpus(m);
    return std::vector<CliffordSignal>{all[0], all[1]};
  };
  const auto ok = run_suite("unitarity", c);
  CHECK(ok.passed());
  c.tolerance = 1e-300;
  const auto strict = run_suite("unitarity", c);
  CHECK(strict.failures() > 0);
  CHECK(strict.checks.size() == ok.checks.size());
}

TEST_CASE("unknown suites are usage errors") {
  CHECK_THROWS_AS(run_suite("nope", light()), UsageError);
  CHECK(suite_names().size() == 9);
}

TEST_CASE("CSV report layout") {
  const auto r = run_suite("cosh_gaussian", light());
  const auto text = to_csv(report_table({r}));
  const auto ls = lines(text);
  REQUIRE(ls.size() == 2 + r.checks.size());
  CHECK(ls[0] == "# monocst-v1");
  CHECK(ls[1].rfind("suite,check,claimed,computed,abs_err,rel_err,tol,pass,seconds", 0) == 0);
  CHECK(ls[2].rfind("cosh_gaussian,p=0,", 0) == 0);
  // seconds stay zero without timings
  for (const auto& row : report_table({r}).rows) CHECK(std::get<double>(row[8]) == 0.0);
}

TEST_CASE("CSV quoting") {
  Table t;
  t.columns = {"a", "b"};
  t.rows.push_back({std::string("x,y"), std::string("say \"hi\"")});
  CHECK(lines(to_csv(t))[2] == "\"x,y\",\"say \"\"hi\"\"\"");
}

TEST_CASE("JSON report mirrors the CSV") {
  const auto r = run_suite("cosh_gaussian", light());
  const auto table = report_table({r});
  const auto doc = nlohmann::json::parse(to_json(table, "verify"));
  CHECK(doc["schema"] == "monocst-v1");
  CHECK(doc["kind"] == "verify");
  CHECK(doc["columns"].size() == table.columns.size());
  REQUIRE(doc["rows"].size() == table.rows.size());
  CHECK(doc["rows"][0]["suite"] == "cosh_gaussian");
  CHECK(doc["rows"][0]["tol"].get<double>() == 1e-10);
}
