// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "mothernet/electric.hpp"
#include "mothernet/mothercuts.hpp"
#include "mothernet/report_io.hpp"
#include "mothernet/schreier.hpp"
#include "mothernet/verify.hpp"

using namespace mothernet;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

Outcome path_law() {
  Outcome out;
  double slowest = 0;
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto start = Clock::now();
    const Network net = build_from_criterion(0, TreeShape::constant(2), n);
    const std::uint64_t last = (std::uint64_t{1} << n) - 1;
    bool path = net.edge_count() == last && is_connected(net);
    for (const Edge& e : net.edges()) {
      const auto a = net.vertex(e.u).position.value, b = net.vertex(e.v).position.value;
      path = path && (a > b ? a - b : b - a) == 1;
    }
    const auto a = net.vertices_in_positions(0, 1), b = net.vertices_in_positions(last, last + 1);
    const auto res = effective_resistance<Rational>(net, a, b);
    const double took = seconds_since(start);
    slowest = std::max(slowest, took);
    if (!path || res.value != Rational(static_cast<long>(last)) || took >= 1.0) {
      out.pass = false;
      out.detail = "n=" + std::to_string(n) + " path=" + (path ? "yes" : "no") + " Res=" + to_string(res.value) +
                   " time " + fmt(took) + "s";
      return out;
    }
  }
  out.detail = "n=1..12, Res = 2^n-1 exactly, slowest n " + fmt(slowest) + "s";
  return out;
}

Outcome dual_construction() {
  Outcome out;
  const auto start = Clock::now();
  const std::vector<TreeShape> shapes{TreeShape::constant(2),          TreeShape::constant(3),
                                      TreeShape::constant(4),          TreeShape::repeating({3, 2, 4}),
                                      TreeShape::repeating({2, 3}),    TreeShape::repeating({4, 2}),
                                      TreeShape::padded({2, 4, 3})};
  std::size_t checks = 0;
  for (int d = 0; d <= 2; ++d) {
    for (const auto& shape : shapes) {
      const auto report = verify_action(d, shape, 6);
      checks += report.checks;
      if (!report.ok()) {
        out.pass = false;
        out.detail = report.failures.front();
        return out;
      }
    }
  }
  const double took = seconds_since(start);
  out.pass = took < 30.0;
  out.detail = std::to_string(checks) + " (d, shape, n) cases identical, " + fmt(took) + "s";
  return out;
}

Outcome wnw_soundness() {
  const auto start = Clock::now();
  RandomGraphOptions graphs;
  graphs.max_vertices = 64;
  graphs.max_terminals = 4;
  const auto fl = verify_wnw_random(1000, 101, false, graphs);
  graphs.max_vertices = 24;
  const auto ex = verify_wnw_random(200, 102, true, graphs);
  const double took = seconds_since(start);
  Outcome out;
  out.pass = fl.ok() && ex.ok() && fl.checks >= 1000 && took < 60.0;
  out.detail = std::to_string(fl.checks) + " float + " + std::to_string(ex.checks) + " exact instances, " +
               std::to_string(fl.failures.size() + ex.failures.size()) + " violations, " + fmt(took) + "s";
  if (!fl.ok()) out.detail += "; " + fl.failures.front();
  if (!ex.ok()) out.detail += "; " + ex.failures.front();
  return out;
}

Outcome wnw_achievability() {
  const auto start = Clock::now();
  RandomGraphOptions small;
  small.max_vertices = 100;
  small.max_terminals = 4;
  const auto ex = verify_optimal(100, 201, true, 0.0, small);
  RandomGraphOptions big;
  big.min_vertices = 100;
  big.max_vertices = 400;
  big.max_terminals = 4;
  const auto fl = verify_optimal(30, 202, false, 1e-8, big);
  const double took = seconds_since(start);
  Outcome out;
  out.pass = ex.ok() && fl.ok() && took < 120.0;
  out.detail = std::to_string(ex.checks) + " exact (<=100 vertices) + " + std::to_string(fl.checks) +
               " float (100..400 vertices, rel 1e-8), " + fmt(took) + "s";
  if (!ex.ok()) out.detail += "; " + ex.failures.front();
  if (!fl.ok()) out.detail += "; " + fl.failures.front();
  return out;
}

struct Family {
  int d;
  TreeShape shape;
  std::size_t max_n;
};

std::vector<Family> lemma_family() {
  return {{1, TreeShape::constant(2), 10},
          {2, TreeShape::constant(2), 10},
          {1, TreeShape::repeating({3, 2, 4}), 7},
          {2, TreeShape::repeating({3, 2, 4}), 7},
          {1, TreeShape::padded({4, 3, 2}), 7},
          {2, TreeShape::padded({4, 3, 2}), 7}};
}

Outcome run_family(const std::function<SuiteReport(int, const TreeShape&, std::size_t)>& suite, double limit) {
  const auto start = Clock::now();
  std::size_t checks = 0;
  for (const auto& f : lemma_family()) {
    for (std::size_t n = 1; n <= f.max_n; ++n) {
      const auto report = suite(f.d, f.shape, n);
      checks += report.checks;
      if (!report.ok()) {
        return {false, "d=" + std::to_string(f.d) + " shape " + f.shape.describe() + " n=" + std::to_string(n) +
                           ": " + report.failures.front()};
      }
    }
  }
  const double took = seconds_since(start);
  return {took < limit, std::to_string(checks) + " checks, 0 counterexamples, " + fmt(took) + "s"};
}

Outcome theorem_soundness() {
  const auto start = Clock::now();
  Outcome out;
  std::size_t cases = 0;
  double worst = 0;
  for (int d = 1; d <= 2; ++d) {
    for (const auto& shape : {TreeShape::constant(2), TreeShape::repeating({3, 2, 4})}) {
      for (std::size_t n = 4; n <= 12; ++n) {
        for (int s = 1; s <= 2; ++s) {
          for (int t = s + 1; t <= static_cast<int>(n) - 2; ++t) {
            const auto tb = theorem_bound(d, shape, s, t, n);
            ++cases;
            const double res = tb.resistance->value;
            const double bound = tb.report.bound.get_d();
            worst = std::max(worst, bound / res);
            const bool ok = tb.resistance->exact ? tb.report.bound <= *tb.resistance->exact : bound <= res + 1e-9;
            if (!ok) {
              out.pass = false;
              out.detail = "d=" + std::to_string(d) + " shape " + shape.describe() + " s=" + std::to_string(s) +
                           " t=" + std::to_string(t) + " n=" + std::to_string(n) + ": bound " + fmt(bound, 12) +
                           " > Res " + fmt(res, 12);
              return out;
            }
          }
        }
      }
    }
  }
  const auto spot = theorem_bound(1, TreeShape::constant(2), 1, 2, 3);
  const bool spot_ok = spot.report.bound == Rational(2, 5) && spot.resistance->exact &&
                       *spot.resistance->exact == Rational(5, 3);
  out.pass = spot_ok;
  out.detail = std::to_string(cases) + " cases, max bound/Res " + fmt(worst) + "; spot (1,2,3): bound " +
               to_string(spot.report.bound) + " Res " +
               (spot.resistance->exact ? to_string(*spot.resistance->exact) : "?") + ", " + fmt(seconds_since(start)) +
               "s";
  return out;
}

Outcome scaling() {
  const auto start = Clock::now();
  Outcome out;
  std::ostringstream detail;
  for (int d = 1; d <= 2; ++d) {
    double lo = INFINITY, hi = 0;
    TheoremBoundOptions opts;
    opts.check_separation = false;
    for (int t = 2; t <= 12; ++t) {
      const auto tb = theorem_bound(d, TreeShape::constant(2), 1, t, static_cast<std::size_t>(t) + 2, opts);
      const double bound = tb.report.bound.get_d();
      const double rate = d == 1 ? bound / (t - 1) : bound / std::log(t);
      lo = std::min(lo, rate);
      hi = std::max(hi, rate);
      if (!(bound <= tb.resistance->value + 1e-9)) out.pass = false;
    }
    const bool ok = lo > 0 && hi / lo <= 8.0;
    out.pass = out.pass && ok;
    detail << (d == 1 ? "d=1 bound/(t-s)" : "; d=2 bound/(ln t-ln s)") << " in [" << fmt(lo) << ", " << fmt(hi)
           << "] hi/lo " << fmt(hi / lo);
  }
  const double took = seconds_since(start);
  out.pass = out.pass && took < 600.0;
  detail << ", " << fmt(took) << "s";
  out.detail = detail.str();
  return out;
}

Outcome recurrence() {
  Outcome out;
  std::ostringstream detail;
  for (int d = 1; d <= 2; ++d) {
    const auto rows = recurrence_experiment(d, TreeShape::constant(2), 12);
    bool increasing = true;
    double lo = INFINITY, hi = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i > 0 && !(rows[i].bound > rows[i - 1].bound)) increasing = false;
      const double scaled = rows[i].increment.get_d() * (d == 2 ? rows[i].t : 1);
      lo = std::min(lo, scaled);
      hi = std::max(hi, scaled);
    }
    const bool ok = increasing && lo > 0 && hi / lo <= 4.0;
    out.pass = out.pass && ok;
    detail << (d == 1 ? "" : "; ") << "d=" << d << (increasing ? " increasing" : " NOT increasing") << ", "
           << (d == 1 ? "increment" : "increment*t") << " in [" << fmt(lo) << ", " << fmt(hi) << "] ratio "
           << fmt(hi / lo) << ", bound(12) " << fmt(rows.back().bound.get_d());
  }
  out.detail = detail.str();
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"path law", path_law},
      {"action vs criterion", dual_construction},
      {"weighted cutset bound soundness", wnw_soundness},
      {"optimal allocation reproduces Res", wnw_achievability},
      {"membership lemma", [] { return run_family(verify_lemma, 600.0); }},
      {"closed-form weight sums", [] { return run_family(verify_weights, 600.0); }},
      {"theorem bound soundness", theorem_soundness},
      {"bound scaling brackets", scaling},
      {"recurrence evidence", recurrence},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
