#include "mothernet/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "mothernet/electric.hpp"
#include "mothernet/mothercuts.hpp"
#include "mothernet/nashwilliams.hpp"
#include "mothernet/schreier.hpp"

namespace mothernet {

namespace {

std::string key_text(const EdgeKey& key) {
  const auto& [x, y, type] = key;
  return x + "-" + y + " type " + std::to_string(type);
}

std::string trial_tag(std::size_t trial, const RandomInstance& inst) {
  return "trial " + std::to_string(trial) + " (" + std::to_string(inst.net.vertex_count()) + " vertices, " +
         std::to_string(inst.net.edge_count()) + " edges)";
}

// Each vertex joins the A side with probability 1/2; the boundary
// of the resulting vertex set always separates A from B.
std::vector<bool> random_side(std::mt19937_64& rng, const RandomInstance& inst) {
  std::vector<bool> inside(inst.net.vertex_count(), false);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t v = 0; v < inside.size(); ++v) inside[v] = coin(rng);
  for (VertexId a : inst.sources) inside[a] = true;
  for (VertexId b : inst.sinks) inside[b] = false;
  return inside;
}

template <class T>
T random_fraction(std::mt19937_64& rng) {
  if constexpr (std::is_same_v<T, double>) {
    return std::uniform_real_distribution<double>(0.05, 1.0)(rng);
  } else {
    return make_rational(std::uniform_int_distribution<int>(1, 8)(rng), 8);
  }
}

template <class T>
T as_value(const Rational& r) {
  if constexpr (std::is_same_v<T, double>) {
    return r.get_d();
  } else {
    return r;
  }
}

// Splits a random fraction of R_e among the cutsets containing e.
template <class T>
Allocation<T> random_allocation(std::mt19937_64& rng, const Network& net, const std::vector<Cutset>& cutsets) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> of(net.edge_count());
  for (std::size_t i = 0; i < cutsets.size(); ++i) {
    for (std::size_t j = 0; j < cutsets[i].edges.size(); ++j) of[cutsets[i].edges[j]].emplace_back(i, j);
  }
  Allocation<T> alloc;
  alloc.parts.resize(cutsets.size());
  for (std::size_t i = 0; i < cutsets.size(); ++i) alloc.parts[i].assign(cutsets[i].edges.size(), T(0));
  for (std::size_t e = 0; e < net.edge_count(); ++e) {
    if (of[e].empty()) continue;
    std::vector<T> raw;
    T total{};
    for (std::size_t r = 0; r < of[e].size(); ++r) {
      raw.push_back(random_fraction<T>(rng));
      total += raw.back();
    }
    const T budget = as_value<T>(Rational(1) / net.edge(static_cast<EdgeId>(e)).conductance) * random_fraction<T>(rng);
    for (std::size_t r = 0; r < of[e].size(); ++r) {
      const auto [i, j] = of[e][r];
      T part = budget * raw[r] / total;
      if constexpr (std::is_same_v<T, double>) part *= 1.0 - 1e-14;
      alloc.parts[i][j] = part;
    }
  }
  return alloc;
}

template <class T>
SuiteReport wnw_random(std::size_t trials, std::uint64_t seed, const RandomGraphOptions& graphs) {
  SuiteReport report;
  report.name = "wnw";
  std::mt19937_64 rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const RandomInstance inst = random_instance(rng, graphs);
    const std::size_t count = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    std::vector<Cutset> cutsets;
    for (std::size_t c = 0; c < count; ++c) {
      cutsets.push_back(make_cutset(inst.net, boundary_edges(inst.net, random_side(rng, inst)), inst.sources,
                                    inst.sinks, c));
    }
    const auto alloc = random_allocation<T>(rng, inst.net, cutsets);
    const auto bound = wnw_bound<T>(inst.net, cutsets, alloc);
    const auto res = effective_resistance<T>(inst.net, inst.sources, inst.sinks);
    ++report.checks;
    bool sound;
    if constexpr (std::is_same_v<T, double>) {
      sound = bound.bound <= res.value + 1e-9;
    } else {
      sound = bound.bound <= res.value;
    }
    if (!sound) {
      std::ostringstream msg;
      msg << trial_tag(trial, inst) << ": bound " << bound.bound << " exceeds Res " << res.value;
      report.fail(msg.str());
    }
  }
  return report;
}

template <class T>
SuiteReport optimal(std::size_t trials, std::uint64_t seed, double tolerance, const RandomGraphOptions& graphs) {
  SuiteReport report;
  report.name = "optimal";
  std::mt19937_64 rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const RandomInstance inst = random_instance(rng, graphs);
    const auto cert = optimal_allocation<T>(inst.net, inst.sources, inst.sinks);
    const auto bound = wnw_bound<T>(inst.net, cert.cutsets, cert.allocation);
    ++report.checks;
    bool equal;
    if constexpr (std::is_same_v<T, double>) {
      equal = std::abs(bound.bound - cert.resistance) <= tolerance * cert.resistance;
    } else {
      equal = bound.bound == cert.resistance;
    }
    if (!equal) {
      std::ostringstream msg;
      msg << trial_tag(trial, inst) << ": certificate gives " << bound.bound << ", Res is " << cert.resistance;
      report.fail(msg.str());
    }
  }
  return report;
}

}  // namespace

void SuiteReport::fail(std::string message) { failures.push_back(std::move(message)); }

RandomInstance random_instance(std::mt19937_64& rng, const RandomGraphOptions& options) {
  const std::size_t n =
      std::uniform_int_distribution<std::size_t>(std::max<std::size_t>(options.min_vertices, 2),
                                                 std::max(options.max_vertices, options.min_vertices))(rng);
  std::uniform_int_distribution<int> weight(1, options.conductance_range);
  auto conductance = [&] {
    const long num = weight(rng);
    return make_rational(num, weight(rng));
  };

  std::set<std::pair<VertexId, VertexId>> used;
  std::vector<Edge> edges;
  auto add = [&](VertexId a, VertexId b) {
    const std::pair<VertexId, VertexId> key = std::minmax(a, b);
    if (a == b || !used.insert(key).second) return;
    Edge e;
    e.u = key.first;
    e.v = key.second;
    e.conductance = conductance();
    edges.push_back(std::move(e));
  };
  for (VertexId v = 1; v < n; ++v) add(v, std::uniform_int_distribution<VertexId>(0, v - 1)(rng));
  const auto extra = static_cast<std::size_t>(options.extra_edge_ratio * static_cast<double>(n));
  std::uniform_int_distribution<VertexId> any(0, static_cast<VertexId>(n - 1));
  for (std::size_t i = 0; i < extra; ++i) add(any(rng), any(rng));

  RandomInstance inst;
  inst.net = Network::from_edges(n, std::move(edges));

  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t cap = std::max<std::size_t>(1, std::min(options.max_terminals, n / 2));
  std::uniform_int_distribution<std::size_t> terminals(1, cap);
  const std::size_t a = terminals(rng);
  const std::size_t b = terminals(rng);
  inst.sources.assign(order.begin(), order.begin() + a);
  inst.sinks.assign(order.begin() + a, order.begin() + a + b);
  std::sort(inst.sources.begin(), inst.sources.end());
  std::sort(inst.sinks.begin(), inst.sinks.end());
  return inst;
}

SuiteReport verify_action(int d, const TreeShape& shape, std::size_t max_n) {
  SuiteReport report;
  report.name = "action";
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto by_action = edge_keys(build_from_action(d, shape, n));
    const auto by_rule = edge_keys(build_from_criterion(d, shape, n));
    ++report.checks;
    if (by_action == by_rule) continue;
    std::vector<EdgeKey> only_action, only_rule;
    std::set_difference(by_action.begin(), by_action.end(), by_rule.begin(), by_rule.end(),
                        std::back_inserter(only_action));
    std::set_difference(by_rule.begin(), by_rule.end(), by_action.begin(), by_action.end(),
                        std::back_inserter(only_rule));
    std::string msg = "d=" + std::to_string(d) + " shape " + shape.describe() + " n=" + std::to_string(n) + ":";
    if (!only_action.empty()) msg += " action-only " + key_text(only_action.front());
    if (!only_rule.empty()) msg += " criterion-only " + key_text(only_rule.front());
    report.fail(std::move(msg));
  }
  return report;
}

SuiteReport verify_lemma(int d, const TreeShape& shape, std::size_t n) {
  SuiteReport report;
  report.name = "lemma";
  const Network net = build_projected(d, shape, n);
  const LemmaReport lemma = lemma_membership_check(net);
  report.checks = lemma.pairs_checked;
  for (const auto& c : lemma.counterexamples) report.fail(c);
  return report;
}

SuiteReport verify_weights(int d, const TreeShape& shape, std::size_t n) {
  SuiteReport report;
  report.name = "weights";
  const Network net = build_projected(d, shape, n);
  // Every a of length n, with its weight.
  std::vector<DigitWord> all;
  std::vector<Rational> weights;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    all.push_back(DigitWord::from_bits(bits, n));
    weights.push_back(beta_weight(all.back(), shape));
  }
  for (const Edge& e : net.edges()) {
    Rational brute = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (enlarged_membership(net, e, all[i])) brute += weights[i];
    }
    const Rational closed = weight_sum_over_cutsets(net, e, shape);
    ++report.checks;
    if (brute != closed) {
      report.fail("edge " + net.vertex(e.u).word.to_string() + "-" + net.vertex(e.v).word.to_string() + " type " +
                  std::to_string(e.type) + ": closed form " + to_string(closed) + ", enumeration " +
                  to_string(brute));
    }
  }
  return report;
}

SuiteReport verify_wnw_random(std::size_t trials, std::uint64_t seed, bool exact, const RandomGraphOptions& graphs) {
  return exact ? wnw_random<Rational>(trials, seed, graphs) : wnw_random<double>(trials, seed, graphs);
}

SuiteReport verify_optimal(std::size_t trials, std::uint64_t seed, bool exact, double tolerance,
                           const RandomGraphOptions& graphs) {
  return exact ? optimal<Rational>(trials, seed, tolerance, graphs) : optimal<double>(trials, seed, tolerance, graphs);
}

}  // namespace mothernet
