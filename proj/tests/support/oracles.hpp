#pragma once

// Independent reference computations for the tests. None of these go through
// the library's solvers or cutset code.

#include <Eigen/Dense>
#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "mothernet/network.hpp"
#include "mothernet/rational.hpp"

namespace oracle {

using mothernet::Edge;
using mothernet::Network;
using mothernet::Rational;
using mothernet::VertexId;

inline constexpr std::size_t kDropped = static_cast<std::size_t>(-1);

// Vertex map that glues A into one node and B into another (ids 0 and 1).
inline std::vector<std::size_t> contract(const Network& net, const std::vector<VertexId>& a,
                                         const std::vector<VertexId>& b) {
  std::vector<std::size_t> id(net.vertex_count(), 0);
  std::vector<bool> is_a(net.vertex_count()), is_b(net.vertex_count());
  for (auto v : a) is_a[v] = true;
  for (auto v : b) is_b[v] = true;
  std::size_t next = 2;
  for (std::size_t v = 0; v < id.size(); ++v) id[v] = is_a[v] ? 0 : is_b[v] ? 1 : next++;
  // Drop everything outside A's component so the Laplacian minors stay regular.
  std::vector<std::vector<std::size_t>> adj(next);
  for (const Edge& e : net.edges()) {
    adj[id[e.u]].push_back(id[e.v]);
    adj[id[e.v]].push_back(id[e.u]);
  }
  std::vector<bool> seen(next, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  std::vector<std::size_t> renumber(next, kDropped);
  std::size_t kept = 0;
  for (std::size_t c = 0; c < next; ++c) {
    if (seen[c] || c == 1) renumber[c] = kept++;
  }
  for (auto& x : id) x = renumber[x];
  return id;
}

/// det of a square rational matrix by fraction-based elimination.
inline Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

/// Res(A, B) = det(L without rows A', B') / det(L without row A') after
/// contracting A to A' and B to B' (matrix-tree ratio). nullopt if infinite.
inline std::optional<Rational> determinant_resistance(const Network& net, const std::vector<VertexId>& a,
                                                      const std::vector<VertexId>& b) {
  const auto id = contract(net, a, b);
  std::size_t n = 2;
  for (auto x : id) {
    if (x != kDropped) n = std::max(n, x + 1);
  }
  std::vector<std::vector<Rational>> lap(n, std::vector<Rational>(n, Rational(0)));
  for (const Edge& e : net.edges()) {
    const std::size_t u = id[e.u], v = id[e.v];
    if (u == v || u == kDropped || v == kDropped) continue;
    lap[u][u] += e.conductance;
    lap[v][v] += e.conductance;
    lap[u][v] -= e.conductance;
    lap[v][u] -= e.conductance;
  }
  auto minor = [&](std::size_t drop_from) {
    std::vector<std::vector<Rational>> m;
    for (std::size_t r = drop_from; r < n; ++r) {
      std::vector<Rational> row(lap[r].begin() + static_cast<std::ptrdiff_t>(drop_from), lap[r].end());
      m.push_back(std::move(row));
    }
    return m;
  };
  // Drop A' (index 0) for the denominator, A' and B' for the numerator.
  const Rational den = determinant(minor(1));
  if (den == 0) return std::nullopt;
  const Rational num = n > 2 ? determinant(minor(2)) : Rational(1);
  if (num == 0) return std::nullopt;
  return num / den;
}

/// Dense double solve of the grounded Laplacian with Eigen.
inline double dense_resistance(const Network& net, const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  const auto id = contract(net, a, b);
  std::size_t n = 2;
  for (auto x : id) {
    if (x != kDropped) n = std::max(n, x + 1);
  }
  // Unknowns: B' and the interior; A' is grounded.
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n - 1), static_cast<Eigen::Index>(n - 1));
  for (const Edge& e : net.edges()) {
    const std::size_t u = id[e.u], v = id[e.v];
    if (u == v || u == kDropped || v == kDropped) continue;
    const double c = e.conductance.get_d();
    if (u > 0) lap(static_cast<Eigen::Index>(u - 1), static_cast<Eigen::Index>(u - 1)) += c;
    if (v > 0) lap(static_cast<Eigen::Index>(v - 1), static_cast<Eigen::Index>(v - 1)) += c;
    if (u > 0 && v > 0) {
      lap(static_cast<Eigen::Index>(u - 1), static_cast<Eigen::Index>(v - 1)) -= c;
      lap(static_cast<Eigen::Index>(v - 1), static_cast<Eigen::Index>(u - 1)) -= c;
    }
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n - 1));
  rhs(0) = 1.0;  // unit current into B'
  const Eigen::VectorXd volts = lap.fullPivLu().solve(rhs);
  return volts(0);
}

/// Series-parallel reduction between two terminals. nullopt if the graph
/// does not reduce to a single edge.
inline std::optional<Rational> series_parallel_resistance(const Network& net, VertexId s, VertexId t) {
  // Multigraph as map (u < v) -> resistance of the merged parallel bundle.
  std::map<std::pair<VertexId, VertexId>, Rational> bundle;
  auto add = [&](VertexId u, VertexId v, const Rational& r) {
    const std::pair<VertexId, VertexId> key = std::minmax(u, v);
    auto it = bundle.find(key);
    if (it == bundle.end()) {
      bundle.emplace(key, r);
    } else {
      it->second = it->second * r / (it->second + r);
    }
  };
  for (const Edge& e : net.edges()) add(e.u, e.v, 1 / e.conductance);
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<VertexId, std::vector<std::pair<VertexId, VertexId>>> incident;
    for (const auto& [key, r] : bundle) {
      incident[key.first].push_back(key);
      incident[key.second].push_back(key);
    }
    for (const auto& [v, keys] : incident) {
      if (v == s || v == t) continue;
      if (keys.size() == 1) {
        bundle.erase(keys[0]);
        changed = true;
        break;
      }
      if (keys.size() == 2) {
        const Rational r = bundle[keys[0]] + bundle[keys[1]];
        const VertexId x = keys[0].first == v ? keys[0].second : keys[0].first;
        const VertexId y = keys[1].first == v ? keys[1].second : keys[1].first;
        bundle.erase(keys[0]);
        bundle.erase(keys[1]);
        add(x, y, r);
        changed = true;
        break;
      }
    }
  }
  if (bundle.size() != 1) return std::nullopt;
  const auto& [key, r] = *bundle.begin();
  if (key != std::pair<VertexId, VertexId>(std::minmax(s, t))) return std::nullopt;
  return r;
}

/// A random series-parallel network between vertices 0 and 1, built by
/// repeatedly subdividing or doubling edges.
inline Network random_series_parallel(std::mt19937_64& rng, int steps) {
  std::vector<Edge> edges;
  auto cond = [&] {
    const long num = std::uniform_int_distribution<long>(1, 5)(rng);
    return mothernet::make_rational(num, std::uniform_int_distribution<long>(1, 3)(rng));
  };
  Edge first;
  first.u = 0;
  first.v = 1;
  first.conductance = cond();
  edges.push_back(first);
  VertexId next = 2;
  for (int i = 0; i < steps; ++i) {
    const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng);
    const Edge old = edges[pick];
    if (std::bernoulli_distribution(0.5)(rng)) {
      // subdivide
      Edge a = old, b = old;
      a.v = next;
      b.u = next;
      a.conductance = cond();
      b.conductance = cond();
      if (a.u > a.v) std::swap(a.u, a.v);
      if (b.u > b.v) std::swap(b.u, b.v);
      edges[pick] = a;
      edges.push_back(b);
      ++next;
    } else {
      // parallel path of length two (keeps the graph simple)
      Edge a = old, b = old;
      a.v = next;
      b.u = next;
      a.conductance = cond();
      b.conductance = cond();
      if (a.u > a.v) std::swap(a.u, a.v);
      if (b.u > b.v) std::swap(b.u, b.v);
      edges.push_back(a);
      edges.push_back(b);
      ++next;
    }
  }
  return Network::from_edges(next, std::move(edges));
}

}  // namespace oracle
