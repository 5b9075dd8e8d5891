#include "mothernet/nashwilliams.hpp"

#include <algorithm>
#include <cmath>

namespace mothernet {

namespace {

template <class T>
T edge_resistance(const Edge& e) {
  if constexpr (std::is_same_v<T, double>) {
    return 1.0 / e.conductance.get_d();
  } else {
    return Rational(1) / e.conductance;
  }
}

template <class T>
bool exceeds(const T& used, const T& available) {
  if constexpr (std::is_same_v<T, double>) {
    return used > available * (1.0 + 1e-12);
  } else {
    return used > available;
  }
}

// Cutsets containing each edge, as (cutset index, position in its list).
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> memberships(const Network& net,
                                                                         std::span<const Cutset> cutsets) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> of(net.edge_count());
  for (std::size_t i = 0; i < cutsets.size(); ++i) {
    for (std::size_t j = 0; j < cutsets[i].edges.size(); ++j) {
      const EdgeId e = cutsets[i].edges[j];
      if (e >= net.edge_count()) throw std::invalid_argument("cutset refers to a missing edge");
      of[e].emplace_back(i, j);
    }
  }
  return of;
}

}  // namespace

bool validate_cutset(const Network& net, std::span<const EdgeId> cut, std::span<const VertexId> sources,
                     std::span<const VertexId> sinks) {
  std::vector<bool> blocked(net.edge_count(), false);
  for (EdgeId e : cut) blocked.at(e) = true;
  const auto seen = reachable_from(net, sources, blocked);
  return std::none_of(sinks.begin(), sinks.end(), [&](VertexId b) { return seen.at(b); });
}

Cutset make_cutset(const Network& net, std::vector<EdgeId> edges, std::span<const VertexId> sources,
                   std::span<const VertexId> sinks, std::size_t id, std::string label) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (!validate_cutset(net, edges, sources, sinks)) {
    throw std::invalid_argument("edge set " + (label.empty() ? std::to_string(id) : label) +
                                " does not separate A from B");
  }
  return Cutset{id, std::move(edges), std::move(label)};
}

std::vector<EdgeId> boundary_edges(const Network& net, const std::vector<bool>& inside) {
  std::vector<EdgeId> out;
  for (std::size_t id = 0; id < net.edge_count(); ++id) {
    const Edge& e = net.edges()[id];
    if (inside[e.u] != inside[e.v]) out.push_back(static_cast<EdgeId>(id));
  }
  return out;
}

template <class T>
std::optional<T> split_conductance(std::span<const T> shares) {
  T total{};
  for (const T& r : shares) {
    if (r == 0) return std::nullopt;
    total += T(1) / r;
  }
  return total;
}

template <class T>
void validate_allocation(const Network& net, std::span<const Cutset> cutsets, const Allocation<T>& alloc) {
  if (alloc.parts.size() != cutsets.size()) throw AllocationError("allocation has the wrong number of cutsets");
  std::vector<T> used(net.edge_count(), T(0));
  for (std::size_t i = 0; i < cutsets.size(); ++i) {
    if (alloc.parts[i].size() != cutsets[i].edges.size()) {
      throw AllocationError("allocation row " + std::to_string(i) + " does not match its cutset");
    }
    for (std::size_t j = 0; j < cutsets[i].edges.size(); ++j) {
      if (alloc.parts[i][j] < 0) throw AllocationError("negative partial resistance");
      used.at(cutsets[i].edges[j]) += alloc.parts[i][j];
    }
  }
  for (std::size_t e = 0; e < net.edge_count(); ++e) {
    if (exceeds(used[e], edge_resistance<T>(net.edges()[e]))) {
      throw AllocationError("edge " + std::to_string(e) + " allocates more than its resistance");
    }
  }
}

template <class T>
BoundReport<T> wnw_bound(const Network& net, std::span<const Cutset> cutsets, const Allocation<T>& alloc,
                         std::span<const T> weights) {
  validate_allocation(net, cutsets, alloc);
  if (!weights.empty() && weights.size() != cutsets.size()) {
    throw std::invalid_argument("one weight per cutset expected");
  }
  BoundReport<T> report;
  report.rows.reserve(cutsets.size());
  for (std::size_t i = 0; i < cutsets.size(); ++i) {
    if (cutsets[i].edges.empty()) throw std::invalid_argument("empty cutset: A and B are disconnected");
    CutsetRow<T> row;
    row.id = cutsets[i].id;
    row.label = cutsets[i].label;
    row.size = cutsets[i].edges.size();
    if (!weights.empty()) row.weight = weights[i];
    row.split_conductance = split_conductance<T>(alloc.parts[i]);
    if (row.split_conductance) {
      row.contribution = T(1) / *row.split_conductance;
      report.bound += row.contribution;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

template <class T>
Allocation<T> proportional_allocation(const Network& net, std::span<const Cutset> cutsets,
                                      std::span<const T> weights) {
  if (weights.size() != cutsets.size()) throw std::invalid_argument("one weight per cutset expected");
  for (const T& k : weights) {
    if (k < 0) throw std::invalid_argument("cutset weights must be non-negative");
  }
  const auto of = memberships(net, cutsets);
  Allocation<T> alloc;
  alloc.parts.resize(cutsets.size());
  for (std::size_t i = 0; i < cutsets.size(); ++i) alloc.parts[i].assign(cutsets[i].edges.size(), T(0));
  for (std::size_t e = 0; e < net.edge_count(); ++e) {
    if (of[e].empty()) continue;
    T total{};
    for (const auto& [i, j] : of[e]) total += weights[i];
    if (total == 0) continue;
    const T resistance = edge_resistance<T>(net.edges()[e]);
    for (const auto& [i, j] : of[e]) alloc.parts[i][j] = resistance * weights[i] / total;
  }
  return alloc;
}

template <class T>
OptimalCertificate<T> optimal_allocation(const Network& net, std::span<const VertexId> sources,
                                         std::span<const VertexId> sinks, const SolverOptions& options,
                                         double cluster_tolerance) {
  OptimalCertificate<T> cert;
  cert.voltage = equilibrium_voltage<T>(net, sources, sinks, options);
  if (cert.voltage.current == 0) throw std::domain_error("A and B are disconnected");
  cert.resistance = T(1) / cert.voltage.current;
  const auto& volts = cert.voltage.values;

  // level[v]: index of v's voltage among the distinct values 0 = a_0 < ... < a_m = 1.
  std::vector<std::size_t> level(net.vertex_count(), 0);
  std::vector<VertexId> order(net.vertex_count());
  for (std::size_t v = 0; v < order.size(); ++v) order[v] = static_cast<VertexId>(v);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return volts[a] < volts[b]; });
  std::vector<std::vector<T>> clusters;
  for (VertexId v : order) {
    bool fresh = clusters.empty();
    if (!fresh) {
      if constexpr (std::is_same_v<T, double>) {
        fresh = volts[v] - clusters.back().back() > cluster_tolerance;
      } else {
        fresh = volts[v] != clusters.back().back();
      }
    }
    if (fresh) clusters.emplace_back();
    clusters.back().push_back(volts[v]);
    level[v] = clusters.size() - 1;
  }
  cert.levels.reserve(clusters.size());
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    if constexpr (std::is_same_v<T, double>) {
      double mean = 0.0;
      for (double x : clusters[c]) mean += x;
      mean /= static_cast<double>(clusters[c].size());
      if (c == 0) mean = 0.0;
      if (c + 1 == clusters.size()) mean = 1.0;
      cert.levels.push_back(mean);
    } else {
      cert.levels.push_back(clusters[c].front());
    }
  }

  const std::size_t m = cert.levels.size() - 1;
  std::vector<std::vector<EdgeId>> members(m);
  for (std::size_t id = 0; id < net.edge_count(); ++id) {
    const Edge& e = net.edges()[id];
    const auto [lo, hi] = std::minmax(level[e.u], level[e.v]);
    // Edge crosses U_i = {V < a_i} for lo < i <= hi.
    for (std::size_t i = lo + 1; i <= hi; ++i) members[i - 1].push_back(static_cast<EdgeId>(id));
  }
  for (std::size_t i = 1; i <= m; ++i) {
    cert.cutsets.push_back(Cutset{i - 1, std::move(members[i - 1]), "level " + std::to_string(i)});
    cert.weights.push_back(cert.levels[i] - cert.levels[i - 1]);
  }
  cert.allocation = proportional_allocation<T>(net, cert.cutsets, cert.weights);
  return cert;
}

template <class T>
std::vector<T> divergence_series(const Network& net, std::span<const Cutset> cutsets, const Allocation<T>& alloc,
                                 std::span<const std::size_t> scale_of) {
  if (scale_of.size() != cutsets.size()) throw std::invalid_argument("one scale per cutset expected");
  const auto report = wnw_bound<T>(net, cutsets, alloc);
  const std::size_t scales = scale_of.empty() ? 0 : *std::max_element(scale_of.begin(), scale_of.end()) + 1;
  std::vector<T> series(scales, T(0));
  for (std::size_t i = 0; i < cutsets.size(); ++i) series[scale_of[i]] += report.rows[i].contribution;
  for (std::size_t s = 1; s < scales; ++s) series[s] += series[s - 1];
  return series;
}

#define MOTHERNET_INSTANTIATE(T)                                                                               \
  template std::optional<T> split_conductance<T>(std::span<const T>);                                          \
  template void validate_allocation<T>(const Network&, std::span<const Cutset>, const Allocation<T>&);         \
  template BoundReport<T> wnw_bound<T>(const Network&, std::span<const Cutset>, const Allocation<T>&,          \
                                       std::span<const T>);                                                    \
  template Allocation<T> proportional_allocation<T>(const Network&, std::span<const Cutset>,                   \
                                                    std::span<const T>);                                       \
  template OptimalCertificate<T> optimal_allocation<T>(const Network&, std::span<const VertexId>,              \
                                                       std::span<const VertexId>, const SolverOptions&, double); \
  template std::vector<T> divergence_series<T>(const Network&, std::span<const Cutset>, const Allocation<T>&,  \
                                               std::span<const std::size_t>);

MOTHERNET_INSTANTIATE(Rational)
MOTHERNET_INSTANTIATE(double)

#undef MOTHERNET_INSTANTIATE

}  // namespace mothernet
