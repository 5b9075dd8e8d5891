#include "mothernet/electric.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <string>
#include <utility>

namespace mothernet {

namespace {

enum class Role : std::uint8_t { interior, source, sink };

struct Link {
  VertexId a;
  VertexId b;
  Rational conductance;
};

// Boundary-contracted view of a network: merged parallel edges, the interior
// vertices that need solving, and whether A and B are connected.
struct Reduced {
  std::vector<Role> role;
  std::vector<Link> links;
  std::vector<std::vector<std::size_t>> incident;
  std::vector<int> unknown_of;
  std::vector<VertexId> unknowns;
  bool connected = false;
};

Reduced reduce(const Network& net, std::span<const VertexId> sources, std::span<const VertexId> sinks) {
  if (sources.empty() || sinks.empty()) throw std::invalid_argument("boundary sets must be nonempty");
  Reduced r;
  const auto n = net.vertex_count();
  r.role.assign(n, Role::interior);
  for (VertexId a : sources) {
    if (a >= n) throw std::invalid_argument("source vertex out of range");
    r.role[a] = Role::source;
  }
  for (VertexId b : sinks) {
    if (b >= n) throw std::invalid_argument("sink vertex out of range");
    if (r.role[b] == Role::source) {
      throw std::invalid_argument("boundary sets overlap at vertex " + std::to_string(b));
    }
    r.role[b] = Role::sink;
  }

  std::map<std::pair<VertexId, VertexId>, Rational> merged;
  for (const Edge& e : net.edges()) merged[std::minmax(e.u, e.v)] += e.conductance;
  r.incident.resize(n);
  for (auto& [key, c] : merged) {
    r.incident[key.first].push_back(r.links.size());
    r.incident[key.second].push_back(r.links.size());
    r.links.push_back({key.first, key.second, std::move(c)});
  }

  // Breadth-first numbering from the sources keeps the elimination banded on
  // path-like graphs.
  r.unknown_of.assign(n, -1);
  std::vector<bool> seen(n, false);
  std::deque<VertexId> queue;
  for (VertexId a : sources) {
    if (!seen[a]) {
      seen[a] = true;
      queue.push_back(a);
    }
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    if (r.role[v] == Role::sink) r.connected = true;
    if (r.role[v] == Role::interior) {
      r.unknown_of[v] = static_cast<int>(r.unknowns.size());
      r.unknowns.push_back(v);
    }
    for (std::size_t id : r.incident[v]) {
      const Link& l = r.links[id];
      const VertexId w = l.a == v ? l.b : l.a;
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  // Interior vertices reachable only from B still need solving (they sit at 1).
  for (VertexId b : sinks) {
    if (seen[b]) continue;
    seen[b] = true;
    queue.push_back(b);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      if (r.role[v] == Role::interior) {
        r.unknown_of[v] = static_cast<int>(r.unknowns.size());
        r.unknowns.push_back(v);
      }
      for (std::size_t id : r.incident[v]) {
        const Link& l = r.links[id];
        const VertexId w = l.a == v ? l.b : l.a;
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  return r;
}

template <class T>
T boundary_value(Role role) {
  return role == Role::sink ? T(1) : T(0);
}

template <class T>
T convert(const Rational& c) {
  if constexpr (std::is_same_v<T, double>) {
    return c.get_d();
  } else {
    return c;
  }
}

template <class T>
void fill_boundary(const Reduced& r, std::vector<T>& values) {
  values.assign(r.role.size(), T(0));
  for (std::size_t v = 0; v < r.role.size(); ++v) values[v] = boundary_value<T>(r.role[v]);
}

// Sparse symmetric elimination. Eliminating pivot p touches only the rows in
// p's current support, and the Schur complement stays symmetric, so row p
// alone tells which rows to update.
std::vector<Rational> solve_exact(const Reduced& r) {
  const std::size_t m = r.unknowns.size();
  std::vector<std::map<std::size_t, Rational>> rows(m);
  std::vector<Rational> rhs(m);

  for (const Link& l : r.links) {
    const int i = r.unknown_of[l.a];
    const int j = r.unknown_of[l.b];
    if (i >= 0) rows[i][i] += l.conductance;
    if (j >= 0) rows[j][j] += l.conductance;
    if (i >= 0 && j >= 0) {
      rows[i][j] -= l.conductance;
      rows[j][i] -= l.conductance;
    } else if (i >= 0 && r.role[l.b] == Role::sink) {
      rhs[i] += l.conductance;
    } else if (j >= 0 && r.role[l.a] == Role::sink) {
      rhs[j] += l.conductance;
    }
  }

  Rational factor;
  for (std::size_t p = 0; p < m; ++p) {
    auto& pivot_row = rows[p];
    const Rational& pivot = pivot_row.at(p);
    for (auto it = pivot_row.upper_bound(p); it != pivot_row.end(); ++it) {
      const std::size_t i = it->first;
      if (sgn(it->second) == 0) continue;
      factor = it->second / pivot;
      auto& row = rows[i];
      for (auto jt = pivot_row.upper_bound(p); jt != pivot_row.end(); ++jt) row[jt->first] -= factor * jt->second;
      rhs[i] -= factor * rhs[p];
      row.erase(p);
    }
  }
  std::vector<Rational> x(m);
  for (std::size_t p = m; p-- > 0;) {
    Rational acc = rhs[p];
    for (auto it = rows[p].upper_bound(p); it != rows[p].end(); ++it) acc -= it->second * x[it->first];
    x[p] = acc / rows[p].at(p);
  }
  return x;
}

struct FloatSystem {
  kernels::CsrMatrix matrix;
  std::vector<double> rhs;
  std::vector<double> inverse_diagonal;
};

FloatSystem assemble_float(const Reduced& r) {
  const std::size_t m = r.unknowns.size();
  std::vector<std::vector<std::pair<std::uint32_t, double>>> rows(m);
  std::vector<double> diagonal(m, 0.0);
  FloatSystem sys;
  sys.rhs.assign(m, 0.0);
  for (const Link& l : r.links) {
    const double c = l.conductance.get_d();
    const int i = r.unknown_of[l.a];
    const int j = r.unknown_of[l.b];
    if (i >= 0) diagonal[i] += c;
    if (j >= 0) diagonal[j] += c;
    if (i >= 0 && j >= 0) {
      rows[i].emplace_back(static_cast<std::uint32_t>(j), -c);
      rows[j].emplace_back(static_cast<std::uint32_t>(i), -c);
    } else if (i >= 0 && r.role[l.b] == Role::sink) {
      sys.rhs[i] += c;
    } else if (j >= 0 && r.role[l.a] == Role::sink) {
      sys.rhs[j] += c;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    rows[i].emplace_back(static_cast<std::uint32_t>(i), diagonal[i]);
    std::sort(rows[i].begin(), rows[i].end());
    for (const auto& [col, value] : rows[i]) {
      sys.matrix.columns.push_back(col);
      sys.matrix.values.push_back(value);
    }
    sys.matrix.row_offsets.push_back(static_cast<std::uint32_t>(sys.matrix.columns.size()));
  }
  sys.inverse_diagonal.resize(m);
  for (std::size_t i = 0; i < m; ++i) sys.inverse_diagonal[i] = 1.0 / diagonal[i];
  return sys;
}

// Jacobi-preconditioned CG on A x = b starting from x = 0. Returns iterations.
std::size_t pcg(const kernels::KernelSet& k, const FloatSystem& sys, std::span<const double> b,
                std::vector<double>& x, double tolerance, std::size_t max_iterations) {
  const std::size_t m = b.size();
  x.assign(m, 0.0);
  std::vector<double> r(b.begin(), b.end()), z(m), p(m), q(m);
  const double b_norm = std::sqrt(k.dot(b.data(), b.data(), m));
  if (b_norm == 0.0) return 0;
  k.multiply(sys.inverse_diagonal.data(), r.data(), z.data(), m);
  p = z;
  double rz = k.dot(r.data(), z.data(), m);
  std::size_t it = 0;
  while (it < max_iterations) {
    ++it;
    kernels::spmv(k, sys.matrix, p, q);
    const double alpha = rz / k.dot(p.data(), q.data(), m);
    k.axpy(alpha, p.data(), x.data(), m);
    k.axpy(-alpha, q.data(), r.data(), m);
    if (std::sqrt(k.dot(r.data(), r.data(), m)) <= tolerance * b_norm) break;
    k.multiply(sys.inverse_diagonal.data(), r.data(), z.data(), m);
    const double rz_next = k.dot(r.data(), z.data(), m);
    k.xpby(z.data(), rz_next / rz, p.data(), m);
    rz = rz_next;
  }
  return it;
}

double relative_residual(const kernels::KernelSet& k, const FloatSystem& sys, std::span<const double> x,
                         std::vector<double>& residual) {
  const std::size_t m = x.size();
  residual.resize(m);
  kernels::spmv(k, sys.matrix, x, residual);
  for (std::size_t i = 0; i < m; ++i) residual[i] = sys.rhs[i] - residual[i];
  const double b_norm = std::sqrt(k.dot(sys.rhs.data(), sys.rhs.data(), m));
  if (b_norm == 0.0) return 0.0;
  return std::sqrt(k.dot(residual.data(), residual.data(), m)) / b_norm;
}

}  // namespace

std::size_t interior_unknowns(const Network& net, std::span<const VertexId> sources,
                              std::span<const VertexId> sinks) {
  return reduce(net, sources, sinks).unknowns.size();
}

template <>
VoltageProfile<Rational> equilibrium_voltage<Rational>(const Network& net, std::span<const VertexId> sources,
                                                       std::span<const VertexId> sinks, const SolverOptions&) {
  const Reduced r = reduce(net, sources, sinks);
  VoltageProfile<Rational> out;
  out.sources.assign(sources.begin(), sources.end());
  out.sinks.assign(sinks.begin(), sinks.end());
  fill_boundary(r, out.values);
  const auto x = solve_exact(r);
  for (std::size_t i = 0; i < x.size(); ++i) out.values[r.unknowns[i]] = x[i];
  for (const Link& l : r.links) {
    if (r.role[l.a] == Role::source && r.role[l.b] != Role::source) {
      out.current += l.conductance * out.values[l.b];
    } else if (r.role[l.b] == Role::source && r.role[l.a] != Role::source) {
      out.current += l.conductance * out.values[l.a];
    }
  }
  return out;
}

template <>
VoltageProfile<double> equilibrium_voltage<double>(const Network& net, std::span<const VertexId> sources,
                                                   std::span<const VertexId> sinks, const SolverOptions& options) {
  const Reduced r = reduce(net, sources, sinks);
  const kernels::KernelSet& k = options.kernels != nullptr ? *options.kernels : kernels::active_kernels();
  VoltageProfile<double> out;
  out.sources.assign(sources.begin(), sources.end());
  out.sinks.assign(sinks.begin(), sinks.end());
  fill_boundary(r, out.values);

  const std::size_t m = r.unknowns.size();
  if (m > 0) {
    const FloatSystem sys = assemble_float(r);
    const std::size_t max_it = options.max_iterations != 0 ? options.max_iterations : 10 * m + 1000;
    std::vector<double> x, correction, residual;
    out.iterations = pcg(k, sys, sys.rhs, x, options.tolerance, max_it);
    out.residual = relative_residual(k, sys, x, residual);
    // A few rounds of refinement recover accuracy lost to rounding in the
    // recursive residual.
    for (int round = 0; round < 4 && out.residual > options.tolerance; ++round) {
      out.iterations += pcg(k, sys, residual, correction, options.tolerance, max_it);
      k.axpy(1.0, correction.data(), x.data(), m);
      const double next = relative_residual(k, sys, x, residual);
      if (next >= out.residual) {
        out.residual = next;
        break;
      }
      out.residual = next;
    }
    if (!(out.residual <= options.accept_residual)) {
      throw SolverError("iterative solve stalled at relative residual " + std::to_string(out.residual));
    }
    for (std::size_t i = 0; i < m; ++i) out.values[r.unknowns[i]] = x[i];
  }
  // Dirichlet energy at unit potential gap equals the current; it is second
  // order in the solve error.
  double energy = 0.0;
  for (const Link& l : r.links) {
    const double drop = out.values[l.a] - out.values[l.b];
    energy += l.conductance.get_d() * drop * drop;
  }
  out.current = r.connected ? energy : 0.0;
  return out;
}

template <class T>
Resistance<T> effective_resistance(const Network& net, std::span<const VertexId> sources,
                                   std::span<const VertexId> sinks, const SolverOptions& options) {
  const auto voltage = equilibrium_voltage<T>(net, sources, sinks, options);
  Resistance<T> out;
  out.residual = voltage.residual;
  if (voltage.current == 0) {
    out.infinite = true;
    return out;
  }
  out.value = T(1) / voltage.current;
  return out;
}

template <class T>
Flow<T> equilibrium_flow(const VoltageProfile<T>& voltage, const Network& net) {
  Flow<T> flow;
  flow.values.reserve(net.edge_count());
  for (const Edge& e : net.edges()) {
    flow.values.push_back(convert<T>(e.conductance) * (voltage.values[e.v] - voltage.values[e.u]));
  }
  return flow;
}

template <class T>
bool resistance_monotonicity_check(const Network& net, std::span<const VertexId> sources,
                                   std::span<const VertexId> sinks, EdgeId edge, const SolverOptions& options) {
  const auto before = effective_resistance<T>(net, sources, sinks, options);
  const auto after = effective_resistance<T>(net.without_edge(edge), sources, sinks, options);
  if (after.infinite) return true;
  if (before.infinite) return false;
  if constexpr (std::is_same_v<T, double>) {
    return after.value >= before.value * (1.0 - 1e-9);
  } else {
    return after.value >= before.value;
  }
}

ResistanceReport compute_resistance(const Network& net, std::span<const VertexId> sources,
                                    std::span<const VertexId> sinks, SolveMode mode, const SolverOptions& options) {
  if (mode == SolveMode::automatic) {
    mode = interior_unknowns(net, sources, sinks) <= options.exact_limit ? SolveMode::exact : SolveMode::floating;
  }
  ResistanceReport report;
  report.mode = mode;
  if (mode == SolveMode::exact) {
    const auto r = effective_resistance<Rational>(net, sources, sinks, options);
    report.infinite = r.infinite;
    if (!r.infinite) {
      report.exact = r.value;
      report.value = r.value.get_d();
    }
  } else {
    const auto r = effective_resistance<double>(net, sources, sinks, options);
    report.infinite = r.infinite;
    report.value = r.value;
    report.residual = r.residual;
  }
  return report;
}

template Resistance<Rational> effective_resistance<Rational>(const Network&, std::span<const VertexId>,
                                                             std::span<const VertexId>, const SolverOptions&);
template Resistance<double> effective_resistance<double>(const Network&, std::span<const VertexId>,
                                                         std::span<const VertexId>, const SolverOptions&);
template Flow<Rational> equilibrium_flow<Rational>(const VoltageProfile<Rational>&, const Network&);
template Flow<double> equilibrium_flow<double>(const VoltageProfile<double>&, const Network&);
template bool resistance_monotonicity_check<Rational>(const Network&, std::span<const VertexId>,
                                                      std::span<const VertexId>, EdgeId, const SolverOptions&);
template bool resistance_monotonicity_check<double>(const Network&, std::span<const VertexId>,
                                                    std::span<const VertexId>, EdgeId, const SolverOptions&);

}  // namespace mothernet
