#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mothernet/electric.hpp"
#include "mothernet/network.hpp"

namespace mothernet {

/// An edge set separating A from B. Build through make_cutset, which checks
/// separation and normalizes the edge list (sorted, unique).
struct Cutset {
  std::size_t id = 0;
  std::vector<EdgeId> edges;
  std::string label;
};

/// Partial resistances R_{e,i}: parts[i][j] belongs to edge cutsets[i].edges[j].
/// Edges outside a cutset implicitly carry zero for it.
template <class T>
struct Allocation {
  std::vector<std::vector<T>> parts;
};

class AllocationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class T>
struct CutsetRow {
  std::size_t id = 0;
  std::string label;
  std::size_t size = 0;
  std::optional<T> weight;
  /// nullopt means +infinity (some edge received zero resistance).
  std::optional<T> split_conductance;
  T contribution{};
};

template <class T>
struct BoundReport {
  std::vector<CutsetRow<T>> rows;
  /// sum_i C(S_i)^{-1}
  T bound{};
  std::optional<double> solver_resistance;
  /// bound / solver_resistance, in (0, 1] when both are finite.
  std::optional<double> gap_ratio;
};

/// True iff A and B lie in different components once `cut` is removed.
bool validate_cutset(const Network& net, std::span<const EdgeId> cut, std::span<const VertexId> sources,
                     std::span<const VertexId> sinks);

/// Throws std::invalid_argument unless `edges` separates A from B.
Cutset make_cutset(const Network& net, std::vector<EdgeId> edges, std::span<const VertexId> sources,
                   std::span<const VertexId> sinks, std::size_t id, std::string label = {});

/// Edges with exactly one endpoint inside `inside`.
std::vector<EdgeId> boundary_edges(const Network& net, const std::vector<bool>& inside);

/// C(S) = sum_{e in S} 1 / R_{e,S}; nullopt when some share is zero.
template <class T>
std::optional<T> split_conductance(std::span<const T> shares);

/// Throws AllocationError if shapes mismatch, a share is negative, or some
/// edge hands out more than its resistance.
template <class T>
void validate_allocation(const Network& net, std::span<const Cutset> cutsets, const Allocation<T>& alloc);

/// Lower bound sum_i C(S_i)^{-1} with per-cutset detail. `weights` is only
/// copied into the rows.
template <class T>
BoundReport<T> wnw_bound(const Network& net, std::span<const Cutset> cutsets, const Allocation<T>& alloc,
                         std::span<const T> weights = {});

/// R_{e,i} = R_e K_i / sum_{S_j containing e} K_j. Edges whose covering
/// weights sum to zero get nothing.
template <class T>
Allocation<T> proportional_allocation(const Network& net, std::span<const Cutset> cutsets,
                                      std::span<const T> weights);

/// Level-set cutsets of the equilibrium voltage, weighted by the gaps between
/// consecutive voltage levels. Their bound equals Res(A, B).
template <class T>
struct OptimalCertificate {
  std::vector<Cutset> cutsets;
  std::vector<T> weights;
  Allocation<T> allocation;
  std::vector<T> levels;
  VoltageProfile<T> voltage;
  T resistance{};
};

/// Float mode merges voltages closer than `cluster_tolerance` into one level.
/// Throws std::domain_error when A and B are disconnected.
template <class T>
OptimalCertificate<T> optimal_allocation(const Network& net, std::span<const VertexId> sources,
                                         std::span<const VertexId> sinks, const SolverOptions& options = {},
                                         double cluster_tolerance = 1e-9);

/// Partial sums of the bound, grouping cutsets by `scale_of[i]` and adding the
/// groups in increasing scale order. Entry s is the sum over scales <= s.
template <class T>
std::vector<T> divergence_series(const Network& net, std::span<const Cutset> cutsets, const Allocation<T>& alloc,
                                 std::span<const std::size_t> scale_of);

}  // namespace mothernet
