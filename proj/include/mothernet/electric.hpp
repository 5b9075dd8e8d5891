#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mothernet/kernels.hpp"
#include "mothernet/network.hpp"
#include "mothernet/rational.hpp"

namespace mothernet {

enum class SolveMode { exact, floating, automatic };

struct SolverOptions {
  /// Relative residual target for the iterative solver.
  double tolerance = 1e-12;
  /// Float results with a worse true residual are rejected.
  double accept_residual = 1e-10;
  /// 0 picks a size-dependent default.
  std::size_t max_iterations = 0;
  /// `automatic` solves exactly up to this many unknowns.
  std::size_t exact_limit = 400;
  /// nullptr uses kernels::active_kernels().
  const kernels::KernelSet* kernels = nullptr;
};

/// Thrown when the iterative solver cannot reach `accept_residual`.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Equilibrium voltage with V = 0 on A and V = 1 on B, harmonic elsewhere.
/// Vertices not connected to A or B are reported at 0.
template <class T>
struct VoltageProfile {
  std::vector<T> values;
  std::vector<VertexId> sources;  // A
  std::vector<VertexId> sinks;    // B
  /// Total current from A to B, i.e. 1 / Res(A, B); zero when disconnected.
  T current{};
  double residual = 0.0;
  std::size_t iterations = 0;
};

/// f(x, y) = (V_y - V_x) / R_xy, stored per network edge in the u -> v direction.
template <class T>
struct Flow {
  std::vector<T> values;

  T from(const Network& net, EdgeId id, VertexId tail) const {
    return net.edge(id).u == tail ? values[id] : T(-values[id]);
  }
};

template <class T>
struct Resistance {
  T value{};
  bool infinite = false;
  double residual = 0.0;
};

/// T is Rational (exact elimination) or double (preconditioned CG).
/// Throws std::invalid_argument when A or B is empty, out of range, or the two overlap.
template <class T>
VoltageProfile<T> equilibrium_voltage(const Network& net, std::span<const VertexId> sources,
                                      std::span<const VertexId> sinks, const SolverOptions& options = {});

template <class T>
Resistance<T> effective_resistance(const Network& net, std::span<const VertexId> sources,
                                   std::span<const VertexId> sinks, const SolverOptions& options = {});

template <class T>
Flow<T> equilibrium_flow(const VoltageProfile<T>& voltage, const Network& net);

/// Res(A, B) without `edge` >= Res(A, B). Always true; used as a property harness.
template <class T>
bool resistance_monotonicity_check(const Network& net, std::span<const VertexId> sources,
                                   std::span<const VertexId> sinks, EdgeId edge,
                                   const SolverOptions& options = {});

/// Mode-erased result for callers that pick the solver at run time.
struct ResistanceReport {
  bool infinite = false;
  std::optional<Rational> exact;
  double value = 0.0;
  double residual = 0.0;
  SolveMode mode = SolveMode::exact;
};

ResistanceReport compute_resistance(const Network& net, std::span<const VertexId> sources,
                                    std::span<const VertexId> sinks, SolveMode mode,
                                    const SolverOptions& options = {});

/// Number of unknowns the solver would eliminate (interior vertices touching A or B).
std::size_t interior_unknowns(const Network& net, std::span<const VertexId> sources,
                              std::span<const VertexId> sinks);

}  // namespace mothernet
