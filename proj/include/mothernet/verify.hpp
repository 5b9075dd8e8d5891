#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mothernet/network.hpp"
#include "mothernet/words.hpp"

namespace mothernet {

// Self-check suites shared by the CLI `verify` command and the test binaries.

struct SuiteReport {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void fail(std::string message);
};

/// A random connected test instance with disjoint, non-empty A and B.
struct RandomInstance {
  Network net;
  std::vector<VertexId> sources;
  std::vector<VertexId> sinks;
};

struct RandomGraphOptions {
  std::size_t min_vertices = 2;
  std::size_t max_vertices = 12;
  /// Extra edges beyond the spanning tree, as a multiple of the vertex count.
  double extra_edge_ratio = 1.0;
  /// Conductances p/q with 1 <= p, q <= this.
  int conductance_range = 4;
  std::size_t max_terminals = 2;
};

RandomInstance random_instance(std::mt19937_64& rng, const RandomGraphOptions& options = {});

/// Edge sets of the two constructions coincide for every level n <= max_n.
SuiteReport verify_action(int d, const TreeShape& shape, std::size_t max_n);

/// Membership lemma on the level-n projected graph.
SuiteReport verify_lemma(int d, const TreeShape& shape, std::size_t n);

/// Closed-form weight sums against enumeration of every a of length n.
SuiteReport verify_weights(int d, const TreeShape& shape, std::size_t n);

/// Random cuts with random sub-allocations never exceed Res(A, B).
/// `exact` runs the whole check in rational arithmetic.
SuiteReport verify_wnw_random(std::size_t trials, std::uint64_t seed, bool exact,
                              const RandomGraphOptions& graphs = {});

/// The level-set certificate reproduces Res(A, B): exactly for rationals,
/// within `tolerance` (relative) for doubles.
SuiteReport verify_optimal(std::size_t trials, std::uint64_t seed, bool exact, double tolerance = 1e-8,
                           const RandomGraphOptions& graphs = {});

}  // namespace mothernet
