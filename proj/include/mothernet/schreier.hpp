#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "mothernet/network.hpp"
#include "mothernet/words.hpp"

namespace mothernet {

/// A mother-group generator: a degree t in {-1, 0, ..., d} and one permutation
/// per alphabet size. `sigma[i]` permutes {0, ..., i-1}; sizes that never
/// occur may be left empty.
struct Generator {
  int degree = 0;
  std::vector<std::vector<std::uint8_t>> sigma;

  static Generator identity(int degree, int bound);
};

/// Thrown when a build would exceed the configured vertex cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BuildOptions {
  std::uint64_t vertex_cap = std::uint64_t{1} << 20;
};

/// Edge type of the pair (x, y) in the degree-d graph, or nullopt if the two
/// words are not adjacent. Throws std::invalid_argument on length mismatch.
std::optional<int> edge_type(const DigitWord& x, const DigitWord& y, int d);
/// Same, but additionally checks both words against `shape`.
std::optional<int> edge_type(const DigitWord& x, const DigitWord& y, int d, const TreeShape& shape);

/// Permutes the digit just above the t-th nonzero position (k = 1 + l_t(x)).
/// Words too short to contain position k are fixed.
DigitWord apply_generator(const DigitWord& x, const Generator& g, const TreeShape& shape);

/// Edges generated by every generator of degree <= d, with the permutations
/// ranging over the full symmetric groups of the alphabet sizes used in the
/// first n levels. Unit conductances. Only for shapes bounded by 4.
Network build_from_action(int d, const TreeShape& shape, std::size_t n, BuildOptions options = {});

/// Edges found by testing every pair of words that differ in one coordinate
/// with `edge_type`. Unit conductances.
Network build_from_criterion(int d, const TreeShape& shape, std::size_t n, BuildOptions options = {});

/// Quotient of a full-alphabet network onto binary words. Each projected edge
/// carries conductance prod_{i : y_i != 0} (m_i - 1), y being the endpoint
/// with the extra nonzero digit. Self-loops vanish.
Network project_network(const Network& full, const TreeShape& shape);

/// Builds the projected binary network directly, without the full alphabet.
Network build_projected(int d, const TreeShape& shape, std::size_t n, BuildOptions options = {});

/// Digits of the endpoint words strictly above the differing coordinate k.
DigitWord edge_prefix(const Network& net, const Edge& e);

/// The endpoint whose digit k is nonzero (in a binary network, the one with
/// the extra 1). For full-alphabet edges where both are nonzero, returns e.v.
VertexId heavier_endpoint(const Network& net, const Edge& e);

struct PositionOrder {
  VertexId low;
  VertexId high;
};
PositionOrder order_by_position(const Network& net, const Edge& e);

/// (lower word, higher word, type) triples for edge-set comparisons.
using EdgeKey = std::tuple<std::string, std::string, int>;
std::set<EdgeKey> edge_keys(const Network& net);

}  // namespace mothernet
