#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mothernet/rational.hpp"
#include "mothernet/words.hpp"

namespace mothernet {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Vertex {
  DigitWord word;
  /// Linear position of the binary projection of `word`.
  LinearPosition position;
  int weight = 0;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  /// Coordinate where the endpoint words differ; -1 for networks without words.
  int k = -1;
  int type = 0;
  Rational conductance = 1;
};

/// Where a network came from. Generic networks leave `shape` empty.
struct NetworkInfo {
  std::optional<TreeShape> shape;
  int degree = -1;
  std::size_t level = 0;
  bool projected = false;
};

/// Finite weighted graph. Immutable after construction; the constructor
/// rejects self-loops, non-positive conductances, out-of-range endpoints and
/// duplicate (pair, type) entries.
class Network {
 public:
  Network() = default;
  Network(std::vector<Vertex> vertices, std::vector<Edge> edges, NetworkInfo info = {});

  /// Wordless network on vertices 0..count-1; positions equal ids.
  static Network from_edges(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(VertexId id) const { return vertices_.at(id); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }
  const NetworkInfo& info() const { return info_; }

  std::optional<VertexId> find(const DigitWord& word) const;
  /// Vertices whose linear position lies in [lo, hi).
  std::vector<VertexId> vertices_in_positions(std::uint64_t lo, std::uint64_t hi) const;

  Network without_edge(EdgeId id) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  NetworkInfo info_;
  std::map<DigitWord, VertexId> index_;
};

/// Incident-edge lists in CSR form.
struct Adjacency {
  std::vector<std::size_t> offsets;
  std::vector<EdgeId> incident;

  std::span<const EdgeId> at(VertexId v) const {
    return {incident.data() + offsets[v], offsets[v + 1] - offsets[v]};
  }
};

Adjacency build_adjacency(const Network& net);

inline VertexId other_endpoint(const Edge& e, VertexId from) { return e.u == from ? e.v : e.u; }

/// Vertices reachable from `sources`, skipping edges flagged in `blocked`
/// (which may be empty).
std::vector<bool> reachable_from(const Network& net, std::span<const VertexId> sources,
                                 const std::vector<bool>& blocked = {});

/// True iff every vertex is reachable from vertex 0. Empty and single-vertex
/// networks are connected.
bool is_connected(const Network& net);

}  // namespace mothernet
