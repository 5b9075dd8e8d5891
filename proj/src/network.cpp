#include "mothernet/network.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace mothernet {

Network::Network(std::vector<Vertex> vertices, std::vector<Edge> edges, NetworkInfo info)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), info_(std::move(info)) {
  if (vertices_.size() > std::numeric_limits<VertexId>::max()) {
    throw std::length_error("too many vertices");
  }
  std::set<std::tuple<VertexId, VertexId, int>> seen;
  for (const Edge& e : edges_) {
    if (e.u >= vertices_.size() || e.v >= vertices_.size()) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.conductance <= 0) throw std::invalid_argument("conductances must be positive");
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v), e.type).second) {
      throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    if (e.k >= 0) {
      const DigitWord& x = vertices_[e.u].word;
      const DigitWord& y = vertices_[e.v].word;
      const auto len = std::max(x.size(), y.size());
      for (std::size_t i = 0; i < len; ++i) {
        const bool differs = x.digit(i) != y.digit(i);
        if (differs != (static_cast<int>(i) == e.k)) {
          throw std::invalid_argument("edge words must differ exactly at coordinate k");
        }
      }
    }
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].word.size() > 0) index_.emplace(vertices_[i].word, static_cast<VertexId>(i));
  }
}

Network Network::from_edges(std::size_t vertex_count, std::vector<Edge> edges) {
  std::vector<Vertex> vertices(vertex_count);
  for (std::size_t i = 0; i < vertex_count; ++i) vertices[i].position = {i};
  for (Edge& e : edges) e.k = -1;
  return Network(std::move(vertices), std::move(edges));
}

std::optional<VertexId> Network::find(const DigitWord& word) const {
  const auto it = index_.find(word);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<VertexId> Network::vertices_in_positions(std::uint64_t lo, std::uint64_t hi) const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto p = vertices_[i].position.value;
    if (p >= lo && p < hi) out.push_back(static_cast<VertexId>(i));
  }
  return out;
}

Network Network::without_edge(EdgeId id) const {
  if (id >= edges_.size()) throw std::out_of_range("edge id out of range");
  std::vector<Edge> kept;
  kept.reserve(edges_.size() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i != id) kept.push_back(edges_[i]);
  }
  return Network(vertices_, std::move(kept), info_);
}

Adjacency build_adjacency(const Network& net) {
  Adjacency adj;
  adj.offsets.assign(net.vertex_count() + 1, 0);
  for (const Edge& e : net.edges()) {
    ++adj.offsets[e.u + 1];
    ++adj.offsets[e.v + 1];
  }
  for (std::size_t i = 0; i < net.vertex_count(); ++i) adj.offsets[i + 1] += adj.offsets[i];
  adj.incident.resize(adj.offsets.back());
  std::vector<std::size_t> fill(adj.offsets.begin(), adj.offsets.end() - 1);
  for (std::size_t id = 0; id < net.edge_count(); ++id) {
    const Edge& e = net.edges()[id];
    adj.incident[fill[e.u]++] = static_cast<EdgeId>(id);
    adj.incident[fill[e.v]++] = static_cast<EdgeId>(id);
  }
  return adj;
}

std::vector<bool> reachable_from(const Network& net, std::span<const VertexId> sources,
                                 const std::vector<bool>& blocked) {
  const Adjacency adj = build_adjacency(net);
  std::vector<bool> seen(net.vertex_count(), false);
  std::vector<VertexId> stack;
  for (VertexId s : sources) {
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId id : adj.at(v)) {
      if (!blocked.empty() && blocked[id]) continue;
      const VertexId w = other_endpoint(net.edges()[id], v);
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

bool is_connected(const Network& net) {
  if (net.vertex_count() <= 1) return true;
  const VertexId root = 0;
  const auto seen = reachable_from(net, std::span(&root, 1));
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace mothernet
