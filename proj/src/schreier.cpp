#include "mothernet/schreier.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <utility>

namespace mothernet {

namespace {

void check_cap(const TreeShape& shape, std::size_t n, const BuildOptions& options) {
  if (n < 1) throw std::invalid_argument("level n must be >= 1");
  if (n > 63) throw std::invalid_argument("level n must be <= 63");
  const auto size = shape.level_size(n);
  if (size > options.vertex_cap) {
    throw ResourceLimitError("level " + std::to_string(n) + " has " + std::to_string(size) +
                             " vertices, above the cap of " + std::to_string(options.vertex_cap));
  }
}

void check_degree(int d) {
  if (d < -1) throw std::invalid_argument("degree must be >= -1");
}

Vertex make_vertex(DigitWord word) {
  Vertex v;
  v.position = linear_position(project_binary(word));
  v.weight = word.hamming_weight();
  v.word = std::move(word);
  return v;
}

std::vector<Vertex> level_vertices(const TreeShape& shape, std::size_t n) {
  const auto count = shape.level_size(n);
  std::vector<Vertex> vertices;
  vertices.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) vertices.push_back(make_vertex(word_at_index(i, shape, n)));
  return vertices;
}

int differing_coordinate(const DigitWord& x, const DigitWord& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.digit(i) != y.digit(i)) return static_cast<int>(i);
  }
  return -1;
}

void sort_edges(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v, a.type) < std::tie(b.u, b.v, b.type);
  });
}

std::vector<std::vector<std::uint8_t>> all_permutations(int size) {
  std::vector<std::uint8_t> p(static_cast<std::size_t>(size));
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  std::vector<std::vector<std::uint8_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

Generator Generator::identity(int degree, int bound) {
  Generator g;
  g.degree = degree;
  g.sigma.resize(static_cast<std::size_t>(bound) + 1);
  for (int size = 1; size <= bound; ++size) {
    auto& p = g.sigma[static_cast<std::size_t>(size)];
    p.resize(static_cast<std::size_t>(size));
    std::iota(p.begin(), p.end(), std::uint8_t{0});
  }
  return g;
}

std::optional<int> edge_type(const DigitWord& x, const DigitWord& y, int d) {
  if (x.size() != y.size()) throw std::invalid_argument("edge_type: words of different length");
  int k = -1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.digit(i) == y.digit(i)) continue;
    if (k >= 0) return std::nullopt;
    k = static_cast<int>(i);
  }
  if (k < 0) return std::nullopt;
  if (k == 0) return -1;
  if (x.digit(static_cast<std::size_t>(k - 1)) == 0) return std::nullopt;
  int t = 0;
  for (int i = 0; i < k - 1; ++i) t += x.digit(static_cast<std::size_t>(i)) != 0 ? 1 : 0;
  if (t > d) return std::nullopt;
  return t;
}

std::optional<int> edge_type(const DigitWord& x, const DigitWord& y, int d, const TreeShape& shape) {
  if (!x.fits(shape) || !y.fits(shape)) {
    throw std::invalid_argument("edge_type: word does not fit shape " + shape.describe());
  }
  return edge_type(x, y, d);
}

DigitWord apply_generator(const DigitWord& x, const Generator& g, const TreeShape& shape) {
  const auto l = nonzero_position(x, g.degree);
  if (!l) return x;
  const auto k = static_cast<std::size_t>(*l + 1);
  if (k >= x.size()) return x;
  const auto size = static_cast<std::size_t>(shape[k]);
  if (size >= g.sigma.size() || g.sigma[size].size() != size) {
    throw std::invalid_argument("generator has no permutation for alphabet size " + std::to_string(size));
  }
  return x.with_digit(k, g.sigma[size][x.digit(k)]);
}

Network build_from_action(int d, const TreeShape& shape, std::size_t n, BuildOptions options) {
  check_degree(d);
  check_cap(shape, n, options);
  const auto sizes_used = shape.prefix(n);
  const int bound = *std::max_element(sizes_used.begin(), sizes_used.end());
  if (bound > 4) throw std::invalid_argument("build_from_action is limited to alphabet sizes <= 4");

  std::vector<int> sizes(sizes_used.begin(), sizes_used.end());
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  std::vector<std::vector<std::vector<std::uint8_t>>> perms;
  for (int size : sizes) perms.push_back(all_permutations(size));

  auto vertices = level_vertices(shape, n);
  std::map<std::pair<VertexId, VertexId>, int> found;

  std::vector<std::size_t> choice(sizes.size(), 0);
  Generator g = Generator::identity(0, bound);
  while (true) {
    for (std::size_t j = 0; j < sizes.size(); ++j) {
      g.sigma[static_cast<std::size_t>(sizes[j])] = perms[j][choice[j]];
    }
    for (int t = -1; t <= d; ++t) {
      g.degree = t;
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        const DigitWord image = apply_generator(vertices[i].word, g, shape);
        if (image == vertices[i].word) continue;
        const auto j = static_cast<VertexId>(mixed_radix_index(image, shape));
        const std::pair<VertexId, VertexId> key = std::minmax(static_cast<VertexId>(i), j);
        const auto [it, inserted] = found.emplace(key, t);
        if (!inserted && it->second != t) {
          throw std::logic_error("pair produced by generators of different degrees");
        }
      }
    }
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == perms[pos].size()) choice[pos++] = 0;
    if (pos == choice.size()) break;
  }

  std::vector<Edge> edges;
  edges.reserve(found.size());
  for (const auto& [pair, t] : found) {
    Edge e;
    e.u = pair.first;
    e.v = pair.second;
    e.type = t;
    e.k = differing_coordinate(vertices[e.u].word, vertices[e.v].word);
    edges.push_back(std::move(e));
  }
  sort_edges(edges);
  return Network(std::move(vertices), std::move(edges), {shape, d, n, false});
}

Network build_from_criterion(int d, const TreeShape& shape, std::size_t n, BuildOptions options) {
  check_degree(d);
  check_cap(shape, n, options);
  auto vertices = level_vertices(shape, n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const DigitWord& x = vertices[i].word;
    for (std::size_t k = 0; k < n; ++k) {
      for (int value = x.digit(k) + 1; value < shape[k]; ++value) {
        const DigitWord y = x.with_digit(k, static_cast<std::uint8_t>(value));
        const auto t = edge_type(x, y, d);
        if (!t) continue;
        Edge e;
        e.u = static_cast<VertexId>(i);
        e.v = static_cast<VertexId>(mixed_radix_index(y, shape));
        e.k = static_cast<int>(k);
        e.type = *t;
        edges.push_back(std::move(e));
      }
    }
  }
  sort_edges(edges);
  return Network(std::move(vertices), std::move(edges), {shape, d, n, false});
}

Network project_network(const Network& full, const TreeShape& shape) {
  std::size_t n = full.info().level;
  if (n == 0 && full.vertex_count() > 0) n = full.vertex(0).word.size();
  if (n == 0 || n > 63) throw std::invalid_argument("project_network needs a network of words");

  std::map<std::pair<VertexId, VertexId>, Edge> projected;
  for (const Edge& e : full.edges()) {
    const DigitWord& x = full.vertex(e.u).word;
    const DigitWord& y = full.vertex(e.v).word;
    const auto k = static_cast<std::size_t>(e.k);
    if ((x.digit(k) == 0) == (y.digit(k) == 0)) continue;
    const DigitWord& heavy = x.digit(k) == 0 ? y : x;
    const auto px = static_cast<VertexId>(project_binary(x).to_bits());
    const auto py = static_cast<VertexId>(project_binary(y).to_bits());
    Edge out;
    std::tie(out.u, out.v) = std::minmax(px, py);
    out.k = e.k;
    out.type = e.type;
    out.conductance = inverse_beta_weight(project_binary(heavy), shape);
    const auto [it, inserted] = projected.emplace(std::make_pair(out.u, out.v), out);
    if (!inserted && (it->second.type != out.type || it->second.conductance != out.conductance)) {
      throw std::logic_error("inconsistent preimages for a projected edge");
    }
  }

  std::vector<Vertex> vertices;
  vertices.reserve(std::size_t{1} << n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    vertices.push_back(make_vertex(DigitWord::from_bits(bits, n)));
  }
  std::vector<Edge> edges;
  edges.reserve(projected.size());
  for (auto& [key, e] : projected) edges.push_back(std::move(e));
  sort_edges(edges);
  return Network(std::move(vertices), std::move(edges), {shape, full.info().degree, n, true});
}

Network build_projected(int d, const TreeShape& shape, std::size_t n, BuildOptions options) {
  check_degree(d);
  if (n < 1 || n > 31) throw std::invalid_argument("projected level must be in [1, 31]");
  if ((std::uint64_t{1} << n) > options.vertex_cap) {
    throw ResourceLimitError("level " + std::to_string(n) + " has " + std::to_string(1ULL << n) +
                             " binary vertices, above the cap of " + std::to_string(options.vertex_cap));
  }
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<Vertex> vertices;
  vertices.reserve(count);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    Vertex v;
    v.word = DigitWord::from_bits(bits, n);
    v.position = {linear_position_bits(bits)};
    v.weight = std::popcount(bits);
    vertices.push_back(std::move(v));
  }
  std::vector<Rational> multiplicity(count);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    multiplicity[bits] = inverse_beta_weight(vertices[bits].word, shape);
  }

  std::vector<Edge> edges;
  for (std::uint64_t x = 0; x < count; ++x) {
    for (std::size_t k = 0; k < n; ++k) {
      if ((x >> k) & 1U) continue;  // visit each pair from its lighter end
      const std::uint64_t y = x | (std::uint64_t{1} << k);
      int t = -1;
      if (k > 0) {
        if (((x >> (k - 1)) & 1U) == 0) continue;
        t = std::popcount(x & ((std::uint64_t{1} << (k - 1)) - 1));
        if (t > d) continue;
      }
      Edge e;
      e.u = static_cast<VertexId>(x);
      e.v = static_cast<VertexId>(y);
      e.k = static_cast<int>(k);
      e.type = t;
      e.conductance = multiplicity[y];
      edges.push_back(std::move(e));
    }
  }
  sort_edges(edges);
  return Network(std::move(vertices), std::move(edges), {shape, d, n, true});
}

DigitWord edge_prefix(const Network& net, const Edge& e) {
  const DigitWord& x = net.vertex(e.u).word;
  std::vector<std::uint8_t> digits;
  for (std::size_t i = static_cast<std::size_t>(e.k) + 1; i < x.size(); ++i) digits.push_back(x.digit(i));
  return DigitWord(std::move(digits));
}

VertexId heavier_endpoint(const Network& net, const Edge& e) {
  const auto k = static_cast<std::size_t>(e.k);
  if (net.vertex(e.u).word.digit(k) == 0) return e.v;
  if (net.vertex(e.v).word.digit(k) == 0) return e.u;
  return e.v;
}

PositionOrder order_by_position(const Network& net, const Edge& e) {
  if (net.vertex(e.v).position < net.vertex(e.u).position) return {e.v, e.u};
  return {e.u, e.v};
}

std::set<EdgeKey> edge_keys(const Network& net) {
  std::set<EdgeKey> keys;
  for (const Edge& e : net.edges()) {
    auto a = net.vertex(e.u).word.to_string();
    auto b = net.vertex(e.v).word.to_string();
    if (b < a) std::swap(a, b);
    keys.emplace(std::move(a), std::move(b), e.type);
  }
  return keys;
}

}  // namespace mothernet
