#include "mothernet/graph_io.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace mothernet {

namespace {

const char* type_color(int type) {
  switch (type) {
    case -1: return "black";
    case 0: return "red";
    case 1: return "blue";
    case 2: return "green";
    default: return "gray50";
  }
}

}  // namespace

nlohmann::json graph_to_json(const Network& net) {
  const auto& info = net.info();
  const std::size_t n = net.vertex_count() > 0 ? net.vertex(0).word.size() : info.level;
  nlohmann::json doc;
  doc["shape"] = info.shape ? info.shape->prefix(n) : std::vector<int>{};
  doc["d"] = info.degree;
  doc["n"] = n;
  doc["projected"] = info.projected;
  auto& vertices = doc["vertices"] = nlohmann::json::array();
  for (const Vertex& v : net.vertices()) {
    vertices.push_back({{"word", v.word.to_string()}, {"pos", v.position.value}});
  }
  auto& edges = doc["edges"] = nlohmann::json::array();
  for (const Edge& e : net.edges()) {
    edges.push_back({{"u", net.vertex(e.u).word.to_string()},
                     {"v", net.vertex(e.v).word.to_string()},
                     {"type", e.type},
                     {"conductance", to_string(e.conductance)}});
  }
  return doc;
}

Network graph_from_json(const nlohmann::json& doc) {
  try {
    NetworkInfo info;
    const auto shape = doc.at("shape").get<std::vector<int>>();
    if (!shape.empty()) info.shape = TreeShape::padded(shape);
    info.degree = doc.value("d", -1);
    info.level = doc.at("n").get<std::size_t>();
    info.projected = doc.value("projected", false);

    std::vector<Vertex> vertices;
    std::map<std::string, VertexId> index;
    for (const auto& item : doc.at("vertices")) {
      Vertex v;
      v.word = DigitWord::parse(item.at("word").get<std::string>());
      if (info.shape && !v.word.fits(*info.shape)) {
        throw std::invalid_argument("word " + v.word.to_string() + " does not fit the shape");
      }
      v.position = linear_position(project_binary(v.word));
      v.weight = v.word.hamming_weight();
      if (item.contains("pos") && item.at("pos").get<std::uint64_t>() != v.position.value) {
        throw std::invalid_argument("stored position disagrees with word " + v.word.to_string());
      }
      index.emplace(v.word.to_string(), static_cast<VertexId>(vertices.size()));
      vertices.push_back(std::move(v));
    }
    std::vector<Edge> edges;
    for (const auto& item : doc.at("edges")) {
      Edge e;
      e.u = index.at(item.at("u").get<std::string>());
      e.v = index.at(item.at("v").get<std::string>());
      e.type = item.at("type").get<int>();
      e.conductance = parse_rational(item.at("conductance").get<std::string>());
      const DigitWord& x = vertices[e.u].word;
      const DigitWord& y = vertices[e.v].word;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.digit(i) != y.digit(i)) {
          e.k = static_cast<int>(i);
          break;
        }
      }
      edges.push_back(std::move(e));
    }
    return Network(std::move(vertices), std::move(edges), std::move(info));
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("malformed graph JSON: ") + ex.what());
  } catch (const std::out_of_range& ex) {
    throw std::invalid_argument(std::string("graph JSON names an unknown vertex: ") + ex.what());
  }
}

std::string graph_to_dot(const Network& net) {
  std::ostringstream out;
  out << "graph G {\n  layout=neato;\n  node [shape=circle, fontsize=10];\n";
  std::map<std::uint64_t, int> stacked;
  for (const Vertex& v : net.vertices()) {
    const int row = stacked[v.position.value]++;
    out << "  \"" << v.word.to_string() << "\" [pos=\"" << v.position.value << "," << row << "!\"];\n";
  }
  for (const Edge& e : net.edges()) {
    out << "  \"" << net.vertex(e.u).word.to_string() << "\" -- \"" << net.vertex(e.v).word.to_string()
        << "\" [color=" << type_color(e.type);
    if (e.conductance != 1) out << ", label=\"" << to_string(e.conductance) << "\"";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mothernet
