#pragma once

#include <string>

#include "json.hpp"
#include "mothernet/network.hpp"

namespace mothernet {

/// {"shape":[m_0..m_{n-1}], "d":.., "n":.., "projected":..,
///  "vertices":[{"word":"0110010","pos":35}, ...],
///  "edges":[{"u":"011","v":"111","type":1,"conductance":"4/1"}, ...]}
nlohmann::json graph_to_json(const Network& net);

/// Inverse of graph_to_json. Positions are recomputed from the words and must
/// match the stored "pos"; throws std::invalid_argument otherwise.
Network graph_from_json(const nlohmann::json& doc);

/// Graphviz rendering with vertices placed left to right by linear position.
/// Edge colors by type: -1 black, 0 red, 1 blue, 2 green.
std::string graph_to_dot(const Network& net);

}  // namespace mothernet
