#pragma once

#include "qchrom/graph.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace qchrom {

// Canonical text format: first line "d", then one "i j" line per edge,
// 1-indexed and sorted. Blank lines and '#' comments are ignored on input.
std::string to_text(const Graph& g);
Graph parse_graph_text(std::string_view text);

/// Graph plus the optional weights carried by the JSON format.
struct GraphInput {
  Graph graph;
  std::optional<WeightVector> lambda;
};

// JSON format: {"d": int, "edges": [[i, j], ...], "lambda": [ints]}, 1-indexed,
// "lambda" optional.
nlohmann::json to_json(const Graph& g, const std::optional<WeightVector>& lambda = std::nullopt);
GraphInput graph_from_json(const nlohmann::json& j);

/// Accepts either format; JSON is recognised by a leading '{'.
GraphInput parse_graph(std::string_view text);
GraphInput read_graph_file(const std::string& path);

/// "1,2,1" -> (1, 2, 1).
WeightVector parse_weights_csv(std::string_view csv);
std::string to_csv(const WeightVector& w);

}  // namespace qchrom
