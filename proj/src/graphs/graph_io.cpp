#include "qchrom/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qchrom {

std::string to_text(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  return out;
}

Graph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int d = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long a = 0, b = 0;
    if (!(ls >> a)) {
      std::string rest;
      ls.clear();
      if (ls >> rest) throw std::invalid_argument("malformed graph line: " + line);
      continue;
    }
    if (d < 0) {
      std::string extra;
      if (ls >> extra) throw std::invalid_argument("first graph line must hold only the vertex count");
      if (a < 1 || a > Graph::kMaxVertices) throw std::invalid_argument("vertex count out of range");
      d = static_cast<int>(a);
      continue;
    }
    std::string extra;
    if (!(ls >> b) || (ls >> extra)) throw std::invalid_argument("edge lines need exactly two vertices: " + line);
    if (a < 1 || b < 1 || a > d || b > d) throw std::invalid_argument("edge endpoint out of range: " + line);
    edges.push_back({static_cast<int>(a - 1), static_cast<int>(b - 1)});
  }
  if (d < 0) throw std::invalid_argument("empty graph description");
  return Graph(d, std::move(edges));
}

nlohmann::json to_json(const Graph& g, const std::optional<WeightVector>& lambda) {
  nlohmann::json j;
  j["d"] = g.order();
  auto edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u + 1, e.v + 1});
  j["edges"] = edges;
  if (lambda) j["lambda"] = lambda->values();
  return j;
}

GraphInput graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs \"d\" and \"edges\"");
  const int d = j.at("d").get<int>();
  if (d < 1 || d > Graph::kMaxVertices) throw std::invalid_argument("vertex count out of range");
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edges must be [i, j] pairs");
    const int a = e[0].get<int>(), b = e[1].get<int>();
    if (a < 1 || b < 1 || a > d || b > d) throw std::invalid_argument("edge endpoint out of range");
    edges.push_back({a - 1, b - 1});
  }
  GraphInput in{Graph(d, std::move(edges)), std::nullopt};
  if (j.contains("lambda")) {
    WeightVector w(j.at("lambda").get<std::vector<int>>());
    if (w.size() != d) throw std::invalid_argument("lambda length must equal d");
    in.lambda = std::move(w);
  }
  return in;
}

GraphInput parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("invalid graph JSON: ") + e.what());
    }
    try {
      return graph_from_json(j);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("invalid graph JSON: ") + e.what());
    }
  }
  return {parse_graph_text(text), std::nullopt};
}

GraphInput read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

WeightVector parse_weights_csv(std::string_view csv) {
  std::vector<int> w;
  std::string item;
  std::istringstream in{std::string(csv)};
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad weight '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("bad weight '" + item + "'");
    w.push_back(v);
  }
  if (w.empty()) throw std::invalid_argument("empty weight list");
  return WeightVector(std::move(w));
}

std::string to_csv(const WeightVector& w) {
  std::string out;
  for (int i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace qchrom
