#include "qnet/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qnet/error.hpp"

namespace qnet {

namespace {

[[noreturn]] void malformed(std::size_t line, const std::string& why) {
  throw ValidationError("edge list line " + std::to_string(line) + ": " + why);
}

std::optional<double> parse_double(const std::string& token) {
  // std::from_chars for double is available in libstdc++ 11.
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

std::optional<Index> parse_index(const std::string& token) {
  Index value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

}  // namespace

Graph load_edge_list(std::istream& in, const EdgeListOptions& options) {
  bool directed = options.directed;
  std::optional<Index> declared_nodes;
  std::vector<Edge> edges;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (raw.rfind("#!", 0) == 0) {
      std::istringstream directive(raw.substr(2));
      std::string key;
      directive >> key;
      if (key == "directed") {
        directed = true;
      } else if (key == "undirected") {
        directed = false;
      } else if (key == "nodes") {
        std::string count;
        directive >> count;
        const auto n = parse_index(count);
        if (!n || *n < 0) malformed(line_no, "invalid node count '" + count + "'");
        declared_nodes = *n;
      } else {
        malformed(line_no, "unknown directive '" + key + "'");
      }
      continue;
    }
    const std::string body = raw.substr(0, raw.find('#'));
    std::istringstream fields(body);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() < 2) malformed(line_no, "expected 'src dst [weight] [phase]'");
    if (tokens.size() > 4) malformed(line_no, "too many columns");

    Edge e;
    const auto src = parse_index(tokens[0]);
    const auto dst = parse_index(tokens[1]);
    if (!src || !dst || *src < 0 || *dst < 0) malformed(line_no, "invalid node id");
    e.src = *src;
    e.dst = *dst;
    if (tokens.size() >= 3) {
      if (tokens[2] == "-") {
        if (tokens.size() == 4) malformed(line_no, "phase given without a weight column");
      } else {
        const auto w = parse_double(tokens[2]);
        if (!w) malformed(line_no, "invalid weight '" + tokens[2] + "'");
        if (*w < 0.0) malformed(line_no, "negative weight " + tokens[2]);
        e.weight = *w;
      }
    }
    if (tokens.size() == 4) {
      const auto phase = parse_double(tokens[3]);
      if (!phase) malformed(line_no, "invalid phase '" + tokens[3] + "'");
      e.phase = *phase;
    }
    edges.push_back(e);
  }

  Index n = 0;
  for (const Edge& e : edges) n = std::max({n, e.src + 1, e.dst + 1});
  if (declared_nodes) {
    if (*declared_nodes < n) {
      throw ValidationError("edge list declares " + std::to_string(*declared_nodes) +
                            " nodes but references node " + std::to_string(n - 1));
    }
    n = *declared_nodes;
  }
  Graph g(n, directed, options.allow_self_loops);
  for (const Edge& e : edges) g.add_edge(e);
  return g;
}

Graph load_edge_list_file(const std::string& path, const EdgeListOptions& options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list '" + path + "'");
  return load_edge_list(in, options);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "#!nodes " << g.node_count() << '\n';
  if (g.directed()) out << "#!directed\n";
  const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
  for (const Edge& e : g.edges()) {
    out << e.src << ' ' << e.dst << ' ' << e.weight;
    if (e.phase != 0.0) out << ' ' << e.phase;
    out << '\n';
  }
  out.precision(old_precision);
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"src", e.src}, {"dst", e.dst}, {"w", e.weight}, {"phase", e.phase}});
  }
  return {{"nodes", g.node_count()}, {"directed", g.directed()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    Graph g(j.at("nodes").get<Index>(), j.value("directed", false), j.value("self_loops", false));
    for (const auto& e : j.at("edges")) {
      g.add_edge(e.at("src").get<Index>(), e.at("dst").get<Index>(), e.value("w", 1.0),
                 e.value("phase", 0.0));
    }
    return g;
  } catch (const nlohmann::json::exception& ex) {
    throw ValidationError(std::string("invalid graph JSON: ") + ex.what());
  }
}

}  // namespace qnet
