#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qnet/graph.hpp"

namespace qnet {

struct EdgeListOptions {
  bool directed = false;
  bool allow_self_loops = false;
};

/// Parses "src dst [weight] [phase]" lines. '#' starts a comment. Two
/// directives override the defaults: "#!nodes N" and "#!directed".
/// A weight of "-" marks a missing weight; it may not be followed by a phase.
Graph load_edge_list(std::istream& in, const EdgeListOptions& options = {});
Graph load_edge_list_file(const std::string& path, const EdgeListOptions& options = {});

/// Writes directives and edges with round-trip precision.
void write_edge_list(std::ostream& out, const Graph& g);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace qnet
