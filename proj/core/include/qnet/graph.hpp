#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "qnet/types.hpp"

namespace qnet {

using NodeId = Index;

/// A weighted edge. On an undirected graph a phase theta means
/// H(src, dst) = w e^{i theta} and H(dst, src) = w e^{-i theta}.
struct Edge {
  NodeId src = 0;
  NodeId dst = 0;
  double weight = 1.0;
  double phase = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted, optionally directed, optionally phase-decorated network.
/// Undirected edges are stored once; the conjugate direction is implied.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Index node_count, bool directed = false, bool allow_self_loops = false);

  /// Validates ids, weight and self-loop policy. Throws ValidationError.
  Graph& add_edge(NodeId src, NodeId dst, double weight = 1.0, double phase = 0.0);
  Graph& add_edge(const Edge& e) { return add_edge(e.src, e.dst, e.weight, e.phase); }

  Index node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool directed() const noexcept { return directed_; }
  bool allows_self_loops() const noexcept { return allow_self_loops_; }
  bool has_phases() const noexcept;
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Weighted adjacency, A(u, v) = total weight of u -> v (both directions
  /// for undirected edges).
  RealMatrix weight_matrix() const;
  /// Adjacency including phases; Hermitian for undirected graphs.
  ComplexMatrix adjacency() const;
  /// Sum of incident weights (undirected) or (in + out) / 2 (directed).
  RealVector strengths() const;
  /// Neighbour lists ignoring direction.
  std::vector<std::vector<NodeId>> neighbours() const;

  /// Same nodes, every directed edge kept as an undirected edge.
  Graph as_undirected() const;
  /// Number of connected components ignoring direction, and a label per node.
  std::vector<Index> component_labels() const;
  Index component_count() const;

  Graph without_edge(std::size_t edge_index) const;

 private:
  Index node_count_ = 0;
  bool directed_ = false;
  bool allow_self_loops_ = false;
  std::vector<Edge> edges_;
};

struct BipartiteColoring {
  std::vector<int> colour;  // 0 or 1 per node
};

struct OddCycle {
  std::vector<NodeId> nodes;  // closed walk, first node not repeated
};

struct BipartiteResult {
  bool bipartite = false;
  std::variant<BipartiteColoring, OddCycle> witness;
};

/// Breadth-first two-colouring, direction ignored. Returns the colouring or
/// an odd cycle.
BipartiteResult is_bipartite(const Graph& g);

}  // namespace qnet
