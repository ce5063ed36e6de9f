#include "qnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>

#include "qnet/error.hpp"

namespace qnet {

Graph::Graph(Index node_count, bool directed, bool allow_self_loops)
    : node_count_(node_count), directed_(directed), allow_self_loops_(allow_self_loops) {
  if (node_count < 0) throw ValidationError("node count must be non-negative");
}

Graph& Graph::add_edge(NodeId src, NodeId dst, double weight, double phase) {
  if (src < 0 || src >= node_count_ || dst < 0 || dst >= node_count_) {
    throw ValidationError("edge (" + std::to_string(src) + ", " + std::to_string(dst) +
                          ") references a node outside [0, " + std::to_string(node_count_) +
                          ")");
  }
  if (src == dst && !allow_self_loops_) {
    throw ValidationError("self-loop on node " + std::to_string(src) + " is not enabled");
  }
  if (!(weight >= 0.0) || !std::isfinite(weight)) {
    throw ValidationError("edge weight must be finite and non-negative");
  }
  if (!std::isfinite(phase)) throw ValidationError("edge phase must be finite");
  edges_.push_back({src, dst, weight, phase});
  return *this;
}

bool Graph::has_phases() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.phase != 0.0; });
}

RealMatrix Graph::weight_matrix() const {
  RealMatrix a = RealMatrix::Zero(node_count_, node_count_);
  for (const Edge& e : edges_) {
    a(e.src, e.dst) += e.weight;
    if (!directed_ && e.src != e.dst) a(e.dst, e.src) += e.weight;
  }
  return a;
}

ComplexMatrix Graph::adjacency() const {
  ComplexMatrix a = ComplexMatrix::Zero(node_count_, node_count_);
  for (const Edge& e : edges_) {
    const Complex h = std::polar(e.weight, e.phase);
    a(e.src, e.dst) += h;
    if (!directed_ && e.src != e.dst) a(e.dst, e.src) += std::conj(h);
  }
  return a;
}

RealVector Graph::strengths() const {
  RealVector s = RealVector::Zero(node_count_);
  for (const Edge& e : edges_) {
    if (directed_) {
      s(e.src) += 0.5 * e.weight;
      s(e.dst) += 0.5 * e.weight;
    } else {
      s(e.src) += e.weight;
      if (e.src != e.dst) s(e.dst) += e.weight;
    }
  }
  return s;
}

std::vector<std::vector<NodeId>> Graph::neighbours() const {
  std::vector<std::vector<NodeId>> out(static_cast<std::size_t>(node_count_));
  for (const Edge& e : edges_) {
    out[e.src].push_back(e.dst);
    if (e.src != e.dst) out[e.dst].push_back(e.src);
  }
  for (auto& list : out) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return out;
}

Graph Graph::as_undirected() const {
  Graph g(node_count_, false, allow_self_loops_);
  g.edges_ = edges_;
  return g;
}

std::vector<Index> Graph::component_labels() const {
  std::vector<Index> label(static_cast<std::size_t>(node_count_), -1);
  const auto adj = neighbours();
  Index next = 0;
  for (NodeId start = 0; start < node_count_; ++start) {
    if (label[start] >= 0) continue;
    std::queue<NodeId> frontier;
    frontier.push(start);
    label[start] = next;
    while (!frontier.empty()) {
      const NodeId u = frontier.front();
      frontier.pop();
      for (NodeId v : adj[u]) {
        if (label[v] < 0) {
          label[v] = next;
          frontier.push(v);
        }
      }
    }
    ++next;
  }
  return label;
}

Index Graph::component_count() const {
  const auto labels = component_labels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

Graph Graph::without_edge(std::size_t edge_index) const {
  Graph g = *this;
  g.edges_.erase(g.edges_.begin() + static_cast<std::ptrdiff_t>(edge_index));
  return g;
}

BipartiteResult is_bipartite(const Graph& g) {
  const Index n = g.node_count();
  const auto adj = g.neighbours();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::vector<NodeId> parent(static_cast<std::size_t>(n), -1);
  std::vector<Index> depth(static_cast<std::size_t>(n), 0);

  for (NodeId start = 0; start < n; ++start) {
    if (colour[start] >= 0) continue;
    colour[start] = 0;
    std::queue<NodeId> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      const NodeId u = frontier.front();
      frontier.pop();
      for (NodeId v : adj[u]) {
        if (v == u) {
          return {false, OddCycle{{u}}};
        }
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          frontier.push(v);
        } else if (colour[v] == colour[u]) {
          // Same-colour edge closes an odd cycle through the BFS tree:
          // climb both endpoints to their lowest common ancestor.
          std::vector<NodeId> left{u};
          std::vector<NodeId> right{v};
          NodeId a = u;
          NodeId b = v;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();  // common ancestor already in `left`
          std::reverse(left.begin(), left.end());
          OddCycle cycle;
          cycle.nodes = left;
          cycle.nodes.insert(cycle.nodes.end(), right.begin(), right.end());
          return {false, cycle};
        }
      }
    }
  }
  return {true, BipartiteColoring{std::move(colour)}};
}

}  // namespace qnet
