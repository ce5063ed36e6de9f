#include "qnet/generators.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>

#include "qnet/error.hpp"
#include "qnet/random.hpp"

namespace qnet::generators {

Graph path(Index n) {
  Graph g(n);
  for (Index i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(Index n) {
  if (n < 3) throw ValidationError("cycle needs at least 3 nodes");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete(Index n) {
  Graph g(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph star(Index n) {
  Graph g(n);
  for (Index i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

Graph square_lattice(Index width, Index height) {
  Graph g(width * height);
  for (Index r = 0; r < height; ++r) {
    for (Index c = 0; c < width; ++c) {
      const Index id = r * width + c;
      if (c + 1 < width) g.add_edge(id, id + 1);
      if (r + 1 < height) g.add_edge(id, id + width);
    }
  }
  return g;
}

Graph torus(Index width, Index height) {
  if (width < 3 || height < 3) throw ValidationError("torus needs sides of at least 3");
  Graph g(width * height);
  for (Index r = 0; r < height; ++r) {
    for (Index c = 0; c < width; ++c) {
      const Index id = r * width + c;
      g.add_edge(id, r * width + (c + 1) % width);
      g.add_edge(id, ((r + 1) % height) * width + c);
    }
  }
  return g;
}

Graph barbell(Index clique, Index bridge) {
  const Index n = 2 * clique + bridge;
  Graph g(n);
  for (Index i = 0; i < clique; ++i)
    for (Index j = i + 1; j < clique; ++j) {
      g.add_edge(i, j);
      g.add_edge(clique + bridge + i, clique + bridge + j);
    }
  // Path from the last node of the first clique to the first of the second.
  for (Index k = clique - 1; k < clique + bridge; ++k) g.add_edge(k, k + 1);
  return g;
}

Graph directed_chain(Index n) {
  Graph g(n, true);
  for (Index i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph directed_cycle(Index n) {
  Graph g = directed_chain(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph erdos_renyi(Index n, double p, std::mt19937_64& rng) {
  Graph g(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (uniform01(rng) < p) g.add_edge(i, j);
  return g;
}

Graph connected_erdos_renyi(Index n, double p, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    Graph g = erdos_renyi(n, p, rng);
    if (g.component_count() <= 1) return g;
  }
  // Sparse regime: join components along a random node order.
  Graph g = erdos_renyi(n, p, rng);
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (Index i = n - 1; i > 0; --i) {
    std::swap(order[i], order[uniform_below(rng, static_cast<std::uint64_t>(i + 1))]);
  }
  auto labels = g.component_labels();
  for (Index k = 1; k < n; ++k) {
    if (labels[order[k]] != labels[order[k - 1]]) {
      g.add_edge(order[k - 1], order[k]);
      labels = g.component_labels();
    }
  }
  return g;
}

Graph random_directed(Index n, double p, std::mt19937_64& rng) {
  Graph g(n, true);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (i != j && uniform01(rng) < p) g.add_edge(i, j);
  return g;
}

Graph random_bipartite(Index a, Index b, double p, std::mt19937_64& rng) {
  Graph g(a + b);
  for (Index i = 0; i < a; ++i)
    for (Index j = 0; j < b; ++j)
      if (uniform01(rng) < p) g.add_edge(i, a + j);
  // Connect leftover components with cross-part edges so the result stays
  // bipartite.
  auto labels = g.component_labels();
  for (Index v = 1; v < a + b; ++v) {
    if (labels[v] == labels[0]) continue;
    if (v < a) {
      g.add_edge(v, a);  // a is in part B
      if (labels[a] != labels[0]) g.add_edge(0, a);
    } else {
      g.add_edge(0, v);
    }
    labels = g.component_labels();
  }
  return g;
}

Graph with_random_phases(const Graph& g, std::mt19937_64& rng) {
  Graph out(g.node_count(), g.directed(), g.allows_self_loops());
  for (const Edge& e : g.edges()) {
    out.add_edge(e.src, e.dst, e.weight, 2.0 * std::numbers::pi * uniform01(rng));
  }
  return out;
}

}  // namespace qnet::generators
