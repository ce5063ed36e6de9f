#pragma once

#include <cstdint>
#include <random>

#include "qnet/graph.hpp"

namespace qnet::generators {

Graph path(Index n);
Graph cycle(Index n);
Graph complete(Index n);
/// Hub 0 joined to n - 1 leaves.
Graph star(Index n);
/// Open-boundary square lattice, node id = row * width + col.
Graph square_lattice(Index width, Index height);
Graph torus(Index width, Index height);
/// Two K_k cliques joined through a path of `bridge` intermediate nodes.
/// barbell(3, 1) is the 7-node barbell.
Graph barbell(Index clique, Index bridge);
/// Directed chain 0 -> 1 -> ... -> n-1.
Graph directed_chain(Index n);
Graph directed_cycle(Index n);

Graph erdos_renyi(Index n, double p, std::mt19937_64& rng);
/// ER graph conditioned on connectivity (resampled, then patched with a
/// random spanning path if needed).
Graph connected_erdos_renyi(Index n, double p, std::mt19937_64& rng);
Graph random_directed(Index n, double p, std::mt19937_64& rng);
/// Random connected bipartite graph with parts of sizes a and b.
Graph random_bipartite(Index a, Index b, double p, std::mt19937_64& rng);
/// Copy of g with uniformly random phases in [0, 2 pi).
Graph with_random_phases(const Graph& g, std::mt19937_64& rng);

}  // namespace qnet::generators
