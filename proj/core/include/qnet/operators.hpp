#pragma once

#include "qnet/graph.hpp"
#include "qnet/types.hpp"

namespace qnet {

enum class SymmetryClass { Hermitian, Stochastic, General };

enum class IsolatedNodePolicy {
  // Zero-strength nodes get zero rows and columns in D^-1 based generators.
  Exclude,
  Error,
};

struct OperatorOptions {
  IsolatedNodePolicy isolated = IsolatedNodePolicy::Exclude;
  // Directed graphs are rejected unless this is set; then A -> (A + A^+)/2
  // and D holds (in + out) / 2 strengths.
  bool symmetrize_directed = false;
};

struct TaggedOperator {
  ComplexMatrix matrix;
  SymmetryClass symmetry = SymmetryClass::General;
};

/// A, D, combinatorial Laplacian D - A, stochastic generator (D - A) D^-1
/// and quantum generator D^-1/2 (D - A) D^-1/2.
struct OperatorBundle {
  TaggedOperator adjacency;
  RealVector degree;
  TaggedOperator laplacian;
  TaggedOperator stochastic;
  TaggedOperator quantum;
  std::vector<NodeId> isolated_nodes;
};

OperatorBundle build_operators(const Graph& g, const OperatorOptions& options = {});

/// Hermitian adjacency used as a walk generator. Directed input is
/// symmetrised as (A + A^+)/2.
ComplexMatrix hermitian_adjacency(const Graph& g);

/// Combinatorial Laplacian of an undirected graph (phases kept).
ComplexMatrix laplacian(const Graph& g);

/// L^+ L. Its kernel contains the kernel of L.
ComplexMatrix fiedler_map(const ComplexMatrix& lap);

/// Column-stochastic damped transition matrix. G(k, i) is the probability
/// of moving from i to k.
struct GoogleMatrix {
  RealMatrix matrix;
  double damping = 1.0;
  bool uniform_dangling = true;
  std::vector<NodeId> dangling_nodes;

  Index size() const noexcept { return matrix.rows(); }
};

/// G = damping * M + (1 - damping)/N, with M the column-normalised transition
/// matrix (dangling columns replaced by 1/N). Undirected edges count in both
/// directions.
GoogleMatrix google_matrix(const Graph& g, double damping);

}  // namespace qnet
