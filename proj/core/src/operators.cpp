#include "qnet/operators.hpp"

#include <cmath>
#include <string>

#include "qnet/error.hpp"

namespace qnet {

ComplexMatrix hermitian_adjacency(const Graph& g) {
  const ComplexMatrix a = g.adjacency();
  if (!g.directed()) return a;
  return 0.5 * (a + a.adjoint());
}

ComplexMatrix laplacian(const Graph& g) {
  if (g.directed()) throw ValidationError("Laplacian requires an undirected graph");
  const ComplexMatrix a = g.adjacency();
  ComplexMatrix lap = -a;
  lap.diagonal() += g.strengths().cast<Complex>();
  return lap;
}

OperatorBundle build_operators(const Graph& g, const OperatorOptions& options) {
  if (g.directed() && !options.symmetrize_directed) {
    throw ValidationError(
        "graph operators need an undirected graph; request symmetrisation for directed input");
  }
  const Index n = g.node_count();
  OperatorBundle out;
  out.adjacency = {hermitian_adjacency(g), SymmetryClass::Hermitian};
  out.degree = g.strengths();

  ComplexMatrix lap = -out.adjacency.matrix;
  lap.diagonal() += out.degree.cast<Complex>();
  out.laplacian = {lap, SymmetryClass::Hermitian};

  RealVector inv = RealVector::Zero(n);
  RealVector inv_sqrt = RealVector::Zero(n);
  for (Index i = 0; i < n; ++i) {
    if (out.degree(i) > 0.0) {
      inv(i) = 1.0 / out.degree(i);
      inv_sqrt(i) = 1.0 / std::sqrt(out.degree(i));
    } else {
      out.isolated_nodes.push_back(i);
    }
  }
  if (!out.isolated_nodes.empty() && options.isolated == IsolatedNodePolicy::Error) {
    throw ValidationError("node " + std::to_string(out.isolated_nodes.front()) +
                          " has zero degree; D^-1 is undefined");
  }
  out.stochastic = {lap * inv.cast<Complex>().asDiagonal(), SymmetryClass::Stochastic};
  out.quantum = {inv_sqrt.cast<Complex>().asDiagonal() * lap * inv_sqrt.cast<Complex>().asDiagonal(),
                 SymmetryClass::Hermitian};
  return out;
}

ComplexMatrix fiedler_map(const ComplexMatrix& lap) { return lap.adjoint() * lap; }

GoogleMatrix google_matrix(const Graph& g, double damping) {
  if (!(damping > 0.0 && damping <= 1.0)) throw ValidationError("damping must lie in (0, 1]");
  const Index n = g.node_count();
  if (n == 0) throw ValidationError("Google matrix of an empty graph");

  // Transition weight from u to v sits in column u, row v.
  const RealMatrix transitions = g.weight_matrix().transpose();
  GoogleMatrix out;
  out.damping = damping;
  out.matrix = RealMatrix(n, n);
  const double uniform = 1.0 / static_cast<double>(n);
  for (Index col = 0; col < n; ++col) {
    const double total = transitions.col(col).sum();
    if (total > 0.0) {
      out.matrix.col(col) = transitions.col(col) / total;
    } else {
      out.matrix.col(col).setConstant(uniform);
      out.dangling_nodes.push_back(col);
    }
  }
  out.matrix = damping * out.matrix;
  out.matrix.array() += (1.0 - damping) * uniform;
  return out;
}

}  // namespace qnet
