#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qnet/graph.hpp"
#include "qnet/linkage.hpp"
#include "qnet/tolerances.hpp"
#include "qnet/types.hpp"

namespace qnet {

enum class DensityKind { RescaledLaplacian, Propagator, External };

/// Unit-trace, Hermitian, positive semi-definite operator. Construction
/// validates the invariants.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix matrix, DensityKind kind = DensityKind::External,
                         std::optional<double> tau = std::nullopt,
                         const Tolerances& tol = kDefaultTolerances);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  DensityKind kind() const noexcept { return kind_; }
  std::optional<double> tau() const noexcept { return tau_; }
  Index dimension() const noexcept { return matrix_.rows(); }
  /// Ascending eigenvalues.
  RealVector spectrum() const;

 private:
  ComplexMatrix matrix_;
  DensityKind kind_;
  std::optional<double> tau_;
};

/// rho = L / tr(L) for the combinatorial Laplacian of an undirected graph.
DensityMatrix density_rescaled(const Graph& g);
/// rho = exp(-tau L) / tr exp(-tau L).
DensityMatrix density_propagator(const Graph& g, double tau);
DensityMatrix density_propagator(const ComplexMatrix& lap, double tau);

/// Von Neumann entropy in bits; eigenvalues at or below tol.log_floor count
/// as zero.
double vn_entropy(const DensityMatrix& rho, const Tolerances& tol = kDefaultTolerances);

struct RelativeEntropy {
  double bits = 0.0;  // +inf on support violation
  bool support_violation = false;
  std::string diagnostic;
};

/// D(rho||sigma) = tr[rho (log2 rho - log2 sigma)].
RelativeEntropy kl_divergence(const DensityMatrix& rho, const DensityMatrix& sigma,
                              const Tolerances& tol = kDefaultTolerances);

/// Parametric network family. Only Erdos-Renyi ships: theta = {p} and
/// sigma(theta) is the propagator of the expected Laplacian p (N I - J).
struct ModelParams {
  enum class Family { ErdosRenyi };
  Family family = Family::ErdosRenyi;
  Index nodes = 0;
  std::vector<double> theta;
  double tau = 1.0;
};

ComplexMatrix expected_laplacian(const ModelParams& model);
DensityMatrix model_density(const ModelParams& model);

struct LogLikelihood {
  double bits = 0.0;  // -inf on support violation
  bool support_violation = false;
};

/// log2 L(theta) = tr[rho log2 sigma(theta)].
LogLikelihood log_likelihood(const DensityMatrix& rho, const DensityMatrix& sigma,
                             const Tolerances& tol = kDefaultTolerances);
LogLikelihood log_likelihood(const DensityMatrix& rho, const ModelParams& model,
                             const Tolerances& tol = kDefaultTolerances);

struct LikelihoodScan {
  std::vector<double> grid;
  std::vector<double> log_likelihood;
  std::vector<double> kl;
  std::size_t best = 0;  // argmax log-likelihood
};

/// Scans the ER link probability over `grid` at resolution tau.
LikelihoodScan scan_erdos_renyi(const DensityMatrix& rho, const std::vector<double>& grid,
                                double tau, const Tolerances& tol = kDefaultTolerances);

/// S(mu) - (S(rho) + S(sigma)) / 2 with mu = (rho + sigma) / 2.
double js_divergence(const DensityMatrix& rho, const DensityMatrix& sigma,
                     const Tolerances& tol = kDefaultTolerances);
double js_distance(const DensityMatrix& rho, const DensityMatrix& sigma,
                   const Tolerances& tol = kDefaultTolerances);

struct LayerStack {
  std::vector<Graph> layers;
  std::vector<std::string> labels;
};

struct LayerClustering {
  RealMatrix distances;
  Dendrogram dendrogram;
  std::vector<Graph> aggregates;  // aggregate layer created by each merge
};

/// Undirected edge-weight sum of the given layers.
Graph aggregate_layers(const std::vector<Graph>& layers);

/// Average-linkage clustering of layers by JS distance between their
/// propagator densities. `threads` > 1 parallelises the pairwise matrix.
LayerClustering layer_cluster(const LayerStack& stack, double tau, unsigned threads = 1);

struct SubadditivityCounterexample {
  Graph first;
  Graph second;
  double union_entropy = 0.0;
  double entropy_sum = 0.0;
};

/// Searches random small graph pairs for S(G1 + G2) > S(G1) + S(G2) under the
/// rescaled-Laplacian density (disjoint union). Returns what it finds.
std::vector<SubadditivityCounterexample> find_subadditivity_violations(std::size_t trials,
                                                                       std::uint64_t seed,
                                                                       Index max_nodes = 6);

Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace qnet
