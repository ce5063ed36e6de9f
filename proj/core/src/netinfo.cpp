#include "qnet/netinfo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "qnet/error.hpp"
#include "qnet/generators.hpp"
#include "qnet/operators.hpp"
#include "qnet/parallel.hpp"
#include "qnet/random.hpp"
#include "qnet/spectral.hpp"

namespace qnet {

DensityMatrix::DensityMatrix(ComplexMatrix matrix, DensityKind kind, std::optional<double> tau,
                             const Tolerances& tol)
    : matrix_(std::move(matrix)), kind_(kind), tau_(tau) {
  require_density(matrix_, tol);
  matrix_ = hermitian_part(matrix_);
}

RealVector DensityMatrix::spectrum() const {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(matrix_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

DensityMatrix density_rescaled(const Graph& g) {
  if (g.directed()) throw ValidationError("rescaled-Laplacian density needs an undirected graph");
  const ComplexMatrix lap = laplacian(g);
  const double trace = lap.trace().real();
  if (!(trace > 0.0)) throw ValidationError("rescaled-Laplacian density of an edgeless graph");
  return DensityMatrix(lap / trace, DensityKind::RescaledLaplacian);
}

DensityMatrix density_propagator(const ComplexMatrix& lap, double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw ValidationError("tau must be positive");
  const EigenDecomposition eig = hermitian_eig(lap);
  // Shift by the smallest eigenvalue so the largest weight is exactly 1;
  // this cancels in the normalisation and avoids overflow for large tau.
  const double shift = eig.eigenvalues()(0);
  const ComplexMatrix prop = eig.apply([&](double l) { return Complex(std::exp(-tau * (l - shift))); });
  return DensityMatrix(prop / prop.trace().real(), DensityKind::Propagator, tau);
}

DensityMatrix density_propagator(const Graph& g, double tau) {
  if (g.directed()) throw ValidationError("propagator density needs an undirected graph");
  if (g.node_count() == 0) throw ValidationError("propagator density of an empty graph");
  return density_propagator(laplacian(g), tau);
}

namespace {

double shannon_bits(const RealVector& spectrum, double floor) {
  double s = 0.0;
  for (Index k = 0; k < spectrum.size(); ++k) {
    const double l = spectrum(k);
    if (l > floor) s -= l * std::log2(l);
  }
  return s;
}

// tr[rho log2 sigma]; flags weight of rho outside the support of sigma.
LogLikelihood cross_log(const DensityMatrix& rho, const DensityMatrix& sigma,
                        const Tolerances& tol) {
  if (rho.dimension() != sigma.dimension()) {
    throw ValidationError("density matrices have different dimensions");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sigma.matrix());
  const RealVector& mu = solver.eigenvalues();
  const ComplexMatrix& w = solver.eigenvectors();
  const RealVector weights = (w.adjoint() * rho.matrix() * w).diagonal().real();
  LogLikelihood out;
  double outside = 0.0;
  for (Index k = 0; k < mu.size(); ++k) {
    if (mu(k) > tol.log_floor) {
      out.bits += weights(k) * std::log2(mu(k));
    } else {
      outside += weights(k);
    }
  }
  if (outside > tol.support) {
    out.support_violation = true;
    out.bits = -std::numeric_limits<double>::infinity();
  }
  return out;
}

}  // namespace

double vn_entropy(const DensityMatrix& rho, const Tolerances& tol) {
  return shannon_bits(rho.spectrum(), tol.log_floor);
}

RelativeEntropy kl_divergence(const DensityMatrix& rho, const DensityMatrix& sigma,
                              const Tolerances& tol) {
  const LogLikelihood cross = cross_log(rho, sigma, tol);
  RelativeEntropy out;
  if (cross.support_violation) {
    out.support_violation = true;
    out.bits = std::numeric_limits<double>::infinity();
    out.diagnostic = "rho has weight outside the support of sigma";
    return out;
  }
  out.bits = std::max(0.0, -vn_entropy(rho, tol) - cross.bits);
  return out;
}

ComplexMatrix expected_laplacian(const ModelParams& model) {
  if (model.family != ModelParams::Family::ErdosRenyi) throw ValidationError("unknown model family");
  if (model.theta.size() != 1) throw ValidationError("Erdos-Renyi model takes one parameter p");
  const double p = model.theta[0];
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("Erdos-Renyi p must lie in [0, 1]");
  const Index n = model.nodes;
  if (n < 1) throw ValidationError("model needs at least one node");
  ComplexMatrix lap = ComplexMatrix::Constant(n, n, Complex(-p, 0.0));
  lap.diagonal().setConstant(Complex(p * static_cast<double>(n - 1), 0.0));
  return lap;
}

DensityMatrix model_density(const ModelParams& model) {
  return density_propagator(expected_laplacian(model), model.tau);
}

LogLikelihood log_likelihood(const DensityMatrix& rho, const DensityMatrix& sigma,
                             const Tolerances& tol) {
  return cross_log(rho, sigma, tol);
}

LogLikelihood log_likelihood(const DensityMatrix& rho, const ModelParams& model,
                             const Tolerances& tol) {
  return cross_log(rho, model_density(model), tol);
}

LikelihoodScan scan_erdos_renyi(const DensityMatrix& rho, const std::vector<double>& grid,
                                double tau, const Tolerances& tol) {
  if (grid.empty()) throw ValidationError("likelihood scan needs a non-empty grid");
  LikelihoodScan out;
  out.grid = grid;
  const double entropy = vn_entropy(rho, tol);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const ModelParams model{ModelParams::Family::ErdosRenyi, rho.dimension(), {grid[k]}, tau};
    const LogLikelihood ll = log_likelihood(rho, model, tol);
    out.log_likelihood.push_back(ll.bits);
    out.kl.push_back(ll.support_violation ? std::numeric_limits<double>::infinity()
                                          : -entropy - ll.bits);
    if (ll.bits > out.log_likelihood[out.best]) out.best = k;
  }
  return out;
}

double js_divergence(const DensityMatrix& rho, const DensityMatrix& sigma, const Tolerances& tol) {
  if (rho.dimension() != sigma.dimension()) {
    throw ValidationError("density matrices have different dimensions");
  }
  const DensityMatrix mixture(0.5 * (rho.matrix() + sigma.matrix()));
  const double d = vn_entropy(mixture, tol) - 0.5 * (vn_entropy(rho, tol) + vn_entropy(sigma, tol));
  return std::clamp(d, 0.0, 1.0);
}

double js_distance(const DensityMatrix& rho, const DensityMatrix& sigma, const Tolerances& tol) {
  return std::sqrt(js_divergence(rho, sigma, tol));
}

Graph aggregate_layers(const std::vector<Graph>& layers) {
  if (layers.empty()) throw ValidationError("nothing to aggregate");
  const Index n = layers.front().node_count();
  std::map<std::pair<NodeId, NodeId>, double> weights;
  for (const Graph& layer : layers) {
    if (layer.node_count() != n) throw ValidationError("layers must share the node set");
    for (const Edge& e : layer.edges()) {
      weights[{std::min(e.src, e.dst), std::max(e.src, e.dst)}] += e.weight;
    }
  }
  Graph out(n, false, std::any_of(layers.begin(), layers.end(),
                                  [](const Graph& g) { return g.allows_self_loops(); }));
  for (const auto& [key, w] : weights) out.add_edge(key.first, key.second, w);
  return out;
}

LayerClustering layer_cluster(const LayerStack& stack, double tau, unsigned threads) {
  const std::size_t count = stack.layers.size();
  if (count < 2) throw ValidationError("layer clustering needs at least two layers");
  const Index n = stack.layers.front().node_count();
  for (const Graph& layer : stack.layers) {
    if (layer.node_count() != n) throw ValidationError("layers must share the node set");
  }

  std::vector<std::optional<DensityMatrix>> densities(count);
  parallel_for(count, threads, [&](std::size_t k) {
    densities[k].emplace(density_propagator(stack.layers[k].as_undirected(), tau));
  });

  LayerClustering out;
  const auto size = static_cast<Index>(count);
  out.distances = RealMatrix::Zero(size, size);
  std::vector<std::pair<Index, Index>> pairs;
  for (Index a = 0; a < size; ++a)
    for (Index b = a + 1; b < size; ++b) pairs.emplace_back(a, b);
  parallel_for(pairs.size(), threads, [&](std::size_t k) {
    const auto [a, b] = pairs[k];
    const double d = js_distance(*densities[a], *densities[b]);
    out.distances(a, b) = d;
    out.distances(b, a) = d;
  });

  out.dendrogram = average_linkage(out.distances, LinkageOrder::SmallestFirst);

  // Cluster id -> member layers, to build each merge's aggregate.
  std::vector<std::vector<Index>> members(count);
  for (std::size_t k = 0; k < count; ++k) members[k] = {static_cast<Index>(k)};
  for (const Merge& m : out.dendrogram.merges) {
    std::vector<Index> joined = members[m.a];
    joined.insert(joined.end(), members[m.b].begin(), members[m.b].end());
    std::vector<Graph> layers;
    for (Index k : joined) layers.push_back(stack.layers[k]);
    out.aggregates.push_back(aggregate_layers(layers));
    members.push_back(std::move(joined));
  }
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.node_count() + b.node_count(), false);
  for (const Edge& e : a.edges()) out.add_edge(e.src, e.dst, e.weight);
  for (const Edge& e : b.edges()) {
    out.add_edge(e.src + a.node_count(), e.dst + a.node_count(), e.weight);
  }
  return out;
}

std::vector<SubadditivityCounterexample> find_subadditivity_violations(std::size_t trials,
                                                                       std::uint64_t seed,
                                                                       Index max_nodes) {
  if (max_nodes < 2) throw ValidationError("subadditivity search needs at least two nodes");
  std::vector<SubadditivityCounterexample> found;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = substream(seed, t);
    auto draw = [&] {
      const auto n = static_cast<Index>(2 + uniform_below(rng, static_cast<std::uint64_t>(max_nodes - 1)));
      Graph g = generators::erdos_renyi(n, 0.3 + 0.6 * uniform01(rng), rng);
      if (g.edge_count() == 0) g.add_edge(0, 1);
      return g;
    };
    Graph first = draw();
    Graph second = draw();
    const double s1 = vn_entropy(density_rescaled(first));
    const double s2 = vn_entropy(density_rescaled(second));
    const double s12 = vn_entropy(density_rescaled(disjoint_union(first, second)));
    if (s12 > s1 + s2 + 1e-12) {
      found.push_back({std::move(first), std::move(second), s12, s1 + s2});
    }
  }
  return found;
}

}  // namespace qnet
