#include "qnet/walk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qnet/error.hpp"
#include "qnet/operators.hpp"

namespace qnet {

ComplexMatrix walk_generator(const Graph& g, GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::Adjacency:
      return hermitian_adjacency(g);
    case GeneratorKind::QuantumLaplacian:
      return build_operators(g).quantum.matrix;
  }
  throw ValidationError("unknown generator kind");
}

ComplexMatrix basis_state(Index n, Index node) {
  if (node < 0 || node >= n) throw ValidationError("basis state node out of range");
  ComplexMatrix rho = ComplexMatrix::Zero(n, n);
  rho(node, node) = 1.0;
  return rho;
}

ComplexMatrix pure_state(const ComplexVector& psi) {
  const double norm = psi.norm();
  if (!(norm > 0.0)) throw ValidationError("state vector must be non-zero");
  const ComplexVector unit = psi / norm;
  return unit * unit.adjoint();
}

ComplexMatrix uniform_superposition(Index n) {
  return ComplexMatrix::Constant(n, n, Complex(1.0 / static_cast<double>(n), 0.0));
}

ComplexMatrix maximally_mixed(Index n) {
  return ComplexMatrix::Identity(n, n) / static_cast<double>(n);
}

WalkSpec make_walk_spec(const Graph& g, GeneratorKind kind, ComplexMatrix initial_state,
                        std::vector<double> times) {
  WalkSpec spec{walk_generator(g, kind), std::move(initial_state), std::move(times)};
  if (kind == GeneratorKind::QuantumLaplacian) {
    const RealVector strength = g.strengths();
    for (Index i = 0; i < g.node_count(); ++i) {
      if (strength(i) == 0.0 && i < spec.initial_state.rows() &&
          std::abs(spec.initial_state(i, i)) > 0.0) {
        throw ValidationError("walk requested on isolated node " + std::to_string(i) +
                              " where L_Q is undefined");
      }
    }
  }
  return spec;
}

namespace {

void validate_spec(const WalkSpec& spec, const Tolerances& tol) {
  require_hermitian(spec.generator, tol);
  if (spec.initial_state.rows() != spec.generator.rows() ||
      spec.initial_state.cols() != spec.generator.cols()) {
    throw ValidationError("initial state and generator dimensions differ");
  }
  require_density(spec.initial_state, tol);
}

}  // namespace

OccupationResult evolve(const WalkSpec& spec, const Tolerances& tol) {
  validate_spec(spec, tol);
  const EigenDecomposition eig = hermitian_eig(spec.generator, std::nullopt, tol);
  const Index n = spec.generator.rows();
  const ComplexMatrix& v = eig.eigenvectors();
  const ComplexMatrix rho_eigen = v.adjoint() * spec.initial_state * v;

  OccupationResult out;
  out.times = spec.times;
  out.probabilities.assign(static_cast<std::size_t>(n), std::vector<double>(spec.times.size()));
  for (std::size_t k = 0; k < spec.times.size(); ++k) {
    ComplexVector phases(n);
    for (Index j = 0; j < n; ++j) phases(j) = std::exp(-kI * eig.eigenvalues()(j) * spec.times[k]);
    // rho(t) = V diag(phase) W diag(phase)^* V^+ with W = V^+ rho V.
    const ComplexMatrix rotated = phases.asDiagonal() * rho_eigen * phases.conjugate().asDiagonal();
    const ComplexMatrix vr = v * rotated;
    for (Index i = 0; i < n; ++i) {
      out.probabilities[i][k] = vr.row(i).dot(v.row(i)).real();
    }
  }

  out.average.assign(static_cast<std::size_t>(n), 0.0);
  out.variance.assign(static_cast<std::size_t>(n), 0.0);
  if (!spec.times.empty()) {
    const double count = static_cast<double>(spec.times.size());
    for (Index i = 0; i < n; ++i) {
      const auto& series = out.probabilities[i];
      const double mean = std::accumulate(series.begin(), series.end(), 0.0) / count;
      double var = 0.0;
      for (double p : series) var += (p - mean) * (p - mean);
      out.average[i] = mean;
      out.variance[i] = var / count;
    }
  }
  return out;
}

OccupationResult long_time_average(const WalkSpec& spec, const Tolerances& tol) {
  validate_spec(spec, tol);
  const EigenDecomposition eig = hermitian_eig(spec.generator, std::nullopt, tol);
  const Index n = spec.generator.rows();
  const ComplexMatrix& v = eig.eigenvectors();
  const ComplexMatrix w = v.adjoint() * spec.initial_state * v;
  const auto& spaces = eig.eigenspaces();
  const std::size_t m = spaces.size();

  // c[i](j, k) = <i| P_j rho P_k |i>.
  auto coefficient = [&](Index i, const Eigenspace& a, const Eigenspace& b) {
    const auto left = v.row(i).segment(a.begin, a.size);
    const auto right = v.row(i).segment(b.begin, b.size);
    const ComplexMatrix block = w.block(a.begin, b.begin, a.size, b.size);
    return (left * block * right.adjoint())(0, 0);
  };

  OccupationResult out;
  out.probabilities.assign(static_cast<std::size_t>(n), {});
  out.average.assign(static_cast<std::size_t>(n), 0.0);
  out.variance.assign(static_cast<std::size_t>(n), 0.0);
  for (Index i = 0; i < n; ++i) {
    double p = 0.0;
    for (const Eigenspace& s : spaces) p += coefficient(i, s, s).real();
    out.average[i] = p;
  }

  // Off-diagonal terms oscillate at the Bohr frequencies lambda_j - lambda_k;
  // pairs sharing a frequency interfere, so group them before squaring.
  struct Gap {
    double value;
    std::size_t j;
    std::size_t k;
  };
  std::vector<Gap> gaps;
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k)
      if (j != k) gaps.push_back({spaces[j].eigenvalue - spaces[k].eigenvalue, j, k});
  std::sort(gaps.begin(), gaps.end(), [](const Gap& a, const Gap& b) { return a.value < b.value; });
  const double gap_tol = 2.0 * eig.degeneracy_tolerance();
  for (Index i = 0; i < n; ++i) {
    double var = 0.0;
    std::size_t start = 0;
    while (start < gaps.size()) {
      std::size_t end = start + 1;
      while (end < gaps.size() && gaps[end].value - gaps[end - 1].value <= gap_tol) ++end;
      Complex amplitude{0.0, 0.0};
      for (std::size_t g = start; g < end; ++g) {
        amplitude += coefficient(i, spaces[gaps[g].j], spaces[gaps[g].k]);
      }
      var += std::norm(amplitude);
      start = end;
    }
    out.variance[i] = var;
  }
  return out;
}

QuantumnessResult quantumness(const Graph& g, const ComplexMatrix& rho0, const Tolerances& tol) {
  if (g.directed()) throw ValidationError("quantumness needs an undirected graph");
  if (g.node_count() == 0) throw ValidationError("quantumness of an empty graph");
  const OperatorBundle ops = build_operators(g);
  if (!ops.isolated_nodes.empty() || g.component_count() > 1) {
    throw NumericalError("L_Q ground state is degenerate: graph is disconnected");
  }
  if (rho0.rows() != g.node_count() || rho0.cols() != g.node_count()) {
    throw ValidationError("initial state dimension does not match the graph");
  }
  require_density(rho0, tol);
  const EigenDecomposition eig = hermitian_eig(ops.quantum.matrix, std::nullopt, tol);
  if (eig.eigenspaces().front().size != 1) {
    throw NumericalError("L_Q ground state is degenerate: graph is disconnected");
  }
  ComplexVector phi = eig.eigenvectors().col(0);
  // Fix the global phase so the largest entry is real and positive.
  Index big = 0;
  phi.cwiseAbs().maxCoeff(&big);
  phi *= std::conj(phi(big)) / std::abs(phi(big));

  QuantumnessResult out;
  out.epsilon = 1.0 - (phi.adjoint() * rho0 * phi)(0, 0).real();
  out.ground_state = phi;
  return out;
}

QuantumnessResult quantumness(const Graph& g, QuantumnessReference reference,
                              const Tolerances& tol) {
  const Index n = g.node_count();
  if (n == 0) throw ValidationError("quantumness of an empty graph");
  return quantumness(g,
                     reference == QuantumnessReference::UniformPure ? uniform_superposition(n)
                                                                    : maximally_mixed(n),
                     tol);
}

ChiralReport chiral_transport_report(const Graph& g, NodeId source, NodeId target,
                                     const std::vector<double>& times, const Tolerances& tol) {
  const Index n = g.node_count();
  if (source < 0 || source >= n || target < 0 || target >= n) {
    throw ValidationError("source/target node out of range");
  }
  const ComplexMatrix h = hermitian_adjacency(g);
  const ComplexMatrix rho0 = basis_state(n, source);
  const OccupationResult fwd = evolve({h, rho0, times}, tol);
  const OccupationResult rev = evolve({h.conjugate(), rho0, times}, tol);

  ChiralReport out;
  out.times = times;
  out.forward = fwd.probabilities[target];
  out.time_reversed = rev.probabilities[target];
  for (Index i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < times.size(); ++k) {
      const double d = std::abs(fwd.probabilities[i][k] - rev.probabilities[i][k]);
      out.max_site_deviation = std::max(out.max_site_deviation, d);
    }
  }
  for (std::size_t k = 0; k < times.size(); ++k) {
    const double bias = out.forward[k] - out.time_reversed[k];
    if (std::abs(bias) > std::abs(out.max_directional_bias)) out.max_directional_bias = bias;
  }
  out.symmetry_broken = out.max_site_deviation > 1e-9;
  return out;
}

}  // namespace qnet
