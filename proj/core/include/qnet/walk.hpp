#pragma once

#include <optional>
#include <vector>

#include "qnet/graph.hpp"
#include "qnet/spectral.hpp"
#include "qnet/tolerances.hpp"
#include "qnet/types.hpp"

namespace qnet {

enum class GeneratorKind { Adjacency, QuantumLaplacian };

/// Hermitian walk generator for g: the (phase-carrying) adjacency, or
/// L_Q = D^-1/2 (D - A) D^-1/2.
ComplexMatrix walk_generator(const Graph& g, GeneratorKind kind = GeneratorKind::Adjacency);

ComplexMatrix basis_state(Index n, Index node);
ComplexMatrix pure_state(const ComplexVector& psi);
/// |u><u| with u = (1, ..., 1)/sqrt(N).
ComplexMatrix uniform_superposition(Index n);
ComplexMatrix maximally_mixed(Index n);

struct WalkSpec {
  ComplexMatrix generator;
  ComplexMatrix initial_state;
  std::vector<double> times;
};

struct OccupationResult {
  std::vector<double> times;
  // probabilities[node][t]
  std::vector<std::vector<double>> probabilities;
  // Time average over the grid (evolve) or the infinite-time average.
  std::vector<double> average;
  // Fluctuation variance of p_i(t) about the average.
  std::vector<double> variance;
};

/// Builds a spec from a graph. With the L_Q generator, isolated nodes have no
/// defined dynamics; a state with weight on one is rejected.
WalkSpec make_walk_spec(const Graph& g, GeneratorKind kind, ComplexMatrix initial_state,
                        std::vector<double> times);

/// p_i(t) = <i| U_t rho(0) U_t^+ |i> with U_t = exp(-i Q t).
OccupationResult evolve(const WalkSpec& spec, const Tolerances& tol = kDefaultTolerances);

/// Infinite-time average sum_j <i| P_j rho(0) P_j |i> over eigenspace
/// projectors P_j, plus the long-time variance of p_i(t). `spec.times` is
/// ignored.
OccupationResult long_time_average(const WalkSpec& spec,
                                   const Tolerances& tol = kDefaultTolerances);

enum class QuantumnessReference { UniformPure, MaximallyMixed };

struct QuantumnessResult {
  double epsilon = 0.0;
  ComplexVector ground_state;  // phi_0 of L_Q, non-negative entries
};

/// epsilon = 1 - <phi_0| rho_0 |phi_0> for the ground state of L_Q.
/// Throws NumericalError if the ground state is degenerate (disconnected g).
QuantumnessResult quantumness(const Graph& g, const ComplexMatrix& rho0,
                              const Tolerances& tol = kDefaultTolerances);
QuantumnessResult quantumness(const Graph& g,
                              QuantumnessReference reference = QuantumnessReference::UniformPure,
                              const Tolerances& tol = kDefaultTolerances);

struct ChiralReport {
  std::vector<double> times;
  // Target-site probability under H and under conj(H).
  std::vector<double> forward;
  std::vector<double> time_reversed;
  // max over t and all sites of |p_H - p_conj(H)|.
  double max_site_deviation = 0.0;
  // max over t of forward - time_reversed at the target (signed bias with
  // the largest magnitude).
  double max_directional_bias = 0.0;
  bool symmetry_broken = false;
};

/// Compares transport from `source` under the phased adjacency H and its
/// time-reversed partner conj(H).
ChiralReport chiral_transport_report(const Graph& g, NodeId source, NodeId target,
                                     const std::vector<double>& times,
                                     const Tolerances& tol = kDefaultTolerances);

}  // namespace qnet
