#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qnet/graph.hpp"
#include "qnet/master_equation.hpp"
#include "qnet/operators.hpp"
#include "qnet/tolerances.hpp"
#include "qnet/types.hpp"

namespace qnet {

enum class RankVariant { Classical, Adiabatic, Szegedy, Interpolated, QuantumStochastic };

std::string to_string(RankVariant v);

struct RankingResult {
  RankVariant variant = RankVariant::Classical;
  std::vector<double> scores;  // non-negative, sum 1
  std::vector<double> variance;  // Szegedy fluctuations
  std::optional<double> ground_eigenvalue;  // adiabatic
  std::optional<double> alpha;  // interpolated
  std::optional<double> convergence_time;  // Lindblad variants
  bool converged = true;
  // Largest |tr(rho) - 1| seen before renormalisation, and smallest state
  // eigenvalue at the convergence checkpoints (Lindblad variants).
  double max_trace_drift = 0.0;
  double min_eigenvalue = 0.0;
  std::size_t iterations = 0;
  // Adiabatic: every ground vector when the ground space is degenerate.
  std::vector<std::vector<double>> ground_vectors;
  bool degenerate = false;
};

/// Power iteration p <- G p from the uniform vector until ||Gp - p||_1 <= tol.
RankingResult classical_pagerank(const GoogleMatrix& g, double tol = 1e-13,
                                 std::size_t max_iterations = 100000);

/// h^p = (I - G)^T (I - G); its ground state is the PageRank vector.
RealMatrix pagerank_hamiltonian(const GoogleMatrix& g);

/// Ground state of h^p by exact diagonalisation, sign-fixed and
/// L1-normalised. `degeneracy_tol` bounds the gap below which further
/// eigenvectors are reported as ground states.
RankingResult adiabatic_rank(const GoogleMatrix& g, double degeneracy_tol = 1e-10);

enum class SzegedyRegister { Departure, Arrival };

/// Dense Szegedy operators on the N^2 edge space, basis |i>_1 |k>_2 at
/// index i * N + k. Intended for inspection and tests at small N.
struct SzegedyOperators {
  ComplexMatrix projector;  // sum_i |psi_i><psi_i|
  ComplexMatrix swap;
  ComplexMatrix step;  // S (2 Pi - 1)
};
SzegedyOperators szegedy_operators(const GoogleMatrix& g);

inline constexpr Index kSzegedyMaxEdgeSpace = 4096;

/// Walks sum_i |psi_i> / sqrt(N) for `steps` steps of U^2, U = S(2 Pi - 1),
/// and averages the register distribution over steps 1..T.
RankingResult szegedy_rank(const GoogleMatrix& g, std::size_t steps,
                           SzegedyRegister reg = SzegedyRegister::Arrival);

enum class JumpForm {
  Transfer,  // sqrt(G_ij) |i><j|
  Dephasing,  // sqrt(G_ij) |i><i|
};

struct LindbladRankOptions {
  double damping = 0.85;
  double t_final = 200.0;
  // Non-positive means the generator's default step.
  double dt = 0.0;
  // Convergence: max |rho(t + window) - rho(t)| <= threshold.
  double window = 1.0;
  double threshold = 1e-8;
  JumpForm jumps = JumpForm::Transfer;
  Tolerances tol = kDefaultTolerances;
};

/// Lindbladian -i c [H, rho] + d D[rho] with H the symmetrised adjacency and
/// jumps built from the Google matrix of g.
Lindbladian ranking_lindbladian(const Graph& g, double coherent_weight, double dissipative_weight,
                                double damping, JumpForm jumps);

/// drho/dt = -i (1 - alpha)[H, rho] + alpha D[rho], integrated from I/N
/// until stationary; scores are the diagonal of the final state.
RankingResult interpolated_rank(const Graph& g, double alpha,
                                const LindbladRankOptions& options = {});

/// Quantum stochastic walk activity: unit weights on both the Hamiltonian
/// and the dissipator unless overridden.
RankingResult qsw_activity(const Graph& g, const LindbladRankOptions& options = {},
                           double coherent_weight = 1.0, double dissipative_weight = 1.0);

}  // namespace qnet
