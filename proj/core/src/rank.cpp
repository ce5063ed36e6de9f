#include "qnet/rank.hpp"

#include <algorithm>
#include <cmath>

#include "qnet/error.hpp"
#include "qnet/master_equation.hpp"
#include "qnet/spectral.hpp"

namespace qnet {

std::string to_string(RankVariant v) {
  switch (v) {
    case RankVariant::Classical: return "classical";
    case RankVariant::Adiabatic: return "adiabatic";
    case RankVariant::Szegedy: return "szegedy";
    case RankVariant::Interpolated: return "interpolated";
    case RankVariant::QuantumStochastic: return "qsw";
  }
  return "unknown";
}

namespace {

void require_stochastic(const GoogleMatrix& g) {
  if (g.matrix.rows() != g.matrix.cols() || g.matrix.rows() == 0) {
    throw ValidationError("Google matrix must be square and non-empty");
  }
  if (g.matrix.minCoeff() < 0.0) throw ValidationError("Google matrix has negative entries");
  const double worst = (g.matrix.colwise().sum().array() - 1.0).abs().maxCoeff();
  if (worst > 1e-10) throw ValidationError("Google matrix is not column-stochastic");
}

std::vector<double> to_std(const RealVector& v) { return {v.data(), v.data() + v.size()}; }

// Sign-fix to the non-negative orthant and L1-normalise.
RealVector positive_unit(RealVector v) {
  if (v.sum() < 0.0) v = -v;
  v = v.cwiseMax(0.0);
  return v / v.sum();
}

}  // namespace

RankingResult classical_pagerank(const GoogleMatrix& g, double tol, std::size_t max_iterations) {
  require_stochastic(g);
  const Index n = g.size();
  RealVector p = RealVector::Constant(n, 1.0 / static_cast<double>(n));
  RankingResult out;
  out.variant = RankVariant::Classical;
  out.converged = false;
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    RealVector next = g.matrix * p;
    next /= next.sum();
    const double residual = (next - p).lpNorm<1>();
    p = std::move(next);
    if (residual <= tol) {
      out.converged = true;
      out.iterations = it;
      break;
    }
  }
  if (!out.converged) {
    throw NumericalError("PageRank power iteration did not converge in " +
                         std::to_string(max_iterations) + " iterations");
  }
  out.scores = to_std(p);
  return out;
}

RealMatrix pagerank_hamiltonian(const GoogleMatrix& g) {
  const RealMatrix m = RealMatrix::Identity(g.size(), g.size()) - g.matrix;
  return m.transpose() * m;
}

RankingResult adiabatic_rank(const GoogleMatrix& g, double degeneracy_tol) {
  require_stochastic(g);
  const RealMatrix hp = pagerank_hamiltonian(g);
  // Real symmetric: the real solver is exact and cheaper than the complex one.
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(hp);
  if (solver.info() != Eigen::Success) throw NumericalError("h^p eigensolver failed");
  const RealVector& values = solver.eigenvalues();

  RankingResult out;
  out.variant = RankVariant::Adiabatic;
  out.ground_eigenvalue = values(0);
  Index ground = 1;
  while (ground < values.size() && values(ground) - values(0) <= degeneracy_tol) ++ground;
  out.degenerate = ground > 1;
  for (Index k = 0; k < ground; ++k) {
    out.ground_vectors.push_back(to_std(positive_unit(solver.eigenvectors().col(k))));
  }
  out.scores = out.ground_vectors.front();
  return out;
}

SzegedyOperators szegedy_operators(const GoogleMatrix& g) {
  require_stochastic(g);
  const Index n = g.size();
  if (n * n > kSzegedyMaxEdgeSpace) throw ValidationError("Szegedy edge space exceeds the cap");
  const Index dim = n * n;
  ComplexMatrix psi = ComplexMatrix::Zero(dim, n);
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k) psi(i * n + k, i) = std::sqrt(g.matrix(k, i));

  SzegedyOperators out;
  out.projector = psi * psi.adjoint();
  out.swap = ComplexMatrix::Zero(dim, dim);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) out.swap(i * n + j, j * n + i) = 1.0;
  out.step = out.swap * (2.0 * out.projector - ComplexMatrix::Identity(dim, dim));
  return out;
}

RankingResult szegedy_rank(const GoogleMatrix& g, std::size_t steps, SzegedyRegister reg) {
  require_stochastic(g);
  const Index n = g.size();
  if (n * n > kSzegedyMaxEdgeSpace) {
    throw ValidationError("Szegedy edge space " + std::to_string(n * n) + " exceeds the cap of " +
                          std::to_string(kSzegedyMaxEdgeSpace));
  }
  if (steps < 1) throw ValidationError("Szegedy walk needs at least one step");

  // The state is held as an N x N amplitude table phi(i, k) for |i>_1 |k>_2;
  // amp(i, k) = sqrt(G(k, i)) is |psi_i> restricted to row i.
  const RealMatrix amp = g.matrix.transpose().cwiseSqrt();
  ComplexMatrix phi = amp.cast<Complex>() / std::sqrt(static_cast<double>(n));

  RealVector mean = RealVector::Zero(n);
  RealVector mean_sq = RealVector::Zero(n);
  for (std::size_t t = 1; t <= steps; ++t) {
    // One walk step is U^2 (both reflections of the bipartite walk).
    for (int half = 0; half < 2; ++half) {
      // Reflection 2 Pi - 1: overlaps <psi_i|phi> are row-wise dot products.
      const ComplexVector overlap = (amp.cast<Complex>().cwiseProduct(phi)).rowwise().sum();
      const ComplexMatrix projected = overlap.asDiagonal() * amp.cast<Complex>();
      phi = (2.0 * projected - phi).transpose().eval();
    }

    const RealVector p = reg == SzegedyRegister::Arrival
                             ? RealVector(phi.cwiseAbs2().colwise().sum().transpose())
                             : RealVector(phi.cwiseAbs2().rowwise().sum());
    mean += p;
    mean_sq += p.cwiseAbs2();
  }
  const double count = static_cast<double>(steps);
  mean /= count;
  mean_sq /= count;

  RankingResult out;
  out.variant = RankVariant::Szegedy;
  out.iterations = steps;
  out.scores = to_std(mean / mean.sum());
  out.variance = to_std((mean_sq - mean.cwiseAbs2()).cwiseMax(0.0));
  return out;
}

Lindbladian ranking_lindbladian(const Graph& g, double coherent_weight, double dissipative_weight,
                                double damping, JumpForm jumps) {
  const GoogleMatrix google = google_matrix(g, damping);
  Lindbladian l(hermitian_adjacency(g), coherent_weight, dissipative_weight);
  const Index n = google.size();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const double rate = google.matrix(i, j);
      if (rate <= 0.0) continue;
      if (jumps == JumpForm::Transfer) {
        l.add_transition({i, j, rate});
      } else {
        l.add_transition({i, i, rate});
      }
    }
  }
  return l;
}

namespace {

RankingResult integrate_to_steady_state(const Lindbladian& l, const LindbladRankOptions& options) {
  const Index n = l.dimension();
  if (n == 0) throw ValidationError("ranking needs a non-empty graph");
  if (!(options.t_final > 0.0)) throw ValidationError("t_final must be positive");
  if (!(options.window > 0.0)) throw ValidationError("convergence window must be positive");
  const double dt = options.dt > 0.0 ? options.dt : l.default_step();
  const auto window_steps =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(options.window / dt)));
  const auto total_steps = static_cast<std::size_t>(std::ceil(options.t_final / dt - 1e-9));

  MasterEquationStepper stepper(l.as_superoperator(),
                                ComplexMatrix::Identity(n, n) / static_cast<double>(n), dt,
                                options.tol);
  RankingResult out;
  out.converged = false;
  out.min_eigenvalue = 1.0 / static_cast<double>(n);
  ComplexMatrix checkpoint = stepper.state();
  while (stepper.steps_taken() < total_steps) {
    stepper.step();
    const bool at_window = stepper.steps_taken() % window_steps == 0;
    if (!at_window && stepper.steps_taken() != total_steps) continue;
    out.min_eigenvalue = std::min(out.min_eigenvalue, stepper.check_positivity());
    if (at_window) {
      const double change = (stepper.state() - checkpoint).cwiseAbs().maxCoeff();
      checkpoint = stepper.state();
      if (change <= options.threshold) {
        out.converged = true;
        out.convergence_time = stepper.time();
        break;
      }
    }
  }
  out.iterations = stepper.steps_taken();
  out.max_trace_drift = stepper.max_trace_drift();
  RealVector diag = stepper.state().diagonal().real().cwiseMax(0.0);
  out.scores = to_std(diag / diag.sum());
  return out;
}

}  // namespace

RankingResult interpolated_rank(const Graph& g, double alpha, const LindbladRankOptions& options) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ValidationError("alpha must lie in (0, 1]");
  const Lindbladian l = ranking_lindbladian(g, 1.0 - alpha, alpha, options.damping, options.jumps);
  RankingResult out = integrate_to_steady_state(l, options);
  out.variant = RankVariant::Interpolated;
  out.alpha = alpha;
  return out;
}

RankingResult qsw_activity(const Graph& g, const LindbladRankOptions& options,
                           double coherent_weight, double dissipative_weight) {
  if (!(dissipative_weight > 0.0)) {
    throw ValidationError("the dissipative weight must be positive for a stationary state");
  }
  const Lindbladian l =
      ranking_lindbladian(g, coherent_weight, dissipative_weight, options.damping, options.jumps);
  RankingResult out = integrate_to_steady_state(l, options);
  out.variant = RankVariant::QuantumStochastic;
  return out;
}

}  // namespace qnet
