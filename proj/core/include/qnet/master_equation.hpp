#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qnet/tolerances.hpp"
#include "qnet/types.hpp"

namespace qnet {

/// Right-hand side of d(rho)/dt = L[rho]. Implementations must be
/// trace-annihilating.
using Superoperator = std::function<ComplexMatrix(const ComplexMatrix&)>;

/// Rank-one jump operator sqrt(rate) |to><from|. `to == from` gives a pure
/// dephasing channel on that site.
struct Transition {
  Index to = 0;
  Index from = 0;
  double rate = 0.0;
};

/// Lindblad generator
///   L[rho] = -i c [H, rho] + d sum_k (L_k rho L_k^+ - 1/2 {L_k^+ L_k, rho})
/// with c = coherent_weight and d = dissipative_weight. Jump operators are
/// either dense matrices or rank-one transitions (evaluated in O(N^2)).
class Lindbladian {
 public:
  explicit Lindbladian(ComplexMatrix hamiltonian, double coherent_weight = 1.0,
                       double dissipative_weight = 1.0);

  Lindbladian& add_jump(ComplexMatrix jump);
  Lindbladian& add_transition(Transition t);

  const ComplexMatrix& hamiltonian() const noexcept { return hamiltonian_; }
  double coherent_weight() const noexcept { return coherent_weight_; }
  double dissipative_weight() const noexcept { return dissipative_weight_; }
  const std::vector<ComplexMatrix>& jumps() const noexcept { return jumps_; }
  const std::vector<Transition>& transitions() const noexcept { return transitions_; }
  Index dimension() const noexcept { return hamiltonian_.rows(); }

  ComplexMatrix operator()(const ComplexMatrix& rho) const;

  Superoperator as_superoperator() const;

  /// Default step 0.01 / max(max|H_ij| * c, total outgoing rate * d, tiny).
  double default_step() const;

 private:
  ComplexMatrix hamiltonian_;
  double coherent_weight_;
  double dissipative_weight_;
  std::vector<ComplexMatrix> jumps_;
  std::vector<Transition> transitions_;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<ComplexMatrix> states;
};

struct IntegrationOptions {
  // Keep every n-th step in the trajectory (the final state is always kept).
  std::size_t store_every = 1;
  // Run the eigenvalue positivity check on stored states.
  bool check_positivity = true;
  Tolerances tol = kDefaultTolerances;
};

/// Classic fixed-step RK4 integrator. Every step is re-hermitised and
/// renormalised to unit trace after the drift guard has been checked.
class MasterEquationStepper {
 public:
  MasterEquationStepper(Superoperator rhs, ComplexMatrix rho0, double dt,
                        Tolerances tol = kDefaultTolerances);

  void step();
  /// Throws IntegrationError if the state has an eigenvalue below
  /// tol.negative_eigenvalue.
  /// Returns the smallest eigenvalue.
  double check_positivity() const;

  const ComplexMatrix& state() const noexcept { return rho_; }
  std::size_t steps_taken() const noexcept { return steps_; }
  double time() const noexcept { return static_cast<double>(steps_) * dt_; }
  double dt() const noexcept { return dt_; }
  /// Largest |tr - 1| observed before renormalisation.
  double max_trace_drift() const noexcept { return max_drift_; }

 private:
  Superoperator rhs_;
  ComplexMatrix rho_;
  double dt_;
  Tolerances tol_;
  std::size_t steps_ = 0;
  double max_drift_ = 0.0;
};

/// Integrates from t = 0 to t_final (rounded up to a whole number of steps).
/// The initial state is the first trajectory entry; timestamps are k * dt.
Trajectory integrate_master_equation(const Superoperator& rhs, const ComplexMatrix& rho0,
                                     double t_final, double dt,
                                     const IntegrationOptions& options = {});

}  // namespace qnet
