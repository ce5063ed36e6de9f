#include "qnet/master_equation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qnet/error.hpp"
#include "qnet/spectral.hpp"

namespace qnet {

Lindbladian::Lindbladian(ComplexMatrix hamiltonian, double coherent_weight,
                         double dissipative_weight)
    : hamiltonian_(std::move(hamiltonian)),
      coherent_weight_(coherent_weight),
      dissipative_weight_(dissipative_weight) {
  require_hermitian(hamiltonian_);
}

Lindbladian& Lindbladian::add_jump(ComplexMatrix jump) {
  if (jump.rows() != dimension() || jump.cols() != dimension()) {
    throw ValidationError("jump operator dimension does not match the Hamiltonian");
  }
  jumps_.push_back(std::move(jump));
  return *this;
}

Lindbladian& Lindbladian::add_transition(Transition t) {
  if (t.to < 0 || t.to >= dimension() || t.from < 0 || t.from >= dimension()) {
    throw ValidationError("transition endpoint out of range");
  }
  if (!(t.rate >= 0.0)) throw ValidationError("transition rate must be non-negative");
  if (t.rate > 0.0) transitions_.push_back(t);
  return *this;
}

ComplexMatrix Lindbladian::operator()(const ComplexMatrix& rho) const {
  ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
  if (coherent_weight_ != 0.0) {
    out.noalias() += (-kI * coherent_weight_) * (hamiltonian_ * rho);
    out.noalias() += (kI * coherent_weight_) * (rho * hamiltonian_);
  }
  if (dissipative_weight_ == 0.0) return out;

  for (const ComplexMatrix& l : jumps_) {
    const ComplexMatrix ldl = l.adjoint() * l;
    out += dissipative_weight_ * (l * rho * l.adjoint() - 0.5 * (ldl * rho + rho * ldl));
  }
  if (!transitions_.empty()) {
    // L = sqrt(r)|to><from|:  L rho L^+ = r rho(from,from) |to><to|,
    // L^+ L = r |from><from|, so the anticommutator only needs a diagonal.
    RealVector gain = RealVector::Zero(rho.rows());
    RealVector loss = RealVector::Zero(rho.rows());
    for (const Transition& t : transitions_) {
      gain(t.to) += t.rate * rho(t.from, t.from).real();
      loss(t.from) += t.rate;
    }
    for (Index j = 0; j < rho.cols(); ++j) {
      for (Index i = 0; i < rho.rows(); ++i) {
        out(i, j) -= dissipative_weight_ * 0.5 * (loss(i) + loss(j)) * rho(i, j);
      }
      out(j, j) += dissipative_weight_ * gain(j);
    }
  }
  return out;
}

Superoperator Lindbladian::as_superoperator() const {
  return [self = *this](const ComplexMatrix& rho) { return self(rho); };
}

double Lindbladian::default_step() const {
  double scale = 0.0;
  if (hamiltonian_.size() > 0) {
    scale = std::abs(coherent_weight_) * hamiltonian_.cwiseAbs().maxCoeff();
  }
  RealVector outflow = RealVector::Zero(dimension());
  for (const Transition& t : transitions_) outflow(t.from) += t.rate;
  for (const ComplexMatrix& l : jumps_) {
    outflow += (l.adjoint() * l).diagonal().real();
  }
  if (outflow.size() > 0) scale = std::max(scale, std::abs(dissipative_weight_) * outflow.maxCoeff());
  if (!(scale > 0.0)) scale = 1.0;
  return 0.01 / scale;
}

MasterEquationStepper::MasterEquationStepper(Superoperator rhs, ComplexMatrix rho0, double dt,
                                             Tolerances tol)
    : rhs_(std::move(rhs)), rho_(std::move(rho0)), dt_(dt), tol_(tol) {
  if (!(dt_ > 0.0) || !std::isfinite(dt_)) throw ValidationError("dt must be positive");
  if (rho_.rows() != rho_.cols() || rho_.size() == 0) {
    throw ValidationError("initial state must be a non-empty square matrix");
  }
  const double trace = rho_.trace().real();
  if (std::abs(trace - 1.0) > tol_.density_trace) {
    throw ValidationError("initial state must have unit trace");
  }
  require_hermitian(rho_, tol_);
}

void MasterEquationStepper::step() {
  const ComplexMatrix k1 = rhs_(rho_);
  const ComplexMatrix k2 = rhs_(rho_ + (0.5 * dt_) * k1);
  const ComplexMatrix k3 = rhs_(rho_ + (0.5 * dt_) * k2);
  const ComplexMatrix k4 = rhs_(rho_ + dt_ * k3);
  ComplexMatrix next = rho_ + (dt_ / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  ++steps_;

  const double trace = next.trace().real();
  max_drift_ = std::max(max_drift_, std::abs(trace - 1.0));
  if (!std::isfinite(trace) || std::abs(trace - 1.0) > tol_.trace_drift) {
    std::ostringstream what;
    what << "trace drifted to " << trace;
    throw IntegrationError(what.str(), time());
  }
  rho_ = hermitian_part(next) / trace;
}

double MasterEquationStepper::check_positivity() const {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho_, Eigen::EigenvaluesOnly);
  const double smallest = solver.eigenvalues()(0);
  if (smallest < tol_.negative_eigenvalue) {
    std::ostringstream what;
    what << "state eigenvalue " << smallest << " is negative";
    throw IntegrationError(what.str(), time());
  }
  return smallest;
}

Trajectory integrate_master_equation(const Superoperator& rhs, const ComplexMatrix& rho0,
                                     double t_final, double dt,
                                     const IntegrationOptions& options) {
  if (!(t_final >= 0.0)) throw ValidationError("t_final must be non-negative");
  MasterEquationStepper stepper(rhs, rho0, dt, options.tol);
  const auto steps = static_cast<std::size_t>(std::ceil(t_final / dt - 1e-9));
  const std::size_t stride = std::max<std::size_t>(1, options.store_every);

  Trajectory out;
  out.times.push_back(0.0);
  out.states.push_back(stepper.state());
  for (std::size_t k = 1; k <= steps; ++k) {
    stepper.step();
    if (k % stride == 0 || k == steps) {
      if (options.check_positivity) stepper.check_positivity();
      out.times.push_back(static_cast<double>(k) * dt);
      out.states.push_back(stepper.state());
    }
  }
  return out;
}

}  // namespace qnet
