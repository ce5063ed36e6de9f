#include "qnet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qnet/error.hpp"

namespace qnet {

EigenDecomposition::EigenDecomposition(RealVector eigenvalues, ComplexMatrix eigenvectors,
                                       double degeneracy_tol)
    : eigenvalues_(std::move(eigenvalues)),
      eigenvectors_(std::move(eigenvectors)),
      degeneracy_tol_(degeneracy_tol) {
  const Index n = eigenvalues_.size();
  Index begin = 0;
  for (Index k = 1; k <= n; ++k) {
    // Chain grouping: a new space starts when the gap to the previous
    // eigenvalue exceeds the tolerance.
    if (k == n || eigenvalues_(k) - eigenvalues_(k - 1) > degeneracy_tol_) {
      const Index size = k - begin;
      const double mean = eigenvalues_.segment(begin, size).mean();
      spaces_.push_back({mean, begin, size});
      begin = k;
    }
  }
}

ComplexMatrix EigenDecomposition::projector(std::size_t k) const {
  const Eigenspace& space = spaces_.at(k);
  const auto block = eigenvectors_.middleCols(space.begin, space.size);
  return block * block.adjoint();
}

std::vector<ComplexMatrix> EigenDecomposition::projectors() const {
  std::vector<ComplexMatrix> out;
  out.reserve(spaces_.size());
  for (std::size_t k = 0; k < spaces_.size(); ++k) out.push_back(projector(k));
  return out;
}

ComplexMatrix EigenDecomposition::apply(const std::function<Complex(double)>& f) const {
  ComplexVector values(eigenvalues_.size());
  for (Index k = 0; k < values.size(); ++k) values(k) = f(eigenvalues_(k));
  return eigenvectors_ * values.asDiagonal() * eigenvectors_.adjoint();
}

double hermiticity_violation(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

void require_hermitian(const ComplexMatrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) {
    throw ValidationError("Hermitian matrix must be square, got " + std::to_string(m.rows()) +
                          "x" + std::to_string(m.cols()));
  }
  if (m.size() == 0) return;
  const RealMatrix diff = (m - m.adjoint()).cwiseAbs();
  Index row = 0;
  Index col = 0;
  const double worst = diff.maxCoeff(&row, &col);
  const double allowed = tol.hermitian_rel * m.cwiseAbs().maxCoeff();
  if (!(worst <= allowed)) throw SymmetryError(worst, allowed, row, col);
}

EigenDecomposition hermitian_eig(const ComplexMatrix& m, std::optional<double> degeneracy_tol,
                                 const Tolerances& tol) {
  require_hermitian(m, tol);
  if (degeneracy_tol && !(*degeneracy_tol > 0.0)) {
    throw ValidationError("degeneracy tolerance must be positive");
  }
  if (m.size() == 0) return EigenDecomposition(RealVector(), ComplexMatrix(), 0.0);

  // Eigen reads only the lower triangle; feed it the exact Hermitian part.
  const ComplexMatrix h = hermitian_part(m);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigensolver failed to converge");
  }
  RealVector values = solver.eigenvalues();
  double grouping = 0.0;
  if (degeneracy_tol) {
    grouping = *degeneracy_tol;
  } else {
    const double range = values(values.size() - 1) - values(0);
    const double scale = std::max(range, values.cwiseAbs().maxCoeff());
    grouping = tol.degeneracy_rel * scale;
  }
  return EigenDecomposition(std::move(values), solver.eigenvectors(), grouping);
}

ComplexMatrix expm_hermitian(const EigenDecomposition& eig, Complex scale) {
  return eig.apply([scale](double lambda) { return std::exp(scale * lambda); });
}

ComplexMatrix expm_hermitian(const ComplexMatrix& m, Complex scale, const Tolerances& tol) {
  if (scale == Complex{0.0, 0.0}) {
    require_hermitian(m, tol);
    return ComplexMatrix::Identity(m.rows(), m.cols());
  }
  return expm_hermitian(hermitian_eig(m, std::nullopt, tol), scale);
}

ComplexMatrix matrix_function(const ComplexMatrix& m, const std::function<Complex(double)>& f,
                              const Tolerances& tol) {
  return hermitian_eig(m, std::nullopt, tol).apply(f);
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

void require_density(const ComplexMatrix& rho, const Tolerances& tol) {
  require_hermitian(rho, tol);
  if (rho.size() == 0) throw ValidationError("density matrix is empty");
  const double trace = rho.trace().real();
  if (std::abs(trace - 1.0) > tol.density_trace) {
    throw ValidationError("density matrix trace " + std::to_string(trace) + " is not 1");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(rho), Eigen::EigenvaluesOnly);
  if (solver.eigenvalues()(0) < tol.density_psd) {
    throw ValidationError("density matrix has negative eigenvalue " +
                          std::to_string(solver.eigenvalues()(0)));
  }
}

}  // namespace qnet
