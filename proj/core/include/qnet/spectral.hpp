#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qnet/tolerances.hpp"
#include "qnet/types.hpp"

namespace qnet {

/// One eigenspace: eigenvalues [begin, begin + size) of the ascending
/// spectrum, all within the grouping tolerance of their neighbours.
struct Eigenspace {
  double eigenvalue = 0.0;  // mean of the grouped eigenvalues
  Index begin = 0;
  Index size = 0;
};

class EigenDecomposition {
 public:
  EigenDecomposition(RealVector eigenvalues, ComplexMatrix eigenvectors, double degeneracy_tol);

  const RealVector& eigenvalues() const noexcept { return eigenvalues_; }
  const ComplexMatrix& eigenvectors() const noexcept { return eigenvectors_; }
  const std::vector<Eigenspace>& eigenspaces() const noexcept { return spaces_; }
  double degeneracy_tolerance() const noexcept { return degeneracy_tol_; }
  Index dimension() const noexcept { return eigenvalues_.size(); }

  /// Orthogonal projector onto eigenspace `k`.
  ComplexMatrix projector(std::size_t k) const;
  std::vector<ComplexMatrix> projectors() const;

  /// V f(diag(lambda)) V^dagger.
  ComplexMatrix apply(const std::function<Complex(double)>& f) const;

 private:
  RealVector eigenvalues_;
  ComplexMatrix eigenvectors_;
  std::vector<Eigenspace> spaces_;
  double degeneracy_tol_;
};

/// Largest |M_ij - conj(M_ji)|.
double hermiticity_violation(const ComplexMatrix& m);

/// Throws SymmetryError unless m is square and Hermitian within
/// tol.hermitian_rel * max |M_ij|.
void require_hermitian(const ComplexMatrix& m, const Tolerances& tol = kDefaultTolerances);

/// Eigendecomposition of a Hermitian matrix. Without an explicit
/// `degeneracy_tol` the grouping tolerance is tol.degeneracy_rel times the
/// spectral scale max(lambda_max - lambda_min, max |lambda|).
EigenDecomposition hermitian_eig(const ComplexMatrix& m,
                                 std::optional<double> degeneracy_tol = std::nullopt,
                                 const Tolerances& tol = kDefaultTolerances);

/// exp(scale * M) for Hermitian M, computed in the eigenbasis.
ComplexMatrix expm_hermitian(const ComplexMatrix& m, Complex scale,
                             const Tolerances& tol = kDefaultTolerances);
ComplexMatrix expm_hermitian(const EigenDecomposition& eig, Complex scale);

/// f(M) for Hermitian M through its eigenbasis.
ComplexMatrix matrix_function(const ComplexMatrix& m, const std::function<Complex(double)>& f,
                              const Tolerances& tol = kDefaultTolerances);

ComplexMatrix hermitian_part(const ComplexMatrix& m);

/// Throws ValidationError unless rho is Hermitian, unit-trace and PSD.
void require_density(const ComplexMatrix& rho, const Tolerances& tol = kDefaultTolerances);

}  // namespace qnet
