#include "qnet/error.hpp"

#include <sstream>

namespace qnet {

namespace {

std::string symmetry_message(double violation, double allowed, Index row, Index col) {
  std::ostringstream out;
  out << "matrix is not Hermitian: |M(" << row << ',' << col << ") - conj(M(" << col << ','
      << row << "))| = " << violation << " exceeds " << allowed;
  return out.str();
}

std::string integration_message(const std::string& what, double time) {
  std::ostringstream out;
  out << "master-equation integration unstable at t = " << time << ": " << what
      << "; use a smaller dt";
  return out.str();
}

}  // namespace

SymmetryError::SymmetryError(double max_violation, double allowed, Index row, Index col)
    : ValidationError(symmetry_message(max_violation, allowed, row, col)),
      max_violation_(max_violation),
      allowed_(allowed),
      row_(row),
      col_(col) {}

IntegrationError::IntegrationError(const std::string& what, double time)
    : NumericalError(integration_message(what, time)), time_(time) {}

}  // namespace qnet
