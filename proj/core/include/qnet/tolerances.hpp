#pragma once

namespace qnet {

/// Numerical thresholds shared by every module. Functions that accept a
/// `Tolerances` argument default to `kDefaultTolerances`.
struct Tolerances {
  // max |M_ij - conj(M_ji)| allowed, relative to max |M_ij|.
  double hermitian_rel = 1e-12;
  // Eigenvalues closer than degeneracy_rel * spectral scale share a projector.
  double degeneracy_rel = 1e-9;
  // Master-equation guards, checked before renormalisation.
  double trace_drift = 1e-6;
  double negative_eigenvalue = -1e-8;
  // Eigenvalues at or below this are treated as exact zeros before logs.
  double log_floor = 1e-14;
  // Weight of rho on the kernel of sigma tolerated by relative entropies.
  double support = 1e-10;
  // Density-matrix validation.
  double density_trace = 1e-10;
  double density_psd = -1e-10;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace qnet
