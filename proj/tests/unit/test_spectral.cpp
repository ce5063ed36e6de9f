#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qnet/error.hpp"
#include "qnet/spectral.hpp"
#include "test_support.hpp"

using namespace qnet;
using namespace qnet::testing;

namespace {

ComplexMatrix pauli_x() {
  ComplexMatrix x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}

}  // namespace

TEST(HermitianEig, PauliXSpectrum) {
  const EigenDecomposition eig = hermitian_eig(pauli_x());
  EXPECT_NEAR(eig.eigenvalues()(0), -1.0, 1e-14);
  EXPECT_NEAR(eig.eigenvalues()(1), 1.0, 1e-14);
  ComplexVector minus(2), plus(2);
  minus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(eig.eigenvectors().col(0).dot(minus)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(eig.eigenvectors().col(1).dot(plus)), 1.0, 1e-12);
}

TEST(HermitianEig, IdentityIsOneEigenspace) {
  const EigenDecomposition eig = hermitian_eig(ComplexMatrix::Identity(3, 3));
  ASSERT_EQ(eig.eigenspaces().size(), 1u);
  EXPECT_EQ(eig.eigenspaces()[0].size, 3);
  EXPECT_NEAR(eig.eigenspaces()[0].eigenvalue, 1.0, 1e-15);
  EXPECT_LT(max_abs(eig.projector(0) - ComplexMatrix::Identity(3, 3)), 1e-14);
}

TEST(HermitianEig, PathLaplacianSpectrum) {
  ComplexMatrix lap(3, 3);
  lap << 1, -1, 0, -1, 2, -1, 0, -1, 1;
  const EigenDecomposition eig = hermitian_eig(lap);
  EXPECT_NEAR(eig.eigenvalues()(0), 0.0, 1e-14);
  EXPECT_NEAR(eig.eigenvalues()(1), 1.0, 1e-14);
  EXPECT_NEAR(eig.eigenvalues()(2), 3.0, 1e-14);
}

TEST(HermitianEig, RejectsNonHermitianInput) {
  ComplexMatrix m(2, 2);
  m << 0, 1, 2, 0;
  EXPECT_THROW(hermitian_eig(m), SymmetryError);
  try {
    hermitian_eig(m);
  } catch (const SymmetryError& e) {
    EXPECT_NEAR(e.max_violation(), 1.0, 1e-15);
  }
  EXPECT_THROW(hermitian_eig(ComplexMatrix(2, 3)), ValidationError);
}

TEST(HermitianEig, RejectsNonFiniteInput) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(0, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(hermitian_eig(m), Error);
}

TEST(HermitianEig, ReconstructionPropertyOnRandomMatrices) {
  for (Index n : {1, 2, 5, 16, 33, 64}) {
    auto rng = rng_for(1, static_cast<std::uint64_t>(n));
    const ComplexMatrix m = random_hermitian(n, rng);
    const EigenDecomposition eig = hermitian_eig(m);
    const ComplexMatrix& v = eig.eigenvectors();
    const ComplexMatrix rebuilt = v * eig.eigenvalues().cast<Complex>().asDiagonal() * v.adjoint();
    EXPECT_LE(max_abs(rebuilt - m), 1e-9 * max_abs(m)) << "n=" << n;
    EXPECT_LE(max_abs(v.adjoint() * v - ComplexMatrix::Identity(n, n)), 1e-10) << "n=" << n;
    for (Index k = 1; k < n; ++k) EXPECT_LE(eig.eigenvalues()(k - 1), eig.eigenvalues()(k));
  }
}

TEST(HermitianEig, ProjectorsResolveIdentityAndAreOrthogonal) {
  auto rng = rng_for(2);
  for (int trial = 0; trial < 10; ++trial) {
    // Prescribed multiplicities 3, 1, 2 in a random basis.
    const ComplexMatrix u = random_unitary(6, rng);
    RealVector d(6);
    d << -1.0, -1.0, -1.0, 0.5, 2.0, 2.0;
    const ComplexMatrix m = hermitian_part(u * d.cast<Complex>().asDiagonal() * u.adjoint());
    const EigenDecomposition eig = hermitian_eig(m);
    ASSERT_EQ(eig.eigenspaces().size(), 3u);
    EXPECT_EQ(eig.eigenspaces()[0].size, 3);
    EXPECT_EQ(eig.eigenspaces()[1].size, 1);
    EXPECT_EQ(eig.eigenspaces()[2].size, 2);
    const auto p = eig.projectors();
    ComplexMatrix sum = ComplexMatrix::Zero(6, 6);
    for (std::size_t j = 0; j < p.size(); ++j) {
      sum += p[j];
      for (std::size_t k = 0; k < p.size(); ++k) {
        const ComplexMatrix expected = j == k ? p[j] : ComplexMatrix::Zero(6, 6);
        EXPECT_LE(max_abs(p[j] * p[k] - expected), 1e-9);
      }
    }
    EXPECT_LE(max_abs(sum - ComplexMatrix::Identity(6, 6)), 1e-10);
  }
}

TEST(HermitianEig, ExplicitDegeneracyToleranceMergesCloseEigenvalues) {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m.diagonal() << 0.0, 1e-6, 1.0;
  EXPECT_EQ(hermitian_eig(m).eigenspaces().size(), 3u);
  EXPECT_EQ(hermitian_eig(m, 1e-5).eigenspaces().size(), 2u);
}

TEST(ExpmHermitian, PauliXQuarterTurn) {
  const ComplexMatrix u = expm_hermitian(pauli_x(), Complex(0.0, -std::numbers::pi / 2.0));
  ComplexMatrix expected(2, 2);
  expected << 0, Complex(0, -1), Complex(0, -1), 0;
  EXPECT_LT(max_abs(u - expected), 1e-14);
}

TEST(ExpmHermitian, ZeroScaleIsIdentity) {
  auto rng = rng_for(3);
  const ComplexMatrix h = random_hermitian(5, rng);
  EXPECT_LT(max_abs(expm_hermitian(h, 0.0) - ComplexMatrix::Identity(5, 5)), 1e-13);
}

TEST(ExpmHermitian, DiagonalCase) {
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(1, 1) = 1.0;
  const ComplexMatrix e = expm_hermitian(d, -1.0);
  EXPECT_NEAR(e(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(e(1, 1).real(), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(std::abs(e(0, 1)), 0.0, 1e-15);
}

TEST(ExpmHermitian, MatchesPadeOracleAndIsUnitary) {
  for (int trial = 0; trial < 8; ++trial) {
    auto rng = rng_for(4, trial);
    const Index n = random_size(rng, 2, 24);
    const ComplexMatrix h = random_hermitian(n, rng);
    const double t = 0.1 + 3.0 * uniform01(rng);
    const ComplexMatrix u = expm_hermitian(h, Complex(0.0, -t));
    const ComplexMatrix oracle = (h * Complex(0.0, -t)).exp();
    EXPECT_LT(max_abs(u - oracle), 1e-9) << "n=" << n;
    EXPECT_LE(max_abs(u.adjoint() * u - ComplexMatrix::Identity(n, n)), 1e-10);
  }
}

TEST(MatrixFunction, SquareRootOfDensity) {
  auto rng = rng_for(5);
  const ComplexMatrix rho = random_density(5, rng);
  const ComplexMatrix root = matrix_function(rho, [](double x) { return Complex(std::sqrt(std::max(x, 0.0)), 0.0); });
  EXPECT_LT(max_abs(root * root - rho), 1e-12);
}

TEST(RequireDensity, RejectsBadStates) {
  EXPECT_NO_THROW(require_density(ComplexMatrix::Identity(3, 3) / 3.0));
  EXPECT_THROW(require_density(ComplexMatrix::Identity(3, 3)), ValidationError);
  ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
  neg.diagonal() << 1.5, -0.5;
  EXPECT_THROW(require_density(neg), ValidationError);
}
