#pragma once

#include <vector>

#include "densecap/matrix.hpp"

namespace densecap {

// Hermiticity acceptance threshold: max entrywise |h - h^dag|.
inline constexpr double kHermitianTol = 1e-10;
// Jacobi convergence threshold on the off-diagonal Frobenius norm.
inline constexpr double kJacobiOffdiagTol = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;
// Density-matrix acceptance thresholds.
inline constexpr double kDensityTraceTol = 1e-8;
inline constexpr double kDensityEigenTol = 1e-8;

enum class Subsystem { A, B };

struct EigenResult {
  std::vector<double> eigenvalues;  // sorted descending
  double offdiag_residual = 0.0;    // off-diagonal Frobenius norm at convergence
};

struct EigenSystem {
  std::vector<double> eigenvalues;  // sorted descending
  ComplexMatrix vectors;            // columns paired with eigenvalues
  double offdiag_residual = 0.0;
};

// Trace over one subsystem of a (dim_a * dim_b)-dimensional operator,
// ordered A (x) B; returns the kept subsystem's reduced operator.
ComplexMatrix partial_trace(const ComplexMatrix& rho, int dim_a, int dim_b, Subsystem keep);

// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations, iterated
// until the off-diagonal Frobenius norm drops below kJacobiOffdiagTol or
// kJacobiMaxSweeps sweeps have run (then NumericError). Input must be
// Hermitian within kHermitianTol.
EigenResult hermitian_eigenvalues(const ComplexMatrix& h);

// Same iteration, also accumulating the eigenvector matrix.
EigenSystem hermitian_eigensystem(const ComplexMatrix& h);

// S(rho) = -sum lambda log2 lambda over the spectrum, in bits. Requires a
// valid density matrix: Hermitian, trace within kDensityTraceTol of one,
// eigenvalues >= -kDensityEigenTol. Eigenvalues in (-kDensityEigenTol, 0]
// are clamped to zero before the sum.
double von_neumann_entropy(const ComplexMatrix& rho);

// Shannon entropy (base 2) of an eigenvalue list with the same clamping
// policy; used where spectra are known in closed form.
double entropy_of_spectrum(const std::vector<double>& eigenvalues);

}  // namespace densecap
