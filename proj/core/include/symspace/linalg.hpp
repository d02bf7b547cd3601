#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace symspace {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

/// Numerical thresholds shared by every module. All must be strictly positive
/// and cluster_tol must exceed membership_tol.
struct Tolerances {
  double membership_tol = 1e-9;  // Frobenius residual bound
  double cluster_tol = 1e-6;     // angular clustering radius (radians)
  double branch_margin = 1e-8;   // minimum angular gap to a branch point

  void validate() const;
};

struct EigenDecomposition {
  ComplexMatrix P;                  // unitary, columns are eigenvectors
  std::vector<Complex> eigenvalues;  // ascending principal argument
};

struct SimultaneousDiagonalization {
  RealMatrix B;  // in SO(n)
  std::vector<double> d1;
  std::vector<double> d2;
};

// Small helpers used across modules.
ComplexMatrix identity(Eigen::Index n);
ComplexMatrix transpose(const ComplexMatrix& X);
ComplexMatrix diagonal(const std::vector<Complex>& values);
double frobenius(const ComplexMatrix& X);
/// ‖X‖_F, or 1 for the zero matrix; the reference scale for relative tolerances.
double reference_scale(const ComplexMatrix& X);
bool all_finite(const ComplexMatrix& X);
double unitarity_residual(const ComplexMatrix& X);

/// Principal argument folded into [0, 2π).
double angle_0_2pi(Complex z);
/// Distance between two angles on the unit circle, in [0, π].
double angular_distance(double a, double b);

/// Eigendecomposition of a normal matrix (unitary or skew-Hermitian in
/// practice) through a complex Schur form. Throws NotNormal / NoConvergence.
EigenDecomposition eig_normal(const ComplexMatrix& X, const Tolerances& tol = {});

/// Diagonalizes two commuting real symmetric matrices with one B ∈ SO(n).
/// S1, S2 are passed as complex matrices and must have negligible imaginary
/// parts. Throws NotSymmetric / NotCommuting.
SimultaneousDiagonalization simdiag_real_symmetric(const ComplexMatrix& S1,
                                                   const ComplexMatrix& S2,
                                                   const Tolerances& tol = {});

/// exp(H) for skew-Hermitian H, computed spectrally so the result is unitary
/// to rounding. Throws NotSkewHermitian.
ComplexMatrix exp_skew_hermitian(const ComplexMatrix& H, const Tolerances& tol = {});

/// Single-linkage clustering of unit-circle values by angle (wraparound
/// aware). Returns index groups sorted by their smallest angle in [0, 2π).
std::vector<std::vector<std::size_t>> cluster_by_angle(const std::vector<Complex>& values,
                                                       double cluster_tol);

/// Angle in [0, 2π) of the normalized mean of the given unit-circle values.
double mean_angle(const std::vector<Complex>& values, const std::vector<std::size_t>& indices);

/// Unitary matrix with the same column space as Q, closest in the QR sense
/// (column phases preserved).
ComplexMatrix reorthonormalize(const ComplexMatrix& Q);

}  // namespace symspace
