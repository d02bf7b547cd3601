#include "symspace/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/QR>

#include "symspace/error.hpp"

namespace symspace {

std::string_view to_string(Family family) {
  return family == Family::AI ? "AI" : "AII";
}

double MembershipReport::max_residual() const {
  return std::max({unitarity, determinant, symmetry});
}

SpacePoint SpacePoint::checked(SpaceKind kind, ComplexMatrix X, const Tolerances& tol) {
  const MembershipReport report = is_member(kind, X, tol);
  if (!report.member) {
    throw Error(ErrorCode::NotInSpace,
                std::string(to_string(kind.family)) + "(" + std::to_string(kind.n) +
                    ") membership residual " + std::to_string(report.max_residual()));
  }
  return SpacePoint{kind, std::move(X)};
}

ComplexMatrix structural_J(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "J needs n >= 1");
  ComplexMatrix J = ComplexMatrix::Zero(2 * n, 2 * n);
  J.topRightCorner(n, n) = -ComplexMatrix::Identity(n, n);
  J.bottomLeftCorner(n, n) = ComplexMatrix::Identity(n, n);
  return J;
}

MembershipReport is_member(SpaceKind kind, const ComplexMatrix& X, const Tolerances& tol) {
  tol.validate();
  if (kind.n < 1) throw Error(ErrorCode::InvalidArgument, "space parameter n must be >= 1");
  const Eigen::Index m = kind.ambient_size();
  if (X.rows() != m || X.cols() != m) {
    throw Error(ErrorCode::DimensionMismatch, "expected a " + std::to_string(m) + "x" +
                                                  std::to_string(m) + " matrix");
  }
  MembershipReport report;
  report.unitarity = unitarity_residual(X);
  report.determinant = std::abs(X.determinant() - Complex(1.0, 0.0));
  if (kind.family == Family::AI) {
    report.symmetry = (X.transpose() - X).norm();
  } else {
    const ComplexMatrix J = structural_J(kind.n);
    report.symmetry = (X.transpose() - J * X * J.transpose()).norm();
  }
  report.member = all_finite(X) && report.max_residual() <= tol.membership_tol;
  return report;
}

ComplexMatrix haar_special_unitary(Eigen::Index m, std::uint64_t seed) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "matrix size must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix Z(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      Z(i, j) = Complex(re, im);
    }
  }
  // Q·diag(phase(R_jj)) is Haar on U(m); the m-th root of det moves it to SU(m).
  ComplexMatrix Q = reorthonormalize(Z);
  const Complex det = Q.determinant();
  Q *= std::polar(1.0, -std::arg(det) / static_cast<double>(m));
  return Q;
}

SpacePoint point_from_action(SpaceKind kind, const ComplexMatrix& P) {
  if (P.rows() != kind.ambient_size() || P.cols() != kind.ambient_size()) {
    throw Error(ErrorCode::DimensionMismatch, "acting matrix has the wrong size");
  }
  if (kind.family == Family::AI) {
    return SpacePoint{kind, P * P.transpose()};
  }
  const ComplexMatrix J = structural_J(kind.n);
  return SpacePoint{kind, J * (P * J * P.transpose())};
}

SpacePoint sample(SpaceKind kind, std::uint64_t seed, const Tolerances& tol) {
  if (kind.n < 1) throw Error(ErrorCode::InvalidArgument, "space parameter n must be >= 1");
  SpacePoint point = point_from_action(kind, haar_special_unitary(kind.ambient_size(), seed));
  if (!is_member(kind, point.matrix, tol).member) {
    throw Error(ErrorCode::NotInSpace, "sampled point failed the membership check");
  }
  return point;
}

ComplexMatrix symplectic_embed(const ComplexMatrix& A, const ComplexMatrix& B,
                               const Tolerances& tol) {
  tol.validate();
  const Eigen::Index n = A.rows();
  if (n < 1 || A.cols() != n || B.rows() != n || B.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "quaternionic blocks must be equal square matrices");
  }
  ComplexMatrix M(2 * n, 2 * n);
  M.topLeftCorner(n, n) = A;
  M.topRightCorner(n, n) = -B.conjugate();
  M.bottomLeftCorner(n, n) = B;
  M.bottomRightCorner(n, n) = A.conjugate();

  const ComplexMatrix J = structural_J(static_cast<int>(n));
  const double drift = (M * J * M.transpose() - J).norm();
  if (drift > tol.membership_tol) {
    throw Error(ErrorCode::NotSymplectic, "c'(X) J tc'(X) - J has norm " + std::to_string(drift));
  }
  return M;
}

}  // namespace symspace
