#include "symspace/factorizations.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

#include "symspace/error.hpp"

namespace symspace {

namespace {

void require_special_unitary(const ComplexMatrix& X, const Tolerances& tol, const char* what) {
  if (X.rows() < 1 || X.rows() != X.cols()) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " must be square");
  }
  if (!all_finite(X)) throw Error(ErrorCode::NotInSpace, std::string(what) + " is not finite");
  const double unitary = unitarity_residual(X);
  const double det = std::abs(X.determinant() - Complex(1.0, 0.0));
  if (unitary > tol.membership_tol || det > tol.membership_tol) {
    throw Error(ErrorCode::NotInSpace, std::string(what) + " is not special unitary (residuals " +
                                           std::to_string(unitary) + ", " + std::to_string(det) +
                                           ")");
  }
}

// Real Gram-Schmidt through QR, keeping column order and signs.
RealMatrix reorthonormalize_real(const RealMatrix& B) {
  Eigen::HouseholderQR<RealMatrix> qr(B);
  RealMatrix Q = qr.householderQ() * RealMatrix::Identity(B.rows(), B.cols());
  for (Eigen::Index j = 0; j < B.cols(); ++j) {
    if (qr.matrixQR()(j, j) < 0.0) Q.col(j) *= -1.0;
  }
  return Q;
}

}  // namespace

Complex half_angle_root(Complex z) {
  return std::polar(std::sqrt(std::abs(z)), 0.5 * angle_0_2pi(z));
}

RealMatrix perfect_shuffle(int n) {
  RealMatrix Pi = RealMatrix::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    Pi(2 * k, k) = 1.0;
    Pi(2 * k + 1, n + k) = 1.0;
  }
  return Pi;
}

ComplexMatrix block_swap_repair(const ComplexMatrix& C) {
  const Eigen::Index m = C.cols();
  if (m < 2 || m % 2 != 0 || C.rows() != m) {
    throw Error(ErrorCode::DimensionMismatch, "block-swap repair needs an even square matrix");
  }
  const Eigen::Index n = m / 2;
  ComplexMatrix M = identity(m);
  M(0, 0) = 0.0;
  M(n, n) = 0.0;
  M(0, n) = 1.0;
  M(n, 0) = 1.0;
  return C * M;
}

FactorizationResult factor_symmetric(const ComplexMatrix& X, const Tolerances& tol) {
  tol.validate();
  require_special_unitary(X, tol, "factor_symmetric input");
  if ((X.transpose() - X).norm() > tol.membership_tol) {
    throw Error(ErrorCode::NotInSpace, "factor_symmetric input is not symmetric");
  }
  const Eigen::Index n = X.rows();

  // X + conj(X) and i(X − conj(X)) are commuting real symmetric matrices.
  const ComplexMatrix S1 = X + X.conjugate();
  const ComplexMatrix S2 = Complex(0.0, 1.0) * (X - X.conjugate());
  const SimultaneousDiagonalization sd = simdiag_real_symmetric(S1, S2, tol);

  std::vector<Complex> roots(static_cast<std::size_t>(n));
  Complex product{1.0, 0.0};
  Complex square_product{1.0, 0.0};
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const Complex mu = 0.5 * Complex(sd.d1[k], -sd.d2[k]);
    roots[k] = std::polar(1.0, 0.5 * angle_0_2pi(mu));
    product *= roots[k];
    square_product *= mu;
  }
  if (product.real() < 0.0) {
    roots.back() = -roots.back();
    product = -product;
  }
  if (std::abs(square_product - X.determinant()) > 10.0 * tol.membership_tol ||
      std::abs(product - Complex(1.0, 0.0)) > 10.0 * tol.membership_tol) {
    throw Error(ErrorCode::RootProductFailure, "square roots do not multiply to 1");
  }

  FactorizationIntermediates parts;
  parts.B = sd.B;
  parts.C = diagonal(roots);
  parts.roots = roots;

  FactorizationResult result;
  result.P = sd.B.cast<Complex>() * parts.C;
  result.residual = (X - result.P * result.P.transpose()).norm();
  result.intermediates = std::move(parts);
  return result;
}

FactorizationResult factor_skew(const ComplexMatrix& X, const Tolerances& tol) {
  tol.validate();
  if (X.rows() < 2 || X.rows() % 2 != 0 || X.rows() != X.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "factor_skew needs an even square matrix");
  }
  require_special_unitary(X, tol, "factor_skew input");
  if ((X.transpose() + X).norm() > tol.membership_tol) {
    throw Error(ErrorCode::NotInSpace, "factor_skew input is not skew-symmetric");
  }
  const int n = static_cast<int>(X.rows() / 2);

  // If Xv = λv then X·conj(v) = −λ·conj(v): eigenvalues come in antipodal
  // clusters of equal multiplicity, and conjugation maps one eigenspace onto
  // the other.
  const EigenDecomposition eig = eig_normal(X, tol);
  const auto clusters = cluster_by_angle(eig.eigenvalues, tol.cluster_tol);
  std::vector<double> centroid(clusters.size());
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    centroid[c] = mean_angle(eig.eigenvalues, clusters[c]);
  }

  std::vector<bool> paired(clusters.size(), false);
  std::vector<Eigen::VectorXcd> representatives;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    if (paired[c]) continue;
    std::size_t partner = clusters.size();
    double best = std::numbers::pi;
    for (std::size_t d = 0; d < clusters.size(); ++d) {
      if (d == c || paired[d]) continue;
      const double gap = angular_distance(centroid[d], centroid[c] + std::numbers::pi);
      if (gap < best) {
        best = gap;
        partner = d;
      }
    }
    if (partner == clusters.size() || best > 10.0 * tol.cluster_tol ||
        clusters[partner].size() != clusters[c].size()) {
      throw Error(ErrorCode::OddPairingFailure,
                  "eigenvalue cluster at angle " + std::to_string(centroid[c]) +
                      " has no antipodal partner of equal multiplicity");
    }
    paired[c] = paired[partner] = true;

    const auto columns = [&](const std::vector<std::size_t>& idx) {
      ComplexMatrix V(X.rows(), static_cast<Eigen::Index>(idx.size()));
      for (std::size_t j = 0; j < idx.size(); ++j) {
        V.col(static_cast<Eigen::Index>(j)) = eig.P.col(static_cast<Eigen::Index>(idx[j]));
      }
      return V;
    };
    const ComplexMatrix V = reorthonormalize(columns(clusters[c]));
    const ComplexMatrix U = reorthonormalize(columns(clusters[partner]));
    const ComplexMatrix conjV = V.conjugate();
    const double overlap_defect = (conjV - U * (U.adjoint() * conjV)).norm();
    if (overlap_defect > std::sqrt(tol.membership_tol)) {
      throw Error(ErrorCode::OddPairingFailure,
                  "conjugated eigenvectors leave the antipodal eigenspace (defect " +
                      std::to_string(overlap_defect) + ")");
    }
    for (Eigen::Index j = 0; j < V.cols(); ++j) representatives.push_back(V.col(j));
  }
  if (static_cast<int>(representatives.size()) != n) {
    throw Error(ErrorCode::OddPairingFailure, "eigenvector pairing is incomplete");
  }

  // Interleaved real basis (w_1, w_1', w_2, w_2', …).
  RealMatrix B(2 * n, 2 * n);
  const double root2 = std::sqrt(2.0);
  for (int k = 0; k < n; ++k) {
    const Eigen::VectorXcd& v = representatives[static_cast<std::size_t>(k)];
    B.col(2 * k) = root2 * v.real();
    B.col(2 * k + 1) = root2 * v.imag();
  }
  B = reorthonormalize_real(B);
  // Replacing λ_1 by −λ_1 negates w_1' and moves B into SO(2n).
  if (B.determinant() < 0.0) B.col(1) *= -1.0;

  const ComplexMatrix Bc = B.cast<Complex>();
  const ComplexMatrix T = Bc.transpose() * X * Bc;
  std::vector<Complex> z(static_cast<std::size_t>(n));
  ComplexMatrix blocks = ComplexMatrix::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    z[static_cast<std::size_t>(k)] = T(2 * k + 1, 2 * k);
    blocks(2 * k + 1, 2 * k) = z[static_cast<std::size_t>(k)];
    blocks(2 * k, 2 * k + 1) = -z[static_cast<std::size_t>(k)];
  }
  if ((T - blocks).norm() > 10.0 * tol.membership_tol) {
    throw Error(ErrorCode::OddPairingFailure, "paired basis does not block-diagonalize X");
  }

  FactorizationIntermediates parts;
  parts.B = B;
  std::vector<Complex> c_block(static_cast<std::size_t>(2 * n));
  Complex det_c{1.0, 0.0};
  for (int k = 0; k < n; ++k) {
    const Complex zk = z[static_cast<std::size_t>(k)];
    const Complex c = half_angle_root(zk / std::abs(zk));
    parts.roots.push_back(c);
    parts.pair_eigenvalues.push_back(Complex(0.0, -1.0) * zk);
    c_block[static_cast<std::size_t>(k)] = c;
    c_block[static_cast<std::size_t>(n + k)] = c;
    det_c *= c * c;
  }
  parts.C = diagonal(c_block);

  // det P = det Π · det C is fixed by the Pfaffian of X: Pf(P·J·tP) = det P·Pf(J).
  const double det_shuffle = ((n * (n - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
  if ((det_shuffle * det_c).real() < 0.0) {
    throw Error(ErrorCode::NotInSpace,
                "skew matrix has Pfaffian opposite to J; it is not P J tP for any P in SU(" +
                    std::to_string(2 * n) + ")");
  }

  FactorizationResult result;
  result.P = Bc * perfect_shuffle(n).cast<Complex>() * parts.C;
  const ComplexMatrix J = structural_J(n);
  result.residual = (X - result.P * J * result.P.transpose()).norm();
  result.intermediates = std::move(parts);
  return result;
}

FactorizationResult factor_AII(const SpacePoint& X, const Tolerances& tol) {
  tol.validate();
  if (X.kind.family != Family::AII) {
    throw Error(ErrorCode::NotInSpace, "factor_AII needs an AII point");
  }
  if (!is_member(X.kind, X.matrix, tol).member) {
    throw Error(ErrorCode::NotInSpace, "input fails the AII membership laws");
  }
  const ComplexMatrix J = structural_J(X.kind.n);
  const ComplexMatrix Y = J.transpose() * X.matrix;
  FactorizationResult result = factor_skew(Y, tol);
  result.residual = (X.matrix - J * result.P * J * result.P.transpose()).norm();
  return result;
}

}  // namespace symspace
