#include "symspace/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "symspace/error.hpp"

namespace symspace {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_square(const ComplexMatrix& X, const char* what) {
  if (X.rows() < 1 || X.rows() != X.cols()) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " must be a non-empty square matrix");
  }
  if (!all_finite(X)) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " has non-finite entries");
  }
}

// Permutes and re-signs the columns of an orthogonal B so that it is as close
// to the identity as a greedy assignment allows. Already-diagonal inputs then
// come back with B = E.
RealMatrix canonical_columns(const RealMatrix& B) {
  const Eigen::Index n = B.cols();
  std::vector<Eigen::Index> columns(n);
  std::iota(columns.begin(), columns.end(), 0);
  std::stable_sort(columns.begin(), columns.end(), [&](Eigen::Index a, Eigen::Index b) {
    return B.col(a).cwiseAbs().maxCoeff() > B.col(b).cwiseAbs().maxCoeff();
  });
  std::vector<bool> taken(n, false);
  RealMatrix out(n, n);
  for (Eigen::Index c : columns) {
    Eigen::Index best = -1;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!taken[i] && (best < 0 || std::abs(B(i, c)) > std::abs(B(best, c)))) best = i;
    }
    taken[best] = true;
    out.col(best) = B(best, c) < 0 ? RealMatrix(-B.col(c)) : RealMatrix(B.col(c));
  }
  return out;
}

}  // namespace

void Tolerances::validate() const {
  if (!(membership_tol > 0.0) || !(cluster_tol > 0.0) || !(branch_margin > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tolerances must be strictly positive");
  }
  if (!(cluster_tol > membership_tol)) {
    throw Error(ErrorCode::InvalidArgument, "cluster_tol must exceed membership_tol");
  }
}

ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix transpose(const ComplexMatrix& X) { return X.transpose(); }

ComplexMatrix diagonal(const std::vector<Complex>& values) {
  const auto n = static_cast<Eigen::Index>(values.size());
  ComplexMatrix D = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) D(i, i) = values[static_cast<std::size_t>(i)];
  return D;
}

double frobenius(const ComplexMatrix& X) { return X.norm(); }

double reference_scale(const ComplexMatrix& X) {
  const double norm = X.norm();
  return norm > 0.0 ? norm : 1.0;
}

bool all_finite(const ComplexMatrix& X) {
  return X.real().allFinite() && X.imag().allFinite();
}

double unitarity_residual(const ComplexMatrix& X) {
  return (X * X.adjoint() - identity(X.rows())).norm();
}

double angle_0_2pi(Complex z) {
  double a = std::arg(z);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

double angular_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), kTwoPi);
  return d > std::numbers::pi ? kTwoPi - d : d;
}

ComplexMatrix reorthonormalize(const ComplexMatrix& Q) {
  Eigen::HouseholderQR<ComplexMatrix> qr(Q);
  ComplexMatrix out = qr.householderQ() * ComplexMatrix::Identity(Q.rows(), Q.cols());
  const ComplexMatrix& R = qr.matrixQR();
  for (Eigen::Index j = 0; j < Q.cols(); ++j) {
    const Complex r = R(j, j);
    if (std::abs(r) > 0.0) out.col(j) *= r / std::abs(r);
  }
  return out;
}

EigenDecomposition eig_normal(const ComplexMatrix& X, const Tolerances& tol) {
  tol.validate();
  require_square(X, "eig_normal input");
  const double scale = reference_scale(X);
  const double normality = (X * X.adjoint() - X.adjoint() * X).norm();
  if (normality > 100.0 * tol.membership_tol * scale * scale) {
    throw Error(ErrorCode::NotNormal, "normality residual " + std::to_string(normality));
  }

  Eigen::ComplexSchur<ComplexMatrix> schur(X);
  if (schur.info() != Eigen::Success) {
    throw Error(ErrorCode::NoConvergence, "complex Schur iteration did not converge");
  }
  const ComplexMatrix& T = schur.matrixT();
  const ComplexMatrix& U = schur.matrixU();
  const Eigen::Index n = X.rows();

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    const double arg_a = std::arg(T(a, a));
    const double arg_b = std::arg(T(b, b));
    if (arg_a != arg_b) return arg_a < arg_b;
    return T(a, a).imag() < T(b, b).imag();
  });

  EigenDecomposition result;
  result.P.resize(n, n);
  result.eigenvalues.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index src = order[static_cast<std::size_t>(j)];
    result.P.col(j) = U.col(src);
    result.eigenvalues.push_back(T(src, src));
  }
  if (unitarity_residual(result.P) > tol.membership_tol) {
    result.P = reorthonormalize(result.P);
  }
  return result;
}

SimultaneousDiagonalization simdiag_real_symmetric(const ComplexMatrix& S1,
                                                   const ComplexMatrix& S2,
                                                   const Tolerances& tol) {
  tol.validate();
  require_square(S1, "S1");
  require_square(S2, "S2");
  if (S1.rows() != S2.rows()) throw Error(ErrorCode::DimensionMismatch, "S1 and S2 differ in size");

  const double norm1 = S1.norm();
  const double norm2 = S2.norm();
  const double scale = norm1 + norm2 > 0.0 ? norm1 + norm2 : 1.0;
  const double eps = tol.membership_tol * scale;

  if (S1.imag().norm() > eps || S2.imag().norm() > eps) {
    throw Error(ErrorCode::NotSymmetric, "inputs are not real");
  }
  RealMatrix R1 = S1.real();
  RealMatrix R2 = S2.real();
  if ((R1 - R1.transpose()).norm() > eps || (R2 - R2.transpose()).norm() > eps) {
    throw Error(ErrorCode::NotSymmetric, "inputs are not symmetric");
  }
  if ((R1 * R2 - R2 * R1).norm() > 100.0 * eps * scale) {
    throw Error(ErrorCode::NotCommuting, "inputs do not commute");
  }
  R1 = 0.5 * (R1 + R1.transpose()).eval();
  R2 = 0.5 * (R2 + R2.transpose()).eval();

  const Eigen::Index n = R1.rows();
  const double ratio = (norm1 > 0.0 && norm2 > 0.0) ? norm1 / norm2 : 1.0;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> draw(0.5, 1.5);

  auto off_diagonal = [](const RealMatrix& M) {
    return (M - RealMatrix(M.diagonal().asDiagonal())).norm();
  };

  for (int attempt = 0; attempt < 5; ++attempt) {
    const double mu = draw(rng) * ratio;
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(R1 + mu * R2);
    if (solver.info() != Eigen::Success) continue;
    RealMatrix B = canonical_columns(solver.eigenvectors());
    if (B.determinant() < 0.0) B.col(n - 1) *= -1.0;
    const RealMatrix D1 = B.transpose() * R1 * B;
    const RealMatrix D2 = B.transpose() * R2 * B;
    if (off_diagonal(D1) > eps || off_diagonal(D2) > eps) continue;

    SimultaneousDiagonalization out;
    out.B = std::move(B);
    for (Eigen::Index i = 0; i < n; ++i) {
      out.d1.push_back(D1(i, i));
      out.d2.push_back(D2(i, i));
    }
    return out;
  }
  throw Error(ErrorCode::NotCommuting, "no common eigenbasis found after 5 perturbations");
}

ComplexMatrix exp_skew_hermitian(const ComplexMatrix& H, const Tolerances& tol) {
  tol.validate();
  require_square(H, "exp_skew_hermitian input");
  const double scale = reference_scale(H);
  if ((H + H.adjoint()).norm() > tol.membership_tol * scale) {
    throw Error(ErrorCode::NotSkewHermitian, "H* + H is not negligible");
  }
  // H = i·K with K Hermitian; exp(H) = V·D(e^{iθ})·V*.
  const ComplexMatrix K = Complex(0.0, -0.5) * (H - H.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(K);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NoConvergence, "Hermitian eigensolver did not converge");
  }
  const ComplexMatrix& V = solver.eigenvectors();
  Eigen::VectorXcd phases(H.rows());
  for (Eigen::Index j = 0; j < H.rows(); ++j) {
    phases(j) = std::polar(1.0, solver.eigenvalues()(j));
  }
  return V * phases.asDiagonal() * V.adjoint();
}

}  // namespace symspace

namespace symspace {

std::vector<std::vector<std::size_t>> cluster_by_angle(const std::vector<Complex>& values,
                                                       double cluster_tol) {
  std::vector<std::vector<std::size_t>> clusters;
  if (values.empty()) return clusters;

  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> angle(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) angle[i] = angle_0_2pi(values[i]);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return angle[a] < angle[b]; });

  clusters.push_back({order.front()});
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (angle[order[k]] - angle[order[k - 1]] <= cluster_tol) {
      clusters.back().push_back(order[k]);
    } else {
      clusters.push_back({order[k]});
    }
  }
  // Close the circle: the last cluster may chain into the first through 2π.
  if (clusters.size() > 1) {
    const double gap = angle[order.front()] + kTwoPi - angle[order.back()];
    if (gap <= cluster_tol) {
      auto& first = clusters.front();
      first.insert(first.begin(), clusters.back().begin(), clusters.back().end());
      clusters.pop_back();
    }
  }
  return clusters;
}

double mean_angle(const std::vector<Complex>& values, const std::vector<std::size_t>& indices) {
  Complex sum{0.0, 0.0};
  for (std::size_t i : indices) sum += values[i] / std::abs(values[i]);
  return angle_0_2pi(sum);
}

}  // namespace symspace
