#include "symspace/homotopy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "symspace/error.hpp"

namespace symspace {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double normalize_angle(double alpha) {
  double a = std::fmod(alpha, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a >= kTwoPi ? 0.0 : a;
}

}  // namespace

BranchLog branch_log(const ComplexMatrix& X, double alpha, const Tolerances& tol) {
  tol.validate();
  if (!std::isfinite(alpha)) throw Error(ErrorCode::InvalidArgument, "alpha must be finite");
  if (X.rows() < 1 || X.rows() != X.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "branch_log needs a square matrix");
  }
  if (!all_finite(X) || unitarity_residual(X) > tol.membership_tol) {
    throw Error(ErrorCode::NotUnitary, "branch_log input is not unitary");
  }

  BranchLog out;
  out.alpha = normalize_angle(alpha);
  const EigenDecomposition eig = eig_normal(X, tol);

  out.margin = std::numbers::pi;
  std::vector<Complex> lifted;
  lifted.reserve(eig.eigenvalues.size());
  for (const Complex& lambda : eig.eigenvalues) {
    const double phi = std::arg(lambda);
    out.margin = std::min(out.margin, angular_distance(phi, out.alpha));
    double offset = std::fmod(phi - out.alpha, kTwoPi);
    if (offset < 0.0) offset += kTwoPi;
    lifted.emplace_back(0.0, out.alpha + offset);  // θ_j ∈ (α, α + 2π)
  }
  if (out.margin < tol.branch_margin) {
    throw Error(ErrorCode::BranchViolation,
                "eigenvalue within " + std::to_string(out.margin) + " rad of the branch point");
  }

  const ComplexMatrix H = eig.P * diagonal(lifted) * eig.P.adjoint();
  out.H = 0.5 * (H - H.adjoint());
  const double turns = out.H.trace().imag() / kTwoPi;
  out.winding = std::lround(turns);
  out.winding_deviation = std::abs(turns - static_cast<double>(out.winding));
  return out;
}

HomotopyPath contract(const SpacePoint& X, double alpha, int steps, const Tolerances& tol) {
  tol.validate();
  if (steps < 1) throw Error(ErrorCode::InvalidArgument, "steps must be positive");
  if (!is_member(X.kind, X.matrix, tol).member) {
    throw Error(ErrorCode::NotInSpace, "contract needs a point of the space");
  }
  const BranchLog log = branch_log(X.matrix, alpha, tol);

  // AI: 2πik/n on SU(n); AII: πik/n on SU(2n).
  const double k = static_cast<double>(log.winding);
  const Complex shift = X.kind.family == Family::AI
                            ? Complex(0.0, kTwoPi * k / X.kind.n)
                            : Complex(0.0, std::numbers::pi * k / X.kind.n);
  const Eigen::Index m = X.kind.ambient_size();

  HomotopyPath path{X.kind, X, std::exp(shift), log.winding, {}};
  path.samples.reserve(static_cast<std::size_t>(steps) + 1);
  for (int j = 0; j <= steps; ++j) {
    const double s = static_cast<double>(j) / steps;
    const ComplexMatrix G = (1.0 - s) * log.H + (s * shift) * identity(m);
    HomotopySample sample{s, SpacePoint{X.kind, exp_skew_hermitian(G, tol)}, {}, 0.0};
    sample.log_skew_residual = (G + G.adjoint()).norm();
    sample.residuals = is_member(X.kind, sample.point.matrix, tol);
    if (sample.residuals.max_residual() > 100.0 * tol.membership_tol) {
      throw Error(ErrorCode::MembershipDrift,
                  "F(X, " + std::to_string(s) + ") left the space (residual " +
                      std::to_string(sample.residuals.max_residual()) + ")");
    }
    path.samples.push_back(std::move(sample));
  }
  return path;
}

std::variant<long, InconsistentWinding> winding_of_component(const std::vector<SpacePoint>& points,
                                                             double alpha,
                                                             const Tolerances& tol) {
  if (points.empty()) throw Error(ErrorCode::InvalidArgument, "no points given");
  std::vector<long> windings;
  for (const SpacePoint& p : points) windings.push_back(branch_log(p.matrix, alpha, tol).winding);
  std::sort(windings.begin(), windings.end());
  windings.erase(std::unique(windings.begin(), windings.end()), windings.end());
  if (windings.size() == 1) return windings.front();
  return InconsistentWinding{windings};
}

}  // namespace symspace
