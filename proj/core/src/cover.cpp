#include "symspace/cover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "symspace/error.hpp"

namespace symspace {

CoverConfig default_cover(SpaceKind kind) {
  if (kind.n < 1) throw Error(ErrorCode::InvalidArgument, "space parameter n must be >= 1");
  CoverConfig config{kind, {}, Complex(1.0, 0.0)};
  const double n = kind.n;
  for (int r = 1; r <= kind.n; ++r) {
    const double angle = std::numbers::pi / (2.0 * n) + 2.0 * std::numbers::pi * r / n;
    config.lambdas.push_back(std::polar(1.0, angle));
  }
  for (const Complex& lambda : config.lambdas) {
    config.certificate *= kind.family == Family::AI ? lambda : lambda * lambda;
  }
  return config;
}

double branch_angle(const CoverConfig& config, std::size_t r) {
  return angle_0_2pi(config.lambdas.at(r));
}

CoverClassification classify_matrix(const CoverConfig& config, const ComplexMatrix& X,
                                    const Tolerances& tol) {
  tol.validate();
  const Eigen::Index m = config.kind.ambient_size();
  if (X.rows() != m || X.cols() != m) {
    throw Error(ErrorCode::DimensionMismatch, "matrix size does not match the cover's space");
  }
  if (!all_finite(X) || unitarity_residual(X) > tol.membership_tol) {
    throw Error(ErrorCode::NotInSpace, "classify needs a unitary matrix");
  }
  const EigenDecomposition eig = eig_normal(X, tol);

  CoverClassification out;
  for (std::size_t r = 0; r < config.lambdas.size(); ++r) {
    const double alpha = branch_angle(config, r);
    double margin = std::numbers::pi;
    for (const Complex& mu : eig.eigenvalues) {
      margin = std::min(margin, angular_distance(std::arg(mu), alpha));
    }
    out.margins.push_back(margin);
    out.memberships.push_back(margin >= tol.branch_margin);
    if (margin > out.margins[out.witness]) out.witness = r;
  }
  return out;
}

CoverClassification classify(const CoverConfig& config, const SpacePoint& X,
                             const Tolerances& tol) {
  if (!(X.kind == config.kind)) {
    throw Error(ErrorCode::DimensionMismatch, "point and cover belong to different spaces");
  }
  if (!is_member(X.kind, X.matrix, tol).member) {
    throw Error(ErrorCode::NotInSpace, "classify needs a point of the space");
  }
  return classify_matrix(config, X.matrix, tol);
}

std::vector<EigenCluster> cluster_eigenvalues(const std::vector<Complex>& values,
                                              double cluster_tol) {
  std::vector<EigenCluster> out;
  for (const auto& group : cluster_by_angle(values, cluster_tol)) {
    out.push_back({std::polar(1.0, mean_angle(values, group)), static_cast<int>(group.size())});
  }
  return out;
}

std::vector<EigenCluster> multiplicity_audit(const SpacePoint& X, const Tolerances& tol) {
  tol.validate();
  if (X.kind.family != Family::AII) {
    throw Error(ErrorCode::NotInSpace, "multiplicity audit applies to AII points");
  }
  if (!is_member(X.kind, X.matrix, tol).member) {
    throw Error(ErrorCode::NotInSpace, "multiplicity audit needs a point of the space");
  }
  const EigenDecomposition eig = eig_normal(X.matrix, tol);
  std::vector<EigenCluster> out;
  for (const auto& group : cluster_by_angle(eig.eigenvalues, tol.cluster_tol)) {
    const double centre = mean_angle(eig.eigenvalues, group);
    double spread = 0.0;
    for (std::size_t i : group) {
      spread = std::max(spread, angular_distance(std::arg(eig.eigenvalues[i]), centre));
    }
    if (spread > 10.0 * tol.cluster_tol) {
      throw Error(ErrorCode::ClusterSpread,
                  "cluster at angle " + std::to_string(centre) + " spreads " + std::to_string(spread));
    }
    if (group.size() % 2 != 0) {
      throw Error(ErrorCode::OddMultiplicity, "eigenvalue at angle " + std::to_string(centre) +
                                                  " has multiplicity " +
                                                  std::to_string(group.size()));
    }
    out.push_back({std::polar(1.0, centre), static_cast<int>(group.size())});
  }
  return out;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over (seed, index)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

CoverAuditReport cover_audit(SpaceKind kind, int trials, std::uint64_t seed,
                             const Tolerances& tol) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be positive");
  const CoverConfig config = default_cover(kind);

  CoverAuditReport report;
  report.kind = kind;
  report.trials = trials;
  report.occupancy.assign(config.lambdas.size(), 0);
  report.witness_counts.assign(config.lambdas.size(), 0);
  report.min_witness_margin = std::numeric_limits<double>::infinity();

  for (int i = 0; i < trials; ++i) {
    const SpacePoint point = sample(kind, trial_seed(seed, static_cast<std::uint64_t>(i)), tol);
    const CoverClassification cls = classify(config, point, tol);
    bool covered = false;
    for (std::size_t r = 0; r < cls.memberships.size(); ++r) {
      if (cls.memberships[r]) {
        covered = true;
        ++report.occupancy[r];
      }
    }
    if (covered) ++report.covered;
    ++report.witness_counts[cls.witness];
    report.min_witness_margin = std::min(report.min_witness_margin, cls.margins[cls.witness]);

    if (kind.family == Family::AII) {
      try {
        multiplicity_audit(point, tol);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::OddMultiplicity && e.code() != ErrorCode::ClusterSpread) throw;
        ++report.odd_multiplicity_failures;
      }
    }
  }
  return report;
}

}  // namespace symspace
