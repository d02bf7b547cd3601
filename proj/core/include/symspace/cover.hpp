#pragma once

#include <cstdint>
#include <vector>

#include "symspace/linalg.hpp"
#include "symspace/spaces.hpp"

namespace symspace {

struct CoverConfig {
  SpaceKind kind;
  std::vector<Complex> lambdas;  // avoided eigenvalues λ_1, …, λ_n
  Complex certificate;           // AI: ∏λ_r, AII: ∏λ_r²
};

struct CoverClassification {
  std::vector<bool> memberships;
  std::vector<double> margins;
  std::size_t witness = 0;  // 0-based index of the largest margin
};

struct EigenCluster {
  Complex eigenvalue;
  int multiplicity = 0;
};

struct CoverAuditReport {
  SpaceKind kind;
  int trials = 0;
  int covered = 0;
  std::vector<int> occupancy;        // points lying in A_r, per r
  std::vector<int> witness_counts;   // points whose witness is r
  double min_witness_margin = 0.0;
  int odd_multiplicity_failures = 0;  // AII only

  double covered_fraction() const {
    return trials == 0 ? 1.0 : static_cast<double>(covered) / trials;
  }
};

/// λ_r = e^{iπ/(2n)}·e^{2πir/n}; ∏λ_r = ±i and ∏λ_r² = −1, so the same
/// choice certifies both families.
CoverConfig default_cover(SpaceKind kind);

/// Angle of the avoided eigenvalue λ_r in [0, 2π); usable as a branch angle.
double branch_angle(const CoverConfig& config, std::size_t r);

/// Classification of an arbitrary unitary matrix of the right size.
CoverClassification classify_matrix(const CoverConfig& config, const ComplexMatrix& X,
                                    const Tolerances& tol = {});

/// As classify_matrix, but the point must satisfy the membership laws.
CoverClassification classify(const CoverConfig& config, const SpacePoint& X,
                             const Tolerances& tol = {});

/// Single-linkage clustering of unit-circle values by angle.
std::vector<EigenCluster> cluster_eigenvalues(const std::vector<Complex>& values,
                                              double cluster_tol);

/// Eigenvalue clusters of an AII point; every multiplicity must be even.
std::vector<EigenCluster> multiplicity_audit(const SpacePoint& X, const Tolerances& tol = {});

CoverAuditReport cover_audit(SpaceKind kind, int trials, std::uint64_t seed,
                             const Tolerances& tol = {});

/// Seed of the i-th trial in an audit run.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace symspace
