#pragma once

#include <variant>
#include <vector>

#include "symspace/linalg.hpp"
#include "symspace/spaces.hpp"

namespace symspace {

/// Logarithm of a unitary matrix with every eigenvalue angle lifted into
/// (alpha, alpha + 2π).
struct BranchLog {
  ComplexMatrix H;  // skew-Hermitian
  double alpha = 0.0;
  long winding = 0;  // round(Im tr H / 2π)
  double winding_deviation = 0.0;  // |Im tr H / 2π − winding|
  double margin = 0.0;  // smallest angular distance of spec(X) from alpha
};

struct HomotopySample {
  double s = 0.0;
  SpacePoint point;
  MembershipReport residuals;
  double log_skew_residual = 0.0;  // ‖G* + G‖_F of the interpolated logarithm
};

struct HomotopyPath {
  SpaceKind kind;
  SpacePoint source;
  Complex target_scalar;
  long winding = 0;
  std::vector<HomotopySample> samples;
};

/// Throws BranchViolation when an eigenvalue sits within branch_margin of
/// e^{iα}, NotUnitary for non-unitary input.
BranchLog branch_log(const ComplexMatrix& X, double alpha, const Tolerances& tol = {});

/// Samples F(X, s) = exp((1 − s)·log X + s·(2πik/m)·E) at s = j/steps, where m
/// is the ambient size (2πik/n for AI, πik/n for AII).
HomotopyPath contract(const SpacePoint& X, double alpha, int steps = 16,
                      const Tolerances& tol = {});

struct InconsistentWinding {
  std::vector<long> distinct;
};

std::variant<long, InconsistentWinding> winding_of_component(const std::vector<SpacePoint>& points,
                                                             double alpha,
                                                             const Tolerances& tol = {});

}  // namespace symspace
