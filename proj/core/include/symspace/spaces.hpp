#pragma once

#include <cstdint>
#include <string_view>

#include "symspace/linalg.hpp"

namespace symspace {

enum class Family { AI, AII };

std::string_view to_string(Family family);

/// AI(n) is realized inside SU(n) as symmetric matrices; AII(n) inside SU(2n)
/// as matrices with tX = J·X·tJ.
struct SpaceKind {
  Family family = Family::AI;
  int n = 1;

  Eigen::Index ambient_size() const { return family == Family::AI ? n : 2 * n; }

  friend bool operator==(const SpaceKind&, const SpaceKind&) = default;
};

struct MembershipReport {
  double unitarity = 0.0;    // ‖X·X* − E‖_F
  double determinant = 0.0;  // |det X − 1|
  double symmetry = 0.0;     // AI: ‖tX − X‖_F, AII: ‖tX − J·X·tJ‖_F
  bool member = false;

  double max_residual() const;
};

struct SpacePoint {
  SpaceKind kind;
  ComplexMatrix matrix;

  /// Builds a point after checking the membership laws; throws NotInSpace or
  /// DimensionMismatch.
  static SpacePoint checked(SpaceKind kind, ComplexMatrix X, const Tolerances& tol = {});
};

/// The 2n×2n matrix with −E_n top-right and E_n bottom-left.
ComplexMatrix structural_J(int n);

MembershipReport is_member(SpaceKind kind, const ComplexMatrix& X, const Tolerances& tol = {});

/// Haar-distributed element of SU(m), deterministic in the seed.
ComplexMatrix haar_special_unitary(Eigen::Index m, std::uint64_t seed);

/// A point obtained from the transitive action on the basepoint:
/// AI → P·tP, AII → J·(P·J·tP), with P Haar-random in SU(ambient_size()).
SpacePoint sample(SpaceKind kind, std::uint64_t seed, const Tolerances& tol = {});

/// Same as sample() with an explicit P (no randomness); P must be in SU.
SpacePoint point_from_action(SpaceKind kind, const ComplexMatrix& P);

/// c′(A + jB) = [[A, −conj B], [B, conj A]]. Throws DimensionMismatch, or
/// NotSymplectic when the result does not preserve J.
ComplexMatrix symplectic_embed(const ComplexMatrix& A, const ComplexMatrix& B,
                               const Tolerances& tol = {});

}  // namespace symspace
