#pragma once

#include <optional>
#include <vector>

#include "symspace/linalg.hpp"
#include "symspace/spaces.hpp"

namespace symspace {

struct FactorizationIntermediates {
  RealMatrix B;  // real orthogonal basis change, det +1
  ComplexMatrix C;  // diagonal matrix of chosen square roots
  std::vector<Complex> roots;  // c_1, …, c_n
  // Skew case only: representatives λ_k, one per conjugate eigenvalue pair
  // (λ_k, −λ_k); i^n·λ_1⋯λ_n = ±1.
  std::vector<Complex> pair_eigenvalues;
};

struct FactorizationResult {
  ComplexMatrix P;  // in SU(m)
  double residual = 0.0;
  std::optional<FactorizationIntermediates> intermediates;
};

/// X = P·tP for a symmetric special-unitary X.
FactorizationResult factor_symmetric(const ComplexMatrix& X, const Tolerances& tol = {});

/// X = P·J·tP for a skew-symmetric special-unitary X of even size. Inputs in
/// the SU(2n)-orbit of J only; the other Pfaffian sign is rejected as NotInSpace.
FactorizationResult factor_skew(const ComplexMatrix& X, const Tolerances& tol = {});

/// X = J·(P·J·tP) for an AII point, via the skew representative tJ·X.
FactorizationResult factor_AII(const SpacePoint& X, const Tolerances& tol = {});

/// Permutation matrix taking block ordering (1..n | n+1..2n) to the
/// interleaved ordering (1, n+1, 2, n+2, …).
RealMatrix perfect_shuffle(int n);

/// Multiplies C on the right by the block-swap matrix that exchanges the
/// first coordinates of the two n-blocks. Flips det C; applying it twice is
/// the identity.
ComplexMatrix block_swap_repair(const ComplexMatrix& C);

/// Square root with the argument taken in [0, 2π) and halved.
Complex half_angle_root(Complex z);

}  // namespace symspace
