#include "symspace/cover.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <set>

#include <gtest/gtest.h>

#include "symspace/error.hpp"
#include "symspace/homotopy.hpp"
#include "test_support.hpp"

namespace symspace {
namespace {

using std::numbers::pi;
constexpr Complex I{0.0, 1.0};

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no symspace::Error raised";
  return ErrorCode::InvalidArgument;
}

TEST(DefaultCover, SingleSetIsI) {
  const CoverConfig c = default_cover({Family::AI, 1});
  ASSERT_EQ(c.lambdas.size(), 1u);
  EXPECT_NEAR(std::abs(c.lambdas[0] - I), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(c.certificate - I), 0.0, 1e-15);
}

TEST(DefaultCover, AIITwoSets) {
  const CoverConfig c = default_cover({Family::AII, 2});
  ASSERT_EQ(c.lambdas.size(), 2u);
  EXPECT_NEAR(std::abs(c.lambdas[0] - std::polar(1.0, 5 * pi / 4)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(c.lambdas[1] - std::polar(1.0, pi / 4)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(c.certificate + 1.0), 0.0, 1e-14);
}

TEST(DefaultCover, CertificatesAndSeparation) {
  for (int n = 1; n <= 12; ++n) {
    const CoverConfig ai = default_cover({Family::AI, n});
    const CoverConfig aii = default_cover({Family::AII, n});
    Complex prod = 1.0, prod_sq = 1.0;
    for (const Complex& l : ai.lambdas) {
      EXPECT_NEAR(std::abs(l), 1.0, 1e-12);
      prod *= l;
      prod_sq *= l * l;
    }
    EXPECT_NEAR(std::abs(ai.certificate - prod), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(aii.certificate - prod_sq), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(ai.certificate - 1.0), std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(std::abs(aii.certificate - 1.0), 2.0, 1e-12);
    for (std::size_t a = 0; a < ai.lambdas.size(); ++a) {
      for (std::size_t b = a + 1; b < ai.lambdas.size(); ++b) {
        const double gap = angular_distance(std::arg(ai.lambdas[a]), std::arg(ai.lambdas[b]));
        EXPECT_GE(gap, 2 * pi / n - 1e-12);
      }
    }
  }
  EXPECT_EQ(code_of([] { default_cover({Family::AI, 0}); }), ErrorCode::InvalidArgument);
}

TEST(Classify, IdentityMarginsAreFoldedAngles) {
  const SpaceKind kind{Family::AI, 3};
  const CoverClassification c =
      classify(default_cover(kind), SpacePoint::checked(kind, identity(3)));
  ASSERT_EQ(c.margins.size(), 3u);
  EXPECT_NEAR(c.margins[0], 5 * pi / 6, 1e-12);
  EXPECT_NEAR(c.margins[1], pi / 2, 1e-12);
  EXPECT_NEAR(c.margins[2], pi / 6, 1e-12);
  for (bool m : c.memberships) EXPECT_TRUE(m);
  EXPECT_EQ(c.witness, 0u);
}

TEST(Classify, DoubledSpectrumIsNeverCovered) {
  for (int n = 1; n <= 5; ++n) {
    const SpaceKind kind{Family::AII, n};
    const CoverConfig cover = default_cover(kind);
    std::vector<Complex> spectrum;
    for (const Complex& l : cover.lambdas) {
      spectrum.push_back(l);
      spectrum.push_back(l);
    }
    const ComplexMatrix D = diagonal(spectrum);
    // det = ∏λ_r² = −1, so this unitary is not an AII point.
    EXPECT_NEAR(std::abs(D.determinant() + 1.0), 0.0, 1e-12);
    EXPECT_GE(std::abs(D.determinant() - 1.0), 1.0);
    const ComplexMatrix U = haar_special_unitary(2 * n, 77 + static_cast<std::uint64_t>(n));
    const ComplexMatrix X = U * D * U.adjoint();
    const CoverClassification c = classify_matrix(cover, X);
    for (bool m : c.memberships) EXPECT_FALSE(m);
    EXPECT_EQ(code_of([&] { classify(cover, SpacePoint{kind, X}); }), ErrorCode::NotInSpace);
  }
}

TEST(Classify, KindAndSizeChecks) {
  const CoverConfig cover = default_cover({Family::AI, 2});
  EXPECT_EQ(code_of([&] { classify_matrix(cover, identity(3)); }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([&] { classify(cover, SpacePoint::checked({Family::AII, 1}, identity(2))); }),
            ErrorCode::DimensionMismatch);
}

TEST(Classify, AgreesWithBranchLog) {
  int hits = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const SpaceKind kind{trial % 2 == 0 ? Family::AI : Family::AII, 1 + (trial / 2) % 4};
    const CoverConfig cover = default_cover(kind);
    const std::size_t r = static_cast<std::size_t>(trial) % cover.lambdas.size();
    SpacePoint X = sample(kind, 90000 + static_cast<std::uint64_t>(trial));
    if (trial % 10 == 0 && kind.family == Family::AI && kind.n >= 2) {
      // Place λ_r in the spectrum so the negative side is exercised.
      std::vector<Complex> d(static_cast<std::size_t>(kind.n), 1.0);
      d[0] = cover.lambdas[r];
      d[1] = std::conj(cover.lambdas[r]);
      X = SpacePoint::checked(kind, diagonal(d));
    }
    const CoverClassification c = classify(cover, X);
    bool violated = false;
    try {
      branch_log(X.matrix, branch_angle(cover, r));
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::BranchViolation);
      violated = true;
    }
    EXPECT_EQ(c.memberships[r], !violated);
    if (violated) ++hits;
  }
  EXPECT_GT(hits, 0);
}

TEST(Multiplicity, BasepointsAreSingleClusters) {
  for (int n = 1; n <= 4; ++n) {
    const SpaceKind kind{Family::AII, n};
    const auto plus = multiplicity_audit(SpacePoint::checked(kind, identity(2 * n)));
    ASSERT_EQ(plus.size(), 1u);
    EXPECT_EQ(plus[0].multiplicity, 2 * n);
    EXPECT_NEAR(std::abs(plus[0].eigenvalue - 1.0), 0.0, 1e-12);
    const auto minus = multiplicity_audit(SpacePoint::checked(kind, -identity(2 * n)));
    ASSERT_EQ(minus.size(), 1u);
    EXPECT_EQ(minus[0].multiplicity, 2 * n);
    EXPECT_NEAR(std::abs(minus[0].eigenvalue + 1.0), 0.0, 1e-12);
  }
}

TEST(Multiplicity, GenericSamplesPairUp) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto clusters = multiplicity_audit(sample({Family::AII, 2}, seed));
    int total = 0;
    for (const EigenCluster& c : clusters) {
      EXPECT_EQ(c.multiplicity % 2, 0);
      total += c.multiplicity;
    }
    EXPECT_EQ(total, 4);
  }
  EXPECT_EQ(code_of([] { multiplicity_audit(sample({Family::AI, 2}, 1)); }), ErrorCode::NotInSpace);
}

TEST(Multiplicity, ClusteringCountsOddGroups) {
  const auto clusters = cluster_eigenvalues({1.0, 1.0, -1.0}, 1e-6);
  ASSERT_EQ(clusters.size(), 2u);
  int odd = 0;
  for (const EigenCluster& c : clusters) odd += c.multiplicity % 2;
  EXPECT_EQ(odd, 1);
}

TEST(CoverAudit, EverySampleIsCovered) {
  for (Family f : {Family::AI, Family::AII}) {
    for (int n = 1; n <= 3; ++n) {
      const CoverAuditReport report = cover_audit({f, n}, 200, 2024);
      EXPECT_EQ(report.trials, 200);
      EXPECT_EQ(report.covered, 200);
      EXPECT_EQ(report.covered_fraction(), 1.0);
      EXPECT_EQ(report.odd_multiplicity_failures, 0);
      EXPECT_EQ(report.occupancy.size(), static_cast<std::size_t>(n));
      int witnesses = 0;
      for (int w : report.witness_counts) witnesses += w;
      EXPECT_EQ(witnesses, 200);
      EXPECT_GT(report.min_witness_margin, 1e-8);
    }
  }
}

TEST(CoverAudit, TrialSeedsAreDistinct) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(trial_seed(7, i));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_EQ(trial_seed(7, 3), trial_seed(7, 3));
}

}  // namespace
}  // namespace symspace
