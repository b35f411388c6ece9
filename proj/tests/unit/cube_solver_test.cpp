#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "biotcube/biot_stress.hpp"
#include "biotcube/criteria.hpp"
#include "biotcube/cube_solver.hpp"
#include "biotcube/errors.hpp"

namespace biotcube {
namespace {

const StiffnessRatio kOne(1.0);

struct Frozen {
  double m, lambda_star, alpha_star, lambda_flat, alpha_flat;
};

// 50-digit values from tests/oracles/generate_oracles.py
constexpr Frozen kFrozen[] = {
    {0.7, 2.8655702271671205418, 5.7311404543342410837, 3.7379339260432723567, 5.1138607951566077399},
    {1.0, 1.7031065365713212441, 3.4062130731426424881, 2.2011810377803275461, 3.0967195759147555653},
    {2.0, 1.3110505788420541577, 2.6221011576841083153, 1.6805096330360593414, 2.420285580732841366},
    {10.0, 1.0647669522457856643, 2.1295339044915713285, 1.3487664094631491421, 1.9997462628251431784},
};

TEST(FBiot, Values) {
  EXPECT_DOUBLE_EQ(f_biot(kOne, 1.0), 0.0);
  EXPECT_NEAR(f_biot(kOne, 1.62561), 2.8, 1e-3);
  EXPECT_NEAR(f_biot(kOne, 1.70237), 3.4, 1e-3);
}

TEST(FBiot, MatchesPrincipalStress) {
  for (double b : {0.4, 1.3, 2.2})
    EXPECT_NEAR(f_biot(kOne, b), principal_biot(kOne, PrincipalStretches::radial(b))[0], 1e-13);
}

TEST(RadialSolution, Values) {
  EXPECT_NEAR(radial_solution(kOne, LoadMagnitude(0.0)), 1.0, 1e-14);
  EXPECT_NEAR(radial_solution(kOne, LoadMagnitude(2.8)), 1.6256138888001000638, 1e-13);
  EXPECT_NEAR(radial_solution(kOne, LoadMagnitude(3.4)), 1.7023675369131165745, 1e-13);
  const double b = radial_solution(kOne, LoadMagnitude(-5.0));
  EXPECT_NEAR(b, 0.22335197419995649287, 1e-13);
  EXPECT_LE(std::abs(f_biot(kOne, b) + 5.0), 1e-12);
}

TEST(RadialSolution, IncreasingInLoad) {
  double prev = 0.0;
  for (double a = -50; a <= 50; a += 0.5) {
    const double b = radial_solution(kOne, LoadMagnitude(a));
    EXPECT_GT(b, prev);
    prev = b;
  }
}

TEST(LoadMagnitude, RejectsNonFinite) {
  EXPECT_THROW(static_cast<void>(LoadMagnitude(NAN)), DomainError);
  EXPECT_THROW(static_cast<void>(LoadMagnitude(INFINITY)), DomainError);
  EXPECT_THROW(static_cast<void>(LoadMagnitude(-INFINITY)), DomainError);
}

TEST(BranchLambda2, Values) {
  const double star = invertibility_loss_radial(kOne);
  EXPECT_NEAR(branch_lambda2(kOne, star), star, 1e-6);
  EXPECT_NEAR(branch_lambda2(kOne, 1.0), 7.0, 1e-14);
  // (3M-2) l1^4 l2^2 - 6 l1 l2 - 3M - 4 = 0 on the branch
  const double l2 = branch_lambda2(kOne, 2.0);
  EXPECT_NEAR(16 * l2 * l2 - 12 * l2 - 7, 0.0, 1e-10);
}

TEST(BranchLambda2, SolvesStressEquation) {
  for (double l1 : {0.5, 1.5, 2.5}) {
    const double l2 = branch_lambda2(kOne, l1);
    const StressTriple t = principal_biot(kOne, PrincipalStretches::two_equal(l1, l2));
    EXPECT_NEAR(t[0], t[2], 1e-10);
    EXPECT_NEAR(t[0], ell(kOne, l1), 1e-10);
  }
}

TEST(Ell, Values) {
  const double star = invertibility_loss_radial(kOne);
  EXPECT_NEAR(ell(kOne, star), f_biot(kOne, star), 1e-6);
  EXPECT_NEAR(ell(kOne, 1.5), 3.8629443512690665996, 1e-13);
  EXPECT_GT(ell(kOne, 1e-3), 100.0);
  EXPECT_GT(ell(kOne, 1e3), 100.0);
}

TEST(Ell, DerivativesMatchFiniteDifferences) {
  for (double m : {0.7, 1.0, 10.0})
    for (double x : {0.3, 1.0, 2.2, 5.0}) {
      const StiffnessRatio r(m);
      const double h = 1e-6 * x;
      const double d1 = (ell(r, x + h) - ell(r, x - h)) / (2 * h);
      const double d2 = (ell_derivative(r, x + h) - ell_derivative(r, x - h)) / (2 * h);
      EXPECT_NEAR(ell_derivative(r, x), d1, 1e-6 * std::max(1.0, std::abs(d1)));
      EXPECT_NEAR(ell_second_derivative(r, x), d2, 1e-6 * std::max(1.0, std::abs(d2)));
    }
}

TEST(EllMin, Values) {
  const BranchOnset o = ell_min(kOne);
  EXPECT_NEAR(o.alpha_flat, 3.09675, 1e-3);
  EXPECT_GT(ell(kOne, o.lambda_flat + 0.1), o.alpha_flat);
  EXPECT_GT(ell(kOne, o.lambda_flat - 0.1), o.alpha_flat);
  const BranchOnset t = ell_min(StiffnessRatio(2.0));
  const double x = t.lambda_flat, h = 1e-3 * x;
  EXPECT_GT((ell(StiffnessRatio(2.0), x + h) - 2 * t.alpha_flat + ell(StiffnessRatio(2.0), x - h)) / (h * h), 0.0);
}

TEST(Bifurcation, FrozenOracles) {
  for (const Frozen& f : kFrozen) {
    const BifurcationReport r = bifurcation_point(StiffnessRatio(f.m));
    EXPECT_NEAR(r.lambda_star, f.lambda_star, 1e-12) << f.m;
    EXPECT_NEAR(r.alpha_star, f.alpha_star, 1e-12) << f.m;
    EXPECT_NEAR(r.lambda_flat, f.lambda_flat, 1e-9) << f.m;
    EXPECT_NEAR(r.alpha_flat, f.alpha_flat, 1e-12) << f.m;
    EXPECT_LT(r.alpha_flat, r.alpha_star);
    EXPECT_LE(r.sextic_residual, 1e-12);
  }
}

TEST(Bifurcation, CrossingIdentity) {
  const BifurcationReport r = bifurcation_point(kOne);
  EXPECT_NEAR(ell(kOne, r.lambda_star), r.alpha_star, 1e-6);
  EXPECT_NEAR(r.alpha_star, 2 * r.lambda_star, 1e-12);
}

TEST(Nonradial, Counts) {
  EXPECT_TRUE(nonradial_solutions(kOne, LoadMagnitude(-1)).empty());
  EXPECT_TRUE(nonradial_solutions(kOne, LoadMagnitude(3.0)).empty());
  const double flat = bifurcation_point(kOne).alpha_flat;
  const auto one = nonradial_solutions(kOne, LoadMagnitude(flat));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].side, BranchSide::Onset);
  // 3.09675 is alpha_flat rounded to five decimals; two close solutions
  // exist there unless the onset tolerance covers the rounding.
  EXPECT_EQ(nonradial_solutions(kOne, LoadMagnitude(3.09675), 5e-5).size(), 1u);
  const auto split = nonradial_solutions(kOne, LoadMagnitude(3.09675));
  ASSERT_EQ(split.size(), 2u);
  EXPECT_LT(split[1].stretches[0] - split[0].stretches[0], 0.05);
  EXPECT_TRUE(nonradial_solutions(kOne, LoadMagnitude(flat - 1e-6)).empty());
  const auto two = nonradial_solutions(kOne, LoadMagnitude(3.4));
  ASSERT_EQ(two.size(), 2u);
  for (const auto& s : two) EXPECT_LE(stress_residual(kOne, s.stretches, LoadMagnitude(3.4)), 1e-9);
  EXPECT_EQ(two[0].side, BranchSide::TowardBifurcation);
  EXPECT_EQ(two[1].side, BranchSide::AwayFromBifurcation);
}

TEST(Nonradial, TowardBranchPassesThroughBifurcation) {
  const BifurcationReport r = bifurcation_point(kOne);
  const auto at = nonradial_solutions(kOne, LoadMagnitude(r.alpha_star));
  ASSERT_EQ(at.size(), 2u);
  EXPECT_NEAR(at[0].stretches[0], r.lambda_star, 1e-8);
  EXPECT_NEAR(at[0].stretches[2], r.lambda_star, 1e-8);
}

TEST(Newton, Examples) {
  const NewtonResult a = solve_full_system(kOne, LoadMagnitude(0), {1.1, 0.9, 1.0});
  ASSERT_TRUE(a.converged);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(a.stretches[i], 1.0, 1e-10);
  const NewtonResult b = solve_full_system(kOne, LoadMagnitude(2.8), PrincipalStretches::radial(1.6));
  ASSERT_TRUE(b.converged);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(b.stretches[i], 1.62561, 1e-5);
  const NewtonResult c = solve_full_system(kOne, LoadMagnitude(4), {2.3, 1.1, 0.7});
  if (c.converged) {
    Vec3 v = c.stretches.values();
    std::sort(v.begin(), v.end());
    EXPECT_TRUE(v[1] - v[0] < 1e-6 || v[2] - v[1] < 1e-6);
  }
}

TEST(DistinctScan, NoAllDistinctSolutions) {
  for (double a : {3.4, 5.0}) {
    const DistinctStretchReport r = distinct_stretch_scan(kOne, LoadMagnitude(a), 200, 42);
    EXPECT_GT(r.converged, 0);
    EXPECT_EQ(r.all_distinct, 0);
    EXPECT_EQ(r.unmatched, 0);
  }
}

TEST(DistinctScan, CompressionOnlyRadial) {
  const DistinctStretchReport r = distinct_stretch_scan(kOne, LoadMagnitude(-2), 200, 42);
  EXPECT_GT(r.converged, 0);
  for (const auto& c : r.clusters) EXPECT_EQ(c.label, "radial");
}

TEST(DistinctScan, ClustersAtLargeLoad) {
  const DistinctStretchReport r = distinct_stretch_scan(kOne, LoadMagnitude(5), 200, 42);
  const auto nr = nonradial_solutions(kOne, LoadMagnitude(5));
  ASSERT_EQ(nr.size(), 2u);
  for (const auto& c : r.clusters) {
    if (c.label == "radial") continue;
    const auto& ref = nr[c.label == "nonradial_a" ? 0 : 1].stretches.sorted_descending();
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(c.center[i], ref[i], 1e-4);
  }
}

TEST(DistinctScan, Deterministic) {
  const auto a = distinct_stretch_scan(kOne, LoadMagnitude(5), 50, 9);
  const auto b = distinct_stretch_scan(kOne, LoadMagnitude(5), 50, 9);
  EXPECT_EQ(a.converged, b.converged);
  ASSERT_EQ(a.clusters.size(), b.clusters.size());
  for (std::size_t i = 0; i < a.clusters.size(); ++i) EXPECT_EQ(a.clusters[i].count, b.clusters[i].count);
}

TEST(TotalEnergy, Values) {
  EXPECT_DOUBLE_EQ(total_energy_homogeneous(kOne, PrincipalStretches::radial(1), LoadMagnitude(0)), 1.5);
  const double b = radial_solution(kOne, LoadMagnitude(3.0));
  EXPECT_LT(total_energy_homogeneous(kOne, PrincipalStretches::radial(b), LoadMagnitude(3.0)), 0.0);
  const double c = radial_solution(kOne, LoadMagnitude(-2.0));
  EXPECT_GT(total_energy_homogeneous(kOne, PrincipalStretches::radial(c), LoadMagnitude(-2.0)), 0.0);
}

TEST(Trace, SolutionCountsAcrossOnset) {
  const BranchTrace t = trace_branches(kOne, -2, 5, 0.1);
  ASSERT_EQ(t.records.size(), 71u);
  double prev = -INFINITY;
  for (const auto& rec : t.records) {
    EXPECT_GT(rec.alpha, prev);
    prev = rec.alpha;
    EXPECT_EQ(rec.solutions[0].label, BranchLabel::Radial);
    if (rec.alpha < 3.09) EXPECT_EQ(rec.solutions.size(), 1u) << rec.alpha;
    if (rec.alpha > 3.10) EXPECT_EQ(rec.solutions.size(), 3u) << rec.alpha;
    for (const auto& s : rec.solutions) EXPECT_LE(s.residual, 1e-9);
  }
}

TEST(Trace, CompressionRadialOnly) {
  const BranchTrace t = trace_branches(kOne, -2, 0, 0.1);
  EXPECT_EQ(t.records.size(), 21u);
  for (const auto& rec : t.records) EXPECT_EQ(rec.solutions.size(), 1u);
}

TEST(Trace, BranchDichotomy) {
  const BranchTrace t = trace_branches(kOne, 3.2, 5, 0.1);
  for (const auto& rec : t.records)
    for (const auto& s : rec.solutions) {
      if (s.label == BranchLabel::NonradialA) EXPECT_EQ(s.monotonicity, Monotonicity::NotMonotone);
      if (s.label == BranchLabel::NonradialB) EXPECT_EQ(s.monotonicity, Monotonicity::StronglyMonotone);
      if (s.label != BranchLabel::Radial)
        EXPECT_EQ(s.stable, s.monotonicity == Monotonicity::StronglyMonotone);
    }
}

TEST(Trace, Errors) {
  EXPECT_THROW(trace_branches(kOne, 1, 0, 0.1), DomainError);
  EXPECT_THROW(trace_branches(kOne, 0, 1, 0.0), DomainError);
  EXPECT_THROW(trace_branches(kOne, 0, 1, -0.1), DomainError);
}

TEST(Labels, Names) {
  EXPECT_EQ(to_string(BranchLabel::Radial), "radial");
  EXPECT_EQ(to_string(BranchLabel::NonradialA), "nonradial_a");
  EXPECT_EQ(to_string(BranchLabel::NonradialB), "nonradial_b");
}

}  // namespace
}  // namespace biotcube
