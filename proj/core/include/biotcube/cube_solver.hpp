#pragma once

// Rivlin's cube under equal dead loads: solutions of T_Biot(U) = alpha * 1
// for the Ciarlet-Geymonat model.
//
// Solutions come in three kinds. The radial solution (b, b, b) exists and is
// unique for every alpha. Non-radial solutions have exactly two equal
// stretches (l1, l1, l2); writing the load on that family as a function
// ell(l1), they exist only for alpha >= min ell = alpha_flat, one on each
// side of the minimizer lambda_flat. The side containing lambda* carries the
// branch that passes through the radial bifurcation point at alpha*.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "biotcube/criteria.hpp"
#include "biotcube/material.hpp"

namespace biotcube {

/// Dead-load magnitude alpha, mu-normalized.
class LoadMagnitude {
 public:
  /// Throws DomainError if alpha is not finite.
  explicit LoadMagnitude(double alpha);

  double value() const { return alpha_; }

 private:
  double alpha_;
};

/// Solution count changes from 0 to 2 through a single solution when
/// |alpha - alpha_flat| <= this. Pass a looser onset_tol to
/// nonradial_solutions to treat a rounded onset load as the onset itself.
inline constexpr double kOnsetTol = 1e-8;

/// T1(b, b, b) = ((3M-2) b^6 + 6 b^2 - 4 - 3M) / (6 b).
double f_biot(StiffnessRatio m, double beta);
double f_biot_derivative(StiffnessRatio m, double beta);

/// The unique b > 0 with f_biot(b) = alpha.
double radial_solution(StiffnessRatio m, LoadMagnitude alpha);

/// The l2 != l1 that makes (l1, l1, l2) an equilibrium for some load.
double branch_lambda2(StiffnessRatio m, double l1);

/// The load carried by (l1, l1, branch_lambda2(l1)). Convex, and divergent
/// as l1 -> 0 and l1 -> inf.
double ell(StiffnessRatio m, double l1);
double ell_derivative(StiffnessRatio m, double l1);
double ell_second_derivative(StiffnessRatio m, double l1);

struct BranchOnset {
  double lambda_flat;
  double alpha_flat;
};

/// Minimizer of ell: golden-section search, then Newton on ell'.
BranchOnset ell_min(StiffnessRatio m);

enum class BranchSide {
  /// The side of lambda_flat that contains lambda*.
  TowardBifurcation,
  AwayFromBifurcation,
  /// alpha within kOnsetTol of alpha_flat: the two sides coincide.
  Onset,
};

std::string_view to_string(BranchSide side);

struct NonradialSolution {
  PrincipalStretches stretches;  // (l1, l1, l2)
  BranchSide side;
};

/// 0, 1 or 2 solutions with exactly two equal stretches.
std::vector<NonradialSolution> nonradial_solutions(StiffnessRatio m, LoadMagnitude alpha,
                                                   double onset_tol = kOnsetTol);

struct BifurcationReport {
  double lambda_star;
  double alpha_star;
  double lambda_flat;
  double alpha_flat;
  /// |(2-3M) l*^6 + 6 l*^2 + 4 + 3M|
  double sextic_residual;
  /// |ell'(lambda_flat)|
  double onset_slope;
};

BifurcationReport bifurcation_point(StiffnessRatio m);

/// max_i |T_i(s) - alpha|.
double stress_residual(StiffnessRatio m, const PrincipalStretches& s, LoadMagnitude alpha);

struct NewtonOptions {
  int max_iterations = 100;
  double tolerance = 1e-10;
};

struct NewtonResult {
  PrincipalStretches stretches;
  bool converged;
  int iterations;
  double residual;
};

/// Damped Newton on (T1 - alpha, T2 - alpha, T3 - alpha). Steps that would
/// leave the positive octant are halved; then the step is halved until the
/// residual norm decreases. Non-convergence is reported, not thrown.
NewtonResult solve_full_system(StiffnessRatio m, LoadMagnitude alpha,
                               const PrincipalStretches& initial, NewtonOptions options = {});

struct SolutionCluster {
  std::string label;  // "radial", "nonradial_a", "nonradial_b"
  PrincipalStretches center;  // sorted descending
  int count;
};

struct DistinctStretchReport {
  std::uint64_t seed;
  int trials;
  int converged;
  /// Converged solutions with every pairwise stretch gap > 1e-6.
  int all_distinct;
  /// Converged solutions that match no known branch within 1e-4.
  int unmatched;
  std::vector<SolutionCluster> clusters;
};

/// Newton from `trials` seeded random starts with distinct entries in
/// [0.3, 3]^3; converged points are sorted and matched to the radial and
/// non-radial solutions.
DistinctStretchReport distinct_stretch_scan(StiffnessRatio m, LoadMagnitude alpha, int trials,
                                            std::uint64_t seed);

/// g(s) - alpha (l1 + l2 + l3) per unit reference volume.
double total_energy_homogeneous(StiffnessRatio m, const PrincipalStretches& s,
                                LoadMagnitude alpha);

enum class BranchLabel { Radial, NonradialA, NonradialB };

std::string_view to_string(BranchLabel label);

struct SolutionRecord {
  BranchLabel label;
  PrincipalStretches stretches;
  double residual;
  Monotonicity monotonicity;
  bool stable;
  double internal_energy;
  double total_energy;
};

/// All homogeneous solutions at one load, radial first.
struct CubeSolutionSet {
  double alpha;
  std::vector<SolutionRecord> solutions;
};

CubeSolutionSet solve_cube(StiffnessRatio m, LoadMagnitude alpha,
                           double tol = kDefaultDefinitenessTol);

struct BranchTrace {
  std::vector<CubeSolutionSet> records;
};

/// Loads alpha_min + k * step for k = 0, 1, ... while <= alpha_max (each
/// rounded to 12 decimals). Throws DomainError for an empty range or a
/// step below 1e-9.
BranchTrace trace_branches(StiffnessRatio m, double alpha_min, double alpha_max, double step,
                           double tol = kDefaultDefinitenessTol);

}  // namespace biotcube
