#pragma once

// Pointwise constitutive classification in principal stretches: strong
// monotonicity (positive definiteness of DT), energetic stability under dead
// loads, and the radial loss of invertibility.

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "biotcube/biot_stress.hpp"
#include "biotcube/material.hpp"

namespace biotcube {

enum class Monotonicity { StronglyMonotone, SemidefiniteBoundary, NotMonotone };

std::string_view to_string(Monotonicity m);

/// Sign convention for the pair (i, j), zero-based: +1 for the cyclic pairs
/// (0,1), (1,2), (2,0); -1 for (1,0), (2,1), (0,2). Throws DomainError for
/// i == j or indices outside [0, 3).
int epsilon_sign(int i, int j);

/// Relative gap below which two stretches count as coincident and the
/// difference quotient is replaced by its limit.
inline constexpr double kCoincidenceTol = 1e-8;

struct PointClassification {
  Monotonicity monotonicity;
  bool energetically_stable;
  double jacobian_det;
  Vec3 minors;
  double min_eigenvalue;
};

Monotonicity classify_monotonicity(StiffnessRatio m, const PrincipalStretches& s,
                                   double tol = kDefaultDefinitenessTol);

struct StabilityDetail {
  /// Indexed by ordered pair in the order (0,1),(1,2),(2,0),(1,0),(2,1),(0,2).
  std::array<double, 6> ratios;
  /// Which ratios were replaced by their coincident-stretch limit.
  std::array<bool, 6> limit_form;
  double min_hessian_eigenvalue;
  bool stable;
};

/// All six ratio conditions (T_i - eps T_j) / (l_i - eps l_j) >= -tol plus
/// D^2 g positive semidefinite (smallest eigenvalue >= -tol).
StabilityDetail energetic_stability_detail(StiffnessRatio m, const PrincipalStretches& s,
                                           double tol = kDefaultDefinitenessTol);

bool energetic_stability(StiffnessRatio m, const PrincipalStretches& s,
                         double tol = kDefaultDefinitenessTol);

PointClassification classify_point(StiffnessRatio m, const PrincipalStretches& s,
                                   double tol = kDefaultDefinitenessTol);

/// The unique positive root lambda* of (2 - 3M) l^6 + 6 l^2 + 4 + 3M.
double invertibility_loss_radial(StiffnessRatio m);

enum class ScanMode { Monotonicity, Stability, JacobianSign };

enum class SliceKind {
  /// Points (l1, l1, l2); axis 0 is l1, axis 1 is l2.
  TwoEqual,
  /// Points (l1, l2, l3).
  Full,
};

struct ScanDomain {
  SliceKind kind = SliceKind::TwoEqual;
  std::array<Interval, 3> axes{};
  std::array<std::size_t, 3> resolution{};

  static ScanDomain two_equal(Interval l1, Interval l2, std::size_t n1, std::size_t n2);
  static ScanDomain box3(Interval l1, Interval l2, Interval l3, std::size_t n1,
                         std::size_t n2, std::size_t n3);
  /// Same interval and resolution on every axis.
  static ScanDomain two_equal(Interval both, std::size_t n) {
    return two_equal(both, both, n, n);
  }
  static ScanDomain box3(Interval all, std::size_t n) {
    return box3(all, all, all, n, n, n);
  }

  std::size_t point_count() const;
};

struct RegionSample {
  PrincipalStretches stretches;
  PointClassification classification;
  /// Membership for the requested mode: strongly monotone, stable, or
  /// det DT > tol.
  bool inside;
};

/// Evaluates every grid point. Output is row-major in the axis order (the
/// last axis varies fastest). Throws DomainError for an empty domain, a
/// resolution below 2 or a non-positive bound.
std::vector<RegionSample> region_scan(StiffnessRatio m, const ScanDomain& domain,
                                      ScanMode mode,
                                      double tol = kDefaultDefinitenessTol);

}  // namespace biotcube
