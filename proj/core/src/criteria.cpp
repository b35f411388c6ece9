#include "biotcube/criteria.hpp"

#include <algorithm>
#include <cmath>

#include "biotcube/errors.hpp"

namespace biotcube {

std::string_view to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::StronglyMonotone: return "strongly_monotone";
    case Monotonicity::SemidefiniteBoundary: return "semidefinite_boundary";
    case Monotonicity::NotMonotone: return "not_monotone";
  }
  return "unknown";
}

int epsilon_sign(int i, int j) {
  if (i < 0 || i > 2 || j < 0 || j > 2 || i == j)
    throw DomainError("epsilon_sign needs two distinct indices in [0, 3)");
  return (j == (i + 1) % 3) ? 1 : -1;
}

namespace {

Monotonicity from_definiteness(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return Monotonicity::StronglyMonotone;
    case Definiteness::PositiveSemidefiniteBoundary: return Monotonicity::SemidefiniteBoundary;
    case Definiteness::Indefinite: return Monotonicity::NotMonotone;
  }
  return Monotonicity::NotMonotone;
}

Monotonicity classify_eigenvalue(double smallest, double tol) {
  if (smallest > tol) return Monotonicity::StronglyMonotone;
  if (smallest < -tol) return Monotonicity::NotMonotone;
  return Monotonicity::SemidefiniteBoundary;
}

constexpr std::array<std::array<int, 2>, 6> kOrderedPairs{
    {{0, 1}, {1, 2}, {2, 0}, {1, 0}, {2, 1}, {0, 2}}};

StabilityDetail stability_from(const PrincipalStretches& s, const StressTriple& t,
                               const JacobianDT& dt, double min_eig, double tol) {
  StabilityDetail d{};
  d.min_hessian_eigenvalue = min_eig;
  bool ok = min_eig >= -tol;
  for (std::size_t k = 0; k < kOrderedPairs.size(); ++k) {
    const int i = kOrderedPairs[k][0], j = kOrderedPairs[k][1];
    const double eps = epsilon_sign(i, j);
    const double li = s[i], lj = s[j];
    const bool coincident = eps > 0.0 && std::abs(li - lj) < kCoincidenceTol * std::max(li, lj);
    if (coincident) {
      // limit l_i -> l_j of the difference quotient: d2g/dli2 - d2g/dli dlj
      d.ratios[k] = dt(i, i) - dt(i, j);
    } else {
      d.ratios[k] = (t[i] - eps * t[j]) / (li - eps * lj);
    }
    d.limit_form[k] = coincident;
    ok = ok && d.ratios[k] >= -tol;
  }
  d.stable = ok;
  return d;
}

}  // namespace

Monotonicity classify_monotonicity(StiffnessRatio m, const PrincipalStretches& s, double tol) {
  return from_definiteness(is_positive_definite(jacobian_dt(m, s).matrix(), tol));
}

StabilityDetail energetic_stability_detail(StiffnessRatio m, const PrincipalStretches& s,
                                           double tol) {
  const JacobianDT dt = jacobian_dt(m, s);
  const double min_eig = sym_eigen(dt.matrix()).values[2];
  return stability_from(s, principal_biot(m, s), dt, min_eig, tol);
}

bool energetic_stability(StiffnessRatio m, const PrincipalStretches& s, double tol) {
  return energetic_stability_detail(m, s, tol).stable;
}

PointClassification classify_point(StiffnessRatio m, const PrincipalStretches& s, double tol) {
  const JacobianDT dt = jacobian_dt(m, s);
  const double min_eig = sym_eigen(dt.matrix()).values[2];
  const StabilityDetail st = stability_from(s, principal_biot(m, s), dt, min_eig, tol);
  return {classify_eigenvalue(min_eig, tol), st.stable, dt.determinant(), dt.leading_minors(),
          min_eig};
}

double invertibility_loss_radial(StiffnessRatio m) {
  // In y = l^2 the sextic is the concave cubic s(y) = (2-3M) y^3 + 6y + 3M + 4
  // with s > 0 up to its maximum at y0 and strictly decreasing afterwards.
  const double M = m.value();
  auto cubic = [M](double y) { return (2.0 - 3.0 * M) * y * y * y + 6.0 * y + 3.0 * M + 4.0; };
  auto slope = [M](double y) { return 3.0 * (2.0 - 3.0 * M) * y * y + 6.0; };

  const double y0 = std::sqrt(2.0 / (3.0 * M - 2.0));
  double lo = y0;
  double hi = 2.0 * y0;
  while (cubic(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > 1e-14 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (cubic(mid) > 0.0 ? lo : hi) = mid;
  }
  double y = 0.5 * (lo + hi);
  const double dy = cubic(y) / slope(y);
  if (std::isfinite(dy) && std::abs(dy) < (hi - lo) + 1e-15 * y) y -= dy;
  return std::sqrt(y);
}

ScanDomain ScanDomain::two_equal(Interval l1, Interval l2, std::size_t n1, std::size_t n2) {
  ScanDomain d;
  d.kind = SliceKind::TwoEqual;
  d.axes = {l1, l2, Interval{1.0, 1.0}};
  d.resolution = {n1, n2, 1};
  return d;
}

ScanDomain ScanDomain::box3(Interval l1, Interval l2, Interval l3, std::size_t n1,
                            std::size_t n2, std::size_t n3) {
  ScanDomain d;
  d.kind = SliceKind::Full;
  d.axes = {l1, l2, l3};
  d.resolution = {n1, n2, n3};
  return d;
}

std::size_t ScanDomain::point_count() const {
  return kind == SliceKind::TwoEqual ? resolution[0] * resolution[1]
                                     : resolution[0] * resolution[1] * resolution[2];
}

namespace {

double grid_value(const Interval& iv, std::size_t n, std::size_t k) {
  return iv.lo + (iv.hi - iv.lo) * static_cast<double>(k) / static_cast<double>(n - 1);
}

bool inside_for(ScanMode mode, const PointClassification& c, double tol) {
  switch (mode) {
    case ScanMode::Monotonicity: return c.monotonicity == Monotonicity::StronglyMonotone;
    case ScanMode::Stability: return c.energetically_stable;
    case ScanMode::JacobianSign: return c.jacobian_det > tol;
  }
  return false;
}

}  // namespace

std::vector<RegionSample> region_scan(StiffnessRatio m, const ScanDomain& domain, ScanMode mode,
                                      double tol) {
  const int dims = domain.kind == SliceKind::TwoEqual ? 2 : 3;
  for (int a = 0; a < dims; ++a) {
    const Interval& iv = domain.axes[a];
    if (!(iv.lo > 0.0) || !(iv.hi > iv.lo) || !std::isfinite(iv.hi))
      throw DomainError("scan axes must be non-empty intervals inside (0, inf)");
    if (domain.resolution[a] < 2) throw DomainError("scan resolution must be >= 2 per axis");
  }

  std::vector<RegionSample> out;
  out.reserve(domain.point_count());
  auto emit = [&](const PrincipalStretches& s) {
    const PointClassification c = classify_point(m, s, tol);
    out.push_back({s, c, inside_for(mode, c, tol)});
  };

  const auto& n = domain.resolution;
  if (domain.kind == SliceKind::TwoEqual) {
    for (std::size_t i = 0; i < n[0]; ++i)
      for (std::size_t j = 0; j < n[1]; ++j)
        emit(PrincipalStretches::two_equal(grid_value(domain.axes[0], n[0], i),
                                           grid_value(domain.axes[1], n[1], j)));
  } else {
    for (std::size_t i = 0; i < n[0]; ++i)
      for (std::size_t j = 0; j < n[1]; ++j)
        for (std::size_t k = 0; k < n[2]; ++k)
          emit(PrincipalStretches(grid_value(domain.axes[0], n[0], i),
                                  grid_value(domain.axes[1], n[1], j),
                                  grid_value(domain.axes[2], n[2], k)));
  }
  return out;
}

}  // namespace biotcube
