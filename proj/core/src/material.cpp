#include "biotcube/material.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "biotcube/errors.hpp"

namespace biotcube {

StiffnessRatio::StiffnessRatio(double m) : m_(m) {
  if (!std::isfinite(m) || !(m > 2.0 / 3.0))
    throw ParameterDomainError("stiffness ratio M must satisfy M > 2/3, got " +
                               std::to_string(m));
}

MaterialParams MaterialParams::from_lame(double mu, double lambda) {
  if (!std::isfinite(mu) || !(mu > 0.0))
    throw ParameterDomainError("shear modulus mu must be > 0");
  if (!std::isfinite(lambda) || !(lambda > 0.0))
    throw ParameterDomainError("Lame parameter lambda must be > 0 (equivalently M > 2/3)");
  return {mu, lambda};
}

MaterialParams MaterialParams::from_ratio(double m, double mu) {
  const StiffnessRatio r(m);
  return from_lame(mu, mu * (r.value() - 2.0 / 3.0));
}

double CiarletGeymonatVolumetric::value(double x) const {
  const double lg = std::log(x);
  return -lg + k_ * (x * x - 2.0 * lg - 1.0);
}

double CiarletGeymonatVolumetric::first(double x) const {
  return -1.0 / x + 2.0 * k_ * (x - 1.0 / x);
}

double CiarletGeymonatVolumetric::second(double x) const {
  return 1.0 / (x * x) + 2.0 * k_ * (1.0 + 1.0 / (x * x));
}

CiarletGeymonatVolumetric cg_volumetric(double m) {
  return CiarletGeymonatVolumetric(StiffnessRatio(m));
}

PrincipalStretches::PrincipalStretches(double l1, double l2, double l3) : l_{l1, l2, l3} {
  for (double l : l_)
    if (!std::isfinite(l) || !(l > 0.0))
      throw DomainError("principal stretches must be finite and positive");
}

PrincipalStretches PrincipalStretches::sorted_descending() const {
  Vec3 s = l_;
  std::sort(s.begin(), s.end(), std::greater<>());
  return PrincipalStretches(s);
}

double energy_principal(StiffnessRatio m, const PrincipalStretches& stretches) {
  // sorted so that the rounding, and hence the value, is permutation invariant
  const PrincipalStretches s = stretches.sorted_descending();
  const double j = s.product();
  const double lg = std::log(j);
  const double sq = s[0] * s[0] + s[1] * s[1] + s[2] * s[2];
  return 0.5 * ((3.0 * m.value() - 2.0) / 6.0 * (j * j - 2.0 * lg - 1.0) - 2.0 * lg + sq);
}

double radial_scalar_response(const VolumetricFunction& h, double x) {
  const double c = std::cbrt(x);
  return c + h.first(x) * c * c;
}

double radial_scalar_response_derivative(const VolumetricFunction& h, double x) {
  const double c = std::cbrt(x);
  return 1.0 / (3.0 * c * c) + h.second(x) * c * c + 2.0 / 3.0 * h.first(x) / c;
}

namespace {

// Decade-to-decade increments at one end of the grid. `r` is ordered from the
// far end (index 0) toward the interior.
bool diverges(const std::vector<double>& r, std::size_t per_decade, double sign) {
  if (r.size() < 2 * per_decade + 1) return false;
  // moving toward the end, the response must head monotonically to sign * inf
  for (std::size_t k = 0; k < 2 * per_decade; ++k)
    if (!(sign * (r[k] - r[k + 1]) > 0.0)) return false;
  const double last = sign * (r[0] - r[per_decade]);
  const double previous = sign * (r[per_decade] - r[2 * per_decade]);
  // convergent tails shrink geometrically from decade to decade
  return last >= 0.99 * previous;
}

}  // namespace

RadialUniquenessReport check_unique_radial_conditions(const VolumetricFunction& h,
                                                      Interval domain,
                                                      std::size_t n_samples) {
  if (!(domain.lo > 0.0) || !(domain.hi > domain.lo) || !std::isfinite(domain.hi))
    throw DomainError("domain must be an interval inside (0, inf) with lo < hi");
  if (n_samples < 2) throw DomainError("need at least two samples");

  const double log_lo = std::log10(domain.lo);
  const double log_hi = std::log10(domain.hi);
  const double step = (log_hi - log_lo) / static_cast<double>(n_samples - 1);

  RadialUniquenessReport rep;
  rep.samples = n_samples;
  rep.derivative_positive_everywhere = true;
  rep.convex_on_samples = true;
  rep.min_derivative = INFINITY;

  std::vector<double> response(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double x = std::pow(10.0, log_lo + step * static_cast<double>(i));
    const double v = h.value(x), d1 = h.first(x), d2 = h.second(x);
    if (!std::isfinite(v) || !std::isfinite(d1) || !std::isfinite(d2))
      throw EvaluationError("volumetric function is not finite at x = " + std::to_string(x), x);
    if (d2 < 0.0) rep.convex_on_samples = false;
    const double dr = radial_scalar_response_derivative(h, x);
    response[i] = radial_scalar_response(h, x);
    if (dr < rep.min_derivative) {
      rep.min_derivative = dr;
      rep.argmin_derivative = x;
    }
    if (!(dr > 0.0)) rep.derivative_positive_everywhere = false;
  }

  const auto per_decade = static_cast<std::size_t>(std::floor(1.0 / step + 1e-9));
  if (per_decade >= 1) {
    rep.lower_divergence = diverges(response, per_decade, -1.0);
    std::vector<double> reversed(response.rbegin(), response.rend());
    rep.upper_divergence = diverges(reversed, per_decade, +1.0);
  }
  return rep;
}

RadialUniquenessReport check_unique_radial_conditions(const VolumetricFunction& h,
                                                      Interval domain) {
  if (!(domain.lo > 0.0) || !(domain.hi > domain.lo))
    throw DomainError("domain must be an interval inside (0, inf) with lo < hi");
  const double decades = std::log10(domain.hi / domain.lo);
  const auto n = static_cast<std::size_t>(std::ceil(1000.0 * decades)) + 1;
  return check_unique_radial_conditions(h, domain, std::max<std::size_t>(n, 2));
}

}  // namespace biotcube
