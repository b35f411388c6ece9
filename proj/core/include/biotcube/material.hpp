#pragma once

// Compressible Neo-Hooke family W = mu/2 |F|^2 + h(det F), its one-parameter
// Ciarlet-Geymonat member, and the principal-stretch energy. All energies and
// stresses here are divided by mu.

#include <array>
#include <cstddef>

#include "biotcube/tensor.hpp"

namespace biotcube {

/// The dimensionless ratio M = (lambda + 2 mu / 3) / mu. Always > 2/3.
class StiffnessRatio {
 public:
  /// Throws ParameterDomainError unless M is finite and M > 2/3.
  explicit StiffnessRatio(double m);

  double value() const { return m_; }
  /// M/2 - 1/3, the factor in front of every volumetric stress term.
  double coupling() const { return 0.5 * m_ - 1.0 / 3.0; }

 private:
  double m_;
};

class MaterialParams {
 public:
  /// Throws ParameterDomainError unless mu > 0 and lambda > 0.
  static MaterialParams from_lame(double mu, double lambda);
  /// Material with the given M; lambda = mu (M - 2/3).
  static MaterialParams from_ratio(double m, double mu = 1.0);

  double mu() const { return mu_; }
  double lambda() const { return lambda_; }
  StiffnessRatio ratio() const { return StiffnessRatio((lambda_ + 2.0 * mu_ / 3.0) / mu_); }

 private:
  MaterialParams(double mu, double lambda) : mu_(mu), lambda_(lambda) {}

  double mu_;
  double lambda_;
};

/// A mu-normalized volumetric function h on (0, inf) with analytic
/// derivatives. Implementations are stateless after construction.
class VolumetricFunction {
 public:
  virtual ~VolumetricFunction() = default;

  virtual double value(double x) const = 0;
  virtual double first(double x) const = 0;
  virtual double second(double x) const = 0;
};

/// h(x) = -log x + (M/4 - 1/6)(x^2 - 2 log x - 1).
class CiarletGeymonatVolumetric final : public VolumetricFunction {
 public:
  explicit CiarletGeymonatVolumetric(StiffnessRatio m) : k_(0.5 * m.coupling()) {}

  double value(double x) const override;
  double first(double x) const override;
  double second(double x) const override;

 private:
  double k_;  // M/4 - 1/6
};

/// Throws ParameterDomainError for M <= 2/3.
CiarletGeymonatVolumetric cg_volumetric(double m);

/// Ordered triple of principal stretches, all strictly positive.
class PrincipalStretches {
 public:
  /// Throws DomainError unless all entries are finite and positive.
  PrincipalStretches(double l1, double l2, double l3);
  explicit PrincipalStretches(const Vec3& l) : PrincipalStretches(l[0], l[1], l[2]) {}

  static PrincipalStretches radial(double l) { return {l, l, l}; }
  static PrincipalStretches two_equal(double l1, double l2) { return {l1, l1, l2}; }

  double operator[](std::size_t i) const { return l_[i]; }
  const Vec3& values() const { return l_; }

  double product() const { return l_[0] * l_[1] * l_[2]; }
  double sum() const { return l_[0] + l_[1] + l_[2]; }

  PrincipalStretches permuted(const std::array<int, 3>& perm) const {
    return {l_[perm[0]], l_[perm[1]], l_[perm[2]]};
  }
  PrincipalStretches sorted_descending() const;

 private:
  Vec3 l_;
};

/// g(l1, l2, l3), the mu-normalized energy in principal stretches.
double energy_principal(StiffnessRatio m, const PrincipalStretches& s);

/// x^{1/3} + h'(x) x^{2/3}: the radial load reached at det U = x.
double radial_scalar_response(const VolumetricFunction& h, double x);

/// d/dx of radial_scalar_response, from the analytic h' and h''.
double radial_scalar_response_derivative(const VolumetricFunction& h, double x);

struct Interval {
  double lo;
  double hi;
};

/// Sampled evidence (not a proof) for the three conditions that make the
/// radial solution unique for every load.
struct RadialUniquenessReport {
  bool derivative_positive_everywhere = false;
  bool lower_divergence = false;
  bool upper_divergence = false;
  /// h'' >= 0 at every sample.
  bool convex_on_samples = false;
  double min_derivative = 0.0;
  double argmin_derivative = 0.0;
  std::size_t samples = 0;
};

/// Samples on a log-spaced grid over `domain`. Divergence toward an end is
/// reported when the response moves monotonically toward the required
/// infinity over the last two sampled decades and does not decelerate.
/// Throws DomainError for a bad domain or n_samples < 2, EvaluationError
/// when h or its derivatives are not finite at a sample.
RadialUniquenessReport check_unique_radial_conditions(const VolumetricFunction& h,
                                                      Interval domain,
                                                      std::size_t n_samples);

/// Same, with 1000 samples per decade of the domain.
RadialUniquenessReport check_unique_radial_conditions(const VolumetricFunction& h,
                                                      Interval domain);

}  // namespace biotcube
