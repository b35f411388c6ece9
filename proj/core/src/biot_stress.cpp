#include "biotcube/biot_stress.hpp"

#include <cmath>

#include "biotcube/errors.hpp"

namespace biotcube {

DeformationGradient::DeformationGradient(const Matrix3& f) : f_(f) {
  const double det = f.determinant();
  if (!std::isfinite(det) || !(det > 0.0))
    throw DomainError("deformation gradient must satisfy det F > 0");
}

StressTriple principal_biot(StiffnessRatio m, const PrincipalStretches& s) {
  const double c = m.coupling();
  const double l1 = s[0], l2 = s[1], l3 = s[2];
  return {l1 - 1.0 / l1 + c * (l1 * l2 * l2 * l3 * l3 - 1.0 / l1),
          l2 - 1.0 / l2 + c * (l1 * l1 * l2 * l3 * l3 - 1.0 / l2),
          l3 - 1.0 / l3 + c * (l1 * l1 * l2 * l2 * l3 - 1.0 / l3)};
}

namespace {

double volumetric_factor(StiffnessRatio m, double det) {
  return m.coupling() * (det - 1.0 / det) - 1.0 / det;
}

}  // namespace

SymMatrix3 biot_matrix(StiffnessRatio m, const SymMatrix3& u) {
  if (is_positive_definite(u, 0.0) != Definiteness::PositiveDefinite)
    throw DomainError("stretch tensor U must be positive definite");
  const double det = u.determinant();
  const Matrix3 t = u.full() + volumetric_factor(m, det) * u.full().adjugate();
  return SymMatrix3::symmetrize(t);
}

Matrix3 first_piola(StiffnessRatio m, const DeformationGradient& f) {
  const double det = f.determinant();
  return f.matrix() + volumetric_factor(m, det) * f.matrix().cofactor();
}

JacobianDT jacobian_dt(StiffnessRatio m, const PrincipalStretches& s) {
  const double c = m.coupling();
  const double l1 = s[0], l2 = s[1], l3 = s[2];
  const double i1 = 1.0 / (l1 * l1), i2 = 1.0 / (l2 * l2), i3 = 1.0 / (l3 * l3);
  const double d11 = i1 + 1.0 + c * (i1 + l2 * l2 * l3 * l3);
  const double d22 = i2 + 1.0 + c * (l1 * l1 * l3 * l3 + i2);
  const double d33 = i3 + 1.0 + c * (l1 * l1 * l2 * l2 + i3);
  const double d12 = 2.0 * c * l1 * l2 * l3 * l3;
  const double d13 = 2.0 * c * l1 * l2 * l2 * l3;
  const double d23 = 2.0 * c * l1 * l1 * l2 * l3;
  return JacobianDT(SymMatrix3(d11, d22, d33, d12, d23, d13));
}

double radial_sextic(StiffnessRatio m, double l) {
  const double M = m.value();
  const double l2 = l * l;
  return (2.0 - 3.0 * M) * l2 * l2 * l2 + 6.0 * l2 + 4.0 + 3.0 * M;
}

double det_jacobian_radial(StiffnessRatio m, double l) {
  const double M = m.value();
  const double l2 = l * l, l6 = l2 * l2 * l2;
  const double f = radial_sextic(m, l);
  return f * f * (5.0 * (3.0 * M - 2.0) * l6 + 6.0 * l2 + 4.0 + 3.0 * M) / (216.0 * l6);
}

RadialMinors minors_radial(StiffnessRatio m, double l) {
  const double M = m.value();
  const double l2 = l * l, l4 = l2 * l2, l6 = l4 * l2;
  const double m1 = ((3.0 * M - 2.0) / 6.0 * (l6 + 1.0) + l2 + 1.0) / l2;
  const double m2 =
      (3.0 * (3.0 * M - 2.0) * l6 + 6.0 * l2 + 4.0 + 3.0 * M) * radial_sextic(m, l) / (36.0 * l4);
  return {m1, m2, det_jacobian_radial(m, l)};
}

TwoEqualMinors minors_two_equal(StiffnessRatio m, double l1, double l2) {
  const double M = m.value();
  const double a2 = l1 * l1, a4 = a2 * a2;
  const double q = (3.0 * M - 2.0) * a4 * l2 * l2;
  const double m1 = (M / 4.0 - 1.0 / 6.0) * (2.0 * a2 * l2 * l2 + 2.0 / a2) + 1.0 / a2 + 1.0;
  const double m2 =
      -(q - 3.0 * M - 6.0 * a2 - 4.0) * (3.0 * q + 3.0 * M + 6.0 * a2 + 4.0) / (36.0 * a4);
  return {m1, m2};
}

}  // namespace biotcube
