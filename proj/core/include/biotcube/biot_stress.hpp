#pragma once

// Closed-form Biot stresses of the Ciarlet-Geymonat model, their Jacobian
// with respect to the principal stretches, and the matrix-level Biot and
// first Piola-Kirchhoff stresses. Everything is mu-normalized.

#include <cstddef>

#include "biotcube/material.hpp"
#include "biotcube/tensor.hpp"

namespace biotcube {

/// Principal Biot stresses (T1, T2, T3).
class StressTriple {
 public:
  StressTriple(double t1, double t2, double t3) : t_{t1, t2, t3} {}

  double operator[](std::size_t i) const { return t_[i]; }
  const Vec3& values() const { return t_; }

 private:
  Vec3 t_;
};

/// dT_i / dl_j. Equal to the Hessian of g, hence symmetric.
class JacobianDT {
 public:
  explicit JacobianDT(const SymMatrix3& m) : m_(m) {}

  const SymMatrix3& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }
  double determinant() const { return m_.determinant(); }
  Vec3 leading_minors() const { return m_.leading_minors(); }

 private:
  SymMatrix3 m_;
};

/// F with det F > 0.
class DeformationGradient {
 public:
  /// Throws DomainError if det F <= 0 or F is not finite.
  explicit DeformationGradient(const Matrix3& f);

  const Matrix3& matrix() const { return f_; }
  double determinant() const { return f_.determinant(); }

 private:
  Matrix3 f_;
};

StressTriple principal_biot(StiffnessRatio m, const PrincipalStretches& s);

/// T_Biot(U) = U + [c (det U - 1/det U) - 1/det U] adj(U), c = M/2 - 1/3.
/// Throws DomainError unless U is positive definite.
SymMatrix3 biot_matrix(StiffnessRatio m, const SymMatrix3& u);

/// S1 = F + [c (det F - 1/det F) - 1/det F] Cof F.
Matrix3 first_piola(StiffnessRatio m, const DeformationGradient& f);

JacobianDT jacobian_dt(StiffnessRatio m, const PrincipalStretches& s);

/// (2 - 3M) l^6 + 6 l^2 + 4 + 3M. Its positive root is where the radial
/// Jacobian becomes singular.
double radial_sextic(StiffnessRatio m, double l);

/// det DT(l, l, l) in factored form.
double det_jacobian_radial(StiffnessRatio m, double l);

struct RadialMinors {
  double m1;
  double m2;
  double m3;
};

/// Leading principal minors of DT(l, l, l), closed form.
RadialMinors minors_radial(StiffnessRatio m, double l);

struct TwoEqualMinors {
  double m1;
  double m2;
};

/// First two leading principal minors of DT(l1, l1, l2), closed form.
TwoEqualMinors minors_two_equal(StiffnessRatio m, double l1, double l2);

}  // namespace biotcube
