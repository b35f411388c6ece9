#pragma once

// Small fixed-size 3x3 linear algebra: general matrices, symmetric matrices
// stored by their six independent entries, rotations, and the symmetric
// eigenproblem.

#include <array>
#include <optional>

namespace biotcube {

using Vec3 = std::array<double, 3>;

inline constexpr double kDefaultDefinitenessTol = 1e-9;

class Matrix3 {
 public:
  Matrix3() : a_{} {}
  /// Row-major entries.
  explicit Matrix3(const std::array<double, 9>& row_major) : a_(row_major) {}

  static Matrix3 identity();
  static Matrix3 diagonal(const Vec3& d);

  double operator()(int i, int j) const { return a_[3 * i + j]; }
  double& operator()(int i, int j) { return a_[3 * i + j]; }

  const std::array<double, 9>& entries() const { return a_; }

  Matrix3 transpose() const;
  double determinant() const;
  /// Transposed cofactor matrix, adj(A) = det(A) A^{-1}.
  Matrix3 adjugate() const;
  /// Cof A = det(A) A^{-T}, from the closed-form 2x2 minors.
  Matrix3 cofactor() const;

  Matrix3& operator+=(const Matrix3& o);
  Matrix3& operator-=(const Matrix3& o);
  Matrix3& operator*=(double s);

 private:
  std::array<double, 9> a_;
};

Matrix3 operator+(Matrix3 a, const Matrix3& b);
Matrix3 operator-(Matrix3 a, const Matrix3& b);
Matrix3 operator*(double s, Matrix3 a);
Matrix3 operator*(const Matrix3& a, const Matrix3& b);
Vec3 operator*(const Matrix3& a, const Vec3& v);

double frobenius_norm(const Matrix3& a);

/// Gaussian elimination with partial pivoting. Empty if the matrix is
/// numerically singular (pivot below `singular_tol` times the largest entry).
std::optional<Vec3> solve_linear(const Matrix3& a, const Vec3& b,
                                 double singular_tol = 1e-14);

/// Real symmetric 3x3 matrix. Only the upper triangle is stored, so the
/// value is symmetric by construction.
class SymMatrix3 {
 public:
  SymMatrix3() : s_{} {}
  SymMatrix3(double xx, double yy, double zz, double xy, double yz, double xz)
      : s_{xx, yy, zz, xy, yz, xz} {}

  static SymMatrix3 identity() { return {1, 1, 1, 0, 0, 0}; }
  static SymMatrix3 diagonal(const Vec3& d) { return {d[0], d[1], d[2], 0, 0, 0}; }
  /// (A + A^T) / 2.
  static SymMatrix3 symmetrize(const Matrix3& a);

  double operator()(int i, int j) const;

  Matrix3 full() const;
  double trace() const { return s_[0] + s_[1] + s_[2]; }
  double determinant() const;
  /// Leading principal minors (m1, m2, m3); m3 is the determinant.
  Vec3 leading_minors() const;

 private:
  // xx, yy, zz, xy, yz, xz
  std::array<double, 6> s_;
};

SymMatrix3 operator+(const SymMatrix3& a, const SymMatrix3& b);
SymMatrix3 operator-(const SymMatrix3& a, const SymMatrix3& b);
SymMatrix3 operator*(double s, const SymMatrix3& a);
double frobenius_norm(const SymMatrix3& a);

/// Proper rotation, Q^T Q = 1 and det Q = 1 to within 1e-12.
class Rotation3 {
 public:
  /// Throws DomainError if `q` is not a proper rotation.
  explicit Rotation3(const Matrix3& q);

  static Rotation3 identity() { return Rotation3(Matrix3::identity()); }
  /// Rotation from a (not necessarily normalized, nonzero) quaternion.
  static Rotation3 from_quaternion(double w, double x, double y, double z);

  const Matrix3& matrix() const { return q_; }
  Rotation3 transpose() const { return Rotation3(q_.transpose(), Unchecked{}); }

 private:
  struct Unchecked {};
  Rotation3(const Matrix3& q, Unchecked) : q_(q) {}

  Matrix3 q_;
};

struct SymEigen {
  /// Descending. Ties keep the order in which they emerge from the diagonal.
  Vec3 values;
  /// Rows are the eigenvectors: S = Q^T diag(values) Q.
  Rotation3 vectors;
};

/// Cyclic Jacobi iteration; converges to full double precision for 3x3.
SymEigen sym_eigen(const SymMatrix3& s);

/// Q^T D Q, exactly symmetric.
SymMatrix3 conjugate(const Rotation3& q, const SymMatrix3& d);

enum class Definiteness { PositiveDefinite, PositiveSemidefiniteBoundary, Indefinite };

/// Classifies by the smallest eigenvalue against +-tol.
Definiteness is_positive_definite(const SymMatrix3& s,
                                  double tol = kDefaultDefinitenessTol);

}  // namespace biotcube
