#include "biotcube/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "biotcube/errors.hpp"

namespace biotcube {

Matrix3 Matrix3::identity() { return diagonal({1.0, 1.0, 1.0}); }

Matrix3 Matrix3::diagonal(const Vec3& d) {
  Matrix3 m;
  for (int i = 0; i < 3; ++i) m(i, i) = d[i];
  return m;
}

Matrix3 Matrix3::transpose() const {
  Matrix3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t(i, j) = (*this)(j, i);
  return t;
}

double Matrix3::determinant() const {
  const auto& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Matrix3 Matrix3::cofactor() const {
  const auto& m = *this;
  Matrix3 c;
  c(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  c(0, 1) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
  c(0, 2) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
  c(1, 0) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
  c(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
  c(1, 2) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
  c(2, 0) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
  c(2, 1) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
  c(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return c;
}

Matrix3 Matrix3::adjugate() const { return cofactor().transpose(); }

Matrix3& Matrix3::operator+=(const Matrix3& o) {
  for (std::size_t k = 0; k < 9; ++k) a_[k] += o.a_[k];
  return *this;
}

Matrix3& Matrix3::operator-=(const Matrix3& o) {
  for (std::size_t k = 0; k < 9; ++k) a_[k] -= o.a_[k];
  return *this;
}

Matrix3& Matrix3::operator*=(double s) {
  for (auto& v : a_) v *= s;
  return *this;
}

Matrix3 operator+(Matrix3 a, const Matrix3& b) { return a += b; }
Matrix3 operator-(Matrix3 a, const Matrix3& b) { return a -= b; }
Matrix3 operator*(double s, Matrix3 a) { return a *= s; }

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
  Matrix3 c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double sum = 0.0;
      for (int k = 0; k < 3; ++k) sum += a(i, k) * b(k, j);
      c(i, j) = sum;
    }
  return c;
}

Vec3 operator*(const Matrix3& a, const Vec3& v) {
  Vec3 r{};
  for (int i = 0; i < 3; ++i)
    r[i] = a(i, 0) * v[0] + a(i, 1) * v[1] + a(i, 2) * v[2];
  return r;
}

double frobenius_norm(const Matrix3& a) {
  const auto& e = a.entries();
  return std::sqrt(std::inner_product(e.begin(), e.end(), e.begin(), 0.0));
}

std::optional<Vec3> solve_linear(const Matrix3& a, const Vec3& b, double singular_tol) {
  std::array<std::array<double, 4>, 3> m{};
  double scale = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      m[i][j] = a(i, j);
      scale = std::max(scale, std::abs(a(i, j)));
    }
    m[i][3] = b[i];
  }
  if (scale == 0.0 || !std::isfinite(scale)) return std::nullopt;

  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    if (std::abs(m[pivot][col]) <= singular_tol * scale) return std::nullopt;
    std::swap(m[col], m[pivot]);
    for (int r = col + 1; r < 3; ++r) {
      const double f = m[r][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
    }
  }
  Vec3 x{};
  for (int i = 2; i >= 0; --i) {
    double s = m[i][3];
    for (int j = i + 1; j < 3; ++j) s -= m[i][j] * x[j];
    x[i] = s / m[i][i];
  }
  return x;
}

SymMatrix3 SymMatrix3::symmetrize(const Matrix3& a) {
  return {a(0, 0),
          a(1, 1),
          a(2, 2),
          0.5 * (a(0, 1) + a(1, 0)),
          0.5 * (a(1, 2) + a(2, 1)),
          0.5 * (a(0, 2) + a(2, 0))};
}

double SymMatrix3::operator()(int i, int j) const {
  if (i == j) return s_[i];
  const int k = i + j;  // (0,1) -> 1, (1,2) -> 3, (0,2) -> 2
  switch (k) {
    case 1: return s_[3];
    case 3: return s_[4];
    default: return s_[5];
  }
}

Matrix3 SymMatrix3::full() const {
  Matrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = (*this)(i, j);
  return m;
}

double SymMatrix3::determinant() const { return full().determinant(); }

Vec3 SymMatrix3::leading_minors() const {
  const auto& s = *this;
  return {s(0, 0), s(0, 0) * s(1, 1) - s(0, 1) * s(0, 1), determinant()};
}

SymMatrix3 operator+(const SymMatrix3& a, const SymMatrix3& b) {
  return {a(0, 0) + b(0, 0), a(1, 1) + b(1, 1), a(2, 2) + b(2, 2),
          a(0, 1) + b(0, 1), a(1, 2) + b(1, 2), a(0, 2) + b(0, 2)};
}

SymMatrix3 operator-(const SymMatrix3& a, const SymMatrix3& b) {
  return a + (-1.0) * b;
}

SymMatrix3 operator*(double s, const SymMatrix3& a) {
  return {s * a(0, 0), s * a(1, 1), s * a(2, 2), s * a(0, 1), s * a(1, 2), s * a(0, 2)};
}

double frobenius_norm(const SymMatrix3& a) { return frobenius_norm(a.full()); }

Rotation3::Rotation3(const Matrix3& q) : q_(q) {
  const double orth = frobenius_norm(q.transpose() * q - Matrix3::identity());
  const double det = q.determinant();
  if (!(orth <= 1e-12) || !(std::abs(det - 1.0) <= 1e-12))
    throw DomainError("matrix is not a proper rotation");
}

Rotation3 Rotation3::from_quaternion(double w, double x, double y, double z) {
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("degenerate quaternion");
  w /= n, x /= n, y /= n, z /= n;
  Matrix3 q(std::array<double, 9>{
      1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
      2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
      2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)});
  return Rotation3(q);
}

SymEigen sym_eigen(const SymMatrix3& s) {
  Matrix3 a = s.full();
  Matrix3 v = Matrix3::identity();

  for (int sweep = 0; sweep < 64; ++sweep) {
    const double off = std::abs(a(0, 1)) + std::abs(a(0, 2)) + std::abs(a(1, 2));
    if (off == 0.0) break;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Negligible against both diagonal entries: drop it.
        if (sweep > 3 && std::abs(a(p, p)) + 1e3 * std::abs(apq) == std::abs(a(p, p)) &&
            std::abs(a(q, q)) + 1e3 * std::abs(apq) == std::abs(a(q, q))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (int k = 0; k < 3; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (int k = 0; k < 3; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (int k = 0; k < 3; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }

  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i) > a(j, j); });

  Vec3 values{};
  Matrix3 q;
  for (int r = 0; r < 3; ++r) {
    values[r] = a(order[r], order[r]);
    for (int k = 0; k < 3; ++k) q(r, k) = v(k, order[r]);
  }
  if (q.determinant() < 0.0)
    for (int k = 0; k < 3; ++k) q(2, k) = -q(2, k);
  return {values, Rotation3(q)};
}

SymMatrix3 conjugate(const Rotation3& q, const SymMatrix3& d) {
  const Matrix3& m = q.matrix();
  return SymMatrix3::symmetrize(m.transpose() * d.full() * m);
}

Definiteness is_positive_definite(const SymMatrix3& s, double tol) {
  const double smallest = sym_eigen(s).values[2];
  if (smallest > tol) return Definiteness::PositiveDefinite;
  if (smallest < -tol) return Definiteness::Indefinite;
  return Definiteness::PositiveSemidefiniteBoundary;
}

}  // namespace biotcube
