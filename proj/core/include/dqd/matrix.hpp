#pragma once

#include <array>
#include <cstddef>

// Small dense real matrix kernel for the 4x4 / 2x2 objects of the model:
// the Hamiltonian, thermal density matrices, spin-flipped products and the
// local rotations. Everything is real in the computational basis, so no
// complex storage is carried.

namespace dqd {

using Vec2 = std::array<double, 2>;
using Vec4 = std::array<double, 4>;

class Mat2 {
 public:
  constexpr Mat2() : e_{} {}
  constexpr Mat2(double a00, double a01, double a10, double a11)
      : e_{a00, a01, a10, a11} {}

  constexpr double& operator()(int r, int c) { return e_[2 * r + c]; }
  constexpr double operator()(int r, int c) const { return e_[2 * r + c]; }

  static constexpr Mat2 identity() { return Mat2{1.0, 0.0, 0.0, 1.0}; }
  static constexpr Mat2 pauli_x() { return Mat2{0.0, 1.0, 1.0, 0.0}; }
  static constexpr Mat2 pauli_z() { return Mat2{1.0, 0.0, 0.0, -1.0}; }

  constexpr double trace() const { return e_[0] + e_[3]; }
  constexpr Mat2 transpose() const { return Mat2{e_[0], e_[2], e_[1], e_[3]}; }

  friend constexpr Mat2 operator+(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }
  friend constexpr Mat2 operator-(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
  }
  friend constexpr Mat2 operator*(double s, const Mat2& a) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e_[i] = s * a.e_[i];
    return r;
  }
  friend constexpr Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        double s = 0.0;
        for (int k = 0; k < 2; ++k) s += a(i, k) * b(k, j);
        r(i, j) = s;
      }
    return r;
  }

 private:
  std::array<double, 4> e_;
};

class Mat4 {
 public:
  constexpr Mat4() : e_{} {}
  // Row-major construction from 16 values, stored exactly as given.
  explicit constexpr Mat4(const std::array<double, 16>& rowmajor)
      : e_(rowmajor) {}

  constexpr double& operator()(int r, int c) { return e_[4 * r + c]; }
  constexpr double operator()(int r, int c) const { return e_[4 * r + c]; }

  static constexpr Mat4 identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
  }
  static constexpr Mat4 diagonal(const Vec4& d) {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = d[i];
    return m;
  }

  constexpr double trace() const { return e_[0] + e_[5] + e_[10] + e_[15]; }
  constexpr Mat4 transpose() const {
    Mat4 t;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) t(i, j) = (*this)(j, i);
    return t;
  }

  friend constexpr Mat4 operator+(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }
  friend constexpr Mat4 operator-(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
  }
  friend constexpr Mat4 operator*(double s, const Mat4& a) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e_[i] = s * a.e_[i];
    return r;
  }
  friend constexpr Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double s = 0.0;
        for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
        r(i, j) = s;
      }
    return r;
  }

 private:
  std::array<double, 16> e_;
};

Vec4 operator*(const Mat4& m, const Vec4& v);
double dot(const Vec4& a, const Vec4& b);
// |v><v|
Mat4 outer(const Vec4& v);
double max_abs(const Mat4& m);
double max_abs_diff(const Mat4& a, const Mat4& b);
double frobenius_norm(const Mat4& m);

// Eigendecomposition of a symmetric 4x4 matrix.
// values are ascending; vectors[k] is the unit eigenvector for values[k].
// Vectors from a degenerate block are an arbitrary orthonormal basis of the
// eigenspace; callers must not rely on the basis inside such a block.
struct EigenDecomp {
  std::array<double, 4> values;
  std::array<Vec4, 4> vectors;
};

// Cyclic Jacobi with a fixed sweep order, at most 100 sweeps. Convergence:
// off-diagonal Frobenius norm below tol * max(1, ||m||_F). Throws
// std::invalid_argument when m is asymmetric beyond tol * max(1, max|m|)
// (the message reports the largest asymmetry) and dqd::numeric_error if the
// sweep limit is exhausted (message carries the residual).
EigenDecomp jacobi_eigensolve(const Mat4& m, double tol = 1e-13);

// Kronecker product, first factor on the slow (left) index:
// result(2i+k, 2j+l) = a(i,j) * b(k,l).
Mat4 kron2(const Mat2& a, const Mat2& b);

// u * m * u^T for orthogonal u (checked to 1e-12, else std::invalid_argument).
Mat4 conjugate(const Mat4& u, const Mat4& m);
Mat2 conjugate(const Mat2& u, const Mat2& m);

}  // namespace dqd
