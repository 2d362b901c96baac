#pragma once

#include <array>
#include <cmath>
#include <random>

#include "dqd/matrix.hpp"

// Test-only reference routines, independent of the library paths they check.

namespace dqd::test {

// Cofactor-expansion determinant.
inline double det3(double a, double b, double c, double d, double e, double f,
                   double g, double h, double i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

inline double det4(const Mat4& m) {
  double sum = 0.0;
  double sign = 1.0;
  for (int col = 0; col < 4; ++col) {
    std::array<double, 9> minor{};
    int k = 0;
    for (int r = 1; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (c != col) minor[k++] = m(r, c);
    sum += sign * m(0, col) *
           det3(minor[0], minor[1], minor[2], minor[3], minor[4], minor[5],
                minor[6], minor[7], minor[8]);
    sign = -sign;
  }
  return sum;
}

// Direct partial traces in the (|LL>, |LR>, |RL>, |RR>) ordering: qubit A is
// the slow index.
inline Mat2 partial_trace_b(const Mat4& rho) {
  Mat2 out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      double s = 0.0;
      for (int k = 0; k < 2; ++k) s += rho(2 * a + k, 2 * b + k);
      out(a, b) = s;
    }
  return out;
}

inline Mat2 partial_trace_a(const Mat4& rho) {
  Mat2 out;
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) {
      double s = 0.0;
      for (int a = 0; a < 2; ++a) s += rho(2 * a + k, 2 * a + l);
      out(k, l) = s;
    }
  return out;
}

inline Mat4 random_symmetric(std::mt19937& rng, double lo = -10.0,
                             double hi = 10.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) m(i, j) = m(j, i) = dist(rng);
  return m;
}

// Random orthogonal matrix by Gram-Schmidt on random vectors.
inline Mat4 random_orthogonal(std::mt19937& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  std::array<Vec4, 4> basis{};
  for (int k = 0; k < 4; ++k) {
    Vec4 v{};
    double norm = 0.0;
    do {
      for (double& x : v) x = dist(rng);
      for (int j = 0; j < k; ++j) {
        const double overlap = dot(v, basis[j]);
        for (int r = 0; r < 4; ++r) v[r] -= overlap * basis[j][r];
      }
      norm = std::sqrt(dot(v, v));
    } while (norm < 1e-6);
    for (double& x : v) x /= norm;
    basis[k] = v;
  }
  Mat4 q;
  for (int k = 0; k < 4; ++k)
    for (int r = 0; r < 4; ++r) q(r, k) = basis[k][r];
  return q;
}

}  // namespace dqd::test
