#include "dqd/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dqd/errors.hpp"

namespace dqd {

Vec4 operator*(const Mat4& m, const Vec4& v) {
  Vec4 r{};
  for (int i = 0; i < 4; ++i) {
    double s = 0.0;
    for (int j = 0; j < 4; ++j) s += m(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

double dot(const Vec4& a, const Vec4& b) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += a[i] * b[i];
  return s;
}

Mat4 outer(const Vec4& v) {
  Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = v[i] * v[j];
  return m;
}

double max_abs(const Mat4& m) {
  double r = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r = std::max(r, std::fabs(m(i, j)));
  return r;
}

double max_abs_diff(const Mat4& a, const Mat4& b) {
  double r = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r = std::max(r, std::fabs(a(i, j) - b(i, j)));
  return r;
}

double frobenius_norm(const Mat4& m) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += m(i, j) * m(i, j);
  return std::sqrt(s);
}

namespace {

double off_diagonal_norm(const Mat4& a) {
  double s = 0.0;
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q) s += a(p, q) * a(p, q);
  return std::sqrt(2.0 * s);
}

}  // namespace

EigenDecomp jacobi_eigensolve(const Mat4& m, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("jacobi_eigensolve: tol must be positive");

  double asym = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      asym = std::max(asym, std::fabs(m(i, j) - m(j, i)));
  const double scale = std::max(1.0, max_abs(m));
  if (asym > tol * scale) {
    std::ostringstream os;
    os << "jacobi_eigensolve: input not symmetric, max |a_ij - a_ji| = " << asym;
    throw std::invalid_argument(os.str());
  }

  Mat4 a = m;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const double s = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = a(j, i) = s;
    }

  Mat4 v = Mat4::identity();
  const double threshold = tol * std::max(1.0, frobenius_norm(a));
  constexpr int kMaxSweeps = 100;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < threshold) break;
    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        const double app = a(p, p);
        const double aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (int r = 0; r < 4; ++r) {
          if (r != p && r != q) {
            const double arp = a(r, p);
            const double arq = a(r, q);
            a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
            a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
          }
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = vrp - s * (vrq + tau * vrp);
          v(r, q) = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }

  const double residual = off_diagonal_norm(a);
  if (residual >= threshold) {
    std::ostringstream os;
    os << "jacobi_eigensolve: no convergence after " << kMaxSweeps
       << " sweeps, off-diagonal norm = " << residual;
    throw numeric_error(os.str());
  }

  std::array<int, 4> idx{0, 1, 2, 3};
  std::stable_sort(idx.begin(), idx.end(),
                   [&a](int i, int j) { return a(i, i) < a(j, j); });

  EigenDecomp out;
  for (int k = 0; k < 4; ++k) {
    out.values[k] = a(idx[k], idx[k]);
    for (int r = 0; r < 4; ++r) out.vectors[k][r] = v(r, idx[k]);
  }
  return out;
}

Mat4 kron2(const Mat2& a, const Mat2& b) {
  Mat4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

namespace {

void require_orthogonal(double dev) {
  if (dev > 1e-12) {
    std::ostringstream os;
    os << "conjugate: matrix not orthogonal, max |u u^T - I| = " << dev;
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

Mat4 conjugate(const Mat4& u, const Mat4& m) {
  require_orthogonal(max_abs_diff(u * u.transpose(), Mat4::identity()));
  return u * m * u.transpose();
}

Mat2 conjugate(const Mat2& u, const Mat2& m) {
  const Mat2 gram = u * u.transpose();
  double dev = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      dev = std::max(dev, std::fabs(gram(i, j) - (i == j ? 1.0 : 0.0)));
  require_orthogonal(dev);
  return u * m * u.transpose();
}

}  // namespace dqd
