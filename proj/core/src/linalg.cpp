// Copyright 2026 The sphermoments Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sphermoments/linalg.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "sphermoments/errors.hpp"

namespace sphermoments {
namespace {

constexpr int kMaxSweeps = 100;
constexpr double kSignThreshold = 1e-12;

void fix_sign(Eigen::Ref<Vector> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > kSignThreshold) {
      if (v(i) < 0.0) v = -v;
      return;
    }
  }
}

bool lexicographically_greater(const Vector& a, const Vector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) > b(i);
  }
  return false;
}

}  // namespace

double max_asymmetry(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("max_asymmetry: matrix is not square");
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - m(j, i)));
    }
  }
  return worst;
}

Matrix symmetric_part(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("symmetric_part: matrix is not square");
  return 0.5 * (m + m.transpose());
}

SymmetricEigen symmetric_eigen(const Matrix& m, double symmetry_tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ShapeError("symmetric_eigen: expected a non-empty square matrix");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = max_asymmetry(m);
  if (!(asym <= symmetry_tol * scale)) {
    throw ValidationError({"matrix is not symmetric (max |M_ij - M_ji| = " +
                           std::to_string(asym) + ")"});
  }

  const Eigen::Index n = m.rows();
  Matrix a = symmetric_part(m);
  Matrix v = Matrix::Identity(n, n);
  const double frob2 = a.squaredNorm();
  const double eps = std::numeric_limits<double>::epsilon();

  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    }
    if (off <= eps * eps * frob2 * 1e-2 || off == 0.0) break;

    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (sweep == kMaxSweeps) {
    throw ConvergenceError("symmetric_eigen: Jacobi sweeps did not converge");
  }

  std::vector<Vector> vecs;
  vecs.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    Vector col = v.col(i);
    fix_sign(col);
    vecs.push_back(std::move(col));
  }
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    if (a(i, i) != a(j, j)) return a(i, i) > a(j, j);
    return lexicographically_greater(vecs[static_cast<std::size_t>(i)],
                                     vecs[static_cast<std::size_t>(j)]);
  });

  SymmetricEigen out{Vector(n), Matrix(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index src = order[static_cast<std::size_t>(i)];
    out.values(i) = a(src, src);
    out.vectors.col(i) = vecs[static_cast<std::size_t>(src)];
  }
  return out;
}

}  // namespace sphermoments
