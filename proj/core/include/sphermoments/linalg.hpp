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

// Small dense linear algebra shared by the distribution, moment and
// anisotropy layers. Storage is Eigen; the symmetric eigensolver is a
// self-contained cyclic Jacobi, which is exact enough and cheap for the
// n <= 10 matrices this library deals in.

#pragma once

#include <Eigen/Core>

namespace sphermoments {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

struct SymmetricEigen {
  Vector values;   // descending
  Matrix vectors;  // column i pairs with values(i); orthonormal
};

/// Largest |M_ij - M_ji|.
double max_asymmetry(const Matrix& m);

/// (M + M^T) / 2.
Matrix symmetric_part(const Matrix& m);

/// Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Eigenvalues are sorted descending; exact ties are ordered by the
/// lexicographically larger eigenvector first. Each eigenvector is signed so
/// that its first component with magnitude above 1e-12 is positive, which
/// makes the output reproducible across calls.
///
/// Throws ValidationError when max_asymmetry(m) exceeds
/// `symmetry_tol * max(1, max|M_ij|)` and ShapeError for non-square input.
SymmetricEigen symmetric_eigen(const Matrix& m, double symmetry_tol = 1e-10);

}  // namespace sphermoments
