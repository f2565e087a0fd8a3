/*
 * Copyright 2026 The RMA Engine Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "rma/error.hpp"

namespace rma::kernels {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Dense double-precision kernels. All routines are deterministic: loops run
/// in a fixed order and no internal parallelism is used, so identical inputs
/// yield bit-identical outputs.

enum class ElementwiseOp { add, sub, mul };

Matrix elementwise(ElementwiseOp op, const Matrix& a, const Matrix& b);

/// matrix: a*b, cross: a^T*b, outer: a*b^T. The cross and outer variants run
/// the exact same inner kernel on a transposed copy, so cross(a, b) equals
/// matrix(transpose(a), b) bit for bit.
enum class ProductOp { matrix, cross, outer };

Matrix product(ProductOp op, const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);

/// Gauss-Jordan inversion operating on whole columns: scale a column by a
/// scalar, subtract a scaled column, pick a single value. Column variants
/// of the elimination are right-multiplications, so the accumulated identity
/// columns end up holding the inverse directly. Partial pivoting picks, per
/// elimination step, the unused row with the largest magnitude in the
/// current column; a pivot below 1e-12 times the column's max-norm raises
/// singular_matrix.
std::vector<Vector> gauss_jordan_inverse(std::vector<Vector> columns);
Matrix gauss_jordan_inverse(const Matrix& a);

/// x with a*x = rhs via LU with partial pivoting; rhs may have several
/// columns, each solved independently.
Matrix solve(const Matrix& a, const Matrix& rhs);

struct QrResult {
  Matrix q;  // rows x cols, orthonormal columns
  Matrix r;  // cols x cols, upper triangular, negative diagonal
};

/// Householder QR of a full-column-rank matrix with rows >= cols. The R
/// factor is normalized to an all-negative diagonal, which makes Q and R
/// invariant under row permutations of the input (the factor pair is then
/// unique), a property the sort-avoiding execution path relies on.
QrResult qr(const Matrix& a);

struct SvdResult {
  Matrix u;  // rows x rows, orthogonal
  Matrix d;  // cols x cols, diagonal, non-negative, non-increasing
  Matrix v;  // cols x cols, orthogonal
};

/// Singular value decomposition for rows >= cols, a = u * [d; 0] * v^T.
/// One-sided Jacobi (column rotations until mutual orthogonality), which
/// keeps small singular values accurate; the left basis is completed
/// deterministically for the full u.
SvdResult svd(const Matrix& a);

struct EigenSymResult {
  Vector values;   // descending
  Matrix vectors;  // unit columns, sign-canonical
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix (checked within
/// 1e-9 relative tolerance). Stops when the off-diagonal norm drops below
/// 1e-12 times the Frobenius norm; more than 100*n sweeps raises
/// non_convergence. Eigenvalues are sorted descending; each vector's
/// largest-magnitude component is made positive.
EigenSymResult eigen_sym(const Matrix& a);

/// Upper-triangular u with u^T u = a for symmetric positive definite input.
Matrix cholesky(const Matrix& a);

/// LU-based determinant with pivot sign tracking; 0 for a singular input.
double determinant(const Matrix& a);

/// Number of singular values above max(rows, cols) * eps * sigma_max.
int64_t rank(const Matrix& a);

}  // namespace rma::kernels
