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

#include "rma/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace rma::kernels {

namespace {

constexpr double kPivotRel = 1e-12;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw RmaError(errc::dimension_mismatch,
                   "matrices must have equal dimensions, got " +
                       std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                       " and " + std::to_string(b.rows()) + "x" +
                       std::to_string(b.cols()));
  }
}

void require_square(const Matrix& a, const char* op) {
  if (a.rows() != a.cols()) {
    throw RmaError(errc::dimension_mismatch,
                   std::string(op) + " requires a square matrix, got " +
                       std::to_string(a.rows()) + "x" +
                       std::to_string(a.cols()));
  }
}

void require_tall(const Matrix& a, const char* op) {
  if (a.rows() < a.cols()) {
    throw RmaError(errc::dimension_mismatch,
                   std::string(op) + " requires rows >= cols, got " +
                       std::to_string(a.rows()) + "x" +
                       std::to_string(a.cols()));
  }
}

void require_symmetric(const Matrix& a, errc code, const char* message) {
  double scale = a.cwiseAbs().maxCoeff();
  double diff = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (diff > 1e-9 * scale) {
    throw RmaError(code, message);
  }
}

// Plain triple loop with ascending inner index; the single product kernel
// everything else reuses.
Matrix multiply_fixed_order(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (Eigen::Index j = 0; j < b.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      double acc = 0.0;
      for (Eigen::Index k = 0; k < a.cols(); ++k) {
        acc += a(i, k) * b(k, j);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

}  // namespace

Matrix elementwise(ElementwiseOp op, const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  switch (op) {
    case ElementwiseOp::add: return a + b;
    case ElementwiseOp::sub: return a - b;
    case ElementwiseOp::mul: return a.cwiseProduct(b);
  }
  throw RmaError(errc::dimension_mismatch, "unknown elementwise op");
}

Matrix product(ProductOp op, const Matrix& a, const Matrix& b) {
  switch (op) {
    case ProductOp::matrix:
      if (a.cols() != b.rows()) {
        throw RmaError(errc::dimension_mismatch,
                       "matrix product needs a.cols == b.rows, got " +
                           std::to_string(a.cols()) + " and " +
                           std::to_string(b.rows()));
      }
      return multiply_fixed_order(a, b);
    case ProductOp::cross: {
      if (a.rows() != b.rows()) {
        throw RmaError(errc::dimension_mismatch,
                       "cross product needs a.rows == b.rows, got " +
                           std::to_string(a.rows()) + " and " +
                           std::to_string(b.rows()));
      }
      Matrix at = a.transpose();
      return multiply_fixed_order(at, b);
    }
    case ProductOp::outer: {
      if (a.cols() != b.cols()) {
        throw RmaError(errc::dimension_mismatch,
                       "outer product needs a.cols == b.cols, got " +
                           std::to_string(a.cols()) + " and " +
                           std::to_string(b.cols()));
      }
      Matrix bt = b.transpose();
      return multiply_fixed_order(a, bt);
    }
  }
  throw RmaError(errc::dimension_mismatch, "unknown product op");
}

Matrix transpose(const Matrix& a) { return a.transpose(); }

std::vector<Vector> gauss_jordan_inverse(std::vector<Vector> columns) {
  const size_t n = columns.size();
  if (n == 0) {
    throw RmaError(errc::dimension_mismatch, "inverse of an empty matrix");
  }
  for (const Vector& c : columns) {
    if (static_cast<size_t>(c.size()) != n) {
      throw RmaError(errc::dimension_mismatch,
                     "inverse requires a square matrix");
    }
  }

  std::vector<Vector> result(n);
  for (size_t i = 0; i < n; ++i) {
    result[i] = Vector::Zero(n);
    result[i](i) = 1.0;
  }

  std::vector<char> used(n, 0);
  std::vector<size_t> pivot_row(n, 0);
  for (size_t i = 0; i < n; ++i) {
    const double column_scale = columns[i].cwiseAbs().maxCoeff();
    size_t p = n;
    double best = -1.0;
    for (size_t row = 0; row < n; ++row) {
      if (used[row]) continue;
      double mag = std::abs(columns[i](row));
      if (mag > best) {
        best = mag;
        p = row;
      }
    }
    if (column_scale == 0.0 || best < kPivotRel * column_scale) {
      throw RmaError(errc::singular_matrix,
                     "matrix is singular (zero pivot in column " +
                         std::to_string(i + 1) + ")");
    }
    used[p] = 1;
    pivot_row[i] = p;

    const double pivot = columns[i](p);  // scalar pick
    columns[i] /= pivot;                 // whole-column scale
    result[i] /= pivot;
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double factor = columns[j](p);  // scalar pick
      columns[j] -= columns[i] * factor;    // column minus scaled column
      result[j] -= result[i] * factor;
    }
  }

  // Pivot-row bookkeeping turned A * E into a permutation; undo it by
  // placing accumulated column k at position pivot_row[k].
  std::vector<Vector> out(n);
  for (size_t k = 0; k < n; ++k) {
    out[pivot_row[k]] = std::move(result[k]);
  }
  return out;
}

Matrix gauss_jordan_inverse(const Matrix& a) {
  require_square(a, "inverse");
  std::vector<Vector> cols(a.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) cols[j] = a.col(j);
  std::vector<Vector> inv = gauss_jordan_inverse(std::move(cols));
  Matrix out(a.rows(), a.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) out.col(j) = inv[j];
  return out;
}

namespace {

struct LuDecomposition {
  Matrix lu;
  std::vector<Eigen::Index> perm;  // row i of lu came from row perm[i] of a
  int sign = 1;
  bool singular = false;
};

LuDecomposition lu_decompose(Matrix a) {
  const Eigen::Index n = a.rows();
  LuDecomposition d;
  d.perm.resize(n);
  std::iota(d.perm.begin(), d.perm.end(), Eigen::Index{0});
  const double scale = n > 0 ? a.cwiseAbs().maxCoeff() : 0.0;

  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    double best = std::abs(a(k, k));
    for (Eigen::Index i = k + 1; i < n; ++i) {
      double mag = std::abs(a(i, k));
      if (mag > best) {
        best = mag;
        p = i;
      }
    }
    if (best == 0.0 || best < kPivotRel * scale) {
      d.singular = true;
      d.lu = std::move(a);
      return d;
    }
    if (p != k) {
      a.row(p).swap(a.row(k));
      std::swap(d.perm[p], d.perm[k]);
      d.sign = -d.sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      a(i, k) /= a(k, k);
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) -= a(i, k) * a(k, j);
      }
    }
  }
  d.lu = std::move(a);
  return d;
}

}  // namespace

Matrix solve(const Matrix& a, const Matrix& rhs) {
  require_square(a, "solve");
  if (rhs.rows() != a.rows()) {
    throw RmaError(errc::dimension_mismatch,
                   "right-hand side has " + std::to_string(rhs.rows()) +
                       " rows but the matrix has " + std::to_string(a.rows()));
  }
  LuDecomposition d = lu_decompose(a);
  if (d.singular) {
    throw RmaError(errc::singular_matrix, "matrix is singular");
  }
  const Eigen::Index n = a.rows();
  Matrix x(n, rhs.cols());
  for (Eigen::Index c = 0; c < rhs.cols(); ++c) {
    Vector y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      double acc = rhs(d.perm[i], c);
      for (Eigen::Index j = 0; j < i; ++j) acc -= d.lu(i, j) * y(j);
      y(i) = acc;
    }
    for (Eigen::Index i = n - 1; i >= 0; --i) {
      double acc = y(i);
      for (Eigen::Index j = i + 1; j < n; ++j) acc -= d.lu(i, j) * x(j, c);
      x(i, c) = acc / d.lu(i, i);
    }
  }
  return x;
}

double determinant(const Matrix& a) {
  require_square(a, "determinant");
  LuDecomposition d = lu_decompose(a);
  if (d.singular) return 0.0;
  double det = static_cast<double>(d.sign);
  for (Eigen::Index i = 0; i < a.rows(); ++i) det *= d.lu(i, i);
  return det;
}

QrResult qr(const Matrix& a) {
  require_tall(a, "QR decomposition");
  const Eigen::Index m = a.rows(), n = a.cols();
  const double scale = a.norm();

  Matrix work = a;
  std::vector<Vector> reflectors;
  reflectors.reserve(n);

  for (Eigen::Index k = 0; k < n; ++k) {
    Vector x = work.col(k).tail(m - k);
    const double xnorm = x.norm();
    if (xnorm <= kPivotRel * scale) {
      throw RmaError(errc::rank_deficient,
                     "QR pivot vanished in column " + std::to_string(k + 1) +
                         ": matrix is rank deficient");
    }
    const double alpha = x(0) >= 0 ? -xnorm : xnorm;
    Vector v = x;
    v(0) -= alpha;
    const double vsq = v.squaredNorm();
    if (vsq > 0) {
      for (Eigen::Index j = k; j < n; ++j) {
        auto col = work.col(j).tail(m - k);
        const double w = 2.0 * v.dot(col) / vsq;
        col -= w * v;
      }
    }
    work(k, k) = alpha;
    work.col(k).tail(m - k - 1).setZero();
    reflectors.push_back(std::move(v));
  }

  Matrix q = Matrix::Identity(m, n);
  for (Eigen::Index k = n - 1; k >= 0; --k) {
    const Vector& v = reflectors[k];
    const double vsq = v.squaredNorm();
    if (vsq == 0) continue;
    for (Eigen::Index j = 0; j < n; ++j) {
      auto col = q.col(j).tail(m - k);
      const double w = 2.0 * v.dot(col) / vsq;
      col -= w * v;
    }
  }

  Matrix r = work.topRows(n).triangularView<Eigen::Upper>();

  // Normalize to a negative diagonal; with the diagonal signs fixed the
  // factor pair is unique, hence independent of the input row order.
  for (Eigen::Index j = 0; j < n; ++j) {
    if (r(j, j) > 0) {
      r.row(j) = -r.row(j);
      q.col(j) = -q.col(j);
    }
  }
  return {std::move(q), std::move(r)};
}

EigenSymResult eigen_sym(const Matrix& a) {
  require_square(a, "symmetric eigendecomposition");
  require_symmetric(a, errc::not_symmetric,
                    "unsupported: non-symmetric eigenproblem");
  const Eigen::Index n = a.rows();
  Matrix s = (a + a.transpose()) / 2.0;
  Matrix v = Matrix::Identity(n, n);
  const double fnorm = s.norm();
  const double threshold = 1e-12 * fnorm;
  const int max_sweeps = 100 * static_cast<int>(n);

  auto off_norm = [&]() {
    double acc = 0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = 0; q < n; ++q) {
        if (p != q) acc += s(p, q) * s(p, q);
      }
    }
    return std::sqrt(acc);
  };

  bool converged = off_norm() <= threshold;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = s(p, q);
        if (apq == 0.0) continue;
        const double tau = (s(q, q) - s(p, p)) / (2.0 * apq);
        const double t = tau >= 0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                  : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double skp = s(k, p), skq = s(k, q);
          s(k, p) = c * skp - sn * skq;
          s(k, q) = sn * skp + c * skq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double spk = s(p, k), sqk = s(q, k);
          s(p, k) = c * spk - sn * sqk;
          s(q, k) = sn * spk + c * sqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
    }
    converged = off_norm() <= threshold;
  }
  if (!converged) {
    throw RmaError(errc::non_convergence,
                   "Jacobi eigendecomposition did not converge");
  }

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) {
                     return s(i, i) > s(j, j);
                   });

  EigenSymResult out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = s(order[k], order[k]);
    Vector col = v.col(order[k]);
    Eigen::Index imax = 0;
    for (Eigen::Index i = 1; i < n; ++i) {
      if (std::abs(col(i)) > std::abs(col(imax))) imax = i;
    }
    if (col(imax) < 0) col = -col;
    out.vectors.col(k) = col;
  }
  return out;
}

SvdResult svd(const Matrix& a) {
  require_tall(a, "SVD");
  const Eigen::Index m = a.rows(), n = a.cols();

  // One-sided Jacobi: rotate column pairs of a working copy until every
  // pair is orthogonal relative to the column scales. The pairwise relative
  // criterion (not a global norm) is what keeps tiny singular values
  // accurate to machine precision, which the rank cutoff depends on.
  Matrix w = a;
  Matrix v = Matrix::Identity(n, n);
  const int max_sweeps = 100 * static_cast<int>(n);

  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    bool rotated = false;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double alpha = w.col(p).squaredNorm();
        const double beta = w.col(q).squaredNorm();
        const double gamma = w.col(p).dot(w.col(q));
        if (std::abs(gamma) <= kEps * std::sqrt(alpha) * std::sqrt(beta)) {
          continue;
        }
        const double tau = (beta - alpha) / (2.0 * gamma);
        const double t = tau >= 0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                  : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * c;
        for (Eigen::Index i = 0; i < m; ++i) {
          const double wip = w(i, p), wiq = w(i, q);
          w(i, p) = c * wip - sn * wiq;
          w(i, q) = sn * wip + c * wiq;
        }
        for (Eigen::Index i = 0; i < n; ++i) {
          const double vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - sn * viq;
          v(i, q) = sn * vip + c * viq;
        }
        rotated = true;
      }
    }
    converged = !rotated;
  }
  if (!converged) {
    throw RmaError(errc::non_convergence, "Jacobi SVD did not converge");
  }

  Vector sigma(n);
  for (Eigen::Index j = 0; j < n; ++j) sigma(j) = w.col(j).norm();
  const double sigma_max = n > 0 ? sigma.maxCoeff() : 0.0;
  const double tol = static_cast<double>(std::max(m, n)) * kEps * sigma_max;

  Matrix u_cols(m, n);
  std::vector<char> have_u(n, 0);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (sigma(j) <= tol) continue;
    u_cols.col(j) = w.col(j) / sigma(j);
    have_u[j] = 1;
  }

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) {
                     return sigma(i) > sigma(j);
                   });

  SvdResult out;
  out.v.resize(n, n);
  out.d = Matrix::Zero(n, n);
  out.u.resize(m, m);

  std::vector<Vector> basis;
  basis.reserve(m);
  std::vector<Eigen::Index> unfilled;
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index j = order[k];
    out.d(k, k) = sigma(j);
    out.v.col(k) = v.col(j);
    if (!have_u[j]) {
      unfilled.push_back(k);
      continue;
    }
    Vector u = u_cols.col(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vector& prev : basis) u -= prev.dot(u) * prev;
    }
    u.normalize();
    out.u.col(k) = u;
    basis.push_back(std::move(u));
  }
  for (Eigen::Index k = n; k < m; ++k) unfilled.push_back(k);

  // Complete the orthonormal basis: greedily take the standard basis vector
  // with the largest residual against the span built so far.
  for (Eigen::Index k : unfilled) {
    Vector best_residual;
    double best_norm = -1.0;
    for (Eigen::Index cand = 0; cand < m; ++cand) {
      Vector e = Vector::Zero(m);
      e(cand) = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (const Vector& prev : basis) e -= prev.dot(e) * prev;
      }
      const double norm = e.norm();
      if (norm > best_norm) {
        best_norm = norm;
        best_residual = std::move(e);
      }
    }
    best_residual /= best_norm;
    out.u.col(k) = best_residual;
    basis.push_back(std::move(best_residual));
  }

  return out;
}

Matrix cholesky(const Matrix& a) {
  require_square(a, "Cholesky factorization");
  require_symmetric(a, errc::not_symmetric,
                    "Cholesky factorization requires a symmetric matrix");
  const Eigen::Index n = a.rows();
  Matrix u = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double diag = a(i, i);
    for (Eigen::Index k = 0; k < i; ++k) diag -= u(k, i) * u(k, i);
    if (diag <= 0.0) {
      throw RmaError(errc::not_positive_definite,
                     "matrix is not positive definite (pivot " +
                         std::to_string(i + 1) + " is not positive)");
    }
    u(i, i) = std::sqrt(diag);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      double acc = a(i, j);
      for (Eigen::Index k = 0; k < i; ++k) acc -= u(k, i) * u(k, j);
      u(i, j) = acc / u(i, i);
    }
  }
  return u;
}

int64_t rank(const Matrix& a) {
  if (a.rows() < a.cols()) {
    Matrix at = a.transpose();
    return rank(at);
  }
  SvdResult s = svd(a);
  const double sigma_max = s.d.rows() > 0 ? s.d(0, 0) : 0.0;
  const double tol =
      static_cast<double>(std::max(a.rows(), a.cols())) * kEps * sigma_max;
  int64_t r = 0;
  for (Eigen::Index i = 0; i < s.d.rows(); ++i) {
    if (s.d(i, i) > tol) ++r;
  }
  return r;
}

}  // namespace rma::kernels
