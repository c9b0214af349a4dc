#pragma once

// Exact integer normal forms (Smith, Hermite) and the derived lattice
// operations: kernels, images, linear solves, determinants and compound
// (exterior power) matrices.  Header-only and templated on the scalar; the
// library instantiates them with BigInt, tests also use std::int64_t.

#include <gcoh/errors.hpp>
#include <gcoh/scalar.hpp>

#include <Eigen/Core>

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace gcoh {

/// D = U * M * V with U, V unimodular and D diagonal with d_i | d_{i+1}.
/// The inverses of U and V are tracked alongside so callers can move between
/// original and diagonal coordinates without a second solve.
template <typename Scalar>
struct SmithDecomposition {
  Mat<Scalar> U, D, V;
  Mat<Scalar> U_inv, V_inv;
  std::vector<Scalar> diagonal;  // min(rows, cols) entries, nonnegative
  Index rank = 0;
};

namespace detail {

template <typename Scalar>
void swap_rows(Mat<Scalar>& D, Mat<Scalar>& U, Mat<Scalar>& U_inv, Index a, Index b) {
  if (a == b) return;
  D.row(a).swap(D.row(b));
  U.row(a).swap(U.row(b));
  U_inv.col(a).swap(U_inv.col(b));
}

template <typename Scalar>
void swap_cols(Mat<Scalar>& D, Mat<Scalar>& V, Mat<Scalar>& V_inv, Index a, Index b) {
  if (a == b) return;
  D.col(a).swap(D.col(b));
  V.col(a).swap(V.col(b));
  V_inv.row(a).swap(V_inv.row(b));
}

// row_i += q * row_t, recorded in U and U^{-1}.
template <typename Scalar>
void add_row(Mat<Scalar>& D, Mat<Scalar>& U, Mat<Scalar>& U_inv, Index i, Index t, const Scalar& q) {
  if (q == 0) return;
  for (Index c = 0; c < D.cols(); ++c) D(i, c) += q * D(t, c);
  for (Index c = 0; c < U.cols(); ++c) U(i, c) += q * U(t, c);
  for (Index r = 0; r < U_inv.rows(); ++r) U_inv(r, t) -= q * U_inv(r, i);
}

// col_j += q * col_t, recorded in V and V^{-1}.
template <typename Scalar>
void add_col(Mat<Scalar>& D, Mat<Scalar>& V, Mat<Scalar>& V_inv, Index j, Index t, const Scalar& q) {
  if (q == 0) return;
  for (Index r = 0; r < D.rows(); ++r) D(r, j) += q * D(r, t);
  for (Index r = 0; r < V.rows(); ++r) V(r, j) += q * V(r, t);
  for (Index c = 0; c < V_inv.cols(); ++c) V_inv(t, c) -= q * V_inv(j, c);
}

}  // namespace detail

/**
 * Smith normal form by smallest-absolute-value pivoting.
 *
 * Each step moves the smallest nonzero entry of the trailing block to the
 * pivot, clears its row and column by Euclidean division, and repeats until
 * the pivot divides the whole trailing block.  The output is deterministic.
 */
template <typename Derived>
SmithDecomposition<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Index rows = m.rows(), cols = m.cols();
  SmithDecomposition<Scalar> out;
  Mat<Scalar>& D = out.D;
  D = m.eval();
  out.U = Mat<Scalar>::Identity(rows, rows);
  out.U_inv = Mat<Scalar>::Identity(rows, rows);
  out.V = Mat<Scalar>::Identity(cols, cols);
  out.V_inv = Mat<Scalar>::Identity(cols, cols);

  const Index n = std::min(rows, cols);
  Index t = 0;
  for (; t < n; ++t) {
    // smallest nonzero entry in the trailing block
    Index pr = -1, pc = -1;
    Scalar best = 0;
    for (Index c = t; c < cols; ++c)
      for (Index r = t; r < rows; ++r)
        if (D(r, c) != 0) {
          Scalar a = scalar::abs<Scalar>(D(r, c));
          if (pr < 0 || a < best) {
            best = a;
            pr = r;
            pc = c;
          }
        }
    if (pr < 0) break;
    detail::swap_rows(D, out.U, out.U_inv, t, pr);
    detail::swap_cols(D, out.V, out.V_inv, t, pc);

    while (true) {
      bool clean = true;
      for (Index r = t + 1; r < rows; ++r) {
        if (D(r, t) == 0) continue;
        Scalar q = D(r, t) / D(t, t);
        detail::add_row(D, out.U, out.U_inv, r, t, Scalar(-q));
        if (D(r, t) != 0) clean = false;
      }
      for (Index c = t + 1; c < cols; ++c) {
        if (D(t, c) == 0) continue;
        Scalar q = D(t, c) / D(t, t);
        detail::add_col(D, out.V, out.V_inv, c, t, Scalar(-q));
        if (D(t, c) != 0) clean = false;
      }
      if (!clean) {
        // a remainder smaller than the pivot survived: promote it
        Index br = t, bc = t;
        Scalar b = scalar::abs<Scalar>(D(t, t));
        for (Index r = t + 1; r < rows; ++r)
          if (D(r, t) != 0 && scalar::abs<Scalar>(D(r, t)) < b) {
            b = scalar::abs<Scalar>(D(r, t));
            br = r;
            bc = t;
          }
        for (Index c = t + 1; c < cols; ++c)
          if (D(t, c) != 0 && scalar::abs<Scalar>(D(t, c)) < b) {
            b = scalar::abs<Scalar>(D(t, c));
            br = t;
            bc = c;
          }
        detail::swap_rows(D, out.U, out.U_inv, t, br);
        detail::swap_cols(D, out.V, out.V_inv, t, bc);
        continue;
      }
      // divisibility: fold an offending row into the pivot row
      Index bad = -1;
      for (Index r = t + 1; r < rows && bad < 0; ++r)
        for (Index c = t + 1; c < cols; ++c)
          if (D(r, c) % D(t, t) != 0) {
            bad = r;
            break;
          }
      if (bad < 0) break;
      detail::add_row(D, out.U, out.U_inv, t, bad, Scalar(1));
    }
    if (D(t, t) < 0) {
      for (Index c = 0; c < cols; ++c) D(t, c) = -D(t, c);
      for (Index c = 0; c < rows; ++c) out.U(t, c) = -out.U(t, c);
      for (Index r = 0; r < rows; ++r) out.U_inv(r, t) = -out.U_inv(r, t);
    }
  }
  out.rank = t;
  out.diagonal.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) out.diagonal.push_back(D(i, i));
  return out;
}

/// Column-style Hermite normal form H = A * W, W unimodular.  H is in column
/// echelon form: pivot_rows[j] is the row of the leading entry of column j
/// (positive), entries to the left of a pivot are reduced into [0, pivot).
template <typename Scalar>
struct HermiteDecomposition {
  Mat<Scalar> H, W;
  std::vector<Index> pivot_rows;
  Index rank() const { return static_cast<Index>(pivot_rows.size()); }
};

template <typename Derived>
HermiteDecomposition<typename Derived::Scalar> hermite_normal_form(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  HermiteDecomposition<Scalar> out;
  Mat<Scalar>& H = out.H;
  H = a.eval();
  const Index rows = H.rows(), cols = H.cols();
  out.W = Mat<Scalar>::Identity(cols, cols);
  Mat<Scalar>& W = out.W;

  Index p = 0;
  for (Index i = 0; i < rows && p < cols; ++i) {
    for (Index j = p + 1; j < cols; ++j) {
      if (H(i, j) == 0) continue;
      if (H(i, p) == 0) {
        H.col(p).swap(H.col(j));
        W.col(p).swap(W.col(j));
        continue;
      }
      const Scalar x = H(i, p), y = H(i, j);
      auto bz = scalar::extended_gcd<Scalar>(x, y);
      const Scalar xg = x / bz.g, yg = y / bz.g;
      // [col_p col_j] <- [col_p col_j] * [[s, -y/g], [t, x/g]], det = 1
      for (Index r = 0; r < rows; ++r) {
        Scalar cp = H(r, p), cj = H(r, j);
        H(r, p) = bz.s * cp + bz.t * cj;
        H(r, j) = xg * cj - yg * cp;
      }
      for (Index r = 0; r < cols; ++r) {
        Scalar cp = W(r, p), cj = W(r, j);
        W(r, p) = bz.s * cp + bz.t * cj;
        W(r, j) = xg * cj - yg * cp;
      }
    }
    if (H(i, p) == 0) continue;
    if (H(i, p) < 0) {
      H.col(p) = -H.col(p);
      W.col(p) = -W.col(p);
    }
    for (Index j = 0; j < p; ++j) {
      Scalar q = scalar::floor_div<Scalar>(H(i, j), H(i, p));
      if (q != 0) {
        H.col(j) -= q * H.col(p);
        W.col(j) -= q * W.col(p);
      }
    }
    out.pivot_rows.push_back(i);
    ++p;
  }
  return out;
}

template <typename Derived>
Index matrix_rank(const Eigen::MatrixBase<Derived>& a) {
  return hermite_normal_form(a).rank();
}

/// Solve A x = b over the integers through the Hermite form.  Returns
/// std::nullopt when no integer solution exists.  Free variables are zero.
template <typename DerivedA, typename DerivedB>
std::optional<Vec<typename DerivedA::Scalar>> hermite_solve(const Eigen::MatrixBase<DerivedA>& a,
                                                            const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  if (b.rows() != a.rows() || b.cols() != 1) throw ValidationError("hermite_solve: shape mismatch");
  const auto hnf = hermite_normal_form(a);
  const Index rows = a.rows(), cols = a.cols();
  Vec<Scalar> y = Vec<Scalar>::Zero(cols);
  Index next = 0;  // next pivot column
  for (Index i = 0; i < rows; ++i) {
    Scalar residual = b(i, 0);
    const Index known = next;
    for (Index j = 0; j < known; ++j) residual -= hnf.H(i, j) * y(j);
    if (next < hnf.rank() && hnf.pivot_rows[static_cast<std::size_t>(next)] == i) {
      if (residual % hnf.H(i, next) != 0) return std::nullopt;
      y(next) = residual / hnf.H(i, next);
      ++next;
    } else if (residual != 0) {
      return std::nullopt;
    }
  }
  Vec<Scalar> x = hnf.W * y;
  return x;
}

/// Columns form a basis of the integer kernel lattice {x : A x = 0}.
template <typename Derived>
Mat<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& a) {
  const auto snf = smith_normal_form(a);
  const Index k = a.cols() - snf.rank;
  return snf.V.rightCols(k);
}

/// Columns form a basis of the lattice spanned by the columns of A.
template <typename Derived>
Mat<typename Derived::Scalar> image_basis(const Eigen::MatrixBase<Derived>& a) {
  const auto hnf = hermite_normal_form(a);
  return hnf.H.leftCols(hnf.rank());
}

/// Fraction-free (Bareiss) determinant with row pivoting.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw ValidationError("determinant: matrix is not square");
  const Index n = a.rows();
  if (n == 0) return Scalar(1);
  Mat<Scalar> m = a.eval();
  Scalar prev = 1;
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index swap = -1;
      for (Index r = k + 1; r < n; ++r)
        if (m(r, k) != 0) {
          swap = r;
          break;
        }
      if (swap < 0) return Scalar(0);
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return sign < 0 ? Scalar(-det) : det;
}

/// All size-n subsets of {0, ..., k-1} in lexicographic order.
std::vector<std::vector<Index>> lex_subsets(Index k, Index n);

/**
 * n-th compound matrix: entry (I, J) is the minor det(M[I, J]) with row and
 * column index sets enumerated lexicographically.  This is the matrix of the
 * induced map on the n-th exterior power; n = 0 gives the 1x1 identity.
 */
template <typename Derived>
Mat<typename Derived::Scalar> exterior_power(const Eigen::MatrixBase<Derived>& m, Index n) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw ValidationError("exterior_power: matrix is not square");
  const Index k = m.rows();
  if (n < 0 || n > k) throw ValidationError("exterior_power: degree out of range [0, k]");
  const auto subsets = lex_subsets(k, n);
  const Index size = static_cast<Index>(subsets.size());
  Mat<Scalar> out(size, size);
  Mat<Scalar> minor(n, n);
  for (Index I = 0; I < size; ++I)
    for (Index J = 0; J < size; ++J) {
      const auto& rs = subsets[static_cast<std::size_t>(I)];
      const auto& cs = subsets[static_cast<std::size_t>(J)];
      for (Index r = 0; r < n; ++r)
        for (Index c = 0; c < n; ++c) minor(r, c) = m(rs[static_cast<std::size_t>(r)], cs[static_cast<std::size_t>(c)]);
      out(I, J) = determinant(minor);
    }
  return out;
}

}  // namespace gcoh
