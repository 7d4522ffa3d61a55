#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "qmf/errors.hpp"
#include "qmf/polynomial.hpp"

namespace qmf {

enum class SolveStatus { Unique, NoSolution, NonUnique };

/// x_i = numer[i] / denom when status is Unique.
template <class R>
struct SolveResult {
  SolveStatus status = SolveStatus::NoSolution;
  std::vector<R> numer;
  R denom;
  int rank = 0;
};

inline std::optional<Rational> ring_divide_exact(const Rational& a, const Rational& b) { return a / b; }
inline std::optional<Cyclo> ring_divide_exact(const Cyclo& a, const Cyclo& b) { return a / b; }
template <class S>
std::optional<Polynomial<S>> ring_divide_exact(const Polynomial<S>& a, const Polynomial<S>& b) {
  return a.divide_exact(b);
}

template <class R>
R exact_quotient(const R& a, const R& b) {
  auto q = ring_divide_exact(a, b);
  if (!q) throw SolveFailure("inexact division in fraction-free elimination");
  return *q;
}

/// Fraction-free (Bareiss) elimination of A x = b over an integral domain.
/// A is m x n with m >= n allowed; inconsistency and rank deficiency are
/// reported instead of thrown.
template <class R>
SolveResult<R> solve_fraction_free(std::vector<std::vector<R>> A, std::vector<R> b) {
  const std::size_t m = A.size();
  const std::size_t n = m == 0 ? 0 : A[0].size();
  for (std::size_t i = 0; i < m; ++i) A[i].push_back(b[i]);
  std::vector<std::size_t> pivcols;
  R prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && is_zero(A[p][c])) ++p;
    if (p == m) continue;
    std::swap(A[p], A[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j <= n; ++j) {
        A[i][j] = exact_quotient(R(A[r][c] * A[i][j] - A[i][c] * A[r][j]), prev);
      }
      A[i][c] = R(0);
    }
    prev = A[r][c];
    pivcols.push_back(c);
    ++r;
  }
  SolveResult<R> res;
  res.rank = static_cast<int>(r);
  for (std::size_t i = r; i < m; ++i) {
    if (!is_zero(A[i][n])) {
      res.status = SolveStatus::NoSolution;
      return res;
    }
  }
  if (r < n) {
    res.status = SolveStatus::NonUnique;
    return res;
  }
  // square part is upper triangular; the last pivot is the determinant
  const R det = A[n - 1][n - 1];
  res.numer.assign(n, R(0));
  for (std::size_t ii = n; ii-- > 0;) {
    R acc = det * A[ii][n];
    for (std::size_t j = ii + 1; j < n; ++j) acc = acc - A[ii][j] * res.numer[j];
    res.numer[ii] = exact_quotient(acc, A[ii][ii]);
  }
  res.denom = det;
  res.status = SolveStatus::Unique;
  return res;
}

template <class S>
using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using VectorX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

/// Unique solution of A x = b over a field, or an exception naming the failure.
template <class S>
VectorX<S> solve_field(const MatrixX<S>& A, const VectorX<S>& b) {
  std::vector<std::vector<S>> rows(static_cast<std::size_t>(A.rows()), std::vector<S>(static_cast<std::size_t>(A.cols())));
  std::vector<S> rhs(static_cast<std::size_t>(A.rows()));
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index j = 0; j < A.cols(); ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = A(i, j);
    rhs[static_cast<std::size_t>(i)] = b(i);
  }
  const SolveResult<S> res = solve_fraction_free(std::move(rows), std::move(rhs));
  if (res.status == SolveStatus::NoSolution) throw NoSolution("inconsistent linear system");
  if (res.status == SolveStatus::NonUnique) throw NonUniqueSolution("rank " + std::to_string(res.rank) + " below " + std::to_string(A.cols()));
  VectorX<S> x(A.cols());
  for (Eigen::Index i = 0; i < A.cols(); ++i) x(i) = res.numer[static_cast<std::size_t>(i)] / res.denom;
  return x;
}

template <class S>
MatrixX<S> inverse_field(const MatrixX<S>& A) {
  if (A.rows() != A.cols()) throw SolveFailure("inverse of a non-square matrix");
  MatrixX<S> inv(A.rows(), A.cols());
  for (Eigen::Index j = 0; j < A.cols(); ++j) {
    VectorX<S> e = VectorX<S>::Constant(A.rows(), S(0));
    e(j) = S(1);
    inv.col(j) = solve_field<S>(A, e);
  }
  return inv;
}

}  // namespace qmf
