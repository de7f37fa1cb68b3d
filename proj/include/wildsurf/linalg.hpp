#ifndef WILDSURF_LINALG_HPP
#define WILDSURF_LINALG_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wildsurf/arith.hpp"
#include "wildsurf/matrix.hpp"

namespace wildsurf {

inline bool is_zero(const Rational& q) { return q == 0; }

// Exact Gaussian elimination over a field. T must provide + - * / and an
// is_zero(T) overload found by ADL or declared above.
template <class T>
struct Echelon {
  Matrix<T> reduced;               // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

template <class T>
Echelon<T> row_reduce(Matrix<T> m) {
  Echelon<T> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    T one = m(r, c) / m(r, c);
    T inv_pivot = one / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv_pivot;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return row_reduce(m).rank();
}

template <class T>
T determinant(Matrix<T> m) {
  if (!m.is_square() || m.rows() == 0) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<T> pivots;
  bool negate = false;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return m(0, 0) - m(0, 0);
    if (p != c) {
      m.swap_rows(p, c);
      negate = !negate;
    }
    pivots.push_back(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      T f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  T det = pivots.front();
  for (std::size_t k = 1; k < n; ++k) det = det * pivots[k];
  if (negate) det = -det;
  return det;
}

// Solves A X = B for square nonsingular A; nullopt when A is singular.
template <class T>
std::optional<Matrix<T>> solve(const Matrix<T>& a, const Matrix<T>& b) {
  if (!a.is_square() || a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  const std::size_t n = a.rows();
  Matrix<T> aug(n, n + b.cols(), a(0, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
  }
  auto e = row_reduce(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.reduced.block(0, n, n, b.cols());
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a) {
  T zero = a(0, 0) - a(0, 0);
  T one = zero;
  for (std::size_t i = 0; i < a.rows() && is_zero(one); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j))) {
        one = a(i, j) / a(i, j);
        break;
      }
  if (is_zero(one)) return std::nullopt;
  return solve(a, Matrix<T>::identity(a.rows(), zero, one));
}

// Basis of the right null space {x : A x = 0}, one vector per free column,
// with the free coordinate set to 1.
template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& a, const T& zero, const T& one) {
  auto e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(a.cols(), zero);
    v[f] = one;
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace wildsurf

#endif  // WILDSURF_LINALG_HPP
