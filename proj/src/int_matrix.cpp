#include "wildsurf/int_matrix.hpp"

#include <stdexcept>

#include "wildsurf/linalg.hpp"

namespace wildsurf {

IntMatrix int_identity(std::size_t n) { return IntMatrix::identity(n, Integer(0), Integer(1)); }

IntMatrix int_zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols, Integer(0)); }

RatMatrix to_rational(const IntMatrix& a) {
  return a.map([](const Integer& z) { return Rational(z); });
}

std::optional<IntMatrix> to_integer(const RatMatrix& a) {
  std::vector<Integer> out;
  out.reserve(a.entries().size());
  for (const auto& q : a.entries()) {
    if (q.get_den() != 1) return std::nullopt;
    out.push_back(q.get_num());
  }
  return IntMatrix(a.rows(), a.cols(), std::move(out));
}

Integer det(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("det: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sgn_flip = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(p, k);
      sgn_flip = -sgn_flip;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    prev = m(k, k);
  }
  return sgn_flip * m(n - 1, n - 1);
}

Integer trace(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("trace: matrix is not square");
  Integer t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

std::optional<IntMatrix> unimodular_inverse(const IntMatrix& a) {
  if (!a.is_square() || a.rows() == 0) return std::nullopt;
  Integer d = det(a);
  if (d != 1 && d != -1) return std::nullopt;
  auto inv = inverse(to_rational(a));
  if (!inv) return std::nullopt;
  return to_integer(*inv);
}

IntMatrix power(const IntMatrix& a, long k) {
  if (!a.is_square()) throw std::invalid_argument("power: matrix is not square");
  IntMatrix base = a;
  if (k < 0) {
    auto inv = unimodular_inverse(a);
    if (!inv) throw std::invalid_argument("power: negative exponent of a non-unimodular matrix");
    base = *inv;
    k = -k;
  }
  IntMatrix result = int_identity(a.rows());
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < D.rows() && i < D.cols(); ++i) out.push_back(D(i, i));
  return out;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal())
    if (d != 0) ++r;
  return r;
}

namespace {

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix A = a;
  IntMatrix U = int_identity(m);
  IntMatrix V = int_identity(n);
  const std::size_t steps = std::min(m, n);

  for (std::size_t t = 0; t < steps; ++t) {
    bool block_is_zero = false;
    for (;;) {
      std::size_t pi = m, pj = n;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (A(i, j) == 0) continue;
          Integer v = abs(A(i, j));
          if (pi == m || v < best) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (pi == m) {
        block_is_zero = true;
        break;
      }
      A.swap_rows(t, pi);
      U.swap_rows(t, pi);
      A.swap_cols(t, pj);
      V.swap_cols(t, pj);

      bool cleared = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), A(i, t).get_mpz_t(), A(t, t).get_mpz_t());
        add_row_multiple(A, i, t, -q);
        add_row_multiple(U, i, t, -q);
        if (A(i, t) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), A(t, j).get_mpz_t(), A(t, t).get_mpz_t());
        add_col_multiple(A, j, t, -q);
        add_col_multiple(V, j, t, -q);
        if (A(t, j) != 0) cleared = false;
      }
      if (!cleared) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(A(i, j).get_mpz_t(), A(t, t).get_mpz_t())) {
            add_row_multiple(A, t, i, Integer(1));
            add_row_multiple(U, t, i, Integer(1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (block_is_zero) break;
    if (A(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) A(t, j) = -A(t, j);
      for (std::size_t j = 0; j < m; ++j) U(t, j) = -U(t, j);
    }
  }
  return {std::move(U), std::move(A), std::move(V)};
}

Integer CokernelInvariants::torsion_order() const {
  Integer o = 1;
  for (const auto& d : torsion) o *= d;
  return o;
}

CokernelInvariants cokernel_invariants(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("cokernel_invariants: matrix is not square");
  auto snf = smith_normal_form(a);
  CokernelInvariants out;
  for (const auto& d : snf.diagonal()) {
    if (d == 0) ++out.free_rank;
    else if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

bool is_unipotent(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("is_unipotent: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return true;
  IntMatrix nil = a - int_identity(n);
  IntMatrix acc = nil;
  for (std::size_t k = 1; k < n; ++k) acc = acc * nil;
  for (const auto& e : acc.entries())
    if (e != 0) return false;
  return true;
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  const std::size_t m = h.rows();
  const std::size_t n = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      std::size_t p = m;
      for (std::size_t i = r; i < m; ++i)
        if (h(i, c) != 0 && (p == m || abs(h(i, c)) < abs(h(p, c)))) p = i;
      if (p == m) break;
      h.swap_rows(r, p);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        Integer q = floor_div(h(i, c), h(r, c));
        add_row_multiple(h, i, r, -q);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0)
      for (std::size_t j = 0; j < n; ++j) h(r, j) = -h(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      if (q != 0) add_row_multiple(h, i, r, -q);
    }
    ++r;
  }
  return h.block(0, 0, r, n);
}

IntMatrix integer_kernel(const IntMatrix& a) {
  auto snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  return snf.V.block(0, r, a.cols(), a.cols() - r);
}

std::string to_string(const IntMatrix& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) s += ",";
      s += a(i, j).get_str();
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace wildsurf
