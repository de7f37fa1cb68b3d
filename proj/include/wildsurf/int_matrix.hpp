#ifndef WILDSURF_INT_MATRIX_HPP
#define WILDSURF_INT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wildsurf/arith.hpp"
#include "wildsurf/matrix.hpp"

namespace wildsurf {

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix int_identity(std::size_t n);
IntMatrix int_zero(std::size_t rows, std::size_t cols);
RatMatrix to_rational(const IntMatrix& a);
// nullopt when some entry is not an integer.
std::optional<IntMatrix> to_integer(const RatMatrix& a);

// Fraction-free (Bareiss) determinant.
Integer det(const IntMatrix& a);
Integer trace(const IntMatrix& a);

// Inverse of a matrix with det = +-1; nullopt otherwise.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& a);

// A^k; negative k requires |det A| = 1.
IntMatrix power(const IntMatrix& a, long k);

// U * A * V = D with U, V unimodular and D diagonal with d1 | d2 | ...,
// all d_i >= 0. Pivots are chosen as the entry of minimal absolute value in
// the active block, ties broken by row-major position, so U and V are
// reproducible.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::vector<Integer> diagonal() const;
  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// Structure of Z^n / A Z^n.
struct CokernelInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // elementary divisors > 1, in divisibility order

  Integer torsion_order() const;
};

CokernelInvariants cokernel_invariants(const IntMatrix& a);

// (A - I)^n = 0.
bool is_unipotent(const IntMatrix& a);

// Row-style Hermite normal form of the lattice spanned by the rows of A:
// nonzero rows only, echelon shape, positive pivots, entries above each pivot
// reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& a);

// Columns form a Z-basis of {x in Z^n : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

std::string to_string(const IntMatrix& a);

}  // namespace wildsurf

#endif  // WILDSURF_INT_MATRIX_HPP
