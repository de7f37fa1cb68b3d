#ifndef WILDSURF_UNITS_HPP
#define WILDSURF_UNITS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "wildsurf/int_matrix.hpp"
#include "wildsurf/number_field.hpp"

namespace wildsurf {

// O = Q[M] ∩ (integer matrices), described in the power basis I, M, ...,
// M^{d-1}. Rows of `basis` form a Z-basis of O in Hermite (upper triangular)
// shape.
struct OrderData {
  IntMatrix ambient;
  RatMatrix basis;

  std::size_t degree() const { return ambient.rows(); }
  // sum_i coords[i] M^i; throws if the result is not integral.
  IntMatrix expand(const std::vector<Rational>& power_coords) const;
  // Power-basis coordinates of sum_j c_j basis_j.
  std::vector<Rational> combine(const std::vector<Integer>& order_coords) const;
};

// Throws std::invalid_argument when M is not square or char_poly(M) is
// reducible.
OrderData matrix_order(const IntMatrix& m);

// K = Q[x]/char_poly(M) with x standing for M.
FieldHandle commutant_field(const IntMatrix& m);

struct UnitGroupData {
  FieldHandle field;
  std::size_t torsion_order = 2;
  std::size_t unit_rank = 1;
  long coeff_bound = 0;
  // Normalized to be > 1 at the dominant real embedding; nullopt means
  // Unknown(coeff_bound): the scan found no unit of infinite order.
  std::optional<FieldElement> fundamental_unit;
  std::optional<IntMatrix> fundamental_unit_matrix;
};

// Scans the elements sum_j c_j basis_j, |c_j| <= coeff_bound, for units
// (|det| = 1) and keeps the one of smallest |log| at a real embedding, so the
// result is fundamental within the scanned box. Torsion is {+-1} because K
// has a real embedding. Throws for signatures whose unit rank is not 1.
UnitGroupData unit_group(const IntMatrix& m, long coeff_bound);

// |Gamma / <M>| = torsion * k where M = +-u^{+-k}. nullopt (Unknown) when no
// unit was found or M is not such a power of the unit found. Throws
// std::invalid_argument when |det M| != 1.
std::optional<Integer> commutant_quotient_order(const IntMatrix& m, long coeff_bound);

// Exponent k >= 1 with M = +-u^{+-k} for the normalized fundamental unit u
// (M is the generator x of units.field).
std::optional<long> unit_exponent(const UnitGroupData& units);

}  // namespace wildsurf

#endif  // WILDSURF_UNITS_HPP
