#ifndef WILDSURF_TORUS_HPP
#define WILDSURF_TORUS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wildsurf/int_matrix.hpp"
#include "wildsurf/matrix.hpp"
#include "wildsurf/number_field.hpp"
#include "wildsurf/roots.hpp"

namespace wildsurf {

using ComplexVector = std::vector<ComplexElement>;
using ComplexMatrix = Matrix<ComplexElement>;

// X = C^n / Lambda. Coordinates are (re, im) pairs in K read through the
// real embedding `embedding`.
struct TorusSpec {
  std::size_t dim = 0;
  FieldHandle field;
  std::size_t embedding = 0;
  std::vector<ComplexVector> lattice;  // 2n generators

  // 2n x 2n real matrix over K whose j-th column is (Re lambda_j, Im lambda_j).
  Matrix<FieldElement> real_matrix() const;
  // Throws std::invalid_argument when the shape is wrong, the embedding is
  // not real, or the generators are R-linearly dependent.
  void check() const;
};

// sigma = T_b o alpha, with alpha(z) = A z.
struct TorusAutomorphism {
  ComplexMatrix A;
  ComplexVector b;
  IntMatrix rho;  // A lambda_j = sum_i rho_ij lambda_i
};

// Lattice coordinates of a point: c with sum_j c_j lambda_j = point.
std::vector<FieldElement> lattice_coordinates(const TorusSpec& t, const ComplexVector& point);

// Throws std::invalid_argument when A does not preserve the lattice or
// |det rho| != 1.
IntMatrix lattice_action(const TorusSpec& t, const ComplexMatrix& a);

// Splits the affine map z -> A z + c into (alpha, b); validates A.
TorusAutomorphism translation_normal_form(const TorusSpec& t, const ComplexMatrix& a, const ComplexVector& c);

// sigma^m = (A^m, sum_{i<m} A^i b), m >= 1.
TorusAutomorphism power(const TorusSpec& t, const TorusAutomorphism& s, unsigned m);

// Order of the point in X, or nullopt when it is not torsion.
std::optional<Integer> torsion_order(const TorusSpec& t, const ComplexVector& point);

enum class VerdictTag { Wild, NotWild, Unknown };

enum class TorusCertificate {
  KroneckerIndependence,
  TrivialQuotient,
  TorsionWitness,
  SubtorusWitness,
  NonUnipotent,
  SearchBound,
  // The smallest complex-structure-invariant rational subspace that can
  // carry a multiple of b̄ is the whole quotient.
  FullComplexClosure,
};

struct WildnessVerdict {
  VerdictTag tag = VerdictTag::Unknown;
  TorusCertificate certificate = TorusCertificate::SearchBound;
  std::size_t quotient_dim = 0;             // real dimension d of X / beta(X)
  std::vector<FieldElement> quotient_point;  // coordinates of b̄ in R^d / Z^d
  IntMatrix quotient_projection;             // d x 2n, lattice coords -> quotient coords
  Integer order = 0;                         // TorsionWitness; multiplier for SubtorusWitness
  IntMatrix sublattice;                      // SubtorusWitness: columns span the subtorus lattice in Z^d
  long height_bound = 0;
  std::vector<std::string> warnings;
};

std::string to_string(VerdictTag t);
std::string to_string(TorusCertificate c);

// Decides whether sigma is wild through the generation of X / beta(X) by b̄.
// The decision is exact; height_bound is recorded in the verdict only.
WildnessVerdict torus_wildness(const TorusSpec& t, const TorusAutomorphism& s, long height_bound);

// Re-checks a verdict's certificate from scratch.
bool check_certificate(const TorusSpec& t, const TorusAutomorphism& s, const WildnessVerdict& v);

struct DynamicalDegrees {
  std::vector<Interval> degrees;  // d_0 .. d_n
  bool zero_entropy = false;
  double entropy_lo = 0;
  double entropy_hi = 0;
};

// Zero entropy is decided exactly from char_poly(rho); the degrees are
// certified enclosures of width <= max_width.
DynamicalDegrees dynamical_degrees(const TorusSpec& t, const TorusAutomorphism& s,
                                   const Rational& max_width = make_rational(1, 1000000000));

}  // namespace wildsurf

#endif  // WILDSURF_TORUS_HPP
