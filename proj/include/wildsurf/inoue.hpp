#ifndef WILDSURF_INOUE_HPP
#define WILDSURF_INOUE_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wildsurf/int_matrix.hpp"
#include "wildsurf/number_field.hpp"
#include "wildsurf/poly.hpp"

namespace wildsurf {

enum class InoueVariant { SM, SMplus, SMminus };

std::string to_string(InoueVariant v);
// Accepts "SM", "SM+", "SM-", "SMplus", "SMminus".
InoueVariant parse_variant(const std::string& s);

enum class ValidationCode { WrongShape, WrongDet, Reducible, NoRealDominantRoot, TraceTooSmall };

std::string to_string(ValidationCode c);

class ValidationError : public std::invalid_argument {
 public:
  ValidationError(ValidationCode code, const std::string& detail);
  ValidationCode code() const { return code_; }

 private:
  ValidationCode code_;
};

// Throws ValidationError naming the first failed condition.
//   SM:  3x3, det 1, irreducible char poly, one real root, real root > 1.
//   SM+: 2x2, det 1, trace > 2.   SM-: 2x2, det -1, trace > 0.
void validate(InoueVariant variant, const IntMatrix& m);

// User-chosen parameters; only meaningful for SM+ and SM-.
struct InoueParameters {
  Integer r = 1;
  std::array<Integer, 2> p{Integer(0), Integer(0)};
  // tau = re + i im, with re and im polynomials in x (reduced in K).
  Poly tau_re;
  Poly tau_im = Poly::constant(Rational(1));
};

// All data are elements of K = Q[x]/char_poly(M), x standing for alpha.
//
// SM: w-side coefficients are read at the real embedding (alpha), z-side
// coefficients at the complex embedding with positive imaginary part (beta).
// SM+/SM-: everything is read at the real embedding alpha; b = conj(v) is
// the eigenvector for the other root, evaluated as an element of K.
struct InoueSurfaceSpec {
  InoueVariant variant = InoueVariant::SMplus;
  IntMatrix M;
  FieldHandle field;
  std::size_t alpha_embedding = 0;
  std::size_t z_embedding = 0;  // beta's embedding for SM, alpha's otherwise
  std::vector<FieldElement> v;  // (M - x) v = 0, first nonzero coordinate 1
  std::vector<FieldElement> a;  // = v
  std::vector<FieldElement> b;  // SM: = v; SM+/-: galois conjugate of v
  // SM+/SM- only.
  Integer r = 0;
  std::array<Integer, 2> p{Integer(0), Integer(0)};
  ComplexElement tau;
  std::vector<ComplexElement> c;
  FieldElement delta;
};

// Validates M and derives eigen data, delta and c. c is always recomputed.
InoueSurfaceSpec build_spec(InoueVariant variant, const IntMatrix& m, const InoueParameters& params = {});

// Normalized solution of (M - x I) v = 0 over K.
std::vector<FieldElement> eigen_data(const IntMatrix& m, const FieldHandle& k);

// Solution of (I - M) c = e + delta p (SM+) or -(I + M) c = e + delta p (SM-).
std::vector<ComplexElement> solve_c(const InoueSurfaceSpec& spec);

// e_i = 1/2 m_i1(m_i1 - 1) a1 b1 + 1/2 m_i2(m_i2 - 1) a2 b2 + m_i1 m_i2 b1 a2.
std::vector<FieldElement> e_vector(const InoueSurfaceSpec& spec);

// (w, z) -> (w_scale w + w_shift, z_scale z + z_w_coeff w + z_shift).
struct AffineMap {
  FieldElement w_scale;
  FieldElement w_shift;
  ComplexElement z_scale;
  ComplexElement z_w_coeff;
  ComplexElement z_shift;

  static AffineMap identity(const FieldHandle& k);
  bool is_identity() const;
  AffineMap inverse() const;
  AffineMap pow(long n) const;
  friend bool operator==(const AffineMap& a, const AffineMap& b);
  friend bool operator!=(const AffineMap& a, const AffineMap& b) { return !(a == b); }
};

// f o g: apply g first.
AffineMap compose(const AffineMap& f, const AffineMap& g);

// g1^n1 g2^n2 g3^n3 g0^k (SM) or g1^n1 g2^n2 g3^l g0^k (SM+/-); for SM the
// third exponent lives in n[2] and l stays 0.
struct GroupElement {
  std::vector<Integer> n;
  Integer l = 0;
  long k = 0;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.n == b.n && a.l == b.l && a.k == b.k;
  }
};

GroupElement identity_element(const InoueSurfaceSpec& spec);
// Generator g_i, i = 0..3 (g3 is n[2] for SM and l for SM+/-).
GroupElement generator(const InoueSurfaceSpec& spec, int i);

AffineMap generator_map(const InoueSurfaceSpec& spec, int i);
AffineMap as_affine_map(const InoueSurfaceSpec& spec, const GroupElement& e);
GroupElement compose(const InoueSurfaceSpec& spec, const GroupElement& e1, const GroupElement& e2);
GroupElement inverse(const InoueSurfaceSpec& spec, const GroupElement& e);

struct RelationCheck {
  std::string id;
  bool pass = false;
  AffineMap residue;  // lhs o rhs^{-1}; the identity when the relation holds
};

std::vector<RelationCheck> verify_relations(const InoueSurfaceSpec& spec);

struct AutReport {
  InoueVariant variant = InoueVariant::SMplus;
  CokernelInvariants coker;  // of I - M
  Integer det_i_minus_m = 0;
  Integer det_i_plus_m = 0;
  std::optional<Integer> commutant_quotient_order;  // nullopt: Unknown
  long coeff_bound = 0;
  std::string classification;
};

AutReport aut_report(const InoueSurfaceSpec& spec, long coeff_bound);

}  // namespace wildsurf

#endif  // WILDSURF_INOUE_HPP
