#ifndef WILDSURF_NUMBER_FIELD_HPP
#define WILDSURF_NUMBER_FIELD_HPP

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wildsurf/arith.hpp"
#include "wildsurf/poly.hpp"
#include "wildsurf/roots.hpp"

namespace wildsurf {

// One complex embedding of K, i.e. one root of the defining polynomial.
struct Embedding {
  bool is_real = false;
  Interval interval;  // real roots: isolating interval (degenerate for a rational root)
  ComplexDisk disk;   // every root: certified disk holding exactly this root

  Interval re_box() const { return {disk.center.re - disk.radius, disk.center.re + disk.radius}; }
  Interval im_box() const { return {disk.center.im - disk.radius, disk.center.im + disk.radius}; }
};

// K = Q[x]/p(x) with p monic, integral and irreducible. Immutable; shared by
// all of its elements.
class NumberField {
 public:
  const Poly& defining_poly() const { return poly_; }
  std::size_t degree() const { return degree_; }
  const std::vector<Embedding>& embeddings() const { return embeddings_; }
  const Embedding& embedding(std::size_t i) const;

  std::size_t num_real_embeddings() const;
  std::size_t num_complex_pairs() const { return (degree_ - num_real_embeddings()) / 2; }
  // Index of the largest real root; throws for totally complex fields.
  std::size_t dominant_real_embedding() const;

  // x^k reduced mod p, for k < 2 * degree - 1.
  const std::vector<Rational>& power_of_generator(std::size_t k) const { return powers_[k]; }

  bool same_as(const NumberField& other) const { return this == &other || poly_ == other.poly_; }

 private:
  friend std::shared_ptr<const NumberField> make_field(const Poly& p);
  friend std::shared_ptr<const NumberField> rational_field();
  NumberField(Poly p, std::vector<Embedding> embeddings);

  Poly poly_;
  std::size_t degree_ = 0;
  std::vector<Embedding> embeddings_;
  std::vector<std::vector<Rational>> powers_;
};

using FieldHandle = std::shared_ptr<const NumberField>;

// Builds K from a monic integer polynomial of degree 2..6. Throws
// std::invalid_argument when p is reducible or the degree is out of range.
// Embeddings: real roots ascending, then complex roots ordered by the
// (real, imaginary) parts of their disk centers, conjugates adjacent.
FieldHandle make_field(const Poly& p);
// Q itself, presented as Q[x]/(x); used where a torus carries rational data
// only.
FieldHandle rational_field();

// Irreducibility over Q for monic integer polynomials of degree <= 6:
// squarefree, no rational root, and no monic integer factor of degree
// 2..deg/2 (searched over subsets of certified root approximations and
// confirmed by exact division).
bool is_irreducible(const Poly& p);

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldHandle field, std::vector<Rational> coords);

  static FieldElement zero(const FieldHandle& f);
  static FieldElement one(const FieldHandle& f);
  static FieldElement generator(const FieldHandle& f);
  static FieldElement from_rational(const FieldHandle& f, const Rational& q);
  static FieldElement from_poly(const FieldHandle& f, const Poly& q);

  const FieldHandle& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  Poly as_poly() const { return Poly(coords_); }
  bool is_zero() const;

  FieldElement inverse() const;
  FieldElement pow(long k) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const Rational& q, const FieldElement& a);
  friend FieldElement operator*(const FieldElement& a, const Rational& q) { return q * a; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  FieldHandle field_;
  std::vector<Rational> coords_;
};

inline bool is_zero(const FieldElement& a) { return a.is_zero(); }

// Throws std::invalid_argument when the elements live in different fields.
void require_same_field(const FieldElement& a, const FieldElement& b);

// Exact sign of a under a real embedding.
int sign_at(const FieldElement& a, std::size_t embedding);
// Enclosure of a under a real embedding with width <= max_width.
Interval enclose(const FieldElement& a, std::size_t embedding, const Rational& max_width);
// Floating-point image under any embedding (not used for decisions).
std::complex<double> approx(const FieldElement& a, std::size_t embedding);

// The rational value when every coordinate beyond degree 0 vanishes.
std::optional<Rational> as_rational(const FieldElement& a);
// Dimension over Q of the span of the elements.
std::size_t q_linear_rank(const std::vector<FieldElement>& elems);
// Image under the nontrivial automorphism of a quadratic field.
FieldElement galois_conjugate(const FieldElement& a);

// re + i*im with re, im in K. Under a real embedding these are the real and
// imaginary parts; arithmetic is that of K[i], so any embedding extended by
// i -> i is a ring map.
struct ComplexElement {
  FieldElement re;
  FieldElement im;

  static ComplexElement zero(const FieldHandle& f);
  static ComplexElement one(const FieldHandle& f);
  static ComplexElement real(const FieldElement& a);

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  ComplexElement conj() const { return {re, -im}; }
  FieldElement norm() const { return re * re + im * im; }
  ComplexElement inverse() const;

  friend ComplexElement operator+(const ComplexElement& a, const ComplexElement& b);
  friend ComplexElement operator-(const ComplexElement& a, const ComplexElement& b);
  friend ComplexElement operator-(const ComplexElement& a);
  friend ComplexElement operator*(const ComplexElement& a, const ComplexElement& b);
  friend ComplexElement operator*(const FieldElement& s, const ComplexElement& a);
  friend ComplexElement operator*(const Rational& q, const ComplexElement& a);
  friend ComplexElement operator/(const ComplexElement& a, const ComplexElement& b);
  friend bool operator==(const ComplexElement& a, const ComplexElement& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const ComplexElement& a, const ComplexElement& b) { return !(a == b); }
};

inline bool is_zero(const ComplexElement& a) { return a.is_zero(); }

std::complex<double> approx(const ComplexElement& a, std::size_t embedding);

}  // namespace wildsurf

#endif  // WILDSURF_NUMBER_FIELD_HPP
