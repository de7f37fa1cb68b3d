#ifndef WILDSURF_POLY_HPP
#define WILDSURF_POLY_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "wildsurf/arith.hpp"
#include "wildsurf/int_matrix.hpp"

namespace wildsurf {

// Univariate polynomial over Q, coefficients in ascending degree. The
// coefficient vector never carries trailing zeros; the zero polynomial has
// no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly from_integers(const std::vector<long>& coeffs);
  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t degree);
  static Poly x() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  bool is_monic() const { return !is_zero() && leading() == 1; }
  bool has_integer_coeffs() const;

  Rational eval(const Rational& t) const;
  Poly derivative() const;
  Poly monic() const;
  // Scaled to integer coefficients with content 1 and positive leading term.
  Poly primitive() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Quotient and remainder; throws on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
// Monic gcd (zero when both are zero).
Poly gcd(const Poly& a, const Poly& b);
// s with s * a = g (mod m), g = gcd(a, m). Returns {g, s}.
std::pair<Poly, Poly> gcd_cofactor(const Poly& a, const Poly& m);
Poly pow(const Poly& a, unsigned k);

// Squarefree decomposition: f = lc * prod_i factors[i].first^factors[i].second,
// each factor monic and squarefree, pairwise coprime.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f);

// det(tI - A), computed exactly with the Faddeev-LeVerrier recurrence.
Poly char_poly(const IntMatrix& a);

// Rational roots with multiplicity, ordered by absolute value with the
// positive root first on ties. With monic_unit_constant set, f must be monic
// with constant term +-1 and only +-1 are tested (a rational root of such a
// polynomial is +-1).
std::vector<Rational> rational_roots(const Poly& f, bool monic_unit_constant = false);

// m-th cyclotomic polynomial.
Poly cyclotomic(unsigned m);
unsigned euler_totient(unsigned m);

// True iff every complex root of the monic integer polynomial f has modulus
// 1. By Kronecker's theorem this holds iff f is a product of cyclotomic
// polynomials; we strip Phi_m for every m with totient(m) <= deg f and check
// the quotient is 1.
bool all_roots_on_unit_circle(const Poly& f);

}  // namespace wildsurf

#endif  // WILDSURF_POLY_HPP
