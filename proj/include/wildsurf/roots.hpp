#ifndef WILDSURF_ROOTS_HPP
#define WILDSURF_ROOTS_HPP

#include <complex>
#include <vector>

#include "wildsurf/arith.hpp"
#include "wildsurf/poly.hpp"

namespace wildsurf {

// Closed rational interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& q) { return {q, q}; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  // -1 / +1 when the interval lies strictly on one side of zero, else 0.
  int strict_sign() const { return lo > 0 ? 1 : (hi < 0 ? -1 : 0); }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);
Interval eval(const Poly& p, const Interval& x);

// Gaussian rational re + i*im.
struct GaussRat {
  Rational re;
  Rational im;

  Rational norm() const { return re * re + im * im; }
  GaussRat conj() const { return {re, -im}; }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
};

GaussRat operator+(const GaussRat& a, const GaussRat& b);
GaussRat operator-(const GaussRat& a, const GaussRat& b);
GaussRat operator*(const GaussRat& a, const GaussRat& b);
GaussRat operator/(const GaussRat& a, const GaussRat& b);
GaussRat eval(const Poly& p, const GaussRat& z);

// Closed disk holding exactly one root of the polynomial it was certified
// against.
struct ComplexDisk {
  GaussRat center;
  Rational radius;

  bool meets_real_axis() const { return abs(center.im) <= radius; }
  // Modulus enclosure [|c| - r, |c| + r], clamped at 0.
  Interval modulus() const;
};

// Sturm chain p, p', -rem(p, p'), ...
std::vector<Poly> sturm_chain(const Poly& p);
// Number of distinct real roots in (a, b].
int count_real_roots(const std::vector<Poly>& chain, const Rational& a, const Rational& b);
// Upper bound on the modulus of every root (Cauchy).
Rational root_bound(const Poly& p);

// Isolating intervals of the real roots of a squarefree p, ascending. An
// interval is either degenerate (an exact rational root) or has endpoints
// where p is nonzero with opposite signs and holds exactly one root.
std::vector<Interval> isolate_real_roots(const Poly& p);
// Bisects an isolating interval of squarefree p down to width <= target.
Interval refine_real_root(const Poly& p, Interval iv, const Rational& target);

// Certified disks for all roots of squarefree p (degree >= 1), each with
// radius <= max_radius and pairwise disjoint, so each holds exactly one root.
// Certification uses the Weierstrass-corrected Gershgorin disks of the
// companion-like matrix diag(z) - W 1^T, whose eigenvalues are the roots.
// Complex-conjugate roots receive conjugate disks; real roots receive disks
// centered on the real axis. Order: by center (re, im).
std::vector<ComplexDisk> isolate_complex_roots(const Poly& p, const Rational& max_radius);

}  // namespace wildsurf

#endif  // WILDSURF_ROOTS_HPP
