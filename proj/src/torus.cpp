#include "wildsurf/torus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wildsurf/linalg.hpp"
#include "wildsurf/poly.hpp"

namespace wildsurf {

namespace {

std::vector<FieldElement> real_vector(const ComplexVector& z) {
  std::vector<FieldElement> out;
  out.reserve(2 * z.size());
  for (const auto& c : z) out.push_back(c.re);
  for (const auto& c : z) out.push_back(c.im);
  return out;
}

Matrix<FieldElement> column(const std::vector<FieldElement>& v) {
  return Matrix<FieldElement>(v.size(), 1, v);
}

Matrix<FieldElement> lift(const FieldHandle& f, const IntMatrix& m) {
  return m.map([&](const Integer& z) { return FieldElement::from_rational(f, Rational(z)); });
}

Matrix<FieldElement> invert(const Matrix<FieldElement>& m) {
  auto inv = inverse(m);
  if (!inv) throw std::invalid_argument("lattice generators are R-linearly dependent");
  return *inv;
}

Integer denominator_lcm(const std::vector<Rational>& v) {
  Integer out = 1;
  for (const auto& q : v) out = lcm(out, q.get_den());
  return out;
}

// Rows of the integer matrix span the same Q-space as the rational rows.
IntMatrix integral_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  IntMatrix out(rows.size(), cols, Integer(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Integer den = denominator_lcm(rows[i]);
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = Integer(rows[i][j] * den);
  }
  return out;
}

bool in_span(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& v) {
  if (basis.empty()) return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
  RatMatrix m(basis.size() + 1, v.size(), Rational(0));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = basis[i][j];
  for (std::size_t j = 0; j < v.size(); ++j) m(basis.size(), j) = v[j];
  return rank(m) == basis.size();
}

struct Quotient {
  std::size_t d = 0;
  IntMatrix projection;  // P: d x 2n
  IntMatrix section;     // S: 2n x d with P S = I
};

Quotient quotient_by_image(const IntMatrix& rho) {
  const std::size_t m = rho.rows();
  auto snf = smith_normal_form(rho - int_identity(m));
  const std::size_t r = snf.rank();
  Quotient q;
  q.d = m - r;
  auto uinv = unimodular_inverse(snf.U);
  q.projection = snf.U.block(r, 0, q.d, m);
  q.section = uinv->block(0, r, m, q.d);
  return q;
}

// Complex structure of X / beta(X) in quotient coordinates: P L^{-1} J L S.
Matrix<FieldElement> quotient_complex_structure(const TorusSpec& t, const Quotient& q) {
  const std::size_t n = t.dim;
  const FieldHandle& f = t.field;
  Matrix<FieldElement> j(2 * n, 2 * n, FieldElement::zero(f));
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + i) = -FieldElement::one(f);
    j(n + i, i) = FieldElement::one(f);
  }
  Matrix<FieldElement> l = t.real_matrix();
  return lift(f, q.projection) * (invert(l) * j * l) * lift(f, q.section);
}

std::vector<Rational> component(const std::vector<FieldElement>& v, std::size_t m) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(e.coords()[m]);
  return out;
}

// Smallest Q-subspace of Q^d containing the irrational parts of v and stable
// under every power-basis component of J'. Any rational subspace W with
// k v in W_R + Z^d must contain the irrational parts because 1, x, x^2, ...
// are Q-linearly independent under the embedding.
std::vector<std::vector<Rational>> complex_closure(const std::vector<FieldElement>& v,
                                                   const Matrix<FieldElement>& jq) {
  const std::size_t d = v.size();
  const std::size_t deg = v.front().field()->degree();
  std::vector<RatMatrix> parts;
  for (std::size_t m = 0; m < deg; ++m) {
    RatMatrix p(d, d, Rational(0));
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) p(a, b) = jq(a, b).coords()[m];
    parts.push_back(std::move(p));
  }
  std::vector<std::vector<Rational>> basis;
  std::vector<std::vector<Rational>> queue;
  for (std::size_t m = 1; m < deg; ++m) queue.push_back(component(v, m));
  while (!queue.empty() && basis.size() < d) {
    auto w = std::move(queue.back());
    queue.pop_back();
    if (in_span(basis, w)) continue;
    basis.push_back(w);
    for (const auto& p : parts) queue.push_back(p.apply(w));
  }
  return basis;
}

std::vector<FieldElement> quotient_point(const TorusSpec& t, const TorusAutomorphism& s, const Quotient& q) {
  auto c = lattice_coordinates(t, s.b);
  if (q.d == 0) return {};
  return lift(t.field, q.projection).apply(c);
}

// Rows that complete the saturated lattice with columns `basis` to a
// unimodular basis; they vanish on the lattice.
IntMatrix complement_rows(const IntMatrix& basis) {
  auto snf = smith_normal_form(basis);
  const std::size_t w = snf.rank();
  return snf.U.block(w, 0, basis.rows() - w, basis.rows());
}

}  // namespace

Matrix<FieldElement> TorusSpec::real_matrix() const {
  const std::size_t n = dim;
  Matrix<FieldElement> l(2 * n, 2 * n, FieldElement::zero(field));
  for (std::size_t j = 0; j < 2 * n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      l(i, j) = lattice[j][i].re;
      l(n + i, j) = lattice[j][i].im;
    }
  return l;
}

void TorusSpec::check() const {
  if (dim == 0) throw std::invalid_argument("torus dimension must be positive");
  if (!field) throw std::invalid_argument("torus without a field");
  if (!field->embedding(embedding).is_real) throw std::invalid_argument("torus embedding must be real");
  if (lattice.size() != 2 * dim) throw std::invalid_argument("lattice needs 2n generators");
  for (const auto& g : lattice) {
    if (g.size() != dim) throw std::invalid_argument("lattice generator has wrong length");
    for (const auto& c : g)
      if (!c.re.field()->same_as(*field) || !c.im.field()->same_as(*field))
        throw std::invalid_argument("lattice generator outside the torus field");
  }
  if (determinant(real_matrix()).is_zero()) throw std::invalid_argument("lattice generators are R-linearly dependent");
}

std::vector<FieldElement> lattice_coordinates(const TorusSpec& t, const ComplexVector& point) {
  if (point.size() != t.dim) throw std::invalid_argument("point has wrong dimension");
  auto sol = solve(t.real_matrix(), column(real_vector(point)));
  if (!sol) throw std::invalid_argument("lattice generators are R-linearly dependent");
  return sol->col(0);
}

IntMatrix lattice_action(const TorusSpec& t, const ComplexMatrix& a) {
  const std::size_t n = t.dim;
  if (a.rows() != n || a.cols() != n) throw std::invalid_argument("linear part has wrong shape");
  Matrix<FieldElement> images(2 * n, 2 * n, FieldElement::zero(t.field));
  for (std::size_t j = 0; j < 2 * n; ++j) {
    auto img = real_vector(a.apply(t.lattice[j]));
    for (std::size_t i = 0; i < 2 * n; ++i) images(i, j) = img[i];
  }
  auto sol = solve(t.real_matrix(), images);
  if (!sol) throw std::invalid_argument("lattice generators are R-linearly dependent");
  IntMatrix rho(2 * n, 2 * n, Integer(0));
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) {
      auto q = as_rational((*sol)(i, j));
      if (!q || q->get_den() != 1) throw std::invalid_argument("linear part does not preserve the lattice");
      rho(i, j) = q->get_num();
    }
  Integer d = det(rho);
  if (d != 1 && d != -1) throw std::invalid_argument("linear part is not invertible on the lattice");
  return rho;
}

TorusAutomorphism translation_normal_form(const TorusSpec& t, const ComplexMatrix& a, const ComplexVector& c) {
  if (c.size() != t.dim) throw std::invalid_argument("translation has wrong dimension");
  return TorusAutomorphism{a, c, lattice_action(t, a)};
}

TorusAutomorphism power(const TorusSpec& t, const TorusAutomorphism& s, unsigned m) {
  if (m == 0) throw std::invalid_argument("power exponent must be positive");
  TorusAutomorphism out = s;
  for (unsigned k = 1; k < m; ++k) {
    auto ab = s.A.apply(out.b);
    for (std::size_t i = 0; i < ab.size(); ++i) out.b[i] = ab[i] + s.b[i];
    out.A = s.A * out.A;
  }
  out.rho = lattice_action(t, out.A);
  return out;
}

std::optional<Integer> torsion_order(const TorusSpec& t, const ComplexVector& point) {
  Integer order = 1;
  for (const auto& c : lattice_coordinates(t, point)) {
    auto q = as_rational(c);
    if (!q) return std::nullopt;
    order = lcm(order, q->get_den());
  }
  return order;
}

std::string to_string(VerdictTag t) {
  switch (t) {
    case VerdictTag::Wild: return "Wild";
    case VerdictTag::NotWild: return "NotWild";
    case VerdictTag::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(TorusCertificate c) {
  switch (c) {
    case TorusCertificate::KroneckerIndependence: return "KroneckerIndependence";
    case TorusCertificate::TrivialQuotient: return "TrivialQuotient";
    case TorusCertificate::TorsionWitness: return "TorsionWitness";
    case TorusCertificate::SubtorusWitness: return "SubtorusWitness";
    case TorusCertificate::NonUnipotent: return "NonUnipotent";
    case TorusCertificate::SearchBound: return "SearchBound";
    case TorusCertificate::FullComplexClosure: return "FullComplexClosure";
  }
  return "SearchBound";
}

WildnessVerdict torus_wildness(const TorusSpec& t, const TorusAutomorphism& s, long height_bound) {
  WildnessVerdict v;
  v.height_bound = height_bound;
  if (!is_unipotent(s.rho)) {
    v.tag = VerdictTag::NotWild;
    v.certificate = TorusCertificate::NonUnipotent;
    return v;
  }
  Quotient q = quotient_by_image(s.rho);
  v.quotient_dim = q.d;
  v.quotient_projection = q.projection;
  if (q.d == 0) {
    v.tag = VerdictTag::Wild;
    v.certificate = TorusCertificate::TrivialQuotient;
    v.warnings.push_back("beta is surjective; X / beta(X) is a point");
    return v;
  }
  v.quotient_point = quotient_point(t, s, q);

  std::vector<FieldElement> with_one{FieldElement::one(t.field)};
  with_one.insert(with_one.end(), v.quotient_point.begin(), v.quotient_point.end());
  if (q_linear_rank(with_one) == q.d + 1) {
    v.tag = VerdictTag::Wild;
    v.certificate = TorusCertificate::KroneckerIndependence;
    return v;
  }

  std::vector<Rational> rational_part = component(v.quotient_point, 0);
  bool all_rational = std::all_of(v.quotient_point.begin(), v.quotient_point.end(),
                                  [](const FieldElement& e) { return as_rational(e).has_value(); });
  if (all_rational) {
    v.tag = VerdictTag::NotWild;
    v.certificate = TorusCertificate::TorsionWitness;
    v.order = denominator_lcm(rational_part);
    return v;
  }

  auto closure = complex_closure(v.quotient_point, quotient_complex_structure(t, q));
  if (closure.size() == q.d) {
    v.tag = VerdictTag::Wild;
    v.certificate = TorusCertificate::FullComplexClosure;
    return v;
  }
  // Saturated lattice of the closure: integer kernel of its annihilator.
  RatMatrix w(closure.size(), q.d, Rational(0));
  for (std::size_t i = 0; i < closure.size(); ++i)
    for (std::size_t j = 0; j < q.d; ++j) w(i, j) = closure[i][j];
  auto annihilator = nullspace(w, Rational(0), Rational(1));
  v.sublattice = integer_kernel(integral_rows(annihilator, q.d));
  IntMatrix comp = complement_rows(v.sublattice);
  v.order = denominator_lcm(to_rational(comp).apply(rational_part));
  v.tag = VerdictTag::NotWild;
  v.certificate = TorusCertificate::SubtorusWitness;
  return v;
}

bool check_certificate(const TorusSpec& t, const TorusAutomorphism& s, const WildnessVerdict& v) {
  switch (v.certificate) {
    case TorusCertificate::NonUnipotent:
      return v.tag == VerdictTag::NotWild && !is_unipotent(s.rho);
    case TorusCertificate::SearchBound:
      return v.tag == VerdictTag::Unknown;
    default:
      break;
  }
  if (!is_unipotent(s.rho)) return false;
  Quotient q = quotient_by_image(s.rho);
  if (q.d != v.quotient_dim || q.projection != v.quotient_projection) return false;
  if (v.certificate == TorusCertificate::TrivialQuotient) return v.tag == VerdictTag::Wild && q.d == 0;
  auto point = quotient_point(t, s, q);
  if (point != v.quotient_point) return false;
  switch (v.certificate) {
    case TorusCertificate::KroneckerIndependence: {
      std::vector<FieldElement> with_one{FieldElement::one(t.field)};
      with_one.insert(with_one.end(), point.begin(), point.end());
      return v.tag == VerdictTag::Wild && q_linear_rank(with_one) == q.d + 1;
    }
    case TorusCertificate::TorsionWitness: {
      if (v.tag != VerdictTag::NotWild || v.order < 1) return false;
      for (const auto& e : point) {
        auto r = as_rational(Rational(v.order) * e);
        if (!r || r->get_den() != 1) return false;
      }
      return true;
    }
    case TorusCertificate::SubtorusWitness: {
      if (v.tag != VerdictTag::NotWild || v.order < 1) return false;
      const std::size_t w = v.sublattice.cols();
      if (v.sublattice.rows() != q.d || w >= q.d) return false;
      auto lat = lift(t.field, v.sublattice);
      // Complex-structure invariance: rank [B | J'B] = rank B.
      auto jb = quotient_complex_structure(t, q) * lat;
      Matrix<FieldElement> both(q.d, 2 * w, FieldElement::zero(t.field));
      for (std::size_t i = 0; i < q.d; ++i)
        for (std::size_t j = 0; j < w; ++j) {
          both(i, j) = lat(i, j);
          both(i, w + j) = jb(i, j);
        }
      if (rank(lat) != w || rank(both) != w) return false;
      // k b̄ lies in the subtorus: its complementary coordinates are integers.
      auto comp = lift(t.field, complement_rows(v.sublattice));
      std::vector<FieldElement> scaled;
      for (const auto& e : point) scaled.push_back(Rational(v.order) * e);
      for (const auto& e : comp.apply(scaled)) {
        auto r = as_rational(e);
        if (!r || r->get_den() != 1) return false;
      }
      return true;
    }
    case TorusCertificate::FullComplexClosure: {
      auto closure = complex_closure(point, quotient_complex_structure(t, q));
      return v.tag == VerdictTag::Wild && closure.size() == q.d;
    }
    default:
      return false;
  }
}

DynamicalDegrees dynamical_degrees(const TorusSpec& t, const TorusAutomorphism& s, const Rational& max_width) {
  const std::size_t n = t.dim;
  DynamicalDegrees out;
  const Poly chi = char_poly(s.rho);
  out.zero_entropy = all_roots_on_unit_circle(chi);
  if (out.zero_entropy) {
    out.degrees.assign(n + 1, Interval::point(Rational(1)));
    return out;
  }
  const auto factors = squarefree_decomposition(chi);
  Rational radius = make_rational(1, Integer(1) << 48);
  for (int attempt = 0; attempt < 12; ++attempt, radius /= Integer(1) << 24) {
    std::vector<Interval> moduli;
    for (const auto& [f, mult] : factors) {
      for (const auto& disk : isolate_complex_roots(f, radius)) {
        Interval m = disk.modulus();
        if (disk.radius == 0 && disk.center.im == 0) m = Interval::point(abs(disk.center.re));
        for (unsigned e = 0; e < mult; ++e) moduli.push_back(m);
      }
    }
    std::vector<Rational> lows, highs;
    for (const auto& m : moduli) {
      lows.push_back(m.lo);
      highs.push_back(m.hi);
    }
    std::sort(lows.begin(), lows.end(), std::greater<>());
    std::sort(highs.begin(), highs.end(), std::greater<>());
    std::vector<Interval> degrees{Interval::point(Rational(1))};
    Rational lo = 1, hi = 1;
    bool narrow = true;
    for (std::size_t k = 1; k < n; ++k) {
      lo *= lows[2 * k - 2] * lows[2 * k - 1];
      hi *= highs[2 * k - 2] * highs[2 * k - 1];
      if (hi - lo > max_width) narrow = false;
      degrees.push_back({lo, hi});
    }
    degrees.push_back(Interval::point(Rational(1)));
    if (!narrow) continue;
    out.degrees = std::move(degrees);
    out.entropy_lo = 0;
    out.entropy_hi = 0;
    for (const auto& d : out.degrees) {
      double l = std::log(d.lo.get_d());
      double h = std::log(d.hi.get_d());
      out.entropy_lo = std::max(out.entropy_lo, std::nextafter(l, -std::numeric_limits<double>::infinity()));
      out.entropy_hi = std::max(out.entropy_hi, std::nextafter(h, std::numeric_limits<double>::infinity()));
    }
    return out;
  }
  throw std::runtime_error("could not enclose dynamical degrees to the requested width");
}

}  // namespace wildsurf
