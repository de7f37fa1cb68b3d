#include "wildsurf/number_field.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "wildsurf/linalg.hpp"

namespace wildsurf {

namespace {

const Rational& embedding_precision() {
  static const Rational eps = make_rational(1, Integer(1) << 64);
  return eps;
}

std::vector<Embedding> compute_embeddings(const Poly& p) {
  std::vector<Embedding> out;
  const std::size_t n = static_cast<std::size_t>(p.degree());
  for (const auto& iv : isolate_real_roots(p)) {
    Embedding e;
    e.is_real = true;
    e.interval = refine_real_root(p, iv, embedding_precision());
    e.disk = ComplexDisk{{e.interval.mid(), Rational(0)}, e.interval.width() / 2};
    out.push_back(std::move(e));
  }
  const std::size_t n_real = out.size();
  Rational max_radius = embedding_precision();
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Embedding> complex;
    for (const auto& d : isolate_complex_roots(p, max_radius)) {
      if (d.meets_real_axis()) continue;
      Embedding e;
      e.is_real = false;
      e.disk = d;
      complex.push_back(std::move(e));
    }
    if (complex.size() == n - n_real) {
      out.insert(out.end(), complex.begin(), complex.end());
      return out;
    }
    max_radius /= Integer(1) << 32;
  }
  throw std::runtime_error("could not separate complex roots of " + p.to_string());
}

}  // namespace

NumberField::NumberField(Poly p, std::vector<Embedding> embeddings)
    : poly_(std::move(p)), degree_(static_cast<std::size_t>(poly_.degree())), embeddings_(std::move(embeddings)) {
  const std::size_t d = degree_;
  powers_.resize(2 * d - 1);
  for (std::size_t k = 0; k < 2 * d - 1; ++k) {
    Poly r = Poly::monomial(Rational(1), k) % poly_;
    std::vector<Rational> c(d, Rational(0));
    for (std::size_t j = 0; j < d; ++j) c[j] = r.coeff(j);
    powers_[k] = std::move(c);
  }
}

const Embedding& NumberField::embedding(std::size_t i) const {
  if (i >= embeddings_.size()) throw std::out_of_range("embedding index out of range");
  return embeddings_[i];
}

std::size_t NumberField::num_real_embeddings() const {
  return static_cast<std::size_t>(
      std::count_if(embeddings_.begin(), embeddings_.end(), [](const Embedding& e) { return e.is_real; }));
}

std::size_t NumberField::dominant_real_embedding() const {
  std::size_t r = num_real_embeddings();
  if (r == 0) throw std::invalid_argument("field has no real embedding");
  return r - 1;
}

bool is_irreducible(const Poly& p) {
  if (p.degree() < 1) return false;
  if (p.degree() == 1) return true;
  if (gcd(p, p.derivative()).degree() > 0) return false;
  if (!rational_roots(p.primitive()).empty()) return false;
  const int n = p.degree();
  if (n <= 3) return true;
  auto disks = isolate_complex_roots(p, make_rational(1, Integer(1) << 80));
  std::vector<std::complex<long double>> z;
  for (const auto& d : disks) z.emplace_back(d.center.re.get_d(), d.center.im.get_d());
  const Poly monic = p.monic();
  for (int s = 2; s <= n / 2; ++s) {
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + s, true);
    do {
      std::vector<std::complex<long double>> c{1.0L};
      for (int i = 0; i < n; ++i) {
        if (!pick[static_cast<std::size_t>(i)]) continue;
        std::vector<std::complex<long double>> next(c.size() + 1, 0.0L);
        for (std::size_t k = 0; k < c.size(); ++k) {
          next[k + 1] += c[k];
          next[k] -= c[k] * z[static_cast<std::size_t>(i)];
        }
        c = std::move(next);
      }
      bool integral = true;
      std::vector<Rational> coeffs;
      for (const auto& ck : c) {
        long double r = std::round(ck.real());
        if (std::abs(ck.imag()) > 1e-6L || std::abs(ck.real() - r) > 1e-6L) {
          integral = false;
          break;
        }
        coeffs.emplace_back(static_cast<long>(r));
      }
      if (integral && (monic % Poly(coeffs)).is_zero()) return false;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return true;
}

FieldHandle make_field(const Poly& p) {
  if (!p.is_monic() || !p.has_integer_coeffs())
    throw std::invalid_argument("defining polynomial must be monic with integer coefficients");
  if (p.degree() < 2 || p.degree() > 6) throw std::invalid_argument("field degree out of range 2..6");
  if (!is_irreducible(p)) throw std::invalid_argument("reducible polynomial " + p.to_string());
  return FieldHandle(new NumberField(p, compute_embeddings(p)));
}

FieldHandle rational_field() {
  static const FieldHandle q = [] {
    Embedding e;
    e.is_real = true;
    e.interval = Interval::point(Rational(0));
    e.disk = ComplexDisk{{Rational(0), Rational(0)}, Rational(0)};
    return FieldHandle(new NumberField(Poly::x(), {e}));
  }();
  return q;
}

FieldElement::FieldElement(FieldHandle field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) throw std::invalid_argument("field element without a field");
  if (coords_.size() != field_->degree()) throw std::invalid_argument("coordinate count does not match field degree");
}

FieldElement FieldElement::zero(const FieldHandle& f) {
  return FieldElement(f, std::vector<Rational>(f->degree(), Rational(0)));
}

FieldElement FieldElement::one(const FieldHandle& f) { return from_rational(f, Rational(1)); }

FieldElement FieldElement::generator(const FieldHandle& f) { return from_poly(f, Poly::x()); }

FieldElement FieldElement::from_rational(const FieldHandle& f, const Rational& q) {
  FieldElement e = zero(f);
  e.coords_[0] = q;
  return e;
}

FieldElement FieldElement::from_poly(const FieldHandle& f, const Poly& q) {
  Poly r = q % f->defining_poly();
  std::vector<Rational> c(f->degree(), Rational(0));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = r.coeff(k);
  return FieldElement(f, std::move(c));
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field() || !b.field() || !a.field()->same_as(*b.field()))
    throw std::invalid_argument("field mismatch");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  FieldElement c = a;
  for (std::size_t k = 0; k < c.coords_.size(); ++k) c.coords_[k] += b.coords_[k];
  return c;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  FieldElement c = a;
  for (std::size_t k = 0; k < c.coords_.size(); ++k) c.coords_[k] -= b.coords_[k];
  return c;
}

FieldElement operator-(const FieldElement& a) {
  FieldElement c = a;
  for (auto& q : c.coords_) q = -q;
  return c;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  const NumberField& f = *a.field_;
  const std::size_t d = f.degree();
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coords_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] += a.coords_[i] * b.coords_[j];
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d));
  for (std::size_t k = d; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const auto& xk = f.power_of_generator(k);
    for (std::size_t j = 0; j < d; ++j) out[j] += prod[k] * xk[j];
  }
  return FieldElement(a.field_, std::move(out));
}

FieldElement operator*(const Rational& q, const FieldElement& a) {
  FieldElement c = a;
  for (auto& v : c.coords_) v *= q;
  return c;
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a.coords_ == b.coords_;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inversion of zero in a number field");
  auto [g, s] = gcd_cofactor(as_poly(), field_->defining_poly());
  if (g.degree() != 0) throw std::domain_error("element is not invertible");
  return from_poly(field_, s);
}

FieldElement FieldElement::pow(long k) const {
  FieldElement base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  FieldElement result = one(field_);
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

std::string FieldElement::to_string() const { return as_poly().to_string('x'); }

int sign_at(const FieldElement& a, std::size_t embedding) {
  const NumberField& f = *a.field();
  const Embedding& e = f.embedding(embedding);
  if (!e.is_real) throw std::invalid_argument("sign requested at a complex embedding");
  if (a.is_zero()) return 0;
  const Poly ap = a.as_poly();
  Interval root = e.interval;
  if (root.lo == root.hi) return sgn(ap.eval(root.lo));
  for (;;) {
    int s = eval(ap, root).strict_sign();
    if (s != 0) return s;
    root = refine_real_root(f.defining_poly(), root, root.width() / 2);
    if (root.lo == root.hi) return sgn(ap.eval(root.lo));
  }
}

Interval enclose(const FieldElement& a, std::size_t embedding, const Rational& max_width) {
  const NumberField& f = *a.field();
  const Embedding& e = f.embedding(embedding);
  if (!e.is_real) throw std::invalid_argument("enclosure requested at a complex embedding");
  const Poly ap = a.as_poly();
  Interval root = e.interval;
  for (;;) {
    Interval v = eval(ap, root);
    if (v.width() <= max_width) return v;
    root = refine_real_root(f.defining_poly(), root, root.width() / 2);
  }
}

std::complex<double> approx(const FieldElement& a, std::size_t embedding) {
  const Embedding& e = a.field()->embedding(embedding);
  GaussRat v = eval(a.as_poly(), e.disk.center);
  return v.to_complex();
}

std::optional<Rational> as_rational(const FieldElement& a) {
  const auto& c = a.coords();
  for (std::size_t k = 1; k < c.size(); ++k)
    if (c[k] != 0) return std::nullopt;
  return c.empty() ? Rational(0) : c[0];
}

std::size_t q_linear_rank(const std::vector<FieldElement>& elems) {
  if (elems.empty()) return 0;
  for (const auto& e : elems) require_same_field(elems.front(), e);
  const std::size_t d = elems.front().field()->degree();
  RatMatrix m(elems.size(), d, Rational(0));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = elems[i].coords()[j];
  return rank(m);
}

FieldElement galois_conjugate(const FieldElement& a) {
  const NumberField& f = *a.field();
  if (f.degree() != 2) throw std::invalid_argument("galois_conjugate: field is not quadratic");
  // x -> -p1 - x for p = x^2 + p1 x + p0.
  const Rational p1 = f.defining_poly().coeff(1);
  const auto& c = a.coords();
  return FieldElement(a.field(), {c[0] - c[1] * p1, -c[1]});
}

ComplexElement ComplexElement::zero(const FieldHandle& f) { return {FieldElement::zero(f), FieldElement::zero(f)}; }
ComplexElement ComplexElement::one(const FieldHandle& f) { return {FieldElement::one(f), FieldElement::zero(f)}; }
ComplexElement ComplexElement::real(const FieldElement& a) { return {a, FieldElement::zero(a.field())}; }

ComplexElement ComplexElement::inverse() const {
  FieldElement n = norm();
  if (n.is_zero()) throw std::domain_error("inversion of zero complex element");
  FieldElement inv = n.inverse();
  return {re * inv, -(im * inv)};
}

ComplexElement operator+(const ComplexElement& a, const ComplexElement& b) { return {a.re + b.re, a.im + b.im}; }
ComplexElement operator-(const ComplexElement& a, const ComplexElement& b) { return {a.re - b.re, a.im - b.im}; }
ComplexElement operator-(const ComplexElement& a) { return {-a.re, -a.im}; }
ComplexElement operator*(const ComplexElement& a, const ComplexElement& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
ComplexElement operator*(const FieldElement& s, const ComplexElement& a) { return {s * a.re, s * a.im}; }
ComplexElement operator*(const Rational& q, const ComplexElement& a) { return {q * a.re, q * a.im}; }
ComplexElement operator/(const ComplexElement& a, const ComplexElement& b) { return a * b.inverse(); }

std::complex<double> approx(const ComplexElement& a, std::size_t embedding) {
  return approx(a.re, embedding) + std::complex<double>(0, 1) * approx(a.im, embedding);
}

}  // namespace wildsurf
