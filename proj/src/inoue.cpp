#include "wildsurf/inoue.hpp"

#include <limits>

#include "wildsurf/linalg.hpp"
#include "wildsurf/units.hpp"

namespace wildsurf {

std::string to_string(InoueVariant v) {
  switch (v) {
    case InoueVariant::SM: return "SM";
    case InoueVariant::SMplus: return "SM+";
    case InoueVariant::SMminus: return "SM-";
  }
  return "SM";
}

InoueVariant parse_variant(const std::string& s) {
  if (s == "SM") return InoueVariant::SM;
  if (s == "SM+" || s == "SMplus") return InoueVariant::SMplus;
  if (s == "SM-" || s == "SMminus") return InoueVariant::SMminus;
  throw std::invalid_argument("unknown variant '" + s + "' (expected SM, SM+ or SM-)");
}

std::string to_string(ValidationCode c) {
  switch (c) {
    case ValidationCode::WrongShape: return "WrongShape";
    case ValidationCode::WrongDet: return "WrongDet";
    case ValidationCode::Reducible: return "Reducible";
    case ValidationCode::NoRealDominantRoot: return "NoRealDominantRoot";
    case ValidationCode::TraceTooSmall: return "TraceTooSmall";
  }
  return "WrongShape";
}

ValidationError::ValidationError(ValidationCode code, const std::string& detail)
    : std::invalid_argument(to_string(code) + ": " + detail), code_(code) {}

void validate(InoueVariant variant, const IntMatrix& m) {
  const std::size_t n = variant == InoueVariant::SM ? 3 : 2;
  if (m.rows() != n || m.cols() != n)
    throw ValidationError(ValidationCode::WrongShape, to_string(variant) + " needs a " + std::to_string(n) + "x" +
                                                          std::to_string(n) + " matrix");
  const Integer d = det(m);
  const Integer tr = trace(m);
  switch (variant) {
    case InoueVariant::SM: {
      if (d != 1) throw ValidationError(ValidationCode::WrongDet, "det M = " + to_string(d) + ", expected 1");
      const Poly p = char_poly(m);
      if (!is_irreducible(p)) throw ValidationError(ValidationCode::Reducible, "char poly " + p.to_string());
      FieldHandle k = make_field(p);
      if (k->num_real_embeddings() != 1)
        throw ValidationError(ValidationCode::NoRealDominantRoot, "M must have exactly one real eigenvalue");
      FieldElement x = FieldElement::generator(k);
      if (sign_at(x - FieldElement::one(k), 0) <= 0)
        throw ValidationError(ValidationCode::NoRealDominantRoot, "the real eigenvalue is not > 1");
      return;
    }
    case InoueVariant::SMplus:
      if (d != 1) throw ValidationError(ValidationCode::WrongDet, "det M = " + to_string(d) + ", expected 1");
      if (tr <= 2) throw ValidationError(ValidationCode::TraceTooSmall, "trace M = " + to_string(tr) + ", need > 2");
      return;
    case InoueVariant::SMminus:
      if (d != -1) throw ValidationError(ValidationCode::WrongDet, "det M = " + to_string(d) + ", expected -1");
      if (tr <= 0) throw ValidationError(ValidationCode::TraceTooSmall, "trace M = " + to_string(tr) + ", need > 0");
      return;
  }
}

std::vector<FieldElement> eigen_data(const IntMatrix& m, const FieldHandle& k) {
  const std::size_t n = m.rows();
  const FieldElement x = FieldElement::generator(k);
  Matrix<FieldElement> a(n, n, FieldElement::zero(k));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = FieldElement::from_rational(k, Rational(m(i, j)));
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i) - x;
  auto basis = nullspace(a, FieldElement::zero(k), FieldElement::one(k));
  if (basis.size() != 1) throw std::logic_error("eigenspace is not one-dimensional");
  auto v = basis.front();
  std::size_t lead = 0;
  while (v[lead].is_zero()) ++lead;
  const FieldElement inv = v[lead].inverse();
  for (auto& e : v) e = e * inv;
  return v;
}

std::vector<FieldElement> e_vector(const InoueSurfaceSpec& spec) {
  const auto& a = spec.a;
  const auto& b = spec.b;
  std::vector<FieldElement> e;
  for (std::size_t i = 0; i < 2; ++i) {
    const Rational m1(spec.M(i, 0));
    const Rational m2(spec.M(i, 1));
    const Rational c11 = m1 * (m1 - 1) / 2;
    const Rational c22 = m2 * (m2 - 1) / 2;
    const Rational c12 = m1 * m2;
    e.push_back(c11 * (a[0] * b[0]) + c22 * (a[1] * b[1]) + c12 * (b[0] * a[1]));
  }
  return e;
}

std::vector<ComplexElement> solve_c(const InoueSurfaceSpec& spec) {
  if (spec.variant == InoueVariant::SM) throw std::invalid_argument("solve_c applies to SM+ and SM- only");
  if (spec.r == 0) throw std::invalid_argument("r must be nonzero");
  const auto e = e_vector(spec);
  RatMatrix lhs(2, 2, Rational(0));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Rational id = i == j ? 1 : 0;
      Rational mij(spec.M(i, j));
      lhs(i, j) = spec.variant == InoueVariant::SMplus ? Rational(id - mij) : Rational(-(id + mij));
    }
  auto inv = inverse(lhs);
  if (!inv) throw std::logic_error("c-system is singular");
  std::vector<FieldElement> rhs;
  for (std::size_t i = 0; i < 2; ++i) rhs.push_back(e[i] + Rational(spec.p[i]) * spec.delta);
  std::vector<ComplexElement> c;
  for (std::size_t i = 0; i < 2; ++i)
    c.push_back(ComplexElement::real((*inv)(i, 0) * rhs[0] + (*inv)(i, 1) * rhs[1]));
  return c;
}

InoueSurfaceSpec build_spec(InoueVariant variant, const IntMatrix& m, const InoueParameters& params) {
  validate(variant, m);
  InoueSurfaceSpec s;
  s.variant = variant;
  s.M = m;
  s.field = make_field(char_poly(m));
  const FieldHandle& k = s.field;
  s.v = eigen_data(m, k);
  s.a = s.v;
  if (variant == InoueVariant::SM) {
    s.alpha_embedding = 0;
    for (std::size_t i = 0; i < k->degree(); ++i) {
      const auto& e = k->embedding(i);
      if (!e.is_real && e.disk.center.im > 0) s.z_embedding = i;
    }
    s.b = s.v;
    return s;
  }
  if (params.r == 0) throw std::invalid_argument("r must be nonzero");
  s.alpha_embedding = k->dominant_real_embedding();
  s.z_embedding = s.alpha_embedding;
  for (const auto& e : s.v) s.b.push_back(galois_conjugate(e));
  s.r = params.r;
  s.p = params.p;
  s.tau = {FieldElement::from_poly(k, params.tau_re), FieldElement::from_poly(k, params.tau_im)};
  s.delta = make_rational(1, s.r) * (s.b[0] * s.a[1] - s.b[1] * s.a[0]);
  if (s.delta.is_zero()) throw std::logic_error("delta vanishes");
  s.c = solve_c(s);
  return s;
}

AffineMap AffineMap::identity(const FieldHandle& k) {
  return {FieldElement::one(k), FieldElement::zero(k), ComplexElement::one(k), ComplexElement::zero(k),
          ComplexElement::zero(k)};
}

bool AffineMap::is_identity() const { return *this == identity(w_scale.field()); }

bool operator==(const AffineMap& a, const AffineMap& b) {
  return a.w_scale == b.w_scale && a.w_shift == b.w_shift && a.z_scale == b.z_scale && a.z_w_coeff == b.z_w_coeff &&
         a.z_shift == b.z_shift;
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  return {f.w_scale * g.w_scale,
          f.w_scale * g.w_shift + f.w_shift,
          f.z_scale * g.z_scale,
          f.z_scale * g.z_w_coeff + g.w_scale * f.z_w_coeff,
          f.z_scale * g.z_shift + g.w_shift * f.z_w_coeff + f.z_shift};
}

AffineMap AffineMap::inverse() const {
  const FieldElement s_inv = w_scale.inverse();
  const ComplexElement z_inv = z_scale.inverse();
  const ComplexElement c_over_s = s_inv * z_w_coeff;
  return {s_inv, -(s_inv * w_shift), z_inv, -(z_inv * c_over_s), z_inv * (w_shift * c_over_s - z_shift)};
}

AffineMap AffineMap::pow(long n) const {
  AffineMap base = n < 0 ? inverse() : *this;
  unsigned long e = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  AffineMap result = identity(w_scale.field());
  while (e) {
    if (e & 1UL) result = compose(result, base);
    e >>= 1UL;
    if (e) base = compose(base, base);
  }
  return result;
}

namespace {

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("exponent too large");
  return z.get_si();
}

bool is_sm(const InoueSurfaceSpec& s) { return s.variant == InoueVariant::SM; }

// Element g1^a1 g2^a2 g3^l of the Heisenberg-type group H(r), where
// g1 g2 = g2 g1 g3^r and g3 is central.
struct Heis {
  Integer a1 = 0, a2 = 0, l = 0;
};

Heis mul(const Heis& x, const Heis& y, const Integer& r) {
  return {x.a1 + y.a1, x.a2 + y.a2, x.l + y.l - r * x.a2 * y.a1};
}

Heis hpow(const Heis& x, const Integer& n, const Integer& r) {
  Integer tri = n * (n - 1) / 2;
  return {n * x.a1, n * x.a2, n * x.l - r * x.a1 * x.a2 * tri};
}

Integer epsilon(const InoueSurfaceSpec& s) { return s.variant == InoueVariant::SMplus ? 1 : -1; }

// h -> g0 h g0^{-1} from the images of the generators.
Heis apply_images(const InoueSurfaceSpec& s, const Heis& h, const Heis& img1, const Heis& img2) {
  Heis out = mul(hpow(img1, h.a1, s.r), hpow(img2, h.a2, s.r), s.r);
  out.l += epsilon(s) * h.l;
  return out;
}

Heis phi(const InoueSurfaceSpec& s, const Heis& h) {
  Heis g1{s.M(0, 0), s.M(0, 1), s.p[0]};
  Heis g2{s.M(1, 0), s.M(1, 1), s.p[1]};
  return apply_images(s, h, g1, g2);
}

Heis phi_inverse(const InoueSurfaceSpec& s, const Heis& h) {
  IntMatrix minv = *unimodular_inverse(s.M);
  Heis pre[2];
  for (std::size_t j = 0; j < 2; ++j) {
    Heis h0{minv(j, 0), minv(j, 1), 0};
    Heis image = phi(s, h0);
    pre[j] = {h0.a1, h0.a2, -epsilon(s) * image.l};
  }
  return apply_images(s, h, pre[0], pre[1]);
}

Heis phi_power(const InoueSurfaceSpec& s, Heis h, long k) {
  for (long i = 0; i < k; ++i) h = phi(s, h);
  for (long i = 0; i > k; --i) h = phi_inverse(s, h);
  return h;
}

Heis heis_inverse(const Heis& h, const Integer& r) { return hpow(h, Integer(-1), r); }

Heis to_heis(const GroupElement& e) { return {e.n[0], e.n[1], e.l}; }

GroupElement from_heis(const Heis& h, long k) { return {{h.a1, h.a2}, h.l, k}; }

std::vector<Integer> row_times(const std::vector<Integer>& n, const IntMatrix& m) {
  std::vector<Integer> out(m.cols(), Integer(0));
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < n.size(); ++i) out[j] += n[i] * m(i, j);
  return out;
}

void check_shape(const InoueSurfaceSpec& s, const GroupElement& e) {
  if (e.n.size() != (is_sm(s) ? 3u : 2u)) throw std::invalid_argument("group element does not match the variant");
  if (is_sm(s) && e.l != 0) throw std::invalid_argument("SM group elements carry no separate g3 exponent");
}

}  // namespace

GroupElement identity_element(const InoueSurfaceSpec& spec) {
  return {std::vector<Integer>(is_sm(spec) ? 3 : 2, Integer(0)), 0, 0};
}

GroupElement generator(const InoueSurfaceSpec& spec, int i) {
  GroupElement e = identity_element(spec);
  if (i == 0) e.k = 1;
  else if (i == 1 || i == 2) e.n[static_cast<std::size_t>(i - 1)] = 1;
  else if (i == 3 && is_sm(spec)) e.n[2] = 1;
  else if (i == 3) e.l = 1;
  else throw std::invalid_argument("generator index out of range");
  return e;
}

AffineMap generator_map(const InoueSurfaceSpec& s, int i) {
  const FieldHandle& k = s.field;
  AffineMap g = AffineMap::identity(k);
  const FieldElement x = FieldElement::generator(k);
  if (i == 0) {
    g.w_scale = x;
    if (is_sm(s)) g.z_scale = ComplexElement::real(x);
    else if (s.variant == InoueVariant::SMplus) g.z_shift = s.tau;
    else g.z_scale = -ComplexElement::one(k);
    return g;
  }
  if (i < 1 || i > 3) throw std::invalid_argument("generator index out of range");
  const std::size_t j = static_cast<std::size_t>(i - 1);
  if (is_sm(s)) {
    g.w_shift = s.v[j];
    g.z_shift = ComplexElement::real(s.v[j]);
    return g;
  }
  if (i == 3) {
    g.z_shift = ComplexElement::real(s.delta);
    return g;
  }
  g.w_shift = s.a[j];
  g.z_w_coeff = ComplexElement::real(s.b[j]);
  g.z_shift = s.c[j];
  return g;
}

AffineMap as_affine_map(const InoueSurfaceSpec& s, const GroupElement& e) {
  check_shape(s, e);
  AffineMap out = generator_map(s, 1).pow(to_long(e.n[0]));
  out = compose(out, generator_map(s, 2).pow(to_long(e.n[1])));
  out = compose(out, generator_map(s, 3).pow(to_long(is_sm(s) ? e.n[2] : e.l)));
  return compose(out, generator_map(s, 0).pow(e.k));
}

GroupElement compose(const InoueSurfaceSpec& s, const GroupElement& e1, const GroupElement& e2) {
  check_shape(s, e1);
  check_shape(s, e2);
  if (is_sm(s)) {
    auto twisted = row_times(e2.n, power(s.M, e1.k));
    GroupElement out = e1;
    for (std::size_t i = 0; i < 3; ++i) out.n[i] += twisted[i];
    out.k += e2.k;
    return out;
  }
  Heis h = mul(to_heis(e1), phi_power(s, to_heis(e2), e1.k), s.r);
  return from_heis(h, e1.k + e2.k);
}

GroupElement inverse(const InoueSurfaceSpec& s, const GroupElement& e) {
  check_shape(s, e);
  if (is_sm(s)) {
    auto n = row_times(e.n, power(s.M, -e.k));
    for (auto& v : n) v = -v;
    return {n, 0, -e.k};
  }
  return from_heis(phi_power(s, heis_inverse(to_heis(e), s.r), -e.k), -e.k);
}

std::vector<RelationCheck> verify_relations(const InoueSurfaceSpec& s) {
  std::vector<RelationCheck> out;
  auto g = [&](int i) { return generator_map(s, i); };
  auto check = [&](std::string id, const AffineMap& lhs, const AffineMap& rhs) {
    AffineMap residue = compose(lhs, rhs.inverse());
    out.push_back({std::move(id), residue.is_identity(), residue});
  };
  auto conj0 = [&](const AffineMap& h) { return compose(compose(g(0), h), g(0).inverse()); };
  auto word = [&](long n1, long n2, long n3) {
    return compose(compose(g(1).pow(n1), g(2).pow(n2)), g(3).pow(n3));
  };
  auto name = [](const std::string& base, const Integer& e) { return base + "^" + to_string(e); };
  if (is_sm(s)) {
    for (int i = 1; i <= 3; ++i) {
      const std::size_t r = static_cast<std::size_t>(i - 1);
      std::string id = "g0 g" + std::to_string(i) + " g0^-1 = " + name("g1", s.M(r, 0)) + " " + name("g2", s.M(r, 1)) +
                       " " + name("g3", s.M(r, 2));
      check(id, conj0(g(i)), word(to_long(s.M(r, 0)), to_long(s.M(r, 1)), to_long(s.M(r, 2))));
    }
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j)
        check("g" + std::to_string(i) + " g" + std::to_string(j) + " = g" + std::to_string(j) + " g" + std::to_string(i),
              compose(g(i), g(j)), compose(g(j), g(i)));
    return out;
  }
  check("g1^-1 g2^-1 g1 g2 = " + name("g3", s.r),
        compose(compose(g(1).inverse(), g(2).inverse()), compose(g(1), g(2))), g(3).pow(to_long(s.r)));
  check("g1 g3 = g3 g1", compose(g(1), g(3)), compose(g(3), g(1)));
  check("g2 g3 = g3 g2", compose(g(2), g(3)), compose(g(3), g(2)));
  for (int j = 1; j <= 2; ++j) {
    const std::size_t r = static_cast<std::size_t>(j - 1);
    std::string id = "g0 g" + std::to_string(j) + " g0^-1 = " + name("g1", s.M(r, 0)) + " " + name("g2", s.M(r, 1)) +
                     " " + name("g3", s.p[r]);
    check(id, conj0(g(j)), word(to_long(s.M(r, 0)), to_long(s.M(r, 1)), to_long(s.p[r])));
  }
  if (s.variant == InoueVariant::SMplus) check("g0 g3 g0^-1 = g3", conj0(g(3)), g(3));
  else check("g0 g3 g0^-1 = g3^-1", conj0(g(3)), g(3).inverse());
  return out;
}

AutReport aut_report(const InoueSurfaceSpec& s, long coeff_bound) {
  AutReport rep;
  rep.variant = s.variant;
  const IntMatrix id = int_identity(s.M.rows());
  rep.coker = cokernel_invariants(id - s.M);
  rep.det_i_minus_m = det(id - s.M);
  rep.det_i_plus_m = det(id + s.M);
  rep.coeff_bound = coeff_bound;
  rep.commutant_quotient_order = commutant_quotient_order(s.M, coeff_bound);
  rep.classification =
      s.variant == InoueVariant::SMplus ? "Aut₀(X) ≅ C*, finite component group" : "Aut(X) finite";
  return rep;
}

}  // namespace wildsurf
