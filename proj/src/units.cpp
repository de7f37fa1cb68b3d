#include "wildsurf/units.hpp"

#include <stdexcept>

#include "wildsurf/poly.hpp"

namespace wildsurf {

namespace {

std::vector<IntMatrix> matrix_powers(const IntMatrix& m, std::size_t count) {
  std::vector<IntMatrix> out{int_identity(m.rows())};
  for (std::size_t i = 1; i < count; ++i) out.push_back(out.back() * m);
  return out;
}

// Positive, and >= 1 at the embedding.
FieldElement normalize_unit(FieldElement u, std::size_t emb) {
  if (sign_at(u, emb) < 0) u = -u;
  if (sign_at(u - FieldElement::one(u.field()), emb) < 0) u = u.inverse();
  return u;
}

}  // namespace

IntMatrix OrderData::expand(const std::vector<Rational>& power_coords) const {
  const std::size_t d = degree();
  auto pw = matrix_powers(ambient, d);
  RatMatrix sum(d, d, Rational(0));
  for (std::size_t i = 0; i < d; ++i)
    if (power_coords[i] != 0) sum = sum + power_coords[i] * to_rational(pw[i]);
  auto out = to_integer(sum);
  if (!out) throw std::invalid_argument("element is not in the order");
  return *out;
}

std::vector<Rational> OrderData::combine(const std::vector<Integer>& order_coords) const {
  const std::size_t d = degree();
  std::vector<Rational> q(d, Rational(0));
  for (std::size_t j = 0; j < basis.rows(); ++j) {
    if (order_coords[j] == 0) continue;
    for (std::size_t i = 0; i < d; ++i) q[i] += Rational(order_coords[j]) * basis(j, i);
  }
  return q;
}

FieldHandle commutant_field(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("matrix is not square");
  return make_field(char_poly(m));
}

OrderData matrix_order(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("matrix is not square");
  const Poly p = char_poly(m);
  if (!is_irreducible(p)) throw std::invalid_argument("reducible characteristic polynomial");
  const std::size_t d = m.rows();
  // T maps power coordinates q to vec(sum q_i M^i). In Smith coordinates
  // y = V^{-1} q the integrality condition reads D_ii y_i in Z.
  auto pw = matrix_powers(m, d);
  IntMatrix t(d * d, d, Integer(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) t(r * d + c, i) = pw[i](r, c);
  auto snf = smith_normal_form(t);
  Integer common = 1;
  for (std::size_t i = 0; i < d; ++i) common = lcm(common, snf.D(i, i));
  IntMatrix scaled(d, d, Integer(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t r = 0; r < d; ++r) scaled(i, r) = snf.V(r, i) * (common / snf.D(i, i));
  IntMatrix h = hermite_normal_form(scaled);
  RatMatrix basis(d, d, Rational(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) basis(i, j) = make_rational(h(i, j), common);
  return OrderData{m, basis};
}

UnitGroupData unit_group(const IntMatrix& m, long coeff_bound) {
  if (coeff_bound < 1) throw std::invalid_argument("coeff_bound must be >= 1");
  OrderData order = matrix_order(m);
  FieldHandle k = commutant_field(m);
  const std::size_t r1 = k->num_real_embeddings();
  const std::size_t r2 = k->num_complex_pairs();
  if (r1 == 0 || r1 + r2 != 2)
    throw std::invalid_argument("unit rank is not 1 for this signature");
  const std::size_t emb = k->dominant_real_embedding();
  const std::size_t d = order.degree();

  UnitGroupData out;
  out.field = k;
  out.coeff_bound = coeff_bound;

  std::vector<IntMatrix> basis_mats;
  for (std::size_t j = 0; j < d; ++j) basis_mats.push_back(order.expand(order.basis.row(j)));

  std::vector<Integer> c(d, Integer(-coeff_bound));
  const FieldElement one = FieldElement::one(k);
  std::optional<FieldElement> best;
  for (;;) {
    IntMatrix e(d, d, Integer(0));
    for (std::size_t j = 0; j < d; ++j)
      if (c[j] != 0) e = e + c[j] * basis_mats[j];
    Integer n = det(e);
    if (n == 1 || n == -1) {
      FieldElement u(k, order.combine(c));
      if (u != one && u != -one) {
        u = normalize_unit(u, emb);
        if (!best || sign_at(u - *best, emb) < 0) best = u;
      }
    }
    std::size_t j = 0;
    while (j < d && c[j] == coeff_bound) c[j++] = -coeff_bound;
    if (j == d) break;
    ++c[j];
  }
  if (best) {
    out.fundamental_unit = best;
    out.fundamental_unit_matrix = order.expand(best->coords());
  }
  return out;
}

std::optional<long> unit_exponent(const UnitGroupData& units) {
  if (!units.fundamental_unit) return std::nullopt;
  const FieldHandle& k = units.field;
  const std::size_t emb = k->dominant_real_embedding();
  const FieldElement target = normalize_unit(FieldElement::generator(k), emb);
  const FieldElement& u = *units.fundamental_unit;
  FieldElement acc = u;
  for (long e = 1; e <= 4096; ++e) {
    if (acc == target) return e;
    if (sign_at(acc - target, emb) > 0) return std::nullopt;
    acc = acc * u;
  }
  return std::nullopt;
}

std::optional<Integer> commutant_quotient_order(const IntMatrix& m, long coeff_bound) {
  if (!m.is_square()) throw std::invalid_argument("matrix is not square");
  Integer d = det(m);
  if (d != 1 && d != -1) throw std::invalid_argument("M is not invertible over Z (|det M| != 1)");
  UnitGroupData units = unit_group(m, coeff_bound);
  auto e = unit_exponent(units);
  if (!e) return std::nullopt;
  return Integer(static_cast<long>(units.torsion_order)) * Integer(*e);
}

}  // namespace wildsurf
