#include "wildsurf/poly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wildsurf {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::from_integers(const std::vector<long>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool Poly::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

Rational Poly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rational lc = leading();
  std::vector<Rational> c = coeffs_;
  for (auto& q : c) q /= lc;
  return Poly(std::move(c));
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  Integer den = 1;
  for (const auto& q : coeffs_) den = lcm(den, q.get_den());
  Integer content = 0;
  for (const auto& q : coeffs_) content = gcd(content, Integer(q * den));
  std::vector<Rational> c;
  for (const auto& q : coeffs_) c.emplace_back(Integer(q * den) / content);
  if (c.back() < 0)
    for (auto& q : c) q = -q;
  return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a) {
  std::vector<Rational> c = a.coeffs_;
  for (auto& q : c) q = -q;
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(c));
}

Poly operator*(const Rational& s, const Poly& a) {
  std::vector<Rational> c = a.coeffs_;
  for (auto& q : c) q *= s;
  return Poly(std::move(c));
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += (c < 0) ? " - " : " + ";
    }
    bool unit = (mag == 1);
    if (!unit || k == 0) s += wildsurf::to_string(mag);
    if (k >= 1) s += var;
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  const Rational lb = b.leading();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  for (int k = a.degree(); k >= db; --k) {
    const Rational coef = r[static_cast<std::size_t>(k)] / lb;
    q[static_cast<std::size_t>(k - db)] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= coef * b.coeff(static_cast<std::size_t>(j));
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::pair<Poly, Poly> gcd_cofactor(const Poly& a, const Poly& m) {
  Poly r0 = m, r1 = a % m;
  Poly s0, s1 = Poly::constant(Rational(1));
  if (r1.is_zero()) return {m.monic(), Poly()};
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  Rational lc = r0.leading();
  Rational inv = 1 / lc;
  return {inv * r0, inv * s0};
}

Poly pow(const Poly& a, unsigned k) {
  Poly result = Poly::constant(Rational(1));
  Poly base = a;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f) {
  if (f.degree() < 1) return {};
  std::vector<std::pair<Poly, unsigned>> out;
  Poly fm = f.monic();
  Poly a0 = gcd(fm, fm.derivative());
  Poly b = divmod(fm, a0).first;
  Poly c = divmod(fm.derivative(), a0).first;
  Poly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    Poly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

Poly char_poly(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("char_poly: matrix is not square");
  const std::size_t n = a.rows();
  RatMatrix A = to_rational(a);
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RatMatrix Mk(n, n, Rational(0));
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix next = (k == 1) ? RatMatrix(n, n, Rational(0)) : A * Mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    Mk = std::move(next);
    RatMatrix AM = A * Mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return Poly(std::move(c));
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      small.push_back(d);
      Integer e = n / d;
      if (e != d) large.push_back(e);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Divides out (t - r) as often as it divides f; returns the multiplicity.
unsigned strip_root(Poly& f, const Rational& r) {
  unsigned mult = 0;
  const Poly lin(std::vector<Rational>{-r, Rational(1)});
  while (f.degree() >= 1 && f.eval(r) == 0) {
    f = divmod(f, lin).first;
    ++mult;
  }
  return mult;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& f, bool monic_unit_constant) {
  if (f.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  if (!f.has_integer_coeffs()) throw std::invalid_argument("rational_roots: coefficients must be integers");
  std::vector<Rational> roots;
  Poly g = f;
  auto emit = [&](const Rational& r) {
    unsigned m = strip_root(g, r);
    roots.insert(roots.end(), m, r);
  };
  if (monic_unit_constant) {
    if (!f.is_monic() || abs(f.coeff(0)) != 1)
      throw std::invalid_argument("rational_roots: polynomial is not monic with unit constant term");
    emit(Rational(1));
    emit(Rational(-1));
    return roots;
  }
  emit(Rational(0));
  if (g.degree() < 1) return roots;
  const Integer a0 = g.coeff(0).get_num();
  const Integer an = g.leading().get_num();
  std::set<Rational> candidates;
  for (const auto& p : positive_divisors(a0))
    for (const auto& q : positive_divisors(an)) candidates.insert(make_rational(p, q));
  for (const auto& c : candidates) {
    if (g.degree() < 1) break;
    emit(c);
    emit(-c);
  }
  return roots;
}

unsigned euler_totient(unsigned m) {
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

int moebius(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

// Phi_m = prod_{d | m} (x^d - 1)^mu(m/d). Multiplying by x^d - 1 is a shift
// and subtract, dividing by it the recurrence q_i = a_{i+d} + q_{i+d}.
std::vector<Integer> cyclotomic_coeffs(unsigned m) {
  std::vector<Integer> c{Integer(1)};
  std::vector<unsigned> divide;
  for (unsigned d = 1; d <= m; ++d) {
    if (m % d) continue;
    const int mu = moebius(m / d);
    if (mu == 1) {
      std::vector<Integer> next(c.size() + d);
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + d] += c[i];
        next[i] -= c[i];
      }
      c = std::move(next);
    } else if (mu == -1) {
      divide.push_back(d);
    }
  }
  for (unsigned d : divide) {
    const std::size_t n = c.size() - 1;  // degree
    std::vector<Integer> q(n - d + 1);
    // a = (x^d - 1) q: a_i = q_{i-d} - q_i, solved from the top down.
    for (std::size_t i = n - d + 1; i-- > 0;) q[i] = (i + d <= n - d ? q[i + d] : Integer(0)) + c[i + d];
    c = std::move(q);
  }
  return c;
}

Poly from_integer_coeffs(const std::vector<Integer>& c) {
  std::vector<Rational> r(c.begin(), c.end());
  return Poly(std::move(r));
}

}  // namespace

Poly cyclotomic(unsigned m) {
  if (m == 0) throw std::invalid_argument("cyclotomic: index must be positive");
  return from_integer_coeffs(cyclotomic_coeffs(m));
}

bool all_roots_on_unit_circle(const Poly& f) {
  if (!f.is_monic() || !f.has_integer_coeffs())
    throw std::invalid_argument("all_roots_on_unit_circle: polynomial must be monic with integer coefficients");
  const unsigned deg = static_cast<unsigned>(f.degree());
  if (deg == 0) return true;
  // totient(m) >= sqrt(m / 2), so totient(m) <= deg forces m <= 2 deg^2.
  const unsigned bound = 2 * deg * deg + 2;
  Poly g = f;
  for (unsigned m = 1; m <= bound && g.degree() > 0; ++m) {
    if (euler_totient(m) > static_cast<unsigned>(g.degree())) continue;
    const Poly phi = cyclotomic(m);
    for (;;) {
      auto [q, r] = divmod(g, phi);
      if (!r.is_zero()) break;
      g = std::move(q);
    }
  }
  return g == Poly::constant(Rational(1));
}

}  // namespace wildsurf
