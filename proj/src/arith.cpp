#include "wildsurf/arith.hpp"

#include <stdexcept>

namespace wildsurf {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    auto b = t.find_first_not_of(" \t");
    auto e = t.find_last_not_of(" \t");
    t = (b == std::string::npos) ? std::string() : t.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  auto parse_int = [](std::string t) {
    auto b = t.find_first_not_of(" \t");
    auto e = t.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty integer");
    t = t.substr(b, e - b + 1);
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    Integer z;
    if (t.empty() || z.set_str(t, 10) != 0) throw std::invalid_argument("malformed integer '" + t + "'");
    return z;
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  return make_rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

int sign(const Rational& q) { return sgn(q); }
int sign(const Integer& z) { return sgn(z); }

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

long log2_floor(const Rational& q) {
  if (q == 0) throw std::domain_error("log2 of zero");
  Integer n = abs(q.get_num());
  const Integer& d = q.get_den();
  long k = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
  // 2^k <= n/d < 2^(k+2) at this point; settle the exact floor.
  auto ge_pow = [&](long e) {
    Integer lhs = n, rhs = d;
    if (e >= 0) mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    else mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    return lhs >= rhs;
  };
  while (!ge_pow(k)) --k;
  while (ge_pow(k + 1)) ++k;
  return k;
}

Rational round_dyadic(const Rational& q, unsigned bits) {
  Integer scaled_num = q.get_num();
  mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), bits);
  // floor(q * 2^bits + 1/2)
  Integer twice = 2 * scaled_num + q.get_den();
  Integer r = floor_div(twice, 2 * q.get_den());
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  return make_rational(r, den);
}

namespace {

// floor(sqrt(q) * 2^bits) for q >= 0.
Integer scaled_isqrt(const Rational& q, unsigned long bits) {
  Integer num = q.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 2 * bits);
  Integer f = floor_div(num, q.get_den());
  Integer s;
  mpz_sqrt(s.get_mpz_t(), f.get_mpz_t());
  return s;
}

unsigned long sqrt_bits(const Rational& q) {
  long lg = log2_floor(q);
  return static_cast<unsigned long>(100 + (lg < 0 ? -lg : 0));
}

}  // namespace

Rational sqrt_upper(const Rational& q) {
  if (q < 0) throw std::domain_error("sqrt of negative rational");
  if (q == 0) return Rational(0);
  auto bits = sqrt_bits(q);
  Integer s = scaled_isqrt(q, bits) + 1;
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  return make_rational(s, den);
}

Rational sqrt_lower(const Rational& q) {
  if (q < 0) throw std::domain_error("sqrt of negative rational");
  if (q == 0) return Rational(0);
  auto bits = sqrt_bits(q);
  Integer s = scaled_isqrt(q, bits);
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  return make_rational(s, den);
}

}  // namespace wildsurf
