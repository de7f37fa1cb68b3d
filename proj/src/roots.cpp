#include "wildsurf/roots.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>
#include <stdexcept>

namespace wildsurf {

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval hull(const Interval& a, const Interval& b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

Interval eval(const Poly& p, const Interval& x) {
  Interval acc = Interval::point(Rational(0));
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Interval::point(*it);
  return acc;
}

GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
GaussRat operator*(const GaussRat& a, const GaussRat& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
GaussRat operator/(const GaussRat& a, const GaussRat& b) {
  Rational n = b.norm();
  if (n == 0) throw std::domain_error("Gaussian rational division by zero");
  GaussRat t = a * b.conj();
  return {t.re / n, t.im / n};
}

GaussRat eval(const Poly& p, const GaussRat& z) {
  GaussRat acc{Rational(0), Rational(0)};
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * z;
    acc.re += *it;
  }
  return acc;
}

Interval ComplexDisk::modulus() const {
  Rational n = center.norm();
  Rational lo = sqrt_lower(n) - radius;
  if (lo < 0) lo = 0;
  return {lo, sqrt_upper(n) + radius};
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    Poly r = -(chain[chain.size() - 2] % chain.back());
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

namespace {

int sign_variations(const std::vector<Poly>& chain, const Rational& t) {
  int count = 0;
  int last = 0;
  for (const auto& q : chain) {
    int s = sgn(q.eval(t));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int count_real_roots(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

Rational root_bound(const Poly& p) {
  if (p.degree() < 1) throw std::invalid_argument("root_bound: constant polynomial");
  Rational m = 0;
  const Rational lc = abs(p.leading());
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coeff(static_cast<std::size_t>(k))) / lc));
  return m + 2;
}

std::vector<Interval> isolate_real_roots(const Poly& p) {
  if (p.degree() < 1) return {};
  const auto chain = sturm_chain(p);
  const Rational bound = root_bound(p);
  std::vector<Interval> out;
  std::deque<Interval> work{{-bound, bound}};
  while (!work.empty()) {
    Interval iv = work.front();
    work.pop_front();
    int n = count_real_roots(chain, iv.lo, iv.hi);
    if (n == 0) continue;
    if (n > 1) {
      Rational m = iv.mid();
      work.push_back({iv.lo, m});
      work.push_back({m, iv.hi});
      continue;
    }
    // Exactly one root in (lo, hi]; move endpoints off exact roots.
    for (;;) {
      if (p.eval(iv.hi) == 0) {
        iv = Interval::point(iv.hi);
        break;
      }
      if (p.eval(iv.lo) != 0) break;
      Rational m = iv.mid();
      if (count_real_roots(chain, m, iv.hi) == 1) iv.lo = m;
      else iv.hi = m;
    }
    out.push_back(iv);
  }
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

Interval refine_real_root(const Poly& p, Interval iv, const Rational& target) {
  if (iv.lo == iv.hi) return iv;
  int s_lo = sgn(p.eval(iv.lo));
  while (iv.width() > target) {
    Rational m = iv.mid();
    int s = sgn(p.eval(m));
    if (s == 0) return Interval::point(m);
    if (s == s_lo) iv.lo = m;
    else iv.hi = m;
  }
  return iv;
}

namespace {

using cld = std::complex<long double>;

std::vector<cld> aberth(const Poly& p) {
  const int n = p.degree();
  std::vector<long double> c(static_cast<std::size_t>(n) + 1);
  const Rational lc = p.leading();
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = static_cast<long double>(Rational(p.coeff(static_cast<std::size_t>(k)) / lc).get_d());
  auto eval_both = [&](cld z, cld& v, cld& d) {
    v = c[static_cast<std::size_t>(n)];
    d = 0;
    for (int k = n - 1; k >= 0; --k) {
      d = d * z + v;
      v = v * z + c[static_cast<std::size_t>(k)];
    }
  };
  long double radius = 0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::pow(std::abs(c[static_cast<std::size_t>(k)]), 1.0L / (n - k)));
  radius = std::max(radius, 0.5L);
  std::vector<cld> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = std::polar(radius, 2.0L * 3.14159265358979323846L * k / n + 0.4L);
  for (int iter = 0; iter < 2000; ++iter) {
    long double worst = 0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      cld v, d;
      eval_both(z[k], v, d);
      if (v == cld(0)) continue;
      cld ratio = v / d;
      cld s = 0;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != k) s += 1.0L / (z[k] - z[j]);
      cld w = ratio / (1.0L - ratio * s);
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(z[k])));
    }
    if (worst < 1e-18L) break;
  }
  return z;
}

struct Approximations {
  std::vector<GaussRat> real;   // im == 0 exactly
  std::vector<GaussRat> upper;  // im > 0, each paired with its conjugate
  std::vector<GaussRat> other;  // used only when conjugate pairing failed

  std::vector<GaussRat> all() const {
    std::vector<GaussRat> out = real;
    for (const auto& z : upper) {
      out.push_back(z);
      out.push_back(z.conj());
    }
    out.insert(out.end(), other.begin(), other.end());
    return out;
  }
};

GaussRat to_gauss(cld z, unsigned bits) {
  return {round_dyadic(Rational(static_cast<double>(z.real())), bits),
          round_dyadic(Rational(static_cast<double>(z.imag())), bits)};
}

Approximations initial_approximations(const Poly& p) {
  auto z = aberth(p);
  Approximations a;
  std::vector<cld> up, down;
  for (auto w : z) {
    long double scale = std::max(1.0L, std::abs(w));
    if (std::abs(w.imag()) <= 1e-9L * scale) a.real.push_back(to_gauss(cld(w.real(), 0), 64));
    else if (w.imag() > 0) up.push_back(w);
    else down.push_back(w);
  }
  if (up.size() == down.size()) {
    for (auto w : up) a.upper.push_back(to_gauss(w, 64));
  } else {
    for (auto w : up) a.other.push_back(to_gauss(w, 64));
    for (auto w : down) a.other.push_back(to_gauss(w, 64));
  }
  return a;
}

GaussRat newton_step(const Poly& p, const Poly& dp, const GaussRat& z, unsigned bits) {
  GaussRat d = eval(dp, z);
  if (d.norm() == 0) return z;
  GaussRat n = z - eval(p, z) / d;
  return {round_dyadic(n.re, bits), round_dyadic(n.im, bits)};
}

// Gershgorin disks of diag(z) - W 1^T; nullopt when they overlap or some
// radius exceeds max_radius.
std::optional<std::vector<ComplexDisk>> certify(const Poly& p, const std::vector<GaussRat>& z,
                                                const Rational& max_radius) {
  const std::size_t n = z.size();
  const Rational lc = p.leading();
  std::vector<ComplexDisk> disks;
  disks.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    GaussRat denom{lc, Rational(0)};
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      GaussRat diff = z[i] - z[j];
      if (diff.norm() == 0) return std::nullopt;
      denom = denom * diff;
    }
    GaussRat w = eval(p, z[i]) / denom;
    Rational scale = static_cast<long>(n - 1);
    Rational r = sqrt_upper(scale * scale * w.norm());
    if (r > max_radius) return std::nullopt;
    disks.push_back({z[i] - w, r});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational sum = disks[i].radius + disks[j].radius;
      if ((disks[i].center - disks[j].center).norm() <= sum * sum) return std::nullopt;
    }
  return disks;
}

}  // namespace

std::vector<ComplexDisk> isolate_complex_roots(const Poly& p, const Rational& max_radius) {
  if (p.degree() < 1) throw std::invalid_argument("isolate_complex_roots: constant polynomial");
  if (p.degree() == 1) {
    Rational root = -p.coeff(0) / p.coeff(1);
    return {ComplexDisk{{root, Rational(0)}, Rational(0)}};
  }
  const Poly dp = p.derivative();
  Approximations approx = initial_approximations(p);
  unsigned bits = 64;
  for (int round = 0; round < 14; ++round) {
    if (auto disks = certify(p, approx.all(), max_radius)) {
      std::sort(disks->begin(), disks->end(), [](const ComplexDisk& a, const ComplexDisk& b) {
        if (a.center.re != b.center.re) return a.center.re < b.center.re;
        return a.center.im < b.center.im;
      });
      return *disks;
    }
    bits = std::min(bits * 2, 1u << 14);
    for (auto& z : approx.real) z = newton_step(p, dp, z, bits);
    for (auto& z : approx.upper) z = newton_step(p, dp, z, bits);
    for (auto& z : approx.other) z = newton_step(p, dp, z, bits);
  }
  throw std::runtime_error("isolate_complex_roots: certification failed for " + p.to_string());
}

}  // namespace wildsurf
