#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <random>

#include "oracles.hpp"
#include "wildsurf/poly.hpp"
#include "wildsurf/roots.hpp"

using namespace wildsurf;

namespace {

// Roots of a monic polynomial as eigenvalues of its companion matrix.
std::vector<std::complex<double>> eigen_roots(const Poly& monic) {
  const int d = monic.degree();
  if (d < 1) return {};
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) c(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) c(i, d - 1) = -monic.coeff(static_cast<std::size_t>(i)).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < d; ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

Poly squarefree_part(const Poly& f) { return divmod(f, gcd(f, f.derivative())).first.monic(); }

}  // namespace

TEST(PolyArithmetic, DivisionAndGcdIdentities) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> coef(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long> ca(5), cb(3);
    for (auto& c : ca) c = coef(rng);
    for (auto& c : cb) c = coef(rng);
    const Poly a = Poly::from_integers(ca), b = Poly::from_integers(cb);
    if (b.is_zero()) continue;
    auto [q, r] = divmod(a, b);
    ASSERT_EQ(q * b + r, a);
    ASSERT_LT(r.degree(), b.degree());
    const Poly g = gcd(a, b);
    if (!g.is_zero()) {
      ASSERT_TRUE((a % g).is_zero());
      ASSERT_TRUE((b % g).is_zero());
    }
  }
}

TEST(PolyArithmetic, SquarefreeDecompositionReassembles) {
  const Poly x = Poly::x(), one = Poly::constant(Rational(1));
  const Poly f = pow(x - one, 3) * pow(x + one, 2) * (x * x + one) * Poly::constant(Rational(3));
  Poly prod = Poly::constant(Rational(3));
  for (const auto& [p, e] : squarefree_decomposition(f)) {
    EXPECT_TRUE(p.is_monic());
    prod = prod * pow(p, e);
  }
  EXPECT_EQ(prod, f);
}

TEST(CharPoly, AgreesWithCofactorDeterminantAtIntegerPoints) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const IntMatrix a = oracle::random_matrix(rng, n, n, -7, 7);
    const Poly p = char_poly(a);
    ASSERT_EQ(p.degree(), static_cast<int>(n));
    for (long t = -2; t <= static_cast<long>(n); ++t) {
      IntMatrix m = a;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j ? Integer(t) : Integer(0)) - a(i, j);
      ASSERT_EQ(p.eval(Rational(t)), Rational(oracle::det(m)));
    }
  }
}

TEST(RationalRoots, MatchBruteCandidateEvaluation) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coef(-20, 20);
  for (int trial = 0; trial < 1500; ++trial) {
    const int d = 1 + trial % 4;
    std::vector<long> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = coef(rng);
    if (c.back() == 0) c.back() = 1;
    // Plant rational roots now and then so the comparison is not vacuous.
    if (trial % 3 == 0 && d >= 2) {
      const long p = coef(rng) % 5, q = 1 + std::labs(coef(rng)) % 3;
      std::vector<long> lower(c.begin() + 1, c.end());
      Poly planted = Poly::from_integers({-p, q}) * Poly::from_integers(std::vector<long>(lower.begin(), lower.end()));
      c.clear();
      for (const auto& x : planted.coeffs()) c.push_back(x.get_num().get_si());
    }
    const Poly f = Poly::from_integers(c);
    std::vector<Rational> got = rational_roots(f), want = oracle::brute_rational_roots(f.coeffs());
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    ASSERT_EQ(got, want) << f.to_string();
  }
}

TEST(RationalRoots, OrderedByAbsoluteValuePositiveFirst) {
  const Poly f = Poly::from_integers({-4, 0, 1}) * Poly::from_integers({-1, 1});
  const auto r = rational_roots(f);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0], 1);
  EXPECT_EQ(r[1], 2);
  EXPECT_EQ(r[2], -2);
}

TEST(Cyclotomic, ProductOverDivisorsIsXnMinusOne) {
  for (unsigned n = 1; n <= 30; ++n) {
    Poly prod = Poly::constant(Rational(1));
    for (unsigned d = 1; d <= n; ++d)
      if (n % d == 0) {
        ASSERT_EQ(cyclotomic(d).degree(), static_cast<int>(euler_totient(d)));
        prod = prod * cyclotomic(d);
      }
    ASSERT_EQ(prod, Poly::monomial(Rational(1), n) - Poly::constant(Rational(1)));
  }
}

TEST(Cyclotomic, UnitCircleTestAgreesWithEigenvalueModuli) {
  int on_circle = 0;
  for (int d = 2; d <= 3; ++d) {
    std::vector<long> c(static_cast<std::size_t>(d) + 1, -5);
    c.back() = 1;
    for (;;) {
      const Poly f = Poly::from_integers(c);
      const auto roots = eigen_roots(squarefree_part(f));
      const bool want = std::all_of(roots.begin(), roots.end(),
                                    [](std::complex<double> z) { return std::abs(std::abs(z) - 1.0) < 1e-8; });
      ASSERT_EQ(all_roots_on_unit_circle(f), want) << f.to_string();
      on_circle += want;
      std::size_t p = 0;
      while (p < static_cast<std::size_t>(d) && ++c[p] > 5) c[p++] = -5;
      if (p == static_cast<std::size_t>(d)) break;
    }
  }
  EXPECT_GT(on_circle, 10);
}

TEST(RealRoots, SturmCountMatchesEigenvalues) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> coef(-9, 9);
  int compared = 0;
  while (compared < 300) {
    const int d = 2 + compared % 4;
    std::vector<long> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = coef(rng);
    c.back() = 1;
    const Poly f = squarefree_part(Poly::from_integers(c));
    const auto roots = eigen_roots(f);
    bool ambiguous = false;
    int real = 0;
    for (auto z : roots) {
      if (std::abs(z.imag()) < 1e-9) ++real;
      else if (std::abs(z.imag()) < 1e-5) ambiguous = true;
    }
    if (ambiguous) continue;
    const Rational b = root_bound(f);
    ASSERT_EQ(count_real_roots(sturm_chain(f), -b, b), real) << f.to_string();
    const auto iso = isolate_real_roots(f);
    ASSERT_EQ(static_cast<int>(iso.size()), real);
    for (std::size_t i = 0; i < iso.size(); ++i) {
      if (i + 1 < iso.size()) {
        ASSERT_LE(iso[i].hi, iso[i + 1].lo) << f.to_string();
      }
      if (iso[i].lo == iso[i].hi) {
        ASSERT_EQ(f.eval(iso[i].lo), 0);
      } else {
        ASSERT_LT(sign(f.eval(iso[i].lo)) * sign(f.eval(iso[i].hi)), 0) << f.to_string();
      }
    }
    ++compared;
  }
}

TEST(ComplexRoots, DisksContainEigenvaluesAndAreDisjoint) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 5;
    std::vector<long> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = coef(rng);
    c.back() = 1;
    const Poly f = squarefree_part(Poly::from_integers(c));
    if (f.degree() < 1) continue;
    const auto disks = isolate_complex_roots(f, make_rational(1, 1000000));
    ASSERT_EQ(static_cast<int>(disks.size()), f.degree());
    for (auto z : eigen_roots(f)) {
      int hits = 0;
      for (const auto& disk : disks)
        if (std::abs(z - disk.center.to_complex()) <= disk.radius.get_d() + 1e-7) ++hits;
      ASSERT_EQ(hits, 1) << f.to_string();
    }
  }
}
