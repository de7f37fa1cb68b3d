#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <complex>
#include <random>

#include "wildsurf/number_field.hpp"

using namespace wildsurf;

namespace {

std::vector<std::complex<double>> eigen_roots(const Poly& monic) {
  const int d = monic.degree();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) c(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) c(i, d - 1) = -monic.coeff(static_cast<std::size_t>(i)).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < d; ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

FieldElement random_element(std::mt19937_64& rng, const FieldHandle& k) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  std::vector<Rational> c;
  for (std::size_t i = 0; i < k->degree(); ++i) c.push_back(make_rational(num(rng), den(rng)));
  return FieldElement(k, c);
}

std::vector<FieldHandle> sample_fields() {
  return {make_field(Poly::from_integers({-2, 0, 1})), make_field(Poly::from_integers({1, -3, 1})),
          make_field(Poly::from_integers({-1, -1, 0, 1})), make_field(Poly::from_integers({1, 0, -10, 0, 1})),
          make_field(Poly::from_integers({1, 0, 0, 0, 1}))};
}

// Brute factor search for monic integer quartics: a rational (hence integer)
// root, or a split into two monic integer quadratics whose coefficients are
// bounded through the Cauchy root bound.
bool quartic_reducible_brute(const std::vector<long>& c) {
  auto eval = [&](long t) {
    long s = 0;
    for (std::size_t k = c.size(); k-- > 0;) s = s * t + c[k];
    return s;
  };
  if (c[0] == 0) return true;
  for (long t = 1; t <= std::labs(c[0]); ++t)
    if (c[0] % t == 0 && (eval(t) == 0 || eval(-t) == 0)) return true;
  long bound = 0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) bound = std::max(bound, std::labs(c[k]));
  const long sum_bound = 2 * (bound + 1);
  for (long q = -std::labs(c[0]); q <= std::labs(c[0]); ++q) {
    if (q == 0 || c[0] % q != 0) continue;
    const long s = c[0] / q;
    for (long p = -sum_bound; p <= sum_bound; ++p) {
      const long r = c[3] - p;
      if (q + s + p * r == c[2] && p * s + q * r == c[1]) return true;
    }
  }
  return false;
}

}  // namespace

TEST(FieldArithmetic, AxiomsHoldExactly) {
  std::mt19937_64 rng(31);
  for (const auto& k : sample_fields()) {
    const FieldElement zero = FieldElement::zero(k), one = FieldElement::one(k);
    for (int trial = 0; trial < 60; ++trial) {
      const FieldElement a = random_element(rng, k), b = random_element(rng, k), c = random_element(rng, k);
      ASSERT_EQ(a + b, b + a);
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(a + zero, a);
      ASSERT_EQ(a * one, a);
      ASSERT_EQ(a - a, zero);
      if (!a.is_zero()) {
        ASSERT_EQ(a * a.inverse(), one);
        ASSERT_EQ((b / a) * a, b);
      }
      ASSERT_EQ(a.pow(3), a * a * a);
    }
  }
}

TEST(FieldArithmetic, GeneratorSatisfiesDefiningPolynomial) {
  for (const auto& k : sample_fields()) {
    const FieldElement x = FieldElement::generator(k);
    FieldElement acc = FieldElement::zero(k);
    const auto& c = k->defining_poly().coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) acc = acc + c[i] * x.pow(static_cast<long>(i));
    EXPECT_TRUE(acc.is_zero());
  }
}

TEST(FieldArithmetic, DivisionByZeroThrows) {
  const FieldHandle k = sample_fields()[0];
  EXPECT_THROW(FieldElement::zero(k).inverse(), std::exception);
}

TEST(FieldArithmetic, MixedFieldsAreRejected) {
  const auto fs = sample_fields();
  EXPECT_THROW(FieldElement::one(fs[0]) + FieldElement::one(fs[1]), std::invalid_argument);
}

TEST(Embeddings, DisksContainEigenvaluesInDocumentedOrder) {
  for (const auto& k : sample_fields()) {
    const auto roots = eigen_roots(k->defining_poly());
    const auto& emb = k->embeddings();
    ASSERT_EQ(emb.size(), k->degree());
    for (auto z : roots) {
      int hits = 0;
      for (const auto& e : emb)
        if (std::abs(z - e.disk.center.to_complex()) <= e.disk.radius.get_d() + 1e-9) ++hits;
      ASSERT_EQ(hits, 1);
    }
    // Real roots ascending and first; complex ones after.
    bool seen_complex = false;
    for (std::size_t i = 0; i < emb.size(); ++i) {
      if (!emb[i].is_real) {
        seen_complex = true;
        continue;
      }
      ASSERT_FALSE(seen_complex);
      if (i > 0) {
        ASSERT_LT(emb[i - 1].interval.hi, emb[i].interval.hi);
      }
    }
  }
}

TEST(Embeddings, IntervalImageContainsProductOfImages) {
  std::mt19937_64 rng(37);
  const Rational width = make_rational(1, 1000000);
  for (const auto& k : sample_fields()) {
    for (std::size_t e = 0; e < k->degree(); ++e) {
      if (!k->embedding(e).is_real) continue;
      for (int trial = 0; trial < 20; ++trial) {
        const FieldElement a = random_element(rng, k), b = random_element(rng, k);
        const Interval ia = enclose(a, e, width), ib = enclose(b, e, width), iab = enclose(a * b, e, width);
        ASSERT_LE(ia.width(), width);
        const Interval prod = ia * ib;
        ASSERT_FALSE(iab.hi < prod.lo || prod.hi < iab.lo);
        const double direct = approx(a, e).real() * approx(b, e).real();
        ASSERT_NEAR(approx(a * b, e).real(), direct, 1e-9 * (1 + std::abs(direct)));
      }
    }
  }
}

TEST(Embeddings, SignMatchesFloatingPointAwayFromZero) {
  std::mt19937_64 rng(41);
  for (const auto& k : sample_fields()) {
    const auto roots = eigen_roots(k->defining_poly());
    for (std::size_t e = 0; e < k->degree(); ++e) {
      if (!k->embedding(e).is_real) continue;
      for (int trial = 0; trial < 30; ++trial) {
        const FieldElement a = random_element(rng, k);
        const double v = approx(a, e).real();
        if (std::abs(v) < 1e-6) continue;
        ASSERT_EQ(sign_at(a, e), v > 0 ? 1 : -1);
      }
    }
  }
}

TEST(Embeddings, ExactZeroSignForNontrivialZero) {
  // sqrt2 * sqrt2 - 2 built through different routes.
  const FieldHandle k = make_field(Poly::from_integers({1, 0, -10, 0, 1}));
  const FieldElement x = FieldElement::generator(k);
  const FieldElement sqrt2 = make_rational(1, 2) * (x.pow(3) - Rational(9) * x);
  const FieldElement z = sqrt2 * sqrt2 - FieldElement::from_rational(k, Rational(2));
  for (std::size_t e = 0; e < 4; ++e) EXPECT_EQ(sign_at(z, e), 0);
}

TEST(Irreducibility, AgreesWithBruteFactorSearchOnQuartics) {
  int irreducible = 0;
  std::vector<long> c{-3, -3, -3, -3, 1};
  for (;;) {
    const bool want = !quartic_reducible_brute(c);
    ASSERT_EQ(is_irreducible(Poly::from_integers(c)), want) << Poly::from_integers(c).to_string();
    irreducible += want;
    std::size_t p = 0;
    while (p < 4 && ++c[p] > 3) c[p++] = -3;
    if (p == 4) break;
  }
  EXPECT_GT(irreducible, 100);
}

TEST(Irreducibility, CubicsAndSextics) {
  EXPECT_TRUE(is_irreducible(Poly::from_integers({-1, -1, 0, 1})));
  EXPECT_FALSE(is_irreducible(Poly::from_integers({-1, 1, -1, 1})));  // (t - 1)(t^2 + 1)
  const Poly q1 = Poly::from_integers({-2, 0, 1}), c1 = Poly::from_integers({-1, -1, 0, 1});
  EXPECT_FALSE(is_irreducible(q1 * Poly::from_integers({1, 1, 1, 1, 1})));  // degree 6, no rational root
  EXPECT_FALSE(is_irreducible(c1 * Poly::from_integers({-2, 0, 0, 1})));
  EXPECT_TRUE(is_irreducible(Poly::from_integers({1, 1, 1, 1, 1, 1, 1})));
  EXPECT_THROW(make_field(q1 * q1), std::invalid_argument);
}

TEST(Conjugation, QuadraticGaloisConjugateIsFieldAutomorphism) {
  std::mt19937_64 rng(43);
  const FieldHandle k = make_field(Poly::from_integers({1, -3, 1}));
  for (int trial = 0; trial < 50; ++trial) {
    const FieldElement a = random_element(rng, k), b = random_element(rng, k);
    ASSERT_EQ(galois_conjugate(a * b), galois_conjugate(a) * galois_conjugate(b));
    ASSERT_EQ(galois_conjugate(galois_conjugate(a)), a);
    // a + conj(a) is rational.
    ASSERT_TRUE(as_rational(a + galois_conjugate(a)).has_value());
  }
}

TEST(Rank, QLinearRankOfSurds) {
  const FieldHandle k = make_field(Poly::from_integers({1, 0, -10, 0, 1}));
  const FieldElement x = FieldElement::generator(k);
  const FieldElement one = FieldElement::one(k);
  const FieldElement sqrt2 = make_rational(1, 2) * (x.pow(3) - Rational(9) * x);
  const FieldElement sqrt3 = make_rational(1, 2) * (Rational(11) * x - x.pow(3));
  EXPECT_EQ(q_linear_rank({one, sqrt2, sqrt3}), 3u);
  EXPECT_EQ(q_linear_rank({one, sqrt2, Rational(3) * sqrt2 + one}), 2u);
}

TEST(ComplexElements, FieldOperationsInKi) {
  std::mt19937_64 rng(47);
  const FieldHandle k = sample_fields()[1];
  for (int trial = 0; trial < 40; ++trial) {
    const ComplexElement a{random_element(rng, k), random_element(rng, k)};
    const ComplexElement b{random_element(rng, k), random_element(rng, k)};
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b).conj(), a.conj() * b.conj());
    if (!b.is_zero()) {
      ASSERT_EQ((a / b) * b, a);
    }
    const auto za = approx(a, 1), zb = approx(b, 1);
    ASSERT_LT(std::abs(approx(a * b, 1) - za * zb), 1e-9 * (1 + std::abs(za * zb)));
  }
}
