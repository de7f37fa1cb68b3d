#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wildsurf/int_matrix.hpp"
#include "wildsurf/linalg.hpp"
#include "wildsurf/poly.hpp"

using namespace wildsurf;

namespace {

bool is_diagonal(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST(Rationals, NormalizedParsing) {
  EXPECT_EQ(to_string(parse_rational("6/-4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational(" 0/7 ")), "0");
  EXPECT_EQ(parse_rational("0/7").get_den(), 1);
  EXPECT_THROW(parse_rational("1/0"), std::exception);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(SmithNormalForm, RandomThreeByThreeProperties) {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 300; ++trial) {
    const IntMatrix a = oracle::random_matrix(rng, 3, 3, -9, 9);
    const SmithDecomposition s = smith_normal_form(a);
    ASSERT_EQ(oracle::multiply(oracle::multiply(s.U, a), s.V), s.D);
    ASSERT_EQ(abs(oracle::det(s.U)), 1);
    ASSERT_EQ(abs(oracle::det(s.V)), 1);
    ASSERT_EQ(abs(oracle::det(s.D)), abs(oracle::det(a)));
    ASSERT_TRUE(is_diagonal(s.D));
    const auto diag = s.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      ASSERT_GE(diag[i], 0);
      if (diag[i] != 0) {
        ASSERT_EQ(diag[i + 1] % diag[i], 0) << to_string(a);
      } else {
        ASSERT_EQ(diag[i + 1], 0);
      }
    }
  }
}

TEST(SmithNormalForm, DiagonalMatchesDeterminantalDivisors) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 2 + trial % 3, cols = 2 + (trial / 3) % 3;
    const IntMatrix a = oracle::random_matrix(rng, rows, cols, -6, 6);
    const auto diag = smith_normal_form(a).diagonal();
    Integer prefix = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
      prefix *= diag[k - 1];
      ASSERT_EQ(prefix, oracle::determinantal_divisor(a, k)) << to_string(a) << " k=" << k;
    }
  }
}

TEST(SmithNormalForm, Deterministic) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix a = oracle::random_matrix(rng, 3, 3, -9, 9);
    const SmithDecomposition s1 = smith_normal_form(a), s2 = smith_normal_form(a);
    EXPECT_EQ(s1.U, s2.U);
    EXPECT_EQ(s1.V, s2.V);
  }
}

TEST(Cokernel, OrderMatchesResidueEnumeration) {
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 120) {
    const std::size_t n = checked % 3 == 0 ? 3 : 2;
    const IntMatrix a = oracle::random_matrix(rng, n, n, -5, 5);
    const Integer d = abs(oracle::det(a));
    if (d == 0 || d > (n == 3 ? 20 : 50)) continue;
    const CokernelInvariants c = cokernel_invariants(a);
    ASSERT_EQ(c.free_rank, 0u);
    ASSERT_EQ(c.torsion_order(), d);
    ASSERT_EQ(c.torsion_order(), oracle::cokernel_order_by_residues(a)) << to_string(a);
    ++checked;
  }
}

TEST(Cokernel, FreeRankOfSingularMatrix) {
  const CokernelInvariants c = cokernel_invariants(IntMatrix{{Integer(2), Integer(4)}, {Integer(1), Integer(2)}});
  EXPECT_EQ(c.free_rank, 1u);
  EXPECT_EQ(c.torsion.size(), 0u);
}

TEST(Cokernel, GaussianIntegerExample) {
  const IntMatrix a{{Integer(1), Integer(1)}, {Integer(-1), Integer(1)}};
  EXPECT_EQ(cokernel_invariants(a).torsion_order(), 2);
  EXPECT_EQ(oracle::cokernel_order_by_residues(a), 2);
}

TEST(Determinant, BareissAgreesWithCofactorExpansion) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const IntMatrix a = oracle::random_matrix(rng, n, n, -20, 20);
    ASSERT_EQ(det(a), oracle::det(a));
  }
}

TEST(RationalLinearAlgebra, InverseSolveAndDeterminant) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 3;
    RatMatrix a(n, n, Rational(0));
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j) = make_rational(num(rng), den(rng));
    const Rational d = oracle::cofactor_det(rows);
    ASSERT_EQ(determinant(a), d);
    auto inv = inverse(a);
    ASSERT_EQ(inv.has_value(), d != 0);
    if (inv) {
      ASSERT_EQ(a * *inv, RatMatrix::identity(n));
    }
    if (d != 0) {
      ASSERT_EQ(rank(a), n);
    } else {
      ASSERT_LT(rank(a), n);
    }
  }
}

TEST(RationalLinearAlgebra, NullspaceVectorsAreAnnihilated) {
  RatMatrix a{{Rational(1), Rational(2), Rational(3)}, {Rational(2), Rational(4), Rational(6)}};
  const auto ns = nullspace(a, Rational(0), Rational(1));
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns)
    for (std::size_t i = 0; i < a.rows(); ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
      EXPECT_EQ(s, 0);
    }
  EXPECT_EQ(rank(a), 1u);
}

TEST(HermiteNormalForm, SameLatticeAndEchelonShape) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix a = oracle::random_matrix(rng, 3, 3, -9, 9);
    const IntMatrix h = hermite_normal_form(a);
    std::size_t last_pivot = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
      std::size_t p = 0;
      while (p < h.cols() && h(i, p) == 0) ++p;
      ASSERT_LT(p, h.cols());
      if (i > 0) {
        ASSERT_GT(p, last_pivot);
      }
      ASSERT_GT(h(i, p), 0);
      for (std::size_t r = 0; r < i; ++r) {
        ASSERT_GE(h(r, p), 0);
        ASSERT_LT(h(r, p), h(i, p));
      }
      last_pivot = p;
    }
    // Same row lattice: equal rank and equal determinantal divisors of the
    // stacked rows.
    ASSERT_EQ(h.rows(), smith_normal_form(a).rank());
    for (std::size_t k = 1; k <= h.rows(); ++k)
      ASSERT_EQ(oracle::determinantal_divisor(h, k), oracle::determinantal_divisor(a, k));
  }
}

TEST(IntegerKernel, AnnihilatedAndSaturated) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix a = oracle::random_matrix(rng, 2, 4, -7, 7);
    const IntMatrix k = integer_kernel(a);
    ASSERT_EQ(k.cols(), 4 - smith_normal_form(a).rank());
    const IntMatrix prod = oracle::multiply(a, k);
    for (const auto& e : prod.entries()) ASSERT_EQ(e, 0);
    for (const auto& d : smith_normal_form(k).diagonal()) ASSERT_EQ(d, 1);
  }
}

TEST(Unipotence, MatchesCharacteristicPolynomial) {
  std::mt19937_64 rng(29);
  const Poly t_minus_1 = Poly::x() - Poly::constant(Rational(1));
  int unipotent_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    IntMatrix a = oracle::random_matrix(rng, 3, 3, -2, 2);
    if (trial % 2 == 0) {
      // Conjugate an upper unitriangular matrix by a unimodular one.
      IntMatrix n = oracle::random_matrix(rng, 3, 3, -3, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j <= i; ++j) n(i, j) = (i == j) ? 1 : 0;
      IntMatrix u = oracle::random_matrix(rng, 3, 3, -2, 2);
      auto ui = unimodular_inverse(u);
      if (!ui) continue;
      a = oracle::multiply(oracle::multiply(u, n), *ui);
    }
    const bool unip = is_unipotent(a);
    unipotent_seen += unip;
    ASSERT_EQ(unip, char_poly(a) == pow(t_minus_1, 3)) << to_string(a);
  }
  EXPECT_GT(unipotent_seen, 10);
}

TEST(Power, NegativeExponentInvertsUnimodular) {
  const IntMatrix m{{Integer(2), Integer(1)}, {Integer(1), Integer(1)}};
  EXPECT_EQ(oracle::multiply(power(m, 5), power(m, -5)), int_identity(2));
  EXPECT_THROW(power(IntMatrix{{Integer(2), Integer(0)}, {Integer(0), Integer(1)}}, -1), std::exception);
}
