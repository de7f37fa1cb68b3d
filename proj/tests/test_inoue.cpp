#include <gtest/gtest.h>

#include <random>

#include "wildsurf/inoue.hpp"

using namespace wildsurf;

namespace {

const IntMatrix kSMplus{{Integer(2), Integer(1)}, {Integer(1), Integer(1)}};
const IntMatrix kSMminus{{Integer(1), Integer(1)}, {Integer(1), Integer(0)}};
const IntMatrix kSM{{Integer(0), Integer(0), Integer(1)}, {Integer(1), Integer(0), Integer(1)}, {Integer(0), Integer(1), Integer(0)}};

InoueParameters params(long r, long p1, long p2, long tau_re, long tau_im) {
  InoueParameters p;
  p.r = r;
  p.p = {Integer(p1), Integer(p2)};
  p.tau_re = Poly::constant(Rational(tau_re));
  p.tau_im = Poly::constant(Rational(tau_im));
  return p;
}

struct Point {
  ComplexElement w, z;
};

Point apply(const AffineMap& f, const Point& p) {
  return {f.w_scale * p.w + ComplexElement::real(f.w_shift), f.z_scale * p.z + f.z_w_coeff * p.w + f.z_shift};
}

GroupElement random_element(std::mt19937_64& rng, const InoueSurfaceSpec& s) {
  std::uniform_int_distribution<long> small(-3, 3), k(-2, 2);
  GroupElement e;
  const std::size_t m = s.variant == InoueVariant::SM ? 3 : 2;
  for (std::size_t i = 0; i < m; ++i) e.n.push_back(Integer(small(rng)));
  if (s.variant != InoueVariant::SM) e.l = small(rng);
  e.k = k(rng);
  return e;
}

Point random_point(std::mt19937_64& rng, const FieldHandle& f) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
  auto elt = [&] {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < f->degree(); ++i) c.push_back(make_rational(num(rng), den(rng)));
    return FieldElement(f, c);
  };
  return {{elt(), elt()}, {elt(), elt()}};
}

std::vector<InoueSurfaceSpec> flagship_specs() {
  return {build_spec(InoueVariant::SMplus, kSMplus, params(1, 0, 0, 0, 1)), build_spec(InoueVariant::SM, kSM),
          build_spec(InoueVariant::SMminus, kSMminus, params(2, 1, -1, 1, 1))};
}

}  // namespace

TEST(Validation, ReportsFirstFailedCondition) {
  auto code = [](InoueVariant v, const IntMatrix& m) {
    try {
      validate(v, m);
    } catch (const ValidationError& e) {
      return std::optional<ValidationCode>(e.code());
    }
    return std::optional<ValidationCode>();
  };
  EXPECT_FALSE(code(InoueVariant::SMplus, kSMplus));
  EXPECT_FALSE(code(InoueVariant::SMminus, kSMminus));
  EXPECT_FALSE(code(InoueVariant::SM, kSM));
  EXPECT_EQ(code(InoueVariant::SMplus, kSM), ValidationCode::WrongShape);
  EXPECT_EQ(code(InoueVariant::SMplus, kSMminus), ValidationCode::WrongDet);
  EXPECT_EQ(code(InoueVariant::SMminus, kSMplus), ValidationCode::WrongDet);
  EXPECT_EQ(code(InoueVariant::SMplus, (IntMatrix{{Integer(1), Integer(1)}, {Integer(0), Integer(1)}})),
            ValidationCode::TraceTooSmall);
  EXPECT_EQ(code(InoueVariant::SMminus, (IntMatrix{{Integer(0), Integer(1)}, {Integer(1), Integer(0)}})),
            ValidationCode::TraceTooSmall);
  // t^3 - 1 is reducible; t^3 - 3t - 1 has three real roots.
  EXPECT_EQ(code(InoueVariant::SM, (IntMatrix{{Integer(0), Integer(0), Integer(1)}, {Integer(1), Integer(0), Integer(0)}, {Integer(0), Integer(1), Integer(0)}})),
            ValidationCode::Reducible);
  EXPECT_EQ(code(InoueVariant::SM, (IntMatrix{{Integer(0), Integer(0), Integer(1)}, {Integer(1), Integer(0), Integer(3)}, {Integer(0), Integer(1), Integer(0)}})),
            ValidationCode::NoRealDominantRoot);
  EXPECT_EQ(code(InoueVariant::SM, int_identity(3)), ValidationCode::Reducible);
}

TEST(SpecData, EigenvectorAndTranslationsSolveTheirEquations) {
  for (const auto& s : flagship_specs()) {
    const FieldElement x = FieldElement::generator(s.field);
    const std::size_t n = s.M.rows();
    for (std::size_t i = 0; i < n; ++i) {
      FieldElement row = FieldElement::zero(s.field);
      for (std::size_t j = 0; j < n; ++j) row = row + Rational(s.M(i, j)) * s.v[j];
      EXPECT_EQ(row, x * s.v[i]);
    }
    if (s.variant == InoueVariant::SM) continue;
    const auto e = e_vector(s);
    for (std::size_t i = 0; i < 2; ++i) {
      // SM+: (I - M) c = e + delta p.   SM-: -(I + M) c = e + delta p.
      ComplexElement lhs = s.c[i];
      if (s.variant == InoueVariant::SMminus) lhs = -lhs;
      for (std::size_t j = 0; j < 2; ++j) lhs = lhs - Rational(s.M(i, j)) * s.c[j];
      EXPECT_EQ(lhs, ComplexElement::real(e[i] + Rational(s.p[i]) * s.delta));
    }
    // delta = (b1 a2 - b2 a1) / r.
    EXPECT_EQ(s.delta, (s.b[0] * s.a[1] - s.b[1] * s.a[0]) * (Rational(1) / Rational(s.r)));
  }
}

TEST(Relations, FlagshipSurfacesSatisfyEveryRelationExactly) {
  for (const auto& s : flagship_specs()) {
    const auto checks = verify_relations(s);
    ASSERT_EQ(checks.size(), 6u);
    for (const auto& c : checks) {
      EXPECT_TRUE(c.pass) << to_string(s.variant) << " " << c.id;
      EXPECT_TRUE(c.residue.is_identity());
    }
  }
}

TEST(Relations, ParameterSweep) {
  for (const auto& [variant, m] : {std::pair{InoueVariant::SMplus, kSMplus}, std::pair{InoueVariant::SMminus, kSMminus}})
    for (long r : {1, -1, 2, -2})
      for (long p1 = -1; p1 <= 1; ++p1)
        for (long p2 = -1; p2 <= 1; ++p2)
          for (long tau_re : {0, 1}) {
            const auto s = build_spec(variant, m, params(r, p1, p2, tau_re, 1));
            for (const auto& c : verify_relations(s)) ASSERT_TRUE(c.pass) << to_string(variant) << " r=" << r << " " << c.id;
          }
}

TEST(Relations, BrokenTranslationIsDetected) {
  InoueSurfaceSpec s = build_spec(InoueVariant::SMplus, kSMplus, params(1, 0, 0, 0, 1));
  s.c[0] = s.c[0] + ComplexElement::one(s.field);
  const auto checks = verify_relations(s);
  EXPECT_TRUE(std::any_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return !c.pass; }));
}

TEST(NormalForm, ComposeMatchesMapCompositionOnRandomPairs) {
  std::mt19937_64 rng(53);
  for (const auto& s : flagship_specs()) {
    int failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const GroupElement e1 = random_element(rng, s), e2 = random_element(rng, s);
      const AffineMap f1 = as_affine_map(s, e1), f2 = as_affine_map(s, e2);
      const AffineMap f12 = as_affine_map(s, compose(s, e1, e2));
      if (f12 != compose(f1, f2)) ++failures;
      const Point p = random_point(rng, s.field);
      const Point lhs = apply(f12, p), rhs = apply(f1, apply(f2, p));
      if (lhs.w != rhs.w || lhs.z != rhs.z) ++failures;
    }
    EXPECT_EQ(failures, 0) << to_string(s.variant);
  }
}

TEST(NormalForm, InverseAndIdentity) {
  std::mt19937_64 rng(59);
  for (const auto& s : flagship_specs()) {
    const GroupElement id = identity_element(s);
    EXPECT_TRUE(as_affine_map(s, id).is_identity());
    for (int trial = 0; trial < 100; ++trial) {
      const GroupElement e = random_element(rng, s);
      ASSERT_EQ(compose(s, e, inverse(s, e)), id);
      ASSERT_EQ(compose(s, inverse(s, e), e), id);
      ASSERT_EQ(as_affine_map(s, inverse(s, e)), as_affine_map(s, e).inverse());
    }
  }
}

TEST(NormalForm, AssociativeOnRandomTriples) {
  std::mt19937_64 rng(61);
  for (const auto& s : flagship_specs())
    for (int trial = 0; trial < 100; ++trial) {
      const GroupElement a = random_element(rng, s), b = random_element(rng, s), c = random_element(rng, s);
      ASSERT_EQ(compose(s, compose(s, a, b), c), compose(s, a, compose(s, b, c)));
    }
}

TEST(NormalForm, ClosedFormOfWordMapForTwoDimensionalVariants) {
  // g1^n1 g2^n2 g3^l g0^k sends (w, z) to
  //   (alpha^k w + n1 a1 + n2 a2,
  //    s^k z + (n1 b1 + n2 b2) alpha^k w + T_k + n1 c1 + n2 c2
  //          + C(n1,2) a1 b1 + C(n2,2) a2 b2 + n1 n2 a2 b1 + l delta)
  // with s = 1, T_k = k tau for SM+ and s = -1, T_k = 0 for SM-.
  std::mt19937_64 rng(67);
  for (const auto& s : flagship_specs()) {
    if (s.variant == InoueVariant::SM) continue;
    const FieldElement x = FieldElement::generator(s.field);
    for (int trial = 0; trial < 200; ++trial) {
      const GroupElement e = random_element(rng, s);
      const Rational n1(e.n[0]), n2(e.n[1]), l(e.l);
      const FieldElement ak = x.pow(e.k);
      AffineMap want;
      want.w_scale = ak;
      want.w_shift = n1 * s.a[0] + n2 * s.a[1];
      const bool plus = s.variant == InoueVariant::SMplus;
      want.z_scale = (plus || e.k % 2 == 0) ? ComplexElement::one(s.field) : -ComplexElement::one(s.field);
      want.z_w_coeff = ComplexElement::real((n1 * s.b[0] + n2 * s.b[1]) * ak);
      ComplexElement shift = n1 * s.c[0] + n2 * s.c[1];
      shift = shift + ComplexElement::real((n1 * (n1 - 1) / 2) * (s.a[0] * s.b[0]) + (n2 * (n2 - 1) / 2) * (s.a[1] * s.b[1]) +
                                           (n1 * n2) * (s.a[1] * s.b[0]) + l * s.delta);
      if (plus) shift = shift + Rational(e.k) * s.tau;
      want.z_shift = shift;
      ASSERT_EQ(as_affine_map(s, e), want) << to_string(s.variant) << " trial " << trial;
    }
  }
}

TEST(AutomorphismReport, FlagshipValues) {
  const auto specs = flagship_specs();
  const AutReport plus = aut_report(specs[0], 12), sm = aut_report(specs[1], 12), minus = aut_report(specs[2], 12);
  EXPECT_EQ(plus.coker.torsion_order(), 1);
  EXPECT_EQ(sm.coker.torsion_order(), 1);
  EXPECT_EQ(plus.det_i_minus_m, -1);
  EXPECT_EQ(plus.det_i_plus_m, 5);
  EXPECT_EQ(plus.commutant_quotient_order, Integer(4));
  EXPECT_EQ(sm.commutant_quotient_order, Integer(2));
  EXPECT_EQ(minus.commutant_quotient_order, Integer(2));
  EXPECT_NE(plus.classification.find("C*"), std::string::npos);
  EXPECT_EQ(sm.classification, "Aut(X) finite");
  EXPECT_EQ(minus.classification, "Aut(X) finite");
}

TEST(SpecData, ZeroRIsRejected) {
  EXPECT_THROW(build_spec(InoueVariant::SMplus, kSMplus, params(0, 0, 0, 0, 1)), std::invalid_argument);
}
