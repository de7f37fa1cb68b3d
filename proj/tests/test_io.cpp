#include <gtest/gtest.h>

#include <functional>
#include <string>

#include "wildsurf/io.hpp"

using namespace wildsurf;

namespace {

const std::string kExamples = WILDSURF_EXAMPLES_DIR;

std::string where_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.where();
  }
  return "<no error>";
}

}  // namespace

TEST(Expressions, ImplicitMultiplicationAndPowers) {
  EXPECT_EQ(parse_poly_expression("2x^2 - 3"), Poly::from_integers({-3, 0, 2}));
  EXPECT_EQ(parse_poly_expression("x(x+1)"), Poly::from_integers({0, 1, 1}));
  EXPECT_EQ(parse_poly_expression("(x - 1)(x + 1)"), Poly::from_integers({-1, 0, 1}));
  EXPECT_EQ(parse_poly_expression("-x^3 + 11 x"), Poly::from_integers({0, 11, 0, -1}));
  EXPECT_EQ(parse_poly_expression("(x^3 - 9x)/2"), make_rational(1, 2) * Poly::from_integers({0, -9, 0, 1}));
  EXPECT_EQ(parse_poly_expression("3/4"), Poly::constant(make_rational(3, 4)));
  EXPECT_EQ(parse_poly_expression("(x+1)^0"), Poly::constant(Rational(1)));
  EXPECT_EQ(parse_poly_expression("2^3x"), Poly::from_integers({0, 8}));
}

TEST(Expressions, RejectsInexactOrMalformedInput) {
  for (const char* bad : {"1.5", "x/x", "x/0", "x^-1", "x^", "(x+1", "y", "2 +", "", "x))"})
    EXPECT_THROW(parse_poly_expression(bad), InputError) << bad;
  EXPECT_EQ(where_of([] { parse_poly_expression("x + $"); }), "expression \"x + $\", offset 4");
}

TEST(Json, SyntaxErrorsCarryLineAndColumn) {
  EXPECT_EQ(where_of([] { parse_json_text("{\n  \"M\": [1, 2,]\n}"); }), "line 2, column 14");
  EXPECT_EQ(where_of([] { parse_json_text("{\"a\": 1"); }).rfind("line 1, column ", 0), 0u);
}

TEST(Json, FieldPathsInDiagnostics) {
  EXPECT_EQ(where_of([] { surface_from_json(json::parse(R"({"variant":"SM+","M":[["2","1"],["1","x"]]})")); }),
            "M[1][1]");
  EXPECT_EQ(where_of([] { surface_from_json(json::parse(R"({"variant":"SM+","M":[["2","1"],["1"]]})")); }), "M[1]");
  EXPECT_EQ(where_of([] { surface_from_json(json::parse(R"({"variant":"SMx","M":[["2"]]})")); }), "variant");
  EXPECT_EQ(where_of([] { surface_from_json(json::parse(R"({"variant":"SM+"})")); }), "M");
  EXPECT_EQ(where_of([] { surface_from_json(json::parse(R"({"variant":"SM+","M":[["2","1"],["1","1"]],"p":[0]})")); }),
            "p");
  EXPECT_EQ(where_of([] { rational_from_json(json(0.5), "q"); }), "q");
  EXPECT_EQ(where_of([] { integer_from_json(json("1/2"), "r"); }), "r");
}

TEST(Json, ScalarForms) {
  EXPECT_EQ(rational_from_json(json("-3/6"), ""), make_rational(-1, 2));
  EXPECT_EQ(rational_from_json(json(7), ""), Rational(7));
  EXPECT_EQ(integer_from_json(json("123456789012345678901234567890"), "").get_str(), "123456789012345678901234567890");
  EXPECT_EQ(to_json(make_rational(-1, 2)), json("-1/2"));
  EXPECT_EQ(split_complex("(x+1)/2, x^2", ""), (std::pair<std::string, std::string>{"(x+1)/2", " x^2"}));
}

TEST(Json, FieldElementFormsAgree) {
  const FieldHandle k = make_field(Poly::from_integers({1, -3, 1}));
  const FieldElement want = FieldElement::from_rational(k, Rational(-3)) + Rational(2) * FieldElement::generator(k);
  EXPECT_EQ(field_element_from_json(json("2x - 3"), k, ""), want);
  EXPECT_EQ(field_element_from_json(json::array({"-3", "2"}), k, ""), want);
  EXPECT_EQ(field_element_from_json(to_json(want), k, ""), want);
  EXPECT_EQ(field_element_from_json(to_expr(want), k, ""), want);
  // Reduction modulo the defining polynomial: x^2 = 3x - 1.
  EXPECT_EQ(field_element_from_json(json("x^2 - x - 2"), k, ""), want);
  EXPECT_THROW(field_element_from_json(json::array({"1", "2", "3"}), k, "B"), InputError);
  json wrong = to_json(want);
  wrong["poly"] = json::array({"1", "0", "1"});
  EXPECT_THROW(field_element_from_json(wrong, k, "B"), InputError);

  const ComplexElement z{want, FieldElement::one(k)};
  EXPECT_EQ(complex_from_json(json("2x-3, 1"), k, ""), z);
  EXPECT_EQ(complex_from_json(json::array({"2x-3", 1}), k, ""), z);
  EXPECT_EQ(complex_from_json(to_json(z), k, ""), z);
  EXPECT_EQ(complex_from_json(to_expr(z), k, ""), z);
}

TEST(RoundTrip, SurfaceFilesSurviveWriteAndRead) {
  for (const char* name : {"smplus.json", "sm.json", "smminus.json", "central_sqrt5.json"}) {
    const SurfaceInput s = surface_from_json(load_json_file(kExamples + "/" + name));
    const json once = surface_to_json(s);
    const SurfaceInput back = surface_from_json(parse_json_text(once.dump(2)));
    EXPECT_EQ(surface_to_json(back), once) << name;
    EXPECT_EQ(back.M, s.M);
    const auto a = build_spec(s.variant, s.M, s.params), b = build_spec(back.variant, back.M, back.params);
    EXPECT_EQ(spec_to_json(a), spec_to_json(b)) << name;
    // A report wrapping the input under "input" is accepted as input too.
    EXPECT_EQ(surface_to_json(surface_from_json(json{{"input", once}, {"extra", 1}})), once);
  }
}

TEST(RoundTrip, TorusFilesSurviveWriteAndRead) {
  for (const char* name : {"torus_torsion.json", "torus_kronecker.json", "torus_cat_map.json"}) {
    const TorusInput t = torus_from_json(load_json_file(kExamples + "/" + name));
    const json once = torus_to_json(t);
    const TorusInput back = torus_from_json(parse_json_text(once.dump()));
    EXPECT_EQ(torus_to_json(back), once) << name;
    EXPECT_EQ(back.sigma.rho, t.sigma.rho);
    const WildnessVerdict v = torus_wildness(back.spec, back.sigma, 10);
    EXPECT_TRUE(check_certificate(t.spec, t.sigma, v)) << name;
  }
}

TEST(RoundTrip, TorusDefaults) {
  const TorusInput t = torus_from_json(json::parse(R"({"dim":1,"lattice":[["1,0"],["0,1"]]})"));
  EXPECT_EQ(t.spec.field->degree(), 1u);
  EXPECT_EQ(torus_wildness(t.spec, t.sigma, 10).order, 1);
  EXPECT_EQ(where_of([] { torus_from_json(json::parse(R"({"dim":5,"lattice":[]})")); }), "dim");
  EXPECT_EQ(where_of([] { torus_from_json(json::parse(R"({"dim":1,"lattice":[["1,0"],["2,0"]]})")); }), "lattice");
}

TEST(RoundTrip, ReportsReparse) {
  const SurfaceInput s = surface_from_json(load_json_file(kExamples + "/central_sqrt5.json"));
  const auto spec = build_spec(s.variant, s.M, s.params);
  const CentralAutomorphism a{spec, complex_from_json(*s.B, spec.field, "B")};
  const CertVerdict v = decide_wild_central(a);
  const json j = to_json(v);
  EXPECT_EQ(j.at("verdict"), "Wild");
  EXPECT_EQ(parse_json_text(j.dump()), j);

  const CentralAutomorphism half{spec, ComplexElement::real(make_rational(1, 2) * spec.delta)};
  const json w = to_json(*decide_wild_central(half).witness);
  EXPECT_EQ(w, (json{{"n", 2}, {"n1", 0}, {"n2", 0}, {"l", 1}, {"k", 0}}));
  EXPECT_EQ(to_json(witness_map(half, *decide_wild_central(half).witness)).at("w_scale"),
            to_json(FieldElement::one(spec.field)));
}
