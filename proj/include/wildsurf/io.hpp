#ifndef WILDSURF_IO_HPP
#define WILDSURF_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "wildsurf/inoue.hpp"
#include "wildsurf/int_matrix.hpp"
#include "wildsurf/number_field.hpp"
#include "wildsurf/torus.hpp"
#include "wildsurf/units.hpp"
#include "wildsurf/wild_cert.hpp"

namespace wildsurf {

using json = nlohmann::ordered_json;

// Malformed input; `where` is a JSON path such as "M[1][0]" or a
// "line L, column C" position.
class InputError : public std::invalid_argument {
 public:
  InputError(const std::string& where, const std::string& what);
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// Parses a JSON document, reporting syntax errors by line and column.
json parse_json_text(const std::string& text);
json load_json_file(const std::string& path);

// Polynomial expression in x: integers, x, + - * /, ^ with a nonnegative
// integer exponent, parentheses and implicit multiplication ("2x^2 - 3").
// Division is allowed by nonzero constants only.
Poly parse_poly_expression(const std::string& text);

Integer integer_from_json(const json& j, const std::string& path);
Rational rational_from_json(const json& j, const std::string& path);
IntMatrix int_matrix_from_json(const json& j, const std::string& path);
// A value of K given as an expression string, a number, an array of
// power-basis coordinates, or {"poly": [...], "coords": [...]}.
Poly field_value_from_json(const json& j, const std::string& path, const Poly* defining_poly = nullptr);
FieldElement field_element_from_json(const json& j, const FieldHandle& k, const std::string& path);
// {"re": ..., "im": ...}, [re, im], or the string "re,im".
ComplexElement complex_from_json(const json& j, const FieldHandle& k, const std::string& path);
// Splits "re,im" at its top-level comma.
std::pair<std::string, std::string> split_complex(const std::string& text, const std::string& path);

json to_json(const Rational& q);
json to_json(const Integer& z);
json to_json(const IntMatrix& m);
json to_json(const RatMatrix& m);
json to_json(const Poly& p);
// {"poly": [...], "coords": [...]}
json to_json(const FieldElement& a);
json to_json(const ComplexElement& a);
// Compact expression forms, as accepted by the parsers above.
json to_expr(const FieldElement& a);
json to_expr(const ComplexElement& a);

struct SurfaceInput {
  InoueVariant variant = InoueVariant::SMplus;
  IntMatrix M;
  InoueParameters params;
  std::optional<json> B;  // central automorphism, parsed once the field is known
};

SurfaceInput surface_from_json(const json& j);
json surface_to_json(const SurfaceInput& s);
json spec_to_json(const InoueSurfaceSpec& s);

struct TorusInput {
  TorusSpec spec;
  TorusAutomorphism sigma;
};

TorusInput torus_from_json(const json& j);
json torus_to_json(const TorusInput& t);

json to_json(const SmithDecomposition& s);
json to_json(const CokernelInvariants& c);
json to_json(const OrderData& o);
json to_json(const UnitGroupData& u);
json to_json(const std::vector<RelationCheck>& checks);
json to_json(const AutReport& r);
json to_json(const WildnessVerdict& v);
json to_json(const DynamicalDegrees& d);
json to_json(const PeriodicWitness& w);
json to_json(const CertVerdict& v);
json to_json(const AffineMap& m);

}  // namespace wildsurf

#endif  // WILDSURF_IO_HPP
