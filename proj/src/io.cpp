#include "wildsurf/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace wildsurf {

InputError::InputError(const std::string& where, const std::string& what)
    : std::invalid_argument(where.empty() ? what : where + ": " + what), where_(where) {}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    // nlohmann messages read "[json.exception.parse_error.101] parse error at ...: detail".
    if (auto pos = what.rfind(": "); pos != std::string::npos) what = what.substr(pos + 2);
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(col), what);
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json_text(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ", " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
  }
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(const std::string& text) : s_(text) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("expression \"" + s_ + "\", offset " + std::to_string(pos_), msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  Poly expr() {
    Poly p = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        p = p + term();
      } else if (peek('-')) {
        ++pos_;
        p = p - term();
      } else {
        return p;
      }
    }
  }

  Poly term() {
    Poly p = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        p = p * unary();
      } else if (peek('/')) {
        ++pos_;
        Poly d = unary();
        if (d.degree() != 0) fail("division by a non-constant or zero");
        p = (Rational(1) / d.coeff(0)) * p;
      } else if (starts_factor()) {
        p = p * power();
      } else {
        return p;
      }
    }
  }

  Poly unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (!peek('^')) return base;
    ++pos_;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    if (pos_ - start > 4) fail("exponent too large");
    return wildsurf::pow(base, static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == 'x') {
      ++pos_;
      return Poly::x();
    }
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '.') fail("decimal numbers are not exact; write p/q");
      return Poly::constant(Rational(Integer(s_.substr(start, pos_ - start))));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

std::string index_path(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string key_path(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

const json& require_key(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw InputError(path.empty() ? "<root>" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(key_path(path, key), "missing field");
  return *it;
}

const json* optional_key(const json& j, const std::string& key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

const json& unwrap_input(const json& j) {
  if (j.is_object() && j.contains("input") && j["input"].is_object()) return j["input"];
  return j;
}

std::pair<Poly, Poly> complex_polys(const json& j, const std::string& path, const Poly* defining) {
  if (j.is_object()) {
    Poly re, im;
    if (auto* r = optional_key(j, "re")) re = field_value_from_json(*r, key_path(path, "re"), defining);
    if (auto* i = optional_key(j, "im")) im = field_value_from_json(*i, key_path(path, "im"), defining);
    if (!j.contains("re") && !j.contains("im")) throw InputError(path, "expected \"re\" and/or \"im\"");
    return {re, im};
  }
  if (j.is_array()) {
    if (j.size() != 2) throw InputError(path, "expected [re, im]");
    return {field_value_from_json(j[0], index_path(path, 0), defining),
            field_value_from_json(j[1], index_path(path, 1), defining)};
  }
  if (j.is_string()) {
    auto [re, im] = split_complex(j.get<std::string>(), path);
    return {field_value_from_json(json(re), path + ".re", defining), field_value_from_json(json(im), path + ".im", defining)};
  }
  if (j.is_number_integer()) return {field_value_from_json(j, path, defining), Poly()};
  throw InputError(path, "expected a complex value");
}

}  // namespace

Poly parse_poly_expression(const std::string& text) { return ExprParser(text).parse(); }

std::pair<std::string, std::string> split_complex(const std::string& text, const std::string& path) {
  int depth = 0;
  std::size_t comma = std::string::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      if (comma != std::string::npos) throw InputError(path, "expected \"re,im\" with a single top-level comma");
      comma = i;
    }
  }
  if (comma == std::string::npos) throw InputError(path, "expected \"re,im\"");
  return {text.substr(0, comma), text.substr(comma + 1)};
}

Integer integer_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<unsigned long>()) : Integer(j.get<long>());
  if (j.is_string()) {
    Rational q;
    try {
      q = parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(path, e.what());
    }
    if (q.get_den() != 1) throw InputError(path, "expected an integer");
    return q.get_num();
  }
  throw InputError(path, "expected an integer");
}

Rational rational_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(integer_from_json(j, path));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      throw InputError(path, e.what());
    }
  }
  if (j.is_number_float()) throw InputError(path, "floating-point values are not exact; write \"p/q\"");
  throw InputError(path, "expected a rational");
}

IntMatrix int_matrix_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw InputError(path, "expected a nonempty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw InputError(index_path(path, 0), "expected a nonempty row");
  const std::size_t cols = j[0].size();
  IntMatrix m(rows, cols, Integer(0));
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rp = index_path(path, i);
    if (!j[i].is_array() || j[i].size() != cols) throw InputError(rp, "expected a row of length " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = integer_from_json(j[i][c], index_path(rp, c));
  }
  return m;
}

Poly field_value_from_json(const json& j, const std::string& path, const Poly* defining_poly) {
  if (j.is_string()) {
    const std::string text = j.get<std::string>();
    try {
      return parse_poly_expression(text);
    } catch (const InputError& e) {
      throw InputError(path, e.what());
    }
  }
  if (j.is_number()) return Poly::constant(rational_from_json(j, path));
  const json* coords = &j;
  if (j.is_object()) {
    coords = &require_key(j, "coords", path);
    if (defining_poly) {
      if (auto* p = optional_key(j, "poly")) {
        std::vector<Rational> c;
        if (!p->is_array()) throw InputError(key_path(path, "poly"), "expected a coefficient array");
        for (std::size_t i = 0; i < p->size(); ++i) c.push_back(rational_from_json((*p)[i], index_path(key_path(path, "poly"), i)));
        if (Poly(c) != *defining_poly)
          throw InputError(key_path(path, "poly"), "does not match the field's defining polynomial " + defining_poly->to_string('x'));
      }
    }
  }
  if (!coords->is_array()) throw InputError(path, "expected an expression, a number or a coordinate array");
  std::vector<Rational> c;
  for (std::size_t i = 0; i < coords->size(); ++i) c.push_back(rational_from_json((*coords)[i], index_path(path, i)));
  if (defining_poly && c.size() > static_cast<std::size_t>(defining_poly->degree()))
    throw InputError(path, "more coordinates than the field degree");
  return Poly(c);
}

FieldElement field_element_from_json(const json& j, const FieldHandle& k, const std::string& path) {
  return FieldElement::from_poly(k, field_value_from_json(j, path, &k->defining_poly()));
}

ComplexElement complex_from_json(const json& j, const FieldHandle& k, const std::string& path) {
  auto [re, im] = complex_polys(j, path, &k->defining_poly());
  return {FieldElement::from_poly(k, re), FieldElement::from_poly(k, im)};
}

json to_json(const Rational& q) { return to_string(q); }
json to_json(const Integer& z) { return z.get_str(); }

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c).get_str());
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const RatMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(i, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const Poly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

json to_json(const FieldElement& a) {
  json coords = json::array();
  for (const auto& c : a.coords()) coords.push_back(to_string(c));
  return json{{"poly", to_json(a.field()->defining_poly())}, {"coords", std::move(coords)}};
}

json to_json(const ComplexElement& a) { return json{{"re", to_json(a.re)}, {"im", to_json(a.im)}}; }
json to_expr(const FieldElement& a) { return a.to_string(); }
json to_expr(const ComplexElement& a) { return json{{"re", a.re.to_string()}, {"im", a.im.to_string()}}; }

namespace {

json interval_json(const Interval& i) {
  return json{{"lo", to_string(i.lo)}, {"hi", to_string(i.hi)}, {"lo_approx", i.lo.get_d()}, {"hi_approx", i.hi.get_d()}};
}

json field_json(const FieldHandle& k) {
  return json{{"poly", to_json(k->defining_poly())}, {"poly_text", k->defining_poly().to_string('x')}};
}

template <class T>
json array_of(const std::vector<T>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

}  // namespace

SurfaceInput surface_from_json(const json& root) {
  const json& j = unwrap_input(root);
  SurfaceInput s;
  const json& variant = require_key(j, "variant", "");
  if (!variant.is_string()) throw InputError("variant", "expected \"SM\", \"SM+\" or \"SM-\"");
  try {
    s.variant = parse_variant(variant.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError("variant", e.what());
  }
  s.M = int_matrix_from_json(require_key(j, "M", ""), "M");
  if (auto* r = optional_key(j, "r")) s.params.r = integer_from_json(*r, "r");
  if (auto* p = optional_key(j, "p")) {
    if (!p->is_array() || p->size() != 2) throw InputError("p", "expected [p1, p2]");
    s.params.p = {integer_from_json((*p)[0], "p[0]"), integer_from_json((*p)[1], "p[1]")};
  }
  if (auto* tau = optional_key(j, "tau")) {
    auto [re, im] = complex_polys(*tau, "tau", nullptr);
    s.params.tau_re = re;
    s.params.tau_im = im;
  }
  if (auto* b = optional_key(j, "B")) s.B = *b;
  return s;
}

json surface_to_json(const SurfaceInput& s) {
  json out{{"variant", to_string(s.variant)}, {"M", to_json(s.M)}};
  if (s.variant != InoueVariant::SM) {
    out["r"] = s.params.r.get_str();
    out["p"] = json::array({s.params.p[0].get_str(), s.params.p[1].get_str()});
    out["tau"] = json{{"re", s.params.tau_re.to_string('x')}, {"im", s.params.tau_im.to_string('x')}};
  }
  if (s.B) out["B"] = *s.B;
  return out;
}

json spec_to_json(const InoueSurfaceSpec& s) {
  const auto alpha = approx(FieldElement::generator(s.field), s.alpha_embedding);
  json out{{"variant", to_string(s.variant)},
           {"M", to_json(s.M)},
           {"field", field_json(s.field)},
           {"alpha_embedding", s.alpha_embedding},
           {"z_embedding", s.z_embedding},
           {"alpha_approx", alpha.real()},
           {"v", array_of(s.v)},
           {"a", array_of(s.a)},
           {"b", array_of(s.b)}};
  if (s.variant == InoueVariant::SM) {
    const auto beta = approx(FieldElement::generator(s.field), s.z_embedding);
    out["beta_approx"] = json::array({beta.real(), beta.imag()});
  } else {
    out["r"] = s.r.get_str();
    out["p"] = json::array({s.p[0].get_str(), s.p[1].get_str()});
    out["tau"] = to_json(s.tau);
    out["c"] = array_of(s.c);
    out["delta"] = to_json(s.delta);
  }
  return out;
}

TorusInput torus_from_json(const json& root) {
  const json& j = unwrap_input(root);
  TorusInput t;
  const json& dim = require_key(j, "dim", "");
  if (!dim.is_number_integer() || dim.get<long>() < 1 || dim.get<long>() > 4)
    throw InputError("dim", "expected an integer in 1..4");
  const std::size_t n = dim.get<std::size_t>();
  t.spec.dim = n;

  if (auto* f = optional_key(j, "field")) {
    Poly p;
    if (f->is_string()) {
      p = field_value_from_json(*f, "field");
    } else if (f->is_array()) {
      std::vector<Rational> c;
      for (std::size_t i = 0; i < f->size(); ++i) c.push_back(rational_from_json((*f)[i], index_path("field", i)));
      p = Poly(c);
    } else {
      throw InputError("field", "expected a polynomial expression or coefficient array");
    }
    if (p.degree() == 1 && p == Poly::x()) {
      t.spec.field = rational_field();
    } else {
      try {
        t.spec.field = make_field(p);
      } catch (const std::invalid_argument& e) {
        throw InputError("field", e.what());
      }
    }
  } else {
    t.spec.field = rational_field();
  }
  const FieldHandle& k = t.spec.field;

  if (auto* e = optional_key(j, "embedding")) {
    if (!e->is_number_integer() || e->get<long>() < 0 || e->get<std::size_t>() >= k->degree())
      throw InputError("embedding", "expected an embedding index below the field degree");
    t.spec.embedding = e->get<std::size_t>();
    if (!k->embedding(t.spec.embedding).is_real) throw InputError("embedding", "embedding must be real");
  } else if (k->num_real_embeddings() == 0) {
    throw InputError("field", "the field has no real embedding");
  } else {
    t.spec.embedding = k->dominant_real_embedding();
  }

  auto vector_from = [&](const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != n) throw InputError(path, "expected " + std::to_string(n) + " complex entries");
    ComplexVector out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(complex_from_json(v[i], k, index_path(path, i)));
    return out;
  };

  const json& lattice = require_key(j, "lattice", "");
  if (!lattice.is_array() || lattice.size() != 2 * n)
    throw InputError("lattice", "expected " + std::to_string(2 * n) + " generators");
  for (std::size_t i = 0; i < lattice.size(); ++i) t.spec.lattice.push_back(vector_from(lattice[i], index_path("lattice", i)));
  try {
    t.spec.check();
  } catch (const std::invalid_argument& e) {
    throw InputError("lattice", e.what());
  }

  ComplexMatrix a(n, n, ComplexElement::zero(k));
  if (auto* am = optional_key(j, "A")) {
    if (!am->is_array() || am->size() != n) throw InputError("A", "expected " + std::to_string(n) + " rows");
    for (std::size_t i = 0; i < n; ++i) {
      ComplexVector row = vector_from((*am)[i], index_path("A", i));
      for (std::size_t c = 0; c < n; ++c) a(i, c) = row[c];
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) a(i, i) = ComplexElement::one(k);
  }
  ComplexVector b(n, ComplexElement::zero(k));
  if (auto* bv = optional_key(j, "b")) b = vector_from(*bv, "b");
  try {
    t.sigma = translation_normal_form(t.spec, a, b);
  } catch (const std::invalid_argument& e) {
    throw InputError("A", e.what());
  }
  return t;
}

json torus_to_json(const TorusInput& t) {
  const FieldHandle& k = t.spec.field;
  json out{{"dim", t.spec.dim}};
  if (k->degree() > 1) {
    out["field"] = k->defining_poly().to_string('x');
    out["embedding"] = t.spec.embedding;
  }
  auto vec = [](const ComplexVector& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back(to_expr(c));
    return a;
  };
  json lattice = json::array();
  for (const auto& l : t.spec.lattice) lattice.push_back(vec(l));
  out["lattice"] = std::move(lattice);
  json a = json::array();
  for (std::size_t i = 0; i < t.sigma.A.rows(); ++i) a.push_back(vec(t.sigma.A.row(i)));
  out["A"] = std::move(a);
  out["b"] = vec(t.sigma.b);
  return out;
}

json to_json(const SmithDecomposition& s) {
  return json{{"U", to_json(s.U)}, {"D", to_json(s.D)}, {"V", to_json(s.V)}, {"diagonal", array_of(s.diagonal())}};
}

json to_json(const CokernelInvariants& c) {
  json out{{"free_rank", c.free_rank}, {"torsion", array_of(c.torsion)}};
  out["order"] = c.free_rank == 0 ? to_json(c.torsion_order()) : json(nullptr);
  return out;
}

json to_json(const OrderData& o) { return json{{"ambient", to_json(o.ambient)}, {"basis", to_json(o.basis)}}; }

json to_json(const UnitGroupData& u) {
  json out{{"field", field_json(u.field)},
           {"torsion_order", u.torsion_order},
           {"unit_rank", u.unit_rank},
           {"coeff_bound", u.coeff_bound}};
  out["fundamental_unit"] = u.fundamental_unit ? to_json(*u.fundamental_unit) : json(nullptr);
  out["fundamental_unit_text"] = u.fundamental_unit ? json(u.fundamental_unit->to_string()) : json(nullptr);
  out["fundamental_unit_matrix"] = u.fundamental_unit_matrix ? to_json(*u.fundamental_unit_matrix) : json(nullptr);
  return out;
}

json to_json(const AffineMap& m) {
  return json{{"w_scale", to_json(m.w_scale)},
              {"w_shift", to_json(m.w_shift)},
              {"z_scale", to_json(m.z_scale)},
              {"z_w_coeff", to_json(m.z_w_coeff)},
              {"z_shift", to_json(m.z_shift)}};
}

json to_json(const std::vector<RelationCheck>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back(json{{"id", c.id}, {"pass", c.pass}, {"residue", to_json(c.residue)}});
  return out;
}

json to_json(const AutReport& r) {
  json out{{"variant", to_string(r.variant)},
           {"coker_i_minus_m", to_json(r.coker)},
           {"det_i_minus_m", to_json(r.det_i_minus_m)},
           {"det_i_plus_m", to_json(r.det_i_plus_m)},
           {"coeff_bound", r.coeff_bound},
           {"classification", r.classification}};
  out["commutant_quotient_order"] = r.commutant_quotient_order ? to_json(*r.commutant_quotient_order) : json(nullptr);
  out["commutant_verdict"] = r.commutant_quotient_order ? "Finite" : "Unknown";
  return out;
}

json to_json(const WildnessVerdict& v) {
  json point = json::array();
  for (const auto& q : v.quotient_point) point.push_back(to_json(q));
  json out{{"verdict", to_string(v.tag)},
           {"certificate", to_string(v.certificate)},
           {"quotient_dim", v.quotient_dim},
           {"quotient_point", std::move(point)},
           {"quotient_projection", to_json(v.quotient_projection)},
           {"order", to_json(v.order)},
           {"sublattice", to_json(v.sublattice)},
           {"height_bound", v.height_bound},
           {"warnings", v.warnings}};
  return out;
}

json to_json(const DynamicalDegrees& d) {
  json degrees = json::array();
  for (const auto& i : d.degrees) degrees.push_back(interval_json(i));
  return json{{"zero_entropy", d.zero_entropy},
              {"degrees", std::move(degrees)},
              {"entropy_lo", d.entropy_lo},
              {"entropy_hi", d.entropy_hi}};
}

json to_json(const PeriodicWitness& w) {
  return json{{"n", w.n}, {"n1", w.n1}, {"n2", w.n2}, {"l", w.l}, {"k", w.k}};
}

json to_json(const CertVerdict& v) {
  json out{{"verdict", to_string(v.tag)}, {"reason", to_string(v.reason)}};
  out["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
  out["ratio"] = v.ratio ? to_json(*v.ratio) : json(nullptr);
  return out;
}

}  // namespace wildsurf
