#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

#include "wildsurf/inoue.hpp"
#include "wildsurf/int_matrix.hpp"
#include "wildsurf/io.hpp"
#include "wildsurf/parallel.hpp"
#include "wildsurf/torus.hpp"
#include "wildsurf/units.hpp"
#include "wildsurf/wild_cert.hpp"

namespace wildsurf::cli {

namespace {

struct Options {
  std::string command;
  std::string file;
  long height_bound = 10;
  long coeff_bound = 12;
  long box_bound = 6;
  std::string format = "text";
  std::string B;
  std::string variant;
  std::string range;
};

class Session {
 public:
  Session(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int dispatch() {
    const std::string& c = o_.command;
    if (c == "validate") return validate_cmd();
    if (c == "build") return build_cmd();
    if (c == "relations") return relations_cmd();
    if (c == "aut-report") return aut_report_cmd();
    if (c == "torus-wild") return torus_wild_cmd();
    if (c == "entropy") return entropy_cmd();
    if (c == "cert-wild") return cert_wild_cmd();
    if (c == "enumerate") return enumerate_cmd();
    if (c == "snf") return snf_cmd();
    if (c == "units") return units_cmd();
    throw InputError("", "unknown command " + c);
  }

 private:
  bool text() const { return o_.format == "text"; }

  json load() const {
    if (o_.file.empty()) throw InputError("-f", "an input file is required for " + o_.command);
    return load_json_file(o_.file);
  }

  SurfaceInput surface() const { return surface_from_json(load()); }

  InoueSurfaceSpec spec_of(const SurfaceInput& s) const { return build_spec(s.variant, s.M, s.params); }

  json header(json input) const { return json{{"command", o_.command}, {"input", std::move(input)}}; }

  void emit(const json& report) const { out_ << report.dump(2) << "\n"; }

  int validate_cmd() {
    const SurfaceInput s = surface();
    json report = header(surface_to_json(s));
    try {
      validate(s.variant, s.M);
    } catch (const ValidationError& e) {
      if (text()) {
        out_ << "invalid " << to_string(s.variant) << ": " << e.what() << "\n";
      } else {
        report["valid"] = false;
        report["code"] = to_string(e.code());
        report["message"] = e.what();
        emit(report);
      }
      return kExitInvalid;
    }
    if (text()) {
      out_ << "valid " << to_string(s.variant) << "\n";
    } else {
      report["valid"] = true;
      report["variant"] = to_string(s.variant);
      emit(report);
    }
    return kExitOk;
  }

  int build_cmd() {
    const SurfaceInput s = surface();
    const InoueSurfaceSpec spec = spec_of(s);
    if (text()) {
      out_ << "variant " << to_string(spec.variant) << "\n";
      out_ << "field Q[x]/(" << spec.field->defining_poly().to_string('x') << "), alpha ~ "
           << approx(FieldElement::generator(spec.field), spec.alpha_embedding).real() << "\n";
      for (std::size_t i = 0; i < spec.v.size(); ++i) out_ << "v" << i + 1 << " = " << spec.v[i].to_string() << "\n";
      if (spec.variant != InoueVariant::SM) {
        for (std::size_t i = 0; i < spec.b.size(); ++i) out_ << "b" << i + 1 << " = " << spec.b[i].to_string() << "\n";
        out_ << "delta = " << spec.delta.to_string() << "\n";
        for (std::size_t i = 0; i < spec.c.size(); ++i)
          out_ << "c" << i + 1 << " = (" << spec.c[i].re.to_string() << ") + i(" << spec.c[i].im.to_string() << ")\n";
      }
      return kExitOk;
    }
    json report = header(surface_to_json(s));
    report["spec"] = spec_to_json(spec);
    emit(report);
    return kExitOk;
  }

  int relations_cmd() {
    const SurfaceInput s = surface();
    const InoueSurfaceSpec spec = spec_of(s);
    const auto checks = verify_relations(spec);
    const bool all = std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.pass; });
    if (text()) {
      for (const auto& c : checks) out_ << (c.pass ? "PASS " : "FAIL ") << c.id << "\n";
      out_ << (all ? "all relations hold" : "some relations fail") << "\n";
    } else {
      json report = header(surface_to_json(s));
      report["all_pass"] = all;
      report["relations"] = to_json(checks);
      emit(report);
    }
    return all ? kExitOk : kExitInvalid;
  }

  int aut_report_cmd() {
    const SurfaceInput s = surface();
    const InoueSurfaceSpec spec = spec_of(s);
    const AutReport r = aut_report(spec, o_.coeff_bound);
    if (text()) {
      out_ << "variant " << to_string(r.variant) << "\n";
      out_ << "coker(I - M) order " << (r.coker.free_rank ? std::string("infinite") : r.coker.torsion_order().get_str())
           << "\n";
      out_ << "det(I - M) = " << r.det_i_minus_m << ", det(I + M) = " << r.det_i_plus_m << "\n";
      out_ << "commutant quotient order "
           << (r.commutant_quotient_order ? r.commutant_quotient_order->get_str()
                                          : "Unknown(coeff_bound " + std::to_string(r.coeff_bound) + ")")
           << "\n";
      out_ << r.classification << "\n";
    } else {
      json report = header(surface_to_json(s));
      report["report"] = to_json(r);
      emit(report);
    }
    return r.commutant_quotient_order ? kExitOk : kExitUnknown;
  }

  static std::string verdict_text(const WildnessVerdict& v) {
    std::string s = to_string(v.tag) + "(" + to_string(v.certificate);
    if (v.certificate == TorusCertificate::TorsionWitness) s += " " + v.order.get_str();
    if (v.certificate == TorusCertificate::SubtorusWitness) s += " k=" + v.order.get_str();
    return s + ")";
  }

  int torus_wild_cmd() {
    const TorusInput t = torus_from_json(load());
    const WildnessVerdict v = torus_wildness(t.spec, t.sigma, o_.height_bound);
    const bool checked = v.tag == VerdictTag::Unknown || check_certificate(t.spec, t.sigma, v);
    if (text()) {
      out_ << verdict_text(v) << "\n";
      out_ << "quotient real dimension " << v.quotient_dim << "\n";
      out_ << "certificate " << (checked ? "re-checked" : "FAILED re-check") << "\n";
      for (const auto& w : v.warnings) out_ << "warning: " << w << "\n";
    } else {
      json report = header(torus_to_json(t));
      report["rho"] = to_json(t.sigma.rho);
      report["verdict"] = to_json(v);
      report["certificate_checked"] = checked;
      emit(report);
    }
    if (!checked) return kExitInvalid;
    return v.tag == VerdictTag::Unknown ? kExitUnknown : kExitOk;
  }

  int entropy_cmd() {
    const TorusInput t = torus_from_json(load());
    const DynamicalDegrees d = dynamical_degrees(t.spec, t.sigma);
    if (text()) {
      out_ << (d.zero_entropy ? "zero entropy" : "positive entropy") << "\n";
      for (std::size_t k = 0; k < d.degrees.size(); ++k)
        out_ << "d" << k << " in [" << d.degrees[k].lo.get_d() << ", " << d.degrees[k].hi.get_d() << "]\n";
      out_.precision(12);
      out_ << "entropy in [" << d.entropy_lo << ", " << d.entropy_hi << "]\n";
    } else {
      json report = header(torus_to_json(t));
      report["rho"] = to_json(t.sigma.rho);
      report["entropy"] = to_json(d);
      emit(report);
    }
    return kExitOk;
  }

  int cert_wild_cmd() {
    SurfaceInput s = surface();
    if (!o_.B.empty()) {
      auto [re, im] = split_complex(o_.B, "--B");
      s.B = json{{"re", re}, {"im", im}};
    }
    if (!s.B) throw InputError("B", "cert-wild needs --B \"re,im\" or a \"B\" field in the input");
    if (s.variant != InoueVariant::SMplus) throw InputError("variant", "central automorphisms are defined for SM+");
    const InoueSurfaceSpec spec = spec_of(s);
    CentralAutomorphism a{spec, complex_from_json(*s.B, spec.field, "B")};
    s.B = to_expr(a.B);

    const CertVerdict im_ratio = certify_wild_im_ratio(a);
    const CertVerdict sharp = decide_wild_central(a);
    const CollisionScan scan = find_periodic_collision(a, o_.box_bound);
    const CertVerdict& final = im_ratio.tag == VerdictTag::Wild ? im_ratio : sharp;
    const bool witness_ok = !sharp.witness || check_witness(a, *sharp.witness);
    const bool scan_ok = !scan.witness || check_witness(a, *scan.witness);
    // A falsifier hit contradicts a Wild verdict; a sound pair never disagrees.
    const bool consistent = witness_ok && scan_ok && !(final.tag == VerdictTag::Wild && scan.witness);

    if (text()) {
      out_ << to_string(final.tag) << "(" << to_string(final.reason) << ")\n";
      out_ << "im-ratio certificate: " << to_string(im_ratio.tag) << "(" << to_string(im_ratio.reason) << ")\n";
      out_ << "sharp criterion: " << to_string(sharp.tag) << "(" << to_string(sharp.reason) << ")";
      if (sharp.witness) {
        const auto& w = *sharp.witness;
        out_ << " witness (" << w.n << "," << w.n1 << "," << w.n2 << "," << w.l << "," << w.k << ")";
      }
      out_ << "\nfalsifier (box " << o_.box_bound << "): " << scan.candidates << " candidates, ";
      if (scan.witness) {
        const auto& w = *scan.witness;
        out_ << "collision (" << w.n << "," << w.n1 << "," << w.n2 << "," << w.l << "," << w.k << ")\n";
      } else {
        out_ << "no collision\n";
      }
      if (!consistent) out_ << "INCONSISTENT certificates\n";
    } else {
      json report = header(surface_to_json(s));
      report["verdict"] = to_json(final);
      report["im_ratio_certificate"] = to_json(im_ratio);
      report["sharp_criterion"] = to_json(sharp);
      json f{{"box_bound", o_.box_bound},
             {"candidates", scan.candidates},
             {"rejected_nonzero_k", scan.rejected_nonzero_k}};
      f["witness"] = scan.witness ? to_json(*scan.witness) : json(nullptr);
      report["falsifier"] = std::move(f);
      report["witness_checked"] = witness_ok && scan_ok;
      report["consistent"] = consistent;
      emit(report);
    }
    if (!consistent) return kExitInvalid;
    return final.tag == VerdictTag::Unknown ? kExitUnknown : kExitOk;
  }

  struct EnumItem {
    IntMatrix M;
    CokernelInvariants coker;
    std::optional<Integer> commutant;
  };

  int enumerate_cmd() {
    if (o_.variant.empty()) throw InputError("--variant", "enumerate needs --variant");
    if (o_.range.empty()) throw InputError("--range", "enumerate needs --range lo,hi");
    InoueVariant variant;
    try {
      variant = parse_variant(o_.variant);
    } catch (const std::invalid_argument& e) {
      throw InputError("--variant", e.what());
    }
    long lo = 0, hi = 0;
    {
      const auto comma = o_.range.find(',');
      if (comma == std::string::npos) throw InputError("--range", "expected lo,hi");
      try {
        lo = std::stol(o_.range.substr(0, comma));
        hi = std::stol(o_.range.substr(comma + 1));
      } catch (const std::exception&) {
        throw InputError("--range", "expected two integers lo,hi");
      }
    }
    if (lo > hi) throw InputError("--range", "empty range");
    const long width = hi - lo + 1;
    const long cap = variant == InoueVariant::SM ? 2001 : 41;
    if (width > cap) throw InputError("--range", "at most " + std::to_string(cap) + " values per entry");

    std::vector<IntMatrix> candidates;
    if (variant == InoueVariant::SM) {
      // Companion matrices of t^3 + a t^2 + b t - 1.
      for (long a = lo; a <= hi; ++a)
        for (long b = lo; b <= hi; ++b)
          candidates.push_back(IntMatrix{{Integer(0), Integer(0), Integer(1)},
                                         {Integer(1), Integer(0), Integer(-b)},
                                         {Integer(0), Integer(1), Integer(-a)}});
    } else {
      for (long m11 = lo; m11 <= hi; ++m11)
        for (long m12 = lo; m12 <= hi; ++m12)
          for (long m21 = lo; m21 <= hi; ++m21)
            for (long m22 = lo; m22 <= hi; ++m22)
              candidates.push_back(IntMatrix{{Integer(m11), Integer(m12)}, {Integer(m21), Integer(m22)}});
    }

    std::vector<std::optional<EnumItem>> results(candidates.size());
    parallel_for(candidates.size(), [&](std::size_t i) {
      const IntMatrix& m = candidates[i];
      try {
        validate(variant, m);
      } catch (const ValidationError&) {
        return;
      }
      const std::size_t n = m.rows();
      IntMatrix i_minus_m = int_identity(n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) i_minus_m(r, c) -= m(r, c);
      results[i] = EnumItem{m, cokernel_invariants(i_minus_m), commutant_quotient_order(m, o_.coeff_bound)};
    });

    bool any_unknown = false;
    json items = json::array();
    for (const auto& r : results) {
      if (!r) continue;
      any_unknown = any_unknown || !r->commutant;
      const std::string cq = r->commutant ? r->commutant->get_str() : "Unknown";
      if (text()) {
        out_ << to_string(variant) << " M=" << to_string(r->M) << " trace=" << trace(r->M)
             << " coker_order=" << r->coker.torsion_order() << " commutant_quotient=" << cq << "\n";
      } else {
        json item{{"M", to_json(r->M)}, {"trace", to_json(trace(r->M))}, {"coker", to_json(r->coker)}};
        item["coker_order"] = to_json(r->coker.torsion_order());
        item["commutant_quotient_order"] = r->commutant ? to_json(*r->commutant) : json(nullptr);
        items.push_back(std::move(item));
      }
    }
    if (!text()) {
      json report{{"command", "enumerate"},
                  {"variant", to_string(variant)},
                  {"range", json::array({lo, hi})},
                  {"coeff_bound", o_.coeff_bound},
                  {"count", items.size()},
                  {"items", std::move(items)}};
      emit(report);
    }
    return any_unknown ? kExitUnknown : kExitOk;
  }

  IntMatrix matrix_input() const {
    const json root = load();
    const json& j = root.is_object() && root.contains("input") ? root["input"] : root;
    if (!j.is_object() || !j.contains("M")) throw InputError("M", "missing field");
    return int_matrix_from_json(j["M"], "M");
  }

  int snf_cmd() {
    const IntMatrix m = matrix_input();
    const SmithDecomposition s = smith_normal_form(m);
    const CokernelInvariants c = cokernel_invariants(m);
    if (text()) {
      out_ << "D = " << to_string(s.D) << "\nU = " << to_string(s.U) << "\nV = " << to_string(s.V) << "\n";
      out_ << "cokernel: free rank " << c.free_rank << ", torsion order " << c.torsion_order() << "\n";
    } else {
      json report = header(json{{"M", to_json(m)}});
      report["snf"] = to_json(s);
      report["cokernel"] = to_json(c);
      emit(report);
    }
    return kExitOk;
  }

  int units_cmd() {
    const IntMatrix m = matrix_input();
    const OrderData order = matrix_order(m);
    const UnitGroupData u = unit_group(m, o_.coeff_bound);
    std::optional<Integer> cq;
    if (abs(det(m)) == 1) cq = commutant_quotient_order(m, o_.coeff_bound);
    if (text()) {
      out_ << "field Q[x]/(" << u.field->defining_poly().to_string('x') << ")\n";
      out_ << "order basis";
      for (std::size_t i = 0; i < order.basis.rows(); ++i) {
        out_ << (i ? "; " : " [");
        for (std::size_t c = 0; c < order.basis.cols(); ++c) out_ << (c ? "," : "") << to_string(order.basis(i, c));
      }
      out_ << "]\n";
      out_ << "fundamental unit "
           << (u.fundamental_unit ? u.fundamental_unit->to_string() : "Unknown(coeff_bound " + std::to_string(u.coeff_bound) + ")")
           << "\n";
      if (abs(det(m)) == 1) out_ << "commutant quotient order " << (cq ? cq->get_str() : "Unknown") << "\n";
    } else {
      json report = header(json{{"M", to_json(m)}});
      report["order"] = to_json(order);
      report["units"] = to_json(u);
      report["commutant_quotient_order"] = cq ? to_json(*cq) : json(nullptr);
      emit(report);
    }
    if (!u.fundamental_unit) return kExitUnknown;
    if (abs(det(m)) == 1 && !cq) return kExitUnknown;
    return kExitOk;
  }

  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  const CLI::Validator count_check(
      [](std::string& v) {
        try {
          if (std::stol(v) >= 1) return std::string();
        } catch (const std::exception&) {
        }
        return std::string("must be an integer >= 1");
      }, "COUNT");
  CLI::App app{"Exact computations for Inoue surfaces and complex tori", "wildsurf"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-f,--file", o.file, "input JSON file");
  app.add_option("--height-bound", o.height_bound, "height bound recorded with torus verdicts")->check(count_check);
  app.add_option("--coeff-bound", o.coeff_bound, "coefficient box for the unit scan")->check(count_check);
  app.add_option("--box-bound", o.box_bound, "box for the periodic-collision falsifier")->check(count_check);
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--B", o.B, "central automorphism B as \"re,im\" in x");
  app.add_option("--variant", o.variant, "SM, SM+ or SM-");
  app.add_option("--range", o.range, "inclusive entry range lo,hi");
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "check admissibility of M"},
      {"build", "derive eigen data, delta and c"},
      {"relations", "verify the defining relations of the deck group"},
      {"aut-report", "cokernel and commutant data for Aut(X)"},
      {"torus-wild", "decide wildness of a torus automorphism"},
      {"entropy", "dynamical degrees and entropy of a torus automorphism"},
      {"cert-wild", "certify a central automorphism of an SM+ surface"},
      {"enumerate", "list admissible matrices in a range"},
      {"snf", "Smith normal form of M"},
      {"units", "order, fundamental unit and commutant quotient of M"}};
  for (const auto& [name, help] : commands)
    app.add_subcommand(name, help)->callback([&o, name = name] { o.command = name; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    return Session(o, out).dispatch();
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInvalid;
}

}  // namespace wildsurf::cli
