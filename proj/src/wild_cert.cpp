#include "wildsurf/wild_cert.hpp"

#include <stdexcept>
#include <vector>

#include "wildsurf/parallel.hpp"

namespace wildsurf {

std::string to_string(CertReason r) {
  switch (r) {
    case CertReason::ImRatioIrrational: return "ImRatioIrrational";
    case CertReason::RationalDeltaCriterion: return "RationalDeltaCriterion";
    case CertReason::PeriodicWitness: return "PeriodicWitness";
    case CertReason::SearchBound: return "SearchBound";
  }
  return "SearchBound";
}

void check_central(const CentralAutomorphism& a) {
  if (a.spec.variant != InoueVariant::SMplus) throw std::invalid_argument("central automorphisms need an SM+ surface");
  if (!a.B.re.field() || !a.B.re.field()->same_as(*a.spec.field) || !a.B.im.field()->same_as(*a.spec.field))
    throw std::invalid_argument("B does not lie in the surface's field");
}

CertVerdict certify_wild_im_ratio(const CentralAutomorphism& a) {
  check_central(a);
  CertVerdict v;
  if (a.B.im.is_zero()) return v;
  if (a.spec.tau.im.is_zero()) {
    v.tag = VerdictTag::Wild;
    v.reason = CertReason::ImRatioIrrational;
    return v;
  }
  v.ratio = as_rational(a.B.im / a.spec.tau.im);
  if (!v.ratio) {
    v.tag = VerdictTag::Wild;
    v.reason = CertReason::ImRatioIrrational;
  }
  return v;
}

CertVerdict decide_wild_central(const CentralAutomorphism& a) {
  check_central(a);
  CertVerdict v;
  if (!a.B.im.is_zero()) {
    v.tag = VerdictTag::Wild;
    v.reason = CertReason::RationalDeltaCriterion;
    return v;
  }
  v.ratio = as_rational(a.B.re / a.spec.delta);
  if (!v.ratio) {
    v.tag = VerdictTag::Wild;
    v.reason = CertReason::RationalDeltaCriterion;
    return v;
  }
  // n B = l delta with l / n the reduced ratio.
  v.tag = VerdictTag::NotWild;
  v.reason = CertReason::PeriodicWitness;
  PeriodicWitness w;
  w.n = v.ratio->get_den().get_si();
  w.l = v.ratio->get_num().get_si();
  v.witness = w;
  return v;
}

AffineMap witness_map(const CentralAutomorphism& a, const PeriodicWitness& w) {
  const InoueSurfaceSpec& s = a.spec;
  GroupElement word{{Integer(w.n1), Integer(w.n2)}, Integer(w.l), w.k};
  AffineMap sigma = AffineMap::identity(s.field);
  sigma.z_shift = a.B;
  return compose(as_affine_map(s, word).inverse(), sigma.pow(w.n));
}

bool check_witness(const CentralAutomorphism& a, const PeriodicWitness& w) {
  if (w.n < 1) return false;
  const AffineMap f = witness_map(a, w);
  const FieldHandle& k = a.spec.field;
  const std::size_t emb = a.spec.alpha_embedding;
  // Fixed w: (w_scale - 1) w = -w_shift. w_scale and w_shift are real, so a
  // solution in H needs w_scale = 1 and w_shift = 0.
  if (f.w_scale != FieldElement::one(k) || !f.w_shift.is_zero()) return false;
  // Fixed z: (z_scale - 1) z = z_w_coeff w + z_shift.
  if (f.z_scale != ComplexElement::one(k)) return true;
  if (f.z_w_coeff.is_zero()) return f.z_shift.is_zero();
  ComplexElement wsol = -(f.z_shift / f.z_w_coeff);
  return sign_at(wsol.im, emb) > 0;
}

namespace {

std::vector<long> signed_order(long bound) {
  std::vector<long> out{0};
  for (long m = 1; m <= bound; ++m) {
    out.push_back(m);
    out.push_back(-m);
  }
  return out;
}

struct PairData {
  long n1, n2;
  FieldElement shift_w;       // n1 a1 + n2 a2
  ComplexElement coeff_w;     // n1 b1 + n2 b2 (k = 0)
  ComplexElement shift_z;     // n1 c1 + n2 c2 + e(n1, n2)
};

}  // namespace

CollisionScan find_periodic_collision(const CentralAutomorphism& a, long box_bound) {
  check_central(a);
  if (box_bound < 1) throw std::invalid_argument("box_bound must be >= 1");
  const InoueSurfaceSpec& s = a.spec;
  const FieldHandle& f = s.field;
  const std::size_t emb = s.alpha_embedding;
  const auto order = signed_order(box_bound);
  const long width = static_cast<long>(order.size());

  std::vector<PairData> pairs;
  for (long n1 : order)
    for (long n2 : order) {
      const Rational q1(n1), q2(n2);
      const Rational h1 = q1 * (q1 - 1) / 2, h2 = q2 * (q2 - 1) / 2;
      FieldElement e = h1 * (s.a[0] * s.b[0]) + h2 * (s.a[1] * s.b[1]) + (q1 * q2) * (s.a[1] * s.b[0]);
      pairs.push_back({n1, n2, q1 * s.a[0] + q2 * s.a[1], ComplexElement::real(q1 * s.b[0] + q2 * s.b[1]),
                       q1 * s.c[0] + q2 * s.c[1] + ComplexElement::real(e)});
    }
  // For k != 0 the w-equation (1 - alpha^k) w = n1 a1 + n2 a2 has a unique
  // solution, and it is real because both sides lie in K under a real
  // embedding; so no such tuple has a point in H.
  const FieldElement x = FieldElement::generator(f);
  for (long k : order)
    if (k != 0 && sign_at(FieldElement::one(f) - x.pow(k), emb) == 0)
      throw std::logic_error("alpha^k = 1 for k != 0");

  std::vector<CollisionScan> per_n(static_cast<std::size_t>(box_bound));
  parallel_for(per_n.size(), [&](std::size_t idx) {
    const long n = static_cast<long>(idx) + 1;
    CollisionScan& out = per_n[idx];
    const ComplexElement nb = Rational(n) * a.B;
    for (long k : order) {
      for (const auto& pd : pairs) {
        if (k != 0) {
          out.candidates += width;
          out.rejected_nonzero_k += width;
          continue;
        }
        for (long l : order) {
          ++out.candidates;
          if (!pd.shift_w.is_zero()) continue;
          const ComplexElement rest = nb - ComplexElement::real(Rational(l) * s.delta) - pd.shift_z;
          bool hit;
          if (pd.coeff_w.is_zero()) {
            hit = rest.is_zero();
          } else {
            ComplexElement w = rest / pd.coeff_w;
            hit = sign_at(w.im, emb) > 0;
          }
          if (hit) {
            out.witness = PeriodicWitness{n, pd.n1, pd.n2, l, k};
            return;
          }
        }
      }
    }
  });

  CollisionScan total;
  for (const auto& part : per_n) {
    total.candidates += part.candidates;
    total.rejected_nonzero_k += part.rejected_nonzero_k;
    if (part.witness) {
      total.witness = part.witness;
      break;
    }
  }
  return total;
}

}  // namespace wildsurf
