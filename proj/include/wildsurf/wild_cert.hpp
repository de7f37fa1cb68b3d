#ifndef WILDSURF_WILD_CERT_HPP
#define WILDSURF_WILD_CERT_HPP

#include <optional>
#include <string>

#include "wildsurf/inoue.hpp"
#include "wildsurf/torus.hpp"

namespace wildsurf {

// (w, z) -> (w, z + B) on an SM+ surface, B = re + i im with re, im in K.
struct CentralAutomorphism {
  InoueSurfaceSpec spec;
  ComplexElement B;
};

// Throws std::invalid_argument unless the surface is SM+ and B lies in its field.
void check_central(const CentralAutomorphism& a);

// sigma~^n (w, z) = g1^n1 g2^n2 g3^l g0^k (w, z) for some (w, z) with Im w > 0.
struct PeriodicWitness {
  long n = 0, n1 = 0, n2 = 0, l = 0, k = 0;
  friend bool operator==(const PeriodicWitness& a, const PeriodicWitness& b) {
    return a.n == b.n && a.n1 == b.n1 && a.n2 == b.n2 && a.l == b.l && a.k == b.k;
  }
};

enum class CertReason { ImRatioIrrational, RationalDeltaCriterion, PeriodicWitness, SearchBound };

std::string to_string(CertReason r);

struct CertVerdict {
  VerdictTag tag = VerdictTag::Unknown;
  CertReason reason = CertReason::SearchBound;
  std::optional<PeriodicWitness> witness;
  std::optional<Rational> ratio;  // Im B / Im tau or Re B / delta when rational
};

// Every member of the obstruction set has imaginary part k Im(tau), so
// n Im(B) = k Im(tau) must fail for all n >= 1.
CertVerdict certify_wild_im_ratio(const CentralAutomorphism& a);

// A periodic point forces k = 0 (Im w > 0 and alpha > 1), then n1 = n2 = 0,
// leaving n B = l delta: wild iff B is not in Q delta.
CertVerdict decide_wild_central(const CentralAutomorphism& a);

struct CollisionScan {
  std::optional<PeriodicWitness> witness;
  long candidates = 0;          // tuples examined
  long rejected_nonzero_k = 0;  // k != 0 tuples, all without a point in H
};

// Scans 1 <= n <= bound and |k|, |n1|, |n2|, |l| <= bound in the order
// (n, |k|, |n1|, |n2|, |l|), positive before negative, and returns the first
// exact solution. The scan is split across WILDSURF_THREADS workers.
CollisionScan find_periodic_collision(const CentralAutomorphism& a, long box_bound);

// The affine map sigma~^{-n} composed with the deck word of the witness; it
// fixes every point when k = 0.
AffineMap witness_map(const CentralAutomorphism& a, const PeriodicWitness& w);
bool check_witness(const CentralAutomorphism& a, const PeriodicWitness& w);

}  // namespace wildsurf

#endif  // WILDSURF_WILD_CERT_HPP
