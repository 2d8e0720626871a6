#pragma once

#include "zpp/structure.hpp"

namespace zpp {

/// Splitting of a Jordan homomorphism theta = h + g into a ring homomorphism
/// h and a ring anti-homomorphism g, with disjoint idempotents P = h(I),
/// Q = g(I) central in the range.
struct JordanSplit {
  Mat P;
  Mat Q;
  LinMap h;
  LinMap g;
};

/// Constructive splitting: the identity theta(A)theta(B) = h(AB) + g(BA)
/// gives h(E_il) = theta(E_ii) theta(E_il) for i != l and
/// h(E_ii) = h(E_ij) h(E_ji); all invariants are verified before returning.
/// Requires n >= 2 and characteristic != 2.
JordanSplit split_jordan(const LinMap& theta);

/// theta(E_ij) = S ((I_k1 (x) E_ij) (+) (I_k2 (x) E_ji) (+) 0_t) S^-1.
struct JordanCanonicalForm {
  Mat S;
  int k1;
  int k2;
  int t;
};

JordanCanonicalForm jordan_canonical_form(const LinMap& theta);

/// Certificate for a double-zero-product preserver:
///   Phi(E_ij) = S ((R1 (x) E_ij) (+) (R2 (x) E_ji) (+) phi0(E_ij)) S^-1.
/// The invertible-part reduction is a proof; the residual claim "phi0 is
/// DZP" is checked on sampled idempotents only (Phi_0(P)^(nu+1) = 0).
struct DzpCertificate {
  Mat S;
  int k1;
  int k2;
  Mat R1;
  Mat R2;
  LinMap phi0;
};

DzpCertificate decompose_dzp(const LinMap& phi);

LinMap reconstruct_dzp(const DzpCertificate& cert, int n, int r);

/// Jordan + ZPP maps must be ring homomorphisms; evaluates the three
/// sub-checks and the implication.
struct PromotionReport {
  bool holds;
  Verdict jordan;
  Verdict zpp;
  Verdict ring_hom;
};

PromotionReport check_zpp_jordan_promotion(const LinMap& theta);

}  // namespace zpp
