#pragma once

#include <optional>
#include <utility>

#include "zpp/fitting.hpp"
#include "zpp/verify.hpp"

namespace zpp {

/// Certificate for a zero-product preserver Phi: M_n -> M_r:
///   Phi(E_ij) = S ((R1 (x) E_ij) (+) phi0(E_ij)) S^-1   for all units,
/// with R1 invertible k x k (vacuous iff k = 0), phi0 a ZPP map into
/// nilpotent matrices of size t = r - nk, and nu the nil index of phi0(I).
/// Certificates are verified by exact reconstruction before being returned.
struct StructureCertificate {
  Mat S;
  int k;
  Mat R1;
  LinMap phi0;
  int nu;
};

/// Canonicalizes a unital ring homomorphism Psi: M_n -> M_s to the form
/// Psi(A) = S1 (I_k (x) A) S1^-1 with s = nk.  Follows the idempotent
/// column-basis construction: conjugate the disjoint idempotents Psi(E_ii)
/// to diagonal blocks, normalize the first block row, then reorder with the
/// perfect shuffle.  Throws NotPreserverError if Psi is not a unital ring
/// homomorphism.
std::pair<Mat, int> canonicalize_unital_hom(const LinMap& psi);

/// Given C in M_nk commuting with I_k (x) A for every A, C = R1 (x) I_n;
/// reads off and verifies the k x k factor R1.
Mat extract_tensor_factor(const Mat& c, int n, int k);

/// The full decomposition pipeline for a ZPP map, n >= 2: Fitting-split
/// Phi(I), conjugate to block-diagonal form, canonicalize the unital ring
/// homomorphism part, extract R1, and emit a verified certificate.
/// n = 1 inputs are rejected; use decompose_m1.
StructureCertificate decompose_zpp(const LinMap& phi);

/// n = 1 classifier: every linear map M_1 -> M_r preserves zero products and
/// the Fitting data of Phi(1) already is a certificate (R1 = R, phi0 = a |-> aN).
StructureCertificate decompose_m1(const LinMap& phi);

/// Inverse of decompose_zpp: the map with images S ((R1 (x) E_ij) (+)
/// phi0(E_ij)) S^-1.
LinMap reconstruct(const StructureCertificate& cert, int n, int r);

/// Small-codomain classification for r <= n+1: either
/// A |-> alpha S (A (+) 0_{r-n}) S^-1, or a map whose range has trivial
/// multiplications (when Phi(I) is nilpotent).
struct SmallCodomainForm {
  enum class Variant { ScalarInner, TrivialRange };
  Variant variant;
  std::optional<Scalar> alpha;  // ScalarInner only
  std::optional<Mat> S;         // ScalarInner only
};

SmallCodomainForm small_codomain_classify(const LinMap& phi);

}  // namespace zpp
