#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zpp/linmap.hpp"

namespace zpp {

enum class CheckMode { Exact, Randomized };

/// Violated basis identity: the two sides of the checked identity evaluated
/// at the unit quadruple (E_ij, E_kl).  k = l = -1 for single-unit
/// identities.  `identity` names the checked relation so the witness can be
/// re-evaluated independently.
struct UnitsWitness {
  std::string identity;
  int i, j, k, l;
  Mat lhs;
  Mat rhs;
};

/// Explicit counterexample pair: a b = 0 (and b a = 0 when `double_zero`)
/// but the named image product is nonzero.
struct PairWitness {
  Mat a;
  Mat b;
  Mat product;       // the offending nonzero product of images
  bool ba_side;      // true if the violated product is Phi(B) Phi(A)
  bool double_zero;  // the pair also satisfies b a = 0
};

/// Nonzero product of nu+1 images (an internal-consistency failure).
struct TupleWitness {
  std::vector<Mat> inputs;
  Mat product;
};

/// An idempotent mapped to a non-idempotent.
struct IdempotentWitness {
  Mat p;
  Mat image;
  Mat image_squared;
};

/// Nonzero product basis[i] * basis[j] of two spanning matrices.
struct BasisPairWitness {
  int i, j;
  Mat product;
};

using Witness = std::variant<UnitsWitness, PairWitness, TupleWitness,
                             IdempotentWitness, BasisPairWitness>;

struct Verdict {
  bool holds = true;
  CheckMode mode = CheckMode::Exact;
  std::uint64_t trials = 0;
  std::optional<Witness> witness;

  static Verdict pass() { return Verdict{}; }
  static Verdict fail(Witness w) {
    return Verdict{false, CheckMode::Exact, 0, std::move(w)};
  }
};

/// Thrown when an operation's input fails a preserver-property gate; carries
/// the refuting verdict.  CLI exit code 1.
class NotPreserverError : public std::runtime_error {
 public:
  NotPreserverError(const std::string& msg, Verdict v)
      : std::runtime_error(msg), verdict(std::move(v)) {}
  Verdict verdict;
};

/// Zero-product preservation, decided on the unit basis: for n >= 2, Phi is
/// ZPP iff Phi(E_ij) Phi(E_kl) = Phi(I) Phi(E_ij E_kl) for all quadruples.
/// For n = 1 every linear map is ZPP (a field has no zero divisors).
/// When the first violated quadruple has j != k (so E_ij E_kl = 0) the
/// witness is upgraded to the explicit counterexample pair.
Verdict check_zpp(const LinMap& phi);

/// Phi(E_ij) Phi(E_kl) = delta_jk Phi(E_il) on all quadruples.
Verdict check_ring_hom(const LinMap& phi);

/// Jordan identity Phi(AB+BA) = Phi(A)Phi(B) + Phi(B)Phi(A) on all unit
/// pairs; rejects characteristic-2 fields.
Verdict check_jordan(const LinMap& phi);

/// For char != 2, idempotent preservation is equivalent to being a Jordan
/// homomorphism; delegates to check_jordan and cross-validates on a budgeted
/// enumeration of rank-one idempotents over small GF(p).
Verdict check_idempotent_preserver(const LinMap& phi);

/// Range has trivial multiplications: Phi(E_ij) Phi(E_kl) = 0 always.
Verdict check_trivial_mult(const LinMap& phi);

/// Seeded pair (A, B) with A B = 0 exactly (and B A = 0 if double_zero).
/// A's rank is drawn uniformly from {0, ..., n-1}; B is sampled from the
/// exact solution space of the linear constraints.
MatPair sample_zero_pair(int n, const FieldDesc& f, std::uint64_t seed,
                         bool double_zero);

enum class PreserverProperty { Zpp, Dzp };

/// Randomized falsifier.  holds = true means "no counterexample in `trials`
/// samples", not a proof; a returned counterexample is exact and definitive.
Verdict fuzz_preserver(const LinMap& phi, PreserverProperty prop,
                       std::uint64_t trials, std::uint64_t seed);

/// For a ZPP map with Phi(I)^nu = 0, products of any nu+1 images vanish;
/// samples `tuples` random (nu+1)-tuples.  A failure signals an internal
/// inconsistency, not a property of the input.
Verdict check_power_products(const LinMap& phi, int nu, int tuples,
                             std::uint64_t seed);

/// All rank-one idempotents of M_n(GF(p)), enumerated as x y^t with
/// y^t x = 1 and x normalized projectively (first nonzero coordinate 1).
std::vector<Mat> enumerate_rank_one_idempotents(int n, const FieldDesc& f);

/// Candidate count p^(2n-2) for the enumeration above.
bool rank_one_enumeration_feasible(int n, const FieldDesc& f,
                                   std::uint64_t budget = 1000000);

/// Seeded sample of rank-one idempotents x y^t / (y^t x); the fallback used
/// when the enumeration exceeds its budget (and the only route over Q).
std::vector<Mat> sample_rank_one_idempotents(int n, const FieldDesc& f,
                                             int count, std::uint64_t seed);

}  // namespace zpp
