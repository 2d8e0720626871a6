#pragma once

#include "zpp/nilspace.hpp"
#include "zpp/structure.hpp"

namespace zpp {

/// [[a, b], [c, d]] |-> [[0, b - c], [0, 0]]: a nonzero ZPP map whose range
/// has trivial multiplications and which kills all symmetric matrices.
LinMap example_symmetric_killer(const FieldDesc& f);

/// A placed on the first block superdiagonal of a k x k block grid:
/// Phi(A) = J_k(0) (x) A.  ZPP with Phi(I)^(k-1) != 0, Phi(I)^k = 0; the
/// range multiplication is nontrivial for k > 2.
LinMap example_band_nilpotent(int n, int k, const FieldDesc& f);

/// The embedding with the first row of A along row 1 and the last column of
/// A down column n+2 (r >= n+2): ZPP, Phi(I)^2 = 0, yet
/// Phi(E_11 + E_1n)^2 != 0, so the range multiplication is nontrivial and
/// no C * Psi factorization exists.
LinMap example_ors(int n, int r, const FieldDesc& f);

enum class Phi0Mode { None, TrivialMult, Band };

struct PatternParams {
  int p = 0, q = 0, u = 0, v = 0, dim = 1;
};

/// Generation data for a random ZPP map assembled from its canonical form.
/// None: phi0 vacuous (r = nk); TrivialMult: phi0 images inside a generated
/// pattern subspace of size r - nk; Band: phi0 = the band example with
/// r - nk = n * band_k.
struct GenSpec {
  int n = 2;
  int r = 2;
  int k = 1;
  FieldDesc field = FieldDesc::rationals();
  std::uint64_t seed = 0;
  Phi0Mode mode = Phi0Mode::None;
  PatternParams pattern;  // TrivialMult only
  int band_k = 1;         // Band only
};

struct GeneratedZpp {
  LinMap map;
  StructureCertificate truth;
};

/// Draws invertible S and R1 and a phi0 per mode, assembles the map via
/// reconstruct, and returns it with its ground-truth certificate.
GeneratedZpp random_zpp_map(const GenSpec& spec);

/// S ((I_k1 (x) A) (+) (I_k2 (x) A^t) (+) 0_t) S^-1 with random invertible S.
LinMap random_jordan_map(int n, int r, int k1, int k2, const FieldDesc& f,
                         std::uint64_t seed);

}  // namespace zpp
