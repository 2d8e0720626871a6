#pragma once

#include <cstdint>
#include <vector>

#include "zpp/verify.hpp"

namespace zpp {

/// The max-rank search of canonicalize_trivial_mult could not certify a
/// maximal-rank element (randomized trials failed and the space is too big
/// to enumerate).  CLI exit code 2.
class InconclusiveError : public std::runtime_error {
 public:
  explicit InconclusiveError(const std::string& msg)
      : std::runtime_error(msg) {}
};

/// Block pattern data for a subspace with trivial multiplications, sizes
/// (p, p, q) with 2p + q = l: every spanning matrix conjugates to
///   [ 0_p  Z12  Z13 ]
///   [ 0    0_p  0   ]      Z13 supported in its top-left u x v corner,
///   [ 0    Z32  0_q ]      Z32 supported in its bottom-right corner.
struct TrivialMultForm {
  Mat S0;
  int p;
  int q;
  int u;
  int v;
};

/// B_i B_j = 0 for every ordered pair, including i = j.
Verdict check_pairwise_zero(const std::vector<Mat>& basis);

/// Whether S0^-1 Z S0 would match the pattern (z given already conjugated).
bool matches_pattern(const Mat& z, int p, int q, int u, int v);

/// Canonicalizes a trivial-multiplication subspace.  Needs |F| > (l+2)/2.
/// The max-rank element is found by exhaustive projective enumeration when
/// |F|^dim fits the 10^6 budget, otherwise by 16*l*dim seeded random
/// combinations; if the randomized choice fails the pattern assertions the
/// search is reported inconclusive rather than returning a suboptimal p.
TrivialMultForm canonicalize_trivial_mult(const std::vector<Mat>& basis,
                                          std::uint64_t seed = 0);

/// `dim` random matrices inside the pattern; products are structurally zero.
/// Element 0 is a corner-free invertible Z12 (the span attains rank p there
/// and nowhere exceeds it); elements 1..dim-1 carry shifted partial-diagonal
/// Z13 corners whose column and row supports are full once
/// dim >= max(u,v) - min(u,v) + 2 (u, v both zero or both positive).  Under
/// those conditions the canonicalizer recovers (p, q, u, v) exactly.
std::vector<Mat> generate_pattern_subspace(int l, int p, int q, int u, int v,
                                           int dim, const FieldDesc& f,
                                           std::uint64_t seed);

}  // namespace zpp
