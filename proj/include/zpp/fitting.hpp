#pragma once

#include "zpp/mat.hpp"

namespace zpp {

/// Core-nilpotent splitting of a square matrix A: an invertible S with
/// S^-1 A S = R (+) N, R invertible of size s, N nilpotent of nil index nu.
/// nu = 0 iff N is vacuous; the zero matrix of size t >= 1 has nu = 1.
struct FittingDecomposition {
  Mat S;
  int s;
  Mat R;
  Mat N;
  int nu;
};

/// Computed by rank stabilization of powers: the first m with
/// rank(A^m) = rank(A^(m+1)) gives F^r = im(A^m) (+) ker(A^m); S is the
/// concatenation of a column basis of A^m and a kernel basis of A^m.
/// N is not reduced to Jordan form.
FittingDecomposition fitting_decompose(const Mat& a);

/// Minimal e >= 0 with N^e = 0; throws InputError if N is not nilpotent.
int nil_index(const Mat& n);

}  // namespace zpp
