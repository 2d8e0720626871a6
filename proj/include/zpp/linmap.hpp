#pragma once

#include <vector>

#include "zpp/mat.hpp"

namespace zpp {

/// Linear map Phi: M_n -> M_r, stored as the n^2 images of the matrix units
/// E_ij.  The canonical constructions are all stated unit-wise, and this
/// keeps apply at O(n^2 r^2).  r = 0 is allowed internally for vacuous
/// summands.
class LinMap {
 public:
  /// images indexed row-major: images[i*n + j] = Phi(E_ij), each r x r.
  LinMap(const FieldDesc& f, int n, int r, std::vector<Mat> images);

  static LinMap identity_map(const FieldDesc& f, int n);
  static LinMap transpose_map(const FieldDesc& f, int n);
  static LinMap zero_map(const FieldDesc& f, int n, int r);

  const FieldDesc& field() const { return field_; }
  int n() const { return n_; }
  int r() const { return r_; }
  const Mat& image(int i, int j) const { return images_[i * n_ + j]; }
  /// Phi(I_n).
  Mat identity_image() const;

  /// Sum over (i,j) of a_ij * Phi(E_ij).
  Mat apply(const Mat& a) const;
  /// A |-> S^-1 Phi(A) S.  Certificates store S so that the original map is
  /// recovered as Phi(A) = S * (canonical blocks) * S^-1.
  LinMap conjugated(const Mat& s) const;
  /// A |-> Phi(A^t): swaps images (i,j) <-> (j,i).
  LinMap precompose_transpose() const;
  /// A |-> Phi(A) (+) Psi(A).
  LinMap direct_sum(const LinMap& other) const;

  bool operator==(const LinMap& rhs) const;
  bool operator!=(const LinMap& rhs) const { return !(*this == rhs); }

 private:
  FieldDesc field_;
  int n_, r_;
  std::vector<Mat> images_;
};

/// Zero-product pair (A, B) with A B = 0 (and B A = 0 when sampled double).
struct MatPair {
  Mat a;
  Mat b;
};

}  // namespace zpp
