#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zpp/field.hpp"

namespace zpp {

/// Dense matrix over GF(p) or Q.  Row-major, immutable field, 0-based
/// indices.  Vacuous blocks are represented as 0-size matrices.
class Mat {
 public:
  Mat(const FieldDesc& f, int rows, int cols);  // zero matrix

  static Mat identity(const FieldDesc& f, int n);
  /// Matrix unit E_{ij} (0-based i, j).
  static Mat unit(const FieldDesc& f, int rows, int cols, int i, int j);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldDesc& field() const { return field_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_identity() const;

  const Scalar& at(int i, int j) const { return a_[idx(i, j)]; }
  Scalar& at(int i, int j) { return a_[idx(i, j)]; }

  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Mat& a, const Mat& b);
  Mat operator-() const;
  Mat scaled(const Scalar& c) const;
  Mat transpose() const;
  Mat pow(int e) const;  // square only, e >= 0
  bool operator==(const Mat& rhs) const;
  bool operator!=(const Mat& rhs) const { return !(*this == rhs); }

  Mat block(int r0, int c0, int h, int w) const;
  void set_block(int r0, int c0, const Mat& b);
  static Mat hcat(const Mat& a, const Mat& b);
  static Mat vcat(const Mat& a, const Mat& b);
  static Mat direct_sum(const Mat& a, const Mat& b);

  std::string to_string() const;

 private:
  int idx(int i, int j) const;
  FieldDesc field_;
  int rows_, cols_;
  std::vector<Scalar> a_;
};

/// Kronecker product: block (i,j) of the result is a_ij * B.
Mat kron(const Mat& a, const Mat& b);

/// The permutation P with P^t (A (x) B) P = B (x) A for A in M_n, B in M_k,
/// in particular P^t (E_ij (x) I_k) P = I_k (x) E_ij.
Mat perfect_shuffle(int n, int k, const FieldDesc& f);

/// Reduced row echelon form plus pivot columns.  Over GF(p) this is plain
/// Gauss-Jordan; over Q rows are cleared to integers and eliminated with the
/// fraction-free (Bareiss-style) Gauss-Jordan recurrence, normalizing pivot
/// rows only at the end.
struct RrefResult {
  Mat rref;
  std::vector<int> pivot_cols;
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

RrefResult rref(const Mat& m);
int rank(const Mat& m);
/// Basis of the right null space, one basis vector per column; 0 columns iff
/// full column rank.
Mat kernel_basis(const Mat& m);
/// The first maximal independent set of columns of m, in natural order.
Mat column_space_basis(const Mat& m);
/// Exact inverse; throws InputError on a singular or non-square matrix.
Mat inverse(const Mat& m);
/// One solution X of A X = B with free variables set to zero, or nullopt if
/// the system is inconsistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);

}  // namespace zpp
