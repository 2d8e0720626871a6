#include "zpp/fitting.hpp"

namespace zpp {

int nil_index(const Mat& n) {
  if (!n.is_square()) throw InputError("nil_index: not square");
  Mat x = Mat::identity(n.field(), n.rows());
  int e = 0;
  while (!x.is_zero()) {
    if (e > n.rows()) throw InputError("nil_index: matrix is not nilpotent");
    x = x * n;
    ++e;
  }
  return e == 0 ? 0 : e;  // 0x0 identity is already zero
}

FittingDecomposition fitting_decompose(const Mat& a) {
  if (!a.is_square()) throw InputError("fitting_decompose: not square");
  const int r = a.rows();
  const FieldDesc& f = a.field();
  if (r == 0)
    return FittingDecomposition{Mat(f, 0, 0), 0, Mat(f, 0, 0), Mat(f, 0, 0), 0};

  Mat power = a;
  int rk = rank(power);
  while (true) {
    Mat next = power * a;
    int rk_next = rank(next);
    if (rk_next == rk) break;
    power = std::move(next);
    rk = rk_next;
  }

  Mat s_mat = Mat::hcat(column_space_basis(power), kernel_basis(power));
  if (s_mat.cols() != r) throw InternalError("fitting: basis size mismatch");
  Mat s_inv = inverse(s_mat);  // throws only if im/ker fail to split F^r
  Mat b = s_inv * a * s_mat;

  const int s = rk;
  Mat rpart = b.block(0, 0, s, s);
  Mat npart = b.block(s, s, r - s, r - s);
  if (!b.block(0, s, s, r - s).is_zero() || !b.block(s, 0, r - s, s).is_zero())
    throw InternalError("fitting: conjugated matrix not block diagonal");
  if (rank(rpart) != s) throw InternalError("fitting: R not invertible");

  int nu = nil_index(npart);
  if (nu > r - s) throw InternalError("fitting: nil index exceeds block size");
  return FittingDecomposition{std::move(s_mat), s, std::move(rpart),
                              std::move(npart), nu};
}

}  // namespace zpp
