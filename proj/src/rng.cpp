#include "zpp/rng.hpp"

namespace zpp {

Scalar random_scalar(const FieldDesc& f, Rng& rng) {
  if (f.kind() == FieldKind::PrimeField)
    return Scalar::gf_residue(f, rng.below(f.modulus()));
  return Scalar::from_int(f, static_cast<long long>(rng.below(9)) - 4);
}

Mat random_mat(const FieldDesc& f, int rows, int cols, Rng& rng) {
  Mat m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = random_scalar(f, rng);
  return m;
}

Mat random_invertible(const FieldDesc& f, int n, Rng& rng) {
  for (int tries = 0; tries < 10000; ++tries) {
    Mat m = random_mat(f, n, n, rng);
    if (rank(m) == n) return m;
  }
  throw InternalError("random_invertible: rejection sampling failed");
}

Mat random_idempotent(const FieldDesc& f, int n, Rng& rng) {
  int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
  Mat d(f, n, n);
  for (int i = 0; i < m; ++i) d.at(i, i) = Scalar::one(f);
  Mat v = random_invertible(f, n, rng);
  return v * d * inverse(v);
}

}  // namespace zpp
