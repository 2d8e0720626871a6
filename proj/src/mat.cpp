#include "zpp/mat.hpp"

#include <sstream>

namespace zpp {

Mat::Mat(const FieldDesc& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InputError("Mat: negative dimension");
  a_.assign(static_cast<size_t>(rows) * cols, Scalar::zero(f));
}

Mat Mat::identity(const FieldDesc& f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Mat Mat::unit(const FieldDesc& f, int rows, int cols, int i, int j) {
  Mat m(f, rows, cols);
  m.at(i, j) = Scalar::one(f);
  return m;
}

int Mat::idx(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw InternalError("Mat index out of range");
  return i * cols_ + j;
}

bool Mat::is_zero() const {
  for (const Scalar& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

bool Mat::is_identity() const {
  if (!is_square()) return false;
  return *this == identity(field_, rows_);
}

Mat operator+(const Mat& a, const Mat& b) {
  if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw InputError("Mat add: shape or field mismatch");
  Mat r = a;
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + b.a_[i];
  return r;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw InputError("Mat sub: shape or field mismatch");
  Mat r = a;
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] - b.a_[i];
  return r;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (!(a.field_ == b.field_) || a.cols_ != b.rows_)
    throw InputError("Mat mul: shape or field mismatch");
  Mat r(a.field_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
      }
    }
  }
  return r;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (Scalar& s : r.a_) s = -s;
  return r;
}

Mat Mat::scaled(const Scalar& c) const {
  if (!(c.field() == field_)) throw InputError("Mat scale: field mismatch");
  Mat r = *this;
  for (Scalar& s : r.a_) s = s * c;
  return r;
}

Mat Mat::transpose() const {
  Mat r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::pow(int e) const {
  if (!is_square()) throw InputError("Mat pow: not square");
  if (e < 0) throw InputError("Mat pow: negative exponent");
  Mat acc = identity(field_, rows_);
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

bool Mat::operator==(const Mat& rhs) const {
  if (!(field_ == rhs.field_) || rows_ != rhs.rows_ || cols_ != rhs.cols_)
    return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != rhs.a_[i]) return false;
  return true;
}

Mat Mat::block(int r0, int c0, int h, int w) const {
  if (r0 < 0 || c0 < 0 || h < 0 || w < 0 || r0 + h > rows_ || c0 + w > cols_)
    throw InternalError("Mat block out of range");
  Mat b(field_, h, w);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < w; ++j) b.at(i, j) = at(r0 + i, c0 + j);
  return b;
}

void Mat::set_block(int r0, int c0, const Mat& b) {
  if (!(b.field_ == field_)) throw InputError("set_block: field mismatch");
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
    throw InternalError("set_block out of range");
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

Mat Mat::hcat(const Mat& a, const Mat& b) {
  if (!(a.field_ == b.field_) || a.rows_ != b.rows_)
    throw InputError("hcat: mismatch");
  Mat r(a.field_, a.rows_, a.cols_ + b.cols_);
  r.set_block(0, 0, a);
  r.set_block(0, a.cols_, b);
  return r;
}

Mat Mat::vcat(const Mat& a, const Mat& b) {
  if (!(a.field_ == b.field_) || a.cols_ != b.cols_)
    throw InputError("vcat: mismatch");
  Mat r(a.field_, a.rows_ + b.rows_, a.cols_);
  r.set_block(0, 0, a);
  r.set_block(a.rows_, 0, b);
  return r;
}

Mat Mat::direct_sum(const Mat& a, const Mat& b) {
  if (!(a.field_ == b.field_)) throw InputError("direct_sum: field mismatch");
  Mat r(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  r.set_block(0, 0, a);
  r.set_block(a.rows_, a.cols_, b);
  return r;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).to_string();
  }
  os << "]";
  return os.str();
}

Mat kron(const Mat& a, const Mat& b) {
  if (!(a.field() == b.field())) throw InputError("kron: field mismatch");
  Mat r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (int s = 0; s < b.rows(); ++s)
        for (int t = 0; t < b.cols(); ++t)
          r.at(i * b.rows() + s, j * b.cols() + t) = aij * b.at(s, t);
    }
  return r;
}

Mat perfect_shuffle(int n, int k, const FieldDesc& f) {
  if (n < 1 || k < 1) throw InputError("perfect_shuffle: n, k must be >= 1");
  // P maps basis vector (i-1)k + s of the A(x)B ordering to (s-1)n + i of
  // the B(x)A ordering; as a matrix P[(i)k+s][(s)n+i] = 1 (0-based).
  Mat p(f, n * k, n * k);
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < k; ++s)
      p.at(i * k + s, s * n + i) = Scalar::one(f);
  return p;
}

namespace {

// Gauss-Jordan over GF(p): pivot rows rescaled to 1 as we go.
RrefResult rref_gf(const Mat& m) {
  Mat a = m;
  std::vector<int> pivots;
  int t = 0;
  for (int c = 0; c < a.cols() && t < a.rows(); ++c) {
    int ri = -1;
    for (int i = t; i < a.rows(); ++i)
      if (!a.at(i, c).is_zero()) {
        ri = i;
        break;
      }
    if (ri < 0) continue;
    if (ri != t)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(t, j), a.at(ri, j));
    Scalar inv = a.at(t, c).inverse();
    for (int j = 0; j < a.cols(); ++j) a.at(t, j) = a.at(t, j) * inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == t || a.at(i, c).is_zero()) continue;
      Scalar factor = a.at(i, c);
      for (int j = 0; j < a.cols(); ++j)
        a.at(i, j) = a.at(i, j) - factor * a.at(t, j);
    }
    pivots.push_back(c);
    ++t;
  }
  return RrefResult{std::move(a), std::move(pivots)};
}

// Fraction-free Gauss-Jordan over Q.  Rows are scaled to integers, then
// eliminated with the Bareiss recurrence a_ij <- (piv*a_ij - a_ic*a_tj)/d
// where d is the previous pivot; every division is exact (entries stay
// minors of the integerized matrix).  Pivot rows are normalized to rational
// RREF at the end.
RrefResult rref_q(const Mat& m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (int j = 0; j < cols; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              m.at(i, j).rational_value().get_den().get_mpz_t());
    for (int j = 0; j < cols; ++j) {
      mpq_class v = m.at(i, j).rational_value() * lcm;
      if (v.get_den() != 1) throw InternalError("rref_q: row clearing failed");
      a[i][j] = v.get_num();
    }
  }

  std::vector<int> pivots;
  mpz_class d_prev = 1;
  int t = 0;
  for (int c = 0; c < cols && t < rows; ++c) {
    int ri = -1;
    for (int i = t; i < rows; ++i)
      if (a[i][c] != 0) {
        ri = i;
        break;
      }
    if (ri < 0) continue;
    if (ri != t) std::swap(a[t], a[ri]);
    mpz_class piv = a[t][c];
    mpz_class num, rem;
    for (int i = 0; i < rows; ++i) {
      if (i == t) continue;
      mpz_class aic = a[i][c];
      for (int j = 0; j < cols; ++j) {
        if (j == c) continue;
        num = piv * a[i][j] - aic * a[t][j];
        mpz_tdiv_qr(a[i][j].get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                    d_prev.get_mpz_t());
        if (rem != 0) throw InternalError("rref_q: inexact Bareiss division");
      }
      a[i][c] = 0;
    }
    d_prev = piv;
    pivots.push_back(c);
    ++t;
  }

  Mat r(m.field(), rows, cols);
  for (int ti = 0; ti < static_cast<int>(pivots.size()); ++ti) {
    mpq_class piv(a[ti][pivots[ti]]);
    for (int j = 0; j < cols; ++j) {
      mpq_class v(a[ti][j]);
      r.at(ti, j) = Scalar::rational(v / piv);
    }
  }
  for (int i = static_cast<int>(pivots.size()); i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (a[i][j] != 0) throw InternalError("rref_q: nonzero residual row");
  return RrefResult{std::move(r), std::move(pivots)};
}

}  // namespace

RrefResult rref(const Mat& m) {
  return m.field().kind() == FieldKind::PrimeField ? rref_gf(m) : rref_q(m);
}

int rank(const Mat& m) { return rref(m).rank(); }

Mat kernel_basis(const Mat& m) {
  RrefResult r = rref(m);
  std::vector<int> free_cols;
  std::vector<int> pivot_of_col(m.cols(), -1);
  for (int t = 0; t < r.rank(); ++t) pivot_of_col[r.pivot_cols[t]] = t;
  for (int c = 0; c < m.cols(); ++c)
    if (pivot_of_col[c] < 0) free_cols.push_back(c);

  Mat k(m.field(), m.cols(), static_cast<int>(free_cols.size()));
  for (int fi = 0; fi < static_cast<int>(free_cols.size()); ++fi) {
    int fc = free_cols[fi];
    k.at(fc, fi) = Scalar::one(m.field());
    for (int t = 0; t < r.rank(); ++t)
      k.at(r.pivot_cols[t], fi) = -r.rref.at(t, fc);
  }
  return k;
}

Mat column_space_basis(const Mat& m) {
  RrefResult r = rref(m);
  Mat b(m.field(), m.rows(), r.rank());
  for (int t = 0; t < r.rank(); ++t)
    for (int i = 0; i < m.rows(); ++i) b.at(i, t) = m.at(i, r.pivot_cols[t]);
  return b;
}

Mat inverse(const Mat& m) {
  if (!m.is_square()) throw InputError("inverse: not square");
  int n = m.rows();
  RrefResult r = rref(Mat::hcat(m, Mat::identity(m.field(), n)));
  if (r.rank() < n || (n > 0 && r.pivot_cols[n - 1] >= n))
    throw InputError("inverse: singular matrix");
  return r.rref.block(0, n, n, n);
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw InputError("solve: row mismatch");
  RrefResult r = rref(Mat::hcat(a, b));
  // a pivot in the augmented block means the system is inconsistent
  for (int c : r.pivot_cols)
    if (c >= a.cols()) return std::nullopt;
  Mat x(a.field(), a.cols(), b.cols());
  for (int t = 0; t < r.rank(); ++t)
    for (int j = 0; j < b.cols(); ++j)
      x.at(r.pivot_cols[t], j) = r.rref.at(t, a.cols() + j);
  return x;
}

}  // namespace zpp
