#include "zpp/linmap.hpp"

namespace zpp {

LinMap::LinMap(const FieldDesc& f, int n, int r, std::vector<Mat> images)
    : field_(f), n_(n), r_(r), images_(std::move(images)) {
  if (n < 1) throw InputError("LinMap: n must be >= 1");
  if (r < 0) throw InputError("LinMap: r must be >= 0");
  if (images_.size() != static_cast<size_t>(n) * n)
    throw InputError("LinMap: expected n^2 unit images");
  for (const Mat& m : images_) {
    if (m.rows() != r || m.cols() != r)
      throw InputError("LinMap: image is not r x r");
    if (!(m.field() == f)) throw InputError("LinMap: image field mismatch");
  }
}

LinMap LinMap::identity_map(const FieldDesc& f, int n) {
  std::vector<Mat> images;
  images.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) images.push_back(Mat::unit(f, n, n, i, j));
  return LinMap(f, n, n, std::move(images));
}

LinMap LinMap::transpose_map(const FieldDesc& f, int n) {
  std::vector<Mat> images;
  images.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) images.push_back(Mat::unit(f, n, n, j, i));
  return LinMap(f, n, n, std::move(images));
}

LinMap LinMap::zero_map(const FieldDesc& f, int n, int r) {
  std::vector<Mat> images(static_cast<size_t>(n) * n, Mat(f, r, r));
  return LinMap(f, n, r, std::move(images));
}

Mat LinMap::identity_image() const {
  Mat t(field_, r_, r_);
  for (int i = 0; i < n_; ++i) t = t + image(i, i);
  return t;
}

Mat LinMap::apply(const Mat& a) const {
  if (a.rows() != n_ || a.cols() != n_ || !(a.field() == field_))
    throw InputError("LinMap apply: argument is not n x n over the field");
  Mat out(field_, r_, r_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      const Scalar& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      out = out + image(i, j).scaled(aij);
    }
  return out;
}

LinMap LinMap::conjugated(const Mat& s) const {
  if (s.rows() != r_ || s.cols() != r_)
    throw InputError("conjugate: S is not r x r");
  Mat s_inv = inverse(s);  // throws on singular S
  std::vector<Mat> images;
  images.reserve(images_.size());
  for (const Mat& m : images_) images.push_back(s_inv * m * s);
  return LinMap(field_, n_, r_, std::move(images));
}

LinMap LinMap::precompose_transpose() const {
  std::vector<Mat> images;
  images.reserve(images_.size());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) images.push_back(image(j, i));
  return LinMap(field_, n_, r_, std::move(images));
}

LinMap LinMap::direct_sum(const LinMap& other) const {
  if (other.n_ != n_ || !(other.field_ == field_))
    throw InputError("direct_sum: domain mismatch");
  std::vector<Mat> images;
  images.reserve(images_.size());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      images.push_back(Mat::direct_sum(image(i, j), other.image(i, j)));
  return LinMap(field_, n_, r_ + other.r_, std::move(images));
}

bool LinMap::operator==(const LinMap& rhs) const {
  if (!(field_ == rhs.field_) || n_ != rhs.n_ || r_ != rhs.r_) return false;
  for (size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != rhs.images_[i]) return false;
  return true;
}

}  // namespace zpp
