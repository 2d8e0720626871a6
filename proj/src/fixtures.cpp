#include "zpp/fixtures.hpp"

#include "zpp/rng.hpp"

namespace zpp {

LinMap example_symmetric_killer(const FieldDesc& f) {
  Mat e12 = Mat::unit(f, 2, 2, 0, 1);
  std::vector<Mat> images{Mat(f, 2, 2), e12, -e12, Mat(f, 2, 2)};
  return LinMap(f, 2, 2, std::move(images));
}

LinMap example_band_nilpotent(int n, int k, const FieldDesc& f) {
  if (n < 1 || k < 1) throw InputError("example_band_nilpotent: n, k >= 1");
  Mat band(f, k, k);
  for (int j = 0; j + 1 < k; ++j) band.at(j, j + 1) = Scalar::one(f);
  std::vector<Mat> images;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      images.push_back(kron(band, Mat::unit(f, n, n, i, j)));
  return LinMap(f, n, n * k, std::move(images));
}

LinMap example_ors(int n, int r, const FieldDesc& f) {
  if (n < 2) throw InputError("example_ors: n must be >= 2");
  if (r < n + 2) throw InputError("example_ors: requires r >= n + 2");
  std::vector<Mat> images;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat m(f, r, r);
      if (i == 0) m.at(0, 1 + j) = Scalar::one(f);  // row 1 carries row 1 of A
      if (j == n - 1)
        m.at(1 + i, n + 1) = Scalar::one(f);  // column n+2 carries column n of A
      images.push_back(std::move(m));
    }
  return LinMap(f, n, r, std::move(images));
}

GeneratedZpp random_zpp_map(const GenSpec& spec) {
  const FieldDesc& f = spec.field;
  const int n = spec.n, r = spec.r, k = spec.k;
  if (n < 1 || k < 0 || r < n * k) throw InputError("random_zpp_map: bad spec");
  const int t = r - n * k;
  Rng rng(spec.seed);

  LinMap phi0 = LinMap::zero_map(f, n, t);
  switch (spec.mode) {
    case Phi0Mode::None:
      if (t != 0)
        throw InputError("random_zpp_map: mode none requires r = nk");
      break;
    case Phi0Mode::TrivialMult: {
      const PatternParams& pp = spec.pattern;
      if (2 * pp.p + pp.q != t)
        throw InputError("random_zpp_map: pattern size != r - nk");
      std::vector<Mat> span = generate_pattern_subspace(
          t, pp.p, pp.q, pp.u, pp.v, pp.dim, f, rng.next());
      std::vector<Mat> images;
      for (int i = 0; i < n * n; ++i) {
        Mat m(f, t, t);
        for (const Mat& b : span) m = m + b.scaled(random_scalar(f, rng));
        images.push_back(std::move(m));
      }
      phi0 = LinMap(f, n, t, std::move(images));
      break;
    }
    case Phi0Mode::Band: {
      if (t != spec.n * spec.band_k)
        throw InputError("random_zpp_map: band size != r - nk");
      phi0 = example_band_nilpotent(n, spec.band_k, f);
      break;
    }
  }

  Mat s = random_invertible(f, r, rng);
  Mat r1 = k > 0 ? random_invertible(f, k, rng) : Mat(f, 0, 0);
  int nu = nil_index(phi0.identity_image());
  StructureCertificate truth{std::move(s), k, std::move(r1), std::move(phi0),
                             nu};
  LinMap map = reconstruct(truth, n, r);
  return GeneratedZpp{std::move(map), std::move(truth)};
}

LinMap random_jordan_map(int n, int r, int k1, int k2, const FieldDesc& f,
                         std::uint64_t seed) {
  if (n < 1 || k1 < 0 || k2 < 0 || n * (k1 + k2) > r)
    throw InputError("random_jordan_map: requires n (k1 + k2) <= r");
  const int t = r - n * (k1 + k2);
  Rng rng(seed);
  Mat s = random_invertible(f, r, rng);
  Mat s_inv = inverse(s);
  std::vector<Mat> images;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat blocks = Mat::direct_sum(
          Mat::direct_sum(kron(Mat::identity(f, k1), Mat::unit(f, n, n, i, j)),
                          kron(Mat::identity(f, k2), Mat::unit(f, n, n, j, i))),
          Mat(f, t, t));
      images.push_back(s * blocks * s_inv);
    }
  return LinMap(f, n, r, std::move(images));
}

}  // namespace zpp
