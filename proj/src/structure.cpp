#include "zpp/structure.hpp"

namespace zpp {

namespace {

LinMap split_images(const LinMap& phi, int r0, int c0, int size) {
  std::vector<Mat> images;
  images.reserve(static_cast<size_t>(phi.n()) * phi.n());
  for (int i = 0; i < phi.n(); ++i)
    for (int j = 0; j < phi.n(); ++j)
      images.push_back(phi.image(i, j).block(r0, c0, size, size));
  return LinMap(phi.field(), phi.n(), size, std::move(images));
}

void require_block_diagonal(const LinMap& phi, int s) {
  const int t = phi.r() - s;
  for (int i = 0; i < phi.n(); ++i)
    for (int j = 0; j < phi.n(); ++j) {
      const Mat& y = phi.image(i, j);
      if (!y.block(0, s, s, t).is_zero() || !y.block(s, 0, t, s).is_zero())
        throw InternalError(
            "decompose: conjugated image is not block diagonal at unit (" +
            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
}

}  // namespace

std::pair<Mat, int> canonicalize_unital_hom(const LinMap& psi) {
  const FieldDesc& f = psi.field();
  const int n = psi.n();
  const int s = psi.r();

  if (!psi.identity_image().is_identity())
    throw NotPreserverError("input is not a unital ring homomorphism",
                            Verdict::fail(UnitsWitness{
                                "unital", -1, -1, -1, -1,
                                psi.identity_image(), Mat::identity(f, s)}));
  Verdict hom = check_ring_hom(psi);
  if (!hom.holds)
    throw NotPreserverError("input is not a ring homomorphism", hom);

  if (s == 0) return {Mat(f, 0, 0), 0};
  if (s % n != 0)
    throw NotPreserverError(
        "input is not a ring homomorphism (rank of the identity image is "
        "not divisible by n)",
        Verdict::fail(UnitsWitness{"divisibility", -1, -1, -1, -1,
                                   psi.identity_image(),
                                   Mat::identity(f, s)}));
  const int k = s / n;

  // Step 1: conjugate the disjoint idempotents Psi(E_ii) to diagonal blocks
  // using their column bases (first independent columns, natural order).
  Mat s1a(f, s, 0);
  for (int i = 0; i < n; ++i) {
    Mat ci = column_space_basis(psi.image(i, i));
    if (ci.cols() != k)
      throw NotPreserverError(
          "input is not a ring homomorphism (idempotent ranks differ)",
          Verdict::fail(UnitsWitness{"idempotent_rank", i, i, -1, -1,
                                     psi.image(i, i), Mat(f, s, s)}));
    s1a = Mat::hcat(s1a, ci);
  }
  LinMap psi1 = psi.conjugated(s1a);

  // Step 2: read the blocks B_1j from Psi(E_1j); each must be invertible.
  // Step 3: conjugate by I_k (+) B_12 (+) ... (+) B_1n to normalize them.
  Mat t_mat = Mat::identity(f, k);
  for (int j = 1; j < n; ++j) {
    Mat b1j = psi1.image(0, j).block(0, j * k, k, k);
    if (rank(b1j) != k)
      throw NotPreserverError(
          "input is not a ring homomorphism (singular block in the first "
          "block row)",
          Verdict::fail(UnitsWitness{"block_singular", 0, j, -1, -1,
                                     psi1.image(0, j), Mat(f, s, s)}));
    t_mat = Mat::direct_sum(t_mat, b1j);
  }
  // images become T Psi1(..) T^-1, i.e. conjugation by T^-1
  LinMap psi2 = psi1.conjugated(inverse(t_mat));

  // Step 4: now Psi(E_ij) must equal E_ij (x) I_k on every pair.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat expected = kron(Mat::unit(f, n, n, i, j), Mat::identity(f, k));
      if (psi2.image(i, j) != expected)
        throw NotPreserverError(
            "input is not a ring homomorphism (unit image off canonical "
            "form)",
            Verdict::fail(UnitsWitness{"canonical_unit", i, j, -1, -1,
                                       psi2.image(i, j), expected}));
    }

  // Step 5: perfect shuffle turns E_ij (x) I_k into I_k (x) E_ij.
  Mat shuffle = perfect_shuffle(n, k, f);
  Mat s1 = s1a * inverse(t_mat) * shuffle;

  Mat s1_inv = inverse(s1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat target = kron(Mat::identity(f, k), Mat::unit(f, n, n, i, j));
      if (psi.image(i, j) != s1 * target * s1_inv)
        throw InternalError("canonicalize_unital_hom: reconstruction failed");
    }
  return {std::move(s1), k};
}

Mat extract_tensor_factor(const Mat& c, int n, int k) {
  if (c.rows() != n * k || c.cols() != n * k)
    throw InputError("extract_tensor_factor: C is not nk x nk");
  const FieldDesc& f = c.field();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat u = kron(Mat::identity(f, k), Mat::unit(f, n, n, i, j));
      if (c * u != u * c)
        throw InputError(
            "extract_tensor_factor: C does not commute with I_k (x) E_" +
            std::to_string(i + 1) + std::to_string(j + 1));
    }

  Mat r1(f, k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      Mat blk = c.block(a * n, b * n, n, n);
      const Scalar& diag = blk.at(0, 0);
      if (blk != Mat::identity(f, n).scaled(diag))
        throw InputError("extract_tensor_factor: block (" +
                         std::to_string(a + 1) + "," + std::to_string(b + 1) +
                         ") is not a scalar multiple of I_n");
      r1.at(a, b) = diag;
    }
  if (kron(r1, Mat::identity(f, n)) != c)
    throw InternalError("extract_tensor_factor: reconstruction failed");
  return r1;
}

StructureCertificate decompose_zpp(const LinMap& phi) {
  const FieldDesc& f = phi.field();
  const int n = phi.n();
  const int r = phi.r();
  if (n < 2)
    throw InputError(
        "decompose_zpp: n = 1 is excluded; use the M_1 classifier");

  Verdict zpp = check_zpp(phi);
  if (!zpp.holds)
    throw NotPreserverError("input is not a zero product preserver", zpp);

  // (1) Fitting split of Phi(I); (2) conjugate and check block-diagonality.
  FittingDecomposition fit = fitting_decompose(phi.identity_image());
  const int s = fit.s;
  const int t = r - s;
  LinMap conj = phi.conjugated(fit.S);
  require_block_diagonal(conj, s);

  // (3) split off the nilpotent-range part.
  LinMap phi0 = split_images(conj, s, s, t);

  // (4) Psi = R^-1 * (top block) is a unital ring homomorphism.
  Mat r_inv = s > 0 ? inverse(fit.R) : Mat(f, 0, 0);
  std::vector<Mat> psi_images;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      psi_images.push_back(r_inv * conj.image(i, j).block(0, 0, s, s));
  LinMap psi(f, n, s, std::move(psi_images));

  Mat s1(f, 0, 0);
  int k = 0;
  try {
    std::tie(s1, k) = canonicalize_unital_hom(psi);
  } catch (const NotPreserverError& e) {
    throw InternalError(
        std::string("decompose_zpp: induced unital map failed "
                    "canonicalization despite ZPP input: ") +
        e.what());
  }

  // (5) R commutes with the canonical form, so S1^-1 R S1 = R1 (x) I_n.
  Mat r1 =
      s > 0 ? extract_tensor_factor(inverse(s1) * fit.R * s1, n, k) : Mat(f, 0, 0);

  // (6) assemble and verify.
  Mat s_total = fit.S * Mat::direct_sum(s1, Mat::identity(f, t));
  StructureCertificate cert{std::move(s_total), k, std::move(r1),
                            std::move(phi0), fit.nu};

  Verdict phi0_zpp = check_zpp(cert.phi0);
  if (!phi0_zpp.holds)
    throw InternalError("decompose_zpp: phi0 is not a zero product preserver");
  if (!cert.phi0.identity_image().pow(cert.nu).is_zero())
    throw InternalError("decompose_zpp: phi0(I)^nu != 0");
  if (reconstruct(cert, n, r) != phi)
    throw InternalError("decompose_zpp: certificate reconstruction failed");
  return cert;
}

StructureCertificate decompose_m1(const LinMap& phi) {
  if (phi.n() != 1) throw InputError("decompose_m1: n must be 1");
  // Phi(a) = a * Phi(1); the Fitting data of Phi(1) is already the
  // certificate and every linear map on M_1 preserves zero products.
  FittingDecomposition fit = fitting_decompose(phi.identity_image());
  LinMap phi0(phi.field(), 1, phi.r() - fit.s, {fit.N});
  StructureCertificate cert{fit.S, fit.s, fit.R, std::move(phi0), fit.nu};
  if (reconstruct(cert, 1, phi.r()) != phi)
    throw InternalError("decompose_m1: certificate reconstruction failed");
  return cert;
}

LinMap reconstruct(const StructureCertificate& cert, int n, int r) {
  const FieldDesc& f = cert.S.field();
  const int t = cert.phi0.r();
  if (cert.R1.rows() != cert.k || cert.R1.cols() != cert.k)
    throw InputError("reconstruct: R1 is not k x k");
  if (n * cert.k + t != r || cert.S.rows() != r || !cert.S.is_square())
    throw InputError("reconstruct: dimension mismatch");
  if (cert.phi0.n() != n) throw InputError("reconstruct: phi0 domain mismatch");

  Mat s_inv = inverse(cert.S);
  std::vector<Mat> images;
  images.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat blocks = Mat::direct_sum(kron(cert.R1, Mat::unit(f, n, n, i, j)),
                                   cert.phi0.image(i, j));
      images.push_back(cert.S * blocks * s_inv);
    }
  return LinMap(f, n, r, std::move(images));
}

SmallCodomainForm small_codomain_classify(const LinMap& phi) {
  const int n = phi.n();
  const int r = phi.r();
  if (n < 2) throw InputError("small_codomain_classify: n must be >= 2");
  if (r > n + 1)
    throw InputError("small_codomain_classify: requires r <= n + 1");

  Verdict zpp = check_zpp(phi);
  if (!zpp.holds)
    throw NotPreserverError("input is not a zero product preserver", zpp);

  FittingDecomposition fit = fitting_decompose(phi.identity_image());
  if (fit.s == 0) {
    // Phi(I) nilpotent: the range must have trivial multiplications.
    Verdict tm = check_trivial_mult(phi);
    if (!tm.holds)
      throw InternalError(
          "small_codomain_classify: nilpotent Phi(I) but nontrivial range "
          "multiplication");
    return SmallCodomainForm{SmallCodomainForm::Variant::TrivialRange,
                             std::nullopt, std::nullopt};
  }

  StructureCertificate cert = decompose_zpp(phi);
  // s = nk >= n and r <= n+1 force k = 1; phi0 maps into M_{r-n} with
  // r - n <= 1 and nilpotent range, hence is zero.
  if (cert.k != 1)
    throw InternalError("small_codomain_classify: expected k = 1");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!cert.phi0.image(i, j).is_zero())
        throw InternalError("small_codomain_classify: phi0 is not zero");
  return SmallCodomainForm{SmallCodomainForm::Variant::ScalarInner,
                           cert.R1.at(0, 0), cert.S};
}

}  // namespace zpp
