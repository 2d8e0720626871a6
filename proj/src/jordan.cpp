#include "zpp/jordan.hpp"

#include "zpp/rng.hpp"

namespace zpp {

namespace {

LinMap corner_restrict(const LinMap& phi, int r0, int size, const char* ctx) {
  // images must vanish outside the [r0, r0+size) diagonal corner
  const int r = phi.r();
  std::vector<Mat> images;
  for (int i = 0; i < phi.n(); ++i)
    for (int j = 0; j < phi.n(); ++j) {
      const Mat& y = phi.image(i, j);
      Mat corner = y.block(r0, r0, size, size);
      Mat rebuilt(y.field(), r, r);
      rebuilt.set_block(r0, r0, corner);
      if (rebuilt != y)
        throw InternalError(std::string(ctx) +
                            ": image has support outside its corner");
      images.push_back(std::move(corner));
    }
  return LinMap(phi.field(), phi.n(), size, std::move(images));
}

}  // namespace

JordanSplit split_jordan(const LinMap& theta) {
  const FieldDesc& f = theta.field();
  const int n = theta.n();
  const int r = theta.r();
  if (n < 2) throw InputError("split_jordan: n = 1 splitting is degenerate");

  Verdict jordan = check_jordan(theta);  // also rejects characteristic 2
  if (!jordan.holds)
    throw NotPreserverError("input is not a Jordan homomorphism", jordan);

  // theta(A)theta(B) = h(AB) + g(BA): off-diagonal units isolate h.
  std::vector<Mat> h_images(static_cast<size_t>(n) * n, Mat(f, r, r));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l)
      if (i != l) h_images[i * n + l] = theta.image(i, i) * theta.image(i, l);
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    h_images[i * n + i] = h_images[i * n + j] * h_images[j * n + i];
  }
  LinMap h(f, n, r, std::move(h_images));

  std::vector<Mat> g_images;
  g_images.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g_images.push_back(theta.image(i, j) - h.image(i, j));
  LinMap g(f, n, r, std::move(g_images));

  Mat p = h.identity_image();
  Mat q = theta.identity_image() - p;

  // verify every JordanSplit invariant before returning
  if (p * p != p || q * q != q)
    throw InternalError("split_jordan: P or Q is not idempotent");
  if (!(p * q).is_zero() || !(q * p).is_zero())
    throw InternalError("split_jordan: P and Q are not disjoint");
  if (!check_ring_hom(h).holds)
    throw InternalError("split_jordan: h is not a ring homomorphism");
  if (!check_ring_hom(g.precompose_transpose()).holds)
    throw InternalError("split_jordan: g is not a ring anti-homomorphism");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (theta.image(i, j) != h.image(i, j) + g.image(i, j))
        throw InternalError("split_jordan: theta != h + g");
      if (p * theta.image(i, j) != h.image(i, j) ||
          theta.image(i, j) * p != h.image(i, j))
        throw InternalError("split_jordan: P does not cut out h");
    }
  return JordanSplit{std::move(p), std::move(q), std::move(h), std::move(g)};
}

JordanCanonicalForm jordan_canonical_form(const LinMap& theta) {
  const FieldDesc& f = theta.field();
  const int n = theta.n();
  const int r = theta.r();
  if (n < 2) throw InputError("jordan_canonical_form: n must be >= 2");

  Verdict jordan = check_jordan(theta);
  if (!jordan.holds)
    throw NotPreserverError("input is not a Jordan homomorphism", jordan);

  // (1) e = theta(I) is idempotent and compresses every image.
  Mat e = theta.identity_image();
  if (e * e != e) throw InternalError("jordan_canonical_form: theta(I)^2 != theta(I)");
  const int s = rank(e);
  const int t = r - s;
  Mat u = Mat::hcat(column_space_basis(e), kernel_basis(e));
  LinMap compressed = theta.conjugated(u);
  LinMap theta_c = corner_restrict(compressed, 0, s, "jordan_canonical_form");

  if (s == 0) {
    JordanCanonicalForm form{u, 0, 0, t};
    // zero map; nothing else to verify
    return form;
  }

  // (2)-(3) split the unital corner map and compress h, g to their corners.
  JordanSplit js = [&] {
    try {
      return split_jordan(theta_c);
    } catch (const NotPreserverError& e) {
      throw InternalError(
          std::string("jordan_canonical_form: corner map lost the Jordan "
                      "property: ") +
          e.what());
    }
  }();
  if (js.P + js.Q != Mat::identity(f, s))
    throw InternalError("jordan_canonical_form: P + Q != I on the corner");
  const int s1 = rank(js.P);
  const int s2 = s - s1;
  Mat v = Mat::hcat(column_space_basis(js.P), column_space_basis(js.Q));
  if (v.cols() != s)
    throw InternalError("jordan_canonical_form: rank P + rank Q != s");
  LinMap h_conj = js.h.conjugated(v);
  LinMap g_conj = js.g.conjugated(v);
  LinMap h_c = corner_restrict(h_conj, 0, s1, "jordan_canonical_form(h)");
  // g is supported on the complementary corner
  std::vector<Mat> g_images;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Mat& y = g_conj.image(i, j);
      Mat corner = y.block(s1, s1, s2, s2);
      Mat rebuilt(f, s, s);
      rebuilt.set_block(s1, s1, corner);
      if (rebuilt != y)
        throw InternalError(
            "jordan_canonical_form: g image has support outside its corner");
      g_images.push_back(std::move(corner));
    }
  LinMap g_c(f, n, s2, std::move(g_images));

  // (4) canonicalize both unital homomorphisms.
  int k1 = 0, k2 = 0;
  Mat sh(f, 0, 0), sg(f, 0, 0);
  try {
    std::tie(sh, k1) = canonicalize_unital_hom(h_c);
    std::tie(sg, k2) = canonicalize_unital_hom(g_c.precompose_transpose());
  } catch (const NotPreserverError& e) {
    throw InternalError(
        std::string("jordan_canonical_form: split parts failed "
                    "canonicalization: ") +
        e.what());
  }

  // (5) assemble and verify the reconstruction identity on all units.
  Mat s_total = u *
                Mat::direct_sum(v, Mat::identity(f, t)) *
                Mat::direct_sum(Mat::direct_sum(sh, sg), Mat::identity(f, t));
  Mat s_inv = inverse(s_total);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat blocks = Mat::direct_sum(
          Mat::direct_sum(kron(Mat::identity(f, k1), Mat::unit(f, n, n, i, j)),
                          kron(Mat::identity(f, k2), Mat::unit(f, n, n, j, i))),
          Mat(f, t, t));
      if (theta.image(i, j) != s_total * blocks * s_inv)
        throw InternalError("jordan_canonical_form: reconstruction failed");
    }
  return JordanCanonicalForm{std::move(s_total), k1, k2, t};
}

DzpCertificate decompose_dzp(const LinMap& phi) {
  const FieldDesc& f = phi.field();
  const int n = phi.n();
  const int r = phi.r();
  if (f.characteristic() == 2)
    throw InputError("decompose_dzp: characteristic-2 field rejected");
  if (n < 2) throw InputError("decompose_dzp: n must be >= 2");

  // Necessary condition: Phi(I) commutes with every image (idempotent
  // argument); failure refutes double zero product preservation.
  Mat t_img = phi.identity_image();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat lhs = t_img * phi.image(i, j);
      Mat rhs = phi.image(i, j) * t_img;
      if (lhs != rhs)
        throw NotPreserverError(
            "input is not a double zero product preserver (Phi(I) does not "
            "commute with Phi(E_" +
                std::to_string(i + 1) + std::to_string(j + 1) + "))",
            Verdict::fail(UnitsWitness{"commute_identity_image", i, j, -1, -1,
                                       std::move(lhs), std::move(rhs)}));
    }

  FittingDecomposition fit = fitting_decompose(t_img);
  const int s = fit.s;
  const int t = r - s;
  LinMap conj = phi.conjugated(fit.S);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Mat& y = conj.image(i, j);
      if (!y.block(0, s, s, t).is_zero() || !y.block(s, 0, t, s).is_zero())
        throw InternalError("decompose_dzp: image not block diagonal");
    }

  std::vector<Mat> phi0_images, psi_images;
  Mat r_inv = s > 0 ? inverse(fit.R) : Mat(f, 0, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      phi0_images.push_back(conj.image(i, j).block(s, s, t, t));
      psi_images.push_back(conj.image(i, j).block(0, 0, s, s) * r_inv);
    }
  LinMap phi0(f, n, t, std::move(phi0_images));
  LinMap psi(f, n, s, std::move(psi_images));

  // Psi must preserve idempotents, i.e. be a Jordan homomorphism.
  Verdict jordan = s > 0 ? check_jordan(psi) : Verdict::pass();
  if (!jordan.holds)
    throw NotPreserverError(
        "input is not a double zero product preserver (induced unital map "
        "is not a Jordan homomorphism)",
        jordan);

  int k1 = 0, k2 = 0;
  Mat s1(f, s, s);
  if (s > 0) {
    JordanCanonicalForm jcf = jordan_canonical_form(psi);
    if (jcf.t != 0)
      throw InternalError("decompose_dzp: unital Jordan form has a 0-block");
    k1 = jcf.k1;
    k2 = jcf.k2;
    s1 = std::move(jcf.S);
  }

  // S1^-1 R S1 commutes with the canonical Jordan form blockwise; the
  // cross blocks vanish and each diagonal block is a tensor commutant.
  Mat c = s > 0 ? inverse(s1) * fit.R * s1 : Mat(f, 0, 0);
  const int b1 = n * k1, b2 = n * k2;
  if (!c.block(0, b1, b1, b2).is_zero() || !c.block(b1, 0, b2, b1).is_zero())
    throw InternalError("decompose_dzp: R does not split across the summands");
  Mat r1 = extract_tensor_factor(c.block(0, 0, b1, b1), n, k1);
  Mat r2 = extract_tensor_factor(c.block(b1, b1, b2, b2), n, k2);

  Mat s_total = fit.S * Mat::direct_sum(s1, Mat::identity(f, t));
  DzpCertificate cert{std::move(s_total), k1,        k2,
                      std::move(r1),      std::move(r2), std::move(phi0)};
  if (reconstruct_dzp(cert, n, r) != phi)
    throw InternalError("decompose_dzp: certificate reconstruction failed");

  // Residual necessary condition on phi0: Phi_0(P)^(nu+1) = 0 for
  // idempotents P; sample deterministically.
  if (t > 0) {
    Rng rng(0xd2b5eedULL);
    for (int trial = 0; trial < 16; ++trial) {
      Mat p = random_idempotent(f, n, rng);
      Mat img = cert.phi0.apply(p);
      Mat powed = img.pow(fit.nu + 1);
      if (!powed.is_zero())
        throw NotPreserverError(
            "input is not a double zero product preserver (Phi_0(P)^(nu+1) "
            "!= 0 for an idempotent P)",
            Verdict::fail(IdempotentWitness{std::move(p), std::move(img),
                                            std::move(powed)}));
    }
  }
  return cert;
}

LinMap reconstruct_dzp(const DzpCertificate& cert, int n, int r) {
  const FieldDesc& f = cert.S.field();
  const int t = cert.phi0.r();
  if (n * (cert.k1 + cert.k2) + t != r || cert.S.rows() != r)
    throw InputError("reconstruct_dzp: dimension mismatch");
  Mat s_inv = inverse(cert.S);
  std::vector<Mat> images;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat blocks = Mat::direct_sum(
          Mat::direct_sum(kron(cert.R1, Mat::unit(f, n, n, i, j)),
                          kron(cert.R2, Mat::unit(f, n, n, j, i))),
          cert.phi0.image(i, j));
      images.push_back(cert.S * blocks * s_inv);
    }
  return LinMap(f, n, r, std::move(images));
}

PromotionReport check_zpp_jordan_promotion(const LinMap& theta) {
  Verdict jordan = check_jordan(theta);
  Verdict zpp = check_zpp(theta);
  Verdict ring_hom = check_ring_hom(theta);
  bool holds = !(jordan.holds && zpp.holds) || ring_hom.holds;
  return PromotionReport{holds, std::move(jordan), std::move(zpp),
                         std::move(ring_hom)};
}

}  // namespace zpp
