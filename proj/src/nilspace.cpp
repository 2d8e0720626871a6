#include "zpp/nilspace.hpp"

#include "zpp/rng.hpp"

namespace zpp {

namespace {

// basis elements as columns of an l^2 x d matrix
Mat vectorize(const std::vector<Mat>& basis) {
  const Mat& first = basis.front();
  const int l = first.rows();
  Mat m(first.field(), l * l, static_cast<int>(basis.size()));
  for (int c = 0; c < static_cast<int>(basis.size()); ++c)
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) m.at(i * l + j, c) = basis[c].at(i, j);
  return m;
}

Mat devectorize(const Mat& col, int l) {
  Mat m(col.field(), l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) m.at(i, j) = col.at(i * l + j, 0);
  return m;
}

Mat combine(const std::vector<Mat>& span, const std::vector<Scalar>& coeff) {
  Mat y(span.front().field(), span.front().rows(), span.front().cols());
  for (size_t i = 0; i < span.size(); ++i) y = y + span[i].scaled(coeff[i]);
  return y;
}

// extend the columns of `base` to `target` independent columns using
// columns of `pool` in natural order
Mat complete_basis(const Mat& base, const Mat& pool, int target) {
  Mat acc = base;
  for (int c = 0; c < pool.cols() && acc.cols() < target; ++c) {
    Mat cand = Mat::hcat(acc, pool.block(0, c, pool.rows(), 1));
    if (rank(cand) == cand.cols()) acc = std::move(cand);
  }
  if (acc.cols() != target)
    throw InternalError("complete_basis: pool did not span a complement");
  return acc;
}

struct Attempt {
  Mat s0;
  int p, q, u, v;
};

// One full canonicalization attempt from a chosen square-zero element y.
// Returns nullopt when a max-rank-dependent assertion fails, which means y
// was not of maximal rank.
std::optional<Attempt> attempt_canonicalize(const std::vector<Mat>& elements,
                                            const Mat& y) {
  const FieldDesc& f = y.field();
  const int l = y.rows();
  const int p = rank(y);
  const int q = l - 2 * p;
  if (q < 0) throw InternalError("canonicalize: rank exceeds l/2");

  // conjugate y to [[0, I_p, 0], [0, 0, 0], [0, 0, 0_q]]
  Mat fcols = column_space_basis(y);            // l x p, inside ker y
  auto w = solve(y, fcols);                     // y w_i = f_i
  if (!w) throw InternalError("canonicalize: image columns not attainable");
  Mat ker = kernel_basis(y);                    // l x (l - p)
  // complete F to a basis of ker y; the extra q columns join F and W
  Mat fk = complete_basis(fcols, ker, l - p);
  Mat completion = fk.block(0, p, l, q);
  Mat s0a = Mat::hcat(Mat::hcat(fcols, *w), completion);
  if (rank(s0a) != l)
    throw InternalError("canonicalize: [F | W | Z] failed to span F^l");
  Mat s0a_inv = inverse(s0a);

  {
    Mat e(f, l, l);
    for (int i = 0; i < p; ++i) e.at(i, p + i) = Scalar::one(f);
    if (s0a_inv * y * s0a != e)
      throw InternalError("canonicalize: square-zero normal form failed");
  }

  // transform the spanning elements and check the coarse pattern
  std::vector<Mat> z;
  z.reserve(elements.size());
  for (const Mat& el : elements) z.push_back(s0a_inv * el * s0a);
  for (const Mat& m : z) {
    if (!m.block(0, 0, p, p).is_zero() || !m.block(p, 0, p, 2 * p).is_zero() ||
        !m.block(p, 2 * p, p, q).is_zero() || !m.block(2 * p, 0, q, p).is_zero() ||
        !m.block(2 * p, 2 * p, q, q).is_zero())
      return std::nullopt;  // y is not of maximal rank
  }

  // corner supports of the (1,3) blocks
  Mat cols13(f, p, 0);
  Mat rows13(f, 0, q);
  for (const Mat& m : z) {
    Mat b = m.block(0, 2 * p, p, q);
    cols13 = Mat::hcat(cols13, b);
    rows13 = Mat::vcat(rows13, b);
  }
  Mat col_span = column_space_basis(cols13);             // p x u
  Mat row_span = column_space_basis(rows13.transpose()); // q x v
  const int u = col_span.cols();
  const int v = row_span.cols();
  Mat p_mat = complete_basis(col_span, Mat::identity(f, p), p);
  Mat q_cols = complete_basis(row_span, Mat::identity(f, q), q);
  Mat q_mat = q_cols.transpose();  // first v ROWS span the row spaces

  // The middle block must carry the same transform as the first: this
  // keeps the canonical square-zero element fixed, and then the (3,2)
  // corner support follows from Z13 W32 = 0 and the max-rank Schur
  // relations Z32 Z12^k W13 = 0.
  Mat t_mat = Mat::direct_sum(Mat::direct_sum(p_mat, p_mat), inverse(q_mat));
  Mat s0 = s0a * t_mat;
  Mat s0_inv = inverse(s0);
  for (const Mat& el : elements) {
    if (!matches_pattern(s0_inv * el * s0, p, q, u, v))
      return std::nullopt;  // (3,2) corner conclusion needs a max-rank y
  }
  return Attempt{std::move(s0), p, q, u, v};
}

}  // namespace

Verdict check_pairwise_zero(const std::vector<Mat>& basis) {
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) {
      Mat prod = basis[i] * basis[j];
      if (!prod.is_zero())
        return Verdict::fail(BasisPairWitness{static_cast<int>(i),
                                              static_cast<int>(j),
                                              std::move(prod)});
    }
  return Verdict::pass();
}

bool matches_pattern(const Mat& z, int p, int q, int u, int v) {
  const int l = 2 * p + q;
  if (z.rows() != l || z.cols() != l) return false;
  if (!z.block(0, 0, p, p).is_zero()) return false;
  if (!z.block(p, 0, p, l).is_zero()) return false;      // whole middle row
  if (!z.block(2 * p, 0, q, p).is_zero()) return false;
  if (!z.block(2 * p, 2 * p, q, q).is_zero()) return false;
  Mat z13 = z.block(0, 2 * p, p, q);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j)
      if ((i >= u || j >= v) && !z13.at(i, j).is_zero()) return false;
  Mat z32 = z.block(2 * p, p, q, p);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < p; ++j)
      if ((i < v || j < u) && !z32.at(i, j).is_zero()) return false;
  return true;
}

TrivialMultForm canonicalize_trivial_mult(const std::vector<Mat>& basis,
                                          std::uint64_t seed) {
  if (basis.empty())
    throw InputError("canonicalize_trivial_mult: empty basis");
  const FieldDesc& f = basis.front().field();
  const int l = basis.front().rows();
  for (const Mat& m : basis)
    if (m.rows() != l || m.cols() != l || !(m.field() == f))
      throw InputError("canonicalize_trivial_mult: mixed sizes or fields");
  if (f.kind() == FieldKind::PrimeField && 2 * f.modulus() <= static_cast<std::uint64_t>(l) + 2)
    throw InputError(
        "canonicalize_trivial_mult: field too small (needs |F| > (l+2)/2)");

  Verdict pz = check_pairwise_zero(basis);
  if (!pz.holds)
    throw NotPreserverError(
        "subspace does not have trivial multiplications", pz);

  // reduce to an independent spanning subset (first independent elements)
  std::vector<Mat> span;
  {
    Mat vec = vectorize(basis);
    RrefResult r = rref(vec);
    for (int c : r.pivot_cols)
      span.push_back(devectorize(vec.block(0, c, l * l, 1), l));
  }
  if (span.empty())
    return TrivialMultForm{Mat::identity(f, l), 0, l, 0, 0};
  const int dim = static_cast<int>(span.size());

  // max-rank element of the span: exhaustive projective enumeration when
  // |F|^dim fits the budget, randomized combinations otherwise
  bool exhaustive = false;
  if (f.kind() == FieldKind::PrimeField) {
    std::uint64_t count = 1;
    exhaustive = true;
    for (int e = 0; e < dim; ++e) {
      count *= f.modulus();
      if (count > 1000000) {
        exhaustive = false;
        break;
      }
    }
  }

  Mat best(f, l, l);
  int best_rank = -1;
  if (exhaustive) {
    const std::uint64_t pmod = f.modulus();
    std::vector<std::uint64_t> c(dim, 0);
    // projective representatives: first nonzero coefficient equals 1
    for (int lead = 0; lead < dim; ++lead) {
      std::uint64_t combos = 1;
      for (int e = lead + 1; e < dim; ++e) combos *= pmod;
      for (std::uint64_t ix = 0; ix < combos; ++ix) {
        std::vector<Scalar> coeff(span.size(), Scalar::zero(f));
        coeff[lead] = Scalar::one(f);
        std::uint64_t w = ix;
        for (int e = lead + 1; e < dim; ++e) {
          coeff[e] = Scalar::gf_residue(f, w % pmod);
          w /= pmod;
        }
        Mat cand = combine(span, coeff);
        int rk = rank(cand);
        if (rk > best_rank) {
          best_rank = rk;
          best = std::move(cand);
        }
      }
    }
  } else {
    Rng rng(seed);
    const int trials = 16 * l * dim;
    for (int t = 0; t < trials; ++t) {
      std::vector<Scalar> coeff;
      coeff.reserve(span.size());
      for (int e = 0; e < dim; ++e) coeff.push_back(random_scalar(f, rng));
      Mat cand = combine(span, coeff);
      int rk = rank(cand);
      if (rk > best_rank) {
        best_rank = rk;
        best = std::move(cand);
      }
    }
  }

  std::optional<Attempt> done = attempt_canonicalize(basis, best);
  if (!done) {
    if (exhaustive)
      throw InternalError(
          "canonicalize_trivial_mult: pattern assertions failed with an "
          "exhaustive max-rank element");
    throw InconclusiveError(
        "canonicalize_trivial_mult: max-rank search inconclusive; the "
        "randomized candidate failed the pattern assertions");
  }
  return TrivialMultForm{std::move(done->s0), done->p, done->q, done->u,
                         done->v};
}

std::vector<Mat> generate_pattern_subspace(int l, int p, int q, int u, int v,
                                           int dim, const FieldDesc& f,
                                           std::uint64_t seed) {
  if (p < 0 || q < 0 || 2 * p + q != l || u < 0 || v < 0 || u > p || v > q ||
      dim < 1)
    throw InputError("generate_pattern_subspace: parameter inconsistency");
  Rng rng(seed);
  auto nonzero_scalar = [&]() {
    if (f.kind() == FieldKind::PrimeField)
      return Scalar::gf_residue(f, 1 + rng.below(f.modulus() - 1));
    return Scalar::from_int(f, 1 + static_cast<long long>(rng.below(4)));
  };

  const int m = std::min(u, v);
  std::vector<Mat> out;
  for (int t = 0; t < dim; ++t) {
    Mat z(f, l, l);
    // Z12: block upper-triangular in the (u, p-u) split so that no span
    // element exceeds rank p.  Element 0 is a pure invertible Z12 with no
    // corners; it plays the role of the canonical rank-p element, which
    // pins the corner dimensions the canonicalizer recovers.
    Mat z12(f, p, p);
    if (p > 0) {
      if (t == 0) {
        Mat t1 = u > 0 ? random_invertible(f, u, rng) : Mat(f, 0, 0);
        Mat t2 = p - u > 0 ? random_invertible(f, p - u, rng) : Mat(f, 0, 0);
        z12 = Mat::direct_sum(t1, t2);
        if (u > 0 && p - u > 0)
          z12.set_block(0, u, random_mat(f, u, p - u, rng));
      } else {
        z12.set_block(0, 0, random_mat(f, u, p, rng));
        if (p - u > 0)
          z12.set_block(u, u, random_mat(f, p - u, p - u, rng));
      }
    }
    z.set_block(0, p, z12);
    if (t > 0) {
      // Z13 corner: shifted scaled partial diagonal; across elements
      // 1..dim-1 the shifts cover all of F^u (columns) and F^v (rows).
      for (int d = 0; d < m; ++d)
        z.at((d + t - 1) % u, 2 * p + (d + t - 1) % v) = nonzero_scalar();
      // Z32 corner: unconstrained random content.
      if (q - v > 0 && p - u > 0)
        z.set_block(2 * p + v, p + u, random_mat(f, q - v, p - u, rng));
    }
    out.push_back(std::move(z));
  }

  Verdict pz = check_pairwise_zero(out);
  if (!pz.holds)
    throw InternalError("generate_pattern_subspace: nonzero product");
  return out;
}

}  // namespace zpp
