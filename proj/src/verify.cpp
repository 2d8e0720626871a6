#include "zpp/verify.hpp"

#include "zpp/rng.hpp"

namespace zpp {

namespace {

void require_char_not_two(const FieldDesc& f, const char* what) {
  if (f.characteristic() == 2)
    throw InputError(std::string(what) + ": characteristic-2 field rejected");
}

}  // namespace

Verdict check_zpp(const LinMap& phi) {
  const int n = phi.n();
  if (n == 1) return Verdict::pass();
  const Mat t = phi.identity_image();
  const Mat zero(phi.field(), phi.r(), phi.r());
  // scan the j != k quadruples first: E_ij E_kl = 0 there, so a violation
  // is already an explicit counterexample pair
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (k == j) continue;
        for (int l = 0; l < n; ++l) {
          Mat lhs = phi.image(i, j) * phi.image(k, l);
          if (!lhs.is_zero()) {
            Mat a = Mat::unit(phi.field(), n, n, i, j);
            Mat b = Mat::unit(phi.field(), n, n, k, l);
            return Verdict::fail(PairWitness{std::move(a), std::move(b),
                                             std::move(lhs), false, false});
          }
        }
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        Mat lhs = phi.image(i, j) * phi.image(j, l);
        Mat rhs = t * phi.image(i, l);
        if (lhs != rhs)
          return Verdict::fail(
              UnitsWitness{"zpp", i, j, j, l, std::move(lhs), std::move(rhs)});
      }
  return Verdict::pass();
}

Verdict check_ring_hom(const LinMap& phi) {
  const int n = phi.n();
  const Mat zero(phi.field(), phi.r(), phi.r());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Mat lhs = phi.image(i, j) * phi.image(k, l);
          const Mat& rhs = (j == k) ? phi.image(i, l) : zero;
          if (lhs != rhs)
            return Verdict::fail(
                UnitsWitness{"ring_hom", i, j, k, l, std::move(lhs), rhs});
        }
  return Verdict::pass();
}

Verdict check_jordan(const LinMap& phi) {
  require_char_not_two(phi.field(), "check_jordan");
  const int n = phi.n();
  const Mat zero(phi.field(), phi.r(), phi.r());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Mat lhs = phi.image(i, j) * phi.image(k, l) +
                    phi.image(k, l) * phi.image(i, j);
          // E_ij E_kl + E_kl E_ij = delta_jk E_il + delta_li E_kj
          Mat rhs = zero;
          if (j == k) rhs = rhs + phi.image(i, l);
          if (l == i) rhs = rhs + phi.image(k, j);
          if (lhs != rhs)
            return Verdict::fail(UnitsWitness{"jordan", i, j, k, l,
                                              std::move(lhs), std::move(rhs)});
        }
  return Verdict::pass();
}

bool rank_one_enumeration_feasible(int n, const FieldDesc& f,
                                   std::uint64_t budget) {
  if (f.kind() != FieldKind::PrimeField) return false;
  // p^(2n-2) candidates
  std::uint64_t count = 1;
  for (int e = 0; e < 2 * n - 2; ++e) {
    if (count > budget / f.modulus() + 1) return false;
    count *= f.modulus();
  }
  return count <= budget;
}

std::vector<Mat> enumerate_rank_one_idempotents(int n, const FieldDesc& f) {
  if (f.kind() != FieldKind::PrimeField)
    throw InputError("rank-one enumeration needs a finite field");
  const std::uint64_t p = f.modulus();
  std::vector<Mat> out;

  // x runs over projective representatives: x_lead = 1 at position `lead`,
  // zeros before.  For each x, y must satisfy y^t x = 1: y_lead is
  // determined by the free coordinates of y.
  std::vector<std::uint64_t> x(n), y(n);
  for (int lead = 0; lead < n; ++lead) {
    std::fill(x.begin(), x.end(), 0);
    x[lead] = 1;
    // free coordinates of x: positions lead+1..n-1
    int xf = n - 1 - lead;
    std::uint64_t xcount = 1;
    for (int e = 0; e < xf; ++e) xcount *= p;
    for (std::uint64_t xc = 0; xc < xcount; ++xc) {
      std::uint64_t v = xc;
      for (int t = 0; t < xf; ++t) {
        x[lead + 1 + t] = v % p;
        v /= p;
      }
      // free coordinates of y: all but `lead`
      std::uint64_t ycount = 1;
      for (int e = 0; e < n - 1; ++e) ycount *= p;
      for (std::uint64_t yc = 0; yc < ycount; ++yc) {
        std::uint64_t w = yc;
        std::uint64_t dot = 0;
        for (int t = 0; t < n; ++t) {
          if (t == lead) continue;
          y[t] = w % p;
          w /= p;
          dot = (dot + y[t] * x[t]) % p;
        }
        // y_lead * x_lead = 1 - sum  (x_lead = 1)
        y[lead] = (1 + p - dot % p) % p;
        Mat m(f, n, n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            m.at(i, j) = Scalar::gf_residue(f, (x[i] * y[j]) % p);
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

std::vector<Mat> sample_rank_one_idempotents(int n, const FieldDesc& f,
                                             int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Mat> out;
  while (static_cast<int>(out.size()) < count) {
    Mat x = random_mat(f, n, 1, rng);
    Mat y = random_mat(f, 1, n, rng);
    Mat dot = y * x;
    if (dot.at(0, 0).is_zero()) continue;
    out.push_back((x * y).scaled(dot.at(0, 0).inverse()));
  }
  return out;
}

Verdict check_idempotent_preserver(const LinMap& phi) {
  require_char_not_two(phi.field(), "check_idempotent_preserver");
  Verdict base = check_jordan(phi);

  // cross-validate on rank-one idempotents: full enumeration within the
  // budget, a fixed-seed sample beyond it
  std::vector<Mat> idems =
      rank_one_enumeration_feasible(phi.n(), phi.field())
          ? enumerate_rank_one_idempotents(phi.n(), phi.field())
          : sample_rank_one_idempotents(phi.n(), phi.field(), 200, 0);
  std::optional<IdempotentWitness> bad;
  for (const Mat& e : idems) {
    Mat img = phi.apply(e);
    Mat sq = img * img;
    if (sq != img) {
      bad = IdempotentWitness{e, std::move(img), std::move(sq)};
      break;
    }
  }
  if (base.holds && bad)
    throw InternalError(
        "idempotent preserver: Jordan map sent an idempotent to a "
        "non-idempotent");
  if (!base.holds && bad) return Verdict::fail(std::move(*bad));
  return base;
}

Verdict check_trivial_mult(const LinMap& phi) {
  const int n = phi.n();
  const Mat zero(phi.field(), phi.r(), phi.r());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Mat lhs = phi.image(i, j) * phi.image(k, l);
          if (!lhs.is_zero())
            return Verdict::fail(
                UnitsWitness{"trivial_mult", i, j, k, l, std::move(lhs), zero});
        }
  return Verdict::pass();
}

MatPair sample_zero_pair(int n, const FieldDesc& f, std::uint64_t seed,
                         bool double_zero) {
  Rng rng(seed);
  const int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  Mat a(f, n, n);
  if (m > 0) {
    for (int tries = 0;; ++tries) {
      if (tries > 10000)
        throw InternalError("sample_zero_pair: rank sampling failed");
      Mat x = random_mat(f, n, m, rng);
      Mat y = random_mat(f, m, n, rng);
      a = x * y;
      if (rank(a) == m) break;
    }
  }
  Mat k = kernel_basis(a);  // n x d, d >= 1 since rank < n
  Mat b(f, n, n);
  if (!double_zero) {
    b = k * random_mat(f, k.cols(), n, rng);
  } else {
    Mat l = kernel_basis(a.transpose());
    b = k * random_mat(f, k.cols(), l.cols(), rng) * l.transpose();
  }
  if (!(a * b).is_zero())
    throw InternalError("sample_zero_pair: A B != 0");
  if (double_zero && !(b * a).is_zero())
    throw InternalError("sample_zero_pair: B A != 0");
  return MatPair{std::move(a), std::move(b)};
}

Verdict fuzz_preserver(const LinMap& phi, PreserverProperty prop,
                       std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw InputError("fuzz_preserver: trials must be >= 1");
  Rng rng(seed);
  const bool dbl = prop == PreserverProperty::Dzp;
  for (std::uint64_t t = 0; t < trials; ++t) {
    MatPair pair = sample_zero_pair(phi.n(), phi.field(), rng.next(), dbl);
    Mat pa = phi.apply(pair.a);
    Mat pb = phi.apply(pair.b);
    Mat ab = pa * pb;
    if (!ab.is_zero())
      return Verdict{false, CheckMode::Randomized, t + 1,
                     PairWitness{pair.a, pair.b, std::move(ab), false, dbl}};
    if (dbl) {
      Mat ba = pb * pa;
      if (!ba.is_zero())
        return Verdict{false, CheckMode::Randomized, t + 1,
                       PairWitness{pair.a, pair.b, std::move(ba), true, true}};
    }
  }
  return Verdict{true, CheckMode::Randomized, trials, std::nullopt};
}

Verdict check_power_products(const LinMap& phi, int nu, int tuples,
                             std::uint64_t seed) {
  if (nu < 0 || tuples < 1)
    throw InputError("check_power_products: bad parameters");
  Verdict zpp = check_zpp(phi);
  if (!zpp.holds)
    throw InputError("check_power_products: map is not a zero product preserver");
  if (!phi.identity_image().pow(nu).is_zero())
    throw InputError("check_power_products: Phi(I)^nu != 0");

  Rng rng(seed);
  for (int t = 0; t < tuples; ++t) {
    std::vector<Mat> inputs;
    Mat prod = Mat::identity(phi.field(), phi.r());
    for (int i = 0; i <= nu; ++i) {
      inputs.push_back(random_mat(phi.field(), phi.n(), phi.n(), rng));
      prod = prod * phi.apply(inputs.back());
    }
    if (!prod.is_zero())
      return Verdict{false, CheckMode::Randomized,
                     static_cast<std::uint64_t>(t + 1),
                     TupleWitness{std::move(inputs), std::move(prod)}};
  }
  return Verdict{true, CheckMode::Randomized,
                 static_cast<std::uint64_t>(tuples), std::nullopt};
}

}  // namespace zpp
