#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zpp/fitting.hpp"
#include "zpp/rng.hpp"

using namespace zpp;

namespace {

const FieldDesc Q = FieldDesc::rationals();

Mat mat_of(const FieldDesc& f, int rows, int cols,
           std::initializer_list<long long> vals) {
  Mat m(f, rows, cols);
  auto it = vals.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Scalar::from_int(f, *it++);
  return m;
}

// plain rational Gauss-Jordan, an independent route for cross-checking the
// fraction-free elimination
Mat naive_rref_q(Mat a) {
  int t = 0;
  for (int c = 0; c < a.cols() && t < a.rows(); ++c) {
    int ri = -1;
    for (int i = t; i < a.rows(); ++i)
      if (!a.at(i, c).is_zero()) {
        ri = i;
        break;
      }
    if (ri < 0) continue;
    for (int j = 0; j < a.cols(); ++j) std::swap(a.at(t, j), a.at(ri, j));
    Scalar inv = a.at(t, c).inverse();
    for (int j = 0; j < a.cols(); ++j) a.at(t, j) = a.at(t, j) * inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == t || a.at(i, c).is_zero()) continue;
      Scalar factor = a.at(i, c);
      for (int j = 0; j < a.cols(); ++j)
        a.at(i, j) = a.at(i, j) - factor * a.at(t, j);
    }
    ++t;
  }
  return a;
}

}  // namespace

TEST_CASE("field descriptors") {
  CHECK(FieldDesc::gf(2).characteristic() == 2);
  CHECK(FieldDesc::gf(101).modulus() == 101);
  CHECK(Q.characteristic() == 0);
  CHECK_THROWS_AS(FieldDesc::gf(4), InputError);
  CHECK_THROWS_AS(FieldDesc::gf(1), InputError);
  CHECK_THROWS_AS(FieldDesc::gf(0), InputError);
  CHECK_THROWS_AS(FieldDesc::gf((1ull << 31) + 11), InputError);
  CHECK(is_prime_u64(2147483647ull));  // 2^31 - 1
  CHECK(!is_prime_u64(2147483647ull - 1));
}

TEST_CASE("scalar arithmetic over GF(p)") {
  FieldDesc f7 = FieldDesc::gf(7);
  CHECK(Scalar::from_int(f7, 3) + Scalar::from_int(f7, 5) ==
        Scalar::from_int(f7, 1));
  // GF(5): 2/3 = 4, checked against 3 * 4 = 12 = 2 (mod 5)
  FieldDesc f5 = FieldDesc::gf(5);
  Scalar div = Scalar::from_int(f5, 2) / Scalar::from_int(f5, 3);
  CHECK(div == Scalar::from_int(f5, 4));
  CHECK(Scalar::from_int(f5, 3) * div == Scalar::from_int(f5, 2));
  CHECK_THROWS_AS(Scalar::from_int(f5, 1) / Scalar::zero(f5), InputError);
  CHECK_THROWS_AS(Scalar::from_int(f5, 1) + Scalar::from_int(f7, 1),
                  InputError);
  CHECK(Scalar::from_int(f5, -1) == Scalar::from_int(f5, 4));
}

TEST_CASE("scalar arithmetic over Q") {
  Scalar half = Scalar::rational(mpq_class(1, 2));
  Scalar two_thirds = Scalar::rational(mpq_class(2, 3));
  CHECK(half * two_thirds == Scalar::rational(mpq_class(1, 3)));
  CHECK((half + half).is_one());
  CHECK((half - half).is_zero());
  CHECK(half.inverse() == Scalar::from_int(Q, 2));
  // canonical representation after arithmetic
  Scalar v = Scalar::rational(mpq_class(6, -4));
  CHECK(v.rational_value().get_den() == 2);
  CHECK(v.rational_value().get_num() == -3);
}

TEST_CASE("scalar field ops property: a * a^-1 = 1") {
  Rng rng(11);
  for (const FieldDesc& f : {FieldDesc::gf(2), FieldDesc::gf(97), Q}) {
    for (int t = 0; t < 50; ++t) {
      Scalar a = random_scalar(f, rng);
      if (a.is_zero()) continue;
      CHECK((a * a.inverse()).is_one());
      CHECK((a - a).is_zero());
    }
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(Mat(Q, 3, 3)) == 0);
  CHECK(rank(Mat::identity(FieldDesc::gf(5), 4)) == 4);
  CHECK(rank(mat_of(Q, 2, 2, {1, 2, 2, 4})) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Mat::identity(Q, 3)).cols() == 0);
  CHECK(kernel_basis(Mat(Q, 2, 2)).cols() == 2);
  FieldDesc f2 = FieldDesc::gf(2);
  Mat m = mat_of(f2, 2, 2, {1, 1, 1, 1});
  Mat k = kernel_basis(m);
  REQUIRE(k.cols() == 1);
  CHECK((m * k).is_zero());
  // brute-force oracle over GF(2)^2: kernel = {0, (1,1)}
  int in_kernel = 0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      Mat v = mat_of(f2, 2, 1, {x, y});
      if ((m * v).is_zero()) ++in_kernel;
    }
  CHECK(in_kernel == 2);
  CHECK(k.at(0, 0) == Scalar::one(f2));
  CHECK(k.at(1, 0) == Scalar::one(f2));
}

TEST_CASE("inverse examples") {
  FieldDesc f7 = FieldDesc::gf(7);
  CHECK(inverse(Mat::identity(Q, 3)) == Mat::identity(Q, 3));
  Mat d = mat_of(f7, 2, 2, {2, 0, 0, 3});
  Mat di = inverse(d);
  CHECK(di == mat_of(f7, 2, 2, {4, 0, 0, 5}));
  CHECK(d * di == Mat::identity(f7, 2));
  CHECK(inverse(mat_of(Q, 2, 2, {1, 1, 0, 1})) ==
        mat_of(Q, 2, 2, {1, -1, 0, 1}));
  CHECK_THROWS_AS(inverse(mat_of(Q, 2, 2, {1, 2, 2, 4})), InputError);
  CHECK_THROWS_AS(inverse(Mat(Q, 2, 3)), InputError);
}

TEST_CASE("inverse property: M M^-1 = M^-1 M = I") {
  Rng rng(5);
  for (const FieldDesc& f : {FieldDesc::gf(5), FieldDesc::gf(101), Q}) {
    for (int t = 0; t < 10; ++t) {
      Mat m = random_invertible(f, 4, rng);
      Mat mi = inverse(m);
      CHECK(m * mi == Mat::identity(f, 4));
      CHECK(mi * m == Mat::identity(f, 4));
    }
  }
}

TEST_CASE("kron examples") {
  CHECK(kron(Mat::identity(Q, 2), Mat::identity(Q, 3)) == Mat::identity(Q, 6));
  Mat a = mat_of(Q, 2, 2, {1, 2, 3, 4});
  CHECK(kron(Mat::identity(Q, 1), a) == a);
  // E_12 (x) E_21 has its single 1 at row 2, column 3 (1-based)
  Mat k = kron(Mat::unit(Q, 2, 2, 0, 1), Mat::unit(Q, 2, 2, 1, 0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(k.at(i, j).is_zero() == !(i == 1 && j == 2));
  CHECK_THROWS_AS(kron(a, Mat::identity(FieldDesc::gf(5), 2)), InputError);
}

TEST_CASE("kron mixed-product law") {
  Rng rng(7);
  for (const FieldDesc& f : {FieldDesc::gf(3), FieldDesc::gf(11), Q}) {
    for (int t = 0; t < 8; ++t) {
      Mat a = random_mat(f, 2, 3, rng), b = random_mat(f, 2, 2, rng);
      Mat c = random_mat(f, 3, 2, rng), d = random_mat(f, 2, 3, rng);
      CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    }
  }
}

TEST_CASE("perfect shuffle") {
  FieldDesc f5 = FieldDesc::gf(5);
  CHECK(perfect_shuffle(1, 4, Q) == Mat::identity(Q, 4));
  CHECK(perfect_shuffle(3, 1, Q) == Mat::identity(Q, 3));

  // n = k = 2: fixes coordinates 1 and 4, swaps 2 and 3
  Mat p = perfect_shuffle(2, 2, Q);
  Mat expected(Q, 4, 4);
  expected.at(0, 0) = Scalar::one(Q);
  expected.at(1, 2) = Scalar::one(Q);
  expected.at(2, 1) = Scalar::one(Q);
  expected.at(3, 3) = Scalar::one(Q);
  CHECK(p == expected);

  // oracle: the permutation solving P^t (E_11 (x) I_2) P = I_2 (x) E_11,
  // searched over all 24 permutation matrices, includes our choice
  {
    int perm[4] = {0, 1, 2, 3};
    Mat lhs_in = kron(Mat::unit(Q, 2, 2, 0, 0), Mat::identity(Q, 2));
    Mat target = kron(Mat::identity(Q, 2), Mat::unit(Q, 2, 2, 0, 0));
    bool ours_found = false;
    do {
      Mat pm(Q, 4, 4);
      for (int i = 0; i < 4; ++i) pm.at(i, perm[i]) = Scalar::one(Q);
      if (pm.transpose() * lhs_in * pm == target && pm == p) ours_found = true;
    } while (std::next_permutation(perm, perm + 4));
    CHECK(ours_found);
  }

  // conjugation identity on every matrix unit, several shapes and fields
  for (auto [n, k] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    for (const FieldDesc& f : {f5, Q}) {
      Mat pi = perfect_shuffle(n, k, f);
      CHECK(pi * pi.transpose() == Mat::identity(f, n * k));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Mat u = Mat::unit(f, n, n, i, j);
          CHECK(pi.transpose() * kron(u, Mat::identity(f, k)) * pi ==
                kron(Mat::identity(f, k), u));
        }
    }
  }
}

TEST_CASE("fraction-free elimination agrees with naive rational elimination") {
  Rng rng(13);
  for (int t = 0; t < 40; ++t) {
    int rows = 1 + static_cast<int>(rng.below(6));
    int cols = 1 + static_cast<int>(rng.below(6));
    Mat m = random_mat(Q, rows, cols, rng);
    RrefResult r = rref(m);
    CHECK(r.rref == naive_rref_q(m));
    CHECK(rank(m) == rank(m.transpose()));
    Mat k = kernel_basis(m);
    CHECK(k.cols() == cols - r.rank());
    if (k.cols() > 0) CHECK((m * k).is_zero());
  }
}

TEST_CASE("rational elimination with large entries and planted rank") {
  Rng rng(211);
  for (int t = 0; t < 8; ++t) {
    // plant rank via a thin product, with huge mixed-scale entries
    int n = 4 + static_cast<int>(rng.below(3));
    int planted = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n) - 1));
    Mat x(Q, n, planted), y(Q, planted, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < planted; ++j) {
        mpz_class num(static_cast<long>(rng.below(1000000)));
        num = num * num * num + static_cast<long>(rng.below(97));
        mpz_class den(1 + static_cast<long>(rng.below(99999)));
        x.at(i, j) = Scalar::rational(mpq_class(num, den));
        y.at(j, i) = Scalar::rational(
            mpq_class(static_cast<long>(rng.below(1000)) - 500,
                      1 + static_cast<long>(rng.below(50))));
      }
    if (rank(x) < planted || rank(y) < planted) continue;
    Mat a = x * y;
    CHECK(rank(a) == planted);
    Mat k = kernel_basis(a);
    CHECK(k.cols() == n - planted);
    CHECK((a * k).is_zero());
  }
}

TEST_CASE("kernel and column space over GF(p), exact properties") {
  Rng rng(17);
  for (const FieldDesc& f : {FieldDesc::gf(2), FieldDesc::gf(7)}) {
    for (int t = 0; t < 30; ++t) {
      Mat m = random_mat(f, 3 + static_cast<int>(rng.below(3)),
                         3 + static_cast<int>(rng.below(3)), rng);
      Mat k = kernel_basis(m);
      CHECK((m * k).is_zero());
      CHECK(k.cols() == m.cols() - rank(m));
      CHECK(rank(k) == k.cols());
      Mat cb = column_space_basis(m);
      CHECK(cb.cols() == rank(m));
      CHECK(rank(cb) == cb.cols());
    }
  }
}

TEST_CASE("solve returns a particular solution") {
  Rng rng(19);
  for (const FieldDesc& f : {FieldDesc::gf(5), Q}) {
    for (int t = 0; t < 15; ++t) {
      Mat a = random_mat(f, 4, 3, rng);
      Mat x = random_mat(f, 3, 2, rng);
      Mat b = a * x;
      auto sol = solve(a, b);
      REQUIRE(sol.has_value());
      CHECK(a * *sol == b);
    }
    // inconsistent system
    Mat a(f, 2, 1);
    a.at(0, 0) = Scalar::one(f);
    Mat b(f, 2, 1);
    b.at(1, 0) = Scalar::one(f);
    CHECK(!solve(a, b).has_value());
  }
}

TEST_CASE("fitting decomposition examples") {
  // identity: s = r, N vacuous, nu = 0
  FittingDecomposition fit = fitting_decompose(Mat::identity(Q, 4));
  CHECK(fit.s == 4);
  CHECK(fit.R == Mat::identity(Q, 4));
  CHECK(fit.N.rows() == 0);
  CHECK(fit.nu == 0);

  // nilpotent Jordan block: s = 0, N = J, nu = m
  Mat j3(Q, 3, 3);
  j3.at(0, 1) = Scalar::one(Q);
  j3.at(1, 2) = Scalar::one(Q);
  fit = fitting_decompose(j3);
  CHECK(fit.s == 0);
  CHECK(fit.N == j3);
  CHECK(fit.nu == 3);

  // [[1,1],[0,0]]: s = 1, R = (1), N = (0), nu = 1; S verified by product
  Mat a = mat_of(Q, 2, 2, {1, 1, 0, 0});
  fit = fitting_decompose(a);
  CHECK(fit.s == 1);
  CHECK(fit.R == Mat::identity(Q, 1));
  CHECK(fit.N == Mat(Q, 1, 1));
  CHECK(fit.nu == 1);
  CHECK(inverse(fit.S) * a * fit.S == Mat::direct_sum(fit.R, fit.N));
}

TEST_CASE("fitting decomposition properties on random matrices") {
  Rng rng(23);
  for (const FieldDesc& f : {FieldDesc::gf(2), FieldDesc::gf(7), Q}) {
    for (int t = 0; t < 25; ++t) {
      int r = 1 + static_cast<int>(rng.below(6));
      // bias towards singular matrices: random product of thin factors
      int mid = static_cast<int>(rng.below(static_cast<std::uint64_t>(r) + 1));
      Mat a = mid == 0 ? Mat(f, r, r)
                       : random_mat(f, r, mid, rng) * random_mat(f, mid, r, rng);
      FittingDecomposition fit = fitting_decompose(a);
      CHECK(inverse(fit.S) * a * fit.S == Mat::direct_sum(fit.R, fit.N));
      CHECK(rank(fit.R) == fit.s);
      CHECK(fit.N.pow(fit.nu).is_zero());
      if (fit.nu > 0) CHECK(!fit.N.pow(fit.nu - 1).is_zero());
      CHECK(fit.nu <= r - fit.s);
      CHECK(rank(a.pow(r)) == fit.s);
    }
  }
}

TEST_CASE("nil index conventions") {
  CHECK(nil_index(Mat(Q, 0, 0)) == 0);
  CHECK(nil_index(Mat(Q, 3, 3)) == 1);
  Mat j2(Q, 2, 2);
  j2.at(0, 1) = Scalar::one(Q);
  CHECK(nil_index(j2) == 2);
  CHECK_THROWS_AS(nil_index(Mat::identity(Q, 2)), InputError);
}

TEST_CASE("0-size matrices flow through the API") {
  Mat empty(Q, 0, 0);
  CHECK(empty.is_zero());
  CHECK((empty * empty) == empty);
  CHECK(kron(empty, Mat::identity(Q, 3)).rows() == 0);
  CHECK(Mat::direct_sum(empty, Mat::identity(Q, 2)) == Mat::identity(Q, 2));
  CHECK(rank(empty) == 0);
  CHECK(inverse(empty) == empty);
}
