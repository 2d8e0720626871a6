#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "zpp/fixtures.hpp"
#include "zpp/rng.hpp"

using namespace zpp;

namespace {

const FieldDesc Q = FieldDesc::rationals();

// brute-force ZPP oracle: enumerate every pair (A, B) in M_n(GF(p))^2 with
// A B = 0 and test Phi(A) Phi(B) = 0
std::vector<Mat> all_matrices(const FieldDesc& f, int n) {
  std::uint64_t total = 1;
  for (int e = 0; e < n * n; ++e) total *= f.modulus();
  std::vector<Mat> out;
  out.reserve(total);
  for (std::uint64_t ix = 0; ix < total; ++ix) {
    std::uint64_t w = ix;
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        m.at(i, j) = Scalar::gf_residue(f, w % f.modulus());
        w /= f.modulus();
      }
    out.push_back(std::move(m));
  }
  return out;
}

bool brute_force_zpp(const LinMap& phi, const std::vector<Mat>& all) {
  for (const Mat& a : all)
    for (const Mat& b : all) {
      if (!(a * b).is_zero()) continue;
      if (!(phi.apply(a) * phi.apply(b)).is_zero()) return false;
    }
  return true;
}

LinMap random_linmap(const FieldDesc& f, int n, int r, Rng& rng) {
  std::vector<Mat> images;
  for (int i = 0; i < n * n; ++i) images.push_back(random_mat(f, r, r, rng));
  return LinMap(f, n, r, std::move(images));
}

std::string serialize(const Mat& m) { return m.to_string(); }

}  // namespace

TEST_CASE("check_zpp: basic fixtures") {
  CHECK(check_zpp(LinMap::identity_map(Q, 3)).holds);
  CHECK(check_zpp(example_band_nilpotent(2, 3, Q)).holds);
  CHECK(check_zpp(example_symmetric_killer(Q)).holds);
  // n = 1: every linear map preserves zero products
  CHECK(check_zpp(LinMap(Q, 1, 2, {Mat::unit(Q, 2, 2, 0, 1)})).holds);

  Verdict v = check_zpp(LinMap::transpose_map(Q, 2));
  REQUIRE(!v.holds);
  // witness is an explicit counterexample pair of matrix units
  const auto* pw = std::get_if<PairWitness>(&*v.witness);
  REQUIRE(pw != nullptr);
  CHECK((pw->a * pw->b).is_zero());
  LinMap tr = LinMap::transpose_map(Q, 2);
  CHECK(tr.apply(pw->a) * tr.apply(pw->b) == pw->product);
  CHECK(!pw->product.is_zero());
  // the documented pair (E_12, E_11) is itself a genuine counterexample
  Mat e12 = Mat::unit(Q, 2, 2, 0, 1), e11 = Mat::unit(Q, 2, 2, 0, 0);
  CHECK((e12 * e11).is_zero());
  CHECK(tr.apply(e12) * tr.apply(e11) == Mat::unit(Q, 2, 2, 1, 0));
}

TEST_CASE("check_zpp agrees with the brute-force oracle on GF(2), n=2") {
  FieldDesc f2 = FieldDesc::gf(2);
  std::vector<Mat> all = all_matrices(f2, 2);
  REQUIRE(all.size() == 16);
  Rng rng(43);
  int zpp_count = 0;
  for (int t = 0; t < 60; ++t) {
    int r = 2 + static_cast<int>(rng.below(2));
    LinMap phi = random_linmap(f2, 2, r, rng);
    bool exact = check_zpp(phi).holds;
    CHECK(exact == brute_force_zpp(phi, all));
    zpp_count += exact;
  }
  // a couple of known-positive cases keep the oracle honest
  CHECK(brute_force_zpp(example_band_nilpotent(2, 2, f2), all));
  CHECK(brute_force_zpp(LinMap::identity_map(f2, 2), all));
}

TEST_CASE("check_ring_hom") {
  CHECK(check_ring_hom(LinMap::identity_map(Q, 2)).holds);
  // A |-> 2A fails: Phi(E_11)^2 = 4 E_11 != 2 E_11
  std::vector<Mat> images;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      images.push_back(Mat::unit(Q, 2, 2, i, j).scaled(Scalar::from_int(Q, 2)));
  CHECK(!check_ring_hom(LinMap(Q, 2, 2, images)).holds);
  // A |-> I_2 (x) A is multiplicative
  std::vector<Mat> tensor;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      tensor.push_back(kron(Mat::identity(Q, 2), Mat::unit(Q, 2, 2, i, j)));
  CHECK(check_ring_hom(LinMap(Q, 2, 4, tensor)).holds);
}

TEST_CASE("check_jordan") {
  CHECK(check_jordan(LinMap::transpose_map(Q, 2)).holds);
  CHECK(check_jordan(LinMap::identity_map(Q, 3)).holds);
  Verdict v = check_jordan(example_symmetric_killer(Q));
  CHECK(!v.holds);
  // exhaustive unit-pair scan confirms a violation exists
  LinMap killer = example_symmetric_killer(Q);
  bool found = false;
  for (int i = 0; i < 2 && !found; ++i)
    for (int j = 0; j < 2 && !found; ++j)
      for (int k = 0; k < 2 && !found; ++k)
        for (int l = 0; l < 2 && !found; ++l) {
          Mat a = Mat::unit(Q, 2, 2, i, j), b = Mat::unit(Q, 2, 2, k, l);
          Mat lhs = killer.apply(a * b + b * a);
          Mat rhs = killer.apply(a) * killer.apply(b) +
                    killer.apply(b) * killer.apply(a);
          if (lhs != rhs) found = true;
        }
  CHECK(found);
  CHECK_THROWS_AS(check_jordan(LinMap::identity_map(FieldDesc::gf(2), 2)),
                  InputError);
}

TEST_CASE("check_idempotent_preserver") {
  FieldDesc f3 = FieldDesc::gf(3);
  // A |-> S (A (+) A^t) S^-1 preserves idempotents
  LinMap good = random_jordan_map(2, 4, 1, 1, f3, 99);
  CHECK(check_idempotent_preserver(good).holds);
  CHECK(check_idempotent_preserver(LinMap::zero_map(Q, 2, 3)).holds);

  // the symmetric killer fails, and over GF(3) the enumeration finds an
  // idempotent whose image squares wrong
  Verdict v = check_idempotent_preserver(example_symmetric_killer(f3));
  REQUIRE(!v.holds);
  const auto* iw = std::get_if<IdempotentWitness>(&*v.witness);
  REQUIRE(iw != nullptr);
  CHECK(iw->p * iw->p == iw->p);
  LinMap killer = example_symmetric_killer(f3);
  CHECK(killer.apply(iw->p) == iw->image);
  CHECK(iw->image * iw->image == iw->image_squared);
  CHECK(iw->image_squared != iw->image);

  CHECK_THROWS_AS(
      check_idempotent_preserver(LinMap::identity_map(FieldDesc::gf(2), 2)),
      InputError);
}

TEST_CASE("sampled rank-one idempotents (large-field fallback)") {
  for (const FieldDesc& f : {FieldDesc::gf(101), Q}) {
    std::vector<Mat> idems = sample_rank_one_idempotents(3, f, 40, 7);
    CHECK(idems.size() == 40);
    for (const Mat& p : idems) {
      CHECK(p * p == p);
      CHECK(rank(p) == 1);
    }
  }
  // the fallback feeds the cross-validation over Q, where enumeration is
  // impossible: a non-Jordan map over Q still yields an idempotent witness
  Verdict v = check_idempotent_preserver(example_symmetric_killer(Q));
  REQUIRE(!v.holds);
  CHECK(std::holds_alternative<IdempotentWitness>(*v.witness));
}

TEST_CASE("rank-one idempotent enumeration") {
  FieldDesc f3 = FieldDesc::gf(3);
  std::vector<Mat> idems = enumerate_rank_one_idempotents(2, f3);
  // all enumerated matrices are distinct rank-one idempotents
  std::set<std::string> seen;
  for (const Mat& p : idems) {
    CHECK(p * p == p);
    CHECK(rank(p) == 1);
    seen.insert(serialize(p));
  }
  CHECK(seen.size() == idems.size());
  // oracle: count rank-one idempotents of M_2(GF(3)) by brute force
  std::vector<Mat> all = all_matrices(f3, 2);
  int count = 0;
  for (const Mat& m : all)
    if (m * m == m && rank(m) == 1) ++count;
  CHECK(static_cast<int>(idems.size()) == count);
  CHECK(rank_one_enumeration_feasible(2, f3));
  CHECK(!rank_one_enumeration_feasible(8, FieldDesc::gf(101)));
}

TEST_CASE("check_trivial_mult") {
  CHECK(check_trivial_mult(example_symmetric_killer(Q)).holds);
  CHECK(check_trivial_mult(LinMap::zero_map(Q, 2, 2)).holds);
  CHECK(!check_trivial_mult(LinMap::identity_map(Q, 1)).holds);
  CHECK(!check_trivial_mult(LinMap::identity_map(Q, 3)).holds);
}

TEST_CASE("sample_zero_pair postconditions") {
  Rng rng(47);
  for (const FieldDesc& f : {FieldDesc::gf(2), FieldDesc::gf(7), Q}) {
    for (int t = 0; t < 25; ++t) {
      int n = 2 + static_cast<int>(rng.below(3));
      MatPair single = sample_zero_pair(n, f, rng.next(), false);
      CHECK((single.a * single.b).is_zero());
      MatPair dbl = sample_zero_pair(n, f, rng.next(), true);
      CHECK((dbl.a * dbl.b).is_zero());
      CHECK((dbl.b * dbl.a).is_zero());
    }
  }
}

TEST_CASE("sample_zero_pair support over GF(2), n=2") {
  // The sampler draws rank(A) < n, so its support is exactly the zero
  // product pairs with singular A; pairs (invertible A, 0) are the only
  // ones excluded by design.
  FieldDesc f2 = FieldDesc::gf(2);
  std::vector<Mat> all = all_matrices(f2, 2);
  std::set<std::pair<std::string, std::string>> target;
  int excluded = 0;
  for (const Mat& a : all)
    for (const Mat& b : all) {
      if (!(a * b).is_zero()) continue;
      if (rank(a) < 2)
        target.insert({serialize(a), serialize(b)});
      else
        ++excluded;
    }
  CHECK(excluded == 6);  // |GL_2(GF(2))| pairs with B = 0

  std::set<std::pair<std::string, std::string>> seen;
  Rng rng(53);
  for (int t = 0; t < 10000; ++t) {
    MatPair p = sample_zero_pair(2, f2, rng.next(), false);
    auto key = std::make_pair(serialize(p.a), serialize(p.b));
    CHECK(target.count(key) == 1);
    seen.insert(key);
  }
  CHECK(seen == target);
}

TEST_CASE("fuzz_preserver") {
  CHECK(fuzz_preserver(LinMap::identity_map(Q, 2), PreserverProperty::Dzp,
                       1000, 1)
            .holds);
  // transpose fails ZPP; counterexamples are dense enough to find quickly
  FieldDesc f3 = FieldDesc::gf(3);
  Verdict v = fuzz_preserver(LinMap::transpose_map(f3, 2),
                             PreserverProperty::Zpp, 200, 7);
  REQUIRE(!v.holds);
  const auto* pw = std::get_if<PairWitness>(&*v.witness);
  REQUIRE(pw != nullptr);
  CHECK((pw->a * pw->b).is_zero());
  LinMap tr = LinMap::transpose_map(f3, 2);
  CHECK(tr.apply(pw->a) * tr.apply(pw->b) == pw->product);
  // brute-force confirms counterexamples exist at all
  bool exists = false;
  for (const Mat& a : all_matrices(f3, 2)) {
    for (const Mat& b : all_matrices(f3, 2))
      if ((a * b).is_zero() && !(tr.apply(a) * tr.apply(b)).is_zero()) {
        exists = true;
        break;
      }
    if (exists) break;
  }
  CHECK(exists);

  // A |-> A (+) A^t preserves double zero products
  LinMap both = LinMap::identity_map(Q, 2).direct_sum(LinMap::transpose_map(Q, 2));
  CHECK(fuzz_preserver(both, PreserverProperty::Dzp, 1000, 3).holds);
  CHECK(!fuzz_preserver(both, PreserverProperty::Zpp, 1000, 3).holds);
}

TEST_CASE("check_power_products") {
  LinMap band = example_band_nilpotent(2, 3, Q);
  CHECK(check_power_products(band, 3, 20, 5).holds);
  LinMap killer = example_symmetric_killer(Q);
  CHECK(check_power_products(killer, 1, 20, 5).holds);
  // identity map: Phi(I)^0 = I != 0, precondition rejected
  CHECK_THROWS_AS(check_power_products(LinMap::identity_map(Q, 2), 0, 5, 5),
                  InputError);
  // nu too small
  CHECK_THROWS_AS(check_power_products(band, 2, 5, 5), InputError);
  // non-ZPP input rejected
  CHECK_THROWS_AS(check_power_products(LinMap::transpose_map(Q, 2), 1, 5, 5),
                  InputError);
}

TEST_CASE("implication chain: ring hom => jordan => idempotent preserver") {
  Rng rng(59);
  for (const FieldDesc& f : {FieldDesc::gf(7), Q}) {
    for (int t = 0; t < 10; ++t) {
      int k1 = static_cast<int>(rng.below(3));
      int k2 = static_cast<int>(rng.below(2));
      if (k1 + k2 == 0) k1 = 1;
      int n = 2 + static_cast<int>(rng.below(2));
      int r = n * (k1 + k2) + static_cast<int>(rng.below(3));
      LinMap theta = random_jordan_map(n, r, k1, k2, f, rng.next());
      Verdict hom = check_ring_hom(theta);
      Verdict jordan = check_jordan(theta);
      Verdict idem = check_idempotent_preserver(theta);
      if (hom.holds) CHECK(jordan.holds);
      if (jordan.holds) CHECK(idem.holds);
      CHECK(jordan.holds);  // generator always yields Jordan maps
      CHECK(hom.holds == (k2 == 0));
    }
  }
}

TEST_CASE("zpp + jordan => ring hom on random Jordan fixtures") {
  Rng rng(61);
  for (int t = 0; t < 10; ++t) {
    int k1 = static_cast<int>(rng.below(2));
    int k2 = static_cast<int>(rng.below(2));
    if (k1 + k2 == 0) k2 = 1;
    LinMap theta = random_jordan_map(2, 2 * (k1 + k2) + 1, k1, k2,
                                     FieldDesc::gf(5), rng.next());
    bool zpp = check_zpp(theta).holds;
    bool jordan = check_jordan(theta).holds;
    bool hom = check_ring_hom(theta).holds;
    if (zpp && jordan) CHECK(hom);
  }
}

TEST_CASE("false verdicts re-verify") {
  // every failing check's witness must re-evaluate to a genuine violation
  FieldDesc f5 = FieldDesc::gf(5);
  Rng rng(67);
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    LinMap phi = random_linmap(f5, 2, 3, rng);
    Verdict v = check_zpp(phi);
    if (v.holds) continue;
    ++checked;
    if (const auto* uw = std::get_if<UnitsWitness>(&*v.witness)) {
      Mat lhs = phi.image(uw->i, uw->j) * phi.image(uw->k, uw->l);
      Mat rhs = phi.identity_image() *
                phi.apply(Mat::unit(f5, 2, 2, uw->i, uw->j) *
                          Mat::unit(f5, 2, 2, uw->k, uw->l));
      CHECK(lhs == uw->lhs);
      CHECK(rhs == uw->rhs);
      CHECK(lhs != rhs);
    } else {
      const auto* pw = std::get_if<PairWitness>(&*v.witness);
      REQUIRE(pw != nullptr);
      CHECK((pw->a * pw->b).is_zero());
      CHECK(phi.apply(pw->a) * phi.apply(pw->b) == pw->product);
      CHECK(!pw->product.is_zero());
    }
  }
  CHECK(checked > 10);  // random maps are rarely ZPP
}
