#pragma once

#include <cstdint>

#include "zpp/errors.hpp"
#include "zpp/mat.hpp"

namespace zpp {

/// Deterministic splitmix64 stream.  All randomized operations take explicit
/// seeds and derive their draws from this generator only, so identical
/// (input, seed) pairs give identical results on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t m) {
    if (m == 0) throw InternalError("Rng::below(0)");
    return next() % m;
  }

  /// Independent child stream; distinct tags give distinct streams.
  Rng fork(std::uint64_t tag) {
    Rng child(state_ ^ (0xd1342543de82ef95ull * (tag + 1)));
    child.next();
    return child;
  }

 private:
  std::uint64_t state_;
};

/// Uniform residue over GF(p); small integer in [-4, 4] over Q.
Scalar random_scalar(const FieldDesc& f, Rng& rng);
Mat random_mat(const FieldDesc& f, int rows, int cols, Rng& rng);
/// Rejection sampling on the determinant.
Mat random_invertible(const FieldDesc& f, int n, Rng& rng);
/// V (I_m (+) 0) V^-1 for random invertible V and random rank m in [0, n].
Mat random_idempotent(const FieldDesc& f, int n, Rng& rng);

}  // namespace zpp
