#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "zpp/errors.hpp"

namespace zpp {

enum class FieldKind { PrimeField, Rationals };

/// Descriptor of a supported coefficient field: GF(p) for a prime p, or Q.
class FieldDesc {
 public:
  /// GF(p).  Runs a deterministic Miller-Rabin primality check; p must be
  /// prime and fit in 31 bits so products of residues fit in uint64.
  static FieldDesc gf(std::uint64_t p);
  static FieldDesc rationals();

  FieldKind kind() const { return kind_; }
  std::uint64_t modulus() const { return p_; }
  /// p for GF(p), 0 for Q.
  std::uint64_t characteristic() const {
    return kind_ == FieldKind::PrimeField ? p_ : 0;
  }
  bool operator==(const FieldDesc&) const = default;
  std::string to_string() const;

 private:
  FieldDesc(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  FieldKind kind_;
  std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n);

/// Exact field element: a canonical residue in [0, p) over GF(p), or a
/// reduced fraction over Q (GMP keeps num/den coprime with den > 0).
class Scalar {
 public:
  Scalar() = delete;

  static Scalar zero(const FieldDesc& f);
  static Scalar one(const FieldDesc& f);
  static Scalar from_int(const FieldDesc& f, long long v);
  /// GF(p) element from a residue; requires v < p.
  static Scalar gf_residue(const FieldDesc& f, std::uint64_t v);
  static Scalar rational(mpq_class v);

  const FieldDesc& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  /// Exact division; throws InputError on a zero divisor.
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar inverse() const;
  bool operator==(const Scalar& rhs) const;
  bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

  std::uint64_t gf_value() const;
  const mpq_class& rational_value() const;
  std::string to_string() const;

 private:
  explicit Scalar(const FieldDesc& f) : field_(f) {}
  static void check_same_field(const Scalar& a, const Scalar& b);

  FieldDesc field_;
  std::uint64_t r_ = 0;            // GF(p) residue
  std::optional<mpq_class> q_;     // engaged iff field is Q
};

}  // namespace zpp
