#include "zpp/field.hpp"

namespace zpp {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  // residues are < 2^31, so the product fits in 64 bits
  return (a * b) % p;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) acc = mul_mod(acc, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return acc;
}

// modular inverse via extended Euclid; v must be nonzero mod p
std::uint64_t inv_mod(std::uint64_t v, std::uint64_t p) {
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(p), new_r = static_cast<long long>(v);
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw InternalError("inv_mod: value not invertible");
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  // deterministic Miller-Rabin witness set for n < 3.3e24
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldDesc FieldDesc::gf(std::uint64_t p) {
  if (p >= (1ull << 31)) throw InputError("GF(p): p must fit in 31 bits");
  if (!is_prime_u64(p)) throw InputError("GF(p): p is not prime");
  return FieldDesc(FieldKind::PrimeField, p);
}

FieldDesc FieldDesc::rationals() { return FieldDesc(FieldKind::Rationals, 0); }

std::string FieldDesc::to_string() const {
  return kind_ == FieldKind::PrimeField ? "GF(" + std::to_string(p_) + ")"
                                        : "Q";
}

Scalar Scalar::zero(const FieldDesc& f) {
  Scalar s(f);
  if (f.kind() == FieldKind::Rationals) s.q_ = mpq_class(0);
  return s;
}

Scalar Scalar::one(const FieldDesc& f) {
  Scalar s(f);
  if (f.kind() == FieldKind::Rationals) {
    s.q_ = mpq_class(1);
  } else {
    s.r_ = 1 % f.modulus();
  }
  return s;
}

Scalar Scalar::from_int(const FieldDesc& f, long long v) {
  Scalar s(f);
  if (f.kind() == FieldKind::Rationals) {
    s.q_ = mpq_class(static_cast<long>(v));
  } else {
    long long m = static_cast<long long>(f.modulus());
    long long r = v % m;
    if (r < 0) r += m;
    s.r_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::gf_residue(const FieldDesc& f, std::uint64_t v) {
  if (f.kind() != FieldKind::PrimeField)
    throw InputError("gf_residue: field is not GF(p)");
  if (v >= f.modulus()) throw InputError("gf_residue: value out of range");
  Scalar s(f);
  s.r_ = v;
  return s;
}

Scalar Scalar::rational(mpq_class v) {
  Scalar s(FieldDesc::rationals());
  v.canonicalize();
  s.q_ = std::move(v);
  return s;
}

bool Scalar::is_zero() const {
  return field_.kind() == FieldKind::PrimeField ? r_ == 0 : *q_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind() == FieldKind::PrimeField ? r_ == 1 % field_.modulus()
                                                : *q_ == 1;
}

void Scalar::check_same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) throw InputError("scalar field mismatch");
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::check_same_field(a, b);
  Scalar s(a.field_);
  if (a.field_.kind() == FieldKind::PrimeField) {
    s.r_ = (a.r_ + b.r_) % a.field_.modulus();
  } else {
    s.q_ = *a.q_ + *b.q_;
  }
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar::check_same_field(a, b);
  Scalar s(a.field_);
  if (a.field_.kind() == FieldKind::PrimeField) {
    std::uint64_t p = a.field_.modulus();
    s.r_ = (a.r_ + p - b.r_) % p;
  } else {
    s.q_ = *a.q_ - *b.q_;
  }
  return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::check_same_field(a, b);
  Scalar s(a.field_);
  if (a.field_.kind() == FieldKind::PrimeField) {
    s.r_ = mul_mod(a.r_, b.r_, a.field_.modulus());
  } else {
    s.q_ = *a.q_ * *b.q_;
  }
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  Scalar::check_same_field(a, b);
  return a * b.inverse();
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.kind() == FieldKind::PrimeField) {
    s.r_ = r_ == 0 ? 0 : field_.modulus() - r_;
  } else {
    s.q_ = -*q_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  Scalar s(field_);
  if (field_.kind() == FieldKind::PrimeField) {
    s.r_ = inv_mod(r_, field_.modulus());
  } else {
    s.q_ = 1 / *q_;
  }
  return s;
}

bool Scalar::operator==(const Scalar& rhs) const {
  if (!(field_ == rhs.field_)) return false;
  return field_.kind() == FieldKind::PrimeField ? r_ == rhs.r_
                                                : *q_ == *rhs.q_;
}

std::uint64_t Scalar::gf_value() const {
  if (field_.kind() != FieldKind::PrimeField)
    throw InternalError("gf_value on rational scalar");
  return r_;
}

const mpq_class& Scalar::rational_value() const {
  if (field_.kind() != FieldKind::Rationals)
    throw InternalError("rational_value on GF(p) scalar");
  return *q_;
}

std::string Scalar::to_string() const {
  if (field_.kind() == FieldKind::PrimeField) return std::to_string(r_);
  return q_->get_str();
}

}  // namespace zpp
