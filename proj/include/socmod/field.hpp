#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace socmod {

// Field elements are stored as GMP rationals for both supported fields.
// Over GF(p) the stored value is always an integer in [0, p).
using Scalar = mpq_class;

inline constexpr std::uint32_t kDefaultPrime = 32003;

class Field {
 public:
  static Field rationals() { return Field(0); }
  // Throws DomainError unless p is a prime below 2^31.
  static Field prime(std::uint32_t p = kDefaultPrime);

  std::uint32_t characteristic() const { return p_; }
  bool is_rationals() const { return p_ == 0; }
  std::string name() const;

  // Maps an arbitrary rational into the field; a denominator divisible by p
  // throws DomainError.
  Scalar from(const mpq_class& q) const;
  Scalar from(long v) const { return from(mpq_class(v)); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  Scalar reduce(mpz_class v) const;

  std::uint32_t p_ = 0;
};

}  // namespace socmod
