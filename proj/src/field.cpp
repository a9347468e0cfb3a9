#include "socmod/field.hpp"

#include "socmod/errors.hpp"

namespace socmod {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw DomainError("GF(" + std::to_string(p) + "): characteristic must be a prime below 2^31");
  }
  return Field(p);
}

std::string Field::name() const {
  return p_ == 0 ? std::string("QQ") : "GF(" + std::to_string(p_) + ")";
}

Scalar Field::reduce(mpz_class v) const {
  mpz_class m(static_cast<unsigned long>(p_));
  v %= m;
  if (v < 0) v += m;
  return Scalar(v);
}

Scalar Field::from(const mpq_class& q) const {
  if (p_ == 0) {
    Scalar c = q;
    c.canonicalize();
    return c;
  }
  mpz_class m(static_cast<unsigned long>(p_));
  mpz_class den = q.get_den() % m;
  if (den == 0) {
    throw DomainError("denominator " + q.get_den().get_str() + " vanishes in " + name());
  }
  mpz_class den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  return reduce(q.get_num() * den_inv);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a + b;
  return reduce(a.get_num() + b.get_num());
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a - b;
  return reduce(a.get_num() - b.get_num());
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a * b;
  return reduce(a.get_num() * b.get_num());
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  return reduce(-a.get_num());
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw DomainError("division by zero in " + name());
  if (p_ == 0) return 1 / a;
  mpz_class m(static_cast<unsigned long>(p_));
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), m.get_mpz_t());
  return Scalar(r);
}

}  // namespace socmod
