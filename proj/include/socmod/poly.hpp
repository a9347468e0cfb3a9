#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "socmod/field.hpp"
#include "socmod/monomial.hpp"

namespace socmod {

// Coefficient field and variable names of S = k[x_1..x_d].
class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> vars);

  const Field& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  // Index of a variable name, or -1.
  int var_index(std::string_view name) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.vars_ == b.vars_;
  }

 private:
  Field field_;
  std::vector<std::string> vars_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

struct Term {
  Monomial mono;
  Scalar coeff;
};

// Sparse polynomial; terms sorted grevlex-descending, no zero coefficients.
// A default-constructed Poly is the zero polynomial of no particular ring and
// combines with polynomials of any ring.
class Poly {
 public:
  Poly() = default;
  explicit Poly(PolyRingPtr ring) : ring_(std::move(ring)) {}
  // Canonicalizes: sorts, merges equal monomials, drops zeros.
  Poly(PolyRingPtr ring, std::vector<Term> terms);

  static Poly constant(PolyRingPtr ring, const Scalar& c);
  static Poly variable(PolyRingPtr ring, std::size_t index);
  static Poly monomial(PolyRingPtr ring, Monomial m, const Scalar& c);
  // Terms must already be sorted grevlex-descending with reduced nonzero
  // coefficients; no checks are made.
  static Poly from_canonical(PolyRingPtr ring, std::vector<Term> terms);

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  // Coefficient of the monomial 1; nonzero exactly when the element is a unit
  // of the local ring.
  Scalar constant_term() const;
  bool in_max_ideal() const { return constant_term() == 0; }
  int degree() const;         // -1 for zero
  int min_degree() const;     // -1 for zero
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Scalar coefficient(const Monomial& m) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly scaled(const Scalar& c) const;
  Poly times_monomial(const Monomial& m, const Scalar& c) const;
  // Monic rescaling; zero stays zero.
  Poly monic() const;

  friend bool operator==(const Poly& a, const Poly& b);

  std::string to_string() const;

 private:
  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

// Throws StructuralError unless both polynomials live in the same ring.
const PolyRingPtr& common_ring(const Poly& a, const Poly& b);

// Parses expressions such as "z^2 - x*y", "3/2*x^2*y + 1". Variables must be
// ring variables; throws StructuralError on malformed input.
Poly parse_poly(const PolyRingPtr& ring, std::string_view text);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars);

}  // namespace socmod
