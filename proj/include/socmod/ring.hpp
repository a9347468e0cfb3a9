#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "socmod/poly.hpp"

namespace socmod {

// A local ring A = (k[x_1..x_d]/J) localized at m = (x_1..x_d).
//
// Relations are kept as given and appended to every Groebner computation.
// Every relation must lie in m. `cm` records the user's assertion that a
// presentation with J != 0 is Cohen-Macaulay; it is never verified.
class LocalRing {
 public:
  LocalRing(Field field, std::vector<std::string> vars, std::vector<std::string> relations = {},
            bool cm = false);
  LocalRing(PolyRingPtr base, std::vector<Poly> relations, bool cm = false);

  const PolyRingPtr& poly_ring() const { return base_; }
  const Field& field() const { return base_->field(); }
  std::size_t nvars() const { return base_->nvars(); }
  const std::vector<Poly>& relations() const { return relations_; }

  // J = 0: a regular local ring. Decided syntactically.
  bool is_regular_presentation() const { return relations_.empty(); }
  bool cohen_macaulay() const { return relations_.empty() || cm_; }
  bool cm_declared() const { return cm_; }

  Poly zero() const { return Poly(base_); }
  Poly one() const { return Poly::constant(base_, 1); }
  Poly var(std::size_t i) const { return Poly::variable(base_, i); }
  Poly parse(std::string_view text) const { return parse_poly(base_, text); }
  Poly constant(long c) const { return Poly::constant(base_, field().from(c)); }

  std::string to_string() const;

 private:
  void validate();

  PolyRingPtr base_;
  std::vector<Poly> relations_;
  bool cm_ = false;
};

using Ring = std::shared_ptr<const LocalRing>;

Ring make_ring(Field field, std::vector<std::string> vars, std::vector<std::string> relations = {},
               bool cm = false);

// Identifies the free module an element lives in: F = A^r (sym_degree 1) or
// Sym^s(F), whose basis is the degree-s monomials in t_1..t_r listed
// grevlex-descending.
struct Ambient {
  int rank_f = 1;
  int sym_degree = 1;

  int rank() const;
  friend bool operator==(const Ambient&, const Ambient&) = default;
};

// Basis of Sym^s(A^r) as exponent vectors in t_1..t_r, grevlex-descending.
const std::vector<Monomial>& sym_basis(int r, int s);
int sym_index(int r, const Monomial& t_monomial);
long binomial(long n, long k);

// Element of a free module over A, stored by components.
class FreeElement {
 public:
  FreeElement() = default;
  FreeElement(Ambient ambient, std::vector<Poly> components);
  static FreeElement zero(const Ring& ring, Ambient ambient);
  static FreeElement basis_vector(const Ring& ring, Ambient ambient, int index);
  static FreeElement from_poly(Poly p) { return FreeElement({1, 1}, {std::move(p)}); }

  const Ambient& ambient() const { return ambient_; }
  int rank() const { return static_cast<int>(components_.size()); }
  const std::vector<Poly>& components() const { return components_; }
  const Poly& operator[](std::size_t i) const { return components_[i]; }
  Poly& operator[](std::size_t i) { return components_[i]; }

  bool is_zero() const;
  // True when every component lies in m.
  bool in_max_ideal_times_ambient() const;
  bool is_homogeneous() const;  // all nonzero components homogeneous of one degree
  int degree() const;           // max component degree, -1 for zero

  FreeElement operator-() const;
  friend FreeElement operator+(const FreeElement& a, const FreeElement& b);
  friend FreeElement operator-(const FreeElement& a, const FreeElement& b);
  FreeElement scaled(const Poly& c) const;
  friend bool operator==(const FreeElement& a, const FreeElement& b);

  std::string to_string() const;

 private:
  Ambient ambient_;
  std::vector<Poly> components_;
};

// Product in Sym(F): Sym^a x Sym^b -> Sym^{a+b}.
FreeElement sym_product(const FreeElement& u, const FreeElement& v);

}  // namespace socmod
